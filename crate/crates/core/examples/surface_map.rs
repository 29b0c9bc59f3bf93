//! The map T(f ·) on the surface ac^2 + b^2 = 0 over F_2, its values on
//! monomials, and the same map seen on the normalization F_2[x, y]
//! through a -> x^2, b -> xy, c -> y, where it becomes T(y ·).

use fcalc::prelude::*;

fn main() -> Result<()> {
    let s = Ring::new(2, &["a", "b", "c"], MonomialOrder::GrevLex)?;
    let f = parse_poly(&s, "a*c^2 + b^2")?;
    let i = Ideal::principal(&f);
    let phi = MapDatum::new(i.clone(), 1, f)?;
    println!("phi = {phi}");

    let monomials = ["1", "a", "b", "c", "a*b", "a*c", "b*c", "a*b*c"];
    for m in monomials {
        println!("  phi({m}) = {}", phi.apply(&parse_poly(&s, m)?)?);
    }
    println!("compatible with I: {}", phi.is_compatible(&i)?);
    println!("image: {}", phi.image_ideal()?.canonical_string()?);
    let m = Ideal::maximal_at_origin(&s);
    println!("surjective at (a, b, c): {}", phi.is_surjective_at(&m)?);

    let n = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex)?;
    let sigma = ["x^2", "x*y", "y"]
        .iter()
        .map(|g| parse_poly(&n, g))
        .collect::<Result<Vec<_>>>()?;
    let phi_n = MapDatum::on_ambient(parse_poly(&n, "y")?, 1)?;
    let mut agree = true;
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                let g = parse_poly(&s, &format!("a^{a}*b^{b}*c^{c}"))?;
                let upstairs = phi_n.apply(&g.substitute(&n, &sigma)?)?;
                let downstairs = phi.apply(&g)?.substitute(&n, &sigma)?;
                agree &= upstairs == downstairs;
            }
        }
    }
    println!("T(y · sigma(g)) = sigma(phi(g)) on 64 monomials: {agree}");
    Ok(())
}
