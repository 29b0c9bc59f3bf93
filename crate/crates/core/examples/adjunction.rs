//! Restriction of the map with divisor div(z) + div(x^3 + y^3) to the
//! plane z = 0, and the test ideal of the pair computed away from it.

use fcalc::adjunction::{center_bijection_check, purity_transfer_check, restriction_theorem_check};
use fcalc::oracles::variable_subset_family;
use fcalc::prelude::*;

fn main() -> Result<()> {
    let r = Ring::new(2, &["x", "y", "z"], MonomialOrder::GrevLex)?;
    let datum = MapDatum::on_ambient(parse_poly(&r, "z*(x^3 + y^3)")?, 1)?;
    let q = Ideal::principal(&parse_poly(&r, "z")?);
    let m = Ideal::maximal_at_origin(&r);

    let restricted = restrict(&datum, &q)?;
    println!("restricted: {restricted}");
    println!("purity transfers at the origin: {}", purity_transfer_check(&datum, &q, &m)?);

    let bij = center_bijection_check(&datum, &q, &variable_subset_family(&r))?;
    println!(
        "centers through Q: {} checked, compatible {:?}, violations {:?}",
        bij.checked, bij.compatible, bij.violations
    );

    let spec = TripleSpec::new(datum, Poly::one(&r), Rational::new(1, 1))?;
    let opts = TauOptions::default();
    let outside = tau_outside(&spec, &q, None, &opts)?;
    println!("test ideal away from Q: {}", outside.ideal.canonical_string()?);
    let check = restriction_theorem_check(&spec, &q, None, &opts)?;
    println!(
        "plus Q: {}, restricted: {}, equal: {}",
        check.outside_plus_q.canonical_string()?,
        check.restricted.canonical_string()?,
        check.holds
    );
    Ok(())
}
