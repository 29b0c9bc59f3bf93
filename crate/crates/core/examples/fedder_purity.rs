//! Fedder's criterion for the Fermat cubic x^3 + y^3 + z^3 across primes,
//! checked against the top multinomial coefficient of h^(p-1).

use fcalc::oracles::multinomial_fpure_check;
use fcalc::prelude::*;

fn main() -> Result<()> {
    for p in [2, 3, 5, 7, 11, 13] {
        let r = Ring::new(p, &["x", "y", "z"], MonomialOrder::GrevLex)?;
        let h = parse_poly(&r, "x^3 + y^3 + z^3")?;
        let i = Ideal::principal(&h);
        let fedder = is_fpure(&i, 1, None)?;
        let multinomial = multinomial_fpure_check(&h)?;
        println!("p = {p:>2}: F-pure {fedder} (multinomial {multinomial})");
    }

    let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex)?;
    let cusp = Ideal::principal(&parse_poly(&r, "y^2 + x^3")?);
    println!("cusp colon at p = 2: {}", fedder_colon(&cusp, 1)?.canonical_string()?);
    println!("cusp generator: {}", extract_generator(&cusp, 1)?);
    println!("cusp F-pure: {}", is_fpure(&cusp, 1, None)?);
    Ok(())
}
