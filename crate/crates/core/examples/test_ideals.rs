//! Test ideals by stabilizing iteration, compared with the partial sums
//! of the defining series and the monomial formula.

use fcalc::oracles::{monomial_tau_formula, tau_by_direct_sum};
use fcalc::prelude::*;

fn main() -> Result<()> {
    let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex)?;
    let p = |s: &str| parse_poly(&r, s);
    let opts = TauOptions::default();

    let cross = MapDatum::on_ambient(p("x*y")?, 1)?;
    let tau = tau_smallest(&cross, &p("x*y")?)?;
    println!("smallest stable ideal containing xy: {}", tau.ideal.canonical_string()?);

    let one = MapDatum::on_ambient(p("1")?, 1)?;
    for (g, t) in [("x^2*y^3", (2, 3)), ("x^2 + y^3", (1, 1)), ("x^2 + y^3", (1, 3))] {
        let g = p(g)?;
        let t = Rational::new(t.0, t.1);
        let spec = TripleSpec::new(one.clone(), g.clone(), t)?;
        let res = tau_triple(&spec, None, &opts)?;
        let sum = tau_by_direct_sum(&one, &res.seeds, &g, &t, res.iterations + 3)?;
        println!(
            "tau(({g})^{t}) = {} at level {} after {} steps; series {} ({:?})",
            res.ideal.canonical_string()?,
            res.levels_used,
            res.iterations,
            sum.ideal.canonical_string()?,
            res.minimality_certificate,
        );
        if g.is_monomial() {
            println!("  monomial formula: {}", monomial_tau_formula(&g, &t)?.canonical_string()?);
        }
    }
    Ok(())
}
