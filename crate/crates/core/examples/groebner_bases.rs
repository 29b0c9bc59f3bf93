//! Gröbner bases in grevlex and lex, colons, intersections and elimination.

use fcalc::prelude::*;

fn main() -> Result<()> {
    let r = Ring::new(7, &["x", "y", "z"], MonomialOrder::GrevLex)?;
    let p = |s: &str| parse_poly(&r, s);
    let i = Ideal::new(&r, vec![p("x^2 + y*z - 1")?, p("y^2 - x*z")?, p("z^3 + x + 2")?])?;
    println!("grevlex basis:");
    for g in i.groebner()? {
        println!("  {g}");
    }

    let lex = r.with_order(MonomialOrder::Lex)?;
    println!("lex basis:");
    for g in i.reorder(&lex)?.groebner()? {
        println!("  {g}");
    }

    let a = Ideal::new(&r, vec![p("x*y")?, p("z^2")?])?;
    let b = Ideal::new(&r, vec![p("x")?, p("z")?])?;
    println!("(xy, z^2) : (x, z) = {}", a.colon(&b)?.canonical_string()?);
    println!("(xy, z^2) ∩ (x, z) = {}", a.intersect(&b)?.canonical_string()?);
    println!("eliminate z: {}", i.eliminate(&[2])?.canonical_string()?);
    Ok(())
}
