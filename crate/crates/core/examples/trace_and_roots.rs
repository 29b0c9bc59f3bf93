//! Frobenius powers, Frobenius roots and the trace on F_3[x, y, z].

use fcalc::frobenius::{bracket_power, frobenius_root, trace_eval};
use fcalc::prelude::*;

fn main() -> Result<()> {
    let r = Ring::new(3, &["x", "y", "z"], MonomialOrder::GrevLex)?;
    let p = |s: &str| parse_poly(&r, s);

    for m in ["x^2*y^2*z^2", "x^8*y^5*z^2", "x^3*y^2", "x^2*y^2*z^2 + x*y^2*z^2"] {
        let f = p(m)?;
        println!("T_1({m}) = {}", trace_eval(&f, 1)?);
        println!("T_2({m}) = {}", trace_eval(&f, 2)?);
    }

    let i = Ideal::new(&r, vec![p("x + y*z")?, p("z^2")?])?;
    let i3 = bracket_power(&i, 3)?;
    println!("I = {}", i.canonical_string()?);
    println!("I^[3] = {}", i3.canonical_string()?);
    println!("(I^[3])^[1/3] = {}", frobenius_root(&i3, 3)?.canonical_string()?);

    let j = Ideal::new(&r, vec![p("x^4*y + z^7")?, p("x^2*y^3*z^5")?])?;
    println!("J = {}", j.canonical_string()?);
    println!("J^[1/3] = {}", frobenius_root(&j, 3)?.canonical_string()?);
    println!("J^[1/9] = {}", frobenius_root(&j, 9)?.canonical_string()?);
    Ok(())
}
