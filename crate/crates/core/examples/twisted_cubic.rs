//! Fedder colons on the cone over the twisted cubic over F_2: the colon is
//! not principal modulo I^[2] but becomes principal at level 2, and the
//! level-4 colon is generated by the composite multiplier.

use fcalc::frobenius::bracket_power;
use fcalc::maps::{extract_generator, fedder_colon};
use fcalc::oracles::colon_agrees;
use fcalc::prelude::*;

fn main() -> Result<()> {
    let ring = Ring::new(2, &["a", "b", "c", "d"], MonomialOrder::GrevLex)?;
    let gens = ["a*c + b^2", "a*d + b*c", "b*d + c^2"]
        .iter()
        .map(|s| parse_poly(&ring, s))
        .collect::<Result<Vec<_>>>()?;
    let i = Ideal::new(&ring, gens)?;
    println!("I = {}", i.canonical_string()?);

    match extract_generator(&i, 1) {
        Err(e) => println!("level 1: {e}"),
        Ok(g) => println!("level 1 generator: {g}"),
    }
    let f2 = extract_generator(&i, 2)?;
    println!("level 2 generator f2 = {f2} (degree {:?})", f2.total_degree());

    let start = std::time::Instant::now();
    let colon4 = fedder_colon(&i, 4)?;
    let b16 = bracket_power(&i, 16)?;
    let composite = b16.add_poly(&f2.checked_pow(5)?)?;
    println!(
        "(I^[16] : I) = I^[16] + (f2^5): {} ({:.2?})",
        colon4.equals(&composite)?,
        start.elapsed()
    );

    let bound = f2.checked_pow(5)?.total_degree().unwrap_or(0) + 2;
    let start = std::time::Instant::now();
    let agrees = colon_agrees(&b16, &i, &colon4, bound)?;
    println!(
        "linear algebra up to degree {bound} agrees: {agrees} ({:.2?})",
        start.elapsed()
    );
    Ok(())
}
