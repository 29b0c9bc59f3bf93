//! Centers of the map with divisor the four planes xyz(x + y + z + 1) at
//! level 2 over F_2, found recursively and by brute force.

use fcalc::oracles::{candidate_center_bruteforce, variable_subset_family};
use fcalc::prelude::*;

fn main() -> Result<()> {
    let r = Ring::new(2, &["x", "y", "z"], MonomialOrder::GrevLex)?;
    let h = parse_poly(&r, "x*y*z*(x + y + z + 1)")?;
    let datum = MapDatum::on_ambient(h.checked_pow(3)?, 2)?;

    let start = std::time::Instant::now();
    let centers = enumerate_centers(&datum, &CenterMode::Auto { attested: vec![] })?;
    println!("{} centers ({:.2?}):", centers.len(), start.elapsed());
    for c in &centers {
        println!("  {}", c.prime.canonical_string()?);
    }

    let cross = MapDatum::on_ambient(parse_poly(&r, "x*y")?, 1)?;
    let family = variable_subset_family(&r);
    let brute = candidate_center_bruteforce(&cross, &family, &[])?;
    let listed = enumerate_centers(&cross, &CenterMode::Candidates(family))?;
    println!("xy: brute force finds {} compatible primes", brute.len());
    for c in listed.iter().filter(|c| c.is_center()) {
        println!("  center {}", c.prime.canonical_string()?);
    }
    Ok(())
}
