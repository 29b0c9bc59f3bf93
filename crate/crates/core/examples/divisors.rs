//! Divisors of maps on F_2[x, y, z] and back.

use fcalc::maps::{divisor_of_map, map_of_divisor, DivisorData};
use fcalc::prelude::*;

fn main() -> Result<()> {
    let r = Ring::new(2, &["x", "y", "z"], MonomialOrder::GrevLex)?;
    for (f, e) in [("z*(x^3 + y^3)", 1), ("x*y*z", 1), ("x^3*y^2", 2)] {
        let datum = MapDatum::on_ambient(parse_poly(&r, f)?, e)?;
        let div = divisor_of_map(&datum, &[])?;
        let back = map_of_divisor(&div, &r)?;
        println!("{f} at level {e}: {div}");
        println!("  back to {}", back.multiplier());
    }

    let half = Rational::new(1, 3);
    let div = DivisorData::new(2, vec![(parse_poly(&r, "x + y")?, half)])?;
    println!("{div} is the map {}", map_of_divisor(&div, &r)?);
    Ok(())
}
