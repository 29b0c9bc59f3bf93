//! The dictionary between multipliers on the polynomial ring and
//! effective Q-divisors `Δ = (1/(q − 1))·div(f)`.

use std::fmt;

use crate::algebra::{prime_power, Poly, RingRef};
use crate::error::{Error, Result};
use crate::groebner::{factor_restricted, Ideal};

use super::datum::MapDatum;
use super::rational::Rational;

/// A formal combination `Σ c_i·div(h_i)` at level `e`, with irreducible
/// (or attested) pairwise coprime `h_i` and coefficients whose
/// denominators divide `p^e − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorData {
    e: u32,
    components: Vec<(Poly, Rational)>,
}

impl DivisorData {
    /// Validates denominators and pairwise coprimality.
    pub fn new(e: u32, components: Vec<(Poly, Rational)>) -> Result<DivisorData> {
        let Some(first) = components.first() else {
            return Ok(DivisorData { e, components });
        };
        let ring = first.0.ring().clone();
        let q = prime_power(ring.p(), e)?;
        for (h, c) in &components {
            if h.ring() != &ring {
                return Err(Error::RingMismatch);
            }
            if h.is_constant() {
                return Err(Error::InvalidArgument(format!("{h} is not a prime divisor")));
            }
            if (q - 1) % *c.denom() != 0 {
                return Err(Error::IncompatibleExponentDenominator {
                    den: *c.denom(),
                    emax: e,
                });
            }
        }
        for (i, (a, _)) in components.iter().enumerate() {
            for (b, _) in &components[i + 1..] {
                // (a) : (b) = (a / gcd(a, b)), so coprime iff it stays (a)
                let ai = Ideal::principal(a);
                if !ai.colon_poly(b)?.equals(&ai)? {
                    return Err(Error::InvalidArgument(format!(
                        "components {a} and {b} are not coprime"
                    )));
                }
            }
        }
        let components = components
            .into_iter()
            .filter(|(_, c)| *c.numer() != 0)
            .map(|(h, c)| (h.monic(), c))
            .collect();
        Ok(DivisorData { e, components })
    }

    pub fn level(&self) -> u32 {
        self.e
    }

    pub fn components(&self) -> &[(Poly, Rational)] {
        &self.components
    }
}

impl fmt::Display for DivisorData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(h, c)| format!("{c}*div({h})"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `Δ_φ` for a map on the polynomial ring: `f = u·Π h_i^{a_i}` gives
/// components `(h_i, a_i/(p^e − 1))`.
pub fn divisor_of_map(datum: &MapDatum, attested: &[Poly]) -> Result<DivisorData> {
    if !datum.modulus().is_zero_ideal() {
        return Err(Error::InvalidArgument(
            "divisors are only extracted on the polynomial ring (modulus 0)".into(),
        ));
    }
    let fac = factor_restricted(datum.multiplier(), attested)?;
    let q = datum.q();
    let components = fac
        .factors
        .into_iter()
        .map(|(h, a)| (h, Rational::new(a as u64, q - 1)))
        .collect();
    DivisorData::new(datum.level(), components)
}

/// The map at the divisor's level with multiplier `Π h_i^{(p^e − 1)·c_i}`.
pub fn map_of_divisor(div: &DivisorData, ring: &RingRef) -> Result<MapDatum> {
    let q = prime_power(ring.p(), div.e)?;
    let mut f = Poly::one(ring);
    for (h, c) in &div.components {
        if h.ring() != ring {
            return Err(Error::RingMismatch);
        }
        let scaled = *c * Rational::from_integer(q - 1);
        if !scaled.is_integer() {
            return Err(Error::IncompatibleExponentDenominator {
                den: *c.denom(),
                emax: div.e,
            });
        }
        f = f.checked_mul(&h.checked_pow(scaled.to_integer())?)?;
    }
    MapDatum::on_ambient(f.monic(), div.e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, MonomialOrder, Ring};

    fn comps(d: &DivisorData) -> Vec<(String, String)> {
        d.components()
            .iter()
            .map(|(h, c)| (h.to_string(), c.to_string()))
            .collect()
    }

    #[test]
    fn round_trips() {
        let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let cases = [
            ("x*y", 1, vec![("x", "1"), ("y", "1")]),
            ("x^3*y", 1, vec![("x", "3"), ("y", "1")]),
            ("x^3 + x*y^2", 2, vec![("x", "1/3"), ("x + y", "2/3")]),
        ];
        for (f, e, expected) in cases {
            let f = parse_poly(&r, f).unwrap();
            let d = MapDatum::on_ambient(f.clone(), e).unwrap();
            let div = divisor_of_map(&d, &[]).unwrap();
            let want: Vec<(String, String)> = expected
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect();
            assert_eq!(comps(&div), want);
            let back = map_of_divisor(&div, &r).unwrap();
            assert_eq!(*back.multiplier(), f.monic());
        }
    }

    #[test]
    fn rejects_bad_divisors() {
        let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let x = parse_poly(&r, "x").unwrap();
        assert!(matches!(
            DivisorData::new(1, vec![(x.clone(), Rational::new(1, 2))]),
            Err(Error::IncompatibleExponentDenominator { .. })
        ));
        let x2 = parse_poly(&r, "x^2 + x*y").unwrap();
        assert!(DivisorData::new(1, vec![(x, Rational::new(1, 1)), (x2, Rational::new(1, 1))]).is_err());
    }
}
