//! Fedder colons `(I^[q] : I)`, their principal generators modulo `I^[q]`,
//! and the purity tests built on them.

use crate::algebra::{prime_power, Poly};
use crate::error::{Error, Result};
use crate::frobenius::bracket_power;
use crate::groebner::Ideal;

/// `(I^[q] : I)` with `q = p^e`.
pub fn fedder_colon(ideal: &Ideal, e: u32) -> Result<Ideal> {
    let q = prime_power(ideal.ring().p(), e)?;
    bracket_power(ideal, q)?.colon(ideal)
}

/// An element `f_e` with `(I^[q] : I) = I^[q] + (f_e)`, made monic.
///
/// The colon generators are reduced modulo `I^[q]` and each nonzero
/// remainder (smallest degree first) is tried as the sole extra generator.
pub fn extract_generator(ideal: &Ideal, e: u32) -> Result<Poly> {
    let ring = ideal.ring();
    if ideal.is_zero_ideal() {
        return Ok(Poly::one(ring));
    }
    let q = prime_power(ring.p(), e)?;
    let bracket = bracket_power(ideal, q)?;
    let colon = bracket.colon(ideal)?;
    generator_modulo(&colon, &bracket)?.ok_or(Error::NotPrincipal { e })
}

/// Searches for `c` with `colon = bracket + (c)`.
fn generator_modulo(colon: &Ideal, bracket: &Ideal) -> Result<Option<Poly>> {
    let mut candidates: Vec<Poly> = Vec::new();
    for g in colon.gens().iter().chain(colon.groebner()?.iter()) {
        let r = bracket.normal_form(g)?;
        if !r.is_zero() && !candidates.contains(&r) {
            candidates.push(r);
        }
    }
    if candidates.is_empty() {
        // the colon is the bracket power itself
        return Ok(Some(Poly::zero(colon.ring())));
    }
    candidates.sort_by_cached_key(|c| (c.total_degree(), c.len(), c.to_string()));
    for c in candidates {
        if bracket.add_poly(&c)?.contains(colon)? {
            return Ok(Some(c.monic()));
        }
    }
    Ok(None)
}

/// Fedder's criterion: S/I is F-pure at the maximal ideal `m` (default: the
/// ideal of the origin) iff `(I^[q] : I) ⊄ m^[q]`.
pub fn is_fpure(ideal: &Ideal, e: u32, at: Option<&Ideal>) -> Result<bool> {
    let ring = ideal.ring();
    let origin = Ideal::maximal_at_origin(ring);
    let m = at.unwrap_or(&origin);
    let q = prime_power(ring.p(), e)?;
    let colon = fedder_colon(ideal, e)?;
    Ok(!bracket_power(m, q)?.contains(&colon)?)
}

/// Checks `((I + (h))^[q] : (I + (h))) = (I + (h))^[q] + (h^{q−1}·g)` where
/// `g` is the Fedder generator of `I` at level `e`.
pub fn codim1_colon_check(ideal: &Ideal, h: &Poly, e: u32) -> Result<bool> {
    let g = extract_generator(ideal, e)?;
    let q = prime_power(ideal.ring().p(), e)?;
    let j = ideal.add_poly(h)?;
    let lhs = fedder_colon(&j, e)?;
    let rhs = bracket_power(&j, q)?.add_poly(&h.checked_pow(q - 1)?.checked_mul(&g)?)?;
    lhs.equals(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, MonomialOrder, Ring, RingRef};

    fn ring(p: u64, vars: &[&str]) -> RingRef {
        Ring::new(p, vars, MonomialOrder::GrevLex).unwrap()
    }

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect()).unwrap()
    }

    #[test]
    fn principal_colons() {
        let r = ring(5, &["x", "y", "z"]);
        let h = parse_poly(&r, "x*y - z^2").unwrap();
        let i = Ideal::principal(&h);
        let c = fedder_colon(&i, 1).unwrap();
        let expected = ideal(&r, &[]).add_poly(&h.checked_pow(4).unwrap()).unwrap();
        assert!(c.equals(&expected).unwrap());
        assert_eq!(extract_generator(&i, 1).unwrap(), h.checked_pow(4).unwrap().monic());
        assert!(extract_generator(&Ideal::zero(&r), 2).unwrap().is_one());
    }

    #[test]
    fn purity_examples() {
        let r2 = ring(2, &["x", "y", "z"]);
        assert!(is_fpure(&ideal(&r2, &["x*y"]), 1, None).unwrap());
        assert!(!is_fpure(&ideal(&r2, &["x^3 + y^3 + z^3"]), 1, None).unwrap());
        let r7 = ring(7, &["x", "y", "z"]);
        assert!(is_fpure(&ideal(&r7, &["x^3 + y^3 + z^3"]), 1, None).unwrap());
    }

    #[test]
    fn codim_one_on_ambient() {
        let r = ring(3, &["x", "y"]);
        let h = parse_poly(&r, "x^2 + y").unwrap();
        assert!(codim1_colon_check(&Ideal::zero(&r), &h, 1).unwrap());
    }
}
