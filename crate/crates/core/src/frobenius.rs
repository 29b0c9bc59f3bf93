//! Bracket powers, Frobenius roots and the trace map of a polynomial ring.
//!
//! A polynomial ring S over F_p is free over S^q with basis the monomials
//! whose exponents are all below q. The trace `T_e` sends the top basis
//! monomial `(x_1 ⋯ x_n)^{q-1}` to 1 and the others to 0; the Frobenius root
//! `I^[1/q]` is generated by all basis coordinates of the generators of I.

use crate::algebra::poly::check_prime_power;
use crate::algebra::{prime_power, Poly};
use crate::error::Result;
use crate::groebner::Ideal;

/// `I^[q]`, generated by the q-th powers of the generators. The reduced
/// Gröbner basis of I raised to the q-th power is the reduced Gröbner basis
/// of `I^[q]`, so the result comes with its basis already cached.
pub fn bracket_power(ideal: &Ideal, q: u64) -> Result<Ideal> {
    let ring = ideal.ring();
    check_prime_power(ring.p(), q)?;
    let basis = ideal
        .groebner()?
        .iter()
        .map(|g| g.frobenius_pow(q))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::from_reduced_basis(ring, basis))
}

/// Coordinates of `f` over S^q, as q-th roots: the `g_a` in
/// `f = Σ_a g_a^q x^a`.
pub fn root_components(f: &Poly, q: u64) -> Result<Vec<Poly>> {
    Ok(f.pe_decompose(q)?.into_values().collect())
}

/// `I^[1/q]`: the smallest ideal J with `I ⊆ J^[q]`.
pub fn frobenius_root(ideal: &Ideal, q: u64) -> Result<Ideal> {
    let ring = ideal.ring();
    check_prime_power(ring.p(), q)?;
    let mut gens = Vec::new();
    for g in ideal.gens() {
        gens.extend(root_components(g, q)?);
    }
    Ideal::new(ring, gens)
}

/// `(f·I)^[1/q]` without forming the product ideal first.
pub fn frobenius_root_scaled(f: &Poly, ideal: &Ideal, q: u64) -> Result<Ideal> {
    let ring = ideal.ring();
    check_prime_power(ring.p(), q)?;
    let mut gens = Vec::new();
    for g in ideal.gens() {
        gens.extend(root_components(&f.checked_mul(g)?, q)?);
    }
    Ideal::new(ring, gens)
}

/// The trace `T_e(f)`: the coordinate of `f` at `(x_1 ⋯ x_n)^{q-1}`,
/// `q = p^e`.
pub fn trace_eval(f: &Poly, e: u32) -> Result<Poly> {
    trace_eval_q(f, prime_power(f.ring().p(), e)?)
}

/// [`trace_eval`] with the level given as `q = p^e`.
pub fn trace_eval_q(f: &Poly, q: u64) -> Result<Poly> {
    let ring = f.ring();
    check_prime_power(ring.p(), q)?;
    let top = vec![(q - 1) as u32; ring.nvars()];
    Ok(f.pe_decompose(q)?
        .remove(&top)
        .unwrap_or_else(|| Poly::zero(ring)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, MonomialOrder, Ring, RingRef};

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect()).unwrap()
    }

    #[test]
    fn bracket_powers() {
        let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let b = bracket_power(&ideal(&r, &["x", "y"]), 4).unwrap();
        assert_eq!(b.to_string(), "(y^4, x^4)");
        let b = bracket_power(&ideal(&r, &["x + y"]), 2).unwrap();
        assert_eq!(b.to_string(), "(x^2 + y^2)");
        let r3 = Ring::new(3, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let b = bracket_power(&ideal(&r3, &["x", "y^2"]), 3).unwrap();
        assert!(b.equals(&ideal(&r3, &["x^3", "y^6"])).unwrap());
        assert!(bracket_power(&ideal(&r3, &["x"]), 2).is_err());
    }

    #[test]
    fn roots() {
        let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let root = frobenius_root(&ideal(&r, &["x^2*y", "y^3"]), 2).unwrap();
        assert!(root.equals(&ideal(&r, &["x", "y"])).unwrap());
        let root = frobenius_root(&ideal(&r, &["x^3*y"]), 2).unwrap();
        assert!(root.equals(&ideal(&r, &["x"])).unwrap());
        let root = frobenius_root(&ideal(&r, &["x"]), 2).unwrap();
        assert!(root.equals(&ideal(&r, &["1"])).unwrap());
    }

    #[test]
    fn trace_rule() {
        let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let t = |s: &str| trace_eval(&parse_poly(&r, s).unwrap(), 1).unwrap().to_string();
        assert_eq!(t("x*y"), "1");
        assert_eq!(t("x"), "0");
        assert_eq!(t("x^3*y"), "x");
        let r3 = Ring::new(3, &["a", "b", "c"], MonomialOrder::GrevLex).unwrap();
        let abc = parse_poly(&r3, "a^8*b^8*c^8").unwrap();
        assert!(trace_eval(&abc, 2).unwrap().is_one());
    }
}
