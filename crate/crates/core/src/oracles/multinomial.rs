use crate::algebra::{Monomial, Poly, PrimeField};
use crate::error::{Error, Result};

/// Coefficient of `(x_1 ⋯ x_n)^{p−1}` in `h^{p−1}`, by expanding the
/// multinomial theorem over the terms of `h`.
pub fn multinomial_top_coefficient(h: &Poly) -> Result<u64> {
    let ring = h.ring();
    let p = ring.p();
    let field = PrimeField::new(p)?;
    let n = ring.nvars();
    let target = Monomial::from_exponents(&vec![(p - 1) as u32; n])?;
    let terms = h.terms();
    let k = (p - 1) as u32;
    // factorials below p are invertible mod p
    let mut fact = vec![1u64; k as usize + 1];
    for i in 1..=k as usize {
        fact[i] = field.mul(fact[i - 1], i as u64);
    }
    let mut total = 0u64;
    let mut parts = vec![0u32; terms.len()];
    fn walk(
        idx: usize,
        left: u32,
        parts: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]) -> Result<()>,
    ) -> Result<()> {
        if idx + 1 == parts.len() {
            parts[idx] = left;
            return visit(parts);
        }
        for a in 0..=left {
            parts[idx] = a;
            walk(idx + 1, left - a, parts, visit)?;
        }
        Ok(())
    }
    if terms.is_empty() {
        return Ok(0);
    }
    walk(0, k, &mut parts, &mut |ks: &[u32]| {
        let mut mono = Monomial::one();
        let mut coeff = fact[k as usize];
        for (t, &a) in terms.iter().zip(ks) {
            mono = mono.checked_mul(&t.mono.checked_pow(a as u64)?)?;
            coeff = field.mul(coeff, field.inv(fact[a as usize]));
            coeff = field.mul(coeff, field.pow(t.coeff, a as u64));
        }
        if mono == target {
            total = field.add(total, coeff);
        }
        Ok(())
    })?;
    Ok(total)
}

/// Fedder's criterion for a hypersurface at the origin, checked through
/// the single coefficient that decides membership of `h^{p−1}` in `m^[p]`
/// for diagonal forms.
pub fn multinomial_fpure_check(h: &Poly) -> Result<bool> {
    if h.is_zero() {
        return Err(Error::InvalidArgument("zero hypersurface".into()));
    }
    Ok(multinomial_top_coefficient(h)? != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, MonomialOrder, Ring};

    #[test]
    fn diagonal_cubics() {
        let r7 = Ring::new(7, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let h = parse_poly(&r7, "x^3 + y^3 + z^3").unwrap();
        assert_eq!(multinomial_top_coefficient(&h).unwrap(), 6);
        assert!(multinomial_fpure_check(&h).unwrap());
        let r2 = Ring::new(2, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let h = parse_poly(&r2, "x^3 + y^3 + z^3").unwrap();
        assert!(!multinomial_fpure_check(&h).unwrap());
        let r2 = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let h = parse_poly(&r2, "x^2 + y^2").unwrap();
        assert!(!multinomial_fpure_check(&h).unwrap());
    }
}
