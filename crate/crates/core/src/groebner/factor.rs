//! A deliberately partial factorizer: monomial content, linear forms,
//! univariate and bivariate-homogeneous polynomials (via Cantor–Zassenhaus),
//! plus caller-attested factors that are verified by exact division.

use crate::algebra::upoly::{UArith, UPoly};
use crate::algebra::{Monomial, Poly, RingRef};
use crate::error::{Error, Result};

/// Cap on the number of trial linear divisors tried for one polynomial.
const LINEAR_SEARCH_LIMIT: u64 = 20_000;

/// `f = unit · Π factor^mult` with monic irreducible factors (or attested
/// ones), sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u64,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self, ring: &RingRef) -> Result<Poly> {
        let mut acc = Poly::constant(ring, self.unit as i64);
        for (h, m) in &self.factors {
            acc = acc.checked_mul(&h.checked_pow(*m as u64)?)?;
        }
        Ok(acc)
    }
}

fn to_upoly(f: &Poly, var: usize) -> UPoly {
    let d = f.degree_in(var) as usize;
    let mut coeffs = vec![0u64; d + 1];
    for t in f.terms() {
        coeffs[t.mono.exp(var) as usize] = t.coeff;
    }
    UPoly::new(coeffs)
}

/// Reads `u` as a polynomial in `var`; with `hom = (other, d)` it is
/// homogenized to degree `d` using `other`.
fn from_upoly(ring: &RingRef, u: &UPoly, var: usize, hom: Option<(usize, u32)>) -> Result<Poly> {
    let mut terms = Vec::new();
    for (k, &c) in u.coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut exps = vec![0u32; ring.nvars()];
        exps[var] = k as u32;
        if let Some((other, d)) = hom {
            exps[other] = d - k as u32;
        }
        terms.push(crate::algebra::Term {
            mono: Monomial::from_exponents(&exps)?,
            coeff: c,
        });
    }
    Ok(Poly::from_unsorted(ring, terms))
}

fn used_vars(f: &Poly) -> Vec<usize> {
    let mask = f.variable_mask();
    (0..f.ring().nvars()).filter(|i| mask >> i & 1 == 1).collect()
}

/// Splits a monic polynomial with no monomial factor into irreducibles.
fn split(f: Poly, out: &mut Vec<(Poly, u32)>) -> Result<()> {
    let ring = f.ring().clone();
    if f.is_constant() {
        return Ok(());
    }
    if f.total_degree() == Some(1) {
        out.push((f.monic(), 1));
        return Ok(());
    }
    let vars = used_vars(&f);
    let ar = UArith {
        field: *ring.field(),
    };
    if vars.len() == 1 {
        let (_, fs) = ar.factor(&to_upoly(&f, vars[0]));
        for (u, m) in fs {
            out.push((from_upoly(&ring, &u, vars[0], None)?.monic(), m));
        }
        return Ok(());
    }
    if vars.len() == 2 && f.is_homogeneous() {
        // dehomogenize at the second variable; no monomial factor means the
        // degree in the first variable is the total degree
        let (x, y) = (vars[0], vars[1]);
        let mut u = vec![0u64; f.total_degree().unwrap() as usize + 1];
        for t in f.terms() {
            u[t.mono.exp(x) as usize] = t.coeff;
        }
        let (_, fs) = ar.factor(&UPoly::new(u));
        for (u, m) in fs {
            let d = u.degree() as u32;
            out.push((from_upoly(&ring, &u, x, Some((y, d)))?.monic(), m));
        }
        return Ok(());
    }
    if let Some(lin) = find_linear_factor(&f, &vars)? {
        let mut rest = f;
        let mut mult = 0;
        while let Some(q) = rest.exact_div(&lin)? {
            rest = q;
            mult += 1;
        }
        out.push((lin, mult));
        return split(rest.monic(), out);
    }
    Err(Error::FactorizationUnavailable(f.to_string()))
}

fn find_linear_factor(f: &Poly, vars: &[usize]) -> Result<Option<Poly>> {
    let ring = f.ring();
    let p = ring.p();
    let mut tried = 0u64;
    for (k, &lead) in vars.iter().enumerate() {
        let tail = &vars[k + 1..];
        // coefficients for the tail variables and the constant term
        let slots = tail.len() + 1;
        let count = match p.checked_pow(slots as u32) {
            Some(c) if tried + c <= LINEAR_SEARCH_LIMIT => c,
            _ => return Ok(None),
        };
        tried += count;
        for code in 0..count {
            let mut c = code;
            let mut lin = ring.var(lead);
            for &v in tail {
                let a = c % p;
                c /= p;
                if a != 0 {
                    lin = lin.checked_add(&ring.var(v).scale(a))?;
                }
            }
            let a0 = c % p;
            if a0 != 0 {
                lin = lin.checked_add(&Poly::constant(ring, a0 as i64))?;
            }
            if f.exact_div(&lin)?.is_some() {
                return Ok(Some(lin.monic()));
            }
        }
    }
    Ok(None)
}

/// Factors `f` within the supported classes. Each attested polynomial is
/// divided out as often as it divides exactly; the remainder must be
/// handled by the built-in cases, otherwise `FactorizationUnavailable`.
pub fn factor_restricted(f: &Poly, attested: &[Poly]) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot factor the zero polynomial".into()));
    }
    let ring = f.ring().clone();
    for a in attested {
        if a.ring() != &ring {
            return Err(Error::RingMismatch);
        }
    }
    let unit = f.lead_coeff();
    let (content, mut rest) = f.monic().monomial_content();
    let mut factors: Vec<(Poly, u32)> = Vec::new();
    for v in content.support() {
        factors.push((ring.var(v), content.exp(v)));
    }
    for a in attested {
        if a.is_constant() {
            continue;
        }
        let a = a.monic();
        let mut mult = 0;
        while let Some(q) = rest.exact_div(&a)? {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((a, mult));
        }
    }
    split(rest.monic(), &mut factors)?;

    // merge repeated factors and sort canonically
    let mut merged: Vec<(Poly, u32)> = Vec::new();
    for (h, m) in factors {
        match merged.iter_mut().find(|(g, _)| *g == h) {
            Some(entry) => entry.1 += m,
            None => merged.push((h, m)),
        }
    }
    merged.sort_by_cached_key(|(h, _)| (h.total_degree(), h.len(), h.to_string()));
    let fac = Factorization {
        unit,
        factors: merged,
    };
    if fac.expand(&ring)? != *f {
        return Err(Error::Discrepancy(format!("factorization of {f} does not expand back")));
    }
    Ok(fac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, MonomialOrder, Ring};

    fn names(fac: &Factorization) -> Vec<(String, u32)> {
        fac.factors.iter().map(|(h, m)| (h.to_string(), *m)).collect()
    }

    #[test]
    fn cross_and_lines() {
        let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let f = parse_poly(&r, "x^2*y + x*y^2").unwrap();
        let fac = factor_restricted(&f, &[]).unwrap();
        assert_eq!(
            names(&fac),
            vec![("x".into(), 1), ("y".into(), 1), ("x + y".into(), 1)]
        );
    }

    #[test]
    fn binary_cubic_form() {
        let r = Ring::new(2, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let f = parse_poly(&r, "x^3*z + y^3*z").unwrap();
        let fac = factor_restricted(&f, &[]).unwrap();
        assert_eq!(
            names(&fac),
            vec![
                ("z".into(), 1),
                ("x + y".into(), 1),
                ("x^2 + x*y + y^2".into(), 1)
            ]
        );
    }

    #[test]
    fn attested_and_refusal() {
        let r = Ring::new(5, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let g = parse_poly(&r, "x^2 + y^3").unwrap();
        assert!(matches!(
            factor_restricted(&g, &[]),
            Err(Error::FactorizationUnavailable(_))
        ));
        let f = g.checked_mul(&g).unwrap().scale(3);
        let fac = factor_restricted(&f, std::slice::from_ref(&g)).unwrap();
        assert_eq!(fac.unit, 3);
        assert_eq!(fac.factors, vec![(g, 2)]);
    }

    #[test]
    fn shifted_linear_factor() {
        let r = Ring::new(2, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let h = parse_poly(&r, "x + y + z + 1").unwrap();
        let f = parse_poly(&r, "x*y*z").unwrap().checked_mul(&h).unwrap().checked_pow(3).unwrap();
        let fac = factor_restricted(&f, &[]).unwrap();
        assert_eq!(fac.factors.len(), 4);
        assert!(fac.factors.iter().all(|(_, m)| *m == 3));
    }
}
