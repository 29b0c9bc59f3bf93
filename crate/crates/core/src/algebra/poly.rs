//! Sparse multivariate polynomials over F_p.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::ring::{Ring, RingRef};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: u64,
}

/// A polynomial in a fixed ring.
///
/// Terms are kept strictly decreasing under the ring's monomial order and
/// never carry a zero coefficient, so structural equality is ideal-free
/// equality of polynomials.
#[derive(Clone)]
pub struct Poly {
    ring: RingRef,
    terms: Vec<Term>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

/// Merges two sorted term lists computing `a + scale * b`.
pub(crate) fn merge_scaled(ring: &Ring, a: &[Term], b: &[Term], scale: u64) -> Vec<Term> {
    let field = ring.field();
    let order = ring.order();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].mono, &b[j].mono) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                let c = field.mul(b[j].coeff, scale);
                if c != 0 {
                    out.push(Term { mono: b[j].mono, coeff: c });
                }
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(a[i].coeff, field.mul(b[j].coeff, scale));
                if c != 0 {
                    out.push(Term { mono: a[i].mono, coeff: c });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        let c = field.mul(t.coeff, scale);
        if c != 0 {
            out.push(Term { mono: t.mono, coeff: c });
        }
    }
    out
}

impl Poly {
    pub fn zero(ring: &RingRef) -> Poly {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Poly {
        Poly::constant(ring, 1)
    }

    pub fn constant(ring: &RingRef, c: i64) -> Poly {
        let c = ring.field().from_i128(c as i128);
        Poly::monomial(ring, Monomial::one(), c)
    }

    pub fn monomial(ring: &RingRef, mono: Monomial, coeff: u64) -> Poly {
        let coeff = coeff % ring.p();
        let terms = if coeff == 0 {
            Vec::new()
        } else {
            vec![Term { mono, coeff }]
        };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs;
    /// repeated monomials are combined.
    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Poly
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let field = *ring.field();
        let raw = terms
            .into_iter()
            .map(|(mono, c)| Term {
                mono,
                coeff: field.from_i128(c as i128),
            })
            .collect();
        Self::from_unsorted(ring, raw)
    }

    pub(crate) fn from_unsorted(ring: &RingRef, mut raw: Vec<Term>) -> Poly {
        let order = ring.order();
        let field = *ring.field();
        raw.sort_unstable_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut terms: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match terms.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = field.add(last.coeff, t.coeff),
                _ => {
                    if let Some(last) = terms.last() {
                        if last.coeff == 0 {
                            terms.pop();
                        }
                    }
                    terms.push(t);
                }
            }
        }
        if matches!(terms.last(), Some(t) if t.coeff == 0) {
            terms.pop();
        }
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusted constructor: terms already sorted, combined and nonzero.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<Term>) -> Poly {
        debug_assert!(terms.iter().all(|t| t.coeff != 0));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].mono.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].coeff == 1
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn lead_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.mono)
    }

    pub fn lead_coeff(&self) -> u64 {
        self.terms.first().map_or(0, |t| t.coeff)
    }

    /// Coefficient of `mono` (zero if absent).
    pub fn coeff_of(&self, mono: &Monomial) -> u64 {
        let order = self.ring.order();
        self.terms
            .binary_search_by(|t| order.cmp(mono, &t.mono))
            .map_or(0, |i| self.terms[i].coeff)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].mono.degree() == w[1].mono.degree())
    }

    /// Degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|t| t.mono.exp(i)).max().unwrap_or(0)
    }

    /// Bit mask of the variables that occur.
    pub fn variable_mask(&self) -> u32 {
        self.terms.iter().fold(0, |m, t| m | t.mono.support_mask())
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(Poly::from_sorted(
            &self.ring,
            merge_scaled(&self.ring, &self.terms, &other.terms, 1),
        ))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        let m1 = self.ring.p() - 1;
        Ok(Poly::from_sorted(
            &self.ring,
            merge_scaled(&self.ring, &self.terms, &other.terms, m1),
        ))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let t = small.terms[0];
            return big.mul_term(&t.mono, t.coeff);
        }
        let field = *self.ring.field();
        let mut raw = Vec::with_capacity(self.len() * other.len());
        for a in &small.terms {
            for b in &big.terms {
                raw.push(Term {
                    mono: a.mono.checked_mul(&b.mono)?,
                    coeff: field.mul(a.coeff, b.coeff),
                });
            }
        }
        Ok(Poly::from_unsorted(&self.ring, raw))
    }

    /// Multiplies by `coeff * mono`; the order is multiplicative, so no
    /// re-sorting is needed.
    pub fn mul_term(&self, mono: &Monomial, coeff: u64) -> Result<Poly> {
        let field = *self.ring.field();
        let coeff = coeff % field.p();
        if coeff == 0 {
            return Ok(Poly::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    mono: t.mono.checked_mul(mono)?,
                    coeff: field.mul(t.coeff, coeff),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_sorted(&self.ring, terms))
    }

    pub fn scale(&self, c: u64) -> Poly {
        let field = *self.ring.field();
        let c = c % field.p();
        if c == 0 {
            return Poly::zero(&self.ring);
        }
        Poly::from_sorted(
            &self.ring,
            self.terms
                .iter()
                .map(|t| Term {
                    mono: t.mono,
                    coeff: field.mul(t.coeff, c),
                })
                .collect(),
        )
    }

    /// Scales so that the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coeff == 1 => self.clone(),
            Some(t) => self.scale(self.ring.field().inv(t.coeff)),
        }
    }

    pub fn checked_pow(&self, mut k: u64) -> Result<Poly> {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `f^q` for `q` a power of the characteristic: exponents scale by `q`,
    /// coefficients are fixed by Fermat.
    pub fn frobenius_pow(&self, q: u64) -> Result<Poly> {
        check_prime_power(self.ring.p(), q)?;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    mono: t.mono.checked_pow(q)?,
                    coeff: t.coeff,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_sorted(&self.ring, terms))
    }

    /// Decomposes `f = Σ_a g_a^q x^a` over digit vectors `a ∈ [0, q)^n`.
    /// Only nonzero components are returned.
    pub fn pe_decompose(&self, q: u64) -> Result<BTreeMap<Vec<u32>, Poly>> {
        check_prime_power(self.ring.p(), q)?;
        let n = self.ring.nvars();
        let mut buckets: BTreeMap<Vec<u32>, Vec<Term>> = BTreeMap::new();
        for t in &self.terms {
            let (quot, digits) = t.mono.split_digits(q);
            buckets
                .entry(digits.exponents()[..n].to_vec())
                .or_default()
                .push(Term {
                    mono: quot,
                    coeff: t.coeff,
                });
        }
        // quotient monomials inherit the order (the map m -> m^q x^a is
        // order preserving for fixed a), so each bucket is already sorted
        Ok(buckets
            .into_iter()
            .map(|(a, terms)| (a, Poly::from_sorted(&self.ring, terms)))
            .collect())
    }

    /// Division with remainder by a list of divisors (first divisor whose
    /// leading monomial divides the current leading term wins). Returns the
    /// quotients and the remainder.
    pub fn div_rem(&self, divisors: &[Poly]) -> Result<(Vec<Poly>, Poly)> {
        let field = *self.ring.field();
        let mut quots: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
        let mut rem = Vec::new();
        let mut work = self.terms.clone();
        while let Some(&lead) = work.first() {
            let hit = divisors.iter().enumerate().find_map(|(i, g)| {
                let gl = g.lead_term()?;
                gl.mono.quotient_of(&lead.mono).map(|m| (i, m, *gl))
            });
            match hit {
                Some((i, m, gl)) => {
                    let c = field.mul(lead.coeff, field.inv(gl.coeff));
                    quots[i].push(Term { mono: m, coeff: c });
                    let sub = divisors[i].mul_term(&m, field.neg(c))?;
                    work = merge_scaled(&self.ring, &work, &sub.terms, 1);
                }
                None => {
                    rem.push(lead);
                    work.remove(0);
                }
            }
        }
        let quots = quots
            .into_iter()
            .map(|t| Poly::from_unsorted(&self.ring, t))
            .collect();
        Ok((quots, Poly::from_sorted(&self.ring, rem)))
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Poly) -> Result<Option<Poly>> {
        self.check_ring(g)?;
        if g.is_zero() {
            return Err(Error::InvalidArgument("division by zero polynomial".into()));
        }
        let (q, r) = self.div_rem(std::slice::from_ref(g))?;
        Ok(if r.is_zero() {
            Some(q.into_iter().next().unwrap())
        } else {
            None
        })
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let field = *self.ring.field();
        let raw = self
            .terms
            .iter()
            .filter(|t| t.mono.exp(i) > 0)
            .map(|t| {
                let e = t.mono.exp(i);
                let mono = Monomial::var(i).quotient_of(&t.mono).unwrap();
                Term {
                    mono,
                    coeff: field.mul(t.coeff, e as u64 % field.p()),
                }
            })
            .filter(|t| t.coeff != 0)
            .collect();
        Poly::from_unsorted(&self.ring, raw)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `map[i]`.
    pub fn remap(&self, target: &RingRef, map: &[usize]) -> Result<Poly> {
        if target.p() != self.ring.p() || map.len() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        if map.iter().any(|&j| j >= target.nvars()) {
            return Err(Error::RingMismatch);
        }
        let raw = self
            .terms
            .iter()
            .map(|t| Term {
                mono: t.mono.remap(map),
                coeff: t.coeff,
            })
            .collect();
        Ok(Poly::from_unsorted(target, raw))
    }

    /// Same polynomial viewed in a ring with identical variables but a
    /// different order.
    pub fn reorder(&self, target: &RingRef) -> Result<Poly> {
        if target.var_names() != self.ring.var_names() {
            return Err(Error::RingMismatch);
        }
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.remap(target, &map)
    }

    /// Ring homomorphism: substitutes `images[i]` (polynomials of `target`)
    /// for variable `i`.
    pub fn substitute(&self, target: &RingRef, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() || target.p() != self.ring.p() {
            return Err(Error::RingMismatch);
        }
        let mut acc = Poly::zero(target);
        for t in &self.terms {
            let mut term = Poly::constant(target, t.coeff as i64);
            for (i, img) in images.iter().enumerate() {
                let e = t.mono.exp(i);
                if e > 0 {
                    term = term.checked_mul(&img.checked_pow(e as u64)?)?;
                }
            }
            acc = acc.checked_add(&term)?;
        }
        Ok(acc)
    }

    /// Splits off the largest monomial dividing every term: `self = m * rest`.
    pub fn monomial_content(&self) -> (Monomial, Poly) {
        let Some(first) = self.terms.first() else {
            return (Monomial::one(), self.clone());
        };
        let g = self.terms.iter().fold(first.mono, |g, t| g.gcd(&t.mono));
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                mono: g.quotient_of(&t.mono).unwrap(),
                coeff: t.coeff,
            })
            .collect();
        (g, Poly::from_sorted(&self.ring, terms))
    }
}

pub(crate) fn check_prime_power(p: u64, q: u64) -> Result<u32> {
    let mut e = 0u32;
    let mut acc = 1u64;
    while acc < q {
        acc = acc
            .checked_mul(p)
            .ok_or_else(|| Error::InvalidArgument(format!("{q} is not a power of {p}")))?;
        e += 1;
    }
    if acc == q && q > 1 {
        Ok(e)
    } else {
        Err(Error::InvalidArgument(format!(
            "{q} is not a positive power of the characteristic {p}"
        )))
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, name) in ring.var_names().iter().enumerate() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

/// Canonical text: terms in descending order, coefficients in `[1, p)`,
/// `*` between factors and `^` for exponents.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if t.mono.is_one() {
                write!(f, "{}", t.coeff)?;
            } else {
                if t.coeff != 1 {
                    write!(f, "{}*", t.coeff)?;
                }
                fmt_monomial(f, &self.ring, &t.mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            /// Panics on ring mismatch or exponent overflow; use the
            /// `checked_*` methods to get a `Result`.
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect(concat!("Poly::", stringify!($method)))
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(self.ring.p() - 1)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MonomialOrder;

    fn ring(p: u64, vars: &[&str]) -> RingRef {
        Ring::new(p, vars, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn char_two_cancellation() {
        let r = ring(2, &["x", "y"]);
        let s = &r.var(0) + &r.var(1);
        assert!((&s + &s).is_zero());
        assert_eq!((&s * &s).to_string(), "x^2 + y^2");
    }

    #[test]
    fn product_and_canonical_text() {
        let r = ring(5, &["x", "y"]);
        assert_eq!((&r.var(0) * &r.var(1)).to_string(), "x*y");
        let f = Poly::constant(&r, -3) * r.var(0);
        assert_eq!(f.to_string(), "2*x");
        assert_eq!(Poly::zero(&r).to_string(), "0");
    }

    #[test]
    fn frobenius_power_examples() {
        let r = ring(2, &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        assert_eq!((&x + &y).frobenius_pow(2).unwrap().to_string(), "x^2 + y^2");
        let f = &(&x * &y) + &Poly::one(&r);
        let by_squaring = (&f * &f) * (&f * &f);
        assert_eq!(f.frobenius_pow(4).unwrap(), by_squaring);
        assert_eq!(by_squaring.to_string(), "x^4*y^4 + 1");
        let r5 = ring(5, &["x"]);
        let g = Poly::constant(&r5, 2) * r5.var(0);
        assert_eq!(g.frobenius_pow(5).unwrap().to_string(), "2*x^5");
        assert!(g.frobenius_pow(6).is_err());
    }

    #[test]
    fn digit_decomposition_examples() {
        let r = ring(2, &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let f = x.checked_pow(3).unwrap() * &y;
        let d = f.pe_decompose(2).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[&vec![1, 1]], x);
        let d = (&x * &x).pe_decompose(2).unwrap();
        assert_eq!(d[&vec![0, 0]], x);
        let g = &(&x * &x) * &y + y.checked_pow(3).unwrap();
        let d = g.pe_decompose(2).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[&vec![0, 1]], &x + &y);
    }

    #[test]
    fn exact_division_and_derivative() {
        let r = ring(3, &["x", "y"]);
        let (x, y) = (r.var(0), r.var(1));
        let f = (&x + &y) * (&x - &y);
        assert_eq!(f.exact_div(&(&x + &y)).unwrap(), Some(&x - &y));
        assert_eq!(f.exact_div(&x).unwrap(), None);
        let cube = x.checked_pow(3).unwrap();
        assert!(cube.derivative(0).is_zero());
        assert_eq!((&x * &y).derivative(1), x);
    }

    #[test]
    fn substitution_homomorphism() {
        let s = ring(2, &["a", "b", "c"]);
        let t = ring(2, &["x", "y"]);
        let (x, y) = (t.var(0), t.var(1));
        let images = [&x * &x, &x * &y, y.clone()];
        let h = s.var(0) * s.var(2) * s.var(2) + s.var(1) * s.var(1);
        assert!(h.substitute(&t, &images).unwrap().is_zero());
    }
}
