//! Dense exponent vectors.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of variables of any ring, auxiliary elimination variables
/// included.
pub const MAX_VARS: usize = 12;

/// A monomial x_1^{a_1} ... x_n^{a_n}, stored densely with its total degree.
///
/// Slots past the ring's variable count are always zero, so comparisons and
/// divisibility never need to know `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: [u32; MAX_VARS],
}

impl Default for Monomial {
    fn default() -> Self {
        Monomial::one()
    }
}

fn overflow(what: &str) -> Error {
    Error::Overflow(what.to_string())
}

impl Monomial {
    pub const fn one() -> Self {
        Monomial {
            deg: 0,
            exps: [0; MAX_VARS],
        }
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, k: u32) -> Self {
        assert!(i < MAX_VARS);
        let mut m = Monomial::one();
        m.exps[i] = k;
        m.deg = k;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::InvalidArgument(format!(
                "at most {MAX_VARS} variables are supported"
            )));
        }
        let mut m = Monomial::one();
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = e;
            deg = deg.checked_add(e).ok_or_else(|| overflow("monomial degree"))?;
        }
        m.deg = deg;
        Ok(m)
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    #[inline]
    pub fn exponents(&self) -> &[u32; MAX_VARS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_VARS).filter(move |&i| self.exps[i] > 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let mut out = *self;
        for i in 0..MAX_VARS {
            out.exps[i] = out.exps[i]
                .checked_add(other.exps[i])
                .ok_or_else(|| overflow("monomial product"))?;
        }
        out.deg = self
            .deg
            .checked_add(other.deg)
            .ok_or_else(|| overflow("monomial product"))?;
        Ok(out)
    }

    /// Raises every exponent to the `k`-th multiple.
    pub fn checked_pow(&self, k: u64) -> Result<Monomial> {
        let k32 = u32::try_from(k).map_err(|_| overflow("monomial power"))?;
        let mut out = *self;
        for e in out.exps.iter_mut() {
            *e = e.checked_mul(k32).ok_or_else(|| overflow("monomial power"))?;
        }
        out.deg = self
            .deg
            .checked_mul(k32)
            .ok_or_else(|| overflow("monomial power"))?;
        Ok(out)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut out = *other;
        for i in 0..MAX_VARS {
            out.exps[i] -= self.exps[i];
        }
        out.deg -= self.deg;
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].max(other.exps[i]);
        }
        out.deg = out.exps.iter().sum();
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        for i in 0..MAX_VARS {
            out.exps[i] = self.exps[i].min(other.exps[i]);
        }
        out.deg = out.exps.iter().sum();
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Splits the exponent vector in base `q`: `self = quotient^q * digits`
    /// with every digit exponent in `[0, q)`.
    pub fn split_digits(&self, q: u64) -> (Monomial, Monomial) {
        let mut quot = Monomial::one();
        let mut rem = Monomial::one();
        for i in 0..MAX_VARS {
            let e = self.exps[i] as u64;
            quot.exps[i] = (e / q) as u32;
            rem.exps[i] = (e % q) as u32;
        }
        quot.deg = quot.exps.iter().sum();
        rem.deg = rem.exps.iter().sum();
        (quot, rem)
    }

    /// Degree restricted to the variables `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().sum()
    }

    /// Cheap divisibility pre-filter: bit i is set when x_i occurs.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0u32;
        for i in 0..MAX_VARS {
            if self.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Moves exponents according to `map`: slot `i` goes to slot `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Monomial {
        let mut out = Monomial::one();
        for (i, &j) in map.iter().enumerate() {
            out.exps[j] += self.exps[i];
        }
        out.deg = self.deg;
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = (0..MAX_VARS).rev().find(|&i| self.exps[i] > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_recompose() {
        let m = Monomial::from_exponents(&[3, 1, 8]).unwrap();
        let (qt, r) = m.split_digits(2);
        assert_eq!(qt, Monomial::from_exponents(&[1, 0, 4]).unwrap());
        assert_eq!(r, Monomial::from_exponents(&[1, 1, 0]).unwrap());
        assert_eq!(qt.checked_pow(2).unwrap().checked_mul(&r).unwrap(), m);
    }

    #[test]
    fn overflow_is_reported() {
        let m = Monomial::var_pow(0, u32::MAX / 2 + 1);
        assert!(matches!(m.checked_pow(2), Err(Error::Overflow(_))));
        assert!(m.checked_mul(&m).is_err());
    }

    #[test]
    fn division() {
        let a = Monomial::from_exponents(&[1, 2]).unwrap();
        let b = Monomial::from_exponents(&[2, 2, 1]).unwrap();
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Monomial::from_exponents(&[1, 0, 1]).ok());
        assert!(b.quotient_of(&a).is_none());
        assert_eq!(a.lcm(&b), b);
        assert_eq!(a.gcd(&b), a);
    }
}
