//! The prime field F_p with word-sized p.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Largest supported characteristic. Products of two residues must fit in a
/// `u64`, so residues stay below 2^31.
pub const MAX_CHARACTERISTIC: u64 = (1 << 31) - 1;

/// Arithmetic context for F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Checks primality of `p` by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=MAX_CHARACTERISTIC).contains(&p) || !is_prime(p) {
            return Err(Error::BadCharacteristic(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    /// Inverse by the extended Euclidean algorithm. Panics on zero.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        let (mut r0, mut r1) = (self.p as i64, (a % self.p) as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        s0.rem_euclid(self.p as i64) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn from_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.p as i128) as u64
    }

    pub fn elem(&self, v: i64) -> FieldElem {
        FieldElem {
            value: self.from_i128(v as i128),
            p: self.p,
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue together with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    value: u64,
    p: u64,
}

impl FieldElem {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inv(&self) -> Option<FieldElem> {
        if self.value == 0 {
            return None;
        }
        let f = PrimeField { p: self.p };
        Some(FieldElem {
            value: f.inv(self.value),
            p: self.p,
        })
    }

    pub fn pow(&self, exp: u64) -> FieldElem {
        let f = PrimeField { p: self.p };
        FieldElem {
            value: f.pow(self.value, exp),
            p: self.p,
        }
    }

    fn field(&self, other: &FieldElem) -> PrimeField {
        assert_eq!(self.p, other.p, "field elements of different characteristic");
        PrimeField { p: self.p }
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        let f = self.field(&rhs);
        FieldElem {
            value: f.add(self.value, rhs.value),
            p: self.p,
        }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        let f = self.field(&rhs);
        FieldElem {
            value: f.sub(self.value, rhs.value),
            p: self.p,
        }
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        let f = self.field(&rhs);
        FieldElem {
            value: f.mul(self.value, rhs.value),
            p: self.p,
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        let f = PrimeField { p: self.p };
        FieldElem {
            value: f.neg(self.value),
            p: self.p,
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(91).is_err());
        assert!(PrimeField::new(97).is_ok());
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 101, 65521] {
            let f = PrimeField::new(p).unwrap();
            for a in 1..p.min(500) {
                assert_eq!(f.mul(a, f.inv(a)), 1, "p={p} a={a}");
            }
        }
    }

    #[test]
    fn fermat() {
        let f = PrimeField::new(13).unwrap();
        for a in 0..13 {
            assert_eq!(f.pow(a, 13), a);
        }
        let x = f.elem(-3);
        assert_eq!(x.value(), 10);
        assert_eq!((x * x.inv().unwrap()).value(), 1);
        assert_eq!((x + f.elem(3)).value(), 0);
    }
}
