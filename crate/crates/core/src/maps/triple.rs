use std::fmt;

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::frobenius::frobenius_root;
use crate::groebner::{min_primes_restricted, Ideal};

use super::datum::MapDatum;
use super::rational::{ceil_mul, Rational};

/// Default number of composites tried by [`TripleSpec::sharp_purity_at`].
pub const DEFAULT_NMAX: u32 = 3;

/// A map datum together with a principal ideal `(g)` and an exponent `t`.
#[derive(Clone, Debug)]
pub struct TripleSpec {
    pub datum: MapDatum,
    pub g: Poly,
    pub t: Rational,
    /// Whether `g` was verified to avoid every minimal prime of the modulus
    /// (false when the decomposition lies outside the supported classes).
    pub g_avoids_min_primes: bool,
}

/// Answer of the sharp F-purity search for a triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum PurityVerdict {
    /// Surjectivity was found at the given composite.
    Pure { composite: u32 },
    /// No surjective composite up to `nmax`; not a proof of non-purity.
    NotDetected { nmax: u32 },
}

impl TripleSpec {
    pub fn new(datum: MapDatum, g: Poly, t: Rational) -> Result<TripleSpec> {
        if g.ring() != datum.ring() {
            return Err(Error::RingMismatch);
        }
        if *t.numer() == 0 {
            return Err(Error::InvalidArgument("exponent t must be positive".into()));
        }
        if (*t.denom()).is_multiple_of(datum.p()) {
            return Err(Error::InvalidArgument(format!(
                "denominator of t = {t} is divisible by the characteristic"
            )));
        }
        let g_avoids_min_primes = match min_primes_restricted(datum.modulus(), &[]) {
            Ok(primes) => {
                for p in &primes {
                    if p.contains_poly(&g)? {
                        return Err(Error::InvalidArgument(format!(
                            "{g} lies in the minimal prime {p} of the modulus"
                        )));
                    }
                }
                true
            }
            Err(e) if e.is_refusal() => false,
            Err(e) => return Err(e),
        };
        Ok(TripleSpec {
            datum,
            g,
            t,
            g_avoids_min_primes,
        })
    }

    /// Searches `n = 1, …, nmax` for a composite whose twisted multiplier
    /// `f^{(q^n−1)/(q−1)}·g^{⌈t(q^n−1)⌉}` maps onto a unit at `m`.
    pub fn sharp_purity_at(&self, m: &Ideal, nmax: u32) -> Result<PurityVerdict> {
        for n in 1..=nmax {
            let comp = self.datum.compose(n)?;
            let s = ceil_mul(&self.t, comp.q() - 1)?;
            let h = comp.multiplier().checked_mul(&self.g.checked_pow(s)?)?;
            let image = frobenius_root(&Ideal::principal(&h), comp.q())?.sum(self.datum.modulus())?;
            if !m.contains(&image)? {
                return Ok(PurityVerdict::Pure { composite: n });
            }
        }
        Ok(PurityVerdict::NotDetected { nmax })
    }
}

impl fmt::Display for TripleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, ({})^{})", self.datum, self.g, self.t)
    }
}
