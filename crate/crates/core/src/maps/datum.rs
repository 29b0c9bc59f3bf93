use std::fmt;

use crate::algebra::{prime_power, Poly, RingRef};
use crate::error::{Error, Result};
use crate::frobenius::{bracket_power, frobenius_root_scaled, trace_eval_q};
use crate::groebner::{min_primes_restricted, Ideal};

use super::rational::geometric_exponent;

/// A p^-e-linear map on R = S/I, given by a multiplier `f ∈ (I^[q] : I)`:
/// `φ(g) = T_e(f·g)` modulo I.
#[derive(Clone, Debug)]
pub struct MapDatum {
    e: u32,
    q: u64,
    modulus: Ideal,
    f: Poly,
    zero_map: bool,
}

/// Outcome of a compatibility test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Compatibility {
    pub compatible: bool,
    /// Whether the tested ideal was verified radical, which makes the
    /// single-level check valid at every multiple of the level.
    pub radical_verified: bool,
}

impl MapDatum {
    /// Validates `f·I ⊆ I^[q]` and records whether `f ∈ I^[q]` (the zero map).
    pub fn new(modulus: Ideal, e: u32, f: Poly) -> Result<MapDatum> {
        if f.ring() != modulus.ring() {
            return Err(Error::RingMismatch);
        }
        if e == 0 {
            return Err(Error::InvalidDatum("level must be positive".into()));
        }
        let q = prime_power(f.ring().p(), e)?;
        let bracket = bracket_power(&modulus, q)?;
        for g in modulus.gens() {
            if !bracket.contains_poly(&f.checked_mul(g)?)? {
                return Err(Error::InvalidDatum(format!(
                    "multiplier {f} does not lie in (I^[{q}] : I)"
                )));
            }
        }
        let zero_map = bracket.contains_poly(&f)?;
        Ok(MapDatum {
            e,
            q,
            modulus,
            f,
            zero_map,
        })
    }

    /// A map on the polynomial ring itself (modulus 0).
    pub fn on_ambient(f: Poly, e: u32) -> Result<MapDatum> {
        let modulus = Ideal::zero(f.ring());
        MapDatum::new(modulus, e, f)
    }

    pub fn ring(&self) -> &RingRef {
        self.f.ring()
    }

    pub fn p(&self) -> u64 {
        self.ring().p()
    }

    pub fn level(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &Ideal {
        &self.modulus
    }

    pub fn multiplier(&self) -> &Poly {
        &self.f
    }

    pub fn is_zero_map(&self) -> bool {
        self.zero_map
    }

    /// `φ(g)`, as the normal form of `T_e(f·g)` modulo the modulus.
    pub fn apply(&self, g: &Poly) -> Result<Poly> {
        let v = trace_eval_q(&self.f.checked_mul(g)?, self.q)?;
        self.modulus.normal_form(&v)
    }

    /// `φ(F^e_*(J + I))`, as the ideal `(f·(J + I))^[1/q] + I` of S.
    pub fn phi_image(&self, j: &Ideal) -> Result<Ideal> {
        let full = j.sum(&self.modulus)?;
        frobenius_root_scaled(&self.f, &full, self.q)?.sum(&self.modulus)
    }

    /// `φ(F^e_* R) = (f)^[1/q] + I`.
    pub fn image_ideal(&self) -> Result<Ideal> {
        self.phi_image(&Ideal::unit(self.ring()))
    }

    /// Whether φ is surjective after localizing at `P`, i.e. the image is
    /// not contained in `P`.
    pub fn is_surjective_at(&self, prime: &Ideal) -> Result<bool> {
        Ok(!prime.contains(&self.image_ideal()?)?)
    }

    /// The n-fold composite, at level `n·e`, with multiplier
    /// `f^{1 + q + ⋯ + q^{n−1}} = Π f^{q^i}`.
    pub fn compose(&self, n: u32) -> Result<MapDatum> {
        if n == 0 {
            return Err(Error::InvalidArgument("composition count must be positive".into()));
        }
        if n == 1 {
            return Ok(self.clone());
        }
        geometric_exponent(self.q, n)?;
        let level = self
            .e
            .checked_mul(n)
            .ok_or_else(|| Error::Overflow("composite level".into()))?;
        let q_n = prime_power(self.p(), level)?;
        let mut f = self.f.clone();
        let mut power = self.q;
        for i in 1..n {
            f = f.checked_mul(&self.f.frobenius_pow(power)?)?;
            if i + 1 < n {
                power = power
                    .checked_mul(self.q)
                    .ok_or_else(|| Error::Overflow("composite level".into()))?;
            }
        }
        let zero_map = self.zero_map || bracket_power(&self.modulus, q_n)?.contains_poly(&f)?;
        Ok(MapDatum {
            e: level,
            q: q_n,
            modulus: self.modulus.clone(),
            f,
            zero_map,
        })
    }

    /// Whether `φ(F^e_*(J + I)) ⊆ J + I`.
    pub fn is_compatible(&self, j: &Ideal) -> Result<bool> {
        let full = j.sum(&self.modulus)?;
        full.contains(&self.phi_image(j)?)
    }

    /// [`MapDatum::is_compatible`] together with a radicality check of
    /// `J + I` (within the supported prime-decomposition classes).
    pub fn compatibility(&self, j: &Ideal) -> Result<Compatibility> {
        let compatible = self.is_compatible(j)?;
        let full = j.sum(&self.modulus)?;
        let radical_verified = match min_primes_restricted(&full, &[]) {
            Ok(primes) => {
                let mut inter = Ideal::unit(self.ring());
                for p in &primes {
                    inter = inter.intersect(p)?;
                }
                inter.equals(&full)?
            }
            Err(e) if e.is_refusal() => false,
            Err(e) => return Err(e),
        };
        Ok(Compatibility {
            compatible,
            radical_verified,
        })
    }
}

impl fmt::Display for MapDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "level {} mult {} modulo {}",
            self.e, self.f, self.modulus
        )
    }
}
