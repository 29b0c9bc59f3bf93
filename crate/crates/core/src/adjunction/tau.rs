//! Test ideals as the smallest stable ideals containing a seed, computed by
//! ascending iteration until the ideal stops growing.

use serde::Serialize;

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::frobenius::{frobenius_root, root_components};
use crate::groebner::Ideal;
use crate::maps::rational::{ceil_mul, integral_level, Rational};
use crate::maps::{MapDatum, TripleSpec};
use crate::oracles::tau_by_direct_sum_bounded;

use super::seed::seed_ideal;

/// Largest level searched for an integral exponent `t·(p^e − 1)`.
pub const DEFAULT_EMAX: u32 = 12;

/// Knobs shared by the test-ideal computations.
#[derive(Clone, Debug)]
pub struct TauOptions {
    pub emax: u32,
    pub max_iterations: u32,
    /// Whether to run the direct-sum oracle for a minimality certificate.
    pub certify: bool,
    pub certificate_max_terms: usize,
}

impl Default for TauOptions {
    fn default() -> Self {
        TauOptions {
            emax: DEFAULT_EMAX,
            max_iterations: 10_000,
            certify: true,
            certificate_max_terms: 50_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// The partial-sum oracle stabilized on the same ideal.
    OracleVerified,
    Unverified,
}

/// Outcome of sampling generators `d` of an outside-Q test ideal and
/// checking that the stable ideal generated by `d` recovers the seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeedCheck {
    pub sampled: usize,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct TauResult {
    pub ideal: Ideal,
    /// Level of the map actually iterated.
    pub levels_used: u32,
    pub iterations: u32,
    /// Re-verified after the loop: `φ(F_* τ) ⊆ τ`.
    pub stable: bool,
    pub minimality_certificate: Certificate,
    pub seeds: Vec<Poly>,
    pub seed_check: Option<SeedCheck>,
}

/// The map being iterated: `J ↦ (F·J)^[1/q] + I`.
pub(crate) struct Step {
    pub datum: MapDatum,
    pub twist: Poly,
    pub g: Poly,
    pub t: Rational,
}

impl Step {
    pub(crate) fn untwisted(datum: &MapDatum) -> Step {
        let one = Poly::one(datum.ring());
        Step {
            datum: datum.clone(),
            twist: datum.multiplier().clone(),
            g: one,
            t: Rational::from_integer(0),
        }
    }

    /// Composes the datum up to the first level where `t(q − 1)` is an
    /// integer `s`, and folds `g^s` into the multiplier.
    pub(crate) fn twisted(spec: &TripleSpec, emax: u32) -> Result<Step> {
        let d = &spec.datum;
        let (level, s) = integral_level(&spec.t, d.p(), d.level(), emax)?;
        let datum = d.compose(level / d.level())?;
        let twist = datum.multiplier().checked_mul(&spec.g.checked_pow(s)?)?;
        Ok(Step {
            datum,
            twist,
            g: spec.g.clone(),
            t: spec.t,
        })
    }

    fn closure(&self, seeds: &[Poly], max_iterations: u32) -> Result<(Ideal, u32)> {
        let ring = self.datum.ring();
        let modulus = self.datum.modulus();
        let q = self.datum.q();
        let mut gens: Vec<Poly> = seeds.to_vec();
        gens.extend(modulus.gens().iter().cloned());
        let mut j = Ideal::new(ring, gens)?;
        for it in 0..max_iterations {
            let basis = j.groebner()?.to_vec();
            let mut fresh = Vec::new();
            for g in &basis {
                for c in root_components(&self.twist.checked_mul(g)?, q)? {
                    if !j.contains_poly(&c)? && !fresh.contains(&c) {
                        fresh.push(c);
                    }
                }
            }
            if fresh.is_empty() {
                return Ok((j, it));
            }
            log::debug!("iteration {it}: {} new generators", fresh.len());
            let mut next = basis;
            next.extend(fresh);
            j = Ideal::new(ring, next)?;
        }
        Err(Error::BudgetExceeded {
            limit: max_iterations as u64,
        })
    }

    fn is_stable(&self, j: &Ideal) -> Result<bool> {
        let image = frobenius_root(&j.scale(&self.twist)?, self.datum.q())?;
        j.contains(&image.sum(self.datum.modulus())?)
    }

    fn certificate(
        &self,
        seeds: &[Poly],
        result: &Ideal,
        iterations: u32,
        opts: &TauOptions,
    ) -> Result<Certificate> {
        if !opts.certify {
            return Ok(Certificate::Unverified);
        }
        let sum = match tau_by_direct_sum_bounded(
            &self.datum,
            seeds,
            &self.g,
            &self.t,
            iterations + 2,
            opts.certificate_max_terms,
        ) {
            Ok(s) => s,
            Err(e) if e.is_refusal() || matches!(e, Error::Overflow(_)) => {
                return Ok(Certificate::Unverified)
            }
            Err(e) => return Err(e),
        };
        if !sum.stabilized {
            return Ok(Certificate::Unverified);
        }
        if !sum.ideal.equals(result)? {
            return Err(Error::Discrepancy(format!(
                "iteration gave {result} but the direct sum gave {}",
                sum.ideal
            )));
        }
        Ok(Certificate::OracleVerified)
    }

    pub(crate) fn run(&self, seeds: Vec<Poly>, opts: &TauOptions) -> Result<TauResult> {
        let modulus = self.datum.modulus();
        if seeds.is_empty() {
            return Err(Error::InvalidArgument("no seed given".into()));
        }
        for b in &seeds {
            if b.ring() != self.datum.ring() {
                return Err(Error::RingMismatch);
            }
            if modulus.contains_poly(b)? {
                return Err(Error::InvalidArgument(format!("seed {b} lies in the modulus")));
            }
        }
        let (ideal, iterations) = self.closure(&seeds, opts.max_iterations)?;
        let stable = self.is_stable(&ideal)?;
        let minimality_certificate = self.certificate(&seeds, &ideal, iterations, opts)?;
        Ok(TauResult {
            ideal,
            levels_used: self.datum.level(),
            iterations,
            stable,
            minimality_certificate,
            seeds,
            seed_check: None,
        })
    }

    /// Whether the stable ideal generated by `d` contains `b`.
    pub(crate) fn recovers(&self, d: &Poly, b: &Poly, max_iterations: u32) -> Result<bool> {
        let (j, _) = self.closure(std::slice::from_ref(d), max_iterations)?;
        j.contains_poly(b)
    }
}

/// The smallest φ-stable ideal containing `seed` (and the modulus).
pub fn tau_smallest(datum: &MapDatum, seed: &Poly) -> Result<TauResult> {
    Step::untwisted(datum).run(vec![seed.clone()], &TauOptions::default())
}

/// The smallest φ-stable ideal containing the given seeds, by default the
/// generators of [`seed_ideal`].
pub fn tau_smallest_ideal(
    datum: &MapDatum,
    seeds: Option<&Ideal>,
    opts: &TauOptions,
) -> Result<TauResult> {
    let seeds = match seeds {
        Some(s) => s.gens().to_vec(),
        None => seed_ideal(datum)?.gens().to_vec(),
    };
    Step::untwisted(datum).run(seeds, opts)
}

/// The smallest ideal containing the seeds and stable under
/// `J ↦ φ(F_* g^{t(q−1)} J)` at the first level where `t(q − 1)` is
/// integral. The default seeds are those of [`seed_ideal`] times
/// `g^{⌈t⌉}`.
pub fn tau_triple(spec: &TripleSpec, seeds: Option<&Ideal>, opts: &TauOptions) -> Result<TauResult> {
    let step = Step::twisted(spec, opts.emax)?;
    let seeds = match seeds {
        Some(s) => s.gens().to_vec(),
        None => default_triple_seeds(spec)?,
    };
    step.run(seeds, opts)
}

pub(crate) fn default_triple_seeds(spec: &TripleSpec) -> Result<Vec<Poly>> {
    let lift = spec.g.checked_pow(ceil_mul(&spec.t, 1)?)?;
    let modulus = spec.datum.modulus();
    let mut out = Vec::new();
    for b in seed_ideal(&spec.datum)?.gens() {
        let c = b.checked_mul(&lift)?;
        if !modulus.contains_poly(&c)? {
            out.push(c);
        }
    }
    if out.is_empty() {
        return Err(Error::Unsupported(
            "cannot choose a test-element seed: every candidate lies in the modulus".into(),
        ));
    }
    Ok(out)
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
    fn cross_and_trivial() {
        let r = ring(2, &["x", "y"]);
        let xy = parse_poly(&r, "x*y").unwrap();
        let d = MapDatum::on_ambient(xy.clone(), 1).unwrap();
        let t = tau_smallest(&d, &xy).unwrap();
        assert!(t.stable);
        assert_eq!(t.minimality_certificate, Certificate::OracleVerified);
        assert!(t.ideal.equals(&Ideal::principal(&xy)).unwrap());
        let one = Poly::one(&r);
        let d = MapDatum::on_ambient(one.clone(), 1).unwrap();
        assert!(tau_smallest(&d, &one).unwrap().ideal.is_unit().unwrap());
    }

    #[test]
    fn twisted_cross() {
        let r = ring(2, &["x", "y"]);
        let xy = parse_poly(&r, "x*y").unwrap();
        let d = MapDatum::on_ambient(xy.clone(), 1).unwrap();
        let spec = TripleSpec::new(d, xy, Rational::from_integer(1)).unwrap();
        let t = tau_triple(&spec, None, &TauOptions::default()).unwrap();
        assert!(t.ideal.equals(&ideal(&r, &["x^2*y^2"])).unwrap());
        assert_eq!(t.minimality_certificate, Certificate::OracleVerified);
    }

    #[test]
    fn fractional_exponents_need_a_level() {
        // t = 1/3 at p = 2 is integral only from level 2 on
        let r = ring(2, &["x"]);
        let x = parse_poly(&r, "x").unwrap();
        let d = MapDatum::on_ambient(Poly::one(&r), 1).unwrap();
        let spec = TripleSpec::new(d, x.clone(), Rational::new(1, 3)).unwrap();
        let t = tau_triple(&spec, None, &TauOptions::default()).unwrap();
        assert_eq!(t.levels_used, 2);
        assert!(t.ideal.is_unit().unwrap());
        let spec = TripleSpec::new(spec.datum.clone(), x, Rational::new(1, 5)).unwrap();
        let opts = TauOptions {
            emax: 3,
            ..TauOptions::default()
        };
        assert!(matches!(
            tau_triple(&spec, None, &opts),
            Err(Error::IncompatibleExponentDenominator { den: 5, emax: 3 })
        ));
    }

    #[test]
    fn threshold_of_a_variable() {
        // τ(x^t) = (x^{⌊t⌋}); at t = 1 the seed x gives (x)
        let r = ring(2, &["x"]);
        let x = parse_poly(&r, "x").unwrap();
        let d = MapDatum::on_ambient(Poly::one(&r), 1).unwrap();
        let spec = TripleSpec::new(d, x.clone(), Rational::from_integer(1)).unwrap();
        let t = tau_triple(&spec, None, &TauOptions::default()).unwrap();
        assert!(t.ideal.equals(&Ideal::principal(&x)).unwrap());
    }
}
