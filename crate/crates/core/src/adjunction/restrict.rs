//! F-adjunction: restricting a map to a compatible subvariety, and the
//! test ideals that live outside it.

use serde::Serialize;

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::maps::{MapDatum, TripleSpec};

use super::seed::seed_ideal;
use super::tau::{tau_triple, SeedCheck, Step, TauOptions, TauResult};

/// Number of result generators sampled by the seed check of
/// [`tau_outside`].
const SEED_SAMPLE: usize = 4;

/// The induced map on `S/(I + Q)`: same level, same multiplier.
pub fn restrict(datum: &MapDatum, q: &Ideal) -> Result<MapDatum> {
    if q.ring() != datum.ring() {
        return Err(Error::RingMismatch);
    }
    let full = q.sum(datum.modulus())?;
    if !datum.is_compatible(q)? {
        return Err(Error::NotCompatible(format!(
            "φ does not map {full} into itself"
        )));
    }
    if full.contains(&datum.image_ideal()?)? {
        return Err(Error::NotPureAtGenericPoint(format!(
            "the image of φ lies in {full}"
        )));
    }
    MapDatum::new(full, datum.level(), datum.multiplier().clone())
}

/// Compares surjectivity at `m ⊇ Q` before and after restricting; a
/// disagreement is reported as a discrepancy.
pub fn purity_transfer_check(datum: &MapDatum, q: &Ideal, m: &Ideal) -> Result<bool> {
    let restricted = restrict(datum, q)?;
    if !m.contains(restricted.modulus())? {
        return Err(Error::InvalidArgument(format!(
            "{m} does not contain {}",
            restricted.modulus()
        )));
    }
    let before = datum.is_surjective_at(m)?;
    let after = restricted.is_surjective_at(m)?;
    if before != after {
        return Err(Error::Discrepancy(format!(
            "surjectivity at {m}: {before} on the ambient datum, {after} after restriction"
        )));
    }
    Ok(before)
}

/// Candidates compared by [`center_bijection_check`].
#[derive(Clone, Debug, Default, Serialize)]
pub struct BijectionReport {
    pub checked: usize,
    /// Candidates not containing `Q`.
    pub skipped: usize,
    pub compatible: Vec<String>,
    pub violations: Vec<String>,
}

/// For each candidate `P ⊇ Q`, compares compatibility with the datum and
/// with its restriction to `Q`.
pub fn center_bijection_check(
    datum: &MapDatum,
    q: &Ideal,
    candidates: &[Ideal],
) -> Result<BijectionReport> {
    let restricted = restrict(datum, q)?;
    let mut report = BijectionReport::default();
    for p in candidates {
        if !p.contains(q)? {
            report.skipped += 1;
            continue;
        }
        report.checked += 1;
        let a = datum.is_compatible(p)?;
        let b = restricted.is_compatible(p)?;
        if a != b {
            report.violations.push(p.to_string());
        } else if a {
            report.compatible.push(p.to_string());
        }
    }
    Ok(report)
}

/// The first element of the restricted seed ideal that is nonzero on
/// `S/(I + Q)`, times `g^{⌈t⌉}`.
fn default_outside_seed(spec: &TripleSpec, restricted: &MapDatum) -> Result<Poly> {
    let full = restricted.modulus();
    let lift = spec
        .g
        .checked_pow(crate::maps::rational::ceil_mul(&spec.t, 1)?)?;
    for b in seed_ideal(restricted)?.groebner()? {
        let c = b.checked_mul(&lift)?;
        if !full.contains_poly(&c)? {
            return Ok(c);
        }
    }
    Err(Error::Unsupported(format!(
        "cannot choose a seed outside {full}"
    )))
}

/// The smallest ideal stable under the twisted map and containing the seed
/// `b ∉ Q`. A small sample of result generators `d ∉ Q` is checked to
/// generate a stable ideal containing `b` again, which is reported in
/// `seed_check`.
pub fn tau_outside(
    spec: &TripleSpec,
    q: &Ideal,
    seed: Option<&Poly>,
    opts: &TauOptions,
) -> Result<TauResult> {
    let datum = &spec.datum;
    let restricted = restrict(datum, q)?;
    let full = restricted.modulus();
    let b = match seed {
        Some(b) => {
            if full.contains_poly(b)? {
                return Err(Error::SeedInQ(b.to_string()));
            }
            b.clone()
        }
        None => default_outside_seed(spec, &restricted)?,
    };
    let step = Step::twisted(spec, opts.emax)?;
    let mut result = step.run(vec![b.clone()], opts)?;
    let mut sampled = 0;
    let mut passed = true;
    for d in result.ideal.groebner()? {
        if sampled == SEED_SAMPLE {
            break;
        }
        if full.contains_poly(d)? {
            continue;
        }
        sampled += 1;
        if !step.recovers(d, &b, opts.max_iterations)? {
            passed = false;
            break;
        }
    }
    result.seed_check = Some(SeedCheck { sampled, passed });
    Ok(result)
}

#[derive(Clone, Debug)]
pub struct RestrictionCheck {
    pub holds: bool,
    /// `τ(⊄Q) + Q`.
    pub outside_plus_q: Ideal,
    /// The test ideal of the restricted triple, as an ideal of S.
    pub restricted: Ideal,
    pub seed: Poly,
}

/// Computes the outside-Q test ideal plus Q and the test ideal of the
/// restricted triple from the same seed, and compares them.
pub fn restriction_theorem_check(
    spec: &TripleSpec,
    q: &Ideal,
    seed: Option<&Poly>,
    opts: &TauOptions,
) -> Result<RestrictionCheck> {
    let outside = tau_outside(spec, q, seed, opts)?;
    let b = outside.seeds[0].clone();
    let lhs = outside.ideal.sum(q)?;
    let rspec = TripleSpec::new(restrict(&spec.datum, q)?, spec.g.clone(), spec.t)?;
    let rhs = tau_triple(&rspec, Some(&Ideal::principal(&b)), opts)?.ideal;
    Ok(RestrictionCheck {
        holds: lhs.equals(&rhs)?,
        outside_plus_q: lhs,
        restricted: rhs,
        seed: b,
    })
}
