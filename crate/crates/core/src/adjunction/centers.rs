//! Centers of sharp F-purity: primes compatible with the map at whose
//! generic point the map stays surjective.

use rayon::prelude::*;

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::groebner::{min_primes_restricted, Ideal};
use crate::maps::MapDatum;

use super::restrict::restrict;
use super::tau::{tau_smallest_ideal, TauOptions};

#[derive(Clone, Debug)]
pub enum CenterMode {
    /// Filter an explicit list of primes.
    Candidates(Vec<Ideal>),
    /// Recursive search through test ideals and their minimal primes;
    /// `attested` polynomials are trusted irreducible by the factorizer.
    Auto { attested: Vec<Poly> },
}

#[derive(Clone, Debug)]
pub struct CenterReport {
    pub prime: Ideal,
    pub compatible: bool,
    pub pure_at_generic_point: bool,
    /// The restricted map, present exactly when the prime is a center.
    pub restricted_datum: Option<MapDatum>,
}

impl CenterReport {
    pub fn is_center(&self) -> bool {
        self.restricted_datum.is_some()
    }
}

fn sort_key(p: &Ideal) -> Result<(usize, String)> {
    Ok((p.height()?.unwrap_or(usize::MAX), p.canonical_string()?))
}

fn candidate_report(datum: &MapDatum, image: &Ideal, p: &Ideal) -> Result<CenterReport> {
    let compatible = datum.is_compatible(p)?;
    let full = p.sum(datum.modulus())?;
    let pure_at_generic_point = !full.contains(image)?;
    let restricted_datum = if compatible && pure_at_generic_point {
        Some(MapDatum::new(full, datum.level(), datum.multiplier().clone())?)
    } else {
        None
    };
    Ok(CenterReport {
        prime: p.clone(),
        compatible,
        pure_at_generic_point,
        restricted_datum,
    })
}

/// Minimal primes of the test ideal of `datum` strictly containing its
/// modulus; each must be compatible.
fn next_centers(datum: &MapDatum, attested: &[Poly]) -> Result<Vec<Ideal>> {
    let opts = TauOptions {
        certify: false,
        ..TauOptions::default()
    };
    let tau = tau_smallest_ideal(datum, None, &opts)?.ideal;
    if tau.is_unit()? {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for p in min_primes_restricted(&tau, attested)? {
        if p.equals(datum.modulus())? {
            continue;
        }
        if !datum.is_compatible(&p)? {
            return Err(Error::Discrepancy(format!(
                "minimal prime {p} of the test ideal {tau} is not compatible"
            )));
        }
        out.push(p);
    }
    Ok(out)
}

fn auto(datum: &MapDatum, attested: &[Poly]) -> Result<Vec<CenterReport>> {
    if !datum.image_ideal()?.is_unit()? {
        return Err(Error::Unsupported(
            "automatic enumeration needs a surjective map (sharp F-purity)".into(),
        ));
    }
    let mut found: Vec<(String, CenterReport)> = Vec::new();
    let mut frontier = vec![datum.clone()];
    while !frontier.is_empty() {
        let branches: Vec<Result<Vec<Ideal>>> = frontier
            .par_iter()
            .map(|d| next_centers(d, attested))
            .collect();
        let mut next = Vec::new();
        for branch in branches {
            let primes = branch.map_err(|e| match e {
                Error::Unsupported(msg) | Error::FactorizationUnavailable(msg) => {
                    let partial: Vec<String> =
                        found.iter().map(|(_, r)| r.prime.to_string()).collect();
                    Error::Unsupported(format!(
                        "{msg}; centers found so far (partial): [{}]",
                        partial.join(", ")
                    ))
                }
                other => other,
            })?;
            for p in primes {
                let key = p.canonical_string()?;
                if found.iter().any(|(k, _)| *k == key) {
                    continue;
                }
                let restricted = restrict(datum, &p)?;
                next.push(restricted.clone());
                found.push((
                    key,
                    CenterReport {
                        prime: p,
                        compatible: true,
                        pure_at_generic_point: true,
                        restricted_datum: Some(restricted),
                    },
                ));
            }
        }
        frontier = next;
    }
    Ok(found.into_iter().map(|(_, r)| r).collect())
}

/// Centers of the datum. In candidates mode every supplied prime gets a
/// report (in the order given); in auto mode only centers are returned,
/// sorted by height and then by their canonical form.
pub fn enumerate_centers(datum: &MapDatum, mode: &CenterMode) -> Result<Vec<CenterReport>> {
    match mode {
        CenterMode::Candidates(list) => {
            let image = datum.image_ideal()?;
            list.par_iter()
                .map(|p| {
                    if p.ring() != datum.ring() {
                        return Err(Error::RingMismatch);
                    }
                    candidate_report(datum, &image, p)
                })
                .collect()
        }
        CenterMode::Auto { attested } => {
            let mut reports = auto(datum, attested)?;
            let mut keyed = reports
                .drain(..)
                .map(|r| Ok((sort_key(&r.prime)?, r)))
                .collect::<Result<Vec<_>>>()?;
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            Ok(keyed.into_iter().map(|(_, r)| r).collect())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, MonomialOrder, Ring, RingRef};

    fn ideal(r: &RingRef, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_poly(r, g).unwrap()).collect()).unwrap()
    }

    fn centers(reports: &[CenterReport]) -> Vec<String> {
        reports
            .iter()
            .filter(|r| r.is_center())
            .map(|r| r.prime.canonical_string().unwrap())
            .collect()
    }

    #[test]
    fn cross_candidates_and_auto() {
        let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let d = MapDatum::on_ambient(parse_poly(&r, "x*y").unwrap(), 1).unwrap();
        let list = vec![
            ideal(&r, &["x"]),
            ideal(&r, &["y"]),
            ideal(&r, &["x", "y"]),
            ideal(&r, &["x + y"]),
        ];
        let reps = enumerate_centers(&d, &CenterMode::Candidates(list)).unwrap();
        assert_eq!(centers(&reps), ["(x)", "(y)", "(y, x)"]);
        assert!(!reps[3].compatible);
        let auto = enumerate_centers(&d, &CenterMode::Auto { attested: vec![] }).unwrap();
        assert_eq!(centers(&auto), ["(x)", "(y)", "(y, x)"]);
    }

    #[test]
    fn auto_needs_surjectivity() {
        let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let d = MapDatum::on_ambient(parse_poly(&r, "x^2").unwrap(), 1).unwrap();
        assert!(matches!(
            enumerate_centers(&d, &CenterMode::Auto { attested: vec![] }),
            Err(Error::Unsupported(_))
        ));
    }
}
