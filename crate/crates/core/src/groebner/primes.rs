//! Minimal primes for a few supported classes of ideals.
//!
//! The reduced Gröbner basis is split into its linear part `L` (whose leading
//! variables appear nowhere else) and the remaining elements, which then live
//! in the free variables. Supported shapes of the remainder:
//! no elements, only monomials, a single polynomial the restricted
//! factorizer can split, or univariate elements in pairwise distinct
//! variables (finite sets of points).

use super::factor::factor_restricted;
use super::ideal::Ideal;
use crate::algebra::Poly;
use crate::error::{Error, Result};

/// The minimal primes of `I`, or `Unsupported` with the reason.
/// `attested` polynomials are offered to the factorizer as known
/// irreducible factors.
pub fn min_primes_restricted(ideal: &Ideal, attested: &[Poly]) -> Result<Vec<Ideal>> {
    let ring = ideal.ring().clone();
    if ideal.is_unit()? {
        return Ok(Vec::new());
    }
    let gb = ideal.groebner()?;
    let (linear, rest): (Vec<Poly>, Vec<Poly>) =
        gb.iter().cloned().partition(|g| g.total_degree() == Some(1));

    let extend = |extra: Vec<Poly>| -> Result<Ideal> {
        let mut gens = linear.clone();
        gens.extend(extra);
        Ideal::new(&ring, gens)
    };

    let candidates: Vec<Ideal> = if rest.is_empty() {
        vec![ideal.clone()]
    } else if rest.iter().all(|g| g.is_monomial()) {
        let supports: Vec<u32> = rest.iter().map(|g| g.variable_mask()).collect();
        minimal_covers(&supports, ring.nvars())
            .into_iter()
            .map(|cover| {
                extend(
                    (0..ring.nvars())
                        .filter(|i| cover >> i & 1 == 1)
                        .map(|i| ring.var(i))
                        .collect(),
                )
            })
            .collect::<Result<_>>()?
    } else if rest.len() == 1 {
        let fac = factor_restricted(&rest[0], attested).map_err(|e| match e {
            Error::FactorizationUnavailable(s) => {
                Error::Unsupported(format!("min_primes: cannot factor {s}"))
            }
            other => other,
        })?;
        fac.factors
            .into_iter()
            .map(|(h, _)| extend(vec![h]))
            .collect::<Result<_>>()?
    } else if let Some(points) = univariate_product(&rest, attested)? {
        points
            .into_iter()
            .map(extend)
            .collect::<Result<_>>()?
    } else {
        return Err(Error::Unsupported(format!(
            "min_primes: ideal {} is outside the supported classes",
            ideal.canonical_string()?
        )));
    };

    // keep only the minimal ones, without duplicates
    let mut out: Vec<Ideal> = Vec::new();
    for c in candidates {
        let mut dominated = false;
        for o in &out {
            if c.contains(o)? {
                dominated = true;
                break;
            }
        }
        if dominated {
            continue;
        }
        let mut kept = Vec::with_capacity(out.len() + 1);
        for o in out {
            if !o.contains(&c)? {
                kept.push(o);
            }
        }
        kept.push(c);
        out = kept;
    }
    for o in &out {
        o.groebner()?;
    }
    Ok(out)
}

/// Minimal sets of variables meeting every support in `supports`.
fn minimal_covers(supports: &[u32], n: usize) -> Vec<u32> {
    let mut covers: Vec<u32> = Vec::new();
    let mut all: Vec<u32> = (0u32..(1u32 << n))
        .filter(|c| supports.iter().all(|s| s & c != 0))
        .collect();
    all.sort_by_key(|c| (c.count_ones(), *c));
    for c in all {
        if !covers.iter().any(|d| d & c == *d) {
            covers.push(c);
        }
    }
    covers
}

/// For GB elements each univariate in its own variable, the primes are
/// the products of one irreducible factor per element; this holds as long
/// as the residue fields are linearly disjoint, i.e. the factor degrees
/// are pairwise coprime.
fn univariate_product(rest: &[Poly], attested: &[Poly]) -> Result<Option<Vec<Vec<Poly>>>> {
    let mut seen: u32 = 0;
    let mut choices: Vec<Vec<Poly>> = Vec::new();
    for g in rest {
        let mask = g.variable_mask();
        if mask.count_ones() != 1 || seen & mask != 0 {
            return Ok(None);
        }
        seen |= mask;
        let fac = factor_restricted(g, attested)?;
        choices.push(fac.factors.into_iter().map(|(h, _)| h).collect());
    }
    let mut combos: Vec<Vec<Poly>> = vec![Vec::new()];
    for options in &choices {
        let mut next = Vec::new();
        for partial in &combos {
            for h in options {
                let mut c = partial.clone();
                c.push(h.clone());
                next.push(c);
            }
        }
        combos = next;
    }
    for combo in &combos {
        let degrees: Vec<u32> = combo.iter().filter_map(|h| h.total_degree()).collect();
        for i in 0..degrees.len() {
            for j in i + 1..degrees.len() {
                if num_integer::gcd(degrees[i], degrees[j]) != 1 {
                    return Err(Error::Unsupported(format!(
                        "min_primes: residue fields of degrees {} and {} are not disjoint",
                        degrees[i], degrees[j]
                    )));
                }
            }
        }
    }
    Ok(Some(combos))
}

/// Whether `I` is prime, decided within the supported classes.
pub fn is_prime(ideal: &Ideal, attested: &[Poly]) -> Result<bool> {
    if ideal.is_unit()? {
        return Ok(false);
    }
    let primes = min_primes_restricted(ideal, attested)?;
    Ok(primes.len() == 1 && primes[0].equals(ideal)?)
}
