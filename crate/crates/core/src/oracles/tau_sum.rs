//! Test ideals as literal partial sums of Frobenius roots, and the
//! lattice-point formula for principal monomial ideals.

use crate::algebra::{prime_power, Monomial, Poly};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::maps::rational::{ceil_mul, Rational};
use crate::maps::MapDatum;

/// Default cap on the number of terms of any product formed by
/// [`tau_by_direct_sum`].
pub const DEFAULT_MAX_TERMS: usize = 200_000;

/// Result of the partial-sum oracle.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub ideal: Ideal,
    /// Two consecutive partial sums agreed and one further term added
    /// nothing.
    pub stabilized: bool,
    /// Number of terms summed (the `n = 0` term included).
    pub terms: u32,
}

fn checked_product(a: &Poly, b: &Poly, max_terms: usize) -> Result<Poly> {
    if a.len().saturating_mul(b.len()) > max_terms.saturating_mul(8) {
        return Err(Error::Unsupported("direct-sum oracle: product too large".into()));
    }
    let c = a.checked_mul(b)?;
    if c.len() > max_terms {
        return Err(Error::Unsupported("direct-sum oracle: product too large".into()));
    }
    Ok(c)
}

fn checked_power(f: &Poly, mut k: u64, max_terms: usize) -> Result<Poly> {
    let mut acc = Poly::one(f.ring());
    let mut base = f.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = checked_product(&acc, &base, max_terms)?;
        }
        k >>= 1;
        if k > 0 {
            base = checked_product(&base, &base, max_terms)?;
        }
    }
    Ok(acc)
}

/// `Σ_{n ≤ nmax} (f^{(q^n−1)/(q−1)} · b · g^{⌈t(q^n−1)⌉})^{[1/q^n]} + I`
/// summed over the seeds `b`, term by term from digit decompositions.
pub fn tau_by_direct_sum(
    datum: &MapDatum,
    seeds: &[Poly],
    g: &Poly,
    t: &Rational,
    nmax: u32,
) -> Result<DirectSum> {
    tau_by_direct_sum_bounded(datum, seeds, g, t, nmax, DEFAULT_MAX_TERMS)
}

/// [`tau_by_direct_sum`] with an explicit size guard; exceeding it yields
/// `Unsupported`.
pub fn tau_by_direct_sum_bounded(
    datum: &MapDatum,
    seeds: &[Poly],
    g: &Poly,
    t: &Rational,
    nmax: u32,
    max_terms: usize,
) -> Result<DirectSum> {
    let ring = datum.ring();
    let p = ring.p();
    let e = datum.level();
    let modulus = datum.modulus();
    let mut gens: Vec<Poly> = modulus.gens().to_vec();
    let mut sums: Vec<Ideal> = Vec::new();
    for n in 0..=nmax {
        let qn = prime_power(p, e * n)?;
        // (q^n − 1)/(q − 1) computed directly
        let q = prime_power(p, e)?;
        let exponent = (qn - 1) / (q - 1);
        let f_n = checked_power(datum.multiplier(), exponent, max_terms)?;
        let g_n = checked_power(g, ceil_mul(t, qn - 1)?, max_terms)?;
        let base = checked_product(&f_n, &g_n, max_terms)?;
        for b in seeds {
            let h = checked_product(&base, b, max_terms)?;
            if qn == 1 {
                gens.push(h);
            } else {
                gens.extend(h.pe_decompose(qn)?.into_values());
            }
        }
        sums.push(Ideal::new(ring, gens.clone())?);
        let k = sums.len();
        if k >= 3 && sums[k - 3].contains(&sums[k - 2])? && sums[k - 2].contains(&sums[k - 1])? {
            return Ok(DirectSum {
                ideal: sums.pop().unwrap(),
                stabilized: true,
                terms: n + 1,
            });
        }
    }
    Ok(DirectSum {
        ideal: sums.pop().unwrap(),
        stabilized: false,
        terms: nmax + 1,
    })
}

/// `τ((x^a)^t) = (x^{⌊t·a⌋})` for a monomial `x^a`.
pub fn monomial_tau_formula(g: &Poly, t: &Rational) -> Result<Ideal> {
    if !g.is_monomial() || g.is_zero() {
        return Err(Error::InvalidArgument(format!("{g} is not a monomial")));
    }
    let m = g.lead_monomial().unwrap();
    let n = g.ring().nvars();
    let exps: Vec<u32> = (0..n)
        .map(|i| {
            let v = Rational::from_integer(m.exp(i) as u64) * *t;
            u32::try_from(v.floor().to_integer())
                .map_err(|_| Error::Overflow("monomial formula exponent".into()))
        })
        .collect::<Result<_>>()?;
    Ok(Ideal::principal(&Poly::monomial(
        g.ring(),
        Monomial::from_exponents(&exps)?,
        1,
    )))
}
