//! Choice of default seeds: elements known to lie in the test ideal.

use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::frobenius::bracket_power;
use crate::groebner::Ideal;
use crate::maps::{extract_generator, MapDatum};

const MAX_MINORS: usize = 5_000;

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn determinant(m: &[Vec<Poly>]) -> Result<Poly> {
    let n = m.len();
    let ring = m[0][0].ring();
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut acc = Poly::zero(ring);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = entry.checked_mul(&determinant(&minor)?)?;
        acc = if j % 2 == 0 {
            acc.checked_add(&term)?
        } else {
            acc.checked_sub(&term)?
        };
    }
    Ok(acc)
}

/// The ideal of `h × h` minors of the Jacobian matrix of `I`, plus `I`,
/// where `h` is the height of `I`.
pub fn jacobian_ideal(ideal: &Ideal) -> Result<Ideal> {
    let ring = ideal.ring();
    let h = ideal
        .height()?
        .ok_or_else(|| Error::InvalidArgument("the unit ideal has no Jacobian ideal".into()))?;
    if h == 0 {
        return Ok(Ideal::unit(ring));
    }
    let gens = ideal.groebner()?.to_vec();
    if gens.iter().all(|g| g.total_degree().is_some_and(|d| d <= 1)) {
        return Ok(Ideal::unit(ring));
    }
    let n = ring.nvars();
    let jac: Vec<Vec<Poly>> = gens
        .iter()
        .map(|g| (0..n).map(|i| g.derivative(i)).collect())
        .collect();
    let rows = subsets(gens.len(), h);
    let cols = subsets(n, h);
    if rows.len().saturating_mul(cols.len()) > MAX_MINORS {
        return Err(Error::Unsupported(format!(
            "too many Jacobian minors ({} x {})",
            rows.len(),
            cols.len()
        )));
    }
    let mut minors = gens.clone();
    for r in &rows {
        for c in &cols {
            let sub: Vec<Vec<Poly>> = r
                .iter()
                .map(|&i| c.iter().map(|&j| jac[i][j].clone()).collect())
                .collect();
            let d = determinant(&sub)?;
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    Ideal::new(ring, minors)
}

/// Default seeds for the test-ideal iteration on `S/I`.
///
/// On the polynomial ring this is `(f)`. Otherwise, with `f_e` the
/// generator of `(I^[q] : I)` modulo `I^[q]`, it is the product of
/// `(I^[q] + (f)) : f_e` with the Jacobian ideal of `I`, keeping only
/// elements outside `I`.
pub fn seed_ideal(datum: &MapDatum) -> Result<Ideal> {
    let ring = datum.ring();
    let modulus = datum.modulus();
    let f = datum.multiplier();
    if datum.is_zero_map() {
        return Err(Error::InvalidArgument("the zero map has no test ideal".into()));
    }
    if modulus.is_zero_ideal() {
        return Ok(Ideal::principal(f));
    }
    let cannot = |why: String| Error::Unsupported(format!("cannot choose a test-element seed: {why}"));
    let fe = match extract_generator(modulus, datum.level()) {
        Ok(g) if !g.is_zero() => g,
        Ok(_) => return Err(cannot("the Fedder colon adds nothing".into())),
        Err(e @ Error::NotPrincipal { .. }) => return Err(cannot(e.to_string())),
        Err(e) => return Err(e),
    };
    let bracket = bracket_power(modulus, datum.q())?;
    let c = bracket.add_poly(f)?.colon_poly(&fe)?;
    let seeds = c.product(&jacobian_ideal(modulus)?)?;
    let mut kept = Vec::new();
    for g in seeds.groebner()? {
        if !modulus.contains_poly(g)? {
            kept.push(g.clone());
        }
    }
    if kept.is_empty() {
        return Err(cannot("every candidate lies in the modulus".into()));
    }
    Ideal::new(ring, kept)
}
