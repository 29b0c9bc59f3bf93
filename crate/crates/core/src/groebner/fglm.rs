//! Change of monomial order for zero-dimensional ideals, by linear algebra
//! on the finite-dimensional quotient (FGLM).

use std::collections::{HashMap, HashSet};

use crate::algebra::linalg::{Echelon, SparseVec};
use crate::algebra::{Monomial, Poly, RingRef, Term};
use crate::error::Result;

use super::buchberger::normal_form_gb;

/// Standard monomials of a zero-dimensional leading-term ideal.
fn staircase(leads: &[Monomial], n: usize) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut seen: HashSet<Monomial> = out.iter().copied().collect();
    let mut k = 0;
    while k < out.len() {
        let m = out[k];
        for i in 0..n {
            let next = m.checked_mul(&Monomial::var(i)).expect("staircase exponent");
            if !leads.iter().any(|l| l.divides(&next)) && seen.insert(next) {
                out.push(next);
            }
        }
        k += 1;
    }
    out
}

/// Converts the reduced basis `gb` (of any order) into the reduced basis
/// for the order of `target`, a ring with the same variables. Returns
/// `None` when the ideal is not zero-dimensional.
pub(crate) fn fglm(gb: &[Poly], target: &RingRef) -> Result<Option<Vec<Poly>>> {
    let Some(first) = gb.first() else {
        return Ok(None);
    };
    let source = first.ring().clone();
    let n = source.nvars();
    if gb.iter().any(|g| g.is_unit()) {
        return Ok(Some(vec![Poly::one(target)]));
    }
    let leads: Vec<Monomial> = gb.iter().filter_map(|g| g.lead_monomial()).collect();
    let pure = |i: usize| leads.iter().any(|l| l.support_mask() == 1 << i);
    if !(0..n).all(pure) {
        return Ok(None);
    }
    let basis = staircase(&leads, n);
    let dim = basis.len();
    let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let coords = |f: &Poly| -> SparseVec {
        f.terms()
            .iter()
            .map(|t| (index[&t.mono], t.coeff))
            .collect()
    };

    let order = target.order();
    let mut echelon = Echelon::new(*source.field());
    // accepted monomials of the new staircase and their normal forms
    let mut accepted: Vec<(Monomial, Poly)> = Vec::new();
    let mut new_leads: Vec<Monomial> = Vec::new();
    let mut out: Vec<Poly> = Vec::new();
    // candidates: monomial and the normal form it is computed from
    let mut candidates: Vec<(Monomial, Option<(usize, usize)>)> = vec![(Monomial::one(), None)];
    let mut queued: HashSet<Monomial> = HashSet::from([Monomial::one()]);

    while !candidates.is_empty() {
        let best = (0..candidates.len())
            .min_by(|&a, &b| order.cmp(&candidates[a].0, &candidates[b].0))
            .unwrap();
        let (m, origin) = candidates.swap_remove(best);
        if new_leads.iter().any(|l| l.divides(&m)) {
            continue;
        }
        let nf = match origin {
            None => normal_form_gb(&source, &Poly::one(&source), gb)?,
            Some((parent, var)) => {
                let shifted = accepted[parent].1.mul_term(&Monomial::var(var), 1)?;
                normal_form_gb(&source, &shifted, gb)?
            }
        };
        let mut v = coords(&nf);
        let own = dim + accepted.len();
        v.insert(own, 1);
        let reduced = echelon.reduce(v);
        if reduced.range(..dim).next().is_none() {
            // m ≡ −Σ c_j b_j: a new basis element with leading monomial m
            let terms = reduced
                .iter()
                .map(|(&col, &coeff)| {
                    let mono = if col == own { m } else { accepted[col - dim].0 };
                    Term { mono, coeff }
                })
                .collect();
            out.push(Poly::from_unsorted(target, terms).monic());
            new_leads.push(m);
            continue;
        }
        echelon.insert(reduced);
        accepted.push((m, nf));
        let parent = accepted.len() - 1;
        for var in 0..n {
            let next = m.checked_mul(&Monomial::var(var))?;
            if !new_leads.iter().any(|l| l.divides(&next)) && queued.insert(next) {
                candidates.push((next, Some((parent, var))));
            }
        }
    }
    out.sort_by(|a, b| order.cmp(&a.lead_monomial().unwrap(), &b.lead_monomial().unwrap()));
    Ok(Some(out))
}
