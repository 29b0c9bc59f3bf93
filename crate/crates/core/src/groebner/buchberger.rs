//! Buchberger's algorithm with the sugar strategy and the
//! Gebauer–Möller installation of both Buchberger criteria.

use std::cmp::Ordering;

use crate::algebra::poly::Term;
use crate::algebra::{Monomial, Poly, Ring, RingRef};
use crate::error::{Error, Result};

pub(crate) struct GbPoly {
    pub terms: Vec<Term>,
    pub lead: Monomial,
    pub mask: u32,
    pub sugar: u32,
}

impl GbPoly {
    fn new(terms: Vec<Term>, sugar: u32) -> GbPoly {
        let lead = terms[0].mono;
        GbPoly {
            mask: lead.support_mask(),
            lead,
            terms,
            sugar,
        }
    }
}

#[derive(Clone, Copy)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// `a - c * m * b_tail`, where `b_tail` is sorted; `m * b_tail` stays sorted.
fn sub_mul(ring: &Ring, a: &[Term], b_tail: &[Term], m: &Monomial, c: u64) -> Result<Vec<Term>> {
    let field = ring.field();
    let order = ring.order();
    let neg_c = field.neg(c);
    let mut out = Vec::with_capacity(a.len() + b_tail.len());
    let (mut i, mut j) = (0, 0);
    while j < b_tail.len() {
        let bm = b_tail[j].mono.checked_mul(m)?;
        // copy the terms of a that are larger than bm
        while i < a.len() && order.cmp(&a[i].mono, &bm) == Ordering::Greater {
            out.push(a[i]);
            i += 1;
        }
        let bc = field.mul(b_tail[j].coeff, neg_c);
        if i < a.len() && a[i].mono == bm {
            let s = field.add(a[i].coeff, bc);
            if s != 0 {
                out.push(Term { mono: bm, coeff: s });
            }
            i += 1;
        } else {
            out.push(Term { mono: bm, coeff: bc });
        }
        j += 1;
    }
    out.extend_from_slice(&a[i..]);
    Ok(out)
}

fn find_reducer(polys: &[GbPoly], active: &[usize], m: &Monomial) -> Option<usize> {
    let mask = m.support_mask();
    active
        .iter()
        .copied()
        .find(|&k| polys[k].mask & !mask == 0 && polys[k].lead.divides(m))
}

/// Normal form of `f` modulo the active (monic) polynomials. With `full`
/// the tail is reduced too. Updates the sugar of the result.
fn normal_form(
    ring: &Ring,
    mut work: Vec<Term>,
    polys: &[GbPoly],
    active: &[usize],
    full: bool,
    sugar: &mut u32,
) -> Result<Vec<Term>> {
    let mut rem = Vec::new();
    let mut head = 0;
    while head < work.len() {
        let t = work[head];
        match find_reducer(polys, active, &t.mono) {
            Some(k) => {
                let g = &polys[k];
                let m = g.lead.quotient_of(&t.mono).unwrap();
                *sugar = (*sugar).max(m.degree() + g.sugar);
                work = sub_mul(ring, &work[head + 1..], &g.terms[1..], &m, t.coeff)?;
                head = 0;
            }
            None if full => {
                rem.push(t);
                head += 1;
            }
            None => {
                rem.extend_from_slice(&work[head..]);
                return Ok(rem);
            }
        }
    }
    Ok(rem)
}

fn make_monic(ring: &Ring, terms: &mut [Term]) {
    let field = ring.field();
    let lc = terms[0].coeff;
    if lc != 1 {
        let inv = field.inv(lc);
        for t in terms.iter_mut() {
            t.coeff = field.mul(t.coeff, inv);
        }
    }
}

fn s_polynomial(ring: &Ring, polys: &[GbPoly], pair: &Pair) -> Result<Vec<Term>> {
    let (f, g) = (&polys[pair.i], &polys[pair.j]);
    let mf = f.lead.quotient_of(&pair.lcm).unwrap();
    let mg = g.lead.quotient_of(&pair.lcm).unwrap();
    let f_part: Vec<Term> = f.terms[1..]
        .iter()
        .map(|t| Ok(Term { mono: t.mono.checked_mul(&mf)?, coeff: t.coeff }))
        .collect::<Result<_>>()?;
    sub_mul(ring, &f_part, &g.terms[1..], &mg, 1)
}

fn make_pair(polys: &[GbPoly], i: usize, j: usize) -> Pair {
    let (f, g) = (&polys[i], &polys[j]);
    let lcm = f.lead.lcm(&g.lead);
    let sugar = (f.sugar + lcm.degree() - f.lead.degree()).max(g.sugar + lcm.degree() - g.lead.degree());
    Pair { i, j, lcm, sugar }
}

/// Gebauer–Möller update after adding `polys[h]`.
fn update(polys: &[GbPoly], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
    let hl = polys[h].lead;
    let mut candidates: Vec<Pair> = active.iter().map(|&g| make_pair(polys, g, h)).collect();
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = candidates.pop() {
        let coprime = hl.is_coprime(&polys[p.i].lead);
        if coprime
            || !candidates
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm))
        {
            kept.push(p);
        }
    }
    kept.retain(|p| !hl.is_coprime(&polys[p.i].lead));
    pairs.retain(|p| {
        !(hl.divides(&p.lcm)
            && polys[p.i].lead.lcm(&hl) != p.lcm
            && polys[p.j].lead.lcm(&hl) != p.lcm)
    });
    pairs.extend(kept);
    active.retain(|&g| !hl.divides(&polys[g].lead));
    active.push(h);
}

/// Reduced Gröbner basis of the ideal generated by `gens` (all in `ring`),
/// sorted by increasing leading monomial. The zero ideal gives an empty basis.
/// Returns the basis and the number of S-polynomial reductions performed.
pub(crate) fn reduced_groebner(ring: &RingRef, gens: &[Poly]) -> Result<(Vec<Poly>, u64)> {
    let order = ring.order();
    let budget = ring.context().budget();
    let mut inputs: Vec<&Poly> = gens.iter().filter(|g| !g.is_zero()).collect();
    if inputs.iter().any(|g| g.is_unit()) {
        return Ok((vec![Poly::one(ring)], 0));
    }
    inputs.sort_by(|a, b| {
        order
            .cmp(&a.lead_monomial().unwrap(), &b.lead_monomial().unwrap())
            .then(a.len().cmp(&b.len()))
    });

    let mut polys: Vec<GbPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in inputs {
        let mut sugar = g.total_degree().unwrap();
        let mut h = normal_form(ring, g.terms().to_vec(), &polys, &active, false, &mut sugar)?;
        if h.is_empty() {
            continue;
        }
        make_monic(ring, &mut h);
        if h[0].mono.is_one() {
            return Ok((vec![Poly::one(ring)], 0));
        }
        polys.push(GbPoly::new(h, sugar));
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }

    let mut steps = 0u64;
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                pairs[a]
                    .sugar
                    .cmp(&pairs[b].sugar)
                    .then_with(|| order.cmp(&pairs[a].lcm, &pairs[b].lcm))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        steps += 1;
        if steps > budget {
            ring.context().record_reductions(steps);
            return Err(Error::BudgetExceeded { limit: budget });
        }
        let s = s_polynomial(ring, &polys, &pair)?;
        if s.is_empty() {
            continue;
        }
        let mut sugar = pair.sugar;
        let mut h = normal_form(ring, s, &polys, &active, false, &mut sugar)?;
        if h.is_empty() {
            continue;
        }
        make_monic(ring, &mut h);
        if h[0].mono.is_one() {
            ring.context().record_reductions(steps);
            return Ok((vec![Poly::one(ring)], steps));
        }
        polys.push(GbPoly::new(h, sugar));
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }
    ring.context().record_reductions(steps);

    Ok((interreduce_active(ring, &polys, &active)?, steps))
}

fn interreduce_active(ring: &RingRef, polys: &[GbPoly], active: &[usize]) -> Result<Vec<Poly>> {
    let order = ring.order();
    let mut out = Vec::with_capacity(active.len());
    for &k in active {
        let others: Vec<usize> = active.iter().copied().filter(|&o| o != k).collect();
        let mut sugar = 0;
        let tail = normal_form(ring, polys[k].terms[1..].to_vec(), polys, &others, true, &mut sugar)?;
        let mut terms = Vec::with_capacity(tail.len() + 1);
        terms.push(polys[k].terms[0]);
        terms.extend(tail);
        out.push(Poly::from_sorted(ring, terms));
    }
    out.sort_by(|a, b| order.cmp(&a.lead_monomial().unwrap(), &b.lead_monomial().unwrap()));
    Ok(out)
}

/// Turns a Gröbner basis (not necessarily reduced) into the reduced one
/// without pair processing.
pub(crate) fn reduce_basis(ring: &RingRef, basis: &[Poly]) -> Result<Vec<Poly>> {
    let mut polys: Vec<GbPoly> = Vec::new();
    for g in basis.iter().filter(|g| !g.is_zero()) {
        let mut t = g.terms().to_vec();
        make_monic(ring, &mut t);
        polys.push(GbPoly::new(t, 0));
    }
    if polys.iter().any(|g| g.lead.is_one()) {
        return Ok(vec![Poly::one(ring)]);
    }
    // minimal basis: drop elements whose lead is divisible by another's
    let mut active: Vec<usize> = Vec::new();
    for k in 0..polys.len() {
        let dominated = (0..polys.len()).any(|o| {
            o != k
                && polys[o].lead.divides(&polys[k].lead)
                && (polys[o].lead != polys[k].lead || o < k)
        });
        if !dominated {
            active.push(k);
        }
    }
    interreduce_active(ring, &polys, &active)
}

/// Full normal form of `f` modulo a reduced Gröbner basis.
pub(crate) fn normal_form_gb(ring: &RingRef, f: &Poly, gb: &[Poly]) -> Result<Poly> {
    if gb.is_empty() || f.is_zero() {
        return Ok(f.clone());
    }
    let polys: Vec<GbPoly> = gb.iter().map(|g| GbPoly::new(g.terms().to_vec(), 0)).collect();
    let active: Vec<usize> = (0..polys.len()).collect();
    let mut sugar = 0;
    let terms = normal_form(ring, f.terms().to_vec(), &polys, &active, true, &mut sugar)?;
    Ok(Poly::from_sorted(ring, terms))
}

/// Whether `f` reduces to zero; stops at the first irreducible term.
pub(crate) fn reduces_to_zero(ring: &RingRef, f: &Poly, gb: &[Poly]) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let polys: Vec<GbPoly> = gb.iter().map(|g| GbPoly::new(g.terms().to_vec(), 0)).collect();
    let active: Vec<usize> = (0..polys.len()).collect();
    let mut sugar = 0;
    let terms = normal_form(ring, f.terms().to_vec(), &polys, &active, false, &mut sugar)?;
    Ok(terms.is_empty())
}
