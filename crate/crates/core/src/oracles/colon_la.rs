//! Colon ideals of homogeneous ideals, degree by degree, by linear algebra
//! on monomial bases.

use std::collections::HashMap;

use crate::algebra::linalg::{Echelon, SparseVec};
use crate::algebra::{Monomial, Poly, RingRef, Term};
use crate::error::{Error, Result};
use crate::groebner::{for_each_monomial, Ideal};

/// Refuses problems whose monomial bases exceed this many elements.
const MAX_BASIS: usize = 200_000;

/// The homogeneous components `(I : J)_d` for `d ≤ bound`, each as a basis.
#[derive(Clone, Debug)]
pub struct LaColon {
    pub bound: u32,
    pub components: Vec<Vec<Poly>>,
}

impl LaColon {
    pub fn dimension(&self, d: u32) -> usize {
        self.components[d as usize].len()
    }
}

struct Degree {
    index: HashMap<Monomial, usize>,
}

fn monomials(n: usize, d: u32) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for_each_monomial(n, d, &mut |m| out.push(*m));
    if out.len() > MAX_BASIS {
        return Err(Error::Unsupported(format!(
            "linear-algebra oracle: {} monomials in degree {d}",
            out.len()
        )));
    }
    Ok(out)
}

fn to_vec(f: &Poly, deg: &Degree, offset: usize) -> SparseVec {
    f.terms()
        .iter()
        .map(|t| (offset + deg.index[&t.mono], t.coeff))
        .collect()
}

/// `(I : J)` in degrees `0..=bound`, for homogeneous generators.
pub fn colon_by_linear_algebra(i: &Ideal, j: &Ideal, bound: u32) -> Result<LaColon> {
    let ring: &RingRef = i.ring();
    if j.ring() != ring {
        return Err(Error::RingMismatch);
    }
    if !i.gens().iter().chain(j.gens()).all(|g| g.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let n = ring.nvars();
    let field = *ring.field();
    let mut degrees: HashMap<u32, Degree> = HashMap::new();
    let mut spans: HashMap<u32, Echelon> = HashMap::new();

    let mut components = Vec::new();
    for d in 0..=bound {
        let basis_d = monomials(n, d)?;
        // residual column layout: one block per generator of J
        let mut offsets = Vec::new();
        let mut total = 0usize;
        for g in j.gens() {
            let dd = d + g.total_degree().unwrap();
            if let std::collections::hash_map::Entry::Vacant(e) = degrees.entry(dd) {
                let mons = monomials(n, dd)?;
                let index = mons.iter().enumerate().map(|(k, m)| (*m, k)).collect();
                let deg = Degree { index };
                // span of I in degree dd
                let mut span = Echelon::new(field);
                for h in i.gens() {
                    let hd = h.total_degree().unwrap();
                    if hd > dd {
                        continue;
                    }
                    for m in monomials(n, dd - hd)? {
                        span.insert(to_vec(&h.mul_term(&m, 1)?, &deg, 0));
                    }
                }
                e.insert(deg);
                spans.insert(dd, span);
            }
            offsets.push((total, dd));
            total += degrees[&dd].index.len();
        }
        // kernel of m -> (residues of m·g_j), via augmented elimination
        let mut ech = Echelon::new(field);
        let mut kernel = Vec::new();
        for (r, m) in basis_d.iter().enumerate() {
            let mut v = SparseVec::new();
            for (g, &(offset, dd)) in j.gens().iter().zip(&offsets) {
                let prod = g.mul_term(m, 1)?;
                let residue = spans[&dd].reduce(to_vec(&prod, &degrees[&dd], 0));
                v.extend(residue.into_iter().map(|(c, x)| (offset + c, x)));
            }
            v.insert(total + r, 1);
            let reduced = ech.insert(v);
            if let Some((&lead, _)) = reduced.iter().next() {
                if lead >= total {
                    let terms: Vec<Term> = reduced
                        .iter()
                        .map(|(&c, &x)| Term {
                            mono: basis_d[c - total],
                            coeff: x,
                        })
                        .collect();
                    kernel.push(Poly::from_unsorted(ring, terms).monic());
                }
            }
        }
        components.push(kernel);
    }
    Ok(LaColon { bound, components })
}

/// Whether `colon` agrees with `(I : J)` in every degree up to `bound`:
/// equal Hilbert function values and containment of the oracle's basis.
pub fn colon_agrees(i: &Ideal, j: &Ideal, colon: &Ideal, bound: u32) -> Result<bool> {
    if !colon.is_homogeneous()? {
        return Err(Error::NotHomogeneous);
    }
    let la = colon_by_linear_algebra(i, j, bound)?;
    let n = i.ring().nvars();
    for d in 0..=bound {
        let mut all = 0u64;
        for_each_monomial(n, d, &mut |_| all += 1);
        let dim = all - colon.standard_monomial_count(d)?;
        if dim != la.dimension(d) as u64 {
            return Ok(false);
        }
        for g in &la.components[d as usize] {
            if !colon.contains_poly(g)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, MonomialOrder, Ring};

    #[test]
    fn monomial_colon() {
        let r = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let i = Ideal::new(&r, vec![parse_poly(&r, "x^2").unwrap(), parse_poly(&r, "y^2").unwrap()]).unwrap();
        let j = Ideal::principal(&parse_poly(&r, "x*y").unwrap());
        let la = colon_by_linear_algebra(&i, &j, 2).unwrap();
        assert_eq!(la.dimension(0), 0);
        assert_eq!(la.dimension(1), 2);
        assert_eq!(la.dimension(2), 3);
        let colon = i.colon(&j).unwrap();
        assert!(colon_agrees(&i, &j, &colon, 4).unwrap());
    }

    #[test]
    fn zero_ideal_and_refusal() {
        let r = Ring::new(3, &["x", "y"], MonomialOrder::GrevLex).unwrap();
        let la = colon_by_linear_algebra(&Ideal::zero(&r), &Ideal::zero(&r), 2).unwrap();
        assert_eq!(la.dimension(2), 3);
        let i = Ideal::principal(&parse_poly(&r, "x + 1").unwrap());
        assert!(matches!(
            colon_by_linear_algebra(&i, &i, 1),
            Err(Error::NotHomogeneous)
        ));
    }
}
