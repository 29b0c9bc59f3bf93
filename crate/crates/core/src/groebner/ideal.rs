use std::fmt;
use std::sync::{Arc, OnceLock};

use super::buchberger::{normal_form_gb, reduce_basis, reduced_groebner, reduces_to_zero};
use super::fglm::fglm;
use crate::algebra::{Monomial, MonomialOrder, Poly, RingRef};
use crate::error::{Error, Result};

/// An ideal of a polynomial ring, given by generators, with its reduced
/// Gröbner basis computed on first use and cached.
#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Poly>,
    gb: OnceLock<Arc<Vec<Poly>>>,
}

/// R = S/I, represented by the ambient ring and the modulus.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub ambient: RingRef,
    pub modulus: Ideal,
}

impl QuotientRing {
    pub fn new(modulus: Ideal) -> QuotientRing {
        QuotientRing {
            ambient: modulus.ring().clone(),
            modulus,
        }
    }

    pub fn is_zero_in(&self, f: &Poly) -> Result<bool> {
        self.modulus.contains_poly(f)
    }
}

impl Ideal {
    /// Builds an ideal; zero generators and exact duplicates are dropped.
    pub fn new(ring: &RingRef, gens: Vec<Poly>) -> Result<Ideal> {
        let mut kept: Vec<Poly> = Vec::with_capacity(gens.len());
        for g in gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::from(Arc::new(Vec::new())),
        }
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        let one = Poly::one(ring);
        Ideal {
            ring: ring.clone(),
            gens: vec![one.clone()],
            gb: OnceLock::from(Arc::new(vec![one])),
        }
    }

    pub fn principal(f: &Poly) -> Ideal {
        Ideal::new(f.ring(), vec![f.clone()]).expect("single generator shares its ring")
    }

    /// The ideal generated by the variables, i.e. the homogeneous maximal ideal.
    pub fn maximal_at_origin(ring: &RingRef) -> Ideal {
        Ideal::from_reduced_basis(ring, ring.vars())
    }

    /// Trusted constructor: `basis` must already be the reduced Gröbner basis,
    /// sorted by increasing leading monomial.
    pub(crate) fn from_reduced_basis(ring: &RingRef, basis: Vec<Poly>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: basis.clone(),
            gb: OnceLock::from(Arc::new(basis)),
        }
    }

    /// Builds the ideal from a Gröbner basis that may not be reduced.
    pub(crate) fn from_groebner_basis(ring: &RingRef, basis: Vec<Poly>) -> Result<Ideal> {
        let reduced = reduce_basis(ring, &basis)?;
        Ok(Ideal::from_reduced_basis(ring, reduced))
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// The reduced Gröbner basis, computed once.
    pub fn groebner(&self) -> Result<&[Poly]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = self.compute_groebner()?;
        Ok(self.gb.get_or_init(|| Arc::new(gb)))
    }

    fn compute_groebner(&self) -> Result<Vec<Poly>> {
        let ctx = self.ring.context();
        let store = ctx.store();
        if let Some(store) = &store {
            if let Some(gb) = store.load(&self.ring, &self.gens) {
                ctx.record_cache_hit();
                return Ok(gb);
            }
        }
        ctx.record_gb_run();
        let (gb, steps) = match self.ring.order() {
            MonomialOrder::Lex => self.lex_groebner()?,
            _ => reduced_groebner(&self.ring, &self.gens)?,
        };
        if let Some(store) = &store {
            store.save(&self.ring, &self.gens, &gb, steps);
        }
        Ok(gb)
    }

    /// Lex bases of zero-dimensional ideals are converted from grevlex,
    /// which avoids the intermediate growth of a direct lex computation.
    fn lex_groebner(&self) -> Result<(Vec<Poly>, u64)> {
        let grevlex = self.ring.with_order(MonomialOrder::GrevLex)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.reorder(&grevlex))
            .collect::<Result<Vec<_>>>()?;
        let (gb, steps) = reduced_groebner(&grevlex, &gens)?;
        if let Some(converted) = fglm(&gb, &self.ring)? {
            return Ok((converted, steps));
        }
        let (gb, more) = reduced_groebner(&self.ring, &self.gens)?;
        Ok((gb, steps + more))
    }

    pub fn has_cached_groebner(&self) -> bool {
        self.gb.get().is_some()
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        normal_form_gb(&self.ring, f, self.groebner()?)
    }

    pub fn contains_poly(&self, f: &Poly) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Ok(true);
        }
        if self.gens.contains(f) {
            return Ok(true);
        }
        reduces_to_zero(&self.ring, f, self.groebner()?)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        for g in &other.gens {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, by comparing reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.groebner()? == other.groebner()?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_unit()) {
            return Ok(true);
        }
        let gb = self.groebner()?;
        Ok(gb.len() == 1 && gb[0].is_unit())
    }

    pub fn is_monomial(&self) -> Result<bool> {
        Ok(self.groebner()?.iter().all(|g| g.is_monomial()))
    }

    pub fn is_homogeneous(&self) -> Result<bool> {
        Ok(self.groebner()?.iter().all(|g| g.is_homogeneous()))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn add_poly(&self, f: &Poly) -> Result<Ideal> {
        self.sum(&Ideal::new(&self.ring, vec![f.clone()])?)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Multiplies every generator by `f`.
    pub fn scale(&self, f: &Poly) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_mul(f))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J`, eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        if self.contains(other)? {
            return Ok(other.clone());
        }
        if other.contains(self)? {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let ext = self
            .ring
            .extend_front(&["@t"], MonomialOrder::Block { split: 1 })?;
        let up: Vec<usize> = (1..=n).collect();
        let t = ext.var(0);
        let one_minus_t = Poly::one(&ext).checked_sub(&t)?;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.remap(&ext, &up)?.checked_mul(&t)?);
        }
        for g in &other.gens {
            gens.push(g.remap(&ext, &up)?.checked_mul(&one_minus_t)?);
        }
        let big = Ideal::new(&ext, gens)?;
        self.keep_free_of(&big, 1)
    }

    /// Takes the elements of `big`'s GB free of the first `k` variables of
    /// its ring and maps them back into this ring.
    fn keep_free_of(&self, big: &Ideal, k: usize) -> Result<Ideal> {
        let n = self.ring.nvars();
        let mut down = vec![0usize; k];
        down.extend(0..n);
        let kept: Vec<Poly> = big
            .groebner()?
            .iter()
            .filter(|g| g.terms().iter().all(|t| t.mono.partial_degree(0..k) == 0))
            .map(|g| g.remap(&self.ring, &down))
            .collect::<Result<_>>()?;
        if self.ring.order() == MonomialOrder::GrevLex {
            Ok(Ideal::from_reduced_basis(&self.ring, kept))
        } else {
            Ideal::new(&self.ring, kept)
        }
    }

    /// `(I : g)`.
    pub fn colon_poly(&self, g: &Poly) -> Result<Ideal> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() || self.contains_poly(g)? {
            return Ok(Ideal::unit(&self.ring));
        }
        if self.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let inter = self.intersect(&Ideal::principal(g))?;
        let mut quots = Vec::with_capacity(inter.gens.len());
        for h in inter.groebner()? {
            let q = h.exact_div(g)?.ok_or_else(|| {
                Error::Discrepancy("element of I ∩ (g) not divisible by g".into())
            })?;
            quots.push(q);
        }
        // multiplication by g preserves the leading-term structure, so the
        // quotients already form a Gröbner basis
        Ideal::from_groebner_basis(&self.ring, quots)
    }

    /// `(I : J) = ∩_j (I : g_j)`; the unit ideal when `J = 0`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            if self.contains_poly(g)? {
                continue;
            }
            let c = self.colon_poly(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I ∩ F_p[remaining variables]`, returned in the original ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        if vars.iter().any(|&v| v >= n) {
            return Err(Error::InvalidArgument("variable index out of range".into()));
        }
        let mut elim: Vec<usize> = vars.to_vec();
        elim.sort_unstable();
        elim.dedup();
        if elim.is_empty() {
            return Ok(self.clone());
        }
        let rest: Vec<usize> = (0..n).filter(|i| !elim.contains(i)).collect();
        let names: Vec<&str> = elim
            .iter()
            .chain(rest.iter())
            .map(|&i| self.ring.var_names()[i].as_str())
            .collect();
        let k = elim.len();
        let ext = crate::algebra::Ring::with_context(
            self.ring.p(),
            &names,
            MonomialOrder::Block { split: k },
            self.ring.context().clone(),
        )?;
        // old index -> new index
        let mut fwd = vec![0usize; n];
        for (new, &old) in elim.iter().chain(rest.iter()).enumerate() {
            fwd[old] = new;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.remap(&ext, &fwd))
            .collect::<Result<Vec<_>>>()?;
        let big = Ideal::new(&ext, gens)?;
        let mut back = vec![0usize; k];
        back.extend(rest.iter().copied());
        let kept: Vec<Poly> = big
            .groebner()?
            .iter()
            .filter(|g| g.terms().iter().all(|t| t.mono.partial_degree(0..k) == 0))
            .map(|g| g.remap(&self.ring, &back))
            .collect::<Result<_>>()?;
        Ideal::new(&self.ring, kept)
    }

    fn rabinowitsch(&self, f: &Poly) -> Result<Ideal> {
        let n = self.ring.nvars();
        let ext = self
            .ring
            .extend_front(&["@y"], MonomialOrder::Block { split: 1 })?;
        let up: Vec<usize> = (1..=n).collect();
        let y = ext.var(0);
        let mut gens: Vec<Poly> = self
            .gens
            .iter()
            .map(|g| g.remap(&ext, &up))
            .collect::<Result<_>>()?;
        let yf = y.checked_mul(&f.remap(&ext, &up)?)?;
        gens.push(Poly::one(&ext).checked_sub(&yf)?);
        Ideal::new(&ext, gens)
    }

    /// `(I : f^∞)`.
    pub fn saturate(&self, f: &Poly) -> Result<Ideal> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let big = self.rabinowitsch(f)?;
        self.keep_free_of(&big, 1)
    }

    /// Whether `f` lies in the radical of `I`.
    pub fn radical_member(&self, f: &Poly) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() || self.contains_poly(f)? {
            return Ok(true);
        }
        self.rabinowitsch(f)?.is_unit()
    }

    /// Krull dimension of S/I, via a maximal independent set of variables
    /// modulo the leading-term ideal; `None` for the unit ideal.
    pub fn dimension(&self) -> Result<Option<usize>> {
        self.independent_set().map(|s| s.map(|s| s.len()))
    }

    /// A maximal-size set of variables that is independent modulo I.
    pub fn independent_set(&self) -> Result<Option<Vec<usize>>> {
        if self.is_unit()? {
            return Ok(None);
        }
        let n = self.ring.nvars();
        let masks: Vec<u32> = self
            .groebner()?
            .iter()
            .map(|g| g.lead_monomial().unwrap().support_mask())
            .collect();
        let mut best: u32 = 0;
        for u in 0u32..(1u32 << n) {
            if u.count_ones() > best.count_ones() && masks.iter().all(|&m| m & !u != 0) {
                best = u;
            }
        }
        Ok(Some((0..n).filter(|i| best >> i & 1 == 1).collect()))
    }

    /// Height (codimension) of I; `None` for the unit ideal.
    pub fn height(&self) -> Result<Option<usize>> {
        Ok(self.dimension()?.map(|d| self.ring.nvars() - d))
    }

    /// Number of monomials of degree `d` outside the leading-term ideal,
    /// i.e. the Hilbert function of S/I at `d` for homogeneous I.
    pub fn standard_monomial_count(&self, d: u32) -> Result<u64> {
        let leads: Vec<Monomial> = self
            .groebner()?
            .iter()
            .map(|g| g.lead_monomial().unwrap())
            .collect();
        let n = self.ring.nvars();
        let mut count = 0u64;
        for_each_monomial(n, d, &mut |m| {
            if !leads.iter().any(|l| l.divides(m)) {
                count += 1;
            }
        });
        Ok(count)
    }

    /// The ideal moved to a ring with the same variables and another order.
    pub fn reorder(&self, target: &RingRef) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.reorder(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// The reduced Gröbner basis as text, `(g1, g2, ...)`.
    pub fn canonical_string(&self) -> Result<String> {
        Ok(format_list(self.groebner()?))
    }
}

pub(crate) fn format_list(polys: &[Poly]) -> String {
    let parts: Vec<String> = polys.iter().map(|g| g.to_string()).collect();
    if parts.is_empty() {
        "(0)".to_string()
    } else {
        format!("({})", parts.join(", "))
    }
}

/// Calls `f` on every monomial of total degree `d` in `n` variables.
pub(crate) fn for_each_monomial(n: usize, d: u32, f: &mut dyn FnMut(&Monomial)) {
    fn rec(exps: &mut Vec<u32>, n: usize, left: u32, f: &mut dyn FnMut(&Monomial)) {
        if exps.len() + 1 == n {
            exps.push(left);
            f(&Monomial::from_exponents(exps).unwrap());
            exps.pop();
            return;
        }
        for k in (0..=left).rev() {
            exps.push(k);
            rec(exps, n, left - k, f);
            exps.pop();
        }
    }
    if n == 0 {
        if d == 0 {
            f(&Monomial::one());
        }
        return;
    }
    rec(&mut Vec::with_capacity(n), n, d, f);
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gb.get() {
            Some(gb) => f.write_str(&format_list(gb)),
            None => f.write_str(&format_list(&self.gens)),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self)
    }
}
