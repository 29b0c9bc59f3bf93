//! Polynomial rings F_p[x_1, ..., x_n] with a fixed monomial order.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::{Arc, RwLock};

use super::field::PrimeField;
use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::groebner::GbStore;

/// Default number of S-polynomial reductions a single Gröbner basis
/// computation may perform before giving up.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Shared, thread-safe settings and counters for a family of rings
/// (a base ring and the auxiliary rings derived from it).
pub struct Context {
    budget: AtomicU64,
    reductions: AtomicU64,
    gb_runs: AtomicU64,
    cache_hits: AtomicU64,
    store: RwLock<Option<Arc<dyn GbStore>>>,
}

/// Snapshot of the counters of a [`Context`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct Counters {
    pub reductions: u64,
    pub gb_runs: u64,
    pub cache_hits: u64,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            budget: AtomicU64::new(DEFAULT_BUDGET),
            reductions: AtomicU64::new(0),
            gb_runs: AtomicU64::new(0),
            cache_hits: AtomicU64::new(0),
            store: RwLock::new(None),
        }
    }
}

impl Context {
    pub fn budget(&self) -> u64 {
        self.budget.load(AtomicOrdering::Relaxed)
    }

    pub fn set_budget(&self, steps: u64) {
        self.budget.store(steps, AtomicOrdering::Relaxed);
    }

    pub fn set_store(&self, store: Option<Arc<dyn GbStore>>) {
        *self.store.write().unwrap() = store;
    }

    pub(crate) fn store(&self) -> Option<Arc<dyn GbStore>> {
        self.store.read().unwrap().clone()
    }

    pub(crate) fn record_reductions(&self, n: u64) {
        self.reductions.fetch_add(n, AtomicOrdering::Relaxed);
    }

    pub(crate) fn record_gb_run(&self) {
        self.gb_runs.fetch_add(1, AtomicOrdering::Relaxed);
    }

    pub(crate) fn record_cache_hit(&self) {
        self.cache_hits.fetch_add(1, AtomicOrdering::Relaxed);
    }

    pub fn counters(&self) -> Counters {
        Counters {
            reductions: self.reductions.load(AtomicOrdering::Relaxed),
            gb_runs: self.gb_runs.load(AtomicOrdering::Relaxed),
            cache_hits: self.cache_hits.load(AtomicOrdering::Relaxed),
        }
    }
}

impl fmt::Debug for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Context")
            .field("budget", &self.budget())
            .field("counters", &self.counters())
            .finish()
    }
}

/// The ring tag carried by every polynomial. Two rings are equal when their
/// characteristic, variable names and order agree; the context is ignored.
#[derive(Debug)]
pub struct Ring {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
    ctx: Arc<Context>,
}

pub type RingRef = Arc<Ring>;

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.field == other.field && self.order == other.order && self.vars == other.vars)
    }
}

impl Eq for Ring {}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(p: u64, vars: &[S], order: MonomialOrder) -> Result<RingRef> {
        Self::with_context(p, vars, order, Arc::new(Context::default()))
    }

    pub fn with_context<S: AsRef<str>>(
        p: u64,
        vars: &[S],
        order: MonomialOrder,
        ctx: Arc<Context>,
    ) -> Result<RingRef> {
        let field = PrimeField::new(p)?;
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.len() > MAX_VARS {
            return Err(Error::InvalidArgument(format!(
                "{} variables requested, at most {MAX_VARS} supported",
                vars.len()
            )));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::InvalidArgument(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidArgument(format!("duplicate variable `{v}`")));
            }
        }
        Self::build(field, vars, order, ctx)
    }

    fn build(
        field: PrimeField,
        vars: Vec<String>,
        order: MonomialOrder,
        ctx: Arc<Context>,
    ) -> Result<RingRef> {
        if let MonomialOrder::Block { split } = order {
            if split > vars.len() {
                return Err(Error::InvalidArgument("block split exceeds variable count".into()));
            }
        }
        Ok(Arc::new(Ring {
            field,
            vars,
            order,
            ctx,
        }))
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.field.p()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Poly {
        assert!(i < self.nvars(), "variable index out of range");
        Poly::monomial(self, Monomial::var(i), 1)
    }

    /// All variables as polynomials.
    pub fn vars(self: &Arc<Self>) -> Vec<Poly> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef> {
        Self::build(self.field, self.vars.clone(), order, self.ctx.clone())
    }

    /// Prepends auxiliary variables (e.g. for elimination); existing variable
    /// `i` becomes variable `i + names.len()`.
    pub fn extend_front(&self, names: &[&str], order: MonomialOrder) -> Result<RingRef> {
        if self.nvars() + names.len() > MAX_VARS {
            return Err(Error::Unsupported(format!(
                "auxiliary variables would exceed the {MAX_VARS}-variable limit"
            )));
        }
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        Self::build(self.field, vars, order, self.ctx.clone())
    }

    /// Short description, e.g. `F_2[a,b,c] grevlex`.
    pub fn describe(&self) -> String {
        format!("F_{}[{}] {}", self.p(), self.vars.join(","), self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks() {
        assert!(Ring::new(4, &["x"], MonomialOrder::GrevLex).is_err());
        assert!(Ring::new(2, &["x", "x"], MonomialOrder::GrevLex).is_err());
        assert!(Ring::new(2, &["1x"], MonomialOrder::GrevLex).is_err());
        let r = Ring::new(5, &["x", "y"], MonomialOrder::Lex).unwrap();
        assert_eq!(r.describe(), "F_5[x,y] lex");
        let r2 = Ring::new(5, &["x", "y"], MonomialOrder::Lex).unwrap();
        assert_eq!(*r, *r2);
        assert_ne!(*r, *r.with_order(MonomialOrder::GrevLex).unwrap());
    }
}
