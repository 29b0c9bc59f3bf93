//! Reduced Gröbner bases and the ideal operations built on them:
//! membership, equality, sums, products, intersections, colons,
//! elimination, saturation and a restricted minimal-prime decomposition.

mod buchberger;
mod fglm;
pub mod factor;
mod ideal;
pub mod primes;

pub use factor::{factor_restricted, Factorization};
pub use ideal::{Ideal, QuotientRing};
pub use primes::{is_prime, min_primes_restricted};

pub(crate) use ideal::for_each_monomial;

use crate::algebra::{Poly, RingRef};

/// Persistent storage for reduced Gröbner bases, consulted before every
/// basis computation of a ring whose context carries a store.
pub trait GbStore: Send + Sync {
    /// Returns the reduced basis of the ideal generated by `gens`, if known.
    fn load(&self, ring: &RingRef, gens: &[Poly]) -> Option<Vec<Poly>>;
    /// Records a freshly computed basis; `steps` is the number of
    /// S-polynomial reductions it took.
    fn save(&self, ring: &RingRef, gens: &[Poly], gb: &[Poly], steps: u64);
}

#[cfg(test)]
mod tests;
