//! Exact arithmetic over F_p and sparse multivariate polynomials, including
//! the two Frobenius primitives everything else consumes: q-th powers and
//! base-q digit decomposition.

pub mod field;
pub(crate) mod linalg;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod upoly;

pub use field::{FieldElem, PrimeField};
pub use monomial::{Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use poly::{Poly, Term};
pub use ring::{Context, Counters, Ring, RingRef, DEFAULT_BUDGET};

/// `p^e` with overflow checking.
pub fn prime_power(p: u64, e: u32) -> crate::Result<u64> {
    p.checked_pow(e)
        .ok_or_else(|| crate::Error::Overflow(format!("{p}^{e}")))
}
