//! Exact Frobenius calculus over prime fields F_p.
//!
//! The crate computes Frobenius powers and roots of ideals in polynomial
//! rings, the trace map, Fedder colons, p^-e-linear maps given by
//! multipliers, test ideals by stabilizing iteration, F-adjunction along
//! compatible centers, and enumeration of centers of sharp F-purity.
//!
//! ```
//! use fcalc::prelude::*;
//!
//! let ring = Ring::new(2, &["x", "y"], MonomialOrder::GrevLex)?;
//! let xy = parse_poly(&ring, "x*y")?;
//! assert!(trace_eval(&xy, 1)?.is_one());
//! # Ok::<(), fcalc::Error>(())
//! ```

pub mod adjunction;
pub mod algebra;
pub mod error;
pub mod frobenius;
pub mod groebner;
pub mod maps;
pub mod oracles;
pub mod session;

pub use error::{Error, Result};

/// The most common types and functions in one import.
pub mod prelude {
    pub use crate::adjunction::{
        enumerate_centers, restrict, seed_ideal, tau_outside, tau_smallest, tau_smallest_ideal,
        tau_triple, CenterMode, TauOptions,
    };
    pub use crate::algebra::{parse_poly, MonomialOrder, Poly, Ring, RingRef};
    pub use crate::error::{Error, Result};
    pub use crate::frobenius::{bracket_power, frobenius_root, trace_eval};
    pub use crate::groebner::Ideal;
    pub use crate::maps::{
        extract_generator, fedder_colon, is_fpure, MapDatum, Rational, TripleSpec,
    };
}
