//! F-adjunction along compatible centers, test ideals, and the enumeration
//! of centers of sharp F-purity.

mod centers;
mod restrict;
mod seed;
mod tau;

pub use centers::{enumerate_centers, CenterMode, CenterReport};
pub use restrict::{
    center_bijection_check, purity_transfer_check, restrict, restriction_theorem_check,
    tau_outside, BijectionReport, RestrictionCheck,
};
pub use seed::{jacobian_ideal, seed_ideal};
pub(crate) use tau::default_triple_seeds;
pub use tau::{
    tau_smallest, tau_smallest_ideal, tau_triple, Certificate, SeedCheck, TauOptions, TauResult,
    DEFAULT_EMAX,
};
