//! Independent verifiers. Each re-derives a result by a method that shares
//! nothing with the main algorithms beyond polynomial arithmetic, and is used
//! by the test suites and by certificate fields.

mod centers;
mod colon_la;
mod multinomial;
mod tau_sum;

pub use centers::{candidate_center_bruteforce, variable_subset_family};
pub use colon_la::{colon_agrees, colon_by_linear_algebra, LaColon};
pub use multinomial::{multinomial_fpure_check, multinomial_top_coefficient};
pub use tau_sum::{
    monomial_tau_formula, tau_by_direct_sum, tau_by_direct_sum_bounded, DirectSum,
    DEFAULT_MAX_TERMS,
};
