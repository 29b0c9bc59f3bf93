//! p^-e-linear maps on quotients of polynomial rings, represented by a
//! multiplier in the Fedder colon, and the constructions around them.

mod datum;
mod divisor;
mod fedder;
pub mod rational;
mod triple;

pub use datum::{Compatibility, MapDatum};
pub use divisor::{divisor_of_map, map_of_divisor, DivisorData};
pub use fedder::{codim1_colon_check, extract_generator, fedder_colon, is_fpure};
pub use rational::Rational;
pub use triple::{PurityVerdict, TripleSpec, DEFAULT_NMAX};
