//! Exact coefficient arithmetic: Z[v, v^-1], Z[xi_r], Q(xi), and the
//! quadratic kappa-extension holding surgery invariants.

mod cyclotomic;
mod hexp;
mod kappa;
mod laurent;
mod rational;

pub use cyclotomic::{specialize, specialize_power, CyclotomicInteger, Valuation};
pub use hexp::h_expand;
pub use kappa::KappaScalar;
pub use laurent::LaurentPoly;
pub use rational::CycRational;
