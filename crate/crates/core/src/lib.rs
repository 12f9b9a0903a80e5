//! Exact-arithmetic quantum invariants of colored ribbon graphs in S^3 and
//! the surgery invariant tau of closed 3-manifolds, for sl2 at odd prime
//! roots of unity.
//!
//! Everything is computed over Z[v, v^-1], Z[xi_r] and the quadratic
//! extension Q(xi)[kappa]; no floating point appears anywhere. The crate is
//! organized as:
//!
//! - [`exact`]: the coefficient rings.
//! - [`lie`]: Cartan data, the fundamental alcove, quantum Weyl dimensions.
//! - [`rep`]: the sl2 ribbon layer (modules, braiding, twist, duality).
//! - [`diagram`]: the sliced-diagram language, parser and linking analysis.
//! - [`invariant`]: evaluation of J, color sums F, normalizers and tau.
//! - [`analysis`]: the chord-diagram weight system and degree-bound checks.
//! - [`periodicity`]: congruence obstructions to cyclic group actions.

pub mod analysis;
pub mod diagram;
pub mod exact;
pub mod invariant;
pub mod lie;
pub mod periodicity;
pub mod rep;
