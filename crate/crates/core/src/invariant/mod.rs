//! Core invariant computations: functorial evaluation of J, the surgery
//! color sum F, normalizers, tau, TQFT dimensions and divisibility
//! certificates.

mod congruence;
mod context;
mod eval;
mod fusion;
mod fvalue;
mod tau;

use thiserror::Error;

use crate::diagram::LinkError;
use crate::exact::Valuation;
use crate::lie::LieError;

pub use congruence::congruence_test;
pub use context::InvariantContext;
pub use eval::{evaluate_j, CouponData, CouponTable, CycMorphism, EvalError, JOutput, RingMode};
pub use fusion::tqft_dimension;
pub use fvalue::{f_value, surgery_components};
pub use tau::{
    almost_integrality_check, divisibility_certificate, projective_invariant, tau,
    DivisibilityCertificate, ExtendedManifold, IntegralityReport, TauResult,
};

pub(crate) use eval::evaluate_j_hseries;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Link(#[from] LinkError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("component C{0} has neither a color nor a surgery role")]
    UncoloredComponent(usize),
    #[error("color {color} is outside the alcove (max {max})")]
    NonAlcoveColor { color: u64, max: u64 },
    #[error("divisibility shortfall: required (xi-1)^{required}, found valuation {actual}")]
    DivisibilityShortfall { required: u64, actual: Valuation },
    #[error("integrality failure: {0}")]
    IntegralityFailure(String),
    #[error("context check failed: valuation of {which} is {got}, expected {expected}")]
    ContextValuation {
        which: &'static str,
        expected: u64,
        got: Valuation,
    },
}
