//! Verification instruments: the sl2 weight system on chord diagrams and
//! the polynomial degree-bound checks on color families.

mod chord;
mod degree;
mod weight;

pub use chord::{ChordComponent, ChordDiagram, ChordError, ComponentKind};
pub use degree::{
    bivariate_total_degree, degree_bound_check, univariate_degree, AnalysisError,
    DegreeOrderReport, DegreeReport,
};
pub use weight::{weight_sl2, weight_sl2_colored, RatMatrix};
