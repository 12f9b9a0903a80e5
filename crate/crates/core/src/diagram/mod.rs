//! The sliced-diagram language for ribbon graphs with coupons, its parser,
//! and component/linking analysis.

mod ast;
mod builtins;
mod link;
mod parse;

pub use ast::{CouponSignature, CouponSignatures, ElementaryPiece, SlicedDiagram};
pub use builtins::{builtin, builtin_names, disjoint_union, BuiltinError};
pub use builtins::{
    HOPF_TEXT, TREFOIL_LEFT_TEXT, TREFOIL_RIGHT_TEXT, TWO_UNKNOTS_TEXT, UNKNOT_TEXT,
};
pub use link::{
    betti1, components, det_bigint, inertia, linking_matrix, ComponentColor, Components,
    FramedLinkPresentation, LinkError, LinkingData,
};
pub(crate) use link::components_any;
pub use parse::{parse_diagram, parse_open, parse_with_coupons, ParseError};
