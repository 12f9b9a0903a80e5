//! The sl2 ribbon-category layer: alcove-colored modules, braiding, twist,
//! duality and quantum trace, all over Z[v, v^-1].

mod braid;
mod matrix;
mod module;
mod object;

pub use braid::{
    braiding, braiding_inverse, braiding_inverse_objects, braiding_objects, cap, cup,
    quantum_trace, tensor_action, twist_scalar, twist_scalar_power, Chirality,
};
pub use matrix::{MorphismError, MorphismMatrix};
pub use module::{generator_matrix, irrep, relations_hold, Generator, IrrepModule};
pub use object::{ObjectWord, Sign, StrandObject};

pub(crate) use braid::{theta_coeff, theta_inv_coeff};
pub(crate) use module::{e_div_entry, f_div_entry, k_entry};
