//! Exact linear algebra over prime fields.

mod field;
mod matrix;
mod subspace;

pub use field::Field;
pub use matrix::{AffineSolution, Echelon, Matrix};
pub use subspace::Subspace;

