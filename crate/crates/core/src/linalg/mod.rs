mod matrix;
mod subspace;

pub use matrix::{vector, Matrix, Rref};
pub(crate) use matrix::expect_shape;
pub use subspace::{enumerate_vectors, kernel_basis, preimage, solve_linear, Subspace};
