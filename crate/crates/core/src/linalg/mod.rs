//! Exact scalar arithmetic and the small dense linear-algebra kernel.

mod congruence;
mod matrix;
mod poly;
mod scalar;

pub use congruence::{congruence_diagonalize, Congruence, Signature};
pub use matrix::{adjugate3, cross, det3, dot, independent, Matrix, Vector};
pub use poly::{char_poly, Polynomial};
pub use scalar::{sc, Field, Scalar};
