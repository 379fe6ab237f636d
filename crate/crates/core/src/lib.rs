//! Exact computations with algebraic Nijenhuis operators on Lie algebras
//! given by structure constants.
//!
//! Everything is computed over ℚ or the Gaussian rationals ℚ(i), so every
//! verdict is an equality check rather than a tolerance test.

pub mod catalog;
pub mod equivalence;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod nijenhuis;
pub mod quadric;

pub use error::{Error, Result};
pub use lie::LieAlgebra;
pub use linalg::{Field, Matrix, Polynomial, Scalar, Vector};
