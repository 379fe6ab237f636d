use thiserror::Error;

use crate::linalg::Scalar;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular; kernel vector {kernel:?}")]
    Singular { kernel: Vec<Scalar> },

    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("expected real coefficients, found {0}")]
    NonReal(Scalar),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("structure constants are not antisymmetric at (i={i}, j={j}, k={k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),

    #[error("scalar {value} is not in the {field} field")]
    OutsideField { value: Scalar, field: crate::linalg::Field },

    #[error("vectors are linearly dependent")]
    Dependent,

    #[error("zero vector is not allowed here")]
    ZeroVector,

    #[error("{0} must be nonzero")]
    ZeroScalar(&'static str),

    #[error("eigenvalues must be pairwise distinct ({0} repeats)")]
    RepeatedEigenvalue(Scalar),

    #[error("operator is not an algebraic Nijenhuis operator")]
    NotNijenhuis,

    #[error("operator is not regular semisimple")]
    NotRegularSemisimple,

    #[error("irrational spectrum: characteristic polynomial does not split over the scalar field")]
    IrrationalSpectrum,

    #[error("basis vectors {0} and {1} do not span a subalgebra")]
    NotEigenbasis(usize, usize),

    #[error("{0} is not an involution")]
    NotInvolution(&'static str),

    #[error("unknown catalog id {0:?}")]
    UnknownCatalogId(String),

    #[error("{0} has no printed eigenbasis")]
    NoPrintedBasis(String),

    #[error("catalog parameter: {0}")]
    Parameter(String),

    #[error("sl(2) pattern violated: {0}")]
    PatternViolation(String),

    #[error("operation requires dimension 3, got {0}")]
    NotThreeDimensional(usize),

    #[error("internal invariant breached: {0}")]
    Invariant(String),

    #[error("JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
