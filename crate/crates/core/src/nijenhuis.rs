//! Nijenhuis torsion, regular semisimplicity, and the correspondence
//! between regular semisimple algebraic Nijenhuis operators and bases in
//! which every pair of vectors spans a subalgebra.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{unit, LieAlgebra};
use crate::linalg::{char_poly, Field, Matrix, Scalar, Vector};

/// A linear operator on an algebra's fixed basis; column `j` is the image
/// of `e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearOperator {
    matrix: Matrix,
}

impl LinearOperator {
    pub fn new(matrix: Matrix) -> Result<Self> {
        matrix.require_square()?;
        Ok(LinearOperator { matrix })
    }

    pub fn identity(n: usize) -> Self {
        LinearOperator {
            matrix: Matrix::identity(n),
        }
    }

    pub fn diag(eigenvalues: &[Scalar]) -> Self {
        LinearOperator {
            matrix: Matrix::diag(eigenvalues),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        self.matrix.mul_vec(v)
    }

    pub fn compose(&self, other: &LinearOperator) -> Result<LinearOperator> {
        LinearOperator::new(self.matrix.checked_mul(&other.matrix)?)
    }

    pub fn commutes_with(&self, other: &LinearOperator) -> Result<bool> {
        Ok(self.compose(other)? == other.compose(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let op: LinearOperator = serde_json::from_str(text)?;
        op.matrix.require_square()?;
        Ok(op)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("operator serializes")
    }
}

fn conform(alg: &LieAlgebra, op: &LinearOperator) -> Result<()> {
    if op.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: op.dim(),
        });
    }
    Ok(())
}

/// Components `N^k_{ij}` of the algebraic Nijenhuis torsion, indexed like
/// structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionTensor {
    dim: usize,
    n: Vec<Scalar>,
}

impl TorsionTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn component(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.n[(i * self.dim + j) * self.dim + k]
    }

    /// `N(e_i, e_j)`.
    pub fn on_pair(&self, i: usize, j: usize) -> Vector {
        let base = (i * self.dim + j) * self.dim;
        self.n[base..base + self.dim].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.n.iter().all(Zero::is_zero)
    }

    pub fn is_skew(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| (0..d).all(|k| self.component(i, j, k) == &-self.component(j, i, k)))
        })
    }

    /// Nonzero components `(i, j, k, N^k_{ij})` with `i < j`, 0-based.
    pub fn nonzero_components(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in 0..d {
                    let x = self.component(i, j, k);
                    if !x.is_zero() {
                        out.push((i, j, k, x.clone()));
                    }
                }
            }
        }
        out
    }
}

/// `N(x, y) = L[Lx, y] + L[x, Ly] − [Lx, Ly] − L²[x, y]` on every ordered
/// pair of basis vectors. Both orders are evaluated independently.
pub fn torsion(alg: &LieAlgebra, op: &LinearOperator) -> Result<TorsionTensor> {
    conform(alg, op)?;
    let d = alg.dim();
    let images = op.matrix.columns();
    let mut n = vec![Scalar::zero(); d * d * d];
    for i in 0..d {
        for j in 0..d {
            let (x, y) = (unit(d, i), unit(d, j));
            let (lx, ly) = (&images[i], &images[j]);
            let t1 = op.apply(&alg.bracket(lx, &y)?)?;
            let t2 = op.apply(&alg.bracket(&x, ly)?)?;
            let t3 = alg.bracket(lx, ly)?;
            let t4 = op.apply(&op.apply(&alg.basis_bracket(i, j))?)?;
            for k in 0..d {
                n[(i * d + j) * d + k] = &(&(&t1[k] + &t2[k]) - &t3[k]) - &t4[k];
            }
        }
    }
    Ok(TorsionTensor { dim: d, n })
}

pub fn is_algebraic_nijenhuis(alg: &LieAlgebra, op: &LinearOperator) -> Result<bool> {
    Ok(torsion(alg, op)?.is_zero())
}

/// Pairwise distinct eigenvalues and diagonalizable. Over ℝ the eigenvalues
/// must also be real, so that the eigenbasis lies in the real algebra.
pub fn is_regular_semisimple(alg: &LieAlgebra, op: &LinearOperator) -> Result<bool> {
    conform(alg, op)?;
    let field = alg.field();
    if let Some(x) = op.matrix.entries().iter().find(|x| !field.contains(x)) {
        return Err(Error::OutsideField {
            value: x.clone(),
            field,
        });
    }
    let p = char_poly(&op.matrix)?;
    if !p.is_squarefree()? {
        return Ok(false);
    }
    match field {
        Field::Complex => Ok(true),
        Field::Real => Ok(p.count_real_roots()? == alg.dim()),
    }
}

/// `Z · diag(λ) · Z⁻¹`: the operator with the columns of `z` as
/// eigenvectors.
pub fn operator_from_eigenbasis(z: &Matrix, eigenvalues: &[Scalar]) -> Result<LinearOperator> {
    let n = z.require_square()?;
    if eigenvalues.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: eigenvalues.len(),
        });
    }
    for (a, x) in eigenvalues.iter().enumerate() {
        if eigenvalues[..a].contains(x) {
            return Err(Error::RepeatedEigenvalue(x.clone()));
        }
    }
    let inv = z.inverse()?;
    LinearOperator::new(&(z * &Matrix::diag(eigenvalues)) * &inv)
}

/// `[ζ_i, ζ_j] = α ζ_i + β ζ_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCoefficients {
    pub i: usize,
    pub j: usize,
    pub alpha: Scalar,
    pub beta: Scalar,
}

/// A basis (columns of `basis`) together with the coefficients witnessing
/// that each pair of basis vectors spans a subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenbasisCertificate {
    pub basis: Matrix,
    /// One entry per pair `i < j` (0-based), in lexicographic order.
    pub pairs: Vec<PairCoefficients>,
}

impl EigenbasisCertificate {
    /// `(α, β)` with `[ζ_i, ζ_j] = α ζ_i + β ζ_j`, for either order of the
    /// indices. Panics if `i == j` or out of range.
    pub fn coefficients(&self, i: usize, j: usize) -> (Scalar, Scalar) {
        assert_ne!(i, j, "pair needs distinct indices");
        let (lo, hi) = (i.min(j), i.max(j));
        let p = self
            .pairs
            .iter()
            .find(|p| p.i == lo && p.j == hi)
            .expect("pair in range");
        if i < j {
            (p.alpha.clone(), p.beta.clone())
        } else {
            (-&p.beta, -&p.alpha)
        }
    }

    /// Re-checks every pair identity against the algebra.
    pub fn holds_in(&self, alg: &LieAlgebra) -> Result<bool> {
        let cols = self.basis.columns();
        for p in &self.pairs {
            let b = alg.bracket(&cols[p.i], &cols[p.j])?;
            let ok = b.iter().enumerate().all(|(k, x)| {
                x == &(&(&p.alpha * &cols[p.i][k]) + &(&p.beta * &cols[p.j][k]))
            });
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The pair whose bracket leaves the span of the two basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EscapeWitness {
    pub i: usize,
    pub j: usize,
    /// Coordinates of `[ζ_i, ζ_j]` in the candidate basis.
    pub coordinates: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenbasisCheck {
    Certified(EigenbasisCertificate),
    Escapes(EscapeWitness),
}

impl EigenbasisCheck {
    pub fn is_certified(&self) -> bool {
        matches!(self, EigenbasisCheck::Certified(_))
    }

    pub fn certificate(self) -> Option<EigenbasisCertificate> {
        match self {
            EigenbasisCheck::Certified(c) => Some(c),
            EigenbasisCheck::Escapes(_) => None,
        }
    }

    pub fn into_result(self) -> Result<EigenbasisCertificate> {
        match self {
            EigenbasisCheck::Certified(c) => Ok(c),
            EigenbasisCheck::Escapes(w) => Err(Error::NotEigenbasis(w.i, w.j)),
        }
    }
}

/// Solves `[ζ_i, ζ_j] = α ζ_i + β ζ_j` for every pair `i < j`, or reports
/// the first pair whose bracket escapes `span(ζ_i, ζ_j)`.
pub fn verify_nijenhuis_eigenbasis(alg: &LieAlgebra, z: &Matrix) -> Result<EigenbasisCheck> {
    let n = alg.dim();
    if z.rows() != n || z.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: z.rows().max(z.cols()),
        });
    }
    let inv = z.inverse()?;
    let cols = z.columns();
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let coords = inv.mul_vec(&alg.bracket(&cols[i], &cols[j])?)?;
            let escapes = coords
                .iter()
                .enumerate()
                .any(|(k, x)| k != i && k != j && !x.is_zero());
            if escapes {
                return Ok(EigenbasisCheck::Escapes(EscapeWitness {
                    i,
                    j,
                    coordinates: coords,
                }));
            }
            pairs.push(PairCoefficients {
                i,
                j,
                alpha: coords[i].clone(),
                beta: coords[j].clone(),
            });
        }
    }
    Ok(EigenbasisCheck::Certified(EigenbasisCertificate {
        basis: z.clone(),
        pairs,
    }))
}

/// Eigenvalues and the certified eigenbasis of a regular semisimple
/// algebraic Nijenhuis operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralCertificate {
    /// Ascending (ℝ) or lexicographic by (re, im) (ℂ); column `k` of the
    /// certificate basis belongs to `eigenvalues[k]`.
    pub eigenvalues: Vec<Scalar>,
    pub certificate: EigenbasisCertificate,
}

/// Recovers the eigenbasis of `op` by a kernel computation per eigenvalue,
/// canonically scaled, and certifies it.
pub fn eigenbasis_of(alg: &LieAlgebra, op: &LinearOperator) -> Result<SpectralCertificate> {
    if !is_regular_semisimple(alg, op)? {
        return Err(Error::NotRegularSemisimple);
    }
    if !is_algebraic_nijenhuis(alg, op)? {
        return Err(Error::NotNijenhuis);
    }
    let n = alg.dim();
    let eigenvalues = char_poly(op.matrix())?.roots_in_field(alg.field())?;
    if eigenvalues.len() != n {
        return Err(Error::Invariant(format!(
            "expected {n} eigenvalues, found {}",
            eigenvalues.len()
        )));
    }
    let mut columns = Vec::with_capacity(n);
    for lambda in &eigenvalues {
        let shifted = op.matrix().sub(&Matrix::identity(n).scale(lambda))?;
        let kernel = shifted.kernel();
        if kernel.len() != 1 {
            return Err(Error::Invariant(format!(
                "eigenspace of {lambda} has dimension {}",
                kernel.len()
            )));
        }
        columns.push(kernel.into_iter().next().expect("one kernel vector"));
    }
    let z = canonical_columns(&Matrix::from_columns(&columns)?);
    let certificate = verify_nijenhuis_eigenbasis(alg, &z)?
        .into_result()
        .map_err(|e| Error::Invariant(format!("eigenbasis of a Nijenhuis operator failed: {e}")))?;
    Ok(SpectralCertificate {
        eigenvalues,
        certificate,
    })
}

/// Scales each column so that its first nonzero coordinate is 1; the
/// canonical representative of a basis up to rescaling.
pub fn canonical_columns(z: &Matrix) -> Matrix {
    let mut out = z.clone();
    for j in 0..z.cols() {
        let col = z.column(j);
        if let Some(lead) = col.iter().find(|x| !x.is_zero()) {
            let inv = lead.recip().expect("nonzero");
            let scaled: Vector = col.iter().map(|x| x * &inv).collect();
            out.set_column(j, &scaled);
        }
    }
    out
}

/// Whether two bases agree up to per-column scaling and a permutation.
pub fn same_basis_up_to_scaling(a: &Matrix, b: &Matrix) -> bool {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return false;
    }
    let mut ca = canonical_columns(a).columns();
    let mut cb = canonical_columns(b).columns();
    let key = |v: &Vector, w: &Vector| {
        v.iter()
            .zip(w)
            .map(|(x, y)| x.cmp_lex(y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    };
    ca.sort_by(key);
    cb.sort_by(key);
    ca == cb
}

/// `c · Id`, Nijenhuis on every algebra.
pub fn scalar_operator(n: usize, c: &Scalar) -> LinearOperator {
    LinearOperator::diag(&vec![c.clone(); n])
}

/// Eigenvalues `0, 1, …, n − 1`.
pub fn default_eigenvalues(n: usize) -> Vec<Scalar> {
    (0..n as i64).map(Scalar::from_int).collect()
}
