//! Lie algebras given by structure constants `[e_i, e_j] = c^k_{ij} e_k`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det3, Field, Matrix, Scalar, Vector};

/// A finite-dimensional Lie algebra with a fixed basis.
///
/// The full structure tensor is stored, `c[(i·dim + j)·dim + k] = c^k_{ij}`,
/// with antisymmetry in `i, j` checked at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    dim: usize,
    field: Field,
    c: Vec<Scalar>,
}

impl LieAlgebra {
    /// Validating constructor: antisymmetry, field membership and Jacobi.
    pub fn from_tensor(dim: usize, field: Field, c: Vec<Scalar>) -> Result<Self> {
        let alg = Self::from_tensor_unchecked(dim, field, c)?;
        alg.check_jacobi()?;
        Ok(alg)
    }

    /// Checks shape, field membership and antisymmetry but skips the Jacobi
    /// identity.
    pub fn from_tensor_unchecked(dim: usize, field: Field, c: Vec<Scalar>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if c.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: c.len(),
            });
        }
        if let Some(x) = c.iter().find(|x| !field.contains(x)) {
            return Err(Error::OutsideField {
                value: x.clone(),
                field,
            });
        }
        let alg = LieAlgebra { dim, field, c };
        for i in 0..dim {
            for j in i..dim {
                for k in 0..dim {
                    if alg.constant(i, j, k) != &-alg.constant(j, i, k) {
                        return Err(Error::NotAntisymmetric { i, j, k });
                    }
                }
            }
        }
        Ok(alg)
    }

    /// Builds the tensor from brackets `[e_i, e_j] = out` listed for `i < j`
    /// (0-based); unlisted pairs are zero.
    pub fn from_brackets(dim: usize, field: Field, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let c = Self::tensor_from_brackets(dim, brackets)?;
        Self::from_tensor(dim, field, c)
    }

    fn tensor_from_brackets(dim: usize, brackets: &[(usize, usize, Vector)]) -> Result<Vec<Scalar>> {
        let mut c = vec![Scalar::zero(); dim * dim * dim];
        for (i, j, out) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: i.max(j) + 1,
                });
            }
            if i >= j {
                return Err(Error::Parse(format!(
                    "bracket ({}, {}) must have i < j",
                    i + 1,
                    j + 1
                )));
            }
            if out.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: out.len(),
                });
            }
            for (k, x) in out.iter().enumerate() {
                c[(i * dim + j) * dim + k] = x.clone();
                c[(j * dim + i) * dim + k] = -x;
            }
        }
        Ok(c)
    }

    pub fn abelian(dim: usize, field: Field) -> Self {
        LieAlgebra {
            dim,
            field,
            c: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `c^k_{ij}` (0-based).
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.c
    }

    /// The same tensor with a different field tag. Moving to `Real`
    /// fails if any constant is non-real.
    pub fn with_field(&self, field: Field) -> Result<Self> {
        Self::from_tensor_unchecked(self.dim, field, self.c.clone())
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        let base = (i * self.dim + j) * self.dim;
        self.c[base..base + self.dim].to_vec()
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j || y[j].is_zero() {
                    continue;
                }
                let coef = &x[i] * &y[j];
                let base = (i * n + j) * n;
                for (k, o) in out.iter_mut().enumerate() {
                    let cijk = &self.c[base + k];
                    if !cijk.is_zero() {
                        *o += &(&coef * cijk);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Ok(())` iff `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0` on every basis
    /// triple; otherwise the first failing triple (0-based, `i < j < k`).
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim;
        let e = |i: usize| unit(n, i);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let t1 = self.bracket(&self.basis_bracket(i, j), &e(k))?;
                    let t2 = self.bracket(&self.basis_bracket(j, k), &e(i))?;
                    let t3 = self.bracket(&self.basis_bracket(k, i), &e(j))?;
                    let sum = t1.iter().zip(&t2).zip(&t3).all(|((a, b), c)| (&(a + b) + c).is_zero());
                    if !sum {
                        return Err(Error::Jacobi(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Structure constants in the basis given by the columns of `z`.
    pub fn change_basis(&self, z: &Matrix) -> Result<LieAlgebra> {
        let n = self.dim;
        if z.rows() != n || z.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: z.rows().max(z.cols()),
            });
        }
        if let Some(x) = z.entries().iter().find(|x| !self.field.contains(x)) {
            return Err(Error::OutsideField {
                value: x.clone(),
                field: self.field,
            });
        }
        let inv = z.inverse()?;
        let cols = z.columns();
        let mut c = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in i + 1..n {
                let coords = inv.mul_vec(&self.bracket(&cols[i], &cols[j])?)?;
                for (k, x) in coords.into_iter().enumerate() {
                    c[(j * n + i) * n + k] = -&x;
                    c[(i * n + j) * n + k] = x;
                }
            }
        }
        Ok(LieAlgebra {
            dim: n,
            field: self.field,
            c,
        })
    }

    /// Whether `x, y` span a two-dimensional subalgebra, decided by
    /// `det(x, y, [x, y]) = 0`. Three-dimensional algebras only.
    pub fn is_subalgebra_pair(&self, x: &[Scalar], y: &[Scalar]) -> Result<bool> {
        if self.dim != 3 {
            return Err(Error::NotThreeDimensional(self.dim));
        }
        let b = self.bracket(x, y)?;
        if !crate::linalg::independent(&[x.to_vec(), y.to_vec()]) {
            return Err(Error::Dependent);
        }
        let m = Matrix::from_columns(&[x.to_vec(), y.to_vec(), b])?;
        Ok(det3(&m).is_zero())
    }

    /// Dimension-independent version of [`Self::is_subalgebra_pair`] by
    /// rank: `[x, y] ∈ span(x, y)`.
    pub fn spans_subalgebra(&self, x: &[Scalar], y: &[Scalar]) -> Result<bool> {
        let b = self.bracket(x, y)?;
        let pair = [x.to_vec(), y.to_vec()];
        if !crate::linalg::independent(&pair) {
            return Err(Error::Dependent);
        }
        Ok(span_contains(&pair, &b))
    }

    /// Dimension of the derived subalgebra `[g, g]`.
    pub fn derived_subalgebra_dim(&self) -> usize {
        let n = self.dim;
        let cols: Vec<Vector> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.basis_bracket(i, j))
            .collect();
        if cols.is_empty() {
            return 0;
        }
        Matrix::from_columns(&cols).map_or(0, |m| m.rank())
    }

    /// Dimensions of the lower central series `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …`
    /// until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let n = self.dim;
        let mut current: Vec<Vector> = (0..n).map(|i| unit(n, i)).collect();
        let mut dims = vec![n];
        loop {
            let mut spanning = Vec::new();
            for i in 0..n {
                for v in &current {
                    let b = self.bracket(&unit(n, i), v).expect("conforming vectors");
                    if b.iter().any(|x| !x.is_zero()) {
                        spanning.push(b);
                    }
                }
            }
            let next = basis_of_span(&spanning);
            let d = next.len();
            if d == *dims.last().expect("nonempty") {
                return dims;
            }
            dims.push(d);
            if d == 0 {
                return dims;
            }
            current = next;
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last() == Some(&0)
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Nonzero brackets `[e_i, e_j]` for `i < j`, 0-based.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vector)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let b = self.basis_bracket(i, j);
                if b.iter().any(|x| !x.is_zero()) {
                    out.push((i, j, b));
                }
            }
        }
        out
    }

    pub fn to_doc(&self) -> AlgebraDoc {
        AlgebraDoc {
            dim: self.dim,
            field: self.field,
            brackets: self
                .nonzero_brackets()
                .into_iter()
                .map(|(i, j, out)| BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    out,
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &AlgebraDoc) -> Result<Self> {
        let mut brackets = Vec::with_capacity(doc.brackets.len());
        for b in &doc.brackets {
            if b.i == 0 || b.j == 0 {
                return Err(Error::Parse("bracket indices are 1-based".into()));
            }
            brackets.push((b.i - 1, b.j - 1, b.out.clone()));
        }
        Self::from_brackets(doc.dim, doc.field, &brackets)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: AlgebraDoc = serde_json::from_str(text)?;
        Self::from_doc(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_doc()).expect("algebra serializes")
    }

    /// Human-readable bracket table, one line per nonzero bracket.
    pub fn bracket_table(&self) -> Vec<String> {
        self.nonzero_brackets()
            .into_iter()
            .map(|(i, j, b)| format!("[e{}, e{}] = {}", i + 1, j + 1, format_combination(&b, "e")))
            .collect()
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim={}, field={}", self.dim, self.field)?;
        for line in self.bracket_table() {
            write!(f, "; {line}")?;
        }
        f.write_str(")")
    }
}

/// Algebra JSON document. Indices are 1-based and brackets are listed for
/// `i < j` only.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub field: Field,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub out: Vector,
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Whether `w` lies in the span of `vectors`.
pub fn span_contains(vectors: &[Vector], w: &[Scalar]) -> bool {
    if w.iter().all(Zero::is_zero) {
        return true;
    }
    let base = basis_of_span(vectors).len();
    let mut with = vectors.to_vec();
    with.push(w.to_vec());
    basis_of_span(&with).len() == base
}

/// A basis of the span, taken from the rows of an echelon form.
pub fn basis_of_span(vectors: &[Vector]) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(vectors.to_vec()).expect("equal lengths");
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

/// `2e2 - e3` style rendering of a coordinate vector.
pub fn format_combination(v: &[Scalar], name: &str) -> String {
    let mut out = String::new();
    for (k, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let neg = x.is_real() && x.re() < &num_rational::BigRational::zero();
        let mag = if neg { -x } else { x.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag != Scalar::one() {
            if mag.is_real() {
                out.push_str(&mag.to_string());
            } else {
                out.push_str(&format!("({mag})"));
            }
            out.push('·');
        }
        out.push_str(&format!("{name}{}", k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
