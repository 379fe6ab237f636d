//! Congruence diagonalization of symmetric forms, `Sᵀ Q S = D`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{Field, Matrix, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Congruence {
    /// Diagonal of `D`.
    pub diagonal: Vec<Scalar>,
    /// Invertible `S` with `Sᵀ Q S = D`.
    pub transform: Matrix,
}

/// Sign counts of a real form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
}

impl Congruence {
    pub fn diagonal_matrix(&self) -> Matrix {
        Matrix::diag(&self.diagonal)
    }

    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Signature over ℝ. Returns `None` for complex-tagged forms, where
    /// only the rank is a congruence invariant.
    pub fn signature(&self, field: Field) -> Option<Signature> {
        if field == Field::Complex {
            return None;
        }
        let mut sig = Signature {
            positive: 0,
            negative: 0,
        };
        for d in &self.diagonal {
            match d.real_sign()? {
                std::cmp::Ordering::Greater => sig.positive += 1,
                std::cmp::Ordering::Less => sig.negative += 1,
                std::cmp::Ordering::Equal => {}
            }
        }
        Some(sig)
    }
}

/// Symmetric Gaussian elimination. When the pivot is zero, a later nonzero
/// diagonal entry is swapped in; failing that, a nonzero off-diagonal entry
/// `q_kj` is folded in by `e_k ← e_k + e_j`, which makes the pivot `2 q_kj`.
pub fn congruence_diagonalize(q: &Matrix) -> Result<Congruence> {
    let n = q.require_square()?;
    if !q.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut a = q.clone();
    let mut s = Matrix::identity(n);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap(&mut a, &mut s, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                add_multiple(&mut a, &mut s, k, j, &Scalar::one());
            } else {
                continue;
            }
        }
        let inv = a[(k, k)].recip().expect("pivot is nonzero");
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = -(&a[(i, k)] * &inv);
            add_multiple(&mut a, &mut s, i, k, &f);
        }
    }
    Ok(Congruence {
        diagonal: (0..n).map(|i| a[(i, i)].clone()).collect(),
        transform: s,
    })
}

fn swap(a: &mut Matrix, s: &mut Matrix, k: usize, j: usize) {
    let n = a.rows();
    for r in 0..n {
        let t = a[(r, k)].clone();
        a[(r, k)] = a[(r, j)].clone();
        a[(r, j)] = t;
    }
    for c in 0..n {
        let t = a[(k, c)].clone();
        a[(k, c)] = a[(j, c)].clone();
        a[(j, c)] = t;
    }
    for r in 0..n {
        let t = s[(r, k)].clone();
        s[(r, k)] = s[(r, j)].clone();
        s[(r, j)] = t;
    }
}

/// `e_target ← e_target + f·e_source`: column op, matching row op, and the
/// same column op on `s`.
fn add_multiple(a: &mut Matrix, s: &mut Matrix, target: usize, source: usize, f: &Scalar) {
    let n = a.rows();
    for r in 0..n {
        let d = f * &a[(r, source)];
        a[(r, target)] += &d;
    }
    for c in 0..n {
        let d = f * &a[(source, c)];
        a[(target, c)] += &d;
    }
    for r in 0..n {
        let d = f * &s[(r, source)];
        s[(r, target)] += &d;
    }
}
