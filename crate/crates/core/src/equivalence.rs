//! Commutator patterns of eigenbases, the sl(2) normalization, and
//! certificates `ζ′ᵢ = μᵢ Φ(ζᵢ)` of equivalence under an automorphism `Φ`
//! and rescaling.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Scalar, Vector};
use crate::nijenhuis::verify_nijenhuis_eigenbasis;

/// The cyclic pairs `(1,2), (2,3), (3,1)`, 0-based.
pub const CYCLIC_PAIRS: [(usize, usize); 3] = [(0, 1), (1, 2), (2, 0)];

/// `[ζ_i, ζ_j] = α ζ_i + β ζ_j` for one ordered pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicPair {
    pub i: usize,
    pub j: usize,
    pub alpha: Scalar,
    pub beta: Scalar,
}

/// The six coefficients of a three-dimensional eigenbasis in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairPattern {
    pub pairs: [CyclicPair; 3],
}

impl PairPattern {
    pub fn pair(&self, i: usize, j: usize) -> Option<&CyclicPair> {
        self.pairs.iter().find(|p| p.i == i && p.j == j)
    }

    pub fn is_zero(&self) -> bool {
        self.pairs
            .iter()
            .all(|p| p.alpha.is_zero() && p.beta.is_zero())
    }

    /// Whether substituting the coefficients back reproduces the brackets
    /// of the basis `z`.
    pub fn reproduces(&self, alg: &LieAlgebra, z: &Matrix) -> Result<bool> {
        let cols = z.columns();
        for p in &self.pairs {
            let b = alg.bracket(&cols[p.i], &cols[p.j])?;
            let expect: Vector = cols[p.i]
                .iter()
                .zip(&cols[p.j])
                .map(|(x, y)| &(&p.alpha * x) + &(&p.beta * y))
                .collect();
            if b != expect {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Coefficients of an eigenbasis in the cyclic pair order.
pub fn eigenbasis_pattern(alg: &LieAlgebra, z: &Matrix) -> Result<PairPattern> {
    if alg.dim() != 3 {
        return Err(Error::NotThreeDimensional(alg.dim()));
    }
    let cert = verify_nijenhuis_eigenbasis(alg, z)?.into_result()?;
    let pairs = CYCLIC_PAIRS.map(|(i, j)| {
        let (alpha, beta) = cert.coefficients(i, j);
        CyclicPair { i, j, alpha, beta }
    });
    Ok(PairPattern { pairs })
}

/// `[ζ₁,ζ₂] = Bζ₁ + Aζ₂`, `[ζ₂,ζ₃] = Cζ₂ + Bζ₃`, `[ζ₃,ζ₁] = Aζ₃ + Cζ₁`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sl2Triple {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl Sl2Triple {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Self {
        Sl2Triple { a, b, c }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(Scalar::from_int(a), Scalar::from_int(b), Scalar::from_int(c))
    }

    pub fn to_array(&self) -> [Scalar; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    /// The triple after `ζᵢ ↦ μᵢ ζᵢ`: `(μ₁A, μ₂B, μ₃C)`.
    pub fn scaled(&self, mu: &[Scalar; 3]) -> Self {
        Sl2Triple {
            a: &mu[0] * &self.a,
            b: &mu[1] * &self.b,
            c: &mu[2] * &self.c,
        }
    }
}

/// Checks the shared-coefficient shape and that `A, B, C` are nonzero.
pub fn sl2_pattern(alg: &LieAlgebra, z: &Matrix) -> Result<Sl2Triple> {
    let p = eigenbasis_pattern(alg, z)?;
    let [p12, p23, p31] = &p.pairs;
    let shared = [
        ("A", &p12.beta, "beta(1,2)", &p31.alpha, "alpha(3,1)"),
        ("B", &p12.alpha, "alpha(1,2)", &p23.beta, "beta(2,3)"),
        ("C", &p23.alpha, "alpha(2,3)", &p31.beta, "beta(3,1)"),
    ];
    for (name, x, xn, y, yn) in shared {
        if x != y {
            return Err(Error::PatternViolation(format!(
                "{name}: {xn} = {x} but {yn} = {y}"
            )));
        }
        if x.is_zero() {
            return Err(Error::PatternViolation(format!("{name} = 0")));
        }
    }
    Ok(Sl2Triple {
        a: p12.beta.clone(),
        b: p12.alpha.clone(),
        c: p23.alpha.clone(),
    })
}

/// The scalings `μ = (A′/A, B′/B, C′/C)` carrying one sl(2) triple to
/// another.
pub fn sl2_rescale_to(from: &Sl2Triple, to: &Sl2Triple) -> Result<[Scalar; 3]> {
    let ratio = |x: &Scalar, y: &Scalar, name: &'static str| -> Result<Scalar> {
        if x.is_zero() || y.is_zero() {
            return Err(Error::ZeroScalar(name));
        }
        Ok(y * &x.recip().expect("nonzero"))
    };
    Ok([
        ratio(&from.a, &to.a, "A")?,
        ratio(&from.b, &to.b, "B")?,
        ratio(&from.c, &to.c, "C")?,
    ])
}

/// `z` with column `i` multiplied by `mu[i]`.
pub fn scale_columns(z: &Matrix, mu: &[Scalar]) -> Matrix {
    let mut out = z.clone();
    for (j, m) in mu.iter().enumerate() {
        let col: Vector = z.column(j).iter().map(|x| x * m).collect();
        out.set_column(j, &col);
    }
    out
}

/// Whether `Φ` is invertible and `Φ[x, y] = [Φx, Φy]` on all basis pairs.
pub fn is_automorphism(alg: &LieAlgebra, phi: &Matrix) -> bool {
    let n = alg.dim();
    if phi.rows() != n || phi.cols() != n {
        return false;
    }
    if phi.det().map_or(true, |d| d.is_zero()) {
        return false;
    }
    let cols = phi.columns();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = phi
                .mul_vec(&alg.basis_bracket(i, j))
                .expect("shapes checked");
            let rhs = alg.bracket(&cols[i], &cols[j]).expect("shapes checked");
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Whether column `i` of `z′` equals `μᵢ Φ (column i of z)` for all `i`,
/// with `Φ` an automorphism.
pub fn check_equivalence_certificate(
    alg: &LieAlgebra,
    z: &Matrix,
    z_prime: &Matrix,
    phi: &Matrix,
    mu: &[Scalar; 3],
) -> Result<bool> {
    if mu.iter().any(Zero::is_zero) {
        return Err(Error::ZeroScalar("mu"));
    }
    let n = alg.dim();
    for m in [z, z_prime, phi] {
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: m.rows().max(m.cols()),
            });
        }
    }
    if n != 3 {
        return Err(Error::NotThreeDimensional(n));
    }
    if !is_automorphism(alg, phi) {
        return Ok(false);
    }
    let image = scale_columns(&phi.checked_mul(z)?, mu);
    Ok(&image == z_prime)
}

/// Whether the derived algebra is a proper subspace, which is what keeps
/// eigenbases with structurally different patterns from being equivalent.
pub fn commutant_obstruction(alg: &LieAlgebra) -> bool {
    alg.derived_subalgebra_dim() < alg.dim()
}

/// Number of basis pairs with vanishing bracket. Preserved by automorphisms
/// and rescaling, so two eigenbases with different counts are not
/// equivalent.
pub fn commuting_pair_count(alg: &LieAlgebra, z: &Matrix) -> Result<usize> {
    let cols = z.columns();
    let n = cols.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if alg.bracket(&cols[i], &cols[j])?.iter().all(Zero::is_zero) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Two eigenbases of 𝔞₃,₅ that are not equivalent: the standard basis,
/// with one commuting pair, and `(η₁, η₁+η₂, η₁+η₃)`, with none.
pub fn a35_counterexample() -> (Matrix, Matrix) {
    (
        Matrix::identity(3),
        Matrix::from_int_rows(&[[1, 1, 1], [0, 1, 0], [0, 0, 1]]),
    )
}

/// Certificate file layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquivalenceCertificate {
    #[serde(rename = "Z")]
    pub z: Matrix,
    #[serde(rename = "Zprime")]
    pub z_prime: Matrix,
    #[serde(rename = "Phi")]
    pub phi: Matrix,
    pub mu: [Scalar; 3],
}

impl EquivalenceCertificate {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn check(&self, alg: &LieAlgebra) -> Result<bool> {
        check_equivalence_certificate(alg, &self.z, &self.z_prime, &self.phi, &self.mu)
    }

    /// The certificate `z′ → z` with `(Φ⁻¹, 1/μ)`.
    pub fn inverse(&self) -> Result<Self> {
        let mu = self
            .mu
            .clone()
            .map(|m| m.recip().ok_or(Error::ZeroScalar("mu")));
        let [a, b, c] = mu;
        Ok(EquivalenceCertificate {
            z: self.z_prime.clone(),
            z_prime: self.z.clone(),
            phi: self.phi.inverse()?,
            mu: [a?, b?, c?],
        })
    }
}
