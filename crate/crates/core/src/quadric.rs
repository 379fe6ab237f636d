//! The subalgebra quadric of a three-dimensional Lie algebra.
//!
//! Two independent vectors `α, β` span a subalgebra iff `M = α × β`
//! satisfies `Mᵀ Q M = 0`, where `Q` is built from the structure
//! constants. A basis in which every pair spans a subalgebra therefore
//! corresponds to three independent isotropic vectors of `Q`; the basis is
//! recovered from them through the adjugate.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{
    adjugate3, congruence_diagonalize, det3, Field, Matrix, Scalar, Signature, Vector,
};
use crate::nijenhuis::{canonical_columns, verify_nijenhuis_eigenbasis, EigenbasisCertificate};

/// Symmetric 3×3 matrix of the subalgebra form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QuadraticForm3 {
    matrix: Matrix,
}

impl QuadraticForm3 {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows() != 3 || matrix.cols() != 3 {
            return Err(Error::NotThreeDimensional(matrix.rows().max(matrix.cols())));
        }
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(QuadraticForm3 { matrix })
    }

    /// Diagonal form `Σ dᵢ Mᵢ²`.
    pub fn diagonal(d: [i64; 3]) -> Self {
        QuadraticForm3 {
            matrix: Matrix::diag(&d.map(Scalar::from_int)),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `Mᵀ Q M`.
    pub fn eval(&self, m: &[Scalar]) -> Scalar {
        let qm = self.matrix.mul_vec(m).expect("length-3 vector");
        m.iter().zip(&qm).map(|(a, b)| a * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// `Sᵀ Q S`.
    pub fn congruent(&self, s: &Matrix) -> Result<Self> {
        QuadraticForm3::new(&(&s.transpose() * &self.matrix) * s)
    }
}

impl fmt::Display for QuadraticForm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.matrix;
        let mut terms = Vec::new();
        for i in 0..3 {
            if !q[(i, i)].is_zero() {
                terms.push((q[(i, i)].clone(), format!("M{}^2", i + 1)));
            }
        }
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            let c = &q[(i, j)] + &q[(j, i)];
            if !c.is_zero() {
                terms.push((c, format!("M{}M{}", i + 1, j + 1)));
            }
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (c, mono)) in terms.iter().enumerate() {
            let neg = c.is_real() && c.re() < &Zero::zero();
            let mag = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag != Scalar::one() {
                if mag.is_real() {
                    write!(f, "{mag}·")?;
                } else {
                    write!(f, "({mag})·")?;
                }
            }
            f.write_str(mono)?;
        }
        Ok(())
    }
}

/// The form whose isotropic vectors `M = α × β` are exactly the normals of
/// two-dimensional subalgebras `span(α, β)`.
///
/// Diagonal `(c¹₂₃, c²₃₁, c³₁₂)`; the cross coefficients `c¹₃₁ + c²₂₃`,
/// `c²₁₂ + c³₃₁`, `c¹₁₂ + c³₂₃` of `M₁M₂`, `M₂M₃`, `M₁M₃` are split evenly
/// across the symmetric positions.
pub fn subalgebra_form(alg: &LieAlgebra) -> Result<QuadraticForm3> {
    if alg.dim() != 3 {
        return Err(Error::NotThreeDimensional(alg.dim()));
    }
    // c(k, i, j) = c^k_{ij} with 1-based indices.
    let c = |k: usize, i: usize, j: usize| alg.constant(i - 1, j - 1, k - 1).clone();
    let half = Scalar::from_ratio(1, 2);
    let mut q = Matrix::zeros(3, 3);
    q[(0, 0)] = c(1, 2, 3);
    q[(1, 1)] = c(2, 3, 1);
    q[(2, 2)] = c(3, 1, 2);
    let m12 = &(&c(1, 3, 1) + &c(2, 2, 3)) * &half;
    let m23 = &(&c(2, 1, 2) + &c(3, 3, 1)) * &half;
    let m13 = &(&c(1, 1, 2) + &c(3, 2, 3)) * &half;
    q[(0, 1)] = m12.clone();
    q[(1, 0)] = m12;
    q[(1, 2)] = m23.clone();
    q[(2, 1)] = m23;
    q[(0, 2)] = m13.clone();
    q[(2, 0)] = m13;
    QuadraticForm3::new(q)
}

/// Shape of the isotropic cone `{M : Q(M) = 0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadricReason {
    /// Every vector is isotropic.
    ZeroForm,
    /// A double plane: every solution lies in one plane.
    Plane,
    /// A real definite rank-2 form: solutions form a line.
    Line,
    /// A product of two distinct linear forms.
    TwoPlanes,
    /// A nondegenerate isotropic cone.
    Cone,
    /// A real definite rank-3 form: only `M = 0`.
    Definite,
}

impl QuadricReason {
    pub fn tag(self) -> &'static str {
        match self {
            QuadricReason::ZeroForm => "zero-form",
            QuadricReason::Plane => "plane",
            QuadricReason::Line => "line",
            QuadricReason::TwoPlanes => "two-planes",
            QuadricReason::Cone => "cone",
            QuadricReason::Definite => "definite",
        }
    }
}

impl fmt::Display for QuadricReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricClassification {
    pub rank: usize,
    /// Present for real forms only.
    pub signature: Option<Signature>,
    /// Three linearly independent isotropic vectors exist over the field.
    pub admits: bool,
    pub reason: QuadricReason,
}

/// Decides from rank and signature whether the isotropic cone contains
/// three linearly independent vectors.
///
/// Over ℝ: rank 0, rank 2 with signature (1,1), and rank 3 indefinite
/// admit; rank 1 (double plane), rank 2 definite (line) and rank 3
/// definite do not. Over ℂ every form of rank 0, 2 or 3 admits.
pub fn classify_form(q: &QuadraticForm3, field: Field) -> Result<QuadricClassification> {
    if let Some(x) = q.matrix.entries().iter().find(|x| !field.contains(x)) {
        return Err(Error::OutsideField {
            value: x.clone(),
            field,
        });
    }
    let diag = congruence_diagonalize(&q.matrix)?;
    let rank = diag.rank();
    let signature = diag.signature(field);
    let definite = signature.is_some_and(|s| s.positive == 0 || s.negative == 0);
    let (admits, reason) = match rank {
        0 => (true, QuadricReason::ZeroForm),
        1 => (false, QuadricReason::Plane),
        2 if definite => (false, QuadricReason::Line),
        2 => (true, QuadricReason::TwoPlanes),
        _ if definite => (false, QuadricReason::Definite),
        _ => (true, QuadricReason::Cone),
    };
    Ok(QuadricClassification {
        rank,
        signature,
        admits,
        reason,
    })
}

/// Whether the algebra admits a regular semisimple algebraic Nijenhuis
/// operator, decided on its subalgebra form.
pub fn admits_regular_semisimple(alg: &LieAlgebra) -> Result<QuadricClassification> {
    if alg.dim() != 3 {
        return Err(Error::NotThreeDimensional(alg.dim()));
    }
    if alg.is_abelian() {
        return Ok(QuadricClassification {
            rank: 0,
            signature: (alg.field() == Field::Real).then_some(Signature {
                positive: 0,
                negative: 0,
            }),
            admits: true,
            reason: QuadricReason::ZeroForm,
        });
    }
    classify_form(&subalgebra_form(alg)?, alg.field())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsotropicSearch {
    /// Three independent isotropic vectors, in enumeration order.
    Found([Vector; 3]),
    /// The classification rules out a triple at every height.
    Impossible(QuadricClassification),
    /// The form admits a triple but none has coordinates within the box.
    NotFound { height: u32 },
}

/// Searches integer (ℝ) or Gaussian-integer (ℂ) vectors with every
/// coordinate part bounded by `height` for three independent isotropic
/// vectors.
///
/// Candidates are projective representatives (first nonzero coordinate
/// positive, or with `re > 0, im ≥ 0` over ℂ) enumerated lexicographically,
/// each coordinate running through `0, 1, −1, 2, −2, …` (Gaussian
/// coordinates ordered by max-norm shell, then real part, then imaginary
/// part). The lexicographically first independent triple is returned.
pub fn isotropic_triple(q: &QuadraticForm3, field: Field, height: u32) -> Result<IsotropicSearch> {
    if height == 0 {
        return Err(Error::Parse("height must be at least 1".into()));
    }
    let class = classify_form(q, field)?;
    if !class.admits {
        return Ok(IsotropicSearch::Impossible(class));
    }
    if q.is_zero() {
        let e = |i: usize| crate::lie::unit(3, i);
        return Ok(IsotropicSearch::Found([e(0), e(1), e(2)]));
    }
    let digits = coordinate_digits(field, height as i64);
    let form = IntForm::new(q);
    let mut isotropic: Vec<[G; 3]> = Vec::new();
    for a in &digits {
        for b in &digits {
            for c in &digits {
                let m = [*a, *b, *c];
                if !is_projective_rep(&m) {
                    continue;
                }
                if form.is_isotropic(&m) {
                    isotropic.push(m);
                }
            }
        }
    }
    Ok(match first_independent_triple(&isotropic) {
        Some([x, y, z]) => IsotropicSearch::Found([to_vector(&x), to_vector(&y), to_vector(&z)]),
        None => IsotropicSearch::NotFound { height },
    })
}

/// Recovers a basis whose pairwise cross products are proportional to the
/// given normals: `Z = adj(R)` for `R` with rows `M¹, M², M³`, so that
/// `ζ₂ × ζ₃ ∥ M¹`, `ζ₃ × ζ₁ ∥ M²`, `ζ₁ × ζ₂ ∥ M³`. Columns are canonically
/// scaled.
pub fn eigenbasis_from_isotropic_triple(ms: &[Vector; 3]) -> Result<Matrix> {
    let r = Matrix::from_rows(ms.to_vec())?;
    if r.cols() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: r.cols(),
        });
    }
    if det3(&r).is_zero() {
        return Err(Error::Dependent);
    }
    Ok(canonical_columns(&adjugate3(&r)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EigenbasisSearch {
    Found {
        classification: QuadricClassification,
        isotropic: [Vector; 3],
        certificate: EigenbasisCertificate,
    },
    DoesNotAdmit(QuadricClassification),
    NoWitness {
        classification: QuadricClassification,
        height: u32,
    },
}

impl EigenbasisSearch {
    pub fn classification(&self) -> &QuadricClassification {
        match self {
            EigenbasisSearch::Found { classification, .. } => classification,
            EigenbasisSearch::DoesNotAdmit(c) => c,
            EigenbasisSearch::NoWitness { classification, .. } => classification,
        }
    }

    pub fn certificate(&self) -> Option<&EigenbasisCertificate> {
        match self {
            EigenbasisSearch::Found { certificate, .. } => Some(certificate),
            _ => None,
        }
    }
}

/// Form, classification, isotropic search, basis recovery and
/// certification in one pass.
pub fn find_eigenbasis(alg: &LieAlgebra, height: u32) -> Result<EigenbasisSearch> {
    let classification = admits_regular_semisimple(alg)?;
    if !classification.admits {
        return Ok(EigenbasisSearch::DoesNotAdmit(classification));
    }
    let q = subalgebra_form(alg)?;
    let isotropic = match isotropic_triple(&q, alg.field(), height)? {
        IsotropicSearch::Found(ms) => ms,
        IsotropicSearch::NotFound { height } => {
            return Ok(EigenbasisSearch::NoWitness {
                classification,
                height,
            })
        }
        IsotropicSearch::Impossible(c) => {
            return Err(Error::Invariant(format!(
                "classification disagrees with search: {c:?}"
            )))
        }
    };
    let z = eigenbasis_from_isotropic_triple(&isotropic)?;
    let certificate = verify_nijenhuis_eigenbasis(alg, &z)?
        .into_result()
        .map_err(|e| Error::Invariant(format!("basis from isotropic triple: {e}")))?;
    Ok(EigenbasisSearch::Found {
        classification,
        isotropic,
        certificate,
    })
}

/// True iff the three projective points are distinct and not on one line,
/// i.e. the vectors are independent.
pub fn noncollinear_triple_check(ms: &[Vector; 3]) -> Result<bool> {
    for m in ms {
        if m.len() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: m.len(),
            });
        }
        if m.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
    }
    Ok(!det3(&Matrix::from_rows(ms.to_vec())?).is_zero())
}

/// Classification report JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationReport {
    pub form: Matrix,
    pub rank: usize,
    pub signature: Option<[usize; 2]>,
    pub admits: bool,
    pub reason: QuadricReason,
    /// Certified eigenbasis (columns are basis vectors), when one was found.
    pub witness: Option<Matrix>,
}

impl ClassificationReport {
    pub fn new(form: &QuadraticForm3, class: &QuadricClassification, witness: Option<Matrix>) -> Self {
        ClassificationReport {
            form: form.matrix.clone(),
            rank: class.rank,
            signature: class.signature.map(|s| [s.positive, s.negative]),
            admits: class.admits,
            reason: class.reason,
            witness,
        }
    }
}

// ---- integer fast path for the box search ----

/// Gaussian integer with `i128` parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct G {
    re: i128,
    im: i128,
}

impl G {
    const ZERO: G = G { re: 0, im: 0 };

    fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    fn add(self, o: G) -> G {
        G {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }

    fn sub(self, o: G) -> G {
        G {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }

    fn mul(self, o: G) -> G {
        G {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

fn to_vector(m: &[G; 3]) -> Vector {
    m.iter()
        .map(|g| Scalar::new(BigInt::from(g.re).into(), BigInt::from(g.im).into()))
        .collect()
}

/// `0, 1, −1, 2, −2, …, h, −h`.
fn signed_digits(h: i64) -> Vec<i64> {
    let mut out = vec![0];
    for k in 1..=h {
        out.push(k);
        out.push(-k);
    }
    out
}

fn coordinate_digits(field: Field, h: i64) -> Vec<G> {
    let reals = signed_digits(h);
    match field {
        Field::Real => reals
            .iter()
            .map(|&x| G {
                re: x as i128,
                im: 0,
            })
            .collect(),
        Field::Complex => {
            let mut out = Vec::new();
            for shell in 0..=h {
                for &x in &reals {
                    for &y in &reals {
                        if x.abs().max(y.abs()) == shell {
                            out.push(G {
                                re: x as i128,
                                im: y as i128,
                            });
                        }
                    }
                }
            }
            out
        }
    }
}

fn is_projective_rep(m: &[G; 3]) -> bool {
    match m.iter().find(|g| !g.is_zero()) {
        Some(g) => g.re > 0 && g.im >= 0,
        None => false,
    }
}

fn det_g(a: &[G; 3], b: &[G; 3], c: &[G; 3]) -> G {
    let minor = |i: usize, j: usize| b[i].mul(c[j]).sub(b[j].mul(c[i]));
    a[0].mul(minor(1, 2))
        .sub(a[1].mul(minor(0, 2)))
        .add(a[2].mul(minor(0, 1)))
}

fn first_independent_triple(vs: &[[G; 3]]) -> Option<[[G; 3]; 3]> {
    for (ia, a) in vs.iter().enumerate() {
        for (ib, b) in vs.iter().enumerate().skip(ia + 1) {
            for c in vs.iter().skip(ib + 1) {
                if !det_g(a, b, c).is_zero() {
                    return Some([*a, *b, *c]);
                }
            }
        }
    }
    None
}

/// `Q` scaled to Gaussian-integer entries, or the exact form when the
/// scaled entries do not fit comfortably in machine integers.
enum IntForm<'a> {
    Small([[G; 3]; 3]),
    Exact(&'a QuadraticForm3),
}

impl<'a> IntForm<'a> {
    fn new(q: &'a QuadraticForm3) -> Self {
        let lcm = q
            .matrix
            .entries()
            .iter()
            .flat_map(|x| [x.re().denom().clone(), x.im().denom().clone()])
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        let scale = num_rational::BigRational::from_integer(lcm);
        let limit = BigInt::from(1i64 << 40);
        let mut out = [[G::ZERO; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let x = &q.matrix[(i, j)];
                let re = (x.re() * &scale).to_integer();
                let im = (x.im() * &scale).to_integer();
                if re.magnitude() > limit.magnitude() || im.magnitude() > limit.magnitude() {
                    return IntForm::Exact(q);
                }
                out[i][j] = G {
                    re: re.to_i128().expect("bounded"),
                    im: im.to_i128().expect("bounded"),
                };
            }
        }
        IntForm::Small(out)
    }

    fn is_isotropic(&self, m: &[G; 3]) -> bool {
        match self {
            IntForm::Small(q) => {
                let mut acc = G::ZERO;
                for i in 0..3 {
                    for j in 0..3 {
                        acc = acc.add(q[i][j].mul(m[i]).mul(m[j]));
                    }
                }
                acc.is_zero()
            }
            IntForm::Exact(q) => q.eval(&to_vector(m)).is_zero(),
        }
    }
}
