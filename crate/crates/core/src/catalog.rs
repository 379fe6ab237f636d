//! The three-dimensional classification lists over ℝ and ℂ, their printed
//! Nijenhuis eigenbases, and the operator families on `gl(n)` and on
//! central extensions.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Field, Matrix, Scalar, Vector};
use crate::nijenhuis::LinearOperator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A31,
    A32,
    A33,
    A34,
    A35,
    A36,
    A37,
    A38,
    B31,
    B32,
    B33,
    B34,
    B35,
    B36,
}

impl Family {
    pub const REAL: [Family; 8] = [
        Family::A31,
        Family::A32,
        Family::A33,
        Family::A34,
        Family::A35,
        Family::A36,
        Family::A37,
        Family::A38,
    ];
    pub const COMPLEX: [Family; 6] = [
        Family::B31,
        Family::B32,
        Family::B33,
        Family::B34,
        Family::B35,
        Family::B36,
    ];

    pub fn all() -> impl Iterator<Item = Family> {
        Self::REAL.into_iter().chain(Self::COMPLEX)
    }

    pub fn field(self) -> Field {
        if Self::REAL.contains(&self) {
            Field::Real
        } else {
            Field::Complex
        }
    }

    /// `a` for 𝔞₃,₇ and 𝔟₃,₆, `b` for 𝔞₃,₈.
    pub fn parameter_name(self) -> Option<&'static str> {
        match self {
            Family::A37 | Family::B36 => Some("a"),
            Family::A38 => Some("b"),
            _ => None,
        }
    }

    pub fn is_parametric(self) -> bool {
        self.parameter_name().is_some()
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A31 => "a3.1",
            Family::A32 => "a3.2",
            Family::A33 => "a3.3",
            Family::A34 => "a3.4",
            Family::A35 => "a3.5",
            Family::A36 => "a3.6",
            Family::A37 => "a3.7",
            Family::A38 => "a3.8",
            Family::B31 => "b3.1",
            Family::B32 => "b3.2",
            Family::B33 => "b3.3",
            Family::B34 => "b3.4",
            Family::B35 => "b3.5",
            Family::B36 => "b3.6",
        }
    }

    /// Bianchi type label.
    pub fn bianchi(self) -> &'static str {
        match self {
            Family::A31 | Family::B31 => "I",
            Family::A32 | Family::B32 => "II",
            Family::A33 => "IX",
            Family::A34 => "VIII",
            Family::B33 => "IX≅VIII",
            Family::A35 | Family::B34 => "V",
            Family::A36 | Family::B35 => "IV",
            Family::A37 => "VII",
            Family::A38 => "VI",
            Family::B36 => "VII/VI",
        }
    }

    /// Looks a family up by Bianchi label within one of the two lists.
    /// Over ℂ, both `IX` and `VIII` name 𝔟₃,₃, and `VI` and `VII` name 𝔟₃,₆.
    pub fn from_bianchi(label: &str, field: Field) -> Result<Family> {
        let label = label.trim().to_ascii_uppercase();
        let list: &[Family] = match field {
            Field::Real => &Self::REAL,
            Field::Complex => &Self::COMPLEX,
        };
        list.iter()
            .copied()
            .find(|f| f.bianchi().split(['≅', '/']).any(|part| part == label))
            .ok_or(Error::UnknownCatalogId(label))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        Family::all()
            .find(|f| f.name() == t || f.name().replace('.', "") == t)
            .ok_or_else(|| Error::UnknownCatalogId(s.to_string()))
    }
}

/// A catalog entry; the parameter is present exactly for the parametric
/// families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CatalogId {
    family: Family,
    parameter: Option<Scalar>,
}

impl CatalogId {
    pub fn new(family: Family, parameter: Option<Scalar>) -> Result<Self> {
        match (family.parameter_name(), &parameter) {
            (Some(name), None) => {
                return Err(Error::Parameter(format!("{family} needs parameter {name}")))
            }
            (None, Some(p)) => {
                return Err(Error::Parameter(format!(
                    "{family} takes no parameter (got {p})"
                )))
            }
            (Some(_), Some(p)) if !family.field().contains(p) => {
                return Err(Error::Parameter(format!(
                    "{family} needs a real parameter (got {p})"
                )))
            }
            _ => {}
        }
        Ok(CatalogId { family, parameter })
    }

    /// Shorthand for non-parametric families.
    pub fn plain(family: Family) -> Result<Self> {
        Self::new(family, None)
    }

    pub fn parse(name: &str, parameter: Option<Scalar>) -> Result<Self> {
        Self::new(name.parse()?, parameter)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn parameter(&self) -> Option<&Scalar> {
        self.parameter.as_ref()
    }

    pub fn field(&self) -> Field {
        self.family.field()
    }

    pub fn bianchi(&self) -> &'static str {
        self.family.bianchi()
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.parameter, self.family.parameter_name()) {
            (Some(p), Some(name)) => write!(f, "{}({name}={p})", self.family),
            _ => write!(f, "{}", self.family),
        }
    }
}

/// Parameter samples used for sweeps over the parametric families.
pub fn parameter_samples(field: Field) -> Vec<Scalar> {
    match field {
        Field::Real => [-1, 0, 1, 2].map(Scalar::from_int).to_vec(),
        Field::Complex => vec![
            Scalar::zero(),
            Scalar::one(),
            Scalar::i(),
            Scalar::gaussian(1, 1),
        ],
    }
}

/// Every entry of one list, parametric families expanded at the samples.
pub fn sweep(field: Field) -> Vec<CatalogId> {
    let families: &[Family] = match field {
        Field::Real => &Family::REAL,
        Field::Complex => &Family::COMPLEX,
    };
    let mut out = Vec::new();
    for &f in families {
        if f.is_parametric() {
            for p in parameter_samples(field) {
                out.push(CatalogId::new(f, Some(p)).expect("sample lies in the field"));
            }
        } else {
            out.push(CatalogId::plain(f).expect("non-parametric"));
        }
    }
    out
}

fn v(x: [i64; 3]) -> Vector {
    x.map(Scalar::from_int).to_vec()
}

/// Brackets `[e1,e2]`, `[e2,e3]`, `[e3,e1]` as printed.
fn cyclic(field: Field, e12: Vector, e23: Vector, e31: Vector) -> Result<LieAlgebra> {
    let e13: Vector = e31.iter().map(|x| -x).collect();
    LieAlgebra::from_brackets(3, field, &[(0, 1, e12), (1, 2, e23), (0, 2, e13)])
}

fn zero() -> Vector {
    v([0, 0, 0])
}

/// `[η₁,η₂] = a η₂ + η₃, [η₃,η₁] = η₂ − a η₃`.
fn family7(field: Field, a: &Scalar) -> Result<LieAlgebra> {
    let e12 = vec![Scalar::zero(), a.clone(), Scalar::one()];
    let e31 = vec![Scalar::zero(), Scalar::one(), -a];
    cyclic(field, e12, zero(), e31)
}

/// `[η₁,η₂] = b η₂ − η₃, [η₃,η₁] = η₂ − b η₃`.
fn family8(field: Field, b: &Scalar) -> Result<LieAlgebra> {
    let e12 = vec![Scalar::zero(), b.clone(), -Scalar::one()];
    let e31 = vec![Scalar::zero(), Scalar::one(), -b];
    cyclic(field, e12, zero(), e31)
}

fn printed(family: Family, parameter: Option<&Scalar>, field: Field) -> Result<LieAlgebra> {
    use Family::*;
    let p = || parameter.expect("checked by CatalogId::new");
    match family {
        A31 | B31 => Ok(LieAlgebra::abelian(3, field)),
        A32 | B32 => cyclic(field, zero(), v([1, 0, 0]), zero()),
        A33 | B33 => cyclic(field, v([0, 0, 1]), v([1, 0, 0]), v([0, 1, 0])),
        A34 => cyclic(field, v([0, 0, -1]), v([1, 0, 0]), v([0, 1, 0])),
        A35 | B34 => cyclic(field, v([0, 1, 0]), zero(), v([0, 0, -1])),
        A36 | B35 => cyclic(field, v([0, 1, 1]), zero(), v([0, 0, -1])),
        A37 | B36 => family7(field, p()),
        A38 => family8(field, p()),
    }
}

/// An algebra of the real list, structure constants as printed.
pub fn real_algebra(id: &CatalogId) -> Result<LieAlgebra> {
    if id.field() != Field::Real {
        return Err(Error::UnknownCatalogId(format!(
            "{} is not in the real list",
            id.family
        )));
    }
    printed(id.family, id.parameter.as_ref(), Field::Real)
}

/// An algebra of the complex list, structure constants as printed.
pub fn complex_algebra(id: &CatalogId) -> Result<LieAlgebra> {
    if id.field() != Field::Complex {
        return Err(Error::UnknownCatalogId(format!(
            "{} is not in the complex list",
            id.family
        )));
    }
    printed(id.family, id.parameter.as_ref(), Field::Complex)
}

/// Either list, by the id's family.
pub fn algebra(id: &CatalogId) -> Result<LieAlgebra> {
    match id.field() {
        Field::Real => real_algebra(id),
        Field::Complex => complex_algebra(id),
    }
}

/// Columns `(−1,1,1), (1,1,−1), (2,0,0)`.
fn sl2_basis() -> Matrix {
    Matrix::from_int_rows(&[[-1, 1, 2], [1, 1, 0], [1, -1, 0]])
}

/// Columns `(1,0,1), (1,1,0), (0,1,1)`.
fn family8_basis() -> Matrix {
    Matrix::from_int_rows(&[[1, 1, 0], [0, 1, 1], [1, 0, 1]])
}

/// The printed example eigenbasis, columns in η-coordinates. 𝔞₃,₅ and 𝔟₃,₄
/// get the identity, since every basis of them is an eigenbasis.
///
/// For 𝔟₃,₃ and 𝔟₃,₆ the printed coordinates refer to the sl(2) and
/// 𝔞₃,₈-shaped presentations rather than to the printed brackets; see
/// [`printed_presentation`] for the change of basis that makes them valid
/// on the printed algebras.
pub fn printed_eigenbasis(id: &CatalogId) -> Result<Matrix> {
    use Family::*;
    match id.family {
        A34 | B33 => Ok(sl2_basis()),
        A38 | B36 => Ok(family8_basis()),
        A35 | B34 => Ok(Matrix::identity(3)),
        f => Err(Error::NoPrintedBasis(f.name().to_string())),
    }
}

/// How the printed eigenbasis of an entry is realized.
///
/// `algebra` is the presentation in which [`printed_eigenbasis`] is an
/// eigenbasis, and `transport` is the change of basis with
/// `printed.change_basis(transport) == algebra`. The vectors
/// `transport · Z` are then an eigenbasis of the printed algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub printed: LieAlgebra,
    pub algebra: LieAlgebra,
    pub transport: Matrix,
    /// Parameter of `algebra` when it belongs to a parametric family.
    pub parameter: Option<Scalar>,
}

impl Presentation {
    /// The printed basis moved into the coordinates of the printed algebra.
    pub fn basis_on_printed(&self, z: &Matrix) -> Result<Matrix> {
        self.transport.checked_mul(z)
    }
}

/// Over ℂ the printed bases for 𝔟₃,₃ and 𝔟₃,₆ are the real ones for 𝔞₃,₄
/// and 𝔞₃,₈. They are eigenbases of the complexified 𝔞₃,₄ and 𝔞₃,₈-form
/// algebras, which are isomorphic to the printed 𝔟₃,₃ via
/// `diag(i, i, 1)` and to the printed 𝔟₃,₆ with parameter `a` via
/// `diag(−i, 1, i)` (the 𝔞₃,₈-form parameter being `−i·a`).
pub fn printed_presentation(id: &CatalogId) -> Result<Presentation> {
    use Family::*;
    let printed = algebra(id)?;
    let i = Scalar::i();
    let (algebra, transport, parameter) = match id.family {
        A34 | A35 | B34 => (printed.clone(), Matrix::identity(3), None),
        A38 => (printed.clone(), Matrix::identity(3), id.parameter.clone()),
        B33 => (
            real_algebra(&CatalogId::plain(A34)?)?.with_field(Field::Complex)?,
            Matrix::diag(&[i.clone(), i, Scalar::one()]),
            None,
        ),
        B36 => {
            let a = id.parameter.as_ref().expect("checked by CatalogId::new");
            let b = -&(&i * a);
            (
                family8(Field::Complex, &b)?,
                Matrix::diag(&[-&i, Scalar::one(), i]),
                Some(b),
            )
        }
        f => return Err(Error::NoPrintedBasis(f.name().to_string())),
    };
    Ok(Presentation {
        printed,
        algebra,
        transport,
        parameter,
    })
}

/// The printed brackets of the example eigenbasis, `[ζ1,ζ2]`, `[ζ2,ζ3]`,
/// `[ζ3,ζ1]` in ζ-coordinates. For the 𝔞₃,₈ shape `b` is the
/// presentation parameter.
pub fn printed_derived_brackets(family: Family, b: Option<&Scalar>) -> Result<[Vector; 3]> {
    use Family::*;
    match family {
        A34 | B33 => Ok([v([1, -1, 0]), v([0, -2, 1]), v([-2, 0, -1])]),
        A38 | B36 => {
            let b = b.ok_or_else(|| Error::Parameter(format!("{family} needs a parameter")))?;
            let one = Scalar::one();
            let s = &one + b;
            Ok([
                vec![-&s, s, Scalar::zero()],
                vec![Scalar::zero(), Scalar::zero(), b - &one],
                vec![Scalar::zero(), Scalar::zero(), &one - b],
            ])
        }
        A35 | B34 => Ok([v([0, 1, 0]), zero(), v([0, 0, -1])]),
        f => Err(Error::NoPrintedBasis(f.name().to_string())),
    }
}

/// `gl(n)` on the elementary matrices `E₁₁, E₁₂, …, Eₙₙ` (row-major, so
/// `E_ab` has index `a·n + b`), with `[E_ab, E_cd] = δ_bc E_ad − δ_da E_cb`.
pub fn gl_n(n: usize, field: Field) -> Result<LieAlgebra> {
    let d = n * n;
    let mut c = vec![Scalar::zero(); d * d * d];
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for dd in 0..n {
                    let (x, y) = (a * n + b, cc * n + dd);
                    if b == cc {
                        c[(x * d + y) * d + a * n + dd] += &Scalar::one();
                    }
                    if dd == a {
                        c[(x * d + y) * d + cc * n + b] -= &Scalar::one();
                    }
                }
            }
        }
    }
    LieAlgebra::from_tensor_unchecked(d, field, c)
}

fn check_involution(m: &Matrix, name: &'static str) -> Result<usize> {
    let n = m.require_square()?;
    if m.checked_mul(m)? != Matrix::identity(n) {
        return Err(Error::NotInvolution(name));
    }
    Ok(n)
}

/// The operator `X ↦ AXB + BAX + BX − XB` on `gl(n)` for involutions
/// `A, B`, together with `gl(n)` itself.
pub fn gl_n_example_operator(a: &Matrix, b: &Matrix) -> Result<(LieAlgebra, LinearOperator)> {
    let n = check_involution(a, "A")?;
    if check_involution(b, "B")? != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.rows(),
        });
    }
    if n < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: n,
        });
    }
    let field = if a.is_real() && b.is_real() {
        Field::Real
    } else {
        Field::Complex
    };
    let ba = b.checked_mul(a)?;
    let d = n * n;
    let mut l = Matrix::zeros(d, d);
    for r in 0..n {
        for s in 0..n {
            let mut x = Matrix::zeros(n, n);
            x[(r, s)] = Scalar::one();
            let image = (&(a * &x) * b)
                .add(&(&ba * &x))?
                .add(&(b * &x))?
                .sub(&(&x * b))?;
            let col: Vector = image.entries().to_vec();
            l.set_column(r * n + s, &col);
        }
    }
    Ok((gl_n(n, field)?, LinearOperator::new(l)?))
}

/// `alg ⊕ ℂη` with `η` central, and `L ξ = scale · a(ξ) · η`, `L η = 0`.
/// The extra basis vector is last.
pub fn central_extension_operator(
    alg: &LieAlgebra,
    covector: &[Scalar],
    scale: &Scalar,
) -> Result<(LieAlgebra, LinearOperator)> {
    let n = alg.dim();
    if covector.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: covector.len(),
        });
    }
    if scale.is_zero() {
        return Err(Error::ZeroScalar("scale"));
    }
    let m = n + 1;
    let mut c = vec![Scalar::zero(); m * m * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                c[(i * m + j) * m + k] = alg.constant(i, j, k).clone();
            }
        }
    }
    let ext = LieAlgebra::from_tensor_unchecked(m, alg.field(), c)?;
    let mut l = Matrix::zeros(m, m);
    for (j, a) in covector.iter().enumerate() {
        l[(n, j)] = a * scale;
    }
    Ok((ext, LinearOperator::new(l)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::sc;
    use crate::nijenhuis::{is_algebraic_nijenhuis, verify_nijenhuis_eigenbasis};

    fn id(name: &str, p: Option<&str>) -> CatalogId {
        CatalogId::parse(name, p.map(sc)).unwrap()
    }

    #[test]
    fn every_entry_satisfies_jacobi() {
        for f in [Field::Real, Field::Complex] {
            for e in sweep(f) {
                algebra(&e).unwrap().check_jacobi().unwrap();
            }
        }
        assert_eq!(sweep(Field::Real).len(), 6 + 2 * 4);
        assert_eq!(sweep(Field::Complex).len(), 5 + 4);
    }

    #[test]
    fn a34_constants() {
        let g = real_algebra(&id("a3.4", None)).unwrap();
        assert_eq!(g.basis_bracket(0, 1), v([0, 0, -1]));
        assert_eq!(g.basis_bracket(1, 2), v([1, 0, 0]));
        assert_eq!(g.basis_bracket(2, 0), v([0, 1, 0]));
    }

    #[test]
    fn a38_at_zero() {
        let g = real_algebra(&id("a3.8", Some("0"))).unwrap();
        assert_eq!(g.basis_bracket(0, 1), v([0, 0, -1]));
        assert_eq!(g.basis_bracket(2, 0), v([0, 1, 0]));
        assert_eq!(g.basis_bracket(1, 2), zero());
    }

    #[test]
    fn parameter_presence_is_enforced() {
        assert!(matches!(
            CatalogId::parse("a3.7", None),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            CatalogId::parse("a3.4", Some(sc("1"))),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            CatalogId::parse("a3.8", Some(sc("0+1i"))),
            Err(Error::Parameter(_))
        ));
        assert!(CatalogId::parse("b3.6", Some(sc("0+1i"))).is_ok());
        assert!(matches!(
            CatalogId::parse("c3.1", None),
            Err(Error::UnknownCatalogId(_))
        ));
    }

    #[test]
    fn b36_at_i_has_gaussian_constants() {
        let g = complex_algebra(&id("b3.6", Some("0+1i"))).unwrap();
        assert_eq!(g.basis_bracket(0, 1)[1], Scalar::i());
        assert_eq!(g.field(), Field::Complex);
    }

    #[test]
    fn bianchi_aliases() {
        assert_eq!(Family::from_bianchi("viii", Field::Real).unwrap(), Family::A34);
        assert_eq!(Family::from_bianchi("VIII", Field::Complex).unwrap(), Family::B33);
        assert_eq!(Family::from_bianchi("VI", Field::Complex).unwrap(), Family::B36);
        assert_eq!(Family::A37.bianchi(), "VII");
        assert!(Family::from_bianchi("X", Field::Real).is_err());
    }

    #[test]
    fn printed_bases_verify_in_their_presentations() {
        let cases = [
            id("a3.4", None),
            id("a3.5", None),
            id("a3.8", Some("2")),
            id("b3.3", None),
            id("b3.4", None),
            id("b3.6", Some("1+1i")),
        ];
        for e in cases {
            let p = printed_presentation(&e).unwrap();
            assert_eq!(p.printed.change_basis(&p.transport).unwrap(), p.algebra);
            let z = printed_eigenbasis(&e).unwrap();
            assert!(verify_nijenhuis_eigenbasis(&p.algebra, &z).unwrap().is_certified());
            let on_printed = p.basis_on_printed(&z).unwrap();
            assert!(verify_nijenhuis_eigenbasis(&p.printed, &on_printed)
                .unwrap()
                .is_certified());
        }
    }

    #[test]
    fn gl2_identity_gives_twice_identity() {
        let (g, l) = gl_n_example_operator(&Matrix::identity(2), &Matrix::identity(2)).unwrap();
        assert_eq!(g.dim(), 4);
        assert_eq!(l.matrix(), &Matrix::identity(4).scale(&Scalar::from_int(2)));
    }

    #[test]
    fn gl2_commutator() {
        let g = gl_n(2, Field::Real).unwrap();
        g.check_jacobi().unwrap();
        // [E11, E12] = E12
        assert_eq!(g.basis_bracket(0, 1), v4([0, 1, 0, 0]));
        // [E12, E21] = E11 - E22
        assert_eq!(g.basis_bracket(1, 2), v4([1, 0, 0, -1]));
    }

    fn v4(x: [i64; 4]) -> Vector {
        x.map(Scalar::from_int).to_vec()
    }

    #[test]
    fn gl2_example_is_nijenhuis() {
        let a = Matrix::from_int_rows(&[[1, 0], [0, -1]]);
        let b = Matrix::from_int_rows(&[[0, 1], [1, 0]]);
        let (g, l) = gl_n_example_operator(&a, &b).unwrap();
        assert!(is_algebraic_nijenhuis(&g, &l).unwrap());
        let (g, l) = gl_n_example_operator(&a, &a).unwrap();
        assert!(is_algebraic_nijenhuis(&g, &l).unwrap());
    }

    #[test]
    fn gl_rejects_non_involution() {
        let a = Matrix::from_int_rows(&[[1, 1], [0, 1]]);
        assert_eq!(
            gl_n_example_operator(&a, &Matrix::identity(2)).unwrap_err(),
            Error::NotInvolution("A")
        );
    }

    #[test]
    fn central_extension_of_a32() {
        let g = real_algebra(&id("a3.2", None)).unwrap();
        let (ext, l) = central_extension_operator(&g, &v([1, 0, 0]), &Scalar::one()).unwrap();
        ext.check_jacobi().unwrap();
        assert_eq!(ext.dim(), 4);
        assert!(l.compose(&l).unwrap().matrix().is_zero());
        assert!(is_algebraic_nijenhuis(&ext, &l).unwrap());
        assert_eq!(
            central_extension_operator(&g, &v([1, 0, 0]), &Scalar::zero()).unwrap_err(),
            Error::ZeroScalar("scale")
        );
    }
}
