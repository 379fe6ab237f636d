//! Deterministic inputs reused across test targets.

use std::sync::OnceLock;

use nijenhuis_core::catalog::{algebra, sweep, CatalogId, Family};
use nijenhuis_core::equivalence::is_automorphism;
use nijenhuis_core::linalg::{Field, Matrix, Scalar};
use nijenhuis_core::quadric::{find_eigenbasis, EigenbasisSearch};
use nijenhuis_core::LieAlgebra;
use num_traits::One;

pub fn id(name: &str) -> CatalogId {
    CatalogId::parse(name, None).unwrap()
}

pub fn id_with(name: &str, p: Scalar) -> CatalogId {
    CatalogId::parse(name, Some(p)).unwrap()
}

pub fn entry(name: &str) -> LieAlgebra {
    algebra(&id(name)).unwrap()
}

/// Every swept catalog entry with its algebra, real list first.
pub fn catalog() -> &'static [(CatalogId, LieAlgebra)] {
    static CELL: OnceLock<Vec<(CatalogId, LieAlgebra)>> = OnceLock::new();
    CELL.get_or_init(|| {
        [Field::Real, Field::Complex]
            .into_iter()
            .flat_map(sweep)
            .map(|e| {
                let g = algebra(&e).unwrap();
                (e, g)
            })
            .collect()
    })
}

/// Catalog entries with a pipeline eigenbasis at height 3.
pub fn catalog_eigenbases() -> &'static [(CatalogId, LieAlgebra, Matrix)] {
    static CELL: OnceLock<Vec<(CatalogId, LieAlgebra, Matrix)>> = OnceLock::new();
    CELL.get_or_init(|| {
        catalog()
            .iter()
            .filter_map(|(e, g)| match find_eigenbasis(g, 3).unwrap() {
                EigenbasisSearch::Found { certificate, .. } => {
                    Some((e.clone(), g.clone(), certificate.basis))
                }
                _ => None,
            })
            .collect()
    })
}

pub fn is_admitting_family(f: Family) -> bool {
    use Family::*;
    matches!(f, A31 | A34 | A35 | A38 | B31 | B33 | B34 | B36)
}

/// Invertible integer matrices used to conjugate `diag(±1)` into
/// involutions.
pub fn conjugators(n: usize) -> Vec<Matrix> {
    match n {
        2 => vec![
            Matrix::identity(2),
            Matrix::from_int_rows(&[[1, 1], [0, 1]]),
            Matrix::from_int_rows(&[[2, 1], [1, 1]]),
            Matrix::from_int_rows(&[[1, 2], [1, 3]]),
            Matrix::from_int_rows(&[[0, 1], [1, 0]]),
            Matrix::from_int_rows(&[[3, 1], [2, 1]]),
        ],
        3 => vec![
            Matrix::identity(3),
            Matrix::from_int_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]),
            Matrix::from_int_rows(&[[2, 1, 0], [1, 1, 0], [1, 0, 1]]),
            Matrix::from_int_rows(&[[1, 0, 2], [1, 1, 0], [0, 1, 1]]),
        ],
        _ => unimplemented!("fixtures cover gl(2) and gl(3)"),
    }
}

/// `S · diag(signs) · S⁻¹`.
pub fn involution(s: &Matrix, signs: &[i64]) -> Matrix {
    let d = Matrix::diag(&signs.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>());
    &(s * &d) * &s.inverse().unwrap()
}

/// At least `count` pairs `(A, B)` of involutions on `gl(n)`, built from
/// the conjugators and mixed sign patterns.
pub fn involution_pairs(n: usize, count: usize) -> Vec<(Matrix, Matrix)> {
    let signs: Vec<Vec<i64>> = match n {
        2 => vec![vec![1, -1], vec![-1, 1], vec![1, 1]],
        3 => vec![vec![1, -1, 1], vec![-1, -1, 1], vec![1, 1, -1]],
        _ => unimplemented!(),
    };
    let ss = conjugators(n);
    let mut out = Vec::new();
    for (k, s) in ss.iter().enumerate() {
        let t = &ss[(k + 1) % ss.len()];
        let a = involution(s, &signs[k % signs.len()]);
        let b = involution(t, &signs[(k + 1) % signs.len()]);
        out.push((a, b));
        if out.len() == count {
            break;
        }
    }
    out
}

/// Heisenberg algebras in several bases, plus abelian ones, all checked
/// nilpotent by construction.
pub fn nilpotent_fixtures() -> Vec<LieAlgebra> {
    let heis = entry("a3.2");
    let bases = [
        Matrix::from_int_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]),
        Matrix::from_int_rows(&[[2, 0, 1], [1, 1, 0], [0, 3, 1]]),
        Matrix::from_int_rows(&[[0, 1, 0], [0, 0, 1], [1, 0, 0]]),
        Matrix::from_int_rows(&[[1, -1, 2], [0, 1, -1], [1, 0, 2]]),
    ];
    let mut out = vec![
        heis.clone(),
        entry("b3.2"),
        entry("a3.1"),
        entry("b3.1"),
    ];
    for z in &bases {
        out.push(heis.change_basis(z).unwrap());
        out.push(heis.with_field(Field::Complex).unwrap().change_basis(z).unwrap());
    }
    let gz = Matrix::diag(&[Scalar::i(), Scalar::one(), Scalar::gaussian(1, 1)]);
    out.push(
        heis.with_field(Field::Complex)
            .unwrap()
            .change_basis(&gz)
            .unwrap(),
    );
    out
}

/// Automorphisms of `alg` with entries in `{-1, 0, 1}`.
pub fn small_automorphisms(alg: &LieAlgebra) -> Vec<Matrix> {
    let mut out = Vec::new();
    for code in 0..3i64.pow(9) {
        let mut c = code;
        let mut rows = [[0i64; 3]; 3];
        for row in rows.iter_mut() {
            for x in row.iter_mut() {
                *x = c % 3 - 1;
                c /= 3;
            }
        }
        let phi = Matrix::from_int_rows(&rows);
        if is_automorphism(alg, &phi) {
            out.push(phi);
        }
    }
    out
}
