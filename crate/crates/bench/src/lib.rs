//! Inputs shared by the benchmarks in `benches/`.

use nijenhuis_core::catalog::{algebra, gl_n_example_operator, printed_eigenbasis, CatalogId};
use nijenhuis_core::nijenhuis::{default_eigenvalues, operator_from_eigenbasis, LinearOperator};
use nijenhuis_core::{LieAlgebra, Matrix, Scalar};

/// An algebra with a Nijenhuis operator on it.
pub struct Workload {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub operator: LinearOperator,
}

fn catalog(name: &str, param: Option<i64>) -> (CatalogId, LieAlgebra) {
    let id = CatalogId::parse(name, param.map(Scalar::from_int)).expect("catalog id");
    let alg = algebra(&id).expect("catalog algebra");
    (id, alg)
}

/// The operators built from printed bases, plus the gl(3) example.
pub fn workloads() -> Vec<Workload> {
    let mut out = Vec::new();
    for (name, label, param) in [("a3.4", "a3.4", None), ("a3.8", "a3.8(b=2)", Some(2))] {
        let (id, alg) = catalog(name, param);
        let z = printed_eigenbasis(&id).expect("printed basis");
        let operator = operator_from_eigenbasis(&z, &default_eigenvalues(3)).expect("invertible");
        out.push(Workload {
            name: label,
            algebra: alg,
            operator,
        });
    }
    let s = Matrix::from_int_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]);
    let d = Matrix::diag(&[1, -1, 1].map(Scalar::from_int));
    let a = &(&s * &d) * &s.inverse().expect("invertible");
    let b = Matrix::diag(&[1, 1, -1].map(Scalar::from_int));
    let (algebra, operator) = gl_n_example_operator(&a, &b).expect("involutions");
    out.push(Workload {
        name: "gl(3)",
        algebra,
        operator,
    });
    out
}

/// Catalog entries for the eigenbasis search, admitting ones only.
pub fn search_targets() -> Vec<(&'static str, LieAlgebra)> {
    vec![
        ("a3.4", catalog("a3.4", None).1),
        ("a3.8(b=2)", catalog("a3.8", Some(2)).1),
        ("b3.3", catalog("b3.3", None).1),
    ]
}
