//! Randomized invariants. Each property runs on a caller-supplied
//! `TestRunner` so the same code backs the `properties` test target and
//! the acceptance harness.

use nijenhuis_core::equivalence::{scale_columns, sl2_pattern, EquivalenceCertificate};
use nijenhuis_core::linalg::{adjugate3, cross, dot, Field, Matrix, Scalar, Vector};
use nijenhuis_core::nijenhuis::{
    is_algebraic_nijenhuis, operator_from_eigenbasis, same_basis_up_to_scaling, torsion,
    verify_nijenhuis_eigenbasis, LinearOperator,
};
use nijenhuis_core::quadric::{
    admits_regular_semisimple, classify_form, eigenbasis_from_isotropic_triple, noncollinear_triple_check, subalgebra_form,
    QuadraticForm3,
};
use nijenhuis_core::LieAlgebra;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use super::fixtures::{catalog, catalog_eigenbases, entry, small_automorphisms};

pub type Property = fn(&mut TestRunner) -> Result<(), String>;

pub fn runner(cases: u32, deterministic: bool) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    if deterministic {
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
    } else {
        TestRunner::new(config)
    }
}

fn report<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

fn scalar(field: Field) -> BoxedStrategy<Scalar> {
    let rat = (-4i64..=4, 1i64..=3);
    match field {
        Field::Real => rat.prop_map(|(n, d)| Scalar::from_ratio(n, d)).boxed(),
        Field::Complex => (rat.clone(), rat)
            .prop_map(|((a, b), (c, d))| {
                &Scalar::from_ratio(a, b) + &(&Scalar::i() * &Scalar::from_ratio(c, d))
            })
            .boxed(),
    }
}

fn nonzero_scalar(field: Field) -> BoxedStrategy<Scalar> {
    scalar(field).prop_filter("nonzero", |x| !x.is_zero()).boxed()
}

fn vector(field: Field, n: usize) -> BoxedStrategy<Vector> {
    prop::collection::vec(scalar(field), n).boxed()
}

fn int_matrix(field: Field, n: usize, bound: i64) -> BoxedStrategy<Matrix> {
    let part = -bound..=bound;
    match field {
        Field::Real => prop::collection::vec(part, n * n)
            .prop_map(move |xs| {
                Matrix::new(n, n, xs.into_iter().map(Scalar::from_int).collect()).unwrap()
            })
            .boxed(),
        Field::Complex => prop::collection::vec((part.clone(), part), n * n)
            .prop_map(move |xs| {
                Matrix::new(
                    n,
                    n,
                    xs.into_iter().map(|(a, b)| Scalar::gaussian(a, b)).collect(),
                )
                .unwrap()
            })
            .boxed(),
    }
}

fn invertible(field: Field, bound: i64) -> BoxedStrategy<Matrix> {
    int_matrix(field, 3, bound)
        .prop_filter("invertible", |m| !m.det().unwrap().is_zero())
        .boxed()
}

/// A catalog algebra, optionally moved to a random basis.
fn algebra() -> BoxedStrategy<LieAlgebra> {
    let n = catalog().len();
    (0..n, any::<bool>(), invertible(Field::Real, 2))
        .prop_map(|(k, rebase, s)| {
            let g = &catalog()[k].1;
            if rebase {
                g.change_basis(&s).unwrap()
            } else {
                g.clone()
            }
        })
        .boxed()
}

/// Either a random basis or a known eigenbasis with its columns rescaled
/// and permuted.
fn candidate_basis() -> BoxedStrategy<(LieAlgebra, Matrix)> {
    let n = catalog().len();
    let m = catalog_eigenbases().len();
    prop_oneof![
        (0..n, invertible(Field::Real, 2)).prop_map(|(k, z)| (catalog()[k].1.clone(), z)),
        (
            0..m,
            prop::collection::vec(nonzero_scalar(Field::Real), 3),
            prop::sample::select(vec![
                [0usize, 1, 2],
                [0, 2, 1],
                [1, 0, 2],
                [1, 2, 0],
                [2, 0, 1],
                [2, 1, 0],
            ]),
        )
            .prop_map(|(k, mu, perm)| {
                let (_, g, z) = &catalog_eigenbases()[k];
                let cols: Vec<Vector> = perm.iter().map(|&j| z.column(j)).collect();
                let z = scale_columns(&Matrix::from_columns(&cols).unwrap(), &mu);
                (g.clone(), z)
            }),
    ]
    .boxed()
}

fn operator_for(g: &LieAlgebra) -> BoxedStrategy<LinearOperator> {
    int_matrix(g.field(), g.dim(), 3)
        .prop_map(|m| LinearOperator::new(m).unwrap())
        .boxed()
}

/// `N^k_{ij} = −N^k_{ji}`.
pub fn torsion_skew(r: &mut TestRunner) -> Result<(), String> {
    let s = algebra().prop_flat_map(|g| {
        let op = operator_for(&g);
        (Just(g), op)
    });
    report(r.run(&s, |(g, op)| {
        let t = torsion(&g, &op).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    prop_assert_eq!(t.component(i, j, k), &-t.component(j, i, k));
                }
            }
        }
        Ok(())
    }))
}

/// `v × w = −(w × v)`, orthogonal to both factors.
pub fn cross_product(r: &mut TestRunner) -> Result<(), String> {
    let s = prop_oneof![Just(Field::Real), Just(Field::Complex)]
        .prop_flat_map(|f| (vector(f, 3), vector(f, 3)));
    report(r.run(&s, |(v, w)| {
        let c = cross(&v, &w).unwrap();
        let back: Vector = cross(&w, &v).unwrap().iter().map(|x| -x).collect();
        prop_assert_eq!(&c, &back);
        prop_assert!(dot(&c, &v).is_zero());
        prop_assert!(dot(&c, &w).is_zero());
        Ok(())
    }))
}

/// `M · adj(M) = adj(M) · M = det(M) · Id`.
pub fn adjugate_identity(r: &mut TestRunner) -> Result<(), String> {
    let s = prop_oneof![Just(Field::Real), Just(Field::Complex)]
        .prop_flat_map(|f| int_matrix(f, 3, 4));
    report(r.run(&s, |m| {
        let adj = adjugate3(&m);
        let d = Matrix::identity(3).scale(&m.det().unwrap());
        prop_assert_eq!(&(&m * &adj), &d);
        prop_assert_eq!(&(&adj * &m), &d);
        Ok(())
    }))
}

/// Rank, signature and verdict are unchanged under `Q ↦ Sᵀ Q S`.
pub fn congruence_invariance(r: &mut TestRunner) -> Result<(), String> {
    let s = prop_oneof![Just(Field::Real), Just(Field::Complex)].prop_flat_map(|f| {
        (
            Just(f),
            int_matrix(f, 3, 3).prop_map(|m| {
                let sym = m.add(&m.transpose()).unwrap();
                QuadraticForm3::new(sym).unwrap()
            }),
            invertible(f, 2),
        )
    });
    report(r.run(&s, |(f, q, t)| {
        let before = classify_form(&q, f).unwrap();
        let after = classify_form(&q.congruent(&t).unwrap(), f).unwrap();
        prop_assert_eq!(before, after);
        Ok(())
    }))
}

/// `[a x + b y, z] = a [x, z] + b [y, z]` and `[x, y] = −[y, x]`.
pub fn bracket_bilinearity(r: &mut TestRunner) -> Result<(), String> {
    let s = algebra().prop_flat_map(|g| {
        let f = g.field();
        (
            Just(g),
            vector(f, 3),
            vector(f, 3),
            vector(f, 3),
            scalar(f),
            scalar(f),
        )
    });
    report(r.run(&s, |(g, x, y, z, a, b)| {
        let comb: Vector = x.iter().zip(&y).map(|(p, q)| &(&a * p) + &(&b * q)).collect();
        let lhs = g.bracket(&comb, &z).unwrap();
        let bx = g.bracket(&x, &z).unwrap();
        let by = g.bracket(&y, &z).unwrap();
        let rhs: Vector = bx.iter().zip(&by).map(|(p, q)| &(&a * p) + &(&b * q)).collect();
        prop_assert_eq!(lhs, rhs);
        let yx: Vector = g.bracket(&y, &x).unwrap().iter().map(|p| -p).collect();
        prop_assert_eq!(g.bracket(&x, &y).unwrap(), yx);
        Ok(())
    }))
}

/// A basis is certified exactly when the normals of its coordinate planes
/// form an isotropic triple; the triple is then non-collinear and gives
/// the basis back up to scaling.
pub fn certificate_isotropic_correspondence(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&candidate_basis(), |(g, z)| {
        let q = subalgebra_form(&g).unwrap();
        let cols = z.columns();
        let normals = [
            cross(&cols[1], &cols[2]).unwrap(),
            cross(&cols[2], &cols[0]).unwrap(),
            cross(&cols[0], &cols[1]).unwrap(),
        ];
        let isotropic = normals.iter().all(|m| q.eval(m).is_zero());
        let certified = verify_nijenhuis_eigenbasis(&g, &z).unwrap().is_certified();
        prop_assert_eq!(certified, isotropic);
        if certified {
            prop_assert!(noncollinear_triple_check(&normals).unwrap());
            let back = eigenbasis_from_isotropic_triple(&normals).unwrap();
            prop_assert!(same_basis_up_to_scaling(&back, &z));
        }
        Ok(())
    }))
}

/// The six suites named by the acceptance criteria.
pub const CORE_SUITES: [(&str, Property); 6] = [
    ("torsion skew-symmetry", torsion_skew),
    ("cross product antisymmetry and orthogonality", cross_product),
    ("adjugate identity", adjugate_identity),
    ("congruence invariance of classify_form", congruence_invariance),
    ("bracket bilinearity", bracket_bilinearity),
    ("certificate and isotropic triple correspondence", certificate_isotropic_correspondence),
];

/// `span(α, β)` is a subalgebra iff `α × β` is isotropic.
pub fn subalgebra_pair_is_isotropic(r: &mut TestRunner) -> Result<(), String> {
    let s = algebra().prop_flat_map(|g| {
        let f = g.field();
        (Just(g), vector(f, 3), vector(f, 3))
    });
    report(r.run(&s, |(g, a, b)| {
        let m = cross(&a, &b).unwrap();
        prop_assume!(m.iter().any(|x| !x.is_zero()));
        let q = subalgebra_form(&g).unwrap();
        prop_assert_eq!(g.is_subalgebra_pair(&a, &b).unwrap(), q.eval(&m).is_zero());
        Ok(())
    }))
}

/// A basis is certified iff the operator diagonal in it with eigenvalues
/// `1, 2, 3` is Nijenhuis.
pub fn eigenbasis_iff_nijenhuis(r: &mut TestRunner) -> Result<(), String> {
    let lambda = [1, 2, 3].map(Scalar::from_int);
    report(r.run(&candidate_basis(), |(g, z)| {
        let l = operator_from_eigenbasis(&z, &lambda).unwrap();
        prop_assert_eq!(
            verify_nijenhuis_eigenbasis(&g, &z).unwrap().is_certified(),
            is_algebraic_nijenhuis(&g, &l).unwrap()
        );
        Ok(())
    }))
}

/// Rescaling an sl(2) eigenbasis by `μ` turns `(A, B, C)` into
/// `(μ₁A, μ₂B, μ₃C)`.
pub fn sl2_scaling_law(r: &mut TestRunner) -> Result<(), String> {
    let bases: Vec<(LieAlgebra, Matrix)> = catalog_eigenbases()
        .iter()
        .filter(|(e, _, _)| matches!(e.family().name(), "a3.4" | "b3.3"))
        .map(|(_, g, z)| (g.clone(), z.clone()))
        .collect();
    assert_eq!(bases.len(), 2);
    let s = (0..bases.len()).prop_flat_map(move |k| {
        let (g, z) = bases[k].clone();
        let f = g.field();
        (
            Just(g),
            Just(z),
            prop::collection::vec(nonzero_scalar(f), 3),
        )
    });
    report(r.run(&s, |(g, z, mu)| {
        let mu: [Scalar; 3] = mu.try_into().unwrap();
        let t = sl2_pattern(&g, &z).unwrap();
        let scaled = sl2_pattern(&g, &scale_columns(&z, &mu)).unwrap();
        prop_assert_eq!(scaled, t.scaled(&mu));
        Ok(())
    }))
}

/// A valid certificate `Z → Z′` inverts to a valid `Z′ → Z`.
pub fn certificate_inverse(r: &mut TestRunner) -> Result<(), String> {
    let cases: Vec<(LieAlgebra, Matrix, Vec<Matrix>)> = ["a3.4", "a3.5", "a3.2"]
        .iter()
        .map(|name| {
            let g = entry(name);
            let auts = small_automorphisms(&g);
            let z = catalog_eigenbases()
                .iter()
                .find(|(e, _, _)| e.family().name() == *name)
                .map(|(_, _, z)| z.clone())
                .unwrap_or_else(|| Matrix::identity(3));
            (g, z, auts)
        })
        .collect();
    let s = (0..cases.len()).prop_flat_map(move |k| {
        let (g, z, auts) = cases[k].clone();
        (
            Just(g),
            Just(z),
            prop::sample::select(auts),
            prop::collection::vec(nonzero_scalar(Field::Real), 3),
        )
    });
    report(r.run(&s, |(g, z, phi, mu)| {
        let mu: [Scalar; 3] = mu.try_into().unwrap();
        let z_prime = scale_columns(&(&phi * &z), &mu);
        let cert = EquivalenceCertificate {
            z,
            z_prime,
            phi,
            mu,
        };
        prop_assert!(cert.check(&g).unwrap());
        prop_assert!(cert.inverse().unwrap().check(&g).unwrap());
        Ok(())
    }))
}

/// Random bases of the Heisenberg algebra over either field stay
/// nilpotent and never admit an eigenbasis.
pub fn nilpotent_admits_only_if_abelian(r: &mut TestRunner) -> Result<(), String> {
    let s = prop_oneof![Just(Field::Real), Just(Field::Complex)]
        .prop_flat_map(|f| (Just(f), invertible(f, 3)));
    report(r.run(&s, |(f, z)| {
        let g = entry("a3.2").with_field(f).unwrap().change_basis(&z).unwrap();
        g.check_jacobi().unwrap();
        prop_assert!(g.is_nilpotent());
        let class = admits_regular_semisimple(&g).unwrap();
        prop_assert_eq!(class.admits, g.is_abelian());
        Ok(())
    }))
}
