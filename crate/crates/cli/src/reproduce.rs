//! Re-derives the classification over both catalogs, the printed example
//! bases and the operator examples. Entries run in parallel; output keeps
//! catalog order, and the JSON form carries no timing so runs compare
//! byte for byte.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use nijenhuis_core::catalog::{
    algebra, central_extension_operator, gl_n_example_operator, printed_derived_brackets,
    printed_eigenbasis, printed_presentation, parameter_samples, sweep, CatalogId, Family,
};
use nijenhuis_core::equivalence::{scale_columns, sl2_pattern, sl2_rescale_to, Sl2Triple};
use nijenhuis_core::nijenhuis::{
    default_eigenvalues, eigenbasis_of, is_algebraic_nijenhuis, is_regular_semisimple,
    operator_from_eigenbasis, same_basis_up_to_scaling, verify_nijenhuis_eigenbasis,
};
use nijenhuis_core::quadric::{admits_regular_semisimple, find_eigenbasis, EigenbasisSearch};
use nijenhuis_core::{Field, LieAlgebra, Matrix, Result, Scalar};

use crate::{basis_text, CliError, CliResult, Report};

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub height: u32,
    pub threads: Option<usize>,
    /// Family whose constants get swapped for wrong ones.
    pub corrupt: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }

    fn from_result(name: impl Into<String>, r: Result<String>) -> Self {
        match r {
            Ok(detail) => Check::new(name, true, detail),
            Err(e) => Check::new(name, false, e.to_string()),
        }
    }

    fn line(&self) -> String {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        format!("{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reproduction {
    pub real_admits: Vec<String>,
    pub complex_admits: Vec<String>,
    pub contrast: String,
    pub checks: Vec<Check>,
}

impl Reproduction {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

const REAL_ADMITTING: [Family; 4] = [Family::A31, Family::A34, Family::A35, Family::A38];
const COMPLEX_ADMITTING: [Family; 4] = [Family::B31, Family::B33, Family::B34, Family::B36];

fn expected_to_admit(f: Family) -> bool {
    REAL_ADMITTING.contains(&f) || COMPLEX_ADMITTING.contains(&f)
}

/// The catalog, optionally with one family replaced: admitting families by
/// the Heisenberg constants, the others by the abelian algebra.
struct Catalog {
    corrupt: Option<Family>,
}

impl Catalog {
    fn algebra(&self, id: &CatalogId) -> Result<LieAlgebra> {
        if self.corrupt == Some(id.family()) {
            let field = id.field();
            if expected_to_admit(id.family()) {
                let heis = CatalogId::plain(Family::A32)?;
                return algebra(&heis)?.with_field(field);
            }
            return Ok(LieAlgebra::abelian(3, field));
        }
        algebra(id)
    }
}

struct EntryOutcome {
    id: CatalogId,
    admits: bool,
    checks: Vec<Check>,
}

fn run_entry(catalog: &Catalog, id: &CatalogId, height: u32) -> EntryOutcome {
    let name = id.to_string();
    let alg = match catalog.algebra(id) {
        Ok(a) => a,
        Err(e) => {
            return EntryOutcome {
                id: id.clone(),
                admits: false,
                checks: vec![Check::new(name, false, e.to_string())],
            }
        }
    };
    let expected = expected_to_admit(id.family());
    let class = admits_regular_semisimple(&alg);
    let admits = class.as_ref().map(|c| c.admits).unwrap_or(false);
    let mut checks = vec![match class {
        Ok(c) => Check::new(
            format!("{name} classification"),
            c.admits == expected,
            format!(
                "admits = {} (expected {expected}), rank {}, {}",
                c.admits, c.rank, c.reason
            ),
        ),
        Err(e) => Check::new(format!("{name} classification"), false, e.to_string()),
    }];
    if admits {
        checks.push(Check::from_result(
            format!("{name} witness"),
            witness_round_trip(&alg, height),
        ));
    }
    EntryOutcome {
        id: id.clone(),
        admits,
        checks,
    }
}

/// Find a basis, build its operator, check it, and recover the basis from
/// the operator.
fn witness_round_trip(alg: &LieAlgebra, height: u32) -> Result<String> {
    use nijenhuis_core::Error;
    let cert = match find_eigenbasis(alg, height)? {
        EigenbasisSearch::Found { certificate, .. } => certificate,
        EigenbasisSearch::NoWitness { height, .. } => {
            return Ok(format!("admits; no witness up to height {height}"))
        }
        EigenbasisSearch::DoesNotAdmit(_) => {
            return Err(Error::Invariant("classification and search disagree".into()))
        }
    };
    if !cert.holds_in(alg)? {
        return Err(Error::Invariant("certificate does not hold".into()));
    }
    let op = operator_from_eigenbasis(&cert.basis, &default_eigenvalues(3))?;
    if !is_algebraic_nijenhuis(alg, &op)? || !is_regular_semisimple(alg, &op)? {
        return Err(Error::NotNijenhuis);
    }
    let back = eigenbasis_of(alg, &op)?;
    if !same_basis_up_to_scaling(&back.certificate.basis, &cert.basis) {
        return Err(Error::Invariant("operator spectrum gives a different basis".into()));
    }
    Ok(format!("{} verified, operator recovers it", basis_text(&cert.basis)))
}

fn printed_basis_ids() -> Vec<CatalogId> {
    let mut ids = Vec::new();
    for family in [Family::A34, Family::A35, Family::B33, Family::B34] {
        ids.push(CatalogId::plain(family).expect("plain family"));
    }
    for (family, field) in [(Family::A38, Field::Real), (Family::B36, Field::Complex)] {
        for p in parameter_samples(field) {
            ids.push(CatalogId::new(family, Some(p)).expect("sample parameter"));
        }
    }
    ids
}

fn printed_basis_check(id: &CatalogId) -> Result<String> {
    use nijenhuis_core::Error;
    let z = printed_eigenbasis(id)?;
    let p = printed_presentation(id)?;
    if p.printed.change_basis(&p.transport)? != p.algebra {
        return Err(Error::Invariant("transport does not give the presentation".into()));
    }
    verify_nijenhuis_eigenbasis(&p.algebra, &z)?.into_result()?;
    verify_nijenhuis_eigenbasis(&p.printed, &p.basis_on_printed(&z)?)?.into_result()?;
    let derived = printed_derived_brackets(id.family(), p.parameter.as_ref())?;
    let h = p.algebra.change_basis(&z)?;
    for (k, (i, j)) in [(0, 1), (1, 2), (2, 0)].into_iter().enumerate() {
        if h.basis_bracket(i, j) != derived[k] {
            return Err(Error::Invariant(format!(
                "[ζ{}, ζ{}] differs from the printed constants",
                i + 1,
                j + 1
            )));
        }
    }
    Ok("verifies; printed brackets reproduced".into())
}

fn involution(s: &Matrix, signs: &[i64]) -> Result<Matrix> {
    let d = Matrix::diag(&signs.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>());
    Ok(&(s * &d) * &s.inverse()?)
}

fn gl_pairs() -> Result<Vec<(Matrix, Matrix)>> {
    let s2 = [
        Matrix::identity(2),
        Matrix::from_int_rows(&[[1, 1], [0, 1]]),
        Matrix::from_int_rows(&[[2, 1], [1, 1]]),
        Matrix::from_int_rows(&[[1, 2], [1, 3]]),
        Matrix::from_int_rows(&[[0, 1], [1, 0]]),
    ];
    let signs2 = [[1, -1], [-1, 1], [1, 1]];
    let mut out = Vec::new();
    for k in 0..s2.len() {
        let a = involution(&s2[k], &signs2[k % 3])?;
        let b = involution(&s2[(k + 1) % s2.len()], &signs2[(k + 1) % 3])?;
        out.push((a, b));
    }
    let s3 = [
        Matrix::from_int_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]),
        Matrix::from_int_rows(&[[2, 1, 0], [1, 1, 0], [1, 0, 1]]),
    ];
    out.push((involution(&s3[0], &[1, -1, 1])?, involution(&s3[1], &[-1, -1, 1])?));
    out.push((involution(&s3[1], &[1, 1, -1])?, involution(&s3[0], &[1, -1, -1])?));
    Ok(out)
}

fn gl_example_check() -> Result<String> {
    let pairs = gl_pairs()?;
    for (k, (a, b)) in pairs.iter().enumerate() {
        let (g, l) = gl_n_example_operator(a, b)?;
        if !is_algebraic_nijenhuis(&g, &l)? {
            return Err(nijenhuis_core::Error::Invariant(format!("pair {k} has torsion")));
        }
    }
    Ok(format!("{} involution pairs on gl(2) and gl(3), torsion zero", pairs.len()))
}

fn central_extension_check() -> Result<String> {
    let covectors = [[1, 0, 0], [0, 1, 0], [1, -1, 2], [3, 0, -1], [2, 5, 1]];
    let mut count = 0;
    for name in ["a3.2", "a3.4", "a3.5"] {
        let alg = algebra(&CatalogId::parse(name, None)?)?;
        for (k, c) in covectors.iter().enumerate() {
            let a: Vec<Scalar> = c.iter().map(|&x| Scalar::from_int(x)).collect();
            let scale = Scalar::from_int(k as i64 + 1);
            let (ext, l) = central_extension_operator(&alg, &a, &scale)?;
            ext.check_jacobi()?;
            if !l.compose(&l)?.matrix().is_zero() || !is_algebraic_nijenhuis(&ext, &l)? {
                return Err(nijenhuis_core::Error::Invariant(format!(
                    "{name} with covector {c:?}"
                )));
            }
            count += 1;
        }
    }
    Ok(format!("{count} extensions, L² = 0 and torsion zero"))
}

fn nilpotent_check() -> Result<String> {
    let heis = algebra(&CatalogId::plain(Family::A32)?)?;
    let mut corpus = vec![
        heis.clone(),
        algebra(&CatalogId::plain(Family::B32)?)?,
        algebra(&CatalogId::plain(Family::A31)?)?,
        algebra(&CatalogId::plain(Family::B31)?)?,
    ];
    for z in [
        Matrix::from_int_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]),
        Matrix::from_int_rows(&[[2, 0, 1], [1, 1, 0], [0, 3, 1]]),
    ] {
        corpus.push(heis.change_basis(&z)?);
        corpus.push(heis.with_field(Field::Complex)?.change_basis(&z)?);
    }
    for alg in &corpus {
        if !alg.is_nilpotent() {
            return Err(nijenhuis_core::Error::Invariant("fixture is not nilpotent".into()));
        }
        if admits_regular_semisimple(alg)?.admits && !alg.is_abelian() {
            return Err(nijenhuis_core::Error::Invariant(format!(
                "non-abelian nilpotent algebra admits: {alg:?}"
            )));
        }
    }
    Ok(format!("{} nilpotent algebras admit only when abelian", corpus.len()))
}

fn sl2_check(height: u32) -> Result<String> {
    use nijenhuis_core::Error;
    let id = CatalogId::plain(Family::A34)?;
    let g = algebra(&id)?;
    let z = printed_eigenbasis(&id)?;
    let t = sl2_pattern(&g, &z)?;
    if t != Sl2Triple::from_ints(-1, 1, -2) {
        return Err(Error::Invariant(format!("printed basis pattern {t:?}")));
    }
    let mu = sl2_rescale_to(&t, &Sl2Triple::from_ints(1, 1, 1))?;
    if sl2_pattern(&g, &scale_columns(&z, &mu))? != Sl2Triple::from_ints(1, 1, 1) {
        return Err(Error::Invariant("rescaling does not normalize".into()));
    }
    for family in [Family::A34, Family::B33] {
        let alg = algebra(&CatalogId::plain(family)?)?;
        for h in 1..=height.min(3) {
            if let EigenbasisSearch::Found { certificate, .. } = find_eigenbasis(&alg, h)? {
                sl2_pattern(&alg, &certificate.basis)?;
            }
        }
    }
    Ok(format!(
        "printed basis gives (A, B, C) = (-1, 1, -2); μ = ({}, {}, {}) normalizes it; found bases share the shape",
        mu[0], mu[1], mu[2]
    ))
}

fn contrast_line() -> Result<(bool, String)> {
    let real = admits_regular_semisimple(&algebra(&CatalogId::plain(Family::A33)?)?)?;
    let complex = admits_regular_semisimple(&algebra(&CatalogId::plain(Family::B33)?)?)?;
    let ok = !real.admits && complex.admits;
    let text = format!(
        "so(3) over R (a3.3): admits = {} ({}); over C (b3.3): admits = {}",
        real.admits, real.reason, complex.admits
    );
    Ok((ok, text))
}

fn parse_corrupt(name: &Option<String>) -> CliResult<Option<Family>> {
    name.as_deref()
        .map(|s| s.parse::<Family>().map_err(CliError::from))
        .transpose()
}

pub fn reproduce(opts: &Options) -> CliResult<Reproduction> {
    let catalog = Catalog {
        corrupt: parse_corrupt(&opts.corrupt)?,
    };
    let height = opts.height.max(1);
    let work = || {
        let ids: Vec<CatalogId> = [Field::Real, Field::Complex]
            .into_iter()
            .flat_map(sweep)
            .collect();
        let entries: Vec<EntryOutcome> = ids
            .par_iter()
            .map(|id| run_entry(&catalog, id, height))
            .collect();
        let printed: Vec<Check> = printed_basis_ids()
            .par_iter()
            .map(|id| Check::from_result(format!("{id} printed basis"), printed_basis_check(id)))
            .collect();
        (entries, printed)
    };
    let (entries, printed) = match opts.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| CliError::Input(e.to_string()))?
            .install(work),
        None => work(),
    };

    let mut checks = Vec::new();
    let mut sets = Vec::new();
    for (field, expected) in [(Field::Real, REAL_ADMITTING), (Field::Complex, COMPLEX_ADMITTING)] {
        let mut admitted: Vec<Family> = Vec::new();
        let mut rejected: Vec<Family> = Vec::new();
        for e in entries.iter().filter(|e| e.id.field() == field) {
            checks.extend(e.checks.iter().cloned());
            let list = if e.admits { &mut admitted } else { &mut rejected };
            if !list.contains(&e.id.family()) {
                list.push(e.id.family());
            }
        }
        let mixed: Vec<_> = admitted.iter().filter(|f| rejected.contains(f)).collect();
        let names: Vec<String> = admitted.iter().map(|f| f.name().to_string()).collect();
        let pass = admitted == expected && mixed.is_empty();
        checks.push(Check::new(
            format!("{} admit set", if field == Field::Real { "real" } else { "complex" }),
            pass,
            format!("{{{}}}", names.join(", ")),
        ));
        sets.push(names);
    }
    checks.extend(printed);
    checks.push(Check::from_result("gl(n) operators", gl_example_check()));
    checks.push(Check::from_result("central extensions", central_extension_check()));
    checks.push(Check::from_result("nilpotent algebras", nilpotent_check()));
    checks.push(Check::from_result("sl(2) patterns", sl2_check(height)));
    let (ok, contrast) = contrast_line()?;
    checks.push(Check::new("real/complex contrast", ok, contrast.clone()));

    let complex_admits = sets.pop().expect("two sets");
    let real_admits = sets.pop().expect("two sets");
    Ok(Reproduction {
        real_admits,
        complex_admits,
        contrast,
        checks,
    })
}

pub fn report(opts: &Options) -> CliResult<Report> {
    let rep = reproduce(opts)?;
    let mut r = Report::new(&["reproduce"]);
    for c in &rep.checks {
        r.line(c.line());
    }
    r.line(format!("real admit set: {{{}}}", rep.real_admits.join(", ")));
    r.line(format!("complex admit set: {{{}}}", rep.complex_admits.join(", ")));
    r.line(rep.contrast.clone());
    let failed: Vec<&str> = rep
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.as_str())
        .collect();
    if failed.is_empty() {
        r.line(format!("PASS: {} checks", rep.checks.len()));
    } else {
        r.line(format!("FAIL: {} of {} checks: {}", failed.len(), rep.checks.len(), failed.join("; ")));
    }
    r.witness("real_admits", &rep.real_admits);
    r.witness("complex_admits", &rep.complex_admits);
    r.witness("contrast", &rep.contrast);
    r.witness("checks", &rep.checks);
    r.verdict("reproduce", rep.passed());
    Ok(r)
}
