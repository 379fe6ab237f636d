use std::path::Path;

use nijenhuis_core::catalog::{printed_eigenbasis, printed_presentation, CatalogId, Family};
use nijenhuis_core::equivalence::{
    commutant_obstruction, commuting_pair_count, eigenbasis_pattern, sl2_pattern,
    EquivalenceCertificate,
};
use nijenhuis_core::lie::format_combination;
use nijenhuis_core::nijenhuis::{
    default_eigenvalues, is_algebraic_nijenhuis, is_regular_semisimple, operator_from_eigenbasis,
    torsion, verify_nijenhuis_eigenbasis, EigenbasisCheck, LinearOperator,
};
use nijenhuis_core::quadric::{
    find_eigenbasis as search_eigenbasis, subalgebra_form, ClassificationReport, EigenbasisSearch,
};
use nijenhuis_core::{Error, Field, LieAlgebra, Matrix, Scalar};
use serde::Serialize;

use crate::{basis_text, load_algebra, read_file, CliError, CliResult, Report, Source};

#[derive(Serialize)]
struct ListEntry {
    id: &'static str,
    field: Field,
    bianchi: &'static str,
    parameter: Option<&'static str>,
}

pub fn catalog_list() -> Report {
    let mut r = Report::new(&["catalog", "list"]);
    let mut entries = Vec::new();
    for field in [Field::Real, Field::Complex] {
        r.line(match field {
            Field::Real => "real:",
            Field::Complex => "complex:",
        });
        for f in Family::all().filter(|f| f.field() == field) {
            let param = f.parameter_name();
            r.line(format!(
                "  {:<6} {:<8} {}",
                f.name(),
                f.bianchi(),
                param.map(|p| format!("parameter {p}")).unwrap_or_default()
            ));
            entries.push(ListEntry {
                id: f.name(),
                field,
                bianchi: f.bianchi(),
                parameter: param,
            });
        }
    }
    r.witness("entries", &entries);
    r
}

pub fn catalog_show(name: &str, param: Option<&Scalar>) -> CliResult<Report> {
    let id = CatalogId::parse(name, param.cloned())?;
    let alg = nijenhuis_core::catalog::algebra(&id)?;
    let mut r = Report::new(&["catalog", "show", name]);
    r.line(format!("{id}  (Bianchi {}, over {})", id.bianchi(), id.field()));
    for line in bracket_lines(&alg) {
        r.line(format!("  {line}"));
    }
    r.witness("id", &id.to_string());
    r.witness("bianchi", &id.bianchi());
    r.witness("algebra", &alg.to_doc());
    match printed_eigenbasis(&id) {
        Ok(z) => {
            r.line(format!("printed eigenbasis: {}", basis_text(&z)));
            r.witness("printed_basis", &z);
        }
        Err(Error::NoPrintedBasis(_)) => {}
        Err(e) => return Err(e.into()),
    }
    Ok(r)
}

fn bracket_lines(alg: &LieAlgebra) -> Vec<String> {
    let table = alg.bracket_table();
    if table.is_empty() {
        vec!["abelian".to_string()]
    } else {
        table
    }
}

pub fn check(target: &str, operator: Option<&Path>, param: Option<&Scalar>) -> CliResult<Report> {
    let mut r = Report::new(&["check", target]);
    let path = Path::new(target);
    let loaded = if path.is_file() {
        LieAlgebra::from_json(&read_file(path)?)
    } else {
        load_algebra(target, param).map(|(_, alg)| alg).map_err(|e| match e {
            CliError::Input(m) => Error::Parse(m),
            CliError::Invariant(m) => Error::Invariant(m),
        })
    };
    let alg = match loaded {
        Ok(alg) => alg,
        Err(e @ Error::Jacobi(..)) => {
            r.line(format!("jacobi: false ({e})"));
            r.verdict("jacobi", false);
            return Ok(r);
        }
        Err(Error::Parse(m)) => return Err(CliError::Input(m)),
        Err(e) => return Err(e.into()),
    };
    r.line(format!("dimension {} over {}", alg.dim(), alg.field()));
    r.line("jacobi: true");
    r.verdict("jacobi", true);
    let Some(path) = operator else {
        return Ok(r);
    };
    r.command.extend(["--operator".to_string(), path.display().to_string()]);
    let op = LinearOperator::from_json(&read_file(path)?)?;
    let n = torsion(&alg, &op)?;
    let nijenhuis = n.is_zero();
    let rs = is_regular_semisimple(&alg, &op)?;
    r.line(format!("nijenhuis: {nijenhuis}"));
    for (i, j, k, x) in n.nonzero_components().into_iter().take(12) {
        r.line(format!("  N(e{}, e{}) has e{} component {x}", i + 1, j + 1, k + 1));
    }
    r.line(format!("regular-semisimple: {rs}"));
    let components: Vec<_> = n
        .nonzero_components()
        .into_iter()
        .map(|(i, j, k, x)| (i + 1, j + 1, k + 1, x))
        .collect();
    r.witness("torsion", &components);
    r.verdict("nijenhuis", nijenhuis);
    r.note("regular-semisimple", rs);
    Ok(r)
}

fn require_dim3(alg: &LieAlgebra) -> CliResult<()> {
    if alg.dim() != 3 {
        return Err(Error::NotThreeDimensional(alg.dim()).into());
    }
    Ok(())
}

fn search(alg: &LieAlgebra, height: u32) -> CliResult<(EigenbasisSearch, ClassificationReport)> {
    require_dim3(alg)?;
    let found = search_eigenbasis(alg, height)?;
    let form = subalgebra_form(alg)?;
    let witness = found.certificate().map(|c| c.basis.clone());
    let class = ClassificationReport::new(&form, found.classification(), witness);
    Ok((found, class))
}

fn describe_class(r: &mut Report, source: &Source, class: &ClassificationReport) {
    r.line(format!("{source}: subalgebra form {}", class.form));
    let sig = class
        .signature
        .map(|[p, n]| format!(", signature ({p},{n})"))
        .unwrap_or_default();
    r.line(format!("rank {}{sig}, {}", class.rank, class.reason));
}

pub fn admits(target: &str, param: Option<&Scalar>, height: u32) -> CliResult<Report> {
    let (source, alg) = load_algebra(target, param)?;
    let (found, class) = search(&alg, height)?;
    let mut r = Report::new(&["admits", target]);
    describe_class(&mut r, &source, &class);
    r.line(format!("admits: {}", class.admits));
    match &found {
        EigenbasisSearch::Found { certificate, .. } => {
            if !certificate.holds_in(&alg)? {
                return Err(CliError::Invariant("witness certificate does not hold".into()));
            }
            r.line(format!("witness (verified): {}", basis_text(&certificate.basis)));
        }
        EigenbasisSearch::NoWitness { height, .. } => {
            r.line(format!("no witness with coordinates up to {height}"));
        }
        EigenbasisSearch::DoesNotAdmit(_) => {}
    }
    r.witness("classification", &class);
    r.verdict("admits", class.admits);
    Ok(r)
}

pub fn find_eigenbasis(target: &str, param: Option<&Scalar>, height: u32) -> CliResult<Report> {
    let (source, alg) = load_algebra(target, param)?;
    let (found, class) = search(&alg, height)?;
    let mut r = Report::new(&["find-eigenbasis", target]);
    describe_class(&mut r, &source, &class);
    r.witness("classification", &class);
    match found {
        EigenbasisSearch::Found {
            certificate,
            isotropic,
            ..
        } => {
            let lambda = default_eigenvalues(3);
            let op = operator_from_eigenbasis(&certificate.basis, &lambda)?;
            if !is_algebraic_nijenhuis(&alg, &op)? {
                return Err(CliError::Invariant(
                    "operator of a certified eigenbasis has torsion".into(),
                ));
            }
            r.line(format!("eigenbasis: {}", basis_text(&certificate.basis)));
            let names = ["ζ1", "ζ2", "ζ3"];
            for p in &certificate.pairs {
                let mut coords = vec![Scalar::from_int(0); 3];
                coords[p.i] = p.alpha.clone();
                coords[p.j] = p.beta.clone();
                let rhs = format_combination(&coords, "ζ");
                let rhs = if rhs.is_empty() { "0".to_string() } else { rhs };
                r.line(format!("  [{}, {}] = {rhs}", names[p.i], names[p.j]));
            }
            r.line(format!("operator with eigenvalues 0, 1, 2: {}", op.matrix()));
            r.witness("isotropic", &isotropic);
            r.witness("certificate", &certificate);
            r.witness("operator", &op);
            r.verdict("found", true);
        }
        EigenbasisSearch::DoesNotAdmit(c) => {
            r.line(format!("does not admit ({})", c.reason));
            r.verdict("found", false);
        }
        EigenbasisSearch::NoWitness { height, .. } => {
            r.line(format!("admits, but no witness with coordinates up to {height}"));
            r.verdict("found", false);
        }
    }
    Ok(r)
}

/// The basis used when none is given: the printed one where it exists,
/// otherwise whatever the search finds.
fn default_basis(source: &Source, alg: &LieAlgebra, height: u32) -> CliResult<Matrix> {
    if let Source::Catalog(id) = source {
        match printed_presentation(id) {
            Ok(p) => return Ok(p.basis_on_printed(&printed_eigenbasis(id)?)?),
            Err(Error::NoPrintedBasis(_)) => {}
            Err(e) => return Err(e.into()),
        }
    }
    match search_eigenbasis(alg, height)? {
        EigenbasisSearch::Found { certificate, .. } => Ok(certificate.basis),
        other => Err(CliError::Input(format!(
            "no eigenbasis to inspect ({})",
            other.classification().reason
        ))),
    }
}

pub fn pattern(
    target: &str,
    basis: Option<&Path>,
    param: Option<&Scalar>,
    height: u32,
) -> CliResult<Report> {
    let (source, alg) = load_algebra(target, param)?;
    require_dim3(&alg)?;
    let z: Matrix = match basis {
        Some(path) => serde_json::from_str(&read_file(path)?).map_err(Error::from)?,
        None => default_basis(&source, &alg, height)?,
    };
    let mut r = Report::new(&["pattern", target]);
    r.line(format!("basis: {}", basis_text(&z)));
    r.witness("basis", &z);
    match verify_nijenhuis_eigenbasis(&alg, &z)? {
        EigenbasisCheck::Escapes(w) => {
            r.line(format!(
                "not an eigenbasis: [ζ{}, ζ{}] has coordinates {:?}",
                w.i + 1,
                w.j + 1,
                w.coordinates.iter().map(|x| x.to_string()).collect::<Vec<_>>()
            ));
            r.witness("escape", &w);
            r.verdict("eigenbasis", false);
            return Ok(r);
        }
        EigenbasisCheck::Certified(_) => r.verdict("eigenbasis", true),
    }
    let p = eigenbasis_pattern(&alg, &z)?;
    for c in &p.pairs {
        r.line(format!(
            "  [ζ{}, ζ{}] = ({}) ζ{} + ({}) ζ{}",
            c.i + 1,
            c.j + 1,
            c.alpha,
            c.i + 1,
            c.beta,
            c.j + 1
        ));
    }
    r.witness("pattern", &p);
    match sl2_pattern(&alg, &z) {
        Ok(t) => {
            r.line(format!("sl(2) shape: A = {}, B = {}, C = {}", t.a, t.b, t.c));
            r.witness("sl2", &t);
        }
        Err(Error::PatternViolation(m)) => r.line(format!("no sl(2) shape: {m}")),
        Err(e) => return Err(e.into()),
    }
    let commuting = commuting_pair_count(&alg, &z)?;
    let obstruction = commutant_obstruction(&alg);
    r.line(format!("commuting pairs: {commuting}"));
    r.line(format!("proper derived algebra: {obstruction}"));
    r.witness("commuting_pairs", &commuting);
    r.witness("commutant_obstruction", &obstruction);
    Ok(r)
}

pub fn equiv_check(target: &str, certificate: &Path, param: Option<&Scalar>) -> CliResult<Report> {
    let (_, alg) = load_algebra(target, param)?;
    require_dim3(&alg)?;
    let cert = EquivalenceCertificate::from_json(&read_file(certificate)?)?;
    let ok = cert.check(&alg)?;
    let mut r = Report::new(&["equiv-check", target, &certificate.display().to_string()]);
    r.line(format!("Phi is an automorphism: {}", nijenhuis_core::equivalence::is_automorphism(&alg, &cert.phi)));
    r.line(format!("equivalent: {ok}"));
    r.witness("certificate", &cert);
    r.verdict("equivalent", ok);
    Ok(r)
}
