//! Command-line front end: argument parsing, algebra loading and the
//! reports every subcommand produces.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use nijenhuis_core::catalog::{algebra, CatalogId};
use nijenhuis_core::{Error, LieAlgebra, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::Value;

pub mod commands;
pub mod reproduce;

#[derive(Debug, Parser)]
#[command(
    name = "nijenhuis",
    version,
    about = "Nijenhuis operators and eigenbases of three-dimensional Lie algebras, in exact arithmetic"
)]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Coordinate bound for witness searches.
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub height: u32,

    /// Parameter of a parametric catalog family, e.g. `2`, `-1/2`, `1+1i`.
    #[arg(long, global = true, value_parser = parse_scalar, allow_hyphen_values = true)]
    pub param: Option<Scalar>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Browse the real and complex catalogs.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Jacobi check of an algebra, plus torsion of an optional operator.
    Check {
        /// Algebra JSON file or catalog id.
        algebra: String,
        /// Operator JSON file.
        #[arg(long)]
        operator: Option<PathBuf>,
    },
    /// Whether the algebra has a regular semisimple Nijenhuis operator.
    Admits {
        /// Algebra JSON file or catalog id.
        target: String,
    },
    /// Search for a Nijenhuis eigenbasis and the operator it defines.
    FindEigenbasis {
        /// Algebra JSON file or catalog id.
        target: String,
    },
    /// Bracket pattern of an eigenbasis.
    Pattern {
        /// Algebra JSON file or catalog id.
        target: String,
        /// Basis JSON file (columns are basis vectors). Defaults to the
        /// printed basis of a catalog entry, or a found one.
        #[arg(long)]
        basis: Option<PathBuf>,
    },
    /// Verify an equivalence certificate between two eigenbases.
    EquivCheck {
        /// Algebra JSON file or catalog id.
        target: String,
        /// Certificate JSON file with keys `Z`, `Zprime`, `Phi`, `mu`.
        certificate: PathBuf,
    },
    /// Re-derive the classification results over both catalogs.
    Reproduce {
        /// Worker threads (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
        /// Replace one family with wrong constants, to see the run fail.
        #[arg(long, hide = true)]
        corrupt: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// List every family of both catalogs.
    List,
    /// Structure constants of one entry.
    Show { id: String },
}

fn parse_scalar(s: &str) -> Result<Scalar, String> {
    s.parse::<Scalar>().map_err(|e| e.to_string())
}

/// How a run ended, short of an input error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Ok,
    False,
    Invariant,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::False => 1,
            Outcome::Invariant => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: Vec<String>,
    pub outcome: Outcome,
    pub verdicts: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, Value>,
    /// Wall time; left out where output must be reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &[&str]) -> Self {
        Report {
            command: command.iter().map(|s| s.to_string()).collect(),
            outcome: Outcome::Ok,
            verdicts: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            timing_ms: None,
            lines: Vec::new(),
        }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    /// Records a verdict; the first false one makes the outcome `False`.
    pub fn verdict(&mut self, name: &str, value: bool) {
        self.verdicts.insert(name.to_string(), value);
        if !value && self.outcome == Outcome::Ok {
            self.outcome = Outcome::False;
        }
    }

    /// Records a verdict that does not decide the outcome.
    pub fn note(&mut self, name: &str, value: bool) {
        self.verdicts.insert(name.to_string(), value);
    }

    pub fn witness<T: Serialize>(&mut self, name: &str, value: &T) {
        let v = serde_json::to_value(value).expect("witness serializes");
        self.witnesses.insert(name.to_string(), v);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self) -> String {
        let mut out = self.lines.join("\n");
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("\n({ms} ms)"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Input(String),
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Invariant(m) => write!(f, "invariant breach: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(m) => CliError::Invariant(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Where an algebra came from.
#[derive(Debug, Clone)]
pub enum Source {
    File(PathBuf),
    Catalog(CatalogId),
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::File(p) => write!(f, "{}", p.display()),
            Source::Catalog(id) => write!(f, "{id}"),
        }
    }
}

/// An existing file is read as algebra JSON; anything else must be a
/// catalog id, with `param` as its parameter.
pub fn load_algebra(target: &str, param: Option<&Scalar>) -> CliResult<(Source, LieAlgebra)> {
    let path = Path::new(target);
    if path.is_file() {
        let alg = LieAlgebra::from_json(&read_file(path)?)?;
        return Ok((Source::File(path.to_path_buf()), alg));
    }
    let id = CatalogId::parse(target, param.cloned()).map_err(|e| match e {
        Error::UnknownCatalogId(_) => {
            CliError::Input(format!("{target:?} is neither a file nor a catalog id"))
        }
        other => other.into(),
    })?;
    let alg = algebra(&id)?;
    Ok((Source::Catalog(id), alg))
}

/// `ζ1 = (…), ζ2 = (…), …`: the columns of a basis matrix.
pub fn basis_text(z: &nijenhuis_core::Matrix) -> String {
    z.columns()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let coords: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("ζ{} = ({})", k + 1, coords.join(", "))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Runs one parsed command line.
pub fn run(cli: &Cli) -> CliResult<Report> {
    let start = std::time::Instant::now();
    let param = cli.param.as_ref();
    let mut report = match &cli.command {
        Command::Catalog(CatalogCommand::List) => commands::catalog_list(),
        Command::Catalog(CatalogCommand::Show { id }) => commands::catalog_show(id, param)?,
        Command::Check { algebra, operator } => {
            commands::check(algebra, operator.as_deref(), param)?
        }
        Command::Admits { target } => commands::admits(target, param, cli.height)?,
        Command::FindEigenbasis { target } => {
            commands::find_eigenbasis(target, param, cli.height)?
        }
        Command::Pattern { target, basis } => {
            commands::pattern(target, basis.as_deref(), param, cli.height)?
        }
        Command::EquivCheck {
            target,
            certificate,
        } => commands::equiv_check(target, certificate, param)?,
        Command::Reproduce { threads, corrupt } => {
            let opts = reproduce::Options {
                height: cli.height,
                threads: *threads,
                corrupt: corrupt.clone(),
            };
            return reproduce::report(&opts);
        }
    };
    report.timing_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}
