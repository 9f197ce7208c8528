//! Command-line front end: document I/O, deterministic text output and the
//! verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on bad
//! input.

pub mod document;
pub mod verify;

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::complex::{composition_complex, polyhedral_complex, IndexPair, SimplicialComplex, SimplicialPair, SimplicialPairSeq, VertexSet};
use crate::error::Error;
use crate::hochster::hochster_table;
use crate::homology::{reduced_cohomology, reduced_homology, Coefficients, FgAbelianGroup, GradedGroup};
use crate::spaces::{sphere_pair_homology, Part, SpherePairSystem};

pub use document::ComplexDocument;
pub use verify::{run_suite, Suite, SuiteReport, VerifyConfig};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Input(#[from] Error),
}

#[derive(Parser, Debug)]
#[command(name = "polyprod", version, about = "Polyhedral products, duals and their homology")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PairMode {
    /// Factors are the subcomplexes `L_k` of full simplices.
    Delta,
    /// Factors come as `X_1 A_1 X_2 A_2 ...`.
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableMode {
    All,
    List,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dual complex, relative to the ground unless overridden.
    Dual {
        input: PathBuf,
        /// Relative set, e.g. `1,2,3`.
        #[arg(long)]
        relative_to: Option<String>,
    },
    /// Reduced homology or cohomology.
    Homology {
        input: PathBuf,
        /// `z`, `q` or `p:<prime>`.
        #[arg(long, default_value = "z")]
        coeff: String,
        #[arg(long)]
        cohomology: bool,
    },
    /// Polyhedral product complex of an outer complex and factor documents.
    Compose {
        outer: PathBuf,
        factors: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "delta")]
        pairs: PairMode,
    },
    /// Nonzero entries of the Hochster table, indexed by the reduced degree of the slice.
    Hochster {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        pairs: TableMode,
        /// With `--pairs list`: entries like `sigma={1} omega={2,3}`.
        #[arg(long = "pair")]
        pair: Vec<String>,
        #[arg(long, default_value = "z")]
        coeff: String,
    },
    /// Run a randomized verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_vertices: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Homology of the polyhedral product of sphere pairs `(S^{r+1}, S^q)`.
    MomentAngle {
        input: PathBuf,
        /// `r1:q1,r2:q2,...`, one pair per vertex in increasing order.
        #[arg(long)]
        pairs: String,
    },
}

pub fn parse_coeff(s: &str) -> Result<Coefficients, Error> {
    match s {
        "z" => Ok(Coefficients::Z),
        "q" => Ok(Coefficients::Q),
        _ => match s.strip_prefix("p:").map(str::parse::<u64>) {
            Some(Ok(p)) => Coefficients::prime(p),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown coefficients `{s}`; use z, q or p:<prime>") }),
        },
    }
}

/// Parses `1,2,3`, `[1,2,3]` or `{1,2,3}`.
pub fn parse_vertex_set(s: &str) -> Result<VertexSet, Error> {
    let inner = s.trim().trim_start_matches(['[', '{']).trim_end_matches([']', '}']);
    let labels = inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| Error::Parse { line: 0, msg: format!("bad vertex `{t}`") }))
        .collect::<Result<Vec<_>, _>>()?;
    VertexSet::from_labels(labels)
}

/// Parses `sigma={1} omega={2,3}`.
pub fn parse_index_pair(s: &str) -> Result<IndexPair, Error> {
    let bad = || Error::Parse { line: 0, msg: format!("expected `sigma={{..}} omega={{..}}`, got `{s}`") };
    let rest = s.trim().strip_prefix("sigma=").ok_or_else(bad)?;
    let (sigma, omega) = rest.split_once("omega=").ok_or_else(bad)?;
    IndexPair::new(parse_vertex_set(sigma)?, parse_vertex_set(omega)?)
}

pub fn render_group(g: &FgAbelianGroup, coeff: Coefficients) -> String {
    if coeff.is_field() {
        g.render_with_exponent()
    } else {
        g.to_string()
    }
}

/// `d<k>: <group>` lines in increasing degree; `0` for the zero group.
pub fn render_graded(g: &GradedGroup, coeff: Coefficients) -> String {
    if g.is_zero() {
        return "0\n".into();
    }
    g.iter().map(|(d, x)| format!("d{d}: {}\n", render_group(x, coeff))).collect()
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io { path: path.display().to_string(), source };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io_err)
    }
}

fn load(path: &Path) -> Result<ComplexDocument, CliError> {
    ComplexDocument::parse(&read_input(path)?).map_err(CliError::from)
}

fn cmd_dual(input: &Path, relative_to: Option<&str>) -> Result<String, CliError> {
    let k = load(input)?.to_complex()?;
    let s = match relative_to {
        Some(s) => parse_vertex_set(s)?,
        None => k.ground(),
    };
    if let Some(v) = k.support().difference(s).min() {
        return Err(Error::OutsideRelativeSet { vertex: v }.into());
    }
    let d = k.with_ground(s)?.dual(s)?;
    Ok(ComplexDocument::from_complex(&d, None).render())
}

fn cmd_homology(input: &Path, coeff: &str, cohomology: bool) -> Result<String, CliError> {
    let coeff = parse_coeff(coeff)?;
    let k = load(input)?.to_complex()?;
    let g = if cohomology { reduced_cohomology(&k, coeff) } else { reduced_homology(&k, coeff) };
    Ok(render_graded(&g, coeff))
}

/// Moves a factor document onto the block starting after `offset`.
fn onto_block(k: &SimplicialComplex, offset: u32) -> Result<SimplicialComplex, Error> {
    k.shift_to_block(offset)
}

fn cmd_compose(outer: &Path, factors: &[PathBuf], mode: PairMode) -> Result<String, CliError> {
    let k = load(outer)?.to_complex()?;
    let docs = factors.iter().map(|p| load(p)?.to_complex().map_err(CliError::from)).collect::<Result<Vec<_>, _>>()?;
    let mut offset = 0u32;
    let mut sizes = Vec::new();
    let complex = match mode {
        PairMode::Delta => {
            let mut ls = Vec::new();
            for l in &docs {
                ls.push(onto_block(l, offset)?);
                sizes.push(l.ground().len());
                offset += l.ground().len() as u32;
            }
            if ls.len() != k.ground().len() {
                return Err(Error::BlockMismatch(format!(
                    "outer complex has {} vertices but {} factors were given",
                    k.ground().len(),
                    ls.len()
                ))
                .into());
            }
            composition_complex(&k, &ls)?
        }
        PairMode::General => {
            if docs.len() % 2 != 0 {
                return Err(Error::BlockMismatch("general pairs need an X and an A document for each block".into()).into());
            }
            let mut pairs = Vec::new();
            for xa in docs.chunks(2) {
                let (x, a) = (&xa[0], &xa[1]);
                if x.ground() != a.ground() {
                    return Err(Error::GroundMismatch.into());
                }
                pairs.push(SimplicialPair::new(onto_block(x, offset)?, onto_block(a, offset)?)?);
                sizes.push(x.ground().len());
                offset += x.ground().len() as u32;
            }
            polyhedral_complex(&k, &SimplicialPairSeq::new(pairs)?)?
        }
    };
    Ok(ComplexDocument::from_complex(&complex, Some(sizes)).render())
}

fn cmd_hochster(input: &Path, mode: TableMode, pairs: &[String], coeff: &str) -> Result<String, CliError> {
    let coeff = parse_coeff(coeff)?;
    let k = load(input)?.to_complex()?;
    let list = match mode {
        TableMode::All => None,
        TableMode::List => Some(pairs.iter().map(|p| parse_index_pair(p)).collect::<Result<Vec<_>, _>>()?),
    };
    let table = hochster_table(&k, coeff, list.as_deref())?;
    let mut out = String::new();
    for (pair, g) in table.nonzero() {
        for (d, x) in g.shift(-1).iter() {
            out.push_str(&format!("{pair} d{d}: {}\n", render_group(x, coeff)));
        }
    }
    Ok(out)
}

fn cmd_moment_angle(input: &Path, pairs: &str) -> Result<String, CliError> {
    let k = load(input)?.to_complex()?;
    let sys = SpherePairSystem::parse(pairs)?;
    let rep = sphere_pair_homology(&k, &sys)?;
    let z = Coefficients::Z;
    let mut out = String::new();
    for (name, g) in [("hat", &rep.hat), ("bar", &rep.bar), ("total", &rep.total)] {
        out.push_str(&format!("{name}:\n{}", render_graded(g, z)));
    }
    out.push_str("ledger:\n");
    for c in rep.ledger.iter().filter(|c| matches!(c.part, Part::Hat | Part::Bar)) {
        let part = if c.part == Part::Hat { "hat" } else { "bar" };
        let src = c.source_degree.map_or("-".to_string(), |j| j.to_string());
        out.push_str(&format!(
            "{part} sigma={} omega={} t={} source={src} d{}: {}\n",
            c.sigma, c.omega, c.shift, c.degree, c.group
        ));
    }
    Ok(out)
}

/// Runs a parsed command, writing its output to `out`; returns the exit code.
pub fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Dual { input, relative_to } => cmd_dual(&input, relative_to.as_deref()),
        Command::Homology { input, coeff, cohomology } => cmd_homology(&input, &coeff, cohomology),
        Command::Compose { outer, factors, pairs } => cmd_compose(&outer, &factors, pairs),
        Command::Hochster { input, pairs, pair, coeff } => cmd_hochster(&input, pairs, &pair, &coeff),
        Command::MomentAngle { input, pairs } => cmd_moment_angle(&input, &pairs),
        Command::Verify { suite, max_vertices, trials, seed } => {
            let cfg = VerifyConfig { max_vertices, trials, seed };
            match suite.parse::<Suite>().and_then(|s| run_suite(s, &cfg)) {
                Ok(report) => {
                    let _ = out.write_all(report.render().as_bytes());
                    return if report.passed() { 0 } else { 1 };
                }
                Err(e) => Err(e.into()),
            }
        }
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    execute(cli, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_parse() {
        assert_eq!(parse_coeff("z").unwrap(), Coefficients::Z);
        assert_eq!(parse_coeff("p:2").unwrap(), Coefficients::prime(2).unwrap());
        assert_eq!(parse_coeff("p:4").unwrap_err(), Error::NotPrime(4));
        assert!(parse_coeff("r").is_err());
    }

    #[test]
    fn index_pairs_parse() {
        let p = parse_index_pair("sigma={1} omega={2,3}").unwrap();
        assert_eq!(p.to_string(), "sigma={1} omega={2,3}");
        assert_eq!(parse_index_pair("sigma={} omega={}").unwrap().omega, VertexSet::EMPTY);
        assert!(parse_index_pair("sigma={1} omega={1}").is_err());
    }

    #[test]
    fn graded_rendering() {
        let mut g = GradedGroup::zero();
        g.set(1, FgAbelianGroup::free(1));
        assert_eq!(render_graded(&g, Coefficients::Z), "d1: Z\n");
        assert_eq!(render_graded(&g, Coefficients::Q), "d1: Z^1\n");
        assert_eq!(render_graded(&GradedGroup::zero(), Coefficients::Z), "0\n");
    }
}
