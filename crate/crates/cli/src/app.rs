use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use symkron::combinat::{count_ssyt, enumerate_compositions, enumerate_partitions};
use symkron::contingency::{contingency_matrices, decompose_permutation_tensor, hom_dimension};
use symkron::oracle::{
    characteristic_map, permutation_character, specht_character, tensor_orbit_decompose,
    CharacterVector, OracleBudget,
};
use symkron::symfunc::convert;
use symkron::{Basis, ContingencyMatrix, Error, ModuleDecomposition, SymFunc};

use crate::expr::{self, EvalError, ParseError};
use crate::text::{parse_composition, parse_partition, TextError};
use crate::verify::{run_verify, RunConfig, Suite, UnknownSuite};

pub const ENV_MAX_BASIS_PAIRS: &str = "SYMKRON_MAX_BASIS_PAIRS";
pub const ENV_MAX_GROUP_DEGREE: &str = "SYMKRON_MAX_GROUP_DEGREE";
pub const ENV_MAX_DEGREE: &str = "SYMKRON_MAX_DEGREE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "symkron",
    version,
    about = "Exact symmetric functions and Kronecker products"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Permutation character φ^λ of M^λ (λ may be any composition).
    Perm,
    /// Irreducible character χ^λ.
    Specht,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the partitions of D in canonical order.
    Partitions {
        #[arg(long)]
        d: usize,
    },
    /// List the compositions of D into N parts.
    Compositions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Kostka number: semistandard tableaux of a shape and content.
    Kostka {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        content: String,
    },
    /// Matrices with row sums λ and column sums μ.
    Contingency {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Print only the number of matrices.
        #[arg(long)]
        count_only: bool,
    },
    /// Decompose M^λ ⊗ M^μ into permutation modules.
    DecomposePerm {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Use the brute-force orbit enumeration instead of the contingency rule.
        #[arg(long)]
        oracle: bool,
        /// Also print each matrix (or orbit) with its module class.
        #[arg(long)]
        show_matrices: bool,
    },
    /// Evaluate an expression such as `h[3,1] # h[2,1,1]`.
    Kron {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value = "s")]
        basis: Basis,
    },
    /// Evaluate an expression and express it in another basis.
    Convert {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        basis: Basis,
    },
    /// Character values by cycle type.
    Character {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        lambda: String,
    },
    /// Image of a character under the characteristic map.
    Ch {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "s")]
        basis: Basis,
    },
    /// Run an invariant suite for every degree up to D.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_suite(s: &str) -> Result<Suite, UnknownSuite> {
    s.parse()
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Text(#[from] TextError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(EvalError),
    #[error(transparent)]
    Core(Error),
    #[error("verification failed")]
    VerificationFailed,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Core(core) => CliError::Core(core),
            other => CliError::Eval(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Text(_) | CliError::Parse(_) | CliError::Eval(_) => {
                EXIT_USAGE
            }
            CliError::Core(Error::BudgetExceeded { .. }) => EXIT_BUDGET,
            CliError::Core(
                Error::DegreeMismatch { .. }
                | Error::BasisMismatch { .. }
                | Error::InvalidPartition(_),
            ) => EXIT_USAGE,
            CliError::Core(_) | CliError::VerificationFailed | CliError::Io(_) => EXIT_VERIFICATION,
        }
    }
}

/// Reads the budget overrides from the environment.
pub fn config_from_env(seed: u64) -> Result<RunConfig, CliError> {
    config_from_lookup(seed, |k| std::env::var(k).ok())
}

fn config_from_lookup(
    seed: u64,
    lookup: impl Fn(&str) -> Option<String>,
) -> Result<RunConfig, CliError> {
    fn positive<T: std::str::FromStr + PartialEq + From<u8>>(
        name: &str,
        lookup: &impl Fn(&str) -> Option<String>,
        default: T,
    ) -> Result<T, CliError> {
        let Some(raw) = lookup(name) else {
            return Ok(default);
        };
        match raw.trim().parse::<T>() {
            Ok(v) if v != T::from(0) => Ok(v),
            _ => Err(CliError::Usage(format!(
                "{name} must be a positive integer, got {raw:?}"
            ))),
        }
    }
    let defaults = RunConfig::default();
    Ok(RunConfig {
        budget: OracleBudget {
            max_basis_pairs: positive(
                ENV_MAX_BASIS_PAIRS,
                &lookup,
                defaults.budget.max_basis_pairs,
            )?,
            max_group_degree: positive(
                ENV_MAX_GROUP_DEGREE,
                &lookup,
                defaults.budget.max_group_degree,
            )?,
        },
        max_degree: positive(ENV_MAX_DEGREE, &lookup, defaults.max_degree)?,
        seed,
    })
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    rows: &'a [Vec<usize>],
    row_sums: &'a [usize],
    col_sums: &'a [usize],
}

fn matrix_json(a: &ContingencyMatrix) -> MatrixJson<'_> {
    MatrixJson {
        rows: a.rows(),
        row_sums: a.row_sums().parts(),
        col_sums: a.col_sums().parts(),
    }
}

fn decomposition_json(dec: &ModuleDecomposition) -> serde_json::Value {
    dec.iter()
        .map(|(class, m)| json!({ "class": class, "multiplicity": m }))
        .collect()
}

fn character_json(kind: Kind, lambda: &[usize], chi: &CharacterVector) -> serde_json::Value {
    json!({
        "kind": match kind { Kind::Perm => "perm", Kind::Specht => "specht" },
        "lambda": lambda,
        "degree": chi.degree(),
        "values": chi.iter().map(|(rho, v)| json!({ "cycle_type": rho, "value": v })).collect::<Vec<_>>(),
    })
}

fn character(kind: Kind, lambda: &str) -> Result<(Vec<usize>, CharacterVector), CliError> {
    Ok(match kind {
        Kind::Perm => {
            let c = parse_composition(lambda)?;
            let chi = permutation_character(&c);
            (c.parts().to_vec(), chi)
        }
        Kind::Specht => {
            let p = parse_partition(lambda)?;
            let chi = specht_character(&p);
            (p.parts().to_vec(), chi)
        }
    })
}

fn emit_symfunc(out: &mut dyn Write, format: Format, f: &SymFunc) -> Result<(), CliError> {
    match format {
        Format::Text => writeln!(out, "{f}")?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(f).expect("serializable"))?,
    }
    Ok(())
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    writeln!(
        out,
        "{}",
        serde_json::to_string(value).expect("serializable")
    )?;
    Ok(())
}

/// Executes one parsed command, writing results to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Partitions { d } => {
            let parts = enumerate_partitions(*d);
            match format {
                Format::Text => {
                    for p in &parts {
                        writeln!(out, "{p}")?;
                    }
                }
                Format::Json => emit_json(out, &parts)?,
            }
        }
        Command::Compositions { n, d } => {
            let comps = enumerate_compositions(*n, *d);
            match format {
                Format::Text => {
                    for c in &comps {
                        writeln!(out, "{c}")?;
                    }
                }
                Format::Json => emit_json(out, &comps)?,
            }
        }
        Command::Kostka { shape, content } => {
            let (shape, content) = (parse_partition(shape)?, parse_composition(content)?);
            let k = count_ssyt(&shape, &content)?;
            match format {
                Format::Text => writeln!(out, "{k}")?,
                Format::Json => emit_json(
                    out,
                    &json!({ "shape": shape, "content": content, "kostka": k }),
                )?,
            }
        }
        Command::Contingency {
            lambda,
            mu,
            count_only,
        } => {
            let (lambda, mu) = (parse_composition(lambda)?, parse_composition(mu)?);
            if *count_only {
                let count = hom_dimension(&lambda, &mu)?;
                match format {
                    Format::Text => writeln!(out, "{count}")?,
                    Format::Json => emit_json(out, &json!({ "count": count.to_string() }))?,
                }
                return Ok(());
            }
            let matrices = contingency_matrices(&lambda, &mu)?;
            match format {
                Format::Text => {
                    for (k, a) in matrices.iter().enumerate() {
                        if k > 0 {
                            writeln!(out)?;
                        }
                        writeln!(out, "{a}")?;
                    }
                }
                Format::Json => {
                    emit_json(out, &matrices.iter().map(matrix_json).collect::<Vec<_>>())?
                }
            }
        }
        Command::DecomposePerm {
            lambda,
            mu,
            oracle,
            show_matrices,
        } => {
            let (lambda, mu) = (parse_composition(lambda)?, parse_composition(mu)?);
            // (matrix, orbit size when computed by the oracle)
            let (decomposition, shown): (
                ModuleDecomposition,
                Vec<(ContingencyMatrix, Option<usize>)>,
            ) = if *oracle {
                let config = config_from_env(0)?;
                let orbits = tensor_orbit_decompose(&lambda, &mu, &config.budget)?;
                let shown = orbits
                    .orbits
                    .into_iter()
                    .map(|o| (o.intersection, Some(o.size)))
                    .collect();
                (orbits.decomposition, shown)
            } else {
                let shown = if *show_matrices {
                    contingency_matrices(&lambda, &mu)?
                        .into_iter()
                        .map(|a| (a, None))
                        .collect()
                } else {
                    Vec::new()
                };
                (decompose_permutation_tensor(&lambda, &mu)?, shown)
            };
            match format {
                Format::Text => {
                    if *show_matrices {
                        for (a, size) in &shown {
                            writeln!(out, "{a}")?;
                            match size {
                                Some(n) => {
                                    writeln!(out, "-> M[{}] (orbit of {n})", a.module_class())?
                                }
                                None => writeln!(out, "-> M[{}]", a.module_class())?,
                            }
                            writeln!(out)?;
                        }
                    }
                    writeln!(out, "{decomposition}")?;
                }
                Format::Json => {
                    let mut value = json!({
                        "lambda": lambda,
                        "mu": mu,
                        "method": if *oracle { "orbit" } else { "contingency" },
                        "decomposition": decomposition_json(&decomposition),
                    });
                    if *show_matrices {
                        value["matrices"] = shown
                            .iter()
                            .map(|(a, size)| {
                                let mut m =
                                    serde_json::to_value(matrix_json(a)).expect("serializable");
                                m["class"] = json!(a.module_class());
                                if let Some(n) = size {
                                    m["orbit_size"] = json!(n);
                                }
                                m
                            })
                            .collect();
                    }
                    emit_json(out, &value)?;
                }
            }
        }
        Command::Kron { expr, basis } | Command::Convert { expr, basis } => {
            let f = expr::evaluate(&expr::parse(expr)?, *basis)?;
            emit_symfunc(out, format, &f)?;
        }
        Command::Character { kind, lambda } => {
            let (parts, chi) = character(*kind, lambda)?;
            match format {
                Format::Text => writeln!(out, "{chi}")?,
                Format::Json => emit_json(out, &character_json(*kind, &parts, &chi))?,
            }
        }
        Command::Ch {
            kind,
            lambda,
            basis,
        } => {
            let (_, chi) = character(*kind, lambda)?;
            emit_symfunc(out, format, &convert(&characteristic_map(&chi), *basis))?;
        }
        Command::Verify { suite, d, seed } => {
            let config = config_from_env(*seed)?;
            let report = run_verify(*suite, *d, &config)?;
            match format {
                Format::Text => writeln!(out, "{report}")?,
                Format::Json => emit_json(out, &report)?,
            }
            if !report.passed {
                return Err(CliError::VerificationFailed);
            }
        }
    }
    Ok(())
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Errors go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(CliError::VerificationFailed) => EXIT_VERIFICATION,
        // a closed pipe (e.g. `| head`) is not an error
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("symkron").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn worked_example() {
        let (code, out, _) = run_str(&["contingency", "--lambda", "3,1", "--mu", "2,1,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "2 1 0\n0 0 1\n\n2 0 1\n0 1 0\n\n1 1 1\n1 0 0\n");
        let (code, out, _) = run_str(&["decompose-perm", "--lambda", "3,1", "--mu", "2,1,1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "2*M[2,1,1] + M[1,1,1,1]\n");
        let (_, oracle, _) = run_str(&[
            "decompose-perm",
            "--lambda",
            "3,1",
            "--mu",
            "2,1,1",
            "--oracle",
        ]);
        assert_eq!(oracle, out);
        let (_, count, _) = run_str(&[
            "contingency",
            "--lambda",
            "3,1",
            "--mu",
            "2,1,1",
            "--count-only",
        ]);
        assert_eq!(count, "3\n");
    }

    #[test]
    fn json_outputs() {
        let (_, out, _) = run_str(&[
            "--format",
            "json",
            "decompose-perm",
            "--lambda",
            "3,1",
            "--mu",
            "2,1,1",
            "--show-matrices",
        ]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            v["decomposition"][0],
            json!({ "class": [2, 1, 1], "multiplicity": 2 })
        );
        assert_eq!(
            v["matrices"][0],
            json!({ "rows": [[2, 1, 0], [0, 0, 1]], "row_sums": [3, 1], "col_sums": [2, 1, 1], "class": [2, 1, 1] })
        );
        let (_, out, _) = run_str(&[
            "kron",
            "--expr",
            "h[3,1] # h[2,1,1]",
            "--basis",
            "h",
            "--format",
            "json",
        ]);
        let f: SymFunc = serde_json::from_str(&out).unwrap();
        assert_eq!(f.to_string(), "2*h[2,1,1] + h[1,1,1,1]");
        let (_, out, _) = run_str(&[
            "--format",
            "json",
            "character",
            "--kind",
            "specht",
            "--lambda",
            "2",
        ]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            v["values"],
            json!([{ "cycle_type": [2], "value": 1 }, { "cycle_type": [1, 1], "value": 1 }])
        );
    }

    #[test]
    fn commands() {
        assert_eq!(run_str(&["partitions", "--d", "3"]).1, "3\n2,1\n1,1,1\n");
        assert_eq!(
            run_str(&["compositions", "--n", "2", "--d", "2"]).1,
            "2,0\n1,1\n0,2\n"
        );
        assert_eq!(
            run_str(&["kostka", "--shape", "3,2", "--content", "2,2,1"]).1,
            "2\n"
        );
        assert_eq!(
            run_str(&["convert", "--expr", "s[2,1]", "--basis", "m"]).1,
            "m[2,1] + 2*m[1,1,1]\n"
        );
        assert_eq!(run_str(&["kron", "--expr", "s[3] # s[3]"]).1, "s[3]\n");
        assert_eq!(
            run_str(&["character", "--kind", "perm", "--lambda", "1,1"]).1,
            "2: 0\n1,1: 2\n"
        );
        assert_eq!(
            run_str(&["ch", "--kind", "perm", "--lambda", "2,1", "--basis", "h"]).1,
            "h[2,1]\n"
        );
        assert_eq!(
            run_str(&["ch", "--kind", "specht", "--lambda", "2,1"]).1,
            "s[2,1]\n"
        );
        let (code, out, _) = run_str(&["verify", "--suite", "monoidal", "--d", "3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.lines().last().unwrap().starts_with("PASS"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["kron", "--expr", "h[1,2]"]).0, EXIT_USAGE);
        let (code, _, err) = run_str(&["kron", "--expr", "s[2] +"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("offset 7"), "{err}");
        assert_eq!(run_str(&["kron", "--expr", "s[2] # s[1]"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["convert", "--expr", "s[2] + s[1]", "--basis", "s"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_str(&["verify", "--suite", "bogus", "--d", "3"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["kostka", "--shape", "1,2", "--content", "3"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_str(&["verify", "--suite", "monoidal", "--d", "100"]).0,
            EXIT_BUDGET
        );
        assert_eq!(
            run_str(&[
                "decompose-perm",
                "--lambda",
                "1,1,1,1,1,1,1",
                "--mu",
                "1,1,1,1,1,1,1",
                "--oracle"
            ])
            .0,
            EXIT_BUDGET
        );
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn env_overrides() {
        let env = |pairs: &'static [(&'static str, &'static str)]| {
            move |k: &str| {
                pairs
                    .iter()
                    .find(|(n, _)| *n == k)
                    .map(|(_, v)| v.to_string())
            }
        };
        let c = config_from_lookup(
            5,
            env(&[(ENV_MAX_BASIS_PAIRS, "10"), (ENV_MAX_DEGREE, "4")]),
        )
        .unwrap();
        assert_eq!(c.budget.max_basis_pairs, 10);
        assert_eq!(c.budget.max_group_degree, 8);
        assert_eq!((c.max_degree, c.seed), (4, 5));
        assert!(config_from_lookup(0, env(&[(ENV_MAX_GROUP_DEGREE, "0")])).is_err());
        assert!(config_from_lookup(0, env(&[(ENV_MAX_GROUP_DEGREE, "lots")])).is_err());
    }
}
