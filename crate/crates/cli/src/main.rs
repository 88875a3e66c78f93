//! Command-line surface: prime decomposition, lift eigenvalues, candidate
//! search, local L-factor verification, and ordinary-family operations, with
//! table and JSON output.
//!
//! Exit codes: 0 success, 2 usage/validation, 3 mathematical contract
//! violation, 4 data-source failure.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use basechange::error::Error;
use basechange::fixtures;
use basechange::hida;
use basechange::lift::{self, EigensystemOptions, HilbertCandidate, SearchOptions};
use basechange::lmfdb::{LmfdbClient, LmfdbConfig};
use basechange::newform::NewformSpec;
use basechange::numberfield::{sieve_primes, AbelianData, NumberFieldSpec};

#[derive(Parser)]
#[command(
    name = "basechange",
    version,
    about = "Hecke eigensystems of base-change lifts of classical newforms to totally real Galois fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Never touch the network; serve data from the cache and bundled tables.
    #[arg(long, global = true)]
    offline: bool,

    /// Directory for the write-through response cache.
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    /// JSON file overriding the LMFDB base URL and endpoint templates.
    #[arg(long, global = true, value_name = "FILE")]
    lmfdb_config: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = OutputKind::Table)]
    output: OutputKind,

    /// Seed for the randomized equal-degree factorization step.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Table,
    Json,
}

#[derive(Args)]
struct FieldArgs {
    /// Bundled field name (Q, Qsqrt2, Qzeta7plus, Qzeta11plus) or an LMFDB
    /// totally-real-field label attached to a bundled field.
    #[arg(long, value_name = "NAME")]
    field: Option<String>,

    /// Inline defining polynomial, comma-separated from the constant term
    /// (must be monic, totally real, Galois).
    #[arg(long, value_name = "C0,C1,..", conflicts_with = "field")]
    field_poly: Option<String>,

    /// Conductor of the field inside the cyclotomic field (with --field-poly).
    #[arg(long, requires = "field_poly")]
    conductor: Option<u64>,

    /// Fixing subgroup of (Z/mZ)*, comma-separated (with --conductor).
    #[arg(long, value_name = "A,B,..", requires = "conductor")]
    subgroup: Option<String>,
}

#[derive(Args)]
struct NewformArgs {
    /// Newform label, resolved against bundled tables and then the LMFDB
    /// client (subject to --offline).
    #[arg(long, value_name = "LABEL")]
    newform: Option<String>,

    /// JSON file holding one newform document.
    #[arg(long, value_name = "FILE", conflicts_with = "newform")]
    newform_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose rational primes in a field: (p, e, f, g, norm) rows.
    Decompose {
        #[command(flatten)]
        field: FieldArgs,
        /// Comma-separated primes.
        #[arg(long, value_name = "P,Q,..", conflicts_with = "primes_up_to")]
        primes: Option<String>,
        /// All primes up to a bound.
        #[arg(long, value_name = "N")]
        primes_up_to: Option<u64>,
    },
    /// Hecke eigenvalues of the base-change lift over prime classes.
    Lift {
        #[command(flatten)]
        newform: NewformArgs,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 100)]
        norm_bound: u64,
        /// Keep only inert classes (residual degree = field degree).
        #[arg(long)]
        inert_only: bool,
        /// Drop classes above primes dividing the level.
        #[arg(long)]
        exclude_level_primes: bool,
    },
    /// Match the computed lift against candidate Hilbert newform tables.
    LiftSearch {
        #[command(flatten)]
        newform: NewformArgs,
        #[command(flatten)]
        field: FieldArgs,
        /// Candidate source: "fixture", "lmfdb", or a JSON file of candidate
        /// documents.
        #[arg(long, default_value = "fixture", value_name = "SRC")]
        candidates: String,
        #[arg(long, default_value_t = 100)]
        norm_bound: u64,
        /// Stop at the first matching candidate.
        #[arg(long)]
        first_only: bool,
    },
    /// Compare the lifted local L-factor with the twisted product, prime by
    /// prime.
    EulerCheck {
        #[command(flatten)]
        newform: NewformArgs,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 100)]
        primes_up_to: u64,
    },
    /// Ordinarity, stabilization, and family operations.
    Hida {
        #[command(subcommand)]
        command: HidaCommand,
    },
}

#[derive(Subcommand)]
enum HidaCommand {
    /// Is a(p) a unit at the chosen prime above p?
    OrdinaryCheck {
        #[command(flatten)]
        newform: NewformArgs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        factor_index: usize,
    },
    /// Roots of the Hecke polynomial and the stabilized coefficients.
    Stabilize {
        #[command(flatten)]
        newform: NewformArgs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 0)]
        factor_index: usize,
        /// p-adic working precision (digits of p).
        #[arg(long, default_value_t = hida::DEFAULT_PRECISION)]
        precision: u32,
    },
    /// Family base-change coefficient at a class, evaluated at a weight.
    FamilyLift {
        /// "fixture:<label>" or a JSON file holding one family document.
        #[arg(long, value_name = "SRC")]
        family: String,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        weight: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(seed) = cli.seed {
        basechange::finitefield::set_default_factor_seed(seed);
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.is_data_source() {
        4
    } else if e.is_validation() {
        2
    } else {
        3
    }
}

fn client(cli: &Cli) -> Result<LmfdbClient, Error> {
    let mut config = match &cli.lmfdb_config {
        Some(path) => LmfdbConfig::from_file(path)?,
        None => LmfdbConfig::from_env(),
    };
    if cli.offline {
        config.offline = true;
    }
    if let Some(dir) = &cli.cache_dir {
        config.cache_dir = Some(dir.clone());
    }
    Ok(LmfdbClient::new(config))
}

fn parse_csv<T: std::str::FromStr>(raw: &str, what: &str) -> Result<Vec<T>, Error> {
    raw.split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<T>()
                .map_err(|_| Error::InvalidInput(format!("bad {what} entry '{s}'")))
        })
        .collect()
}

fn load_field(args: &FieldArgs) -> Result<NumberFieldSpec, Error> {
    match (&args.field, &args.field_poly) {
        (Some(name), None) => fixtures::load_field(name),
        (None, Some(poly)) => {
            let coeffs: Vec<i64> = parse_csv(poly, "coefficient")?;
            let abelian = match (args.conductor, &args.subgroup) {
                (Some(m), Some(h)) => Some(AbelianData {
                    conductor: m,
                    subgroup: parse_csv(h, "subgroup")?,
                }),
                (Some(m), None) => Some(AbelianData {
                    conductor: m,
                    subgroup: vec![1],
                }),
                _ => None,
            };
            NumberFieldSpec::new(
                "inline",
                coeffs.into_iter().map(Into::into).collect(),
                abelian,
            )
        }
        _ => Err(Error::InvalidInput(
            "exactly one of --field or --field-poly is required".into(),
        )),
    }
}

fn load_newform(cli: &Cli, args: &NewformArgs) -> Result<NewformSpec, Error> {
    match (&args.newform, &args.newform_file) {
        (Some(label), None) => {
            if let Ok(spec) = fixtures::load_newform(label) {
                return Ok(spec);
            }
            client(cli)?.fetch_classical_newform(label)
        }
        (None, Some(path)) => {
            let raw = std::fs::read_to_string(path)
                .map_err(|e| Error::DataSource(format!("{}: {e}", path.display())))?;
            let doc: fixtures::NewformDoc =
                serde_json::from_str(&raw).map_err(|e| Error::Parse {
                    context: path.display().to_string(),
                    message: e.to_string(),
                })?;
            let spec = doc.to_spec()?;
            let bad = spec.deligne_violations();
            if !bad.is_empty() {
                eprintln!(
                    "warning: {}: eigenvalues at {bad:?} violate the coefficient bound",
                    spec.label()
                );
            }
            Ok(spec)
        }
        _ => Err(Error::InvalidInput(
            "exactly one of --newform or --newform-file is required".into(),
        )),
    }
}

fn load_candidates(
    cli: &Cli,
    source: &str,
    form: &NewformSpec,
    field: &NumberFieldSpec,
) -> Result<Vec<HilbertCandidate>, Error> {
    let field_label =
        fixtures::lmfdb_field_label(field.label()).unwrap_or_else(|| field.label().to_string());
    match source {
        "fixture" => fixtures::load_candidates(&field_label),
        "lmfdb" => {
            let levels = lift::candidate_level_norms(form.level(), field)?;
            client(cli)?.fetch_hilbert_candidates(&field_label, &levels, form.weight())
        }
        path => {
            let raw = std::fs::read_to_string(path)
                .map_err(|e| Error::DataSource(format!("{path}: {e}")))?;
            let docs: Vec<fixtures::CandidateDoc> =
                serde_json::from_str(&raw).map_err(|e| Error::Parse {
                    context: path.to_string(),
                    message: e.to_string(),
                })?;
            docs.iter().map(|d| d.to_candidate()).collect()
        }
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Decompose {
            field,
            primes,
            primes_up_to,
        } => {
            let field = load_field(field)?;
            let ps: Vec<u64> = match (primes, primes_up_to) {
                (Some(csv), None) => parse_csv(csv, "prime")?,
                (None, Some(bound)) => sieve_primes(*bound),
                _ => {
                    return Err(Error::InvalidInput(
                        "exactly one of --primes or --primes-up-to is required".into(),
                    ))
                }
            };
            output::decompose(&field, &ps, cli.output == OutputKind::Json)
        }
        Command::Lift {
            newform,
            field,
            norm_bound,
            inert_only,
            exclude_level_primes,
        } => {
            let form = load_newform(cli, newform)?;
            let field = load_field(field)?;
            let options = EigensystemOptions {
                norm_bound: *norm_bound,
                include_level_primes: !exclude_level_primes,
                inert_only: *inert_only,
            };
            let rows = lift::lift_eigensystem(&form, &field, options)?;
            output::lift(&form, &field, &rows, cli.output == OutputKind::Json)
        }
        Command::LiftSearch {
            newform,
            field,
            candidates,
            norm_bound,
            first_only,
        } => {
            let form = load_newform(cli, newform)?;
            let field = load_field(field)?;
            let cands = load_candidates(cli, candidates, &form, &field)?;
            let outcome = lift::lift_search(
                &form,
                &field,
                &cands,
                SearchOptions {
                    norm_bound: *norm_bound,
                    first_match_only: *first_only,
                },
            )?;
            output::search(&outcome, cli.output == OutputKind::Json)
        }
        Command::EulerCheck {
            newform,
            field,
            primes_up_to,
        } => {
            let form = load_newform(cli, newform)?;
            let field = load_field(field)?;
            output::euler_check(
                &form,
                &field,
                &sieve_primes(*primes_up_to),
                cli.output == OutputKind::Json,
            )
        }
        Command::Hida { command } => match command {
            HidaCommand::OrdinaryCheck {
                newform,
                p,
                factor_index,
            } => {
                let form = load_newform(cli, newform)?;
                let ordinary = hida::is_p_ordinary(&form, *p, *factor_index)?;
                output::ordinary_check(&form, *p, ordinary, cli.output == OutputKind::Json)
            }
            HidaCommand::Stabilize {
                newform,
                p,
                factor_index,
                precision,
            } => {
                let form = load_newform(cli, newform)?;
                let stabilized = hida::stabilize(&form, *p, *factor_index, *precision)?;
                output::stabilize(&form, &stabilized, cli.output == OutputKind::Json)
            }
            HidaCommand::FamilyLift {
                family,
                field,
                ell,
                weight,
            } => {
                let table = if let Some(label) = family.strip_prefix("fixture:") {
                    fixtures::load_family(label)?
                } else {
                    let raw = std::fs::read_to_string(family)
                        .map_err(|e| Error::DataSource(format!("{family}: {e}")))?;
                    let doc: fixtures::FamilyDoc =
                        serde_json::from_str(&raw).map_err(|e| Error::Parse {
                            context: family.clone(),
                            message: e.to_string(),
                        })?;
                    doc.to_table(|label| {
                        fixtures::load_newform(label)
                            .or_else(|_| client(cli)?.fetch_classical_newform(label))
                    })?
                };
                let field = load_field(field)?;
                let split = field.decompose_prime(*ell)?;
                let value = hida::family_lift_coefficient(&table, &split, *weight)?;
                output::family_lift(
                    &table,
                    &split,
                    *weight,
                    &value,
                    cli.output == OutputKind::Json,
                )
            }
        },
    }
}
