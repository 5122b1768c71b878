use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use focklab::analysis::{character_table, compare_sectors, run_suite, Space, SuiteConfig};
use focklab::charged::{charged_vacuum, enumerate_charged_basis};
use focklab::neutral::{enumerate_basis, gradings, highest_weight_vector};
use focklab::reduction::{reduce_to_highest_weight, verify_trace};
use focklab::rep::{verify_bracket_identity_on, verify_singular_vector, weight_of_vector};
use focklab::wire::{
    rational_to_string, report_to_json, trace_to_json, vector_from_json, vector_to_json, weight_to_json,
};
use focklab::{AlgebraKind, FockVector, RepName};

const FAILURE_DETAILS: usize = 20;

#[derive(Parser)]
#[command(name = "focklab", version, about = "Exact checks on neutral and charged fermion Fock spaces")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Generator or weight index window
    #[arg(long, global = true)]
    window: Option<i64>,
    /// Twice the energy cutoff for basis enumeration
    #[arg(long, visible_alias = "energy2", global = true)]
    cutoff: Option<i64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    sector: Option<i64>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    Neutral,
    Charged,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RepArg {
    R1,
    Rhalf,
    Ra,
}

impl From<RepArg> for RepName {
    fn from(r: RepArg) -> RepName {
        match r {
            RepArg::R1 => RepName::ROne,
            RepArg::Rhalf => RepName::RHalf,
            RepArg::Ra => RepName::RA,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraArg {
    A,
    D,
}

impl From<AlgebraArg> for AlgebraKind {
    fn from(a: AlgebraArg) -> AlgebraKind {
        match a {
            AlgebraArg::A => AlgebraKind::A,
            AlgebraArg::D => AlgebraKind::D,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run named verification suites (all of them by default)
    Suite {
        names: Vec<String>,
        /// Random vectors per sector for the reduction suite
        #[arg(long)]
        samples: Option<usize>,
        /// Longest word for the spanning suite
        #[arg(long)]
        max_word: Option<usize>,
    },
    /// List basis monomials of one sector
    Basis {
        #[arg(long, value_enum, default_value_t = SpaceArg::Neutral)]
        space: SpaceArg,
    },
    /// Graded dimensions of one sector
    Chars {
        #[arg(long, value_enum, default_value_t = SpaceArg::Neutral)]
        space: SpaceArg,
    },
    /// Reduce a neutral vector to its sector's highest weight vector
    Reduce {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        emit_trace: Option<PathBuf>,
    },
    /// Diagonal weight of a vector
    Weights {
        #[arg(long, value_enum)]
        rep: RepArg,
        #[arg(long)]
        vector: PathBuf,
        #[arg(long, value_enum)]
        algebra: Option<AlgebraArg>,
    },
    #[command(subcommand)]
    Verify(Verify),
    /// Compare a neutral sector with the charged space of the same charge
    Compare,
}

#[derive(Subcommand)]
enum Verify {
    /// Representation property on all generator pairs in the window
    Bracket {
        #[arg(long, value_enum)]
        rep: RepArg,
        #[arg(long, value_enum)]
        algebra: Option<AlgebraArg>,
    },
    /// Singular vector check on v_n (or the charged vacuum for ra) or a given vector
    Hwv {
        #[arg(long, value_enum)]
        rep: RepArg,
        #[arg(long)]
        vector: Option<PathBuf>,
        #[arg(long, value_enum)]
        algebra: Option<AlgebraArg>,
    },
}

enum CliError {
    Usage(String),
}

type CliResult = Result<Outcome, CliError>;

struct Outcome {
    body: String,
    pass: bool,
}

impl Outcome {
    fn json(v: &Value, pass: bool) -> Outcome {
        Outcome {
            body: serde_json::to_string_pretty(v).expect("serializable") + "\n",
            pass,
        }
    }
}

impl From<focklab::FockError> for CliError {
    fn from(e: focklab::FockError) -> CliError {
        CliError::Usage(e.to_string())
    }
}

fn read_vector(path: &Path) -> Result<FockVector, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(vector_from_json(&value)?)
}

fn csv_body(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> CliResult {
    let g = cli.global.clone();
    let sector = g.sector.unwrap_or(0);
    match cli.command {
        Command::Suite { names, samples, max_word } => {
            let cfg = SuiteConfig {
                window: g.window,
                cutoff: g.cutoff,
                sector: g.sector,
                seed: g.seed,
                samples,
                max_word,
            };
            let agg = run_suite(&names, &cfg).map_err(|e| CliError::Usage(e.to_string()))?;
            match g.format {
                Format::Json => Ok(Outcome::json(&agg.to_json(), agg.passed())),
                Format::Csv => {
                    let rows = agg
                        .suites
                        .iter()
                        .map(|s| {
                            vec![
                                s.suite.clone(),
                                s.passed().to_string(),
                                s.checks.to_string(),
                                s.failures.len().to_string(),
                                s.duration_ms.to_string(),
                            ]
                        })
                        .collect();
                    Ok(Outcome {
                        body: csv_body(&["suite", "pass", "checks", "failures", "duration_ms"], rows),
                        pass: agg.passed(),
                    })
                }
            }
        }
        Command::Basis { space } => {
            let cutoff = g.cutoff.unwrap_or(12);
            match space {
                SpaceArg::Neutral => {
                    let basis = enumerate_basis(sector, cutoff);
                    let rows: Vec<(Vec<i64>, i64, usize)> = basis
                        .iter()
                        .map(|m| {
                            let gr = gradings(m).expect("neutral");
                            (m.neutral_labels(), gr.energy2, gr.length)
                        })
                        .collect();
                    let body = match g.format {
                        Format::Json => {
                            let items: Vec<Value> = rows
                                .iter()
                                .map(|(l, e, n)| json!({"labels": l, "energy2": e, "length": n}))
                                .collect();
                            return Ok(Outcome::json(
                                &json!({"space": "neutral", "sector": sector, "cutoff": cutoff, "monomials": items}),
                                true,
                            ));
                        }
                        Format::Csv => csv_body(
                            &["labels", "energy2", "length"],
                            rows.iter()
                                .map(|(l, e, n)| vec![join(l), e.to_string(), n.to_string()])
                                .collect(),
                        ),
                    };
                    Ok(Outcome { body, pass: true })
                }
                SpaceArg::Charged => {
                    let basis = enumerate_charged_basis(sector, cutoff);
                    match g.format {
                        Format::Json => {
                            let items: Vec<Value> = basis
                                .iter()
                                .map(|m| json!({"plus": m.plus, "minus": m.minus, "level": m.level()}))
                                .collect();
                            Ok(Outcome::json(
                                &json!({"space": "charged", "charge": sector, "cutoff": cutoff, "monomials": items}),
                                true,
                            ))
                        }
                        Format::Csv => Ok(Outcome {
                            body: csv_body(
                                &["plus", "minus", "level"],
                                basis
                                    .iter()
                                    .map(|m| vec![join(&m.plus), join(&m.minus), m.level().to_string()])
                                    .collect(),
                            ),
                            pass: true,
                        }),
                    }
                }
            }
        }
        Command::Chars { space } => {
            let cutoff = g.cutoff.unwrap_or(12);
            let (name, sp) = match space {
                SpaceArg::Neutral => ("neutral", Space::Neutral(sector)),
                SpaceArg::Charged => ("charged", Space::Charged(sector)),
            };
            let table = character_table(sp, cutoff);
            match g.format {
                Format::Json => Ok(Outcome::json(
                    &json!({
                        "space": name,
                        "sector": sector,
                        "cutoff": cutoff,
                        "table": table.iter().map(|(l, d)| json!([l, d])).collect::<Vec<_>>(),
                    }),
                    true,
                )),
                Format::Csv => Ok(Outcome {
                    body: csv_body(
                        &["level", "dimension"],
                        table.iter().map(|(l, d)| vec![l.to_string(), d.to_string()]).collect(),
                    ),
                    pass: true,
                }),
            }
        }
        Command::Reduce { input, emit_trace } => {
            let v = read_vector(&input)?;
            let trace = reduce_to_highest_weight(&v)?;
            let verified = verify_trace(&trace, &v)?;
            let trace_json = trace_to_json(&trace);
            if let Some(path) = emit_trace {
                let text = serde_json::to_string_pretty(&trace_json).expect("serializable") + "\n";
                std::fs::write(&path, text)
                    .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(Outcome::json(
                &json!({
                    "sector": trace.sector,
                    "steps": trace.steps.len(),
                    "final_scalar": rational_to_string(&trace.final_scalar),
                    "verified": verified,
                    "trace": trace_json,
                }),
                verified,
            ))
        }
        Command::Weights { rep, vector, algebra } => {
            let rep = RepName::from(rep);
            let kind = algebra.map(AlgebraKind::from).unwrap_or(rep.default_algebra());
            let v = read_vector(&vector)?;
            let window = g.window.unwrap_or(6);
            let w = weight_of_vector(rep, kind, &v, window)?;
            Ok(Outcome::json(
                &json!({"rep": rep.name(), "window": window, "weight": weight_to_json(&w)}),
                true,
            ))
        }
        Command::Verify(Verify::Bracket { rep, algebra }) => {
            let rep = RepName::from(rep);
            let kind = algebra.map(AlgebraKind::from).unwrap_or(rep.default_algebra());
            let window = g.window.unwrap_or(4);
            let r = verify_bracket_identity_on(rep, kind, window)?;
            let mut body = report_to_json(&r, FAILURE_DETAILS);
            body["rep"] = json!(rep.name());
            body["window"] = json!(window);
            Ok(Outcome::json(&body, r.passed()))
        }
        Command::Verify(Verify::Hwv { rep, vector, algebra }) => {
            let rep = RepName::from(rep);
            let kind = algebra.map(AlgebraKind::from).unwrap_or(rep.default_algebra());
            let window = g.window.unwrap_or(6);
            let v = match vector {
                Some(path) => read_vector(&path)?,
                None if rep == RepName::RA => charged_vacuum(sector),
                None => highest_weight_vector(sector),
            };
            let r = verify_singular_vector(rep, kind, &v, window)?;
            let mut body = report_to_json(&r, FAILURE_DETAILS);
            body["rep"] = json!(rep.name());
            body["window"] = json!(window);
            body["vector"] = vector_to_json(&v);
            Ok(Outcome::json(&body, r.passed()))
        }
        Command::Compare => {
            let cutoff = g.cutoff.unwrap_or(12);
            let window = g.window.unwrap_or(6);
            let sectors: Vec<i64> = match g.sector {
                Some(n) => vec![n],
                None => (-3..=3).collect(),
            };
            let mut reports = Vec::new();
            let mut pass = true;
            for n in sectors {
                let r = compare_sectors(n, cutoff, window)?;
                pass &= r.passed();
                reports.push(r.to_json());
            }
            Ok(Outcome::json(&json!({"pass": pass, "sectors": reports}), pass))
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("FOCKLAB_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("FOCKLAB_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.global.out.clone();
    let result = configure_threads().and_then(|()| run(cli));
    match result {
        Ok(outcome) => {
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, &outcome.body) {
                        eprintln!("focklab: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", outcome.body),
            }
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("focklab: {msg}");
            ExitCode::from(2)
        }
    }
}
