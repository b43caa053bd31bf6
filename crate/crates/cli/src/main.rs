//! `degflag`: runs the verification suites and point counts from the shell.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad arguments,
//! 3 enumeration bound exceeded.

mod cache;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{CliError, CliResult, CountTarget, FormChoice};
use report::RunReport;

#[derive(Parser)]
#[command(
    name = "degflag",
    version,
    about = "Finite-field checks for degenerate flag varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Print the report as CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Neither read nor write the report cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Report cache directory.
    #[arg(long, global = true, env = "DEGFLAG_CACHE")]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print σ_n, or σ_d with -d.
    Sigma {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'd', value_delimiter = ',')]
        d: Option<Vec<usize>>,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(short = 'd', value_delimiter = ',')]
        d: Option<Vec<usize>>,
        #[arg(short = 'p', default_value_t = 2)]
        p: u64,
        /// Largest n for the genocchi suite.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Form on W for the symplectic suite.
        #[arg(long, value_enum, default_value_t = FormChoice::E)]
        form: FormChoice,
    },
    /// Count points or permutations.
    Count {
        target: CountTarget,
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'd', value_delimiter = ',')]
        d: Option<Vec<usize>>,
        #[arg(short = 'p', default_value_t = 2)]
        p: u64,
    },
    /// Print the β-order of Γ_n and the reduced word of σ_n.
    Quiver {
        #[arg(short = 'n')]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Iso,
    Symplectic,
    Desing,
    Lemma,
    Genocchi,
}

fn require_n(n: Option<usize>) -> CliResult<usize> {
    n.ok_or_else(|| CliError::Invalid("this suite needs -n".into()))
}

/// The computation behind a cached command.
fn cached_job(command: &Command) -> Option<Box<dyn Fn() -> CliResult<RunReport> + '_>> {
    match command {
        Command::Verify {
            suite,
            n,
            d,
            p,
            max_n,
            form,
        } => {
            let d = d.as_deref();
            let job: Box<dyn Fn() -> CliResult<RunReport>> = match suite {
                Suite::Iso => Box::new(move || commands::verify_iso(require_n(*n)?, d, *p)),
                Suite::Symplectic => {
                    Box::new(move || commands::verify_symplectic(require_n(*n)?, d, *p, *form))
                }
                Suite::Desing => Box::new(move || commands::verify_desing(require_n(*n)?, *p)),
                Suite::Lemma => Box::new(move || commands::verify_lemma(require_n(*n)?)),
                Suite::Genocchi => Box::new(move || commands::verify_genocchi(*max_n)),
            };
            Some(job)
        }
        Command::Count { target, n, d, p } => {
            let d = d.as_deref();
            Some(Box::new(move || commands::count(*target, *n, d, *p)))
        }
        _ => None,
    }
}

fn render(cli: &Cli, report: &RunReport, json_bytes: &str) -> String {
    if cli.json {
        json_bytes.to_string()
    } else if cli.csv {
        report.to_csv()
    } else {
        report.to_table()
    }
}

fn run(cli: &Cli) -> CliResult<bool> {
    if let Some(k) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k as usize)
            .build_global()
            .map_err(|e| CliError::Invalid(e.to_string()))?;
    }
    let Some(job) = cached_job(&cli.command) else {
        let report = match &cli.command {
            Command::Sigma { n, d } => commands::sigma(*n, d.as_deref())?,
            Command::Quiver { n } => commands::quiver(*n)?,
            _ => unreachable!("cached commands handled below"),
        };
        if let (Command::Sigma { .. }, false, false) = (&cli.command, cli.json, cli.csv) {
            let r = &report.results;
            println!("{}", r["one_line"].as_str().unwrap_or_default());
            println!("length {}", r["length"]);
            println!("minimal_rep {}", r["minimal_rep"]);
            println!("iota_fixed {}", r["iota_fixed"]);
        } else {
            print!("{}", render(cli, &report, &report.to_json()));
        }
        return Ok(report.passed);
    };
    let start = Instant::now();
    let cache = (!cli.no_cache)
        .then(|| cache::Cache::new(cli.cache_dir.clone().unwrap_or_else(cache::default_dir)));
    let probe = probe_key(&cli.command)?;
    if let (Some(cache), Some(key)) = (&cache, &probe) {
        if let Some(bytes) = cache.load(key) {
            if let Ok(report) = serde_json::from_str::<RunReport>(&bytes) {
                print!("{}", render(cli, &report, &bytes));
                return Ok(report.passed);
            }
        }
    }
    let mut report = job()?;
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    let bytes = report.to_json();
    if let (Some(cache), Some(key)) = (&cache, &probe) {
        if let Err(e) = cache.store(key, &bytes) {
            eprintln!(
                "warning: could not write cache in {}: {e}",
                cache.dir().display()
            );
        }
    }
    print!("{}", render(cli, &report, &bytes));
    Ok(report.passed)
}

/// The cache key of a cached command, computed from its normalised
/// parameters without running it.
fn probe_key(command: &Command) -> CliResult<Option<String>> {
    let version = env!("CARGO_PKG_VERSION");
    let (name, params) = match command {
        Command::Verify {
            suite,
            n,
            d,
            p,
            max_n,
            form,
        } => {
            let name = format!("verify {suite:?}").to_lowercase();
            let params = match suite {
                Suite::Genocchi => commands::params(&[("max_n", (*max_n).into())]),
                Suite::Lemma => commands::params(&[("n", require_n(*n)?.into())]),
                Suite::Desing => {
                    commands::params(&[("n", require_n(*n)?.into()), ("p", (*p).into())])
                }
                Suite::Iso | Suite::Symplectic => {
                    let n = require_n(*n)?;
                    let dv = commands::dimension_vector(n, d.as_deref())?;
                    let mut params = commands::params(&[
                        ("n", n.into()),
                        ("d", dv.dims().into()),
                        ("p", (*p).into()),
                    ]);
                    if *suite == Suite::Symplectic {
                        params.insert("form".into(), format!("{form:?}").to_lowercase().into());
                    }
                    params
                }
            };
            (name, params)
        }
        Command::Count { target, n, d, p } => {
            let dv = commands::dimension_vector(*n, d.as_deref())?;
            let params = match target {
                CountTarget::Quotient | CountTarget::Interval => {
                    commands::params(&[("n", (*n).into()), ("d", dv.dims().into())])
                }
                CountTarget::Rn | CountTarget::Bn => {
                    commands::params(&[("n", (*n).into()), ("p", (*p).into())])
                }
                _ => commands::params(&[
                    ("n", (*n).into()),
                    ("d", dv.dims().into()),
                    ("p", (*p).into()),
                ]),
            };
            (format!("count {target:?}").to_lowercase(), params)
        }
        _ => return Ok(None),
    };
    Ok(Some(cache::key(&name, &params, version)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Bound(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
