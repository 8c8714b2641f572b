use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use foam::formats::{self, Input};
use foam::runner::run_suite_parallel;
use foam::{acceptance, FoamError, Result};
use foam_core::annular::{build_complex, homology, BraidWord, HomologySpec};
use foam_core::exactalg::BigRational;
use foam_core::skein::Suite;
use foam_core::statespace::{state_space, Theory};
use foam_core::surfaces_sl2::CircleConfig;

/// Exact evaluation of anchored foams, state spaces and annular homology.
///
/// FOAM_THREADS caps the number of worker threads.
#[derive(Parser)]
#[command(name = "foam", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Evaluate a closed surface or foam file, or compute APS homology of a braid file.
    Eval { file: PathBuf },
    /// Rank, graded rank and Gram matrix of a circle configuration.
    Statespace {
        #[arg(long, value_enum)]
        theory: TheoryArg,
        #[arg(long, default_value_t = 0)]
        contractible: usize,
        #[arg(long, default_value_t = 0)]
        essential: usize,
    },
    /// Annular homology of a braid closure.
    Homology {
        #[arg(long)]
        strands: usize,
        /// Comma-separated letters, e.g. "1,1,-2"; empty for the identity.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        /// `aps`, or `q:A1,A2` for distinct rationals A1, A2.
        #[arg(long, default_value = "aps")]
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run one randomized skein-relation suite.
    Skein {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run all ten acceptance criteria.
    Selftest,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    Sl2,
    Sl3o,
    Sl3u,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

fn parse_spec(s: &str) -> Result<HomologySpec> {
    if s == "aps" {
        return Ok(HomologySpec::Aps);
    }
    let bad = || FoamError::InvariantViolation(format!("unknown homology spec `{s}`, expected aps or q:A1,A2"));
    let values = s.strip_prefix("q:").ok_or_else(bad)?;
    let (a1, a2) = values.split_once(',').ok_or_else(bad)?;
    let parse = |t: &str| t.trim().parse::<BigRational>().map_err(|_| bad());
    let (a1, a2) = (parse(a1)?, parse(a2)?);
    if a1 == a2 {
        return Err(FoamError::InvariantViolation("specialization values must be distinct".into()));
    }
    Ok(HomologySpec::Rational(a1, a2))
}

/// Writes to stdout; a closed pipe (as with `| head`) ends the program quietly.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

fn print_json(v: &serde_json::Value) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("JSON output")));
}

fn run(verb: Verb) -> Result<bool> {
    match verb {
        Verb::Eval { file } => {
            let input = formats::read_input(&file)?;
            let value = match &input {
                Input::Surface(s) => s.evaluate()?,
                Input::Foam(f) => f.evaluate()?,
                Input::Braid(b) => {
                    let cx = build_complex(b)?;
                    let t = homology(&cx, &HomologySpec::Aps)?;
                    print_json(&formats::homology_to_json(&cx, &t));
                    return Ok(true);
                }
            };
            emit(&format!("{}\n", value.pretty()));
            print_json(&formats::evaluation_to_json(&input, &value));
        }
        Verb::Statespace { theory, contractible, essential } => {
            let theory = match theory {
                TheoryArg::Sl2 => Theory::Sl2,
                TheoryArg::Sl3o => Theory::Sl3o,
                TheoryArg::Sl3u => Theory::Sl3u,
            };
            let r = state_space(&CircleConfig::standard(contractible, essential), theory)?;
            print_json(&formats::statespace_to_json(&r));
        }
        Verb::Homology { strands, word, spec, format } => {
            let b = BraidWord::parse(strands, &word)?;
            let spec = parse_spec(&spec)?;
            let cx = build_complex(&b)?;
            let t = homology(&cx, &spec)?;
            match format {
                Format::Json => print_json(&formats::homology_to_json(&cx, &t)),
                Format::Tsv => emit(&formats::homology_to_tsv(&t)),
            }
        }
        Verb::Skein { suite, count, seed } => {
            let s = Suite::from_name(&suite).ok_or_else(|| {
                let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                FoamError::InvariantViolation(format!("unknown suite `{suite}`; known: {}", known.join(", ")))
            })?;
            let report = run_suite_parallel(s, seed, count);
            print_json(&formats::skein_report_to_json(&report));
            if !report.passed() {
                return Err(FoamError::SuiteFailure { suite, failed: report.failures.len(), count });
            }
        }
        Verb::Selftest => {
            let results = acceptance::run_all(|r| emit(&format!("{r}\n")));
            let failed = results.iter().filter(|r| !r.passed).count();
            emit(&format!("{} of {} criteria passed\n", results.len() - failed, results.len()));
            return Ok(failed == 0);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
