use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use skein_core::braid::{bbm_strand, BraidWord};
use skein_core::checks::{run_suite, Suite, SuiteReport};
use skein_core::hecke::{pi_normalize, to_sigma_prime};
use skein_core::scalars::modular::DEFAULT_PRIMES;
use skein_core::skein::{
    export_system, rank_estimate, SignSet, SkeinError, StrandSet, SystemParams,
};
use skein_core::trace::{markov_trace, x_invariant};

#[derive(Parser)]
#[command(
    name = "skein",
    version,
    about = "Mixed braids, Hecke algebra traces and band move equations"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for every randomized step.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Maximum entries per memo table (unbounded when omitted).
    #[arg(long, global = true)]
    cache_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisArg {
    Sigma,
    Prime,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrandsArg {
    All,
    First,
}

#[derive(Args)]
struct WordInput {
    /// Braid word, e.g. "t s1^-1 t^2 s2".
    word: Option<String>,
    /// Read the word from a file instead.
    #[arg(long, conflicts_with = "word")]
    input: Option<PathBuf>,
    /// Number of moving strands (default: smallest that fits the word).
    #[arg(short = 'n', long)]
    strands: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a braid word in the Hecke algebra basis.
    Normalize {
        #[command(flatten)]
        input: WordInput,
        #[arg(long, value_enum, default_value_t = BasisArg::Sigma)]
        basis: BasisArg,
    },
    /// Markov trace of a braid word.
    Trace {
        #[command(flatten)]
        input: WordInput,
    },
    /// Link invariant of the closure of a braid word.
    X {
        #[command(flatten)]
        input: WordInput,
    },
    /// Braid band move on a strand.
    Bbm {
        #[command(flatten)]
        input: WordInput,
        #[arg(long)]
        p: i64,
        #[arg(long, default_value_t = 1)]
        strand: usize,
        #[arg(long, value_parser = parse_sign, allow_hyphen_values = true)]
        sign: i8,
    },
    /// Generate the band move equation system over bounded monomials.
    Equations {
        #[arg(long)]
        p: i64,
        /// Inclusive level range `a..b`.
        #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
        levels: (i64, i64),
        #[arg(long)]
        max_index: usize,
        #[arg(long)]
        max_exp: u32,
        #[arg(long, value_enum, default_value_t = StrandsArg::All)]
        strands: StrandsArg,
        #[arg(long, value_parser = parse_signs, default_value = "+,-", allow_hyphen_values = true)]
        signs: SignSet,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also report a modular rank estimate using this many trials.
        #[arg(long, default_value_t = 0)]
        rank_trials: usize,
    },
    /// Run a self-check suite (or `all`).
    Check { suite: String },
}

fn parse_sign(s: &str) -> Result<i8, String> {
    match s {
        "+" | "+1" | "1" => Ok(1),
        "-" | "-1" => Ok(-1),
        _ => Err(format!("expected + or -, got '{s}'")),
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let p = |x: &str| x.trim().parse::<i64>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

fn parse_signs(s: &str) -> Result<SignSet, String> {
    SignSet::parse(s).ok_or_else(|| format!("expected +,- or a single sign, got '{s}'"))
}

enum Failure {
    Verification,
    Usage(String),
    Io(String),
}

fn read_word(input: &WordInput) -> Result<BraidWord, Failure> {
    let text = match (&input.word, &input.input) {
        (Some(w), _) => w.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
        (None, None) => return Err(Failure::Usage("a braid word or --input is required".into())),
    };
    BraidWord::parse(text.trim(), input.strands).map_err(|e| Failure::Usage(e.to_string()))
}

fn skein_failure(e: SkeinError) -> Failure {
    match e {
        SkeinError::Io { .. } => Failure::Io(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    }
}

fn emit(format: Format, text: String, value: serde_json::Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("serializable")
        ),
    }
}

fn report_json(r: &SuiteReport) -> serde_json::Value {
    json!({
        "suite": r.suite.name(),
        "passed": r.passed(),
        "cases": r.cases.iter().map(|c| json!({
            "name": c.name, "passed": c.passed, "detail": c.detail,
        })).collect::<Vec<_>>(),
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    skein_core::set_cache_capacity(cli.cache_cap);
    let fmt = cli.format;
    match cli.command {
        Command::Normalize { input, basis } => {
            let w = read_word(&input)?;
            let mut x = pi_normalize(&w);
            if basis == BasisArg::Prime {
                x = to_sigma_prime(&x);
            }
            let basis_name = if basis == BasisArg::Prime {
                "prime"
            } else {
                "sigma"
            };
            let terms: Vec<_> = x
                .terms()
                .map(|(b, c)| json!({ "word": b.render(x.basis()), "coeff": c.to_string() }))
                .collect();
            emit(
                fmt,
                x.render(),
                json!({ "strands": x.strands(), "basis": basis_name, "element": x.render(), "terms": terms }),
            );
        }
        Command::Trace { input } => {
            let w = read_word(&input)?;
            let v = markov_trace(&pi_normalize(&w));
            emit(
                fmt,
                v.to_string(),
                json!({ "strands": w.strands(), "trace": v.to_string() }),
            );
        }
        Command::X { input } => {
            let w = read_word(&input)?;
            let v = x_invariant(&w);
            emit(
                fmt,
                v.to_string(),
                json!({ "strands": v.strands, "exponent_sum": v.exponent_sum, "value": v.to_string() }),
            );
        }
        Command::Bbm {
            input,
            p,
            strand,
            sign,
        } => {
            let w = read_word(&input)?;
            let m = bbm_strand(&w, strand, p, sign).map_err(|e| Failure::Usage(e.to_string()))?;
            emit(
                fmt,
                m.render(),
                json!({ "word": m.render(), "strands": m.strands() }),
            );
        }
        Command::Equations {
            p,
            levels,
            max_index,
            max_exp,
            strands,
            signs,
            out,
            rank_trials,
        } => {
            let params = SystemParams {
                p,
                levels,
                max_index,
                max_exp,
                strands: match strands {
                    StrandsArg::All => StrandSet::All,
                    StrandsArg::First => StrandSet::First,
                },
                signs,
            };
            let system = export_system(&params).map_err(skein_failure)?;
            match &out {
                Some(path) => {
                    system.write(path).map_err(skein_failure)?;
                    eprintln!(
                        "wrote {} equations to {}",
                        system.equations.len(),
                        path.display()
                    );
                }
                None => print!("{}", system.to_json()),
            }
            if rank_trials > 0 {
                let r = rank_estimate(&system, rank_trials, DEFAULT_PRIMES[0], cli.seed)
                    .map_err(skein_failure)?;
                eprintln!("rank estimate: {r}");
            }
        }
        Command::Check { suite } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![Suite::parse(&suite).ok_or_else(|| {
                    let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                    Failure::Usage(format!(
                        "unknown suite '{suite}' (one of {}, all)",
                        names.join(", ")
                    ))
                })?]
            };
            let reports: Vec<SuiteReport> =
                suites.into_iter().map(|s| run_suite(s, cli.seed)).collect();
            match fmt {
                Format::Text => reports.iter().for_each(|r| print!("{r}")),
                Format::Json => {
                    let v: Vec<_> = reports.iter().map(report_json).collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&v).expect("serializable")
                    );
                }
            }
            if !reports.iter().all(SuiteReport::passed) {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
