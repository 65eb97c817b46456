//! Command-line front end: parse framed braid words, evaluate them in the
//! algebras, compute classical and p-adic Markov traces, and run the
//! relation and property suites.
//!
//! Exit codes: 0 success, 1 failed checks, 2 parse error, 3 parameter
//! error.

mod checks;
mod output;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use yokonuma::{Error, FramedBraidWord, TowerElement, YElement, YParams};

#[derive(Parser)]
#[command(
    name = "yokonuma",
    version,
    about = "Exact computation in Yokonuma-Hecke algebras and p-adic framed braid groups",
    after_help = "Word grammar: whitespace-separated tokens `f<i>^<e>`, `s<i>`, `s<i>^-1`;\n\
                  p-adic framing exponents as `f<i>^{p^R:d0,d1,...}`, e.g. `f1^{3^3:1,1,1}`.\n\
                  Pick one algebra with --d, or a tower of algebras with --p and --R."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Markov trace of a word (classical with --d, p-adic with --p/--R)
    Trace(TraceArgs),
    /// Normal form of a word in the algebra
    Eval(EvalArgs),
    /// Run the relation and property suites
    Check(CheckArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
}

#[derive(Args)]
struct AlgebraOpts {
    /// Framing modulus d of a single algebra Y_{d,n}(u)
    #[arg(long, conflicts_with_all = ["p", "precision"])]
    d: Option<u64>,

    /// Prime p of the tower Y_{p^r,n}(u), r = 1..=R
    #[arg(long, requires = "precision")]
    p: Option<u64>,

    /// Tower depth R
    #[arg(long = "R", visible_alias = "r", requires = "p")]
    precision: Option<u32>,

    /// Strand count n
    #[arg(long)]
    n: usize,

    /// Output format
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

enum Mode {
    Classical { d: u64 },
    Tower { p: u64, depth: u32 },
}

impl AlgebraOpts {
    fn mode(&self) -> Result<Mode, String> {
        match (self.d, self.p, self.precision) {
            (Some(d), None, None) => Ok(Mode::Classical { d }),
            (None, Some(p), Some(depth)) => Ok(Mode::Tower { p, depth }),
            _ => Err("pick exactly one of --d or --p with --R".into()),
        }
    }
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    algebra: AlgebraOpts,

    /// Batch mode: read one word per line from this file
    #[arg(long, conflicts_with = "word")]
    file: Option<std::path::PathBuf>,

    /// The word to trace; read from stdin when absent
    word: Option<String>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    algebra: AlgebraOpts,

    /// The word to evaluate; read from stdin when absent
    word: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    algebra: AlgebraOpts,

    /// Seed for the randomized property checks
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Also check the trace/connecting-map commuting square (tower mode)
    #[arg(long)]
    square: bool,

    /// Number of random samples per property check
    #[arg(long, default_value_t = 100)]
    samples: usize,
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PARAMS: u8 = 3;

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn core_error(err: Error) -> ExitCode {
    match err {
        Error::Parse { .. } => fail(EXIT_PARSE, err),
        _ => fail(EXIT_PARAMS, err),
    }
}

fn read_word_arg(word: Option<String>) -> Result<String, std::io::Error> {
    match word {
        Some(w) => Ok(w),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Trace(args) => run_trace(args),
        Command::Eval(args) => run_eval(args),
        Command::Check(args) => run_check(args),
    }
}

fn trace_one(word: &str, mode: &Mode, n: usize) -> Result<output::TraceOutput, Error> {
    let parsed = FramedBraidWord::parse(word, n)?;
    match mode {
        Mode::Classical { d } => {
            let params = YParams::new(*d, n)?;
            let element = YElement::eval_word(&parsed, params)?;
            Ok(output::TraceOutput::classical(
                *d,
                yokonuma::markov_trace(&element),
            ))
        }
        Mode::Tower { p, depth } => {
            let tower = TowerElement::from_word(&parsed, *p, *depth, n)?;
            Ok(output::TraceOutput::tower(
                *p,
                yokonuma::padic_trace(&tower),
            ))
        }
    }
}

fn run_trace(args: TraceArgs) -> ExitCode {
    let mode = match args.algebra.mode() {
        Ok(m) => m,
        Err(e) => return fail(EXIT_PARAMS, e),
    };
    let words: Vec<String> = if let Some(path) = &args.file {
        match std::fs::read_to_string(path) {
            Ok(text) => text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from)
                .collect(),
            Err(e) => return fail(EXIT_PARAMS, format!("cannot read {}: {e}", path.display())),
        }
    } else {
        match read_word_arg(args.word) {
            Ok(w) => vec![w],
            Err(e) => return fail(EXIT_PARAMS, e),
        }
    };

    let mut results = Vec::new();
    for word in &words {
        match trace_one(word, &mode, args.algebra.n) {
            Ok(out) => results.push((word.clone(), out)),
            Err(e) => return core_error(e),
        }
    }
    let batch = args.file.is_some();
    print!(
        "{}",
        output::render_traces(&results, args.algebra.format == Format::Json, batch)
    );
    ExitCode::SUCCESS
}

fn run_eval(args: EvalArgs) -> ExitCode {
    let mode = match args.algebra.mode() {
        Ok(m) => m,
        Err(e) => return fail(EXIT_PARAMS, e),
    };
    let word = match read_word_arg(args.word) {
        Ok(w) => w,
        Err(e) => return fail(EXIT_PARAMS, e),
    };
    let n = args.algebra.n;
    let rendered = (|| -> Result<output::EvalOutput, Error> {
        let parsed = FramedBraidWord::parse(&word, n)?;
        match &mode {
            Mode::Classical { d } => {
                let params = YParams::new(*d, n)?;
                Ok(output::EvalOutput::classical(
                    *d,
                    YElement::eval_word(&parsed, params)?,
                ))
            }
            Mode::Tower { p, depth } => Ok(output::EvalOutput::tower(
                *p,
                TowerElement::from_word(&parsed, *p, *depth, n)?,
            )),
        }
    })();
    match rendered {
        Ok(out) => {
            print!("{}", out.render(args.algebra.format == Format::Json));
            ExitCode::SUCCESS
        }
        Err(e) => core_error(e),
    }
}

fn run_check(args: CheckArgs) -> ExitCode {
    let mode = match args.algebra.mode() {
        Ok(m) => m,
        Err(e) => return fail(EXIT_PARAMS, e),
    };
    if args.square && matches!(mode, Mode::Classical { .. }) {
        return fail(EXIT_PARAMS, "--square needs the tower mode (--p/--R)");
    }
    let report = match &mode {
        Mode::Classical { d } => {
            checks::classical_checks(*d, args.algebra.n, args.seed, args.samples)
        }
        Mode::Tower { p, depth } => checks::tower_checks(
            *p,
            *depth,
            args.algebra.n,
            args.seed,
            args.samples,
            args.square,
        ),
    };
    let report = match report {
        Ok(r) => r,
        Err(e) => return core_error(e),
    };
    let all_pass = report.iter().all(|c| c.passed);
    print!(
        "{}",
        output::render_checks(&report, args.algebra.format == Format::Json)
    );
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}
