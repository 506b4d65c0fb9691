//! `semistar`: matrix stars, ε-removal and equivalence checks from the shell.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 star undefined or not
//! stationary, 3 inequivalence found.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use semistar::bench::{bench_star, write_csv};
use semistar::matrix::{BlockStarOptions, Side};
use semistar::{
    check_equivalence, star_with, with_semiring, Automaton, AutomatonFile, ClosureStrategy, EpsilonAutomaton,
    MatrixFile, OpCounter, OracleMode, Semiring, SemiringKind, Variant, Word,
};

#[derive(Parser)]
#[command(
    name = "semistar",
    version,
    about = "Stars of matrices over semirings and ε-removal for weighted automata"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Star of a square matrix; counters go to stderr.
    Star {
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Remove ε̃-transitions from an automaton.
    Eliminate {
        automaton: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = VariantArg::Left)]
        variant: VariantArg,
    },
    /// Weight of a word; "@" stands for ε̃, "" for the empty word.
    Weight { automaton: PathBuf, word: String },
    /// Compare an ε-free automaton with Φ of an ε-automaton on all words up
    /// to a length.
    Check {
        eps_free: PathBuf,
        eps: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Consecutive ε̃ allowed by the oracle is below this bound.
        #[arg(long, default_value_t = 4)]
        eps_bound: usize,
    },
    /// Counter measurements of the block star as CSV.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        semiring: SemiringKind,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// CSV file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Block,
    Iterative,
    Nilpotent,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Self {
        match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }
    }
}

impl From<MethodArg> for ClosureStrategy {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => ClosureStrategy::Auto,
            MethodArg::Block => ClosureStrategy::Block,
            MethodArg::Iterative => ClosureStrategy::Iterative,
            MethodArg::Nilpotent => ClosureStrategy::Nilpotent,
        }
    }
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Left => Variant::LeftClosure,
            VariantArg::Right => Variant::RightClosure,
        }
    }
}

enum Failure {
    Input(String),
    Star(String),
}

impl From<semistar::Error> for Failure {
    fn from(e: semistar::Error) -> Self {
        if e.is_star() {
            Failure::Star(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Star {
            matrix,
            side,
            method,
            out,
        } => cmd_star(matrix, side.into(), method.into(), out),
        Command::Eliminate {
            automaton,
            out,
            variant,
        } => cmd_eliminate(automaton, out, variant.into()),
        Command::Weight { automaton, word } => cmd_weight(automaton, &word),
        Command::Check {
            eps_free,
            eps,
            max_len,
            eps_bound,
        } => cmd_check(eps_free, eps, max_len, eps_bound),
        Command::Bench {
            sizes,
            semiring,
            trials,
            out,
            seed,
        } => cmd_bench(&sizes, semiring, trials, out, seed),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Star(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn cmd_star(path: PathBuf, side: Side, strategy: ClosureStrategy, out: Option<PathBuf>) -> Outcome {
    let file = MatrixFile::read(path)?;
    let mut ctr = OpCounter::new();
    let text = with_semiring!(file.kind()?, S => {
        let m = file.decode::<S>()?;
        MatrixFile::encode(&star_with(&m, strategy, side, &mut ctr)?).to_json()
    });
    emit(&text, out)?;
    eprintln!(
        "adds={} muls={} stars={} temp_cells={} products={}",
        ctr.adds, ctr.muls, ctr.stars, ctr.temp_cells, ctr.products
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_eliminate(path: PathBuf, out: Option<PathBuf>, variant: Variant) -> Outcome {
    let file = AutomatonFile::read(path)?;
    let text = with_semiring!(file.kind()?, S => {
        let ae = file.decode_epsilon::<S>()?;
        let a = ae.eliminate(variant, &mut OpCounter::new())?;
        AutomatonFile::encode_linear(&a).to_json()
    });
    emit(&text, out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_weight(path: PathBuf, word: &str) -> Outcome {
    let file = AutomatonFile::read(path)?;
    let value = with_semiring!(file.kind()?, S => {
        match file.decode::<S>()? {
            Automaton::Plain(a) => a.weight(&Word::parse(word, a.alphabet())?)?.encode(),
            Automaton::Epsilon(ae) => ae.weight(&Word::parse(word, ae.alphabet())?)?.encode(),
        }
    });
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(eps_free: PathBuf, eps: PathBuf, max_len: usize, bound: usize) -> Outcome {
    let plain = AutomatonFile::read(eps_free)?;
    let with_eps = AutomatonFile::read(eps)?;
    if plain.has_epsilon() {
        return Err(Failure::Input("the first automaton must be ε-free".into()));
    }
    let kind = plain.kind()?;
    if with_eps.kind()? != kind {
        return Err(Failure::Input(format!(
            "semirings differ ({} and {})",
            kind,
            with_eps.kind()?
        )));
    }
    with_semiring!(kind, S => {
        let a = plain.decode_base::<S>()?;
        let ae: EpsilonAutomaton<S> = match with_eps.decode::<S>()? {
            Automaton::Plain(b) => b.into(),
            Automaton::Epsilon(ae) => ae,
        };
        let report = check_equivalence(&a, &ae, max_len, bound)?;
        let stdout = io::stdout();
        let mut w = stdout.lock();
        writeln!(w, "{:<12} {:>16} {:>16} {:>16}  status", "word", "weight", "oracle", "gap")?;
        for row in &report.rows {
            let gap = row.gap.as_ref().map(|g| g.encode()).unwrap_or_else(|| "-".into());
            let status = if row.agrees() { "ok" } else { "DIFF" };
            writeln!(w, "{:<12} {:>16} {:>16} {:>16}  {}", row.word.to_string(), row.weight.encode(), row.oracle.encode(), gap, status)?;
        }
        match report.mode {
            OracleMode::Exact => {
                writeln!(w, "mode: exact (ε̃-runs below {bound} cover every path)")?;
                if let Some(bad) = report.first_mismatch() {
                    writeln!(w, "inequivalent: first differing word {}", bad.word)?;
                    return Ok(ExitCode::from(3));
                }
                writeln!(w, "equivalent on all {} words up to length {max_len}", report.rows.len())?;
            }
            OracleMode::PartialSum => {
                writeln!(
                    w,
                    "note: partial-sum mode; ε̃-powers have not settled by bound {bound}, so oracle values are truncated sums and no verdict is given"
                )?;
            }
        }
        Ok(ExitCode::SUCCESS)
    })
}

fn cmd_bench(sizes: &[usize], kind: SemiringKind, trials: usize, out: Option<PathBuf>, seed: u64) -> Outcome {
    let records = with_semiring!(kind, S => bench_star::<S>(sizes, trials, seed, BlockStarOptions::default())?);
    match out {
        Some(path) => write_csv(&records, File::create(path)?)?,
        None => write_csv(&records, io::stdout().lock())?,
    }
    Ok(ExitCode::SUCCESS)
}
