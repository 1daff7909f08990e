//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
//! 3 orbit step budget exceeded, 4 search budget exceeded.

pub mod golden;
pub mod report;

use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::dynamics::{length_bound, length_cap, orbit, DEFAULT_MAX_STEPS};
use crate::error::Error;
use crate::search::{
    enumerate_cycles_with, enumerate_fixed_points_with, SearchConfig, DEFAULT_BUDGET,
};
use crate::word::{Base, Word};

use golden::GoldenTable;
use report::{
    BaseVerdict, BoundReport, CycleEntry, CyclesReport, FixedPointsReport, Format, GoldenDefect,
    OrbitReport, Report, StepReport, Verdict, VerifyReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ORBIT_LIMIT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "peadyn", version)]
#[command(about = "Base-k counting dynamics on words: steps, orbits, fixed points and cycles")]
pub struct Cli {
    #[command(flatten)]
    pub output: OutputArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format. Defaults to table on a terminal and json otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the result to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[arg(short = 'k', long, value_parser = parse_base)]
    pub base: Base,

    /// Starting word in 0-9a-z letters.
    #[arg(short = 'w', long)]
    pub word: String,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(short = 'k', long, value_parser = parse_base)]
    pub base: Base,

    /// Word length limit; defaults to the eventual length bound of the base.
    #[arg(long)]
    pub length_limit: Option<usize>,

    /// Extra letters on top of the length limit.
    #[arg(long, default_value_t = 0)]
    pub margin: usize,

    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    pub max_steps: usize,

    /// Cap on search work units.
    #[arg(long, env = "PEADYN_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            length_limit: self.length_limit,
            margin: self.margin,
            max_steps: self.max_steps,
            budget: self.budget,
            parallel: true,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the next n iterates of a word.
    Step {
        #[command(flatten)]
        word: WordArgs,

        #[arg(short = 'n', default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Follow a word to its fixed point or cycle.
    Orbit {
        #[command(flatten)]
        word: WordArgs,

        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
    },
    /// List every fixed point of a base.
    FixedPoints(SearchArgs),
    /// List every cycle of period two or more.
    Cycles(SearchArgs),
    /// Compare the fixed points of bases 2 to 6 with the reference table.
    VerifyTable {
        #[arg(long, default_value_t = 0)]
        margin: usize,

        /// Golden table file to use instead of the built-in one.
        #[arg(long, value_name = "FILE")]
        golden: Option<PathBuf>,

        /// Only check bases up to this one.
        #[arg(long)]
        max_base: Option<u32>,

        #[arg(long, env = "PEADYN_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Print the eventual length bound and the number of words under it.
    Bound {
        #[arg(short = 'k', long, value_parser = parse_base)]
        base: Base,
    },
}

fn parse_base(s: &str) -> Result<Base, String> {
    let k: u32 = s.parse().map_err(|_| format!("{s:?} is not an integer"))?;
    Base::new(k).map_err(|e| e.to_string())
}

/// A failed command: message plus exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OrbitLimitExceeded { .. } => EXIT_ORBIT_LIMIT,
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: e.to_string(),
        }
    }
}

fn parse_word(args: &WordArgs) -> Result<Word, Failure> {
    if args.word.is_empty() {
        return Err(Error::EmptyWord.into());
    }
    Ok(Word::parse(&args.word, args.base)?)
}

/// Runs one parsed command and returns its exit code. Results go to the
/// chosen output; diagnostics go to stderr.
pub fn run(cli: &Cli) -> i32 {
    let to_file = cli.output.output.is_some();
    let format = cli.output.format.unwrap_or_else(|| {
        if !to_file && io::stdout().is_terminal() {
            Format::Table
        } else {
            Format::Json
        }
    });
    let result = (|| -> Result<i32, Failure> {
        let mut out: Box<dyn Write> = match &cli.output.output {
            Some(path) => Box::new(io::BufWriter::new(File::create(path)?)),
            None => Box::new(io::stdout().lock()),
        };
        let code = execute(&cli.command, format, &mut *out)?;
        out.flush()?;
        Ok(code)
    })();
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

/// Dispatches `command`, writing its report to `out`.
pub fn execute(command: &Command, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Step { word, n } => {
            let mut x = parse_word(word)?;
            let mut iterates = Vec::with_capacity(*n as usize);
            for _ in 0..*n {
                x = x.step();
                iterates.push(x.clone());
            }
            StepReport::new(&iterates).emit(format, out)?;
            Ok(EXIT_OK)
        }
        Command::Orbit { word, max_steps } => {
            let x = parse_word(word)?;
            let o = orbit(&x, *max_steps)?;
            OrbitReport::from(&o).emit(format, out)?;
            Ok(EXIT_OK)
        }
        Command::FixedPoints(args) => {
            let config = args.config();
            let words = enumerate_fixed_points_with(args.base, &config)?;
            FixedPointsReport {
                base: args.base.get(),
                bound: length_cap(args.base),
                length_limit: config.effective_limit(args.base),
                fixed_points: words.iter().map(Word::to_string).collect(),
            }
            .emit(format, out)?;
            Ok(EXIT_OK)
        }
        Command::Cycles(args) => {
            let config = args.config();
            let cycles = enumerate_cycles_with(args.base, &config)?;
            CyclesReport {
                base: args.base.get(),
                length_limit: config.effective_limit(args.base),
                cycles: cycles.iter().map(CycleEntry::from).collect(),
            }
            .emit(format, out)?;
            Ok(EXIT_OK)
        }
        Command::VerifyTable {
            margin,
            golden,
            max_base,
            budget,
        } => {
            let table = match golden {
                None => {
                    let table = GoldenTable::embedded();
                    let defects = table.defects();
                    if let Some(d) = defects.first() {
                        return Err(Failure {
                            code: EXIT_MISMATCH,
                            message: format!(
                                "built-in golden table is corrupt: {} (base {}): {}",
                                d.word, d.base, d.reason
                            ),
                        });
                    }
                    table
                }
                Some(path) => {
                    let text = std::fs::read_to_string(path)?;
                    GoldenTable::parse(&text).map_err(|e| Failure {
                        code: EXIT_INVALID,
                        message: format!("{}: {e}", path.display()),
                    })?
                }
            };
            let report = verify_table(&table, *margin, *max_base, *budget)?;
            report.emit(format, out)?;
            Ok(if report.passed {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            })
        }
        Command::Bound { base } => {
            BoundReport::from(&length_bound(*base)).emit(format, out)?;
            Ok(EXIT_OK)
        }
    }
}

/// Compares the searched fixed points of every base in `table` (up to
/// `max_base`, if given) with its column, as sets of words.
pub fn verify_table(
    table: &GoldenTable,
    margin: usize,
    max_base: Option<u32>,
    budget: u64,
) -> Result<VerifyReport, Error> {
    let golden_defects: Vec<GoldenDefect> = table
        .defects()
        .into_iter()
        .filter(|d| max_base.map_or(true, |m| d.base <= m))
        .map(|d| GoldenDefect {
            base: d.base,
            word: d.word,
            reason: d.reason,
        })
        .collect();
    let mut results = Vec::new();
    for k in table.bases().filter(|&k| max_base.map_or(true, |m| k <= m)) {
        let expected: BTreeSet<&str> = table.column(k).iter().map(String::as_str).collect();
        let found: Vec<String> = match Base::new(k) {
            Ok(base) => {
                let config = SearchConfig {
                    margin,
                    budget,
                    ..SearchConfig::default()
                };
                enumerate_fixed_points_with(base, &config)?
                    .iter()
                    .map(Word::to_string)
                    .collect()
            }
            Err(_) => Vec::new(),
        };
        let found_set: BTreeSet<&str> = found.iter().map(String::as_str).collect();
        let only_in_golden: Vec<String> = expected
            .difference(&found_set)
            .map(|s| s.to_string())
            .collect();
        let only_in_search: Vec<String> = found_set
            .difference(&expected)
            .map(|s| s.to_string())
            .collect();
        let status = if only_in_golden.is_empty() && only_in_search.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        results.push(BaseVerdict {
            base: k,
            status,
            expected: table.column(k).len(),
            found: found.len(),
            only_in_golden,
            only_in_search,
        });
    }
    let passed = golden_defects.is_empty() && results.iter().all(|r| r.status == Verdict::Pass);
    Ok(VerifyReport {
        passed,
        margin,
        results,
        golden_defects,
    })
}
