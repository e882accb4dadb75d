//! Command-line front end.
//!
//! Exit codes are the scripting contract:
//! - 0: success (and, for `verify`/`bench`, every check passed)
//! - 1: a verification counterexample or a route disagreement
//! - 2: usage error, malformed input or a cost-guard violation

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use cparts::bell::{bell_cvijovic, bell_definition, bell_recurrence, BellArgs};
use cparts::divisors::{sigma, theta};
use cparts::exact::{parse_rat_list, rat_render, ExactRat};
use cparts::identities::{lemma2_sequence, th1_sequence, verify_range, Identity, SweepBounds};
use cparts::output::{render_partition_list, render_report, render_table, OutputFormat, TableCell};
use cparts::partitions::{p_color_recurrence, p_color_series, partition_p, PartitionTable};
use cparts::{Error, Result};

/// Cost guards for the open-ended commands, so a typo cannot queue hours
/// of big-integer work. The verifier carries its own per-identity guards.
const VALUE_MAX_N: u64 = 10_000;
const TABLE_MAX_N: u64 = 2_000;
const TABLE_MAX_R: u64 = 1_000;
const BENCH_SERIES_MAX_N: u64 = 5_000;
const BENCH_LEMMA2_MAX_N: u64 = 150;

#[derive(Parser)]
#[command(
    name = "cparts",
    version,
    about = "Exact r-coloured partition numbers, divisor sums and partial Bell polynomials, \
             with a mechanical verifier for the identities relating them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sum of divisors sigma(n)
    Sigma {
        #[arg(long)]
        n: u64,
    },
    /// theta(n) = sigma(n)/n, rendered exactly
    Theta {
        #[arg(long)]
        n: u64,
    },
    /// r-coloured partition number p_-r(n)
    Pr {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
    },
    /// Partition numbers p(0..=max-n)
    Partitions {
        #[arg(long)]
        max_n: u64,
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
    },
    /// Partial Bell polynomial B_{n,k} at rational arguments
    Bell {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        /// Comma-separated x_1,x_2,... as integers or a/b rationals
        #[arg(long)]
        xs: String,
        /// One of: definition, recurrence, cvijovic
        #[arg(long, default_value = "recurrence")]
        algo: BellAlgo,
    },
    /// Sweep one identity and report counterexamples (exit 1 on any)
    Verify {
        /// One of: lemma1, th1, th1-printed, lemma2, lemma3, lemma4, th2, binom-sum
        identity: String,
        #[arg(long)]
        max_n: u64,
        /// Colour bound for th1, th1-printed and lemma2 (default 3)
        #[arg(long)]
        max_r: Option<u64>,
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
    },
    /// The p_-r(n) grid for 1 <= n <= max-n, 1 <= r <= max-r
    Table {
        #[arg(long)]
        max_n: u64,
        #[arg(long)]
        max_r: u64,
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
    },
    /// Wall-time the evaluation routes against each other; outputs are
    /// cross-checked for equality before any timing is reported
    Bench {
        #[arg(long)]
        max_n: u64,
        /// Colour count the routes compute p_-r(n) for
        #[arg(long, default_value_t = 2)]
        r: u64,
        /// Comma-separated subset of: series, recurrence, lemma2, th1
        #[arg(long, default_value = "series,recurrence")]
        routes: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum BellAlgo {
    Definition,
    Recurrence,
    Cvijovic,
}

impl std::str::FromStr for BellAlgo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "definition" => Ok(Self::Definition),
            "recurrence" => Ok(Self::Recurrence),
            "cvijovic" => Ok(Self::Cvijovic),
            _ => Err(Error::Parse {
                what: "algorithm (definition|recurrence|cvijovic)",
                input: s.to_string(),
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum BenchRoute {
    Series,
    Recurrence,
    Lemma2,
    Th1,
}

impl BenchRoute {
    fn name(self) -> &'static str {
        match self {
            Self::Series => "series",
            Self::Recurrence => "recurrence",
            Self::Lemma2 => "lemma2",
            Self::Th1 => "th1",
        }
    }

    fn max_n_guard(self) -> u64 {
        match self {
            Self::Series | Self::Recurrence => BENCH_SERIES_MAX_N,
            Self::Lemma2 => BENCH_LEMMA2_MAX_N,
            Self::Th1 => cparts::bell::CVIJOVIC_MAX_N,
        }
    }

    fn evaluate(self, r: u64, max_n: u64) -> Result<Vec<ExactRat>> {
        let ints_to_rats =
            |v: Vec<cparts::ExactInt>| v.into_iter().map(ExactRat::from_integer).collect();
        match self {
            Self::Series => Ok(ints_to_rats(p_color_series(r, max_n))),
            Self::Recurrence => Ok(ints_to_rats(p_color_recurrence(r, max_n))),
            Self::Lemma2 => lemma2_sequence(r, max_n),
            Self::Th1 => th1_sequence(r, max_n),
        }
    }
}

impl std::str::FromStr for BenchRoute {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "series" => Ok(Self::Series),
            "recurrence" => Ok(Self::Recurrence),
            "lemma2" => Ok(Self::Lemma2),
            "th1" => Ok(Self::Th1),
            _ => Err(Error::Parse {
                what: "route (series|recurrence|lemma2|th1)",
                input: s.to_string(),
            }),
        }
    }
}

fn require_positive(value: u64, flag: &str) -> Result<()> {
    if value == 0 {
        return Err(Error::OutOfRange(format!("{flag} must be >= 1")));
    }
    Ok(())
}

fn require_within(value: u64, guard: u64, flag: &str) -> Result<()> {
    if value > guard {
        return Err(Error::GuardExceeded {
            what: "cli",
            detail: format!("{flag} = {value} exceeds {guard}"),
        });
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Sigma { n } => {
            println!("{}", sigma(n)?);
        }
        Command::Theta { n } => {
            println!("{}", rat_render(&theta(n)?));
        }
        Command::Pr { n, r } => {
            require_positive(r, "--r")?;
            require_within(n, VALUE_MAX_N, "--n")?;
            let values = p_color_recurrence(r, n);
            println!("{}", values[n as usize]);
        }
        Command::Partitions { max_n, format } => {
            require_within(max_n, VALUE_MAX_N, "--max-n")?;
            print!("{}", render_partition_list(&partition_p(max_n), format));
        }
        Command::Bell { n, k, xs, algo } => {
            let args = BellArgs::new(parse_rat_list(&xs)?);
            let value = match algo {
                BellAlgo::Definition => bell_definition(n, k, &args)?,
                BellAlgo::Recurrence => bell_recurrence(n, k, &args)?,
                BellAlgo::Cvijovic => bell_cvijovic(n, k, &args)?,
            };
            println!("{}", rat_render(&value));
        }
        Command::Verify {
            identity,
            max_n,
            max_r,
            format,
        } => {
            let identity = Identity::parse(&identity)?;
            let report = verify_range(identity, SweepBounds { max_n, max_r })?;
            print!("{}", render_report(&report, format));
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Table {
            max_n,
            max_r,
            format,
        } => {
            require_positive(max_n, "--max-n")?;
            require_positive(max_r, "--max-r")?;
            require_within(max_n, TABLE_MAX_N, "--max-n")?;
            require_within(max_r, TABLE_MAX_R, "--max-r")?;
            let table = PartitionTable::build_rect(max_r, max_n);
            let mut cells = Vec::with_capacity((max_n * max_r) as usize);
            for n in 1..=max_n {
                for r in 1..=max_r {
                    cells.push(TableCell {
                        n,
                        r,
                        value: table.entry(r, n).unwrap().to_string(),
                    });
                }
            }
            print!("{}", render_table(&cells, format));
        }
        Command::Bench { max_n, r, routes } => {
            require_positive(r, "--r")?;
            let mut selected: Vec<BenchRoute> = Vec::new();
            for name in routes.split(',') {
                let route: BenchRoute = name.parse()?;
                if !selected.contains(&route) {
                    selected.push(route);
                }
            }
            for route in &selected {
                require_within(
                    max_n,
                    route.max_n_guard(),
                    &format!("--max-n for route {}", route.name()),
                )?;
            }
            let mut results: Vec<(BenchRoute, Vec<ExactRat>, u128)> = Vec::new();
            for route in selected {
                let started = Instant::now();
                let values = route.evaluate(r, max_n)?;
                results.push((route, values, started.elapsed().as_millis()));
            }
            // correctness precedes speed: all routes must agree exactly
            if let Some((reference, others)) = results.split_first() {
                for (route, values, _) in others {
                    if *values != reference.1 {
                        let n = (0..values.len())
                            .find(|&i| values[i] != reference.1[i])
                            .unwrap_or(0);
                        eprintln!(
                            "route disagreement at n = {n}: {} gives {}, {} gives {}",
                            reference.0.name(),
                            rat_render(&reference.1[n]),
                            route.name(),
                            rat_render(&values[n])
                        );
                        return Ok(ExitCode::from(1));
                    }
                }
            }
            for (route, _, elapsed_ms) in &results {
                println!(
                    "route={} max_n={max_n} r={r} elapsed_ms={elapsed_ms}",
                    route.name()
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
