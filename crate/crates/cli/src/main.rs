use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};
use powersum_core::oracle::{enumerate_solutions, DEFAULT_CAP};
use powersum_core::{
    format_equation, parse_equation, run_suite, solve, suite, trace, DiophantineEquation, Error,
    ParseError, SolveStatus, SolverConfig,
};

const EXIT_OK: u8 = 0;
const EXIT_NOT_FOUND: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "powersum",
    version,
    about = "Network search for positive solutions of x1^p1 + ... + xn^pn = N"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the solver on one equation.
    Solve {
        /// Equation, e.g. "x1^2 + x2^2 = 149".
        #[arg(long = "eq")]
        equation: String,
        /// RNG seed; a time-derived seed is used and printed when omitted.
        #[arg(long)]
        seed: Option<u64>,
        /// Iteration budget per attempt.
        #[arg(long = "max-iters")]
        max_iters: Option<u64>,
        /// Number of restarts after the first attempt.
        #[arg(long = "max-restarts")]
        max_restarts: Option<u32>,
        /// Initial weight range as LO:HI.
        #[arg(long = "init-range", value_parser = parse_range)]
        init_range: Option<(u64, u64)>,
        /// Write the per-iteration trace as CSV.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Print the full result as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate every solution inside the bound box.
    Oracle {
        #[arg(long = "eq")]
        equation: String,
        /// Largest number of candidate tuples to enumerate.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
    },
    /// Run a built-in benchmark suite over several seeds.
    Bench {
        /// table1, table2, eq12 or all.
        #[arg(long)]
        suite: String,
        /// Number of seeds; seeds 0..N are used.
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long)]
        json: bool,
    },
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected LO:HI, got `{s}`"))?;
    let lo: u64 = lo.trim().parse().map_err(|e| format!("bad LO: {e}"))?;
    let hi: u64 = hi.trim().parse().map_err(|e| format!("bad HI: {e}"))?;
    if lo == 0 || lo > hi {
        return Err(format!("range must satisfy 1 <= LO <= HI, got {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let code = match cli.command {
        Command::Solve {
            equation,
            seed,
            max_iters,
            max_restarts,
            init_range,
            trace,
            json,
        } => {
            let mut config = SolverConfig::default();
            if let Some(k) = max_iters {
                config.max_iters_per_attempt = k;
            }
            if let Some(r) = max_restarts {
                config.max_restarts = r;
            }
            if let Some((lo, hi)) = init_range {
                config.init_lo = lo;
                config.init_hi = hi;
            }
            config.record_trace = trace.is_some() || json;
            run_solve(&equation, seed, config, trace, json)
        }
        Command::Oracle { equation, cap } => run_oracle(&equation, cap),
        Command::Bench { suite, seeds, json } => run_bench(&suite, seeds, json),
    };
    ExitCode::from(code)
}

fn parse_or_report(text: &str) -> Option<DiophantineEquation> {
    match parse_equation(text) {
        Ok(eq) => Some(eq),
        Err(e) => {
            report_parse_error(text, &e);
            None
        }
    }
}

fn report_parse_error(text: &str, e: &ParseError) {
    eprintln!("error: {e}");
    eprintln!("  {text}");
    eprintln!("  {}^", " ".repeat(e.position));
}

fn time_seed() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0)
}

fn run_solve(
    text: &str,
    seed: Option<u64>,
    mut config: SolverConfig,
    trace_path: Option<PathBuf>,
    json: bool,
) -> u8 {
    let Some(eq) = parse_or_report(text) else {
        return EXIT_USAGE;
    };
    config.seed = seed.unwrap_or_else(time_seed);
    let result = match solve(&eq, &config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };

    if let Some(path) = &trace_path {
        if let Err(e) = trace::export_csv(&result.trace, eq.arity(), path) {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    }

    let mut out = std::io::stdout().lock();
    if json {
        if seed.is_none() {
            eprintln!("seed: {}", config.seed);
        }
        let _ = writeln!(out, "{}", trace::to_json(&result));
    } else {
        let _ = writeln!(out, "equation: {}", format_equation(&eq));
        let _ = writeln!(out, "seed: {}", config.seed);
        match (&result.status, &result.solution) {
            (SolveStatus::Found, Some(w)) => {
                let _ = writeln!(out, "solution: {w}");
            }
            (SolveStatus::Overflow, _) => {
                let _ = writeln!(out, "status: overflow (values exceed the 128-bit range)");
            }
            _ => {
                let _ = writeln!(out, "status: no solution within budget");
            }
        }
        let _ = writeln!(out, "iterations: {}", result.total_iterations);
        let _ = writeln!(out, "restarts: {}", result.restarts_used);
    }

    if result.status == SolveStatus::Found {
        EXIT_OK
    } else {
        EXIT_NOT_FOUND
    }
}

fn run_oracle(text: &str, cap: u128) -> u8 {
    let Some(eq) = parse_or_report(text) else {
        return EXIT_USAGE;
    };
    match enumerate_solutions(&eq, Some(cap)) {
        Ok(set) => {
            let mut out = std::io::stdout().lock();
            let _ = writeln!(out, "equation: {}", format_equation(&eq));
            let _ = writeln!(out, "solutions: {}", set.len());
            for w in &set.solutions {
                let _ = writeln!(out, "{w}");
            }
            if set.is_empty() {
                EXIT_NOT_FOUND
            } else {
                EXIT_OK
            }
        }
        Err(e @ Error::BoxTooLarge { .. }) => {
            eprintln!("box too large: {e}");
            EXIT_NOT_FOUND
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn run_bench(name: &str, seeds: u64, json: bool) -> u8 {
    let cases = match suite(name) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let seeds: Vec<u64> = (0..seeds).collect();
    let report = match run_suite(&cases, &seeds, &SolverConfig::default()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut out = std::io::stdout().lock();
    if json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        let _ = write!(out, "{}", report.to_table());
    }
    EXIT_OK
}
