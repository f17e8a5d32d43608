//! `kappa`: generate sequences, run the identity suite, check the Dirichlet
//! series numerically, compare against OEIS b-files, and time the sieves.
//!
//! Exit codes: 0 success, 1 mathematical mismatch, 2 usage or I/O error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use kappa_core::bfile::{self, BFile};
use kappa_core::format::{self, Format};
use kappa_core::oracles::NaiveKappa;
use kappa_core::{check_all, gen_builtin, verify_kappa_series, BuiltinFn, Error};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Largest b-file index oeis-compare will tabulate up to.
const MAX_COMPARE_INDEX: u64 = 10_000_000;

#[derive(Parser)]
#[command(name = "kappa", version, about = "Recursive divisor function toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print f(1..n) for a built-in function.
    ///
    /// In json output, values beyond the 53-bit safe integer range
    /// (|v| > 9007199254740991) are written as decimal strings.
    Gen {
        /// epsilon, mobius, one, id, phi, jordan, num_divisors, sigma, kappa, K
        #[arg(long = "fn", value_parser = parse_fn)]
        function: BuiltinFn,
        /// Exponent for id, jordan, sigma and kappa.
        #[arg(long, default_value_t = 0)]
        x: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value = "csv", value_parser = parse_format)]
        format: Format,
    },
    /// Check every registered identity exactly on 1..n.
    Check {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Comma-separated exponents.
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3")]
        x: Vec<u32>,
        /// Also write the reports as JSON to this path.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Compare a generated sequence with a local OEIS b-file.
    OeisCompare {
        #[arg(long = "fn", value_parser = parse_fn)]
        function: BuiltinFn,
        #[arg(long, default_value_t = 0)]
        x: u32,
        #[arg(long)]
        bfile: PathBuf,
    },
    /// Compare the truncated Dirichlet series of kappa_x with its closed form.
    Series {
        #[arg(long, default_value_t = 0)]
        x: u32,
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
        #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(4..))]
        n: u64,
        /// Relative tolerance on the final gap.
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
    },
    /// Time the sieve generators against the naive recursion; prints JSON.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Length of the prefix evaluated by the naive recursion.
        #[arg(long, default_value_t = 2000)]
        naive_prefix: u64,
    },
}

fn parse_fn(s: &str) -> Result<BuiltinFn, Error> {
    s.parse()
}

fn parse_format(s: &str) -> Result<Format, Error> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen {
            function,
            x,
            n,
            format,
        } => cmd_gen(function, x, n as usize, format),
        Command::Check { n, x, report } => cmd_check(n as usize, &x, report),
        Command::OeisCompare { function, x, bfile } => cmd_oeis_compare(function, x, bfile),
        Command::Series { x, s, n, tol } => cmd_series(x, s, n as usize, tol),
        Command::Bench { n, naive_prefix } => cmd_bench(n as usize, naive_prefix),
    };
    match result {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

type CmdResult = Result<ExitCode, (u8, String)>;

fn usage(e: impl std::fmt::Display) -> (u8, String) {
    (EXIT_USAGE, e.to_string())
}

fn cmd_gen(function: BuiltinFn, x: u32, n: usize, format: Format) -> CmdResult {
    let seq = gen_builtin(function, x, n).map_err(usage)?;
    let mut text = format::render(&seq, format);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(n: usize, exponents: &[u32], report: Option<PathBuf>) -> CmdResult {
    let reports = check_all(n, exponents).map_err(usage)?;
    println!("{:<6} {:>3} {:>3} {:>8}  result", "id", "x", "y", "n_max");
    let show = |v: Option<u32>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    for r in &reports {
        let verdict = match r.first_failure_n {
            None => "PASS".to_string(),
            Some(at) => format!(
                "FAIL at n = {at}: lhs {} rhs {}",
                r.lhs_value
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
                r.rhs_value
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default()
            ),
        };
        println!(
            "{:<6} {:>3} {:>3} {:>8}  {verdict}",
            r.identity,
            show(r.x),
            show(r.y),
            r.n_max
        );
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} checks, {failed} failed", reports.len());
    if let Some(path) = report {
        let body = serde_json::to_string_pretty(&reports).map_err(usage)?;
        std::fs::write(&path, body + "\n")
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}

fn cmd_oeis_compare(function: BuiltinFn, x: u32, path: PathBuf) -> CmdResult {
    let bfile = BFile::read(&path).map_err(usage)?;
    let Some(max_index) = bfile.max_index() else {
        println!("{}: no entries to compare", bfile.source_name);
        return Ok(ExitCode::SUCCESS);
    };
    if max_index > MAX_COMPARE_INDEX {
        return Err(usage(format!(
            "b-file index {max_index} exceeds the supported maximum {MAX_COMPARE_INDEX}"
        )));
    }
    let seq = gen_builtin(function, x, max_index.max(1) as usize).map_err(usage)?;
    let cmp = bfile::compare(&seq, &bfile);
    match cmp.first_mismatch {
        None => {
            println!(
                "{}: {} terms agree with {}",
                bfile.source_name,
                cmp.compared,
                seq.label()
            );
            Ok(ExitCode::SUCCESS)
        }
        Some(m) => {
            println!("{}: {} ({})", bfile.source_name, m, seq.label());
            Ok(ExitCode::from(EXIT_MISMATCH))
        }
    }
}

fn cmd_series(x: u32, s: f64, n: usize, tol: f64) -> CmdResult {
    let report = match verify_kappa_series(x, s, n, tol) {
        Ok(r) => r,
        Err(e @ (Error::SingularityDomain { .. } | Error::Divergent { .. })) => {
            return Err((EXIT_MISMATCH, e.to_string()))
        }
        Err(e) => return Err(usage(e)),
    };
    println!("x = {x}, s = {s}");
    for (n_i, (p, g)) in report
        .checkpoints
        .iter()
        .zip(report.partial_sums.iter().zip(&report.gaps))
    {
        println!("  partial sum to n = {n_i:>9}: {p:.12}  gap {g:.3e}");
    }
    println!(
        "  closed form zeta(s-x)/(2-zeta(s)): {:.12}",
        report.closed_form
    );
    println!(
        "  relative gap {:.3e} (tol {:.1e}), shrinking: {}",
        report.relative_gap, report.tol, report.shrinking
    );
    if report.passed {
        println!("verdict: PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("verdict: FAIL");
        Ok(ExitCode::from(EXIT_MISMATCH))
    }
}

fn cmd_bench(n: usize, naive_prefix: u64) -> CmdResult {
    let time_ms = |f: &dyn Fn()| {
        let t = Instant::now();
        f();
        t.elapsed().as_secs_f64() * 1e3
    };
    let sieve = |name, x| {
        time_ms(&|| {
            gen_builtin(name, x, n).expect("n >= 1");
        })
    };
    let kappa_0 = sieve(BuiltinFn::Kappa, 0);
    let kappa_1 = sieve(BuiltinFn::Kappa, 1);
    let k = sieve(BuiltinFn::K, 0);

    let prefix = naive_prefix.clamp(1, n as u64);
    let naive_ms = time_ms(&|| {
        let mut oracle = NaiveKappa::new(0);
        for m in 1..=prefix {
            oracle.get(m);
        }
    });
    // per-n trial division makes the naive prefix cost grow like n^1.5
    let extrapolated = naive_ms * (n as f64 / prefix as f64).powf(1.5);

    let out = json!({
        "n": n,
        "sieve_ms": { "kappa_0": kappa_0, "kappa_1": kappa_1, "K": k },
        "naive_kappa_0": {
            "prefix": prefix,
            "ms": naive_ms,
            "extrapolated_ms": extrapolated,
        },
        "sieve_faster": kappa_0 < extrapolated,
    });
    println!("{}", serde_json::to_string_pretty(&out).map_err(usage)?);
    Ok(ExitCode::SUCCESS)
}
