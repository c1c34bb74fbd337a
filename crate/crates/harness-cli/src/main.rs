mod bench;
mod curve;
mod report;
mod suites;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};
use cost_analysis::{
    expected_cost, moment, rel_cost, rel_cost_buffered, sample_points, std_deviation,
    SeriesDepthPolicy,
};
use curve::CurveFile;
use rotation_core::{rotate_block_cycle, BlockCycleConfig, MoveLedger};
use std::path::PathBuf;
use std::process::ExitCode;

/// Rotation algorithms, their move-count laws, and the cost-model
/// numerics, behind one binary.
#[derive(Parser)]
#[command(name = "blockcycle", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the rotation verification suites (oracle equivalence, ledger
    /// exactness, worst-case bound, shift symmetry)
    Verify {
        /// Largest sequence length to sweep
        #[arg(long, default_value_t = 64)]
        max_n: usize,
        /// Early-exit buffer capacity; the exact ledger law is asserted
        /// only at 1, larger buffers check the monotone bound instead
        #[arg(long, default_value_t = 1)]
        buffer: usize,
        /// Cycle-phase batch capacity (never affects counts)
        #[arg(long, default_value_t = 1)]
        batch: usize,
    },
    /// Rotate a marker sequence and compare the instrumented ledger
    /// against the remainder-sum formula
    Count {
        n: u64,
        k: u64,
        /// Early-exit buffer capacity; strict formula match requires 1
        #[arg(long, default_value_t = 1)]
        buffer: usize,
    },
    /// Emit the per-element cost curve (the limit curve, or the buffered
    /// curve when --beta is given) as two-column plot data
    Curve {
        /// Buffer scale in (0, 1]; omitted means the limit curve
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long, default_value_t = 4096)]
        samples: usize,
        /// Output path for the two-column data file
        #[arg(long)]
        out: PathBuf,
    },
    /// Bracket the average-cost constant C and D = 1 + 4C from the two
    /// defining series
    Constant {
        /// Series cutoff
        #[arg(long, default_value_t = 100_000)]
        limit: u64,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Exact average move counts A(m)/m on a ladder of lengths
    Avgcost {
        n: u64,
        /// Ladder step; defaults to a single row at n
        #[arg(long)]
        step: Option<u64>,
    },
    /// Check the remainder-sum identities, the expansion/quadruple
    /// bijection, and Möbius consistency for every n up to max_n
    Heilbronn { max_n: u64 },
    /// Moments of the per-element cost distribution
    Moments {
        #[arg(default_value_t = 1)]
        order: u32,
        #[arg(long, default_value_t = 1 << 20)]
        samples: usize,
    },
    /// Time the rotation algorithms over a geometric size ladder and
    /// write CSV rows (bytes, ns_per_byte, algorithm)
    Bench {
        /// Element width in bytes: 1, 2, 4, 8 or 16
        #[arg(long, default_value_t = 8)]
        elem_bytes: usize,
        /// Largest array size in bytes
        #[arg(long, default_value_t = 1 << 24)]
        max_bytes: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Lower,
    Upper,
    Both,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify {
            max_n,
            buffer,
            batch,
        } => cmd_verify(max_n, buffer, batch),
        Command::Count { n, k, buffer } => cmd_count(n, k, buffer),
        Command::Curve { beta, samples, out } => cmd_curve(beta, samples, &out),
        Command::Constant { limit, method } => cmd_constant(limit, method),
        Command::Avgcost { n, step } => cmd_avgcost(n, step),
        Command::Heilbronn { max_n } => cmd_heilbronn(max_n),
        Command::Moments { order, samples } => cmd_moments(order, samples),
        Command::Bench {
            elem_bytes,
            max_bytes,
            out,
        } => {
            bench::run_bench(elem_bytes, max_bytes, &out)?;
            println!("wrote {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_verify(max_n: usize, buffer: usize, batch: usize) -> Result<ExitCode> {
    anyhow::ensure!(max_n >= 2, "max_n must be at least 2");
    let config = BlockCycleConfig::new(buffer, batch)?;
    let reports = [
        suites::oracle_equivalence(max_n, &config),
        suites::ledger_exactness(max_n, &config),
        suites::worst_case_bound(max_n, &config),
        suites::symmetry(max_n, &config),
    ];
    let mut ok = true;
    for report in &reports {
        report.print();
        ok &= report.succeeded();
    }
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_count(n: u64, k: u64, buffer: usize) -> Result<ExitCode> {
    anyhow::ensure!(k <= n, "shift {k} out of range for length {n}");
    let config = BlockCycleConfig::new(buffer, 1)?;
    let mut seq: Vec<u64> = (0..n).collect();
    let mut ledger = MoveLedger::new();
    rotate_block_cycle(&mut seq, k as usize, &config, &mut ledger)?;

    let formula = euclid_numbers::move_count(n, k);
    println!("n = {n}, k = {k}, buffer = {buffer}");
    println!("type A moves : {}", ledger.type_a_moves);
    println!("type B moves : {}", ledger.type_b_moves);
    println!("total moves  : {}", ledger.total_moves());
    println!("formula      : {formula}  (n - gcd + 2*rsum at unit buffer)");

    let ok = if buffer == 1 {
        ledger.total_moves() == formula
    } else {
        ledger.total_moves() <= formula
    };
    println!("match        : {}", if ok { "yes" } else { "MISMATCH" });
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_curve(beta: Option<f64>, samples: usize, out: &std::path::Path) -> Result<ExitCode> {
    anyhow::ensure!(samples >= 2, "need at least two samples");
    if let Some(b) = beta {
        anyhow::ensure!(b > 0.0 && b <= 1.0, "beta must lie in (0, 1]");
    }
    let policy = SeriesDepthPolicy::default();
    let mut rows = Vec::with_capacity(samples);
    for x in sample_points(samples) {
        let value = match beta {
            Some(b) => rel_cost_buffered(x, b)?,
            None => rel_cost(x, &policy),
        };
        rows.push((x, value));
    }
    let curve = CurveFile::new(rows)?;
    curve.write_to(out)?;
    println!(
        "wrote {} rows to {} (max value {:.6})",
        curve.rows().len(),
        out.display(),
        curve.max_value().unwrap_or(f64::NAN)
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_constant(limit: u64, method: Method) -> Result<ExitCode> {
    // a short geometric ladder shows the monotone approach
    let mut cutoffs: Vec<u64> = Vec::new();
    let mut x = (limit / 64).max(2);
    while x < limit {
        cutoffs.push(x);
        x *= 4;
    }
    cutoffs.push(limit);

    match method {
        Method::Lower => {
            println!("{:>9}  {:>14}", "cutoff", "C lower");
            for &x in &cutoffs {
                let est = euclid_numbers::constant_c(x)?;
                println!("{:>9}  {:>14.10}", x, est.lower);
            }
        }
        Method::Upper => {
            println!("{:>9}  {:>14}", "cutoff", "C upper");
            for &x in &cutoffs {
                let est = euclid_numbers::constant_c(x)?;
                println!("{:>9}  {:>14.10}", x, est.upper);
            }
        }
        Method::Both => {
            let est = euclid_numbers::constant_c(limit)?;
            let (d_lo, d_hi) = euclid_numbers::constant_d(limit)?;
            println!("cutoff        : {limit}");
            println!("C bracket     : [{:.10}, {:.10}]", est.lower, est.upper);
            println!("bracket width : {:.3e}", est.width());
            println!("D = 1 + 4C    : [{d_lo:.10}, {d_hi:.10}]");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_avgcost(n: u64, step: Option<u64>) -> Result<ExitCode> {
    anyhow::ensure!(n >= 1, "n must be positive");
    let step = step.unwrap_or(n).max(1);
    println!("{:>9}  {:>12}", "m", "A(m)/m");
    let mut m = step;
    while m <= n {
        let (_, avg) = euclid_numbers::avg_cost(m);
        println!("{:>9}  {:>12.6}", m, avg / m as f64);
        m += step;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_heilbronn(max_n: u64) -> Result<ExitCode> {
    anyhow::ensure!(max_n >= 2, "max_n must be at least 2");
    let mut failures = 0u64;
    for n in 2..=max_n {
        let (coprime_ok, full_ok) = euclid_numbers::heilbronn_identity_check(n);

        let mut from_words: Vec<_> = euclid_numbers::heilbronn_expansions(n)
            .iter()
            .map(|(s, w)| euclid_numbers::expansion_to_quadruple(*s, w))
            .collect();
        let mut direct = euclid_numbers::heilbronn_quadruples(n, true);
        from_words.sort_unstable();
        direct.sort_unstable();
        let bijection_ok = from_words == direct;

        let mobius_ok =
            euclid_numbers::big_g_star_via_mobius(n) == euclid_numbers::big_g_star(n) as i64;

        let ok = coprime_ok && full_ok && bijection_ok && mobius_ok;
        if !ok {
            failures += 1;
        }
        println!(
            "n = {n:>4}: {} (coprime {}, full {}, bijection {}, mobius {})",
            if ok { "pass" } else { "FAIL" },
            coprime_ok,
            full_ok,
            bijection_ok,
            mobius_ok
        );
    }
    if failures == 0 {
        println!("all {} cases pass", max_n - 1);
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{failures} cases FAILED");
        Ok(ExitCode::from(1))
    }
}

fn cmd_moments(order: u32, samples: usize) -> Result<ExitCode> {
    let policy = SeriesDepthPolicy::default();
    println!(
        "# method: shifted midpoint rule, {samples} samples on (0, 1/2), \
         series tolerance {:.0e}",
        policy.tolerance
    );
    let m = moment(order, samples, &policy)?;
    println!("E[f^{order}] = {m:.6}");
    let sd = std_deviation(samples, &policy)?;
    println!("std dev = {sd:.6}");
    if order == 1 {
        let e = expected_cost(0.5, samples)?;
        println!("expected cost at beta 0.5 = {e:.6} (analytic 1.25)");
    }
    Ok(ExitCode::SUCCESS)
}
