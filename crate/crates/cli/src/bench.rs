//! Strategy benchmarks. Values are computed for every (strategy, x) cell,
//! checked for exact agreement against the recursive reference, and only
//! then reported; a disagreement aborts, because it means a correctness bug,
//! not a slow path.

use std::time::Instant;

use serde::Serialize;

use genfact_core::genfact::evaluate;
use genfact_core::{Error, EvalStrategy, Family, PrimeTable, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum BenchFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Serialize)]
struct BenchRow {
    function: String,
    degree: u32,
    strategy: String,
    x: u64,
    elapsed_ns: u64,
    digit_count: u64,
    factored_terms: u64,
}

fn applicable_strategies(family: Family, degree: u32) -> Vec<EvalStrategy> {
    match family {
        Family::Superfactorial if degree >= 1 => vec![
            EvalStrategy::Recursive,
            EvalStrategy::Explicit,
            EvalStrategy::ValuationSpace,
        ],
        Family::Superfactorial => vec![EvalStrategy::Recursive, EvalStrategy::Explicit],
        Family::Hyperfactorial => vec![EvalStrategy::Recursive, EvalStrategy::Explicit],
    }
}

pub fn run_bench(
    t: &PrimeTable,
    family: Family,
    degree: u32,
    x_max: u64,
    strategy: Option<EvalStrategy>,
    format: BenchFormat,
) -> Result<()> {
    let applicable = applicable_strategies(family, degree);
    let timed: Vec<EvalStrategy> = match strategy {
        Some(s) if applicable.contains(&s) => vec![s],
        Some(_) => {
            return Err(Error::Unsupported(
                "that strategy is not defined for this function and degree",
            ))
        }
        None => applicable,
    };

    let mut rows = Vec::new();
    for x in 1..=x_max {
        let reference = evaluate(t, family, degree, x, EvalStrategy::Recursive)?;
        for &s in &timed {
            let start = Instant::now();
            let value = evaluate(t, family, degree, x, s)?;
            let elapsed_ns = start.elapsed().as_nanos() as u64;
            if value != reference {
                eprintln!("strategy {s} disagrees with the recursive reference at x={x}");
                return Err(Error::Internal(format!(
                    "cross-strategy mismatch: {family} degree {degree} x {x} strategy {s}"
                )));
            }
            rows.push(BenchRow {
                function: family.to_string(),
                degree,
                strategy: s.to_string(),
                x,
                elapsed_ns,
                digit_count: value.digit_count(),
                factored_terms: value.distinct_prime_count(),
            });
        }
    }

    match format {
        BenchFormat::Csv => {
            println!("function,degree,strategy,x,elapsed_ns,digit_count,factored_terms");
            for r in &rows {
                println!(
                    "{},{},{},{},{},{},{}",
                    r.function, r.degree, r.strategy, r.x, r.elapsed_ns, r.digit_count,
                    r.factored_terms
                );
            }
        }
        BenchFormat::Json => {
            println!("{}", serde_json::to_string(&rows).expect("rows serialize"));
        }
        BenchFormat::Text => {
            println!(
                "{:<4} {:>6} {:<15} {:>5} {:>12} {:>12} {:>14}",
                "fn", "degree", "strategy", "x", "elapsed_ns", "digit_count", "factored_terms"
            );
            for r in &rows {
                println!(
                    "{:<4} {:>6} {:<15} {:>5} {:>12} {:>12} {:>14}",
                    r.function, r.degree, r.strategy, r.x, r.elapsed_ns, r.digit_count,
                    r.factored_terms
                );
            }
        }
    }
    Ok(())
}
