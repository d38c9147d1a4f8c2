mod bench;
mod output;
mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use genfact_core::genfact::{evaluate, pattern_m, pattern_n};
use genfact_core::primorial::gen_primorial;
use genfact_core::valuation::{legendre, sf_valuation, sf_valuation_digit_sum, sf_valuation_mixed};
use genfact_core::{
    BigUint, Error, ErrorClass, EvalStrategy, FactoredNat, Family, PrimeTable, Result,
    DEFAULT_DIGIT_BUDGET, DEFAULT_SIEVE_CEILING,
};

use bench::BenchFormat;
use output::{OutputFormat, OutputRecord};
use verify::{SweepConfig, SWEEP_NAMES};

#[derive(Parser)]
#[command(
    name = "genfact",
    version,
    about = "Exact superfactorials, hyperfactorials and primorials on prime-exponent representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function and print the full result record
    Eval(EvalArgs),
    /// p-adic valuation of a degree-n superfactorial
    Valuation(ValuationArgs),
    /// Print only the factored text form of a function value
    Factor(FactorArgs),
    /// Run a named verification sweep, or `all`
    Verify(VerifyArgs),
    /// Time the evaluation strategies against each other over a grid
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FunctionName {
    Sf,
    Hf,
    M,
    N,
    Primorial,
}

impl fmt::Display for FunctionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FunctionName::Sf => "sf",
            FunctionName::Hf => "hf",
            FunctionName::M => "M",
            FunctionName::N => "N",
            FunctionName::Primorial => "primorial",
        };
        write!(f, "{s}")
    }
}

impl FromStr for FunctionName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sf" => Ok(FunctionName::Sf),
            "hf" => Ok(FunctionName::Hf),
            "M" | "m" => Ok(FunctionName::M),
            "N" | "n" => Ok(FunctionName::N),
            "primorial" => Ok(FunctionName::Primorial),
            _ => Err(Error::Domain("function must be sf, hf, M, N or primorial")),
        }
    }
}

fn parse_function(s: &str) -> Result<FunctionName> {
    s.parse()
}

fn parse_strategy(s: &str) -> Result<EvalStrategy> {
    s.parse()
}

#[derive(Args)]
struct EvalArgs {
    /// One of: sf, hf, M, N, primorial
    #[arg(value_parser = parse_function)]
    function: FunctionName,
    /// Degree n (required for sf/hf, optional for primorial, not taken by M/N)
    #[arg(long)]
    degree: Option<u32>,
    /// Argument x
    #[arg(long)]
    x: u64,
    /// recursive | explicit | valuation-space (sf/hf only; default explicit)
    #[arg(long, value_parser = parse_strategy)]
    strategy: Option<EvalStrategy>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Suppress decimal rendering beyond this many digits
    #[arg(long, default_value_t = DEFAULT_DIGIT_BUDGET)]
    max_digits: u64,
}

#[derive(Args)]
struct ValuationArgs {
    /// The prime whose exponent is wanted
    #[arg(long)]
    p: u64,
    /// Superfactorial degree n (0 means the plain factorial)
    #[arg(long)]
    degree: u32,
    /// Argument x
    #[arg(long)]
    x: u64,
    /// `theorem81` | `mixed:<j>` | `digitsum`
    #[arg(long, default_value = "theorem81")]
    formula: String,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[arg(long, default_value_t = DEFAULT_DIGIT_BUDGET)]
    max_digits: u64,
}

#[derive(Args)]
struct FactorArgs {
    /// One of: sf, hf, M, N, primorial
    #[arg(value_parser = parse_function)]
    function: FunctionName,
    #[arg(long)]
    degree: Option<u32>,
    #[arg(long)]
    x: u64,
    #[arg(long, value_parser = parse_strategy)]
    strategy: Option<EvalStrategy>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Sweep name, or `all`
    sweep: String,
    /// Override the sweep's degree bound
    #[arg(long)]
    max_n: Option<u32>,
    /// Override the sweep's argument bound
    #[arg(long)]
    max_x: Option<u64>,
    /// Override the sample count of randomized sweeps
    #[arg(long)]
    samples: Option<u64>,
    /// Seed for randomized sweeps
    #[arg(long, default_value_t = 0x5EED)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    /// sf or hf
    #[arg(value_parser = parse_function)]
    function: FunctionName,
    #[arg(long, default_value_t = 1)]
    degree: u32,
    /// Benchmark every x from 1 to this bound
    #[arg(long)]
    x_max: u64,
    /// Restrict to a single strategy (agreement is still checked)
    #[arg(long, value_parser = parse_strategy)]
    strategy: Option<EvalStrategy>,
    #[arg(long, value_enum, default_value_t = BenchFormat::Text)]
    format: BenchFormat,
}

fn sieve_ceiling() -> Result<u64> {
    match std::env::var("GENFACT_SIEVE_LIMIT") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Domain("GENFACT_SIEVE_LIMIT must be a positive integer")),
        Err(_) => Ok(DEFAULT_SIEVE_CEILING),
    }
}

/// Computes the requested function value and the parameter map describing
/// the call.
fn eval_function(
    t: &PrimeTable,
    function: FunctionName,
    degree: Option<u32>,
    x: u64,
    strategy: Option<EvalStrategy>,
) -> Result<(FactoredNat, BTreeMap<String, serde_json::Value>)> {
    let mut params = BTreeMap::new();
    params.insert("x".into(), serde_json::json!(x));
    let value = match function {
        FunctionName::Sf | FunctionName::Hf => {
            let n = degree.ok_or(Error::Domain("sf and hf need --degree"))?;
            let family = if function == FunctionName::Sf {
                Family::Superfactorial
            } else {
                Family::Hyperfactorial
            };
            let strategy = strategy.unwrap_or(EvalStrategy::Explicit);
            params.insert("degree".into(), serde_json::json!(n));
            params.insert("strategy".into(), serde_json::json!(strategy.to_string()));
            evaluate(t, family, n, x, strategy)?
        }
        FunctionName::M | FunctionName::N => {
            if degree.is_some() {
                return Err(Error::Domain("M and N take no --degree"));
            }
            if strategy.is_some() {
                return Err(Error::Domain("M and N take no --strategy"));
            }
            if function == FunctionName::M {
                pattern_m(t, x)?
            } else {
                pattern_n(t, x)?
            }
        }
        FunctionName::Primorial => {
            if strategy.is_some() {
                return Err(Error::Domain("primorial takes no --strategy"));
            }
            let n = degree.unwrap_or(1);
            params.insert("degree".into(), serde_json::json!(n));
            gen_primorial(t, n, x)?
        }
    };
    Ok((value, params))
}

fn cmd_eval(t: &PrimeTable, args: EvalArgs) -> Result<()> {
    let start = Instant::now();
    let (value, params) = eval_function(t, args.function, args.degree, args.x, args.strategy)?;
    let elapsed_ns = start.elapsed().as_nanos() as u64;
    let record = OutputRecord::from_factored(
        &args.function.to_string(),
        params,
        &value,
        args.max_digits,
        elapsed_ns,
    );
    record.print(args.format);
    Ok(())
}

fn cmd_factor(t: &PrimeTable, args: FactorArgs) -> Result<()> {
    let (value, _) = eval_function(t, args.function, args.degree, args.x, args.strategy)?;
    println!("{value}");
    Ok(())
}

fn cmd_valuation(t: &PrimeTable, args: ValuationArgs) -> Result<()> {
    let mut params = BTreeMap::new();
    params.insert("p".into(), serde_json::json!(args.p));
    params.insert("degree".into(), serde_json::json!(args.degree));
    params.insert("x".into(), serde_json::json!(args.x));

    let start = Instant::now();
    let (value, formula_used): (BigUint, String) = match args.formula.as_str() {
        "theorem81" => {
            if args.degree == 0 {
                (
                    BigUint::from(legendre(t, args.p, args.x)?),
                    "legendre".into(),
                )
            } else {
                (sf_valuation(t, args.p, args.degree, args.x)?, "theorem81".into())
            }
        }
        "digitsum" => (
            sf_valuation_digit_sum(t, args.p, args.degree, args.x)?,
            "digitsum".into(),
        ),
        other => match other.strip_prefix("mixed:").map(str::parse::<u32>) {
            Some(Ok(j)) => (
                sf_valuation_mixed(t, args.p, args.degree, args.x, j)?,
                format!("mixed:{j}"),
            ),
            _ => {
                return Err(Error::Domain(
                    "formula must be theorem81, digitsum or mixed:<j>",
                ))
            }
        },
    };
    let elapsed_ns = start.elapsed().as_nanos() as u64;
    params.insert("formula".into(), serde_json::json!(formula_used));

    let record = OutputRecord::from_valuation(t, params, &value, args.max_digits, elapsed_ns)?;
    record.print(args.format);
    Ok(())
}

fn cmd_verify(t: &PrimeTable, args: VerifyArgs) -> Result<()> {
    let cfg = SweepConfig {
        max_n: args.max_n,
        max_x: args.max_x,
        samples: args.samples,
        seed: args.seed,
    };
    let names: Vec<&str> = if args.sweep == "all" {
        SWEEP_NAMES.to_vec()
    } else {
        vec![args.sweep.as_str()]
    };
    let mut total_failed = 0;
    for name in names {
        let report = verify::run_sweep(t, name, &cfg)?;
        println!("{}", report.summary_line());
        for note in &report.notes {
            println!("  {note}");
        }
        total_failed += report.failed;
    }
    if total_failed > 0 {
        return Err(Error::Internal(format!(
            "{total_failed} verification cells failed"
        )));
    }
    Ok(())
}

fn cmd_bench(t: &PrimeTable, args: BenchArgs) -> Result<()> {
    let family = match args.function {
        FunctionName::Sf => Family::Superfactorial,
        FunctionName::Hf => Family::Hyperfactorial,
        _ => return Err(Error::Domain("bench covers sf and hf")),
    };
    bench::run_bench(t, family, args.degree, args.x_max, args.strategy, args.format)
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    let table = PrimeTable::new(sieve_ceiling()?);
    match cli.command {
        Command::Eval(args) => cmd_eval(&table, args),
        Command::Valuation(args) => cmd_valuation(&table, args),
        Command::Factor(args) => cmd_factor(&table, args),
        Command::Verify(args) => cmd_verify(&table, args),
        Command::Bench(args) => cmd_bench(&table, args),
    }
}

fn main() -> ExitCode {
    // die quietly like any other filter when the downstream pipe closes
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e.class() {
                ErrorClass::Domain => ExitCode::from(2),
                ErrorClass::Resource => ExitCode::from(3),
                ErrorClass::Internal => ExitCode::from(4),
            }
        }
    }
}
