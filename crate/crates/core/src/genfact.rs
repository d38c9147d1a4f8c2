//! Generalized superfactorials and hyperfactorials.
//!
//! Each family has two independent evaluation routes: the defining iterated
//! product (memoized recursion, the trusted reference) and an explicit
//! product whose exponents are figurate numbers. Superfactorials get a third
//! route that assembles the value prime-by-prime from valuations. The routes
//! must agree on every input; that agreement is the library's central
//! correctness property and is what `verify` and the benchmarks exercise.
//!
//! The degree-0 superfactorial is the factorial; degree n takes the running
//! product of the degree n-1 values. Hyperfactorials are anchored at degree
//! 1 (the product of k^k) and have no degree 0. The two pattern products M
//! and N also live here together with their row-structure oracles.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::factored::FactoredNat;
use crate::figurate::polytopic;
use crate::primes::PrimeTable;
use crate::valuation;

/// Which iterated-product family to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Superfactorial,
    Hyperfactorial,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Superfactorial => write!(f, "sf"),
            Family::Hyperfactorial => write!(f, "hf"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sf" => Ok(Family::Superfactorial),
            "hf" => Ok(Family::Hyperfactorial),
            _ => Err(Error::Domain("family must be sf or hf")),
        }
    }
}

/// How to evaluate: by the defining recursion, by the figurate-exponent
/// explicit product, or prime-by-prime from valuations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalStrategy {
    Recursive,
    Explicit,
    ValuationSpace,
}

impl EvalStrategy {
    pub const ALL: [EvalStrategy; 3] = [
        EvalStrategy::Recursive,
        EvalStrategy::Explicit,
        EvalStrategy::ValuationSpace,
    ];
}

impl fmt::Display for EvalStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalStrategy::Recursive => write!(f, "recursive"),
            EvalStrategy::Explicit => write!(f, "explicit"),
            EvalStrategy::ValuationSpace => write!(f, "valuation-space"),
        }
    }
}

impl FromStr for EvalStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursive" => Ok(EvalStrategy::Recursive),
            "explicit" => Ok(EvalStrategy::Explicit),
            "valuation-space" => Ok(EvalStrategy::ValuationSpace),
            _ => Err(Error::Domain(
                "strategy must be recursive, explicit or valuation-space",
            )),
        }
    }
}

/// x! in factored form, as the running product of the factorizations of
/// 1..=x.
pub fn factored_factorial(primes: &PrimeTable, x: u64) -> Result<FactoredNat> {
    let mut acc = FactoredNat::one();
    for k in 2..=x {
        acc *= &FactoredNat::from_factorization(&primes.factorize_u64(k)?);
    }
    Ok(acc)
}

/// Degree-n superfactorial by the defining recursion, memoized over
/// (degree, argument). x = 0 is the empty product for every degree.
pub fn sf_recursive(primes: &PrimeTable, n: u32, x: u64) -> Result<FactoredNat> {
    let mut memo = HashMap::new();
    sf_memo(primes, n, x, &mut memo)
}

fn sf_memo(
    primes: &PrimeTable,
    n: u32,
    x: u64,
    memo: &mut HashMap<(u32, u64), FactoredNat>,
) -> Result<FactoredNat> {
    if let Some(v) = memo.get(&(n, x)) {
        return Ok(v.clone());
    }
    let value = if n == 0 {
        factored_factorial(primes, x)?
    } else {
        let mut acc = FactoredNat::one();
        for k in 1..=x {
            acc *= &sf_memo(primes, n - 1, k, memo)?;
        }
        acc
    };
    memo.insert((n, x), value.clone());
    Ok(value)
}

/// Degree-n superfactorial as the explicit product over k of k raised to a
/// degree-n figurate weight at index (x-k)+1.
pub fn sf_explicit(primes: &PrimeTable, n: u32, x: u64) -> Result<FactoredNat> {
    let mut acc = FactoredNat::one();
    for k in 1..=x {
        let weight = polytopic(n as u64, x - k + 1)?;
        acc *= &FactoredNat::from_factorization(&primes.factorize_u64(k)?).pow(&weight);
    }
    Ok(acc)
}

/// Degree-n hyperfactorial by the defining recursion; degree 1 is the
/// product of k^k, degree 0 does not exist.
pub fn hf_recursive(primes: &PrimeTable, n: u32, x: u64) -> Result<FactoredNat> {
    if n == 0 {
        return Err(Error::Domain("hyperfactorial degrees start at 1"));
    }
    let mut memo = HashMap::new();
    hf_memo(primes, n, x, &mut memo)
}

fn hf_memo(
    primes: &PrimeTable,
    n: u32,
    x: u64,
    memo: &mut HashMap<(u32, u64), FactoredNat>,
) -> Result<FactoredNat> {
    if let Some(v) = memo.get(&(n, x)) {
        return Ok(v.clone());
    }
    let value = if n == 1 {
        let mut acc = FactoredNat::one();
        for k in 1..=x {
            acc *= &FactoredNat::from_factorization(&primes.factorize_u64(k)?)
                .pow(&BigUint::from(k));
        }
        acc
    } else {
        let mut acc = FactoredNat::one();
        for k in 1..=x {
            acc *= &hf_memo(primes, n - 1, k, memo)?;
        }
        acc
    };
    memo.insert((n, x), value.clone());
    Ok(value)
}

/// Degree-n hyperfactorial as the explicit product, with exponent
/// k times the degree-(n-1) figurate weight.
pub fn hf_explicit(primes: &PrimeTable, n: u32, x: u64) -> Result<FactoredNat> {
    if n == 0 {
        return Err(Error::Domain("hyperfactorial degrees start at 1"));
    }
    let mut acc = FactoredNat::one();
    for k in 1..=x {
        let weight = BigUint::from(k) * polytopic((n - 1) as u64, x - k + 1)?;
        acc *= &FactoredNat::from_factorization(&primes.factorize_u64(k)?).pow(&weight);
    }
    Ok(acc)
}

/// Closed form of the M pattern product:
/// x! times, for each k, the top (x - floor(x/2) - k) numbers and the
/// bottom (ceil(x/2) - k) numbers as factorial quotients.
pub fn pattern_m(primes: &PrimeTable, x: u64) -> Result<FactoredNat> {
    if x == 0 {
        return Err(Error::Domain("pattern arguments start at 1"));
    }
    let half_up = x.div_ceil(2);
    let half_down = x / 2;
    let x_fact = factored_factorial(primes, x)?;
    let mut acc = x_fact.clone();
    for k in 1..half_up {
        acc *= &x_fact.div_exact(&factored_factorial(primes, half_down + k)?)?;
        acc *= &factored_factorial(primes, half_up - k)?;
    }
    Ok(acc)
}

/// The M pattern evaluated straight off its row structure: the full row
/// 1..x, then per row k a left block 1..(ceil(x/2)-k) and a right block
/// (floor(x/2)+k+1)..x. Every entry is multiplied in individually; nothing
/// is shared with the closed form.
pub fn pattern_m_rows(primes: &PrimeTable, x: u64) -> Result<FactoredNat> {
    if x == 0 {
        return Err(Error::Domain("pattern arguments start at 1"));
    }
    let half_up = x.div_ceil(2);
    let half_down = x / 2;
    let mut acc = FactoredNat::one();
    for v in 1..=x {
        acc *= &FactoredNat::from_factorization(&primes.factorize_u64(v)?);
    }
    for k in 1..half_up {
        for v in 1..=(half_up - k) {
            acc *= &FactoredNat::from_factorization(&primes.factorize_u64(v)?);
        }
        for v in (half_down + k + 1)..=x {
            acc *= &FactoredNat::from_factorization(&primes.factorize_u64(v)?);
        }
    }
    Ok(acc)
}

/// Closed form of the N pattern product: for each k the factorial quotient
/// (x-k)!/k!.
pub fn pattern_n(primes: &PrimeTable, x: u64) -> Result<FactoredNat> {
    if x == 0 {
        return Err(Error::Domain("pattern arguments start at 1"));
    }
    let mut acc = FactoredNat::one();
    for k in 0..x.div_ceil(2) {
        acc *= &factored_factorial(primes, x - k)?.div_exact(&factored_factorial(primes, k)?)?;
    }
    Ok(acc)
}

/// The N pattern off its row structure: row k is the block (k+1)..(x-k).
pub fn pattern_n_rows(primes: &PrimeTable, x: u64) -> Result<FactoredNat> {
    if x == 0 {
        return Err(Error::Domain("pattern arguments start at 1"));
    }
    let mut acc = FactoredNat::one();
    for k in 0..x.div_ceil(2) {
        for v in (k + 1)..=(x - k) {
            acc *= &FactoredNat::from_factorization(&primes.factorize_u64(v)?);
        }
    }
    Ok(acc)
}

/// Uniform dispatch over family and strategy. Valuation-space evaluation is
/// defined for superfactorials of degree >= 1 only.
pub fn evaluate(
    primes: &PrimeTable,
    family: Family,
    n: u32,
    x: u64,
    strategy: EvalStrategy,
) -> Result<FactoredNat> {
    match (family, strategy) {
        (Family::Superfactorial, EvalStrategy::Recursive) => sf_recursive(primes, n, x),
        (Family::Superfactorial, EvalStrategy::Explicit) => sf_explicit(primes, n, x),
        (Family::Superfactorial, EvalStrategy::ValuationSpace) => {
            if n == 0 {
                return Err(Error::Unsupported(
                    "valuation-space evaluation needs degree >= 1",
                ));
            }
            valuation::sf_from_valuations(primes, n, x)
        }
        (Family::Hyperfactorial, EvalStrategy::Recursive) => hf_recursive(primes, n, x),
        (Family::Hyperfactorial, EvalStrategy::Explicit) => hf_explicit(primes, n, x),
        (Family::Hyperfactorial, EvalStrategy::ValuationSpace) => Err(Error::Unsupported(
            "valuation-space evaluation covers superfactorials only",
        )),
    }
}
