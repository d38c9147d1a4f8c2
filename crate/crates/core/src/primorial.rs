//! Generalized primorials and their prime-factor counting functions.
//!
//! The degree-1 primorial is the product of the first x primes; degree n
//! takes the product of degree n-1 values at prime-indexed arguments. The
//! counting functions report distinct (`alpha`) and total (`beta`) prime
//! factors, each paired with an independent closed form or recurrence.
//! Everything stays in factored form; a degree-2 primorial already has
//! thousands of digits.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::factored::FactoredNat;
use crate::primes::PrimeTable;

/// Product of the first x primes, squarefree by construction.
pub fn primorial(primes: &PrimeTable, x: u64) -> Result<FactoredNat> {
    if x == 0 {
        return Err(Error::Domain("primorial arguments start at 1"));
    }
    let mut pairs = Vec::with_capacity(x as usize);
    for k in 1..=x {
        pairs.push((primes.nth_prime(k)?, BigUint::one()));
    }
    Ok(FactoredNat::from_exponents(pairs))
}

/// Degree-n primorial by the defining recursion, memoized over
/// (degree, argument).
///
/// Degree 0 is the identity on its argument; the recursion only ever reaches
/// it with prime arguments, where that matches the definition.
pub fn gen_primorial(primes: &PrimeTable, n: u32, x: u64) -> Result<FactoredNat> {
    if x == 0 {
        return Err(Error::Domain("primorial arguments start at 1"));
    }
    let mut memo = HashMap::new();
    gp_memo(primes, n, x, &mut memo)
}

fn gp_memo(
    primes: &PrimeTable,
    n: u32,
    x: u64,
    memo: &mut HashMap<(u32, u64), FactoredNat>,
) -> Result<FactoredNat> {
    if let Some(v) = memo.get(&(n, x)) {
        return Ok(v.clone());
    }
    let value = if n == 0 {
        FactoredNat::from_factorization(&primes.factorize_u64(x)?)
    } else {
        let mut acc = FactoredNat::one();
        for k in 1..=x {
            let p = primes.nth_prime(k)?;
            acc *= &gp_memo(primes, n - 1, p, memo)?;
        }
        acc
    };
    memo.insert((n, x), value.clone());
    Ok(value)
}

/// Distinct prime factors of the degree-n primorial.
pub fn alpha(primes: &PrimeTable, n: u32, x: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("counting functions need degree >= 1"));
    }
    Ok(gen_primorial(primes, n, x)?.distinct_prime_count())
}

/// Closed form for `alpha`: the nth-prime map applied n-1 times to x.
pub fn alpha_closed_form(primes: &PrimeTable, n: u32, x: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("counting functions need degree >= 1"));
    }
    if x == 0 {
        return Err(Error::Domain("primorial arguments start at 1"));
    }
    let mut v = x;
    for _ in 1..n {
        v = primes.nth_prime(v)?;
    }
    Ok(v)
}

/// Total prime factors (with multiplicity) of the degree-n primorial.
pub fn beta(primes: &PrimeTable, n: u32, x: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Domain("counting functions need degree >= 1"));
    }
    gen_primorial(primes, n, x)?
        .total_prime_count()
        .to_u64()
        .ok_or_else(|| Error::Internal("prime divisor count overflows u64".into()))
}

/// `beta` by its own recurrence: the degree-(n-1) values summed over
/// prime-indexed arguments, bottoming out at degree 1 where the count is the
/// argument itself.
pub fn beta_recurrence(primes: &PrimeTable, n: u32, x: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain("the recurrence needs degree >= 2"));
    }
    if x == 0 {
        return Err(Error::Domain("primorial arguments start at 1"));
    }
    let mut memo = HashMap::new();
    beta_memo(primes, n, x, &mut memo)
}

fn beta_memo(
    primes: &PrimeTable,
    n: u32,
    y: u64,
    memo: &mut HashMap<(u32, u64), u64>,
) -> Result<u64> {
    if n == 1 {
        return Ok(y);
    }
    if let Some(&v) = memo.get(&(n, y)) {
        return Ok(v);
    }
    let mut sum = 0u64;
    for k in 1..=y {
        sum += beta_memo(primes, n - 1, primes.nth_prime(k)?, memo)?;
    }
    memo.insert((n, y), sum);
    Ok(sum)
}
