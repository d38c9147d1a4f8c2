//! p-adic valuations of factorials and generalized superfactorials.
//!
//! The factorial valuation is the classic floor sum over prime powers. For
//! degree-n superfactorials the valuation is a figurate-weighted sum of
//! factorial valuations; it also admits a mixed form that pivots at any
//! intermediate degree and a digit-sum form whose nested summations are
//! folded into running prefix-sum accumulators. Assembling these valuations
//! over all primes up to x reconstructs the whole superfactorial without
//! ever touching the recursion — the third evaluation strategy.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factored::FactoredNat;
use crate::figurate::polytopic;
use crate::primes::PrimeTable;

/// Valuation of x! at p: the sum of floor(x / p^i), stopping once the prime
/// power exceeds x (all later floors are zero).
pub fn legendre(primes: &PrimeTable, p: u64, x: u64) -> Result<u64> {
    if !primes.is_prime(p)? {
        return Err(Error::NotPrime(p));
    }
    Ok(legendre_raw(p, x))
}

pub(crate) fn legendre_raw(p: u64, x: u64) -> u64 {
    let mut sum = 0;
    let mut q = p;
    loop {
        sum += x / q;
        if q > x / p {
            break;
        }
        q *= p;
    }
    sum
}

/// Sum of the base-p digits of x.
pub fn digit_sum(p: u64, x: u64) -> u64 {
    assert!(p >= 2, "digit sums need base >= 2");
    let mut s = 0;
    let mut v = x;
    while v > 0 {
        s += v % p;
        v /= p;
    }
    s
}

/// Valuation of the degree-n superfactorial at p, as the figurate-weighted
/// sum of factorial valuations. Stated for n >= 1; degree 0 is [`legendre`].
pub fn sf_valuation(primes: &PrimeTable, p: u64, n: u32, x: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain(
            "degree 0 is the factorial valuation; use legendre",
        ));
    }
    if !primes.is_prime(p)? {
        return Err(Error::NotPrime(p));
    }
    sf_valuation_raw(p, n, x)
}

fn sf_valuation_raw(p: u64, n: u32, x: u64) -> Result<BigUint> {
    let mut sum = BigUint::zero();
    for i in 1..=x {
        sum += polytopic(n as u64 - 1, x + 1 - i)? * BigUint::from(legendre_raw(p, i));
    }
    Ok(sum)
}

/// The mixed form of the superfactorial valuation: weights of degree n-j
/// against valuations of degree j-1. Independent of j on 1..=n.
pub fn sf_valuation_mixed(
    primes: &PrimeTable,
    p: u64,
    n: u32,
    x: u64,
    j: u32,
) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain(
            "degree 0 is the factorial valuation; use legendre",
        ));
    }
    if j == 0 || j > n {
        return Err(Error::Domain("the mixing level must satisfy 1 <= j <= n"));
    }
    if !primes.is_prime(p)? {
        return Err(Error::NotPrime(p));
    }
    let mut sum = BigUint::zero();
    for i in 1..=x {
        let weight = polytopic((n - j) as u64, x + 1 - i)?;
        let inner = if j == 1 {
            BigUint::from(legendre_raw(p, i))
        } else {
            sf_valuation_raw(p, j - 1, i)?
        };
        sum += weight * inner;
    }
    Ok(sum)
}

/// The digit-sum form of the superfactorial valuation: a degree-(n+1)
/// figurate number minus n nested summations of base-p digit sums, all
/// divided by p-1.
///
/// The nested summations are folded into n running prefix-sum accumulators,
/// one pass over 1..=x instead of an x^n loop nest. The bracket is divisible
/// by p-1 on every input; a remainder signals a bug, not a bad input.
pub fn sf_valuation_digit_sum(primes: &PrimeTable, p: u64, n: u32, x: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain(
            "degree 0 is the factorial valuation; use legendre",
        ));
    }
    if !primes.is_prime(p)? {
        return Err(Error::NotPrime(p));
    }
    if x == 0 {
        return Ok(BigUint::zero());
    }
    let mut acc = vec![BigUint::zero(); n as usize];
    for a in 1..=x {
        acc[0] += BigUint::from(digit_sum(p, a));
        for level in 1..n as usize {
            let lower = acc[level - 1].clone();
            acc[level] += lower;
        }
    }
    let nested = acc[n as usize - 1].clone();
    let total = polytopic(n as u64 + 1, x)?;
    if nested > total {
        return Err(Error::Internal(format!(
            "digit-sum bracket went negative at p={p} n={n} x={x}"
        )));
    }
    let bracket = total - nested;
    let p_minus_1 = BigUint::from(p - 1);
    if !(&bracket % &p_minus_1).is_zero() {
        return Err(Error::Internal(format!(
            "digit-sum bracket not divisible by p-1 at p={p} n={n} x={x}"
        )));
    }
    Ok(bracket / p_minus_1)
}

/// Assembles the degree-n superfactorial of x directly as the map from each
/// prime p <= x to its valuation. Degree 0 uses the factorial valuation.
/// No prime above x can appear.
pub fn sf_from_valuations(primes: &PrimeTable, n: u32, x: u64) -> Result<FactoredNat> {
    let mut pairs = Vec::new();
    for p in primes.primes_upto(x)? {
        let e = if n == 0 {
            BigUint::from(legendre_raw(p, x))
        } else {
            sf_valuation_raw(p, n, x)?
        };
        pairs.push((p, e));
    }
    Ok(FactoredNat::from_exponents(pairs))
}
