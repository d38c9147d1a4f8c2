//! Figurate (r-polytopic) numbers.
//!
//! `polytopic(r, n)` is the n-th number of the r-dimensional simplex family:
//! r = 1 gives the naturals, r = 2 the triangular numbers, r = 3 the
//! tetrahedral numbers. These show up as the exponents of every explicit
//! product formula in this crate, so they are computed exactly.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient C(m, k) by multiplicative accumulation.
///
/// Every intermediate value is itself a binomial coefficient, so the division
/// at each step is exact and intermediates stay as small as the result.
fn binomial(m: u128, k: u128) -> BigUint {
    debug_assert!(k <= m);
    let k = k.min(m - k);
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc *= BigUint::from(m - k + i);
        acc /= BigUint::from(i);
    }
    acc
}

/// The n-th r-polytopic number, C(n+r-1, r).
///
/// `polytopic(0, n)` is 1 for every n, `polytopic(1, n)` is n. The sequences
/// are indexed from 1; index 0 is rejected.
pub fn polytopic(r: u64, n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::FigurateIndexZero);
    }
    Ok(binomial(n as u128 + r as u128 - 1, r as u128))
}

/// Checks that the (r+1)-polytopic number at k equals the sum of the first k
/// r-polytopic numbers, with both sides computed independently.
pub fn cumulative_check(r: u64, k: u64) -> Result<bool> {
    let direct = polytopic(r + 1, k)?;
    let mut sum = BigUint::zero();
    for i in 1..=k {
        sum += polytopic(r, i)?;
    }
    Ok(direct == sum)
}

/// Product of n consecutive descending factors starting at x.
///
/// The empty product (n = 0) is 1. Once n exceeds x the factor 0 is part of
/// the product, so the result is 0.
pub fn falling_factorial(x: u64, n: u64) -> BigUint {
    if n > x {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..n {
        acc *= BigUint::from(x - i);
    }
    acc
}
