//! Integers kept in prime-exponent form.
//!
//! A [`FactoredNat`] is a positive integer stored as a map from primes to
//! exponents. Multiplication is exponent addition, powers are exponent
//! scaling, divisibility and p-adic valuations are exponent comparisons, and
//! none of it ever materializes the positional form. That is what keeps
//! values with tens of thousands of digits cheap to work with.
//!
//! Exponents are arbitrary-precision: the figurate weights in the explicit
//! product formulas grow polynomially with the degree and overflow machine
//! words at quite modest arguments.
//!
//! The text form is `p1^e1 * p2^e2 * ...` with primes strictly ascending and
//! exactly one space around each `*`; the empty product prints as `1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, MulAssign};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::primes::{is_prime_u64, Factorization};

/// Default cap on decimal rendering, in digits.
pub const DEFAULT_DIGIT_BUDGET: u64 = 1_000_000;

/// A positive integer as its canonical prime-exponent map.
///
/// Zero exponents are never stored, so structural equality coincides with
/// equality of the denoted integers. The empty map is 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FactoredNat {
    factors: BTreeMap<u64, BigUint>,
}

impl FactoredNat {
    pub fn one() -> Self {
        FactoredNat::default()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn from_factorization(f: &Factorization) -> Self {
        FactoredNat {
            factors: f.iter().map(|(p, e)| (p, BigUint::from(e))).collect(),
        }
    }

    /// Builds a value from (prime, exponent) pairs, dropping zero exponents.
    pub fn from_exponents<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (u64, BigUint)>,
    {
        let mut factors = BTreeMap::new();
        for (p, e) in pairs {
            debug_assert!(is_prime_u64(p), "{p} is not prime");
            if !e.is_zero() {
                *factors.entry(p).or_insert_with(BigUint::zero) += e;
            }
        }
        FactoredNat { factors }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigUint)> + '_ {
        self.factors.iter().map(|(&p, e)| (p, e))
    }

    /// Number of distinct primes in the support (the omega function).
    pub fn distinct_prime_count(&self) -> u64 {
        self.factors.len() as u64
    }

    /// Sum of all exponents (the big-omega function).
    pub fn total_prime_count(&self) -> BigUint {
        let mut sum = BigUint::zero();
        for e in self.factors.values() {
            sum += e;
        }
        sum
    }

    /// The exponent of `p`, i.e. the p-adic valuation of the denoted value.
    pub fn valuation(&self, p: u64) -> Result<BigUint> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(self.factors.get(&p).cloned().unwrap_or_default())
    }

    /// Raises to the `e`-th power by scaling every exponent.
    pub fn pow(&self, e: &BigUint) -> FactoredNat {
        if e.is_zero() {
            return FactoredNat::one();
        }
        FactoredNat {
            factors: self.factors.iter().map(|(&p, x)| (p, x * e)).collect(),
        }
    }

    /// Exact division; fails naming the first prime whose exponent would go
    /// negative.
    pub fn div_exact(&self, divisor: &FactoredNat) -> Result<FactoredNat> {
        let mut out = self.factors.clone();
        for (&p, need) in &divisor.factors {
            match out.get_mut(&p) {
                Some(have) if *have >= *need => {
                    *have -= need;
                    if have.is_zero() {
                        out.remove(&p);
                    }
                }
                _ => return Err(Error::NotDivisible { prime: p }),
            }
        }
        Ok(FactoredNat { factors: out })
    }

    /// True when `self` divides `other` (exponent-wise dominance).
    pub fn divides(&self, other: &FactoredNat) -> bool {
        self.factors
            .iter()
            .all(|(p, e)| other.factors.get(p).is_some_and(|oe| oe >= e))
    }

    /// Exact number of decimal digits of the denoted value.
    ///
    /// Computed from interval bounds on the sum of exponent * log10(prime).
    /// Exact powers of ten are stripped first (their log sits exactly on an
    /// integer boundary, where floating point cannot decide the floor); if
    /// the remaining interval still straddles a boundary the value is
    /// materialized and counted, provided it fits the digit budget.
    pub fn digit_count(&self) -> u64 {
        let (tens, rest) = self.split_power_of_ten();
        if rest.factors.is_empty() {
            return tens.saturating_add(1);
        }
        let (lo, hi) = rest.log10_interval();
        if !hi.is_finite() {
            return u64::MAX;
        }
        let flo = lo.floor();
        let fhi = hi.floor();
        if flo == fhi {
            return tens.saturating_add(flo as u64).saturating_add(1);
        }
        if tens.saturating_add(fhi as u64) < DEFAULT_DIGIT_BUDGET {
            let digits = decimal_digits(&rest.materialize());
            return tens.saturating_add(digits);
        }
        // ambiguous by one part in ~1e11 and too large to materialize;
        // report the upper reading
        tens.saturating_add(fhi as u64).saturating_add(1)
    }

    /// Materializes the denoted value under the default digit budget.
    pub fn to_biguint(&self) -> Result<BigUint> {
        self.to_biguint_budgeted(DEFAULT_DIGIT_BUDGET)
    }

    /// Materializes the denoted value, refusing when it would exceed
    /// `budget` decimal digits.
    pub fn to_biguint_budgeted(&self, budget: u64) -> Result<BigUint> {
        let digits = self.digit_count();
        if digits > budget {
            return Err(Error::DigitBudget { digits, budget });
        }
        Ok(self.materialize())
    }

    fn materialize(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (&p, e) in &self.factors {
            let e = e
                .to_u64()
                .expect("exponent fits u64 for values under the digit budget");
            acc *= Pow::pow(&BigUint::from(p), e);
        }
        acc
    }

    /// Splits off the largest power of ten, returning its exponent and the
    /// remaining factors.
    fn split_power_of_ten(&self) -> (u64, FactoredNat) {
        let (Some(e2), Some(e5)) = (self.factors.get(&2), self.factors.get(&5)) else {
            return (0, self.clone());
        };
        let k = e2.min(e5).clone();
        let mut rest = self.clone();
        for p in [2u64, 5] {
            let e = rest.factors.get_mut(&p).expect("key checked above");
            *e -= &k;
            if e.is_zero() {
                rest.factors.remove(&p);
            }
        }
        (k.to_u64().unwrap_or(u64::MAX), rest)
    }

    /// Directed-rounding enclosure of log10 of the denoted value.
    fn log10_interval(&self) -> (f64, f64) {
        let mut lo = 0.0f64;
        let mut hi = 0.0f64;
        for (&p, e) in &self.factors {
            let ef = e.to_f64().unwrap_or(f64::INFINITY);
            let term = ef * (p as f64).log10();
            if !term.is_finite() {
                return (f64::MAX, f64::INFINITY);
            }
            lo = step_down(lo + step_down(term, 8), 1);
            hi = step_up(hi + step_up(term, 8), 1);
        }
        (lo.max(0.0), hi)
    }
}

fn decimal_digits(v: &BigUint) -> u64 {
    v.to_str_radix(10).len() as u64
}

// bit-stepping is monotone for non-negative finite doubles, which is all
// that ever flows through the log accumulation
fn step_up(x: f64, ulps: u64) -> f64 {
    f64::from_bits(x.to_bits() + ulps)
}

fn step_down(x: f64, ulps: u64) -> f64 {
    f64::from_bits(x.to_bits().saturating_sub(ulps))
}

impl Mul<&FactoredNat> for &FactoredNat {
    type Output = FactoredNat;

    fn mul(self, rhs: &FactoredNat) -> FactoredNat {
        let mut out = self.clone();
        out *= rhs;
        out
    }
}

impl MulAssign<&FactoredNat> for FactoredNat {
    // multiplying the denoted values IS adding the exponents
    #[allow(clippy::suspicious_op_assign_impl)]
    fn mul_assign(&mut self, rhs: &FactoredNat) {
        for (&p, e) in &rhs.factors {
            *self.factors.entry(p).or_insert_with(BigUint::zero) += e;
        }
    }
}

impl fmt::Display for FactoredNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&p, e) in &self.factors {
            if !first {
                write!(f, " * ")?;
            }
            write!(f, "{p}^{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for FactoredNat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(FactoredNat::one());
        }
        if s.is_empty() {
            return Err(Error::Domain("empty factored text"));
        }
        let mut factors = BTreeMap::new();
        let mut last: Option<u64> = None;
        for term in s.split(" * ") {
            let (ps, es) = term
                .split_once('^')
                .ok_or(Error::Domain("factored text terms must look like p^e"))?;
            let p: u64 = ps
                .parse()
                .map_err(|_| Error::Domain("factored text has a malformed prime"))?;
            let e: BigUint = es
                .parse()
                .map_err(|_| Error::Domain("factored text has a malformed exponent"))?;
            if !is_prime_u64(p) {
                return Err(Error::NotPrime(p));
            }
            if e.is_zero() {
                return Err(Error::Domain("factored text has a zero exponent"));
            }
            if last.is_some_and(|q| q >= p) {
                return Err(Error::Domain("factored text primes must be ascending"));
            }
            last = Some(p);
            factors.insert(p, e);
        }
        Ok(FactoredNat { factors })
    }
}
