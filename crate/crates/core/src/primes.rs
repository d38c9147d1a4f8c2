//! Prime infrastructure: a growable sieve with nth-prime and prime-counting
//! queries, canonical factorization by trial division, and the distinct /
//! total prime-factor counts.

use std::collections::BTreeMap;
use std::sync::RwLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default ceiling on how far the sieve may grow. Nested prime queries
/// (primes indexed by primes) can explode, and must fail loudly instead of
/// sieving forever.
pub const DEFAULT_SIEVE_CEILING: u64 = 100_000_000;

/// Primality by trial division. Intended for one-off checks such as parser
/// validation; table-backed callers should prefer [`PrimeTable::is_prime`].
pub fn is_prime_u64(v: u64) -> bool {
    if v < 2 {
        return false;
    }
    if v.is_multiple_of(2) {
        return v == 2;
    }
    let mut d = 3u64;
    while d * d <= v {
        if v.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Odd-only sieve of Eratosthenes up to `limit` inclusive.
fn sieve_upto(limit: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    if limit >= 2 {
        primes.push(2);
    }
    if limit < 3 {
        return primes;
    }
    // bit i represents the odd number 2i + 3
    let count = ((limit - 1) / 2) as usize;
    let mut composite = vec![0u64; count.div_ceil(64)];
    let idx = |v: u64| ((v - 3) / 2) as usize;
    let mut i = 3u64;
    while i * i <= limit {
        if composite[idx(i) / 64] & (1 << (idx(i) % 64)) == 0 {
            let mut j = i * i;
            while j <= limit {
                let b = idx(j);
                composite[b / 64] |= 1 << (b % 64);
                j += 2 * i;
            }
        }
        i += 2;
    }
    let mut v = 3u64;
    while v <= limit {
        let b = idx(v);
        if composite[b / 64] & (1 << (b % 64)) == 0 {
            primes.push(v);
        }
        v += 2;
    }
    primes
}

struct SieveState {
    limit: u64,
    primes: Vec<u64>,
}

/// All primes up to an internally managed limit, regrown on demand.
///
/// Growth doubles the sieved range and is serialized behind a write lock;
/// queries share a read lock, so concurrent readers always see a consistent
/// table. Growth past the ceiling is a resource error.
pub struct PrimeTable {
    ceiling: u64,
    state: RwLock<SieveState>,
}

impl PrimeTable {
    pub fn new(ceiling: u64) -> Self {
        let limit = ceiling.min(1 << 12);
        PrimeTable {
            ceiling,
            state: RwLock::new(SieveState {
                limit,
                primes: sieve_upto(limit),
            }),
        }
    }

    pub fn with_default_ceiling() -> Self {
        Self::new(DEFAULT_SIEVE_CEILING)
    }

    pub fn ceiling(&self) -> u64 {
        self.ceiling
    }

    fn read(&self) -> std::sync::RwLockReadGuard<'_, SieveState> {
        self.state.read().expect("prime table lock poisoned")
    }

    /// Grows the sieve so that it covers `needed`, doubling to amortize.
    fn ensure_limit(&self, needed: u64) -> Result<()> {
        if needed <= self.read().limit {
            return Ok(());
        }
        if needed > self.ceiling {
            return Err(Error::SieveCeiling {
                needed,
                ceiling: self.ceiling,
            });
        }
        let mut st = self.state.write().expect("prime table lock poisoned");
        if needed <= st.limit {
            return Ok(()); // another thread grew it first
        }
        let mut new_limit = st.limit.max(1 << 12);
        while new_limit < needed {
            new_limit = new_limit.saturating_mul(2);
        }
        new_limit = new_limit.min(self.ceiling);
        st.primes = sieve_upto(new_limit);
        st.limit = new_limit;
        Ok(())
    }

    /// The k-th prime (k = 1 gives 2).
    pub fn nth_prime(&self, k: u64) -> Result<u64> {
        if k == 0 {
            return Err(Error::Domain("prime indices start at 1"));
        }
        {
            let st = self.read();
            if let Some(&p) = st.primes.get(k as usize - 1) {
                return Ok(p);
            }
        }
        let mut target = nth_prime_bound(k);
        loop {
            self.ensure_limit(target)?;
            let st = self.read();
            if let Some(&p) = st.primes.get(k as usize - 1) {
                return Ok(p);
            }
            if st.limit >= self.ceiling {
                return Err(Error::SieveCeiling {
                    needed: st.limit.saturating_mul(2),
                    ceiling: self.ceiling,
                });
            }
            target = st.limit.saturating_mul(2);
        }
    }

    /// Count of primes less than or equal to `x`.
    pub fn prime_count(&self, x: u64) -> Result<u64> {
        if x < 2 {
            return Ok(0);
        }
        self.ensure_limit(x)?;
        let st = self.read();
        Ok(st.primes.partition_point(|&p| p <= x) as u64)
    }

    /// The least prime strictly greater than `x`.
    pub fn next_prime_after(&self, x: u64) -> Result<u64> {
        if x < 1 {
            return Err(Error::Domain("next_prime_after expects x >= 1"));
        }
        // Bertrand: there is a prime in (x, 2x], so one doubling suffices.
        let mut target = x.saturating_add(1);
        loop {
            self.ensure_limit(target)?;
            let st = self.read();
            let i = st.primes.partition_point(|&p| p <= x);
            if let Some(&p) = st.primes.get(i) {
                return Ok(p);
            }
            if st.limit >= self.ceiling {
                return Err(Error::SieveCeiling {
                    needed: st.limit.saturating_mul(2),
                    ceiling: self.ceiling,
                });
            }
            target = st.limit.saturating_mul(2).max(x.saturating_mul(2));
        }
    }

    /// Primality via trial division against the sieved primes up to sqrt(v).
    pub fn is_prime(&self, v: u64) -> Result<bool> {
        if v < 2 {
            return Ok(false);
        }
        let root = v.isqrt();
        self.ensure_limit(root + 1)?;
        let st = self.read();
        for &p in &st.primes {
            if p > root {
                break;
            }
            if v.is_multiple_of(p) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All primes up to `x` inclusive, in ascending order.
    pub fn primes_upto(&self, x: u64) -> Result<Vec<u64>> {
        if x < 2 {
            return Ok(Vec::new());
        }
        self.ensure_limit(x)?;
        let st = self.read();
        let end = st.primes.partition_point(|&p| p <= x);
        Ok(st.primes[..end].to_vec())
    }

    /// Canonical factorization of a non-zero `u64`.
    ///
    /// Trial division against sieved primes; every input here is either
    /// small or already in factored form.
    // TODO: Pollard rho for large semiprime cofactors, should one ever need
    // to factor adversarial composites
    pub fn factorize_u64(&self, v: u64) -> Result<Factorization> {
        if v == 0 {
            return Err(Error::FactorZero);
        }
        let mut factors = BTreeMap::new();
        let mut rem = v;
        if rem > 1 {
            self.ensure_limit(rem.isqrt() + 1)?;
            let st = self.read();
            for &p in &st.primes {
                if (p as u128) * (p as u128) > rem as u128 {
                    break;
                }
                while rem.is_multiple_of(p) {
                    rem /= p;
                    *factors.entry(p).or_insert(0u64) += 1;
                }
            }
            if rem > 1 {
                *factors.entry(rem).or_insert(0) += 1;
            }
        }
        Ok(Factorization { factors })
    }

    /// Canonical factorization of an arbitrary-precision positive integer.
    pub fn factorize(&self, v: &BigUint) -> Result<Factorization> {
        if v.is_zero() {
            return Err(Error::FactorZero);
        }
        if let Some(v64) = v.to_u64() {
            return self.factorize_u64(v64);
        }
        let mut factors: BTreeMap<u64, u64> = BTreeMap::new();
        let mut rem = v.clone();
        let mut k = 1u64;
        loop {
            if let Some(r64) = rem.to_u64() {
                // small enough for the fast path; factors found there are
                // all larger than the ones already collected
                for (p, e) in self.factorize_u64(r64)?.factors {
                    *factors.entry(p).or_insert(0) += e;
                }
                return Ok(Factorization { factors });
            }
            let p = self.nth_prime(k)?;
            let pb = BigUint::from(p);
            if &pb * &pb > rem {
                break;
            }
            while (&rem % &pb).is_zero() {
                rem /= &pb;
                *factors.entry(p).or_insert(0) += 1;
            }
            k += 1;
        }
        if !rem.is_one() {
            // anything left is prime, but must fit our prime keys
            let p = rem.to_u64().ok_or(Error::FactorTooLarge)?;
            *factors.entry(p).or_insert(0) += 1;
        }
        Ok(Factorization { factors })
    }
}

/// Rosser-style upper bound on the k-th prime, used to size the first grow.
fn nth_prime_bound(k: u64) -> u64 {
    if k < 6 {
        return 13;
    }
    let kf = k as f64;
    (kf * (kf.ln() + kf.ln().ln())).ceil() as u64 + 2
}

/// A positive integer as its map from primes to exponents; empty means 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: BTreeMap<u64, u64>,
}

impl Factorization {
    pub fn factors(&self) -> &BTreeMap<u64, u64> {
        &self.factors
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    /// Number of distinct prime factors (the omega function).
    pub fn distinct_prime_count(&self) -> u64 {
        self.factors.len() as u64
    }

    /// Number of prime factors counted with multiplicity (the big-omega
    /// function).
    pub fn total_prime_count(&self) -> u64 {
        self.factors.values().sum()
    }

    /// Reconstructs the integer this factorization denotes.
    pub fn value(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (&p, &e) in &self.factors {
            for _ in 0..e {
                acc *= BigUint::from(p);
            }
        }
        acc
    }
}

impl FromIterator<(u64, u64)> for Factorization {
    fn from_iter<T: IntoIterator<Item = (u64, u64)>>(iter: T) -> Self {
        let mut factors = BTreeMap::new();
        for (p, e) in iter {
            debug_assert!(is_prime_u64(p), "{p} is not prime");
            if e > 0 {
                *factors.entry(p).or_insert(0) += e;
            }
        }
        Factorization { factors }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nth_prime_examples() {
        let t = PrimeTable::with_default_ceiling();
        assert_eq!(t.nth_prime(1).unwrap(), 2);
        assert_eq!(t.nth_prime(3).unwrap(), 5);
        assert_eq!(t.nth_prime(25).unwrap(), 97);
        assert!(t.nth_prime(0).is_err());
    }

    #[test]
    fn prime_count_examples() {
        let t = PrimeTable::with_default_ceiling();
        assert_eq!(t.prime_count(0).unwrap(), 0);
        assert_eq!(t.prime_count(1).unwrap(), 0);
        assert_eq!(t.prime_count(10).unwrap(), 4);
        assert_eq!(t.prime_count(97).unwrap(), 25);
    }

    #[test]
    fn next_prime_after_is_strict() {
        let t = PrimeTable::with_default_ceiling();
        assert_eq!(t.next_prime_after(1).unwrap(), 2);
        assert_eq!(t.next_prime_after(6).unwrap(), 7);
        assert_eq!(t.next_prime_after(7).unwrap(), 11);
    }

    #[test]
    fn nth_prime_and_count_are_inverse_consistent() {
        let t = PrimeTable::with_default_ceiling();
        for k in 1..=200 {
            let p = t.nth_prime(k).unwrap();
            assert_eq!(t.prime_count(p).unwrap(), k);
        }
    }

    #[test]
    fn factorize_examples() {
        let t = PrimeTable::with_default_ceiling();
        assert!(t.factorize_u64(1).unwrap().factors().is_empty());
        let f12 = t.factorize_u64(12).unwrap();
        assert_eq!(f12, [(2, 2), (3, 1)].into_iter().collect());
        let f2310 = t.factorize_u64(2310).unwrap();
        assert_eq!(
            f2310,
            [(2, 1), (3, 1), (5, 1), (7, 1), (11, 1)].into_iter().collect()
        );
        assert_eq!(t.factorize_u64(0), Err(Error::FactorZero));
    }

    #[test]
    fn factorize_reconstructs() {
        let t = PrimeTable::with_default_ceiling();
        for v in 2u64..=10_000 {
            assert_eq!(t.factorize_u64(v).unwrap().value(), BigUint::from(v));
        }
    }

    #[test]
    fn factorize_biguint_beyond_u64() {
        let t = PrimeTable::with_default_ceiling();
        // 2^70 * 3^5
        let v = BigUint::from(3u64).pow(5) << 70;
        let f = t.factorize(&v).unwrap();
        assert_eq!(f, [(2, 70), (3, 5)].into_iter().collect());
        assert_eq!(f.value(), v);
    }

    #[test]
    fn omega_counts() {
        let t = PrimeTable::with_default_ceiling();
        let empty = Factorization::default();
        assert_eq!(empty.distinct_prime_count(), 0);
        assert_eq!(empty.total_prime_count(), 0);
        let f12 = t.factorize_u64(12).unwrap();
        assert_eq!(f12.distinct_prime_count(), 2);
        assert_eq!(f12.total_prime_count(), 3);
        let f210 = t.factorize_u64(210).unwrap();
        assert_eq!(f210.distinct_prime_count(), 4);
        assert_eq!(f210.total_prime_count(), 4);
    }

    #[test]
    fn omega_is_completely_additive_sample() {
        let t = PrimeTable::with_default_ceiling();
        for a in 1u64..=60 {
            for b in 1u64..=60 {
                let lhs = t.factorize_u64(a * b).unwrap().total_prime_count();
                let rhs = t.factorize_u64(a).unwrap().total_prime_count()
                    + t.factorize_u64(b).unwrap().total_prime_count();
                assert_eq!(lhs, rhs, "a={a} b={b}");
                let wl = t.factorize_u64(a * b).unwrap().distinct_prime_count();
                let wr = t.factorize_u64(a).unwrap().distinct_prime_count()
                    + t.factorize_u64(b).unwrap().distinct_prime_count();
                assert!(wl <= wr, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn ceiling_is_enforced() {
        let t = PrimeTable::new(100);
        assert_eq!(t.nth_prime(25).unwrap(), 97);
        match t.nth_prime(26) {
            Err(Error::SieveCeiling { ceiling, .. }) => assert_eq!(ceiling, 100),
            other => panic!("expected ceiling error, got {other:?}"),
        }
        assert!(matches!(
            t.prime_count(5000),
            Err(Error::SieveCeiling { .. })
        ));
    }

    #[test]
    fn concurrent_queries_agree() {
        let t = std::sync::Arc::new(PrimeTable::with_default_ceiling());
        let handles: Vec<_> = (0..8)
            .map(|i| {
                let t = t.clone();
                std::thread::spawn(move || {
                    let k = 5_000 + (i % 3) * 1_000;
                    t.nth_prime(k).unwrap()
                })
            })
            .collect();
        let results: Vec<u64> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, r) in results.iter().enumerate() {
            let k = 5_000 + (i as u64 % 3) * 1_000;
            assert_eq!(*r, t.nth_prime(k).unwrap());
        }
    }

    #[test]
    fn trial_division_primality() {
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(97));
        assert!(!is_prime_u64(91));
        let t = PrimeTable::with_default_ceiling();
        for v in 0..500 {
            assert_eq!(t.is_prime(v).unwrap(), is_prime_u64(v), "v={v}");
        }
    }
}
