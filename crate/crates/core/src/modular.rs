//! Modular arithmetic of factorials and superfactorials against figurate
//! moduli: the mixed-radix remainder decomposition, the Wilson-variant
//! residue, the closed form for x! modulo the x-th triangular number, and
//! the floor-sum divisibility criterion for higher degrees with its
//! factored-space counterpart.
//!
//! Every floor here is an exact integer division; no floating point.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factored::FactoredNat;
use crate::figurate::polytopic;
use crate::genfact::sf_explicit;
use crate::primes::PrimeTable;

/// A remainder together with the modulus it was taken against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueResult {
    pub value: BigUint,
    pub modulus: BigUint,
}

/// d mod ab assembled from the pieces mod a and mod b:
/// d mod a + a * (floor(d/a) mod b).
pub fn mod_decompose(d: &BigUint, a: &BigUint, b: &BigUint) -> ResidueResult {
    assert!(!a.is_zero() && !b.is_zero(), "moduli must be positive");
    let value = d % a + a * ((d / a) % b);
    ResidueResult {
        value,
        modulus: a * b,
    }
}

/// x! mod m, reducing after every multiplication; x! itself is never built.
pub fn factorial_mod(x: u64, modulus: u64) -> u64 {
    assert!(modulus > 0, "modulus must be positive");
    let m = modulus as u128;
    let mut acc = 1u128 % m;
    for k in 2..=x {
        acc = acc * (k as u128) % m;
    }
    acc as u64
}

/// (p-2)! mod p, which is 1 for every prime p. For p = 2 the product is
/// empty and 0! = 1 applies.
pub fn wilson_variant(primes: &PrimeTable, p: u64) -> Result<u64> {
    if !primes.is_prime(p)? {
        return Err(Error::NotPrime(p));
    }
    Ok(factorial_mod(p - 2, p))
}

/// Closed form for x! modulo the x-th triangular number:
/// x * floor(x / (q - 1)) where q is the smallest prime above x.
/// Evaluates to x exactly when x + 1 is prime and to 0 otherwise.
pub fn factorial_mod_triangular(primes: &PrimeTable, x: u64) -> Result<u64> {
    if x < 2 {
        return Err(Error::Domain("the closed form is stated for x >= 2"));
    }
    let q = primes.next_prime_after(x)?;
    Ok(x * (x / (q - 1)))
}

/// Floor-sum divisibility test: the degree-n superfactorial of x is
/// divisible by the degree-(n+2) polytopic number at x exactly when every
/// term floor(x/(q-i)) * floor((q-i)/x) vanishes, q being the smallest
/// prime above x and i running over 1..=n+1. Only stated for x > n + 1.
pub fn sf_divisibility_criterion(primes: &PrimeTable, n: u32, x: u64) -> Result<bool> {
    if x <= n as u64 + 1 {
        return Err(Error::Domain("the criterion is stated for x > n + 1"));
    }
    let q = primes.next_prime_after(x)?;
    let mut sum = 0u64;
    for i in 1..=(n as u64 + 1) {
        let d = q - i; // q > x >= n + 2 keeps this positive
        sum += (x / d) * (d / x);
    }
    Ok(sum == 0)
}

/// The same divisibility decided in factored space: factor the polytopic
/// modulus and check exponent dominance against the superfactorial.
pub fn sf_divisibility_direct(primes: &PrimeTable, n: u32, x: u64) -> Result<bool> {
    if x == 0 {
        return Err(Error::Domain("arguments start at 1"));
    }
    let modulus =
        FactoredNat::from_factorization(&primes.factorize(&polytopic(n as u64 + 2, x)?)?);
    let sf = sf_explicit(primes, n, x)?;
    Ok(modulus.divides(&sf))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> PrimeTable {
        PrimeTable::with_default_ceiling()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn decompose_examples() {
        let r = mod_decompose(&big(0), &big(3), &big(4));
        assert_eq!((r.value, r.modulus), (big(0), big(12)));
        let r = mod_decompose(&big(17), &big(3), &big(4));
        assert_eq!((r.value, r.modulus), (big(5), big(12)));
        let r = mod_decompose(&big(100), &big(7), &big(5));
        assert_eq!((r.value, r.modulus), (big(30), big(35)));
    }

    #[test]
    fn decompose_matches_direct_remainder() {
        for d in 0u64..300 {
            for (a, b) in [(2u64, 3u64), (3, 4), (7, 5), (10, 10), (1, 9)] {
                let r = mod_decompose(&big(d), &big(a), &big(b));
                assert_eq!(r.value, big(d % (a * b)), "d={d} a={a} b={b}");
            }
        }
    }

    #[test]
    fn wilson_examples() {
        let t = table();
        assert_eq!(wilson_variant(&t, 2).unwrap(), 1);
        assert_eq!(wilson_variant(&t, 7).unwrap(), 1);
        assert_eq!(wilson_variant(&t, 13).unwrap(), 1);
        assert_eq!(wilson_variant(&t, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn triangular_closed_form_examples() {
        let t = table();
        assert_eq!(factorial_mod_triangular(&t, 4).unwrap(), 4);
        assert_eq!(factorial_mod_triangular(&t, 5).unwrap(), 0);
        assert_eq!(factorial_mod_triangular(&t, 6).unwrap(), 6);
        assert!(factorial_mod_triangular(&t, 1).is_err());
    }

    #[test]
    fn triangular_closed_form_matches_oracle() {
        let t = table();
        for x in 2..=300u64 {
            let tri = x * (x + 1) / 2;
            assert_eq!(
                factorial_mod_triangular(&t, x).unwrap(),
                factorial_mod(x, tri),
                "x={x}"
            );
        }
    }

    #[test]
    fn triangular_closed_form_is_piecewise() {
        let t = table();
        for x in 2..=300u64 {
            let v = factorial_mod_triangular(&t, x).unwrap();
            if t.is_prime(x + 1).unwrap() {
                assert_eq!(v, x);
            } else {
                assert_eq!(v, 0);
            }
        }
    }

    #[test]
    fn criterion_examples() {
        let t = table();
        assert!(!sf_divisibility_criterion(&t, 1, 6).unwrap());
        assert!(sf_divisibility_criterion(&t, 1, 7).unwrap());
        assert!(!sf_divisibility_criterion(&t, 0, 4).unwrap());
        assert!(sf_divisibility_criterion(&t, 1, 2).is_err());
    }

    #[test]
    fn direct_examples() {
        let t = table();
        assert!(sf_divisibility_direct(&t, 1, 7).unwrap());
        assert!(!sf_divisibility_direct(&t, 1, 6).unwrap());
        assert!(sf_divisibility_direct(&t, 0, 3).unwrap());
    }

    #[test]
    fn criterion_matches_direct_on_small_grid() {
        let t = table();
        for n in 0..=2u32 {
            for x in (n as u64 + 2)..=30 {
                assert_eq!(
                    sf_divisibility_criterion(&t, n, x).unwrap(),
                    sf_divisibility_direct(&t, n, x).unwrap(),
                    "n={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn factorial_mod_reduces_every_step() {
        // large-ish modulus close to u64::MAX would overflow without the
        // u128 intermediates
        let m = u64::MAX - 58;
        let v = factorial_mod(25, m);
        assert!(v < m);
        assert_eq!(factorial_mod(0, 7), 1);
        assert_eq!(factorial_mod(1, 7), 1);
        assert_eq!(factorial_mod(5, 7), 120 % 7);
    }
}
