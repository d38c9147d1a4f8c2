//! Exact computation for iterated factorial-family products: generalized
//! superfactorials and hyperfactorials with figurate-number explicit
//! formulas, generalized primorials with their prime-factor counting
//! functions, modular closed forms, and extended Legendre valuations.
//!
//! Values are carried as [`FactoredNat`] prime-exponent maps, so quantities
//! with tens of thousands of digits stay cheap; positional form is only
//! produced on request and under a digit budget.

pub mod error;
pub mod factored;
pub mod figurate;
pub mod genfact;
pub mod modular;
pub mod primes;
pub mod primorial;
pub mod valuation;

pub use error::{Error, ErrorClass, Result};
pub use factored::{FactoredNat, DEFAULT_DIGIT_BUDGET};
pub use genfact::{EvalStrategy, Family};
pub use num_bigint::BigUint;
pub use primes::{Factorization, PrimeTable, DEFAULT_SIEVE_CEILING};
