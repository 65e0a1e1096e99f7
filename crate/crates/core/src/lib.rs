//! Exact combinatorics of Lee balls and regular lattice sets.
//!
//! The crate computes the cardinality invariants `k(n,e)` and `p_k(n,e)` of
//! Lee balls (and of arbitrary regular subsets of `Z^n`) in exact
//! arbitrary-precision arithmetic, expands the associated `Q`-polynomials in
//! the power-sum basis, and certifies the non-existence of linear perfect Lee
//! codes and lattice tilings through congruence conditions (the Zhang-Ge
//! condition and its odd-prime generalization).
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod criteria;
pub mod exactarith;
pub mod leeball;
pub mod partitions;
pub mod qpoly;

pub use num_bigint::BigInt;

/// All integer quantities in this crate are arbitrary-precision.
pub type Integer = BigInt;

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("enumeration would exceed the configured cap of {cap} points")]
    EnumerationCap { cap: usize },
    #[error("point set is not regular: {0}")]
    NonRegular(String),
    #[error("interpolation self-check failed: {0}")]
    InterpolationCheck(String),
    #[error("modulus {modulus} is not a period: verdicts disagree at residue {residue}")]
    NonPeriodicModulus { modulus: u64, residue: u64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
