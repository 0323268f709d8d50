//! Exact arithmetic kernels: arbitrary-precision rationals, univariate
//! polynomial algebra over Q and over prime fields, factorization over Q,
//! and rational reconstruction.

mod factor;
mod int;
mod parse;
mod polymod;
mod polyq;
mod ratrec;

pub use factor::{factor_mod_p, factor_over_q, hensel_lift, is_irreducible_mod_p};
pub use int::{factor_int, is_prime_int, prime_iter, Primes};
pub use parse::{parse_curve_coeffs, parse_point, parse_poly_expr};
pub use polymod::{invm, mulm, PolyModP};
pub use polyq::{PolyQ, PolyZ};
pub use ratrec::rational_reconstruction;

use num_bigint::BigInt;
use thiserror::Error;

/// Exact rational number; numerator and denominator are arbitrary-precision
/// integers kept coprime with positive denominator by construction.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the factorization cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("factors are not coprime modulo {p}")]
    NotCoprime { p: BigInt },
    #[error("Zassenhaus recombination exceeded the subset cap of 2^20")]
    RecombinationCapExceeded,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Degree cap for `factor_over_q`.
pub const FACTOR_DEGREE_CAP: usize = 64;

/// Subset cap for Zassenhaus recombination.
pub const RECOMBINATION_SUBSET_CAP: u64 = 1 << 20;

pub(crate) fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}
