//! Exact scalars: rationals, prime fields, polynomials and rational
//! functions in δ, quantum integers and quantum binomials.

mod coeff;
mod poly;
mod quantum;
mod rational_fn;
mod scalar;

pub use coeff::Coefficient;
pub use poly::DeltaPoly;
pub use quantum::{
    binom_at_zero_formula, binom_spec_table, quantum_binom, quantum_int, quantum_int_at_zero,
};
pub use rational_fn::DeltaRational;
pub use scalar::{is_prime, parse_rational, reduce_poly_mod_p, reduce_rational_mod_p, Fp, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("denominator divisible by {p}")]
    NonIntegralAtP { p: u64 },
    #[error("pole at δ = 0")]
    PoleAtZero,
    #[error("characteristic mismatch: {left} vs {right}")]
    CharacteristicMismatch { left: u64, right: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("quotient is not a polynomial: {0}")]
    NonPolynomialQuotient(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
}
