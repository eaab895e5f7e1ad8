//! Presented abelian grading groups, grading data for the generating
//! morphisms, and the criteria for a grading to extend.

mod group;
mod realization;
pub mod smith;
mod spec;
mod validate;

pub use group::{GradingGroup, GroupElement};
pub use realization::{
    class_index, equivalence_relation, is_two_prime_power, CartanSpec, CoxeterMatrix, EquivalenceKind,
};
pub use spec::{
    build_bigrading, build_lambda, build_p_adapted, build_universal_grading, BarInvolution, GradingSpec,
};
pub use validate::{validate, Clause, ClauseResult, Status, ValidationReport, H3_NOTE};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid Coxeter matrix: {0}")]
    InvalidCoxeterMatrix(String),
    #[error("invalid realization at ({s},{t}): {reason}")]
    InvalidRealization { s: usize, t: usize, reason: String },
    #[error("characteristic {0} is neither 0 nor prime, or scalars disagree with it")]
    BadCharacteristic(u64),
    #[error("a Cartan matrix is required for this relation")]
    MissingCartan,
    #[error("row vector does not vanish on the relations")]
    NotAHomomorphism,
    #[error("invalid bar involution: {0}")]
    InvalidBar(String),
    #[error("m is infinite for ({s},{t})")]
    InfiniteOrder { s: usize, t: usize },
    #[error("search space too large (rank ≤ 4 and bound ≤ 10 required)")]
    SearchTooLarge,
}
