//! Hecke algebras with unequal parameters over ℤ[A], standard and
//! Kazhdan–Lusztig style bases, Bott–Samelson products and graded ranks of
//! morphism spaces between Bott–Samelson objects.

mod algebra;
mod group_algebra;
mod hom;
mod serial;

pub use algebra::{HeckeAlgebra, HeckeElement, ParameterMap};
pub use group_algebra::GroupAlgebraElement;
pub use hom::{hom_graded_rank, rescaled_generators, RescaledReport};
pub use serial::{hecke_from_json, hecke_to_json};

use thiserror::Error;

use crate::coxeter::CoxeterError;
use crate::grading::GradingError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeckeError {
    #[error("parameters do not match: {0}")]
    ParameterMismatch(String),
    #[error("bar involution is incompatible with the parameters: {0}")]
    BarIncompatible(String),
    #[error("grading has no bar involution")]
    NoBarInvolution,
    #[error("vertex ({s},{t}) has nonzero degree, light leaves are not homogeneous")]
    VertexDegree { s: usize, t: usize },
    #[error("the pair generates an infinite dihedral group")]
    InfiniteOrder,
    #[error("malformed element: {0}")]
    Parse(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Grading(#[from] GradingError),
}
