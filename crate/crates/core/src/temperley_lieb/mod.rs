//! Temperley–Lieb diagrams and algebras, Jones–Wenzl projectors at δ = 0,
//! two-colour degree functions and related checks.

mod checks;
mod degree;
mod element;
mod jw;
mod matching;
mod ops;
mod rescale;
mod serial;
mod trunc;
mod two_step;

pub use checks::{
    check_jw_homogeneity, coeff_ratio_check, y_idempotent_check, CornerReport, HomogeneityReport, RatioReport,
};
pub use degree::{degree, degree_single_difference, TwoColorDegreeData};
pub use element::TLElement;
pub use jw::{jw_at_zero, jw_at_zero_with, jw_generic, jw_numerator, JwNumerator};
pub use matching::{enumerate_matchings, ArcCounts, Matching, Point};
pub use ops::{merge_caps, move_cap, rainbow_form};
pub use rescale::{frobenius_character, theta_rescale, Character};
pub use serial::{element_from_json, element_to_json, SerialTerm};
pub use trunc::Trunc;
pub use two_step::{build_e, jw_two_step, partial_trace_scalars, two_step_stages, TwoStep};

use thiserror::Error;

use crate::arith::ArithError;
use crate::grading::GradingError;

/// Largest strand count accepted by enumeration and projector routines.
pub const MAX_STRANDS: usize = 13;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TlError {
    #[error("odd number of boundary points")]
    OddBoundary,
    #[error("boundary profiles do not match")]
    ProfileMismatch,
    #[error("operation needs equal top and bottom point counts")]
    NotSquareProfile,
    #[error("the required local configuration is absent")]
    ConfigurationAbsent,
    #[error("projector has a pole at δ = 0")]
    PoleAtZero,
    #[error("projector is not defined in characteristic {p}")]
    NonIntegralAtP { p: u64 },
    #[error("projector does not exist: {0}")]
    ProjectorMissing(String),
    #[error("{n} strands exceeds the limit of {MAX_STRANDS}")]
    SizeLimit { n: usize },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("character is not a homomorphism: {0}")]
    ChiNotHomomorphism(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Grading(#[from] GradingError),
}

pub(crate) fn check_size(n: usize) -> Result<(), TlError> {
    if n > MAX_STRANDS {
        Err(TlError::SizeLimit { n })
    } else {
        Ok(())
    }
}
