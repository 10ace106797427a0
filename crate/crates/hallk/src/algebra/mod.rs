//! The graded algebra of generator words: free multiplication, the oriented
//! rewrite system that produces normal forms, and the bracket calculus built
//! on top of it.

mod bracket;
mod element;
mod reduce;
mod rules;
mod symbol;

pub use bracket::{pbw_expand, q_bracket, verify_identity, Verification};
pub use element::{AlgElement, Grade, Word};
pub use reduce::{normal_form, ReduceOptions, Reduction, Schedule, DEFAULT_MAX_STEPS};
pub(crate) use rules::linear_run;
pub use rules::{measure, pair_is_terminal, rewrite_pair, R4Mode};
pub use symbol::GenSymbol;

use thiserror::Error;

use crate::quiver::QuiverError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("elements live over different quivers")]
    QuiverMismatch,
    #[error("grade mismatch: {lhs} vs {rhs}")]
    GradeMismatch { lhs: String, rhs: String },
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("reduction exceeded the step limit {limit}")]
    StepLimit { limit: u64 },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}
