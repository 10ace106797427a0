//! Exact arithmetic in ℤ[q^{±1}, t^{±1}] and in rational-character fields over
//! the fixed variable universe q, t, r1, r2, x1, x2.

mod laurent;
mod poly;
mod ratchar;

pub use laurent::LaurentQT;
pub use num_bigint::BigInt;
pub use poly::{Exps, MPoly, Var, VARS};
pub use ratchar::RationalChar;

use thiserror::Error;

/// Truncation order used by expansion-based cross-checks when the caller
/// does not choose one.
pub const DEFAULT_SERIES_ORDER: i64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator's lowest-grade part is not a unit monomial; series expansion undefined")]
    NotExpandable,
    #[error("exact division failed (internal arithmetic bug)")]
    InexactDivision,
}
