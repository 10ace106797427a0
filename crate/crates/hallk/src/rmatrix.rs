//! Degree bookkeeping for the renormalized intertwiners between generator
//! classes. The degree Lambda(M, N) is defined by an order of vanishing
//! that we do not compute geometrically; this module stores the closed-form
//! families that are actually proven and refuses to guess anything else.

use std::fmt;

use thiserror::Error;

use crate::algebra::{linear_run, GenSymbol};
use crate::quiver::Quiver;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RmatrixError {
    #[error("no proven degree entry for the pair ({a}, {b})")]
    UnknownPair { a: String, b: String },
    #[error("no proven reality statement for {0}")]
    Uncovered(String),
}

fn unknown(a: &GenSymbol, b: &GenSymbol) -> RmatrixError {
    RmatrixError::UnknownPair {
        a: a.to_string(),
        b: b.to_string(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    Proven,
    Assumed,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Proven => "proven",
            Provenance::Assumed => "assumed",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LambdaEntry {
    pub value: i64,
    pub provenance: Provenance,
}

/// The tabulated degree for a pair of generator symbols, with provenance.
/// Covered families: two singles at one loop-free vertex, singles at
/// adjacent vertices along an arrow, and a two-vertex interval against the
/// single at its left endpoint. The families are infinite in the loop
/// index, so the table is realized as a total function rather than a map.
pub fn lambda_entry(
    quiver: &Quiver,
    g1: &GenSymbol,
    g2: &GenSymbol,
) -> Result<LambdaEntry, RmatrixError> {
    let proven = |value| {
        Ok(LambdaEntry {
            value,
            provenance: Provenance::Proven,
        })
    };
    if let (Some((i, l)), Some((j, lp))) = (g1.as_single(), g2.as_single()) {
        if i == j && quiver.contains_vertex(i) && quiver.loops_at(i) == 0 {
            return proven((2 * (lp - l)).max(-2));
        }
        if (j == i + 1 && linear_run(quiver, i, j)) || (i == j + 1 && linear_run(quiver, j, i)) {
            return proven(1);
        }
    }
    if let (Some((i, _)), Some((j, _))) = (g1.as_box(), g2.as_single()) {
        if i == j && linear_run(quiver, i, i + 1) {
            return proven(-1);
        }
    }
    if let (Some((i, _)), Some((j, _))) = (g1.as_single(), g2.as_box()) {
        if i == j && linear_run(quiver, j, j + 1) {
            return proven(1);
        }
    }
    Err(unknown(g1, g2))
}

pub fn lambda_base(quiver: &Quiver, g1: &GenSymbol, g2: &GenSymbol) -> Result<i64, RmatrixError> {
    lambda_entry(quiver, g1, g2).map(|e| e.value)
}

/// Sum of pairwise degrees against each factor. The degree of a product is
/// bounded above by this value; nothing sharper is claimed.
pub fn lambda_upper_bound(
    quiver: &Quiver,
    m: &GenSymbol,
    factors: &[GenSymbol],
) -> Result<i64, RmatrixError> {
    factors.iter().map(|n| lambda_base(quiver, m, n)).sum()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DoubleCheck {
    pub sum: i64,
    pub r_squared_nonzero: bool,
}

/// The symmetrized degree and the criterion it encodes: the double
/// intertwiner is nonzero exactly when the symmetrized degree vanishes.
/// This is a statement about the tabulated integers, not about morphisms.
pub fn double_check(
    quiver: &Quiver,
    g1: &GenSymbol,
    g2: &GenSymbol,
) -> Result<DoubleCheck, RmatrixError> {
    let sum = lambda_base(quiver, g1, g2)? + lambda_base(quiver, g2, g1)?;
    Ok(DoubleCheck {
        sum,
        r_squared_nonzero: sum == 0,
    })
}

/// Whether the symbol is a member of the family proven to be real (self-
/// intertwiner degree zero). Only single-vertex generators at loop-free
/// vertices are covered.
pub fn real_flag(quiver: &Quiver, g: &GenSymbol) -> Result<bool, RmatrixError> {
    match g.as_single() {
        Some((i, _)) if quiver.contains_vertex(i) && quiver.loops_at(i) == 0 => Ok(true),
        _ => Err(RmatrixError::Uncovered(g.to_string())),
    }
}
