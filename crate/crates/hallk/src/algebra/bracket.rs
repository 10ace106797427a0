//! Bracket calculus: twisted commutators, the iterated-bracket expansion of
//! interval generators, and the equality prover built from normal forms.

use super::element::AlgElement;
use super::reduce::{normal_form, ReduceOptions, Reduction};
use super::AlgebraError;
use crate::coeff::LaurentQT;
use crate::quiver::Quiver;

/// x*y - q^r * y*x.
pub fn q_bracket(x: &AlgElement, y: &AlgElement, r: i64) -> Result<AlgElement, AlgebraError> {
    let xy = x.mul_free(y)?;
    let yx = y.mul_free(x)?.scale(&LaurentQT::q_pow(r));
    xy.sub(&yx)
}

/// The tower [...[f_{lo}, f_{lo+1}]_q, ..., f_{hi}]_q over single-vertex
/// generators with the given loop indices; its normal form is the interval
/// generator up to the factor (q^-1 - q)^(hi - lo).
pub fn pbw_expand(
    quiver: &Quiver,
    lo: usize,
    hi: usize,
    loops: &[i64],
) -> Result<AlgElement, AlgebraError> {
    if lo == 0 || hi < lo || loops.len() != hi - lo + 1 {
        return Err(AlgebraError::InvalidSymbol(format!(
            "interval [{lo},{hi}] with {} loop indices",
            loops.len()
        )));
    }
    let mut acc = AlgElement::single(quiver.clone(), lo, loops[0])?;
    for (offset, &l) in loops.iter().enumerate().skip(1) {
        let f = AlgElement::single(quiver.clone(), lo + offset, l)?;
        acc = q_bracket(&acc, &f, 1)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct Verification {
    /// Normal form of the difference vanished. When false the elements may
    /// still be equal: the prover is sound, not complete.
    pub proved: bool,
    pub normal_form: AlgElement,
    /// Rewrite trace of the difference, one line per rule application.
    pub certificate: Vec<String>,
    pub unreduced: bool,
    pub steps: u64,
}

/// Sound equality check: reduces lhs - rhs and reports whether it reached
/// zero, with the rewrite trace as certificate.
pub fn verify_identity(
    lhs: &AlgElement,
    rhs: &AlgElement,
    opts: &ReduceOptions,
) -> Result<Verification, AlgebraError> {
    let diff = lhs.sub(rhs)?;
    let opts = ReduceOptions {
        trace: true,
        ..opts.clone()
    };
    let Reduction {
        result,
        unreduced,
        steps,
        trace,
    } = normal_form(&diff, &opts)?;
    Ok(Verification {
        proved: result.is_zero(),
        normal_form: result,
        certificate: trace,
        unreduced,
        steps,
    })
}
