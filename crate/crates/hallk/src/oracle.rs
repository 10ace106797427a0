//! Independent equivariant-character models used to certify the rewrite
//! rules: a rank-2 localization model on one vertex (variables x1, x2) and a
//! unit-dimension-vector model on two vertices (variables r1, r2). Every
//! rule coefficient the algebra module uses can be checked against exact
//! rational-function identities here, computed by a completely different
//! route.

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgElement, AlgebraError, GenSymbol};
use crate::coeff::{CoeffError, MPoly, RationalChar, Var};
use crate::quiver::Quiver;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("no character model covers grade {grade} on quiver {quiver}")]
    UncoveredGrade { quiver: String, grade: String },
    #[error("coefficient arithmetic failed: {0}")]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleModel {
    A1Rank2,
    A2Unit,
}

impl OracleModel {
    fn allowed_vars(&self) -> &'static [Var] {
        match self {
            OracleModel::A1Rank2 => &[Var::Q, Var::T, Var::X1, Var::X2],
            OracleModel::A2Unit => &[Var::Q, Var::T, Var::R1, Var::R2],
        }
    }
}

/// A character value tagged by the model it lives in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharClass {
    pub model: OracleModel,
    pub value: RationalChar,
}

impl CharClass {
    fn new(model: OracleModel, value: RationalChar) -> Self {
        let c = CharClass { model, value };
        debug_assert!(c.validate().is_ok());
        c
    }

    /// Variable-set discipline, plus symmetry for the rank-2 model.
    pub fn validate(&self) -> Result<(), String> {
        let allowed = self.model.allowed_vars();
        for v in self
            .value
            .num()
            .used_vars()
            .into_iter()
            .chain(self.value.den().used_vars())
        {
            if !allowed.contains(&v) {
                return Err(format!("variable {} escapes the model", v.name()));
            }
        }
        if self.model == OracleModel::A1Rank2 && self.value != self.value.swapped(Var::X1, Var::X2)
        {
            return Err("rank-2 class is not symmetric".into());
        }
        Ok(())
    }
}

fn qp(e: i64) -> RationalChar {
    RationalChar::var_pow(Var::Q, e)
}

fn rho_mon(l: i64, lp: i64) -> MPoly {
    MPoly::monomial([0, 0, l, lp, 0, 0], 1)
}

fn x_mon(a: i64, b: i64) -> MPoly {
    MPoly::monomial([0, 0, 0, 0, a, b], 1)
}

/// 1/(1 - q t^-1 r1 r2^-1): the unit-orbit ambient character, pinned by the
/// requirement that the class of the origin be exactly 1 under its Koszul
/// resolution.
pub fn a2_char_of_w() -> CharClass {
    let den = &MPoly::one() - &MPoly::monomial([1, -1, 1, -1, 0, 0], 1);
    CharClass::new(
        OracleModel::A2Unit,
        RationalChar::reduced(MPoly::one(), den).expect("denominator is nonzero"),
    )
}

/// Character of the ordered product f1*f2 at loop twist (l, lp).
pub fn a2_f1f2(l: i64, lp: i64) -> CharClass {
    // q^-1 * r1^l r2^lp * (1 - q t^-1 r1 r2^-1) * charW; the last two factors
    // cancel, which is itself the content of the origin resolution
    let koszul = &MPoly::one() - &MPoly::monomial([1, -1, 1, -1, 0, 0], 1);
    let v =
        &(&qp(-1) * &RationalChar::from_mpoly(&rho_mon(l, lp) * &koszul)) * &a2_char_of_w().value;
    CharClass::new(OracleModel::A2Unit, v)
}

/// Character of the reversed product f2*f1 at loop twist (l, lp).
pub fn a2_f2f1(l: i64, lp: i64) -> CharClass {
    let excess = &MPoly::one() - &MPoly::monomial([-1, -1, 1, -1, 0, 0], 1);
    let v = &RationalChar::from_mpoly(&rho_mon(l, lp) * &excess) * &a2_char_of_w().value;
    CharClass::new(OracleModel::A2Unit, v)
}

/// Character of the merged two-vertex generator at loop twist (l, lp).
pub fn a2_fbox(l: i64, lp: i64) -> CharClass {
    let v = &RationalChar::from_mpoly(rho_mon(l, lp)) * &a2_char_of_w().value;
    CharClass::new(OracleModel::A2Unit, v)
}

/// Pushforward character along the rank-2 Springer resolution, by summation
/// over the two torus fixed points: the monomial carries the tautological
/// weights V^l (C^2/V)^lp, and each fixed point contributes two geometric
/// denominators, one with loop weight q^-2 and one from the base direction.
pub fn a1_push(l: i64, lp: i64) -> CharClass {
    // fixed point V = <e1>: V -> x1, C^2/V -> x2
    let fiber = &MPoly::one() - &MPoly::monomial([-2, 0, 0, 0, -1, 1], 1);
    let tangent = &MPoly::one() - &x_mon(1, -1);
    let term =
        RationalChar::reduced(x_mon(l, lp), &fiber * &tangent).expect("denominator is nonzero");
    CharClass::new(
        OracleModel::A1Rank2,
        term.symmetrized_under_swap(Var::X1, Var::X2),
    )
}

/// Weyl character of the dominant weight u*w1 + v*w2 times the shift factor
/// -q; zero when u is negative.
pub fn a1_char_p(u: i64, v: i64) -> CharClass {
    if u < 0 {
        return CharClass::new(OracleModel::A1Rank2, RationalChar::zero());
    }
    let mut h = MPoly::zero();
    for k in 0..=u {
        h = &h + &x_mon(k, u - k);
    }
    let s = &x_mon(v, v) * &h;
    let minus_q = RationalChar::monomial([1, 0, 0, 0, 0, 0], -1);
    CharClass::new(
        OracleModel::A1Rank2,
        &RationalChar::from_mpoly(s) * &minus_q,
    )
}

/// Functions on the rank-2 nilpotent cone, as an exact rational character.
pub fn a1_char_cone() -> RationalChar {
    let num = &MPoly::one() - &MPoly::var_pow(Var::Q, -4);
    let d1 = &MPoly::one() - &MPoly::var_pow(Var::Q, -2);
    let d2 = &MPoly::one() - &MPoly::monomial([-2, 0, 0, 0, -1, 1], 1);
    let d3 = &MPoly::one() - &MPoly::monomial([-2, 0, 0, 0, 1, -1], 1);
    RationalChar::reduced(num, &(&d1 * &d2) * &d3).expect("denominator is nonzero")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OracleIdentity {
    Ses1,
    Ses2,
    Ses3,
    Ses4,
    Reality,
    Bracket,
}

impl OracleIdentity {
    pub fn parse(text: &str) -> Option<Self> {
        Some(match text {
            "ses1" => OracleIdentity::Ses1,
            "ses2" => OracleIdentity::Ses2,
            "ses3" => OracleIdentity::Ses3,
            "ses4" => OracleIdentity::Ses4,
            "reality" => OracleIdentity::Reality,
            "bracket" => OracleIdentity::Bracket,
            _ => return None,
        })
    }
}

impl fmt::Display for OracleIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleIdentity::Ses1 => "ses1",
            OracleIdentity::Ses2 => "ses2",
            OracleIdentity::Ses3 => "ses3",
            OracleIdentity::Ses4 => "ses4",
            OracleIdentity::Reality => "reality",
            OracleIdentity::Bracket => "bracket",
        })
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub identity: OracleIdentity,
    pub params: Vec<(&'static str, i64)>,
    pub holds: bool,
    pub lhs: RationalChar,
    pub rhs: RationalChar,
}

/// Evaluates both sides of a named identity exactly.
pub fn verify(identity: OracleIdentity, l: i64, lp: i64) -> IdentityReport {
    let (params, lhs, rhs): (Vec<(&str, i64)>, RationalChar, RationalChar) = match identity {
        OracleIdentity::Ses1 => (
            vec![("l", l), ("lp", lp)],
            a1_push(l, lp + 1).value,
            &(&qp(1) * &a1_char_p(lp - l - 1, l + 1).value) + &(&qp(2) * &a1_push(l + 1, lp).value),
        ),
        OracleIdentity::Ses2 => (
            vec![("l", l), ("lp", lp)],
            a1_push(l + 1, lp).value,
            &(&qp(-2) * &a1_push(l, lp + 1).value)
                + &(&qp(-1) * &a1_char_p(l - lp - 1, lp + 1).value),
        ),
        OracleIdentity::Ses3 => (
            vec![("l", l), ("lp", lp)],
            a2_f1f2(l, lp).value,
            &(&qp(-1) * &a2_fbox(l, lp).value)
                - &(&RationalChar::var_pow(Var::T, -1) * &a2_fbox(l + 1, lp - 1).value),
        ),
        OracleIdentity::Ses4 => (
            vec![("l", l), ("lp", lp)],
            a2_f2f1(l, lp).value,
            &a2_fbox(l, lp).value
                - &(&(&qp(-1) * &RationalChar::var_pow(Var::T, -1))
                    * &a2_fbox(l + 1, lp - 1).value),
        ),
        OracleIdentity::Reality => (
            vec![("l", l)],
            a1_push(l, l).value,
            &RationalChar::from_mpoly(x_mon(l, l)) * &a1_char_cone(),
        ),
        OracleIdentity::Bracket => (
            vec![("l", l), ("lp", lp)],
            &a2_f1f2(l, lp).value - &(&qp(1) * &a2_f2f1(l, lp).value),
            &(&qp(-1) - &qp(1)) * &a2_fbox(l, lp).value,
        ),
    };
    let holds = lhs == rhs;
    IdentityReport {
        identity,
        params,
        holds,
        lhs,
        rhs,
    }
}

/// Maps an element on a covered quiver-and-grade combination to its exact
/// character: single-vertex dimension 2 uses the rank-2 model, the unit
/// dimension vector on two vertices uses the two-variable model, and the
/// empty grade maps to constants.
pub fn cross_check(elem: &AlgElement) -> Result<RationalChar, OracleError> {
    let uncovered = || OracleError::UncoveredGrade {
        quiver: elem.quiver().to_string(),
        grade: elem
            .grade()
            .map(|g| g.to_string())
            .unwrap_or_else(|| "none".into()),
    };
    if elem.is_zero() {
        return Ok(RationalChar::zero());
    }
    let grade = elem.grade().expect("nonzero element");
    let quiver = elem.quiver();
    let mut total = RationalChar::zero();
    for (word, coeff) in elem.terms() {
        let char_of_word: RationalChar = if grade.dims.is_zero() {
            RationalChar::one()
        } else if *quiver == Quiver::type_a(1) && grade.dims.entries() == [2] {
            a1_word_char(word).ok_or_else(uncovered)?
        } else if *quiver == Quiver::type_a(2) && grade.dims.entries() == [1, 1] {
            a2_word_char(word).ok_or_else(uncovered)?
        } else {
            return Err(uncovered());
        };
        total = &total + &(&RationalChar::from_laurent(coeff) * &char_of_word);
    }
    Ok(total)
}

/// Dictionary for the rank-2 model: a product of two single-vertex
/// generators is a resolution pushforward up to the product shift -q^-1; a
/// weight-two simple is its honest Weyl character.
fn a1_word_char(word: &[GenSymbol]) -> Option<RationalChar> {
    match word {
        [p2 @ GenSymbol::P2 { .. }] => {
            let (u, v) = p2.omega_coords().expect("P2 symbol");
            // strip the -q shift from the resolution convention
            Some(&(&qp(-1) * &RationalChar::from_int(-1)) * &a1_char_p(u, v).value)
        }
        [a, b] => {
            let (_, la) = a.as_single()?;
            let (_, lb) = b.as_single()?;
            Some(&(&qp(-1) * &RationalChar::from_int(-1)) * &a1_push(la, lb).value)
        }
        _ => None,
    }
}

fn a2_word_char(word: &[GenSymbol]) -> Option<RationalChar> {
    match word {
        [boxed] => {
            let (i, (l, lp)) = boxed.as_box()?;
            (i == 1).then(|| a2_fbox(l, lp).value)
        }
        [a, b] => {
            let (va, la) = a.as_single()?;
            let (vb, lb) = b.as_single()?;
            match (va, vb) {
                (1, 2) => Some(a2_f1f2(la, lb).value),
                (2, 1) => Some(a2_f2f1(lb, la).value),
                _ => None,
            }
        }
        _ => None,
    }
}
