use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed};

use super::symbol::GenSymbol;
use super::AlgebraError;
use crate::coeff::LaurentQT;
use crate::quiver::{DimVector, Quiver};

pub type Word = Vec<GenSymbol>;

/// Dimension vector plus total internal weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grade {
    pub dims: DimVector,
    pub weight: i64,
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.dims, self.weight)
    }
}

pub fn word_grade(quiver: &Quiver, word: &Word) -> Result<Grade, AlgebraError> {
    let mut dims = DimVector::zero(quiver.n_vertices());
    let mut weight = 0i64;
    for sym in word {
        sym.validate(quiver)?;
        dims = dims.add(&sym.dims(quiver.n_vertices()));
        weight += sym.weight();
    }
    Ok(Grade { dims, weight })
}

/// Homogeneous linear combination of words. The zero element is the unique
/// element with empty support and no grade.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgElement {
    quiver: Quiver,
    grade: Option<Grade>,
    support: BTreeMap<Word, LaurentQT>,
}

impl AlgElement {
    pub fn zero(quiver: Quiver) -> Self {
        AlgElement {
            quiver,
            grade: None,
            support: BTreeMap::new(),
        }
    }

    pub fn unit(quiver: Quiver) -> Self {
        let grade = Grade {
            dims: DimVector::zero(quiver.n_vertices()),
            weight: 0,
        };
        let mut support = BTreeMap::new();
        support.insert(Vec::new(), LaurentQT::one());
        AlgElement {
            quiver,
            grade: Some(grade),
            support,
        }
    }

    pub fn generator(quiver: Quiver, sym: GenSymbol) -> Result<Self, AlgebraError> {
        Self::from_terms(quiver, [(vec![sym], LaurentQT::one())])
    }

    pub fn single(quiver: Quiver, vertex: usize, l: i64) -> Result<Self, AlgebraError> {
        Self::generator(quiver, GenSymbol::single(vertex, l))
    }

    /// Builds an element from raw terms, checking that all words share one
    /// grade. Unit symbols are stripped from words; zero coefficients are
    /// dropped.
    pub fn from_terms(
        quiver: Quiver,
        terms: impl IntoIterator<Item = (Word, LaurentQT)>,
    ) -> Result<Self, AlgebraError> {
        let mut grade: Option<Grade> = None;
        let mut support = BTreeMap::<Word, LaurentQT>::new();
        for (word, coeff) in terms {
            let word: Word = word.into_iter().filter(|s| *s != GenSymbol::Unit).collect();
            let g = word_grade(&quiver, &word)?;
            match &grade {
                None => grade = Some(g),
                Some(have) if *have == g => {}
                Some(have) => {
                    return Err(AlgebraError::GradeMismatch {
                        lhs: have.to_string(),
                        rhs: g.to_string(),
                    })
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let entry = support.entry(word).or_insert_with(LaurentQT::zero);
            *entry = &*entry + &coeff;
        }
        support.retain(|_, c| !c.is_zero());
        if support.is_empty() {
            return Ok(Self::zero(quiver));
        }
        Ok(AlgElement {
            quiver,
            grade,
            support,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn grade(&self) -> Option<&Grade> {
        self.grade.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn num_words(&self) -> usize {
        self.support.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &LaurentQT)> {
        self.support.iter()
    }

    pub fn coeff(&self, word: &Word) -> LaurentQT {
        self.support.get(word).cloned().unwrap_or_default()
    }

    fn compatible_grade(&self, other: &Self) -> Result<Option<Grade>, AlgebraError> {
        match (&self.grade, &other.grade) {
            (None, g) | (g, None) => Ok(g.clone()),
            (Some(a), Some(b)) if a == b => Ok(Some(a.clone())),
            (Some(a), Some(b)) => Err(AlgebraError::GradeMismatch {
                lhs: a.to_string(),
                rhs: b.to_string(),
            }),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.quiver != other.quiver {
            return Err(AlgebraError::QuiverMismatch);
        }
        let grade = self.compatible_grade(other)?;
        let mut support = self.support.clone();
        for (word, coeff) in &other.support {
            let entry = support.entry(word.clone()).or_insert_with(LaurentQT::zero);
            *entry = &*entry + coeff;
        }
        support.retain(|_, c| !c.is_zero());
        if support.is_empty() {
            return Ok(Self::zero(self.quiver.clone()));
        }
        Ok(AlgElement {
            quiver: self.quiver.clone(),
            grade,
            support,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&LaurentQT::from_int(-1))
    }

    pub fn scale(&self, c: &LaurentQT) -> Self {
        if c.is_zero() {
            return Self::zero(self.quiver.clone());
        }
        let support = self
            .support
            .iter()
            .map(|(w, k)| (w.clone(), k * c))
            .collect();
        AlgElement {
            quiver: self.quiver.clone(),
            grade: self.grade.clone(),
            support,
        }
    }

    /// Word concatenation extended bilinearly; grades add.
    pub fn mul_free(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.quiver != other.quiver {
            return Err(AlgebraError::QuiverMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.quiver.clone()));
        }
        let (ga, gb) = (self.grade.as_ref().unwrap(), other.grade.as_ref().unwrap());
        let grade = Grade {
            dims: ga.dims.add(&gb.dims),
            weight: ga.weight + gb.weight,
        };
        let mut support = BTreeMap::<Word, LaurentQT>::new();
        for (wa, ca) in &self.support {
            for (wb, cb) in &other.support {
                let mut word = wa.clone();
                word.extend(wb.iter().cloned());
                let entry = support.entry(word).or_insert_with(LaurentQT::zero);
                *entry = &*entry + &(ca * cb);
            }
        }
        support.retain(|_, c| !c.is_zero());
        if support.is_empty() {
            return Ok(Self::zero(self.quiver.clone()));
        }
        Ok(AlgElement {
            quiver: self.quiver.clone(),
            grade: Some(grade),
            support,
        })
    }

    pub fn word_text(word: &Word) -> String {
        if word.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = word.iter().map(|s| s.to_string()).collect();
        parts.join("*")
    }

    /// Canonical expression text, a fixpoint of the shared grammar:
    /// "q^-4 * f[1](1)*f[1](2) + q^-1 * P2[1](1,1)".
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (word, coeff)) in self.support.iter().enumerate() {
            let (sign_neg, coeff_text) = render_coeff(coeff);
            if i == 0 {
                if sign_neg {
                    out.push('-');
                }
            } else {
                out.push_str(if sign_neg { " - " } else { " + " });
            }
            if let Some(c) = coeff_text {
                out.push_str(&c);
                out.push_str(" * ");
            }
            out.push_str(&Self::word_text(word));
        }
        out
    }
}

/// Splits a coefficient into (is-negative, optional magnitude text). A bare
/// +/-1 renders as no text at all; a single monomial renders sign-free with
/// explicit exponents; anything longer is parenthesized and owns its signs.
fn render_coeff(coeff: &LaurentQT) -> (bool, Option<String>) {
    if coeff.num_terms() != 1 {
        return (false, Some(format!("({})", coeff.expr_text())));
    }
    let (&(eq, et), c) = coeff.terms().next().expect("nonzero term");
    let neg = c.is_negative();
    let mag = c.abs();
    let mut parts: Vec<String> = Vec::new();
    if !mag.is_one() {
        parts.push(mag.to_string());
    }
    if eq != 0 {
        parts.push(format!("q^{eq}"));
    }
    if et != 0 {
        parts.push(format!("t^{et}"));
    }
    if parts.is_empty() {
        (neg, None)
    } else {
        (neg, Some(parts.join("*")))
    }
}

impl fmt::Display for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}
