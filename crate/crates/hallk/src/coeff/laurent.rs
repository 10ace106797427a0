//! Laurent polynomials in q and t with arbitrary-precision integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Element of ℤ[q^{±1}, t^{±1}].
///
/// Keys are exponent pairs (e_q, e_t) in lexicographic order; no zero
/// coefficient is ever stored, so equal values have identical representations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LaurentQT {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentQT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    /// c · q^eq · t^et
    pub fn monomial(c: impl Into<BigInt>, eq: i64, et: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((eq, et), c);
        }
        LaurentQT { terms }
    }

    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e, 0)
    }

    pub fn t_pow(e: i64) -> Self {
        Self::monomial(1, 0, e)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// True when the value is a single monomial with coefficient ±1.
    pub fn is_unit_monomial(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().abs().is_one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes t = 1, merging exponents.
    pub fn specialize_t_one(&self) -> Self {
        let mut out = BTreeMap::<(i64, i64), BigInt>::new();
        for (&(eq, _), c) in &self.terms {
            let entry = out.entry((eq, 0)).or_insert_with(BigInt::zero);
            *entry += c;
        }
        out.retain(|_, c| !c.is_zero());
        LaurentQT { terms: out }
    }

    fn insert_term(&mut self, key: (i64, i64), c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Rows [e_q, e_t, coefficient-as-string] in canonical order.
    pub fn json_rows(&self) -> Vec<(i64, i64, String)> {
        self.terms
            .iter()
            .map(|(&(eq, et), c)| (eq, et, c.to_string()))
            .collect()
    }

    /// Canonical text with exponent 1 omitted: "q^-1 - q", "2*q*t^-1 + 1".
    pub fn canonical_text(&self) -> String {
        self.render(false)
    }

    /// Text whose every variable carries an explicit exponent, as required by
    /// the element expression grammar: "q^-1 - q^1".
    pub fn expr_text(&self) -> String {
        self.render(true)
    }

    fn render(&self, explicit_exp: bool) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (&(eq, et), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&Self::render_monomial(&c.abs(), eq, et, explicit_exp));
        }
        out
    }

    fn render_monomial(c: &BigInt, eq: i64, et: i64, explicit_exp: bool) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !c.is_one() || (eq == 0 && et == 0) {
            parts.push(c.to_string());
        }
        for (name, e) in [("q", eq), ("t", et)] {
            if e == 0 {
                continue;
            }
            if e == 1 && !explicit_exp {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

impl fmt::Debug for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentQT({})", self.canonical_text())
    }
}

impl From<i64> for LaurentQT {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add for &LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert_term(k, c.clone());
        }
        out
    }
}

impl Add for LaurentQT {
    type Output = LaurentQT;
    fn add(self, rhs: LaurentQT) -> LaurentQT {
        &self + &rhs
    }
}

impl AddAssign<&LaurentQT> for LaurentQT {
    fn add_assign(&mut self, rhs: &LaurentQT) {
        for (&k, c) in &rhs.terms {
            self.insert_term(k, c.clone());
        }
    }
}

impl Sub for &LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.insert_term(k, -c.clone());
        }
        out
    }
}

impl Sub for LaurentQT {
    type Output = LaurentQT;
    fn sub(self, rhs: LaurentQT) -> LaurentQT {
        &self - &rhs
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        LaurentQT {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        -&self
    }
}

impl Mul for &LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: &LaurentQT) -> LaurentQT {
        let mut out = LaurentQT::zero();
        for (&(aq, at), ac) in &self.terms {
            for (&(bq, bt), bc) in &rhs.terms {
                out.insert_term((aq + bq, at + bt), ac * bc);
            }
        }
        out
    }
}

impl Mul for LaurentQT {
    type Output = LaurentQT;
    fn mul(self, rhs: LaurentQT) -> LaurentQT {
        &self * &rhs
    }
}
