//! Rational characters: reduced fractions of multivariate Laurent polynomials,
//! with deterministic unit normalization so structural equality is
//! mathematical equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::poly::{Exps, MPoly, Var};
use super::{CoeffError, LaurentQT};

/// num/den in lowest terms with a fixed unit convention: the denominator's
/// leading term under the canonical order is a positive constant, so every
/// value has exactly one representation and structural equality is
/// mathematical equality. The numerator absorbs all monomial units.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalChar {
    num: MPoly,
    den: MPoly,
}

impl RationalChar {
    pub fn reduced(num: MPoly, den: MPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalChar {
                num: MPoly::zero(),
                den: MPoly::one(),
            });
        }
        let (n_off, n_prop) = num.to_proper();
        let (d_off, d_prop) = den.to_proper();
        let g = MPoly::gcd(&n_prop, &d_prop);
        let n = n_prop.div_exact(&g).ok_or(CoeffError::InexactDivision)?;
        let d = d_prop.div_exact(&g).ok_or(CoeffError::InexactDivision)?;
        let mut net = [0i64; 6];
        for i in 0..6 {
            net[i] = n_off[i] - d_off[i];
        }
        Ok(Self::renormalized(n.shifted(net), d))
    }

    /// Applies the unit convention to an already coprime pair: multiply
    /// num and den by the +/-monomial that moves the proper denominator's
    /// leading term to a positive constant. The canonical order restricted
    /// to one total degree is shift-invariant, which makes the choice of
    /// monomial unique.
    fn renormalized(num: MPoly, den: MPoly) -> Self {
        let (d_off, d_prop) = den.to_proper();
        let lead = d_prop.leading_exps();
        let sign = d_prop.leading_unit_sign();
        let mut delta = [0i64; 6];
        let mut neg_lead = [0i64; 6];
        for i in 0..6 {
            delta[i] = -d_off[i] - lead[i];
            neg_lead[i] = -lead[i];
        }
        let mut n = num.shifted(delta);
        let mut d = d_prop.shifted(neg_lead);
        if sign < 0 {
            n = -&n;
            d = -&d;
        }
        RationalChar { num: n, den: d }
    }

    pub fn zero() -> Self {
        RationalChar {
            num: MPoly::zero(),
            den: MPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalChar {
            num: MPoly::one(),
            den: MPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        RationalChar {
            num: MPoly::from_int(c),
            den: MPoly::one(),
        }
    }

    pub fn from_mpoly(p: MPoly) -> Self {
        RationalChar {
            num: p,
            den: MPoly::one(),
        }
    }

    pub fn from_laurent(l: &LaurentQT) -> Self {
        Self::from_mpoly(MPoly::from_laurent(l))
    }

    pub fn var(v: Var) -> Self {
        Self::from_mpoly(MPoly::var(v))
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        Self::from_mpoly(MPoly::var_pow(v, e))
    }

    pub fn monomial(exps: Exps, c: i64) -> Self {
        Self::from_mpoly(MPoly::monomial(exps, c))
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inverse(&self) -> Result<Self, CoeffError> {
        Self::reduced(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Equality by cross multiplication; agrees with structural equality.
    pub fn cross_mul_eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Substitutes Laurent q,t-values for variables, applied left to right.
    pub fn specialize(&self, assignments: &[(Var, LaurentQT)]) -> Result<Self, CoeffError> {
        let mut cur = self.clone();
        for (v, val) in assignments {
            let value = MPoly::from_laurent(val);
            let (n1, d1) = cur.num.substitute(*v, &value);
            let (n2, d2) = cur.den.substitute(*v, &value);
            if d1.is_zero() || n2.is_zero() {
                return Err(CoeffError::DivisionByZero);
            }
            cur = Self::reduced(&n1 * &d2, &d1 * &n2)?;
        }
        Ok(cur)
    }

    pub fn swapped(&self, a: Var, b: Var) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        // a ring automorphism keeps the fraction coprime; only the unit
        // convention needs reapplying
        Self::renormalized(self.num.swap_vars(a, b), self.den.swap_vars(a, b))
    }

    /// Sum over the orbit of the transposition a ↔ b: self + swapped(self).
    pub fn symmetrized_under_swap(&self, a: Var, b: Var) -> Self {
        self + &self.swapped(a, b)
    }

    /// Power-series expansion: writes den = ±m·(1 − P) with m a unit monomial
    /// of minimal weighted grade and P of positive grade, and returns
    /// num/den truncated to weighted grade ≤ order. Fails when the
    /// minimal-grade part of den is not a single ±1 monomial.
    pub fn series(&self, weights: &[(Var, i64)], order: i64) -> Result<MPoly, CoeffError> {
        let mut w: Exps = [0; 6];
        for (v, g) in weights {
            w[v.index()] = *g;
        }
        let g0 = self
            .den
            .terms()
            .map(|(k, _)| MPoly::grade_of(k, &w))
            .min()
            .expect("denominator is nonzero");
        let bottom: Vec<_> = self
            .den
            .terms()
            .filter(|(k, _)| MPoly::grade_of(k, &w) == g0)
            .collect();
        let (m_exps, m_coeff) = match bottom.as_slice() {
            [(k, c)] => (k.0, (*c).clone()),
            _ => return Err(CoeffError::NotExpandable),
        };
        let sign: i64 = if m_coeff == 1.into() {
            1
        } else if m_coeff == (-1).into() {
            -1
        } else {
            return Err(CoeffError::NotExpandable);
        };
        let neg_m = m_exps.map(|e| -e);
        // den = sign*m*(1 − p), p of positive grade
        let p = &MPoly::one() - &(&self.den.shifted(neg_m) * &MPoly::from_int(sign));
        debug_assert!(p.terms().all(|(k, _)| MPoly::grade_of(k, &w) > 0));
        let mut acc = (&self.num.shifted(neg_m) * &MPoly::from_int(sign)).truncated(&w, order);
        let mut out = MPoly::zero();
        while !acc.is_zero() {
            out = &out + &acc;
            acc = (&acc * &p).truncated(&w, order);
        }
        Ok(out)
    }

    /// Declared variable set: q and t always, plus every variable used.
    pub fn declared_vars(&self) -> Vec<Var> {
        let mut vars = vec![Var::Q, Var::T];
        for v in self.num.used_vars().into_iter().chain(self.den.used_vars()) {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars.sort();
        vars
    }

    pub fn canonical_text(&self) -> String {
        if self.den.is_one() {
            return self.num.canonical_text();
        }
        let den = format!("({})^-1", self.den.canonical_text());
        if self.num.is_one() {
            den
        } else {
            format!("({})*{}", self.num.canonical_text(), den)
        }
    }

    pub fn latex(&self) -> String {
        if self.den.is_one() {
            self.num.latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.latex(), self.den.latex())
        }
    }
}

impl fmt::Display for RationalChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

/// Divides the gcd of the two proper parts out of both polynomials; the
/// Laurent offsets are units and stay untouched. Keeping cross factors small
/// here is what makes long chains of fraction arithmetic tractable.
fn cross_cancel(a: &MPoly, b: &MPoly) -> (MPoly, MPoly) {
    if a.is_zero() || b.is_zero() {
        return (a.clone(), b.clone());
    }
    let (oa, pa) = a.to_proper();
    let (ob, pb) = b.to_proper();
    let g = MPoly::gcd(&pa, &pb);
    if g.is_one() {
        return (a.clone(), b.clone());
    }
    let qa = pa.div_exact(&g).expect("gcd divides").shifted(oa);
    let qb = pb.div_exact(&g).expect("gcd divides").shifted(ob);
    (qa, qb)
}

impl Add for &RationalChar {
    type Output = RationalChar;
    fn add(self, rhs: &RationalChar) -> RationalChar {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        // work over the lcm of the denominators, not their product
        let (d1r, d2r) = cross_cancel(&self.den, &rhs.den);
        let num = &(&self.num * &d2r) + &(&rhs.num * &d1r);
        let den = &self.den * &d2r;
        RationalChar::reduced(num, den).expect("denominators are nonzero")
    }
}

impl Sub for &RationalChar {
    type Output = RationalChar;
    fn sub(self, rhs: &RationalChar) -> RationalChar {
        self + &(-rhs)
    }
}

impl Neg for &RationalChar {
    type Output = RationalChar;
    fn neg(self) -> RationalChar {
        RationalChar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalChar {
    type Output = RationalChar;
    fn mul(self, rhs: &RationalChar) -> RationalChar {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RationalChar::zero();
        }
        // both factors are in lowest terms, so cancelling crosswise leaves a
        // fraction already in lowest terms; only units remain to fix up
        let (n1, d2) = cross_cancel(&self.num, &rhs.den);
        let (n2, d1) = cross_cancel(&rhs.num, &self.den);
        RationalChar::renormalized(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RationalChar {
    type Output = RationalChar;
    fn div(self, rhs: &RationalChar) -> RationalChar {
        assert!(!rhs.num.is_zero(), "division by zero RationalChar");
        if self.num.is_zero() {
            return RationalChar::zero();
        }
        let (n1, n2) = cross_cancel(&self.num, &rhs.num);
        let (d2, d1) = cross_cancel(&rhs.den, &self.den);
        RationalChar::renormalized(&n1 * &d2, &d1 * &n2)
    }
}
