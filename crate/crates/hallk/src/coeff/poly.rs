//! Multivariate Laurent polynomials over ℤ in the fixed variable universe
//! q, t, r1, r2, x1, x2, with exact gcd for fraction reduction.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::LaurentQT;

/// The fixed variable universe, in canonical order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Var {
    Q,
    T,
    R1,
    R2,
    X1,
    X2,
}

pub const VARS: [Var; 6] = [Var::Q, Var::T, Var::R1, Var::R2, Var::X1, Var::X2];

impl Var {
    pub fn index(self) -> usize {
        match self {
            Var::Q => 0,
            Var::T => 1,
            Var::R1 => 2,
            Var::R2 => 3,
            Var::X1 => 4,
            Var::X2 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::R1 => "r1",
            Var::R2 => "r2",
            Var::X1 => "x1",
            Var::X2 => "x2",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::R1 => "\\rho_1",
            Var::R2 => "\\rho_2",
            Var::X1 => "x_1",
            Var::X2 => "x_2",
        }
    }
}

pub type Exps = [i64; 6];

/// Monomial key ordered by (total absolute degree, reverse-lexicographic),
/// which sorts q^-1 before q, constants before mixed monomials, and x1 before
/// x2 — the order used for canonical display and serialization.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct MKey(pub Exps);

impl Ord for MKey {
    // Signed total degree, then q and t ascending (series reading), then the
    // character variables descending (leading-monomial reading). Within one
    // degree this is a coordinatewise-fixed lex order, so it is invariant
    // under shifting all keys by a common monomial; denominator
    // normalization relies on that.
    fn cmp(&self, other: &Self) -> Ordering {
        let da: i64 = self.0.iter().sum();
        let db: i64 = other.0.iter().sum();
        da.cmp(&db).then_with(|| {
            for i in 0..6 {
                let ord = match self.0[i].cmp(&other.0[i]) {
                    Ordering::Equal => continue,
                    ord if i < 2 => ord,
                    ord => ord.reverse(),
                };
                return ord;
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for MKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of ℤ[q^{±1}, t^{±1}, r1^{±1}, r2^{±1}, x1^{±1}, x2^{±1}].
/// No zero coefficients are stored; the key order is canonical.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<MKey, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial([0; 6], c)
    }

    pub fn monomial(exps: Exps, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(MKey(exps), c);
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        let mut exps = [0; 6];
        exps[v.index()] = e;
        Self::monomial(exps, 1)
    }

    pub fn from_laurent(l: &LaurentQT) -> Self {
        let mut out = Self::zero();
        for (&(eq, et), c) in l.terms() {
            let mut exps = [0; 6];
            exps[0] = eq;
            exps[1] = et;
            out.insert_term(MKey(exps), c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&MKey([0; 6])).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MKey, &BigInt)> {
        self.terms.iter()
    }

    /// The single (key, coeff) when the value is one monomial.
    pub fn as_monomial(&self) -> Option<(Exps, &BigInt)> {
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            Some((k.0, c))
        } else {
            None
        }
    }

    fn insert_term(&mut self, key: MKey, c: BigInt) {
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

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by the monomial with the given exponents.
    pub fn shifted(&self, by: Exps) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut e = k.0;
                for i in 0..6 {
                    e[i] += by[i];
                }
                (MKey(e), c.clone())
            })
            .collect();
        MPoly { terms }
    }

    /// Componentwise minimum of exponents over all terms (zero poly: all 0).
    pub fn min_exps(&self) -> Exps {
        let mut m = [i64::MAX; 6];
        for k in self.terms.keys() {
            for (lo, &e) in m.iter_mut().zip(&k.0) {
                *lo = (*lo).min(e);
            }
        }
        if self.terms.is_empty() {
            [0; 6]
        } else {
            m
        }
    }

    /// Splits off the Laurent offset: self = monomial(offset) * proper, where
    /// proper has componentwise minimum exponent 0.
    pub fn to_proper(&self) -> (Exps, MPoly) {
        let off = self.min_exps();
        let neg = off.map(|e| -e);
        (off, self.shifted(neg))
    }

    pub fn is_proper(&self) -> bool {
        self.min_exps().iter().all(|&e| e >= 0)
    }

    /// Exponent vector of the first term in canonical order.
    /// Panics on the zero polynomial.
    pub fn leading_exps(&self) -> Exps {
        self.terms.keys().next().expect("nonzero polynomial").0
    }

    /// Coefficient sign of the first term in canonical order (zero poly: 0).
    pub fn leading_unit_sign(&self) -> i32 {
        match self.terms.values().next() {
            Some(c) if c.is_negative() => -1,
            Some(_) => 1,
            None => 0,
        }
    }

    /// Variables with a nonzero exponent somewhere.
    pub fn used_vars(&self) -> Vec<Var> {
        VARS.iter()
            .copied()
            .filter(|v| self.terms.keys().any(|k| k.0[v.index()] != 0))
            .collect()
    }

    pub fn swap_vars(&self, a: Var, b: Var) -> Self {
        let (ia, ib) = (a.index(), b.index());
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut e = k.0;
                e.swap(ia, ib);
                (MKey(e), c.clone())
            })
            .collect();
        MPoly { terms }
    }

    /// Substitutes `value` for `v`, returning (numerator, denominator): the
    /// denominator is value^k when v occurs with minimal exponent −k < 0, else 1.
    pub fn substitute(&self, v: Var, value: &MPoly) -> (MPoly, MPoly) {
        let iv = v.index();
        let kmin = self.terms.keys().map(|k| k.0[iv]).min().unwrap_or(0).min(0);
        let mut num = MPoly::zero();
        for (k, c) in &self.terms {
            let mut rest = k.0;
            let e = rest[iv];
            rest[iv] = 0;
            let factor = value.pow((e - kmin) as u32);
            num = &num + &(&MPoly::monomial(rest, c.clone()) * &factor);
        }
        let den = value.pow((-kmin) as u32);
        (num, den)
    }

    /// Weighted grade of a monomial key.
    pub fn grade_of(key: &MKey, weights: &Exps) -> i64 {
        key.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    /// Drops all terms of weighted grade exceeding `order`.
    pub fn truncated(&self, weights: &Exps, order: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| Self::grade_of(k, weights) <= order)
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        MPoly { terms }
    }

    // ---- exact division and gcd (internals use plain lex on proper polys) ----

    fn lex_lead(&self) -> Option<(&MKey, &BigInt)> {
        self.terms.iter().max_by(|(a, _), (b, _)| a.0.cmp(&b.0))
    }

    /// Exact division of proper polynomials; None when not divisible.
    pub fn div_exact(&self, d: &MPoly) -> Option<MPoly> {
        if d.is_zero() {
            return None;
        }
        debug_assert!(self.is_proper() && d.is_proper());
        let (dk, dc) = {
            let (k, c) = d.lex_lead().unwrap();
            (*k, c.clone())
        };
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while !rem.is_zero() {
            let (rk, rc) = {
                let (k, c) = rem.lex_lead().unwrap();
                (*k, c.clone())
            };
            let mut e = [0i64; 6];
            for (ei, (&r, &d)) in e.iter_mut().zip(rk.0.iter().zip(&dk.0)) {
                *ei = r - d;
                if *ei < 0 {
                    return None;
                }
            }
            let (qc, rc_rem) = rc.div_rem(&dc);
            if !rc_rem.is_zero() {
                return None;
            }
            let t = MPoly::monomial(e, qc);
            quot = &quot + &t;
            rem = &rem - &(&t * d);
        }
        Some(quot)
    }

    fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn scaled_down(&self, c: &BigInt) -> MPoly {
        let terms = self.terms.iter().map(|(k, v)| (*k, v / c)).collect();
        MPoly { terms }
    }

    fn deg_in(&self, v: Var) -> i64 {
        self.terms.keys().map(|k| k.0[v.index()]).max().unwrap_or(0)
    }

    /// Coefficient of v^e, as a polynomial free of v.
    fn coeff_of(&self, v: Var, e: i64) -> MPoly {
        let iv = v.index();
        let mut out = MPoly::zero();
        for (k, c) in &self.terms {
            if k.0[iv] == e {
                let mut rest = k.0;
                rest[iv] = 0;
                out.insert_term(MKey(rest), c.clone());
            }
        }
        out
    }

    fn content_in(&self, v: Var) -> MPoly {
        let mut g = MPoly::zero();
        for e in 0..=self.deg_in(v) {
            let c = self.coeff_of(v, e);
            if !c.is_zero() {
                g = Self::gcd(&g, &c);
                if g.is_one() {
                    break;
                }
            }
        }
        g
    }

    /// Pseudo-remainder normalized to lc(b)^(deg a − deg b + 1) · a mod b,
    /// the scaling the subresultant divisions below rely on.
    fn pseudo_rem(a: &MPoly, b: &MPoly, v: Var) -> MPoly {
        let db = b.deg_in(v);
        let lb = b.coeff_of(v, db);
        let mut n = a.deg_in(v) - db + 1;
        let mut r = a.clone();
        while !r.is_zero() {
            let dr = r.deg_in(v);
            if dr < db {
                break;
            }
            let lr = r.coeff_of(v, dr);
            r = &(&r * &lb) - &(&(&lr * b) * &MPoly::var_pow(v, dr - db));
            n -= 1;
        }
        if r.is_zero() {
            return r;
        }
        for _ in 0..n {
            r = &r * &lb;
        }
        r
    }

    fn primitive_in(&self, v: Var) -> MPoly {
        let cont = self.content_in(v);
        self.div_exact(&cont)
            .expect("content divides its polynomial")
    }

    /// Gcd of proper polynomials, including integer content, sign-normalized
    /// so the first canonical term is positive.
    pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
        let g = Self::gcd_inner(a, b);
        if g.leading_unit_sign() < 0 {
            -&g
        } else {
            g
        }
    }

    /// Integer coefficients of the powers of `v` after evaluating every other
    /// variable at `pt`. Requires a proper polynomial.
    fn eval_except(&self, pt: &[i64; 6], v: Var) -> Vec<BigInt> {
        debug_assert!(self.is_proper());
        let iv = v.index();
        let deg = self.deg_in(v);
        let mut out = vec![BigInt::zero(); (deg + 1) as usize];
        for (k, c) in &self.terms {
            let mut val = c.clone();
            for (i, (&p, &e)) in pt.iter().zip(&k.0).enumerate() {
                if i != iv && e != 0 {
                    val *= num_traits::pow(BigInt::from(p), e as usize);
                }
            }
            out[k.0[iv] as usize] += val;
        }
        out
    }

    fn uni_deg(p: &[BigInt]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }

    /// Degree of the gcd of two univariate integer polynomials given as
    /// coefficient vectors indexed by degree.
    fn uni_gcd_degree(mut f: Vec<BigInt>, mut g: Vec<BigInt>) -> usize {
        loop {
            let Some(df) = Self::uni_deg(&f) else {
                return Self::uni_deg(&g).unwrap_or(0);
            };
            let Some(dg) = Self::uni_deg(&g) else {
                return df;
            };
            if df < dg {
                std::mem::swap(&mut f, &mut g);
                continue;
            }
            let lg = g[dg].clone();
            let mut r = f;
            while let Some(dr) = Self::uni_deg(&r) {
                if dr < dg {
                    break;
                }
                let lr = r[dr].clone();
                for c in r.iter_mut() {
                    *c *= &lg;
                }
                for (j, gj) in g.iter().enumerate().take(dg + 1) {
                    r[dr - dg + j] -= &lr * gj;
                }
            }
            let mut cont = BigInt::zero();
            for c in &r {
                cont = cont.gcd(c);
                if cont.is_one() {
                    break;
                }
            }
            if !cont.is_zero() && !cont.is_one() {
                for c in r.iter_mut() {
                    *c = &*c / &cont;
                }
            }
            f = g;
            g = r;
        }
    }

    /// Sound upper bound for the degree of gcd(a, b) in `v`, from a single
    /// integer evaluation of the remaining variables. The bound is valid
    /// whenever the leading coefficient of `a` in `v` survives the
    /// evaluation; points are retried deterministically until it does.
    fn image_gcd_degree(a: &MPoly, b: &MPoly, v: Var) -> Option<usize> {
        const POINTS: [i64; 10] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
        let la = a.coeff_of(v, a.deg_in(v));
        for attempt in 0..6 {
            let mut pt = [0i64; 6];
            for (i, slot) in pt.iter_mut().enumerate() {
                *slot = POINTS[(i + attempt) % POINTS.len()];
            }
            if la.eval_except(&pt, v)[0].is_zero() {
                continue;
            }
            let fa = a.eval_except(&pt, v);
            let fb = b.eval_except(&pt, v);
            return Some(Self::uni_gcd_degree(fa, fb));
        }
        None
    }

    fn gcd_inner(a: &MPoly, b: &MPoly) -> MPoly {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        debug_assert!(a.is_proper() && b.is_proper());

        // Split each input into monomial * integer content * primitive part;
        // the cheap factors combine componentwise.
        let (off_a, a0) = a.to_proper();
        let (off_b, b0) = b.to_proper();
        let mut off = [0i64; 6];
        for i in 0..6 {
            off[i] = off_a[i].min(off_b[i]);
        }
        let ca = a0.int_content();
        let cb = b0.int_content();
        let a1 = a0.scaled_down(&ca);
        let b1 = b0.scaled_down(&cb);
        let mono = MPoly::monomial(off, ca.gcd(&cb));

        // A stripped single term is a unit; divisors share only the variables
        // appearing in both inputs, so no overlap also forces a trivial part.
        if a1.terms.len() == 1 || b1.terms.len() == 1 {
            return mono;
        }
        let shared: Vec<Var> = VARS
            .iter()
            .copied()
            .filter(|&v| a1.deg_in(v) > 0 && b1.deg_in(v) > 0)
            .collect();
        if shared.is_empty() {
            return mono;
        }

        // A gcd free of some shared variable divides both contents in it, so
        // a cheap evaluated degree bound of zero replaces the whole remainder
        // sequence by a recursion on the contents.
        for &w in &shared {
            if Self::image_gcd_degree(&a1, &b1, w) == Some(0) {
                let cont_a = a1.content_in(w);
                let cont_b = b1.content_in(w);
                return &Self::gcd_inner(&cont_a, &cont_b) * &mono;
            }
        }

        // Eliminate the variable with the smallest degrees first: the
        // remainder sequence stays short and its coefficients small.
        let v = shared
            .into_iter()
            .min_by_key(|&v| {
                let (da, db) = (a1.deg_in(v), b1.deg_in(v));
                (da.min(db), da.max(db))
            })
            .unwrap();

        let cont_a = a1.content_in(v);
        let cont_b = b1.content_in(v);
        let cont_g = Self::gcd_inner(&cont_a, &cont_b);
        let pa = a1.primitive_in(v);
        let pb = b1.primitive_in(v);
        let (mut f, mut s) = if pa.deg_in(v) >= pb.deg_in(v) {
            (pa, pb)
        } else {
            (pb, pa)
        };

        // Subresultant remainder sequence: each remainder is divided by a
        // predicted factor of the leading coefficients, which tames growth
        // without computing any content inside the loop.
        let mut g = MPoly::one();
        let mut h = MPoly::one();
        while s.deg_in(v) > 0 {
            let delta = (f.deg_in(v) - s.deg_in(v)) as u32;
            let r = Self::pseudo_rem(&f, &s, v);
            f = s;
            if r.is_zero() {
                s = MPoly::zero();
                break;
            }
            let divisor = &g * &h.pow(delta);
            s = r
                .div_exact(&divisor)
                .expect("subresultant factor divides the pseudo-remainder");
            g = f.coeff_of(v, f.deg_in(v));
            h = if delta == 0 {
                h
            } else {
                g.pow(delta)
                    .div_exact(&h.pow(delta - 1))
                    .expect("subresultant leading-coefficient update is exact")
            };
        }
        let part = if s.is_zero() {
            let f = f.scaled_down(&f.int_content());
            f.primitive_in(v)
        } else {
            // A nonzero remainder free of v: the primitive parts are coprime.
            MPoly::one()
        };
        &(&cont_g * &part) * &mono
    }

    // ---- rendering ----

    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&Self::render_monomial(&c.abs(), &k.0, false));
        }
        out
    }

    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&Self::render_monomial(&c.abs(), &k.0, true));
        }
        out
    }

    fn render_monomial(c: &BigInt, exps: &Exps, latex: bool) -> String {
        let mut parts: Vec<String> = Vec::new();
        let trivial = exps.iter().all(|&e| e == 0);
        if !c.is_one() || trivial {
            parts.push(c.to_string());
        }
        for v in VARS {
            let e = exps[v.index()];
            if e == 0 {
                continue;
            }
            let name = if latex { v.latex() } else { v.name() };
            if e == 1 {
                parts.push(name.to_string());
            } else if latex {
                parts.push(format!("{name}^{{{e}}}"));
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        if latex {
            parts.join(" ")
        } else {
            parts.join("*")
        }
    }

    /// Rows [exponents over `vars`..., coefficient-as-string], canonical order.
    /// Returns None for a term using a variable outside `vars`.
    pub fn json_rows(&self, vars: &[Var]) -> Option<Vec<Vec<String>>> {
        let mut rows = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            for v in VARS {
                if k.0[v.index()] != 0 && !vars.contains(&v) {
                    return None;
                }
            }
            let mut row: Vec<String> = vars.iter().map(|v| k.0[v.index()].to_string()).collect();
            row.push(c.to_string());
            rows.push(row);
        }
        Some(rows)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({})", self.canonical_text())
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_term(*k, -c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let mut e = [0i64; 6];
                for (ei, (&a, &b)) in e.iter_mut().zip(ka.0.iter().zip(&kb.0)) {
                    *ei = a + b;
                }
                out.insert_term(MKey(e), ca * cb);
            }
        }
        out
    }
}
