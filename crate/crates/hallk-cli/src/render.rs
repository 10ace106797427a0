//! Output emitters. Text is the canonical grammar fixpoint, JSON is the
//! machine contract (sorted keys, coefficients as exact decimal strings),
//! LaTeX follows the blackboard notation f_{i,l}, f_{[i,j],(l...)},
//! P_{2,u*omega_1+v*omega_2}.

use std::str::FromStr;

use hallk::algebra::{AlgElement, GenSymbol, Word};
use hallk::coeff::{BigInt, Exps, LaurentQT, MPoly, RationalChar, VARS};
use serde_json::{json, Value};

pub fn laurent_json(c: &LaurentQT) -> Value {
    let rows: Vec<Value> = c
        .terms()
        .map(|(&(eq, et), coef)| json!([eq, et, coef.to_string()]))
        .collect();
    json!({ "num": rows, "den": [[0, 0, "1"]] })
}

fn mpoly_rows(p: &MPoly) -> Vec<Value> {
    p.terms()
        .map(|(k, coef)| {
            let mut row: Vec<Value> = k.0.iter().map(|&e| json!(e)).collect();
            row.push(json!(coef.to_string()));
            Value::Array(row)
        })
        .collect()
}

pub fn ratchar_json(r: &RationalChar) -> Value {
    json!({ "num": mpoly_rows(r.num()), "den": mpoly_rows(r.den()) })
}

fn int_of(v: &Value) -> Option<i64> {
    v.as_i64()
}

fn laurent_rows(v: &Value) -> Option<LaurentQT> {
    let mut acc = LaurentQT::zero();
    for row in v.as_array()? {
        let row = row.as_array()?;
        if row.len() != 3 {
            return None;
        }
        let eq = int_of(&row[0])?;
        let et = int_of(&row[1])?;
        let c = BigInt::from_str(row[2].as_str()?).ok()?;
        acc = &acc + &LaurentQT::monomial(c, eq, et);
    }
    Some(acc)
}

/// Inverse of [`laurent_json`]; bit-exact on its output.
pub fn laurent_from_json(v: &Value) -> Option<LaurentQT> {
    let obj = v.as_object()?;
    let den = laurent_rows(obj.get("den")?)?;
    if !den.is_one() {
        return None;
    }
    laurent_rows(obj.get("num")?)
}

fn mpoly_from_rows(v: &Value) -> Option<MPoly> {
    let mut acc = MPoly::zero();
    for row in v.as_array()? {
        let row = row.as_array()?;
        if row.len() != VARS.len() + 1 {
            return None;
        }
        let mut exps: Exps = [0; 6];
        for (slot, val) in exps.iter_mut().zip(&row[..VARS.len()]) {
            *slot = int_of(val)?;
        }
        let c = BigInt::from_str(row[VARS.len()].as_str()?).ok()?;
        acc = &acc + &MPoly::monomial(exps, c);
    }
    Some(acc)
}

/// Inverse of [`ratchar_json`]; bit-exact on its output.
pub fn ratchar_from_json(v: &Value) -> Option<RationalChar> {
    let obj = v.as_object()?;
    let num = mpoly_from_rows(obj.get("num")?)?;
    let den = mpoly_from_rows(obj.get("den")?)?;
    RationalChar::reduced(num, den).ok()
}

pub fn element_json(e: &AlgElement) -> Value {
    let grade = match e.grade() {
        Some(g) => json!({ "a": g.dims.entries(), "n": g.weight }),
        None => Value::Null,
    };
    let words: Vec<Value> = e
        .terms()
        .map(|(word, coeff)| {
            let syms: Vec<String> = word.iter().map(|s| s.to_string()).collect();
            json!({ "syms": syms, "coef": laurent_json(coeff) })
        })
        .collect();
    json!({ "grade": grade, "words": words })
}

fn var_latex(base: &str, e: i64) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{{{e}}}")
    }
}

/// u*omega_1 + v*omega_2 with unit coefficients elided.
fn weight_latex(u: i64, v: i64) -> String {
    let mut parts = Vec::new();
    for (c, omega) in [(u, "\\omega_1"), (v, "\\omega_2")] {
        match c {
            0 => {}
            1 => parts.push(omega.to_string()),
            -1 => parts.push(format!("-{omega}")),
            c => parts.push(format!("{c}{omega}")),
        }
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

pub fn symbol_latex(sym: &GenSymbol) -> String {
    match sym {
        GenSymbol::F { lo, hi, loops } if lo == hi => format!("f_{{{lo},{}}}", loops[0]),
        GenSymbol::F { lo, hi, loops } => {
            let ls: Vec<String> = loops.iter().map(|l| l.to_string()).collect();
            format!("f_{{[{lo},{hi}],({})}}", ls.join(","))
        }
        GenSymbol::P2 { vertex, m1, m2 } => {
            let w = weight_latex(m1 - m2, *m2);
            if *vertex == 1 {
                format!("P_{{2,{w}}}")
            } else {
                format!("P^{{({vertex})}}_{{2,{w}}}")
            }
        }
        GenSymbol::Unit => "1".into(),
    }
}

fn word_latex(word: &Word) -> String {
    if word.is_empty() {
        return "1".into();
    }
    word.iter().map(symbol_latex).collect()
}

/// Sign-extracted coefficient: (is-negative, optional magnitude). Mirrors
/// the text renderer so sum signs live in one place.
fn coeff_latex(c: &LaurentQT) -> (bool, Option<String>) {
    if c.num_terms() != 1 {
        return (false, Some(format!("({})", laurent_latex(c))));
    }
    let (&(eq, et), coef) = c.terms().next().expect("nonzero term");
    let neg = coef < &BigInt::from(0);
    let mag = if neg { -coef } else { coef.clone() };
    let mut parts = Vec::new();
    if mag != BigInt::from(1) {
        parts.push(mag.to_string());
    }
    if eq != 0 {
        parts.push(var_latex("q", eq));
    }
    if et != 0 {
        parts.push(var_latex("t", et));
    }
    if parts.is_empty() {
        (neg, None)
    } else {
        (neg, Some(parts.concat()))
    }
}

pub fn laurent_latex(c: &LaurentQT) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (&(eq, et), coef)) in c.terms().enumerate() {
        let neg = coef < &BigInt::from(0);
        let mag = if neg { -coef } else { coef.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut parts = Vec::new();
        if mag != BigInt::from(1) || (eq == 0 && et == 0) {
            parts.push(mag.to_string());
        }
        if eq != 0 {
            parts.push(var_latex("q", eq));
        }
        if et != 0 {
            parts.push(var_latex("t", et));
        }
        out.push_str(&parts.concat());
    }
    out
}

pub fn element_latex(e: &AlgElement) -> String {
    if e.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (word, coeff)) in e.terms().enumerate() {
        let (neg, coeff_text) = coeff_latex(coeff);
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match coeff_text {
            Some(c) => {
                out.push_str(&c);
                if !word.is_empty() {
                    out.push_str("\\,");
                    out.push_str(&word_latex(word));
                }
            }
            None => out.push_str(&word_latex(word)),
        }
    }
    out
}
