//! Expression parser for the shared element grammar:
//!
//! element := term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := f[i](l) | f[i,j](l,...) | P2[i](u,v) | int | q^int | t^int
//!          | [element, element]_q^int | (element)
//!
//! Canonical output is a fixpoint of this grammar. A few shorthands are
//! accepted on input only: bare q or t (exponent one), a sign before the
//! first term, and the literal 0.

use std::fmt;

use hallk::algebra::{q_bracket, AlgElement, AlgebraError, GenSymbol};
use hallk::coeff::LaurentQT;
use hallk::quiver::Quiver;

#[derive(Clone, Debug)]
pub struct ParseError {
    pub message: String,
    /// Byte offset into the input.
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Tok {
    Int(i64),
    KwF,
    KwP2,
    KwQ,
    KwT,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    Underscore,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::KwF => f.write_str("f"),
            Tok::KwP2 => f.write_str("P2"),
            Tok::KwQ => f.write_str("q"),
            Tok::KwT => f.write_str("t"),
            Tok::LBracket => f.write_str("["),
            Tok::RBracket => f.write_str("]"),
            Tok::LParen => f.write_str("("),
            Tok::RParen => f.write_str(")"),
            Tok::Comma => f.write_str(","),
            Tok::Plus => f.write_str("+"),
            Tok::Minus => f.write_str("-"),
            Tok::Star => f.write_str("*"),
            Tok::Caret => f.write_str("^"),
            Tok::Underscore => f.write_str("_"),
        }
    }
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '_' => Tok::Underscore,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &src[start..i];
                let n: i64 = text.parse().map_err(|_| ParseError {
                    message: format!("integer literal {text} out of range"),
                    position: start,
                })?;
                out.push((Tok::Int(n), start));
                continue;
            }
            'f' => Tok::KwF,
            'q' => Tok::KwQ,
            't' => Tok::KwT,
            'P' => {
                if bytes.get(i + 1) == Some(&b'2') {
                    out.push((Tok::KwP2, i));
                    i += 2;
                    continue;
                }
                return Err(ParseError {
                    message: "unknown symbol P; expected P2".into(),
                    position: i,
                });
            }
            other => {
                return Err(ParseError {
                    message: format!("unexpected character {other:?}"),
                    position: i,
                })
            }
        };
        out.push((tok, i));
        i += 1;
    }
    Ok(out)
}

pub struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    quiver: &'a Quiver,
}

impl<'a> Parser<'a> {
    pub fn new(src: &str, quiver: &'a Quiver) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
            end: src.len(),
            quiver,
        })
    }

    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).map(|&(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|&(_, p)| p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.peek();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            message: message.into(),
            position: self.here(),
        })
    }

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        match self.peek() {
            Some(t) if t == want => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => self.fail(format!("expected {want:?}, found {t}")),
            None => self.fail(format!("expected {want:?}, found end of input")),
        }
    }

    /// A possibly signed integer literal.
    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        match self.bump() {
            Some(Tok::Int(n)) => Ok(if neg { -n } else { n }),
            Some(t) => self.fail(format!("expected an integer, found {t}")),
            None => self.fail("expected an integer, found end of input"),
        }
    }

    fn int_list(&mut self) -> Result<Vec<i64>, ParseError> {
        let mut out = vec![self.signed_int()?];
        while self.peek() == Some(Tok::Comma) {
            self.pos += 1;
            out.push(self.signed_int()?);
        }
        Ok(out)
    }

    fn lift(&self, r: Result<AlgElement, AlgebraError>) -> Result<AlgElement, ParseError> {
        Self::lift_at(r, self.here())
    }

    fn lift_at(
        r: Result<AlgElement, AlgebraError>,
        position: usize,
    ) -> Result<AlgElement, ParseError> {
        r.map_err(|e| ParseError {
            message: e.to_string(),
            position,
        })
    }

    /// Exponent after q or t: ^int, or 1 when absent.
    fn exponent(&mut self) -> Result<i64, ParseError> {
        if self.peek() == Some(Tok::Caret) {
            self.pos += 1;
            self.signed_int()
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<AlgElement, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if n == 0 {
                    return Ok(AlgElement::zero(self.quiver.clone()));
                }
                Ok(AlgElement::unit(self.quiver.clone()).scale(&LaurentQT::from_int(n)))
            }
            Some(Tok::KwQ) => {
                self.pos += 1;
                let e = self.exponent()?;
                Ok(AlgElement::unit(self.quiver.clone()).scale(&LaurentQT::q_pow(e)))
            }
            Some(Tok::KwT) => {
                self.pos += 1;
                let e = self.exponent()?;
                Ok(AlgElement::unit(self.quiver.clone()).scale(&LaurentQT::t_pow(e)))
            }
            Some(Tok::KwF) => {
                self.pos += 1;
                self.expect(Tok::LBracket)?;
                let vertices = self.int_list()?;
                self.expect(Tok::RBracket)?;
                self.expect(Tok::LParen)?;
                let loops = self.int_list()?;
                self.expect(Tok::RParen)?;
                let sym = match *vertices.as_slice() {
                    [v] => {
                        let v = self.vertex(v)?;
                        if loops.len() != 1 {
                            return self
                                .fail(format!("f[{v}] takes one loop index, got {}", loops.len()));
                        }
                        GenSymbol::single(v, loops[0])
                    }
                    [lo, hi] => {
                        let (lo, hi) = (self.vertex(lo)?, self.vertex(hi)?);
                        match GenSymbol::interval(lo, hi, loops) {
                            Ok(s) => s,
                            Err(e) => return self.fail(e.to_string()),
                        }
                    }
                    _ => return self.fail("f takes one or two vertex indices"),
                };
                self.lift(AlgElement::generator(self.quiver.clone(), sym))
            }
            Some(Tok::KwP2) => {
                self.pos += 1;
                self.expect(Tok::LBracket)?;
                let v = self.signed_int()?;
                let v = self.vertex(v)?;
                self.expect(Tok::RBracket)?;
                self.expect(Tok::LParen)?;
                let u = self.signed_int()?;
                self.expect(Tok::Comma)?;
                let w = self.signed_int()?;
                self.expect(Tok::RParen)?;
                let sym = match GenSymbol::p2_from_omega(v, u, w) {
                    Ok(s) => s,
                    Err(e) => return self.fail(e.to_string()),
                };
                self.lift(AlgElement::generator(self.quiver.clone(), sym))
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let lhs = self.element()?;
                self.expect(Tok::Comma)?;
                let rhs = self.element()?;
                self.expect(Tok::RBracket)?;
                self.expect(Tok::Underscore)?;
                self.expect(Tok::KwQ)?;
                self.expect(Tok::Caret)?;
                let r = self.signed_int()?;
                self.lift(q_bracket(&lhs, &rhs, r))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.element()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(t) => self.fail(format!("expected a factor, found {t}")),
            None => self.fail("expected a factor, found end of input"),
        }
    }

    fn vertex(&self, v: i64) -> Result<usize, ParseError> {
        if v >= 1 && self.quiver.contains_vertex(v as usize) {
            Ok(v as usize)
        } else {
            self.fail(format!(
                "vertex {v} is not in the quiver ({} vertices)",
                self.quiver.n_vertices()
            ))
        }
    }

    fn term(&mut self) -> Result<AlgElement, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(Tok::Star) {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.lift(acc.mul_free(&f))?;
        }
        Ok(acc)
    }

    pub fn element(&mut self) -> Result<AlgElement, ParseError> {
        let neg = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            let join = match self.peek() {
                Some(t @ (Tok::Plus | Tok::Minus)) => t,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let term_start = self.here();
            let t = self.term()?;
            let joined = if join == Tok::Plus {
                acc.add(&t)
            } else {
                acc.sub(&t)
            };
            acc = Self::lift_at(joined, term_start)?;
        }
    }
}

/// Parses a complete expression; trailing input is an error.
pub fn parse_element(src: &str, quiver: &Quiver) -> Result<AlgElement, ParseError> {
    let mut p = Parser::new(src, quiver)?;
    let e = p.element()?;
    match p.peek() {
        None => Ok(e),
        Some(t) => p.fail(format!("unexpected trailing input {t}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::type_a(2)
    }

    #[test]
    fn words_and_coefficients() {
        let q = a2();
        let e = parse_element("f[1](0) * f[2](0)", &q).unwrap();
        assert_eq!(e.to_string(), "f[1](0)*f[2](0)");
        let e = parse_element(
            "q^-4 * f[1](1)*f[1](2) + q^-1 * P2[1](1,1)",
            &Quiver::type_a(1),
        )
        .unwrap();
        assert_eq!(e.to_string(), "q^-4 * f[1](1)*f[1](2) + q^-1 * P2[1](1,1)");
        let e = parse_element("(q^-1 - q^1) * f[1,2](0,0)", &q).unwrap();
        assert_eq!(e.to_string(), "(q^-1 - q^1) * f[1,2](0,0)");
    }

    #[test]
    fn brackets_expand() {
        let q = a2();
        let e = parse_element("[f[1](0), f[2](0)]_q^1", &q).unwrap();
        assert_eq!(e.to_string(), "f[1](0)*f[2](0) - q^1 * f[2](0)*f[1](0)");
    }

    #[test]
    fn shorthands() {
        let q = Quiver::type_a(1);
        assert_eq!(parse_element("0", &q).unwrap().to_string(), "0");
        assert_eq!(parse_element("1", &q).unwrap().to_string(), "1");
        assert_eq!(parse_element("q", &q).unwrap().to_string(), "q^1 * 1");
        assert_eq!(
            parse_element("-f[1](0)", &q).unwrap().to_string(),
            "-f[1](0)"
        );
        assert_eq!(
            parse_element("2 * f[1](2)", &q).unwrap().to_string(),
            "2 * f[1](2)"
        );
    }

    #[test]
    fn grade_mismatch_is_reported() {
        let q = a2();
        let err = parse_element("f[1,2](0,0) + f[1](0)", &q).unwrap_err();
        assert!(err.message.contains("grade mismatch"), "{}", err.message);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let q = a2();
        let err = parse_element("f[1](0) +", &q).unwrap_err();
        assert_eq!(err.position, 9);
        let err = parse_element("f[3](0)", &q).unwrap_err();
        assert!(err.message.contains("vertex 3"));
        let err = parse_element("f[1](0) f[2](0)", &q).unwrap_err();
        assert!(err.message.contains("trailing"));
    }
}
