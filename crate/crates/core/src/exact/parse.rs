//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar: integer and fraction literals (`3`, `3/2`), declared variable
//! names, `+ - * ^` and parentheses. `^` takes nonnegative integer literals.
//! This grammar is normative for every file format of the CLI, and printing
//! a polynomial re-parses to the same polynomial.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::poly::{Coeff, CoeffRing, MultiPoly};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num { num: BigInt, den: Option<BigInt> },
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token with its starting byte offset; `None` at end of input.
    fn next(&mut self) -> Result<Option<(usize, Tok)>> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'0'..=b'9' => {
                let num = self.read_int();
                // optional fraction part
                let save = self.pos;
                self.skip_ws();
                if self.pos < self.src.len() && self.src[self.pos] == b'/' {
                    self.pos += 1;
                    self.skip_ws();
                    if self.pos >= self.src.len() || !self.src[self.pos].is_ascii_digit() {
                        return Err(Error::Syntax {
                            offset: self.pos,
                            msg: "expected digits after `/`".to_string(),
                        });
                    }
                    let den = self.read_int();
                    Tok::Num { num, den: Some(den) }
                } else {
                    self.pos = save;
                    Tok::Num { num, den: None }
                }
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let name = core::str::from_utf8(&self.src[self.pos..end])
                    .expect("ascii")
                    .to_string();
                self.pos = end;
                Tok::Ident(name)
            }
            other => {
                return Err(Error::Syntax {
                    offset: start,
                    msg: alloc::format!("unexpected character `{}`", other as char),
                })
            }
        };
        Ok(Some((start, tok)))
    }

    fn read_int(&mut self) -> BigInt {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .expect("digits parse as BigInt")
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
    ring: CoeffRing,
    vars: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.idx)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.idx).cloned();
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some((_, tok)) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while let Some((_, Tok::Star)) = self.peek() {
            self.bump();
            acc = acc.mul(&self.factor()?)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        // unary minus binds below exponentiation: -x^2 is -(x^2)
        if let Some((_, Tok::Minus)) = self.peek() {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let mut base = self.primary()?;
        while let Some((_, Tok::Caret)) = self.peek() {
            self.bump();
            let off = self.here();
            match self.bump() {
                Some((_, Tok::Num { num, den: None })) => {
                    let e: u32 = num
                        .to_string()
                        .parse()
                        .map_err(|_| Error::NonIntegerExponent { offset: off })?;
                    base = base.pow(e)?;
                }
                _ => return Err(Error::NonIntegerExponent { offset: off }),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<MultiPoly> {
        let off = self.here();
        match self.bump() {
            Some((_, Tok::Num { num, den })) => {
                let c = match (&self.ring, den) {
                    (CoeffRing::Int, None) => Coeff::Int(num),
                    (CoeffRing::Int, Some(_)) => {
                        return Err(Error::Syntax {
                            offset: off,
                            msg: "fraction literal in integer coefficient ring".to_string(),
                        })
                    }
                    (CoeffRing::Fld(f), None) => Coeff::Fld(f.from_bigint(&num)),
                    (CoeffRing::Fld(f), Some(d)) => Coeff::Fld(
                        f.from_ratio(&num, &d)
                            .map_err(|_| Error::Syntax {
                                offset: off,
                                msg: "denominator is zero in the coefficient field".to_string(),
                            })?,
                    ),
                };
                Ok(MultiPoly::constant(self.ring.clone(), self.vars.clone(), c))
            }
            Some((o, Tok::Ident(name))) => {
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(MultiPoly::var(self.ring.clone(), self.vars.clone(), i)),
                    None => Err(Error::UnknownVariable { offset: o, name }),
                }
            }
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some((_, Tok::RParen)) => Ok(inner),
                    other => Err(Error::Syntax {
                        offset: other.map(|(o, _)| o).unwrap_or(self.end),
                        msg: "expected `)`".to_string(),
                    }),
                }
            }
            Some((o, tok)) => Err(Error::Syntax {
                offset: o,
                msg: alloc::format!("unexpected token {tok:?}"),
            }),
            None => Err(Error::Syntax { offset: off, msg: "unexpected end of input".to_string() }),
        }
    }
}

/// Parse an expression into a canonical polynomial over `ring` in the
/// declared variables.
pub fn parse_poly(text: &str, vars: &[&str], ring: CoeffRing) -> Result<MultiPoly> {
    let mut lx = Lexer::new(text);
    let mut toks = Vec::new();
    while let Some(t) = lx.next()? {
        toks.push(t);
    }
    let mut parser = Parser {
        toks,
        idx: 0,
        end: text.len(),
        ring,
        vars: vars.iter().map(|s| s.to_string()).collect(),
    };
    let p = parser.expr()?;
    if let Some((o, tok)) = parser.peek() {
        return Err(Error::Syntax {
            offset: *o,
            msg: alloc::format!("trailing token {tok:?}"),
        });
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::field::Field;

    #[test]
    fn basic_f2() {
        let f2 = Field::prime(2).unwrap();
        let p = parse_poly(
            "x0*x1 + x2^2",
            &["x0", "x1", "x2", "x3"],
            CoeffRing::Fld(f2),
        )
        .unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.total_degree(), Some(2));
    }

    #[test]
    fn like_terms_over_q() {
        let q = Field::rationals();
        let p = parse_poly("3/2*x0 - x0", &["x0"], CoeffRing::Fld(q)).unwrap();
        assert_eq!(p.to_string(), "1/2*x0");
    }

    #[test]
    fn double_star_is_syntax_error() {
        let q = Field::rationals();
        let err = parse_poly("x0 ** 2", &["x0"], CoeffRing::Fld(q)).unwrap_err();
        match err {
            Error::Syntax { offset, .. } => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_variable() {
        let q = Field::rationals();
        let err = parse_poly("x0 + z", &["x0"], CoeffRing::Fld(q)).unwrap_err();
        assert!(matches!(err, Error::UnknownVariable { offset: 5, .. }));
    }

    #[test]
    fn non_integer_exponent() {
        let q = Field::rationals();
        let err = parse_poly("x0^(2)", &["x0"], CoeffRing::Fld(q.clone())).unwrap_err();
        assert!(matches!(err, Error::NonIntegerExponent { .. }));
        let err = parse_poly("x0^1/2", &["x0"], CoeffRing::Fld(q)).unwrap_err();
        assert!(matches!(err, Error::NonIntegerExponent { .. }));
    }

    #[test]
    fn parens_and_unary_minus() {
        let q = Field::rationals();
        let p = parse_poly("-(x0 - 2)*(x0 + 2)", &["x0"], CoeffRing::Fld(q)).unwrap();
        assert_eq!(p.to_string(), "-x0^2 + 4");
    }

    #[test]
    fn print_parse_fixed_point() {
        let q = Field::rationals();
        let p = parse_poly(
            "2*x^3 - 1/3*x*y + y - 7",
            &["x", "y"],
            CoeffRing::Fld(q.clone()),
        )
        .unwrap();
        let reparsed = parse_poly(&p.to_string(), &["x", "y"], CoeffRing::Fld(q)).unwrap();
        assert_eq!(p, reparsed);
    }
}
