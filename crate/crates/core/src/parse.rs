//! Recursive-descent parser for series expressions.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := '-' factor | scalar | VAR '^' exponent | VAR | '(' expr ')'
//!           | 'O' '(' VAR '^' INT ')'
//! scalar   := INT ('/' INT)?
//! exponent := INT | '(' INT (',' INT)* ')'
//! ```
//!
//! `INT` in exponents may carry a sign. `VAR` defaults to `e`. `O(..)` is
//! only meaningful for truncated Laurent series.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::laurent::{LaurentError, TruncatedLaurent};
use crate::monoid::{MonoidError, OrderedMonoid};
use crate::scalar::{Ring, ScalarError};
use crate::series::{Series, SeriesError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at {pos}: {message}")]
    Syntax { pos: Pos, message: String },
    #[error("at {pos}: {source}")]
    Exponent { pos: Pos, source: MonoidError },
    #[error("at {pos}: O(...) is only allowed for truncated Laurent series")]
    TruncOutsideLaurent { pos: Pos },
    #[error("Laurent exponents are single integers, at {pos}")]
    LaurentArity { pos: Pos },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesExpr {
    /// `num/den * VAR^exponent`; no exponent means the neutral element.
    Term {
        num: BigInt,
        den: BigInt,
        exponent: Option<Vec<i64>>,
        at: Pos,
    },
    Sum(Box<SeriesExpr>, Box<SeriesExpr>),
    Product(Box<SeriesExpr>, Box<SeriesExpr>),
    Neg(Box<SeriesExpr>),
    TruncMarker { n: i64, at: Pos },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(n) => write!(f, "{n}"),
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Slash => write!(f, "'/'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::Comma => write!(f, "','"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ExprError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c.is_whitespace() {
            chars.next();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Num(digits.parse().expect("ascii digits")), pos));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut word = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                word.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(word), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            other => {
                return Err(ExprError::Syntax {
                    pos,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        chars.next();
        column += 1;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column }));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    var: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ExprError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {tok}, found {}", self.peek()))
        }
    }

    fn expr(&mut self) -> Result<SeriesExpr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = SeriesExpr::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = SeriesExpr::Neg(Box::new(self.term()?));
                    lhs = SeriesExpr::Sum(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<SeriesExpr, ExprError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = SeriesExpr::Product(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn signed_int(&mut self) -> Result<i64, ExprError> {
        let negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        match self.bump() {
            (Tok::Num(n), pos) => {
                let n = if negative { -n } else { n };
                i64::try_from(n).map_err(|_| ExprError::Syntax {
                    pos,
                    message: "exponent out of range".into(),
                })
            }
            (other, pos) => Err(ExprError::Syntax {
                pos,
                message: format!("expected an integer exponent, found {other}"),
            }),
        }
    }

    fn exponent(&mut self) -> Result<Vec<i64>, ExprError> {
        if *self.peek() != Tok::LParen {
            return Ok(vec![self.signed_int()?]);
        }
        self.bump();
        let mut parts = vec![self.signed_int()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            parts.push(self.signed_int()?);
        }
        self.expect(Tok::RParen)?;
        Ok(parts)
    }

    fn factor(&mut self) -> Result<SeriesExpr, ExprError> {
        let at = self.pos();
        match self.peek().clone() {
            Tok::Minus => {
                self.bump();
                Ok(SeriesExpr::Neg(Box::new(self.factor()?)))
            }
            Tok::Num(num) => {
                self.bump();
                let den = if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        (Tok::Num(d), _) => d,
                        (other, pos) => {
                            return Err(ExprError::Syntax {
                                pos,
                                message: format!("expected a denominator, found {other}"),
                            })
                        }
                    }
                } else {
                    BigInt::one()
                };
                Ok(SeriesExpr::Term {
                    num,
                    den,
                    exponent: None,
                    at,
                })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "O" && self.toks[self.at + 1].0 == Tok::LParen => {
                self.bump();
                self.bump();
                match self.bump() {
                    (Tok::Ident(v), _) if v == self.var => {}
                    (other, pos) => {
                        return Err(ExprError::Syntax {
                            pos,
                            message: format!("expected {} inside O(...), found {other}", self.var),
                        })
                    }
                }
                self.expect(Tok::Caret)?;
                let n = self.signed_int()?;
                self.expect(Tok::RParen)?;
                Ok(SeriesExpr::TruncMarker { n, at })
            }
            Tok::Ident(name) if name == self.var => {
                self.bump();
                let exponent = if *self.peek() == Tok::Caret {
                    self.bump();
                    Some(self.exponent()?)
                } else {
                    None
                };
                Ok(SeriesExpr::Term {
                    num: BigInt::one(),
                    den: BigInt::one(),
                    exponent: Some(exponent.unwrap_or_else(|| vec![1])),
                    at,
                })
            }
            Tok::Ident(name) => self.error(format!("unknown variable {name:?}, expected {:?}", self.var)),
            other => self.error(format!("unexpected {other}")),
        }
    }
}

/// Parses `text` into an expression tree with `var` as the series variable.
pub fn parse_expr(text: &str, var: &str) -> Result<SeriesExpr, ExprError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        var,
    };
    let expr = p.expr()?;
    if *p.peek() != Tok::End {
        return p.error(format!("unexpected {}", p.peek()));
    }
    Ok(expr)
}

/// Evaluates an expression to a finitely supported series over `monoid`.
pub fn eval_series(expr: &SeriesExpr, monoid: &Arc<OrderedMonoid>, ring: Ring) -> Result<Series, ExprError> {
    Ok(match expr {
        SeriesExpr::Term { num, den, exponent, at } => {
            let c = ring.from_fraction(num.clone(), den.clone())?;
            let e = match exponent {
                None => monoid.zero(),
                Some(parts) => monoid
                    .elem_from_ints(parts)
                    .map_err(|source| ExprError::Exponent { pos: *at, source })?,
            };
            Series::monomial(Arc::clone(monoid), c, e)?
        }
        SeriesExpr::Sum(a, b) => eval_series(a, monoid, ring)?.add(&eval_series(b, monoid, ring)?)?,
        SeriesExpr::Product(a, b) => {
            eval_series(a, monoid, ring)?.convolve(&eval_series(b, monoid, ring)?)?
        }
        SeriesExpr::Neg(a) => eval_series(a, monoid, ring)?.neg(),
        SeriesExpr::TruncMarker { at, .. } => return Err(ExprError::TruncOutsideLaurent { pos: *at }),
    })
}

/// Evaluates an expression to a truncated Laurent series in `e`.
pub fn eval_laurent(expr: &SeriesExpr, ring: Ring) -> Result<TruncatedLaurent, ExprError> {
    Ok(match expr {
        SeriesExpr::Term { num, den, exponent, at } => {
            let c = ring.from_fraction(num.clone(), den.clone())?;
            let n = match exponent.as_deref() {
                None => 0,
                Some([n]) => *n,
                Some(_) => return Err(ExprError::LaurentArity { pos: *at }),
            };
            TruncatedLaurent::exact(ring, n, vec![c])?
        }
        SeriesExpr::Sum(a, b) => eval_laurent(a, ring)?.add(&eval_laurent(b, ring)?)?,
        SeriesExpr::Product(a, b) => eval_laurent(a, ring)?.mul(&eval_laurent(b, ring)?)?,
        SeriesExpr::Neg(a) => eval_laurent(a, ring)?.neg(),
        SeriesExpr::TruncMarker { n, .. } => TruncatedLaurent::big_o(ring, *n),
    })
}

pub fn parse_series(text: &str, monoid: &Arc<OrderedMonoid>, ring: Ring, var: &str) -> Result<Series, ExprError> {
    eval_series(&parse_expr(text, var)?, monoid, ring)
}

pub fn parse_laurent(text: &str, ring: Ring, var: &str) -> Result<TruncatedLaurent, ExprError> {
    eval_laurent(&parse_expr(text, var)?, ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::MonoidElem;
    use crate::scalar::{make_rational, Scalar};

    fn q(n: i64, d: i64) -> Scalar {
        make_rational(n, d).unwrap()
    }

    #[test]
    fn integer_exponents() {
        let z = Arc::new(OrderedMonoid::IntLine);
        let f = parse_series("3*e^-2 + 5 + 7*e^3", &z, Ring::Rational, "e").unwrap();
        let want = Series::from_terms(
            z.clone(),
            Ring::Rational,
            [(MonoidElem::Int(-2), q(3, 1)), (MonoidElem::Int(0), q(5, 1)), (MonoidElem::Int(3), q(7, 1))],
        )
        .unwrap();
        assert_eq!(f, want);
    }

    #[test]
    fn vector_exponents() {
        let v = Arc::new(OrderedMonoid::VectorProduct(2));
        let f = parse_series("e^(1,-2) + 2*e^(0,0)", &v, Ring::Rational, "e").unwrap();
        assert_eq!(f.coefficient(&MonoidElem::Vector(vec![1, -2])), q(1, 1));
        assert_eq!(f.coefficient(&MonoidElem::Vector(vec![0, 0])), q(2, 1));
        assert_eq!(f.len(), 2);
        let err = parse_series("e^3", &v, Ring::Rational, "e").unwrap_err();
        assert!(matches!(err, ExprError::Exponent { pos: Pos { line: 1, column: 1 }, .. }));
    }

    #[test]
    fn laurent_mode() {
        let f = parse_laurent("1/2*e^-1 + 1 + O(e^2)", Ring::Rational, "e").unwrap();
        assert_eq!(f.ord(), -1);
        assert_eq!(f.trunc(), 2);
        assert_eq!(f.coefficients(), &[q(1, 2), q(1, 1), q(0, 1)]);
        assert!(!f.is_exact());
    }

    #[test]
    fn trunc_marker_rejected_outside_laurent() {
        let z = Arc::new(OrderedMonoid::IntLine);
        let err = parse_series("1 + O(e^2)", &z, Ring::Rational, "e").unwrap_err();
        assert_eq!(err, ExprError::TruncOutsideLaurent { pos: Pos { line: 1, column: 5 } });
    }

    #[test]
    fn arithmetic_in_expressions() {
        let z = Arc::new(OrderedMonoid::IntLine);
        let f = parse_series("(e^-1 + 1)*(e - e^2)", &z, Ring::Rational, "e").unwrap();
        let g = parse_series("1 - e^2", &z, Ring::Rational, "e").unwrap();
        assert_eq!(f, g);
        let h = parse_series("-e^3 - -2", &z, Ring::Rational, "e").unwrap();
        assert_eq!(h, parse_series("2 - e^3", &z, Ring::Rational, "e").unwrap());
        let t = parse_series("x^2*x^-1", &z, Ring::Rational, "x").unwrap();
        assert_eq!(t, parse_series("x", &z, Ring::Rational, "x").unwrap());
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_expr("1 +\n  * e", "e").unwrap_err();
        assert!(matches!(err, ExprError::Syntax { pos: Pos { line: 2, column: 3 }, .. }), "{err}");
        assert!(matches!(parse_expr("e^", "e"), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse_expr("(1 + e", "e"), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse_expr("y^2", "e"), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse_expr("1 ? 2", "e"), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse_expr("1 2", "e"), Err(ExprError::Syntax { .. })));
        assert!(matches!(parse_expr("1/0", "e").and_then(|x| eval_laurent(&x, Ring::Rational)), Err(ExprError::Scalar(ScalarError::ZeroDenominator))));
    }

    #[test]
    fn table_exponents() {
        let c3 = Arc::new(OrderedMonoid::FiniteTable(crate::monoid::FiniteTable::cyclic(3)));
        let f = parse_series("e^2*e^2", &c3, Ring::Integer, "e").unwrap();
        assert_eq!(f, Series::indicator(c3.clone(), Ring::Integer, MonoidElem::Index(1)).unwrap());
        assert!(parse_series("e^5", &c3, Ring::Integer, "e").is_err());
    }
}
