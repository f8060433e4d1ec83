//! Text syntax for rational functions in `x`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' ['-' | '+'] integer)?
//! atom   := integer | 'x' | '(' expr ')'
//! ```
//!
//! Evaluation is exact and happens during the parse. Juxtaposition such as
//! `2x` is rejected rather than read as a product.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::poly::Poly;
use crate::ratfun::RatFun;
use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::X => "`x`".into(),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::End => "end of input".into(),
    }
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(src[start..i].parse().expect("digits"))));
                continue;
            }
            b'x' => Tok::X,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = src[i..].chars().next().expect("in bounds");
                return err(i, format!("unexpected character {ch:?}"));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.pos].clone();
        if t.1 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RatFun, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFun, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    let (at, _) = self.bump();
                    let rhs = self.unary()?;
                    acc = match acc.checked_div(&rhs) {
                        Ok(q) => q,
                        Err(_) => return err(at, "division by zero"),
                    };
                }
                Tok::Int(_) | Tok::X | Tok::LParen => {
                    return err(
                        self.offset(),
                        "implicit multiplication; write `*` explicitly",
                    )
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFun, ParseError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFun, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let (at, _) = self.bump();
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
        let (eat, tok) = self.bump();
        let Tok::Int(n) = tok else {
            return err(
                eat,
                format!("expected integer exponent, found {}", describe(&tok)),
            );
        };
        let Some(e) = n.to_i64().filter(|e| *e <= u32::MAX as i64) else {
            return err(eat, "exponent too large");
        };
        if *self.peek() == Tok::Caret {
            return err(self.offset(), "chained `^` is ambiguous; use parentheses");
        }
        let e = if negative { -e } else { e };
        match base.powi(e) {
            Ok(v) => Ok(v),
            Err(_) => err(at, "zero raised to a negative power"),
        }
    }

    fn atom(&mut self) -> Result<RatFun, ParseError> {
        let (at, tok) = self.bump();
        match tok {
            Tok::Int(n) => Ok(RatFun::constant(Rat::from_integer(n))),
            Tok::X => Ok(RatFun::from_poly(Poly::x())),
            Tok::LParen => {
                let inner = self.expr()?;
                let (cat, close) = self.bump();
                if close != Tok::RParen {
                    return err(cat, format!("expected `)`, found {}", describe(&close)));
                }
                Ok(inner)
            }
            other => err(
                at,
                format!("expected a number, `x` or `(`, found {}", describe(&other)),
            ),
        }
    }
}

/// Parses and evaluates a rational function of `x`.
pub fn parse(src: &str) -> Result<RatFun, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        pos: 0,
    };
    let value = p.expr()?;
    if *p.peek() != Tok::End {
        let t = p.peek().clone();
        return err(p.offset(), format!("unexpected {}", describe(&t)));
    }
    Ok(value)
}

/// Parses an expression that must evaluate to a polynomial.
pub fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    let f = parse(src)?;
    if !f.is_polynomial() {
        return err(0, "expected a polynomial");
    }
    Ok(f.num().clone())
}

/// Parses a rational number such as `-3/4` or `7`.
pub fn parse_rational(src: &str) -> Result<Rat, ParseError> {
    let f = parse(src)?;
    match f.as_constant() {
        Some(c) => Ok(c),
        None if f.is_zero() => Ok(Rat::zero()),
        None => err(0, "expected a rational number"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::rat;
    use proptest::prelude::*;

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(parse("x - x").unwrap(), RatFun::zero());
        assert_eq!(parse("1/x + 1/x").unwrap(), rf(&[2], &[0, 1]));
        assert_eq!(
            parse("-x^2").unwrap(),
            RatFun::from_poly(Poly::from_ints(&[0, 0, -1]))
        );
        assert_eq!(
            parse("(-x)^2").unwrap(),
            RatFun::from_poly(Poly::from_ints(&[0, 0, 1]))
        );
        assert_eq!(parse("1 - 2 - 3").unwrap(), RatFun::constant(rat(-4, 1)));
        assert_eq!(parse("12/2/3").unwrap(), RatFun::constant(rat(2, 1)));
        assert_eq!(parse("x^-2").unwrap(), rf(&[1], &[0, 0, 1]));
        assert_eq!(parse("2*x/(4*x+4)").unwrap(), rf(&[0, 1], &[2, 2]));
    }

    #[test]
    fn worked_example_parses() {
        let f = parse("1/(x^3*(x+2)^3*(x+3)*(x^2+1)*(x^2+4*x+5)^2)").unwrap();
        assert_eq!(f.den().degree(), Some(13));
        assert!(f.num().is_one());
    }

    #[test]
    fn errors() {
        let e = parse("2x").unwrap_err();
        assert_eq!(e.offset, 1);
        assert!(e.message.contains("implicit"));
        assert_eq!(parse("1/(x-x)").unwrap_err().offset, 1);
        assert_eq!(parse("(x+1").unwrap_err().offset, 4);
        assert_eq!(parse("x + y").unwrap_err().offset, 4);
        assert!(parse("").is_err());
        assert!(parse("x^x").is_err());
        assert!(parse("x^2^3").is_err());
        assert!(parse("0^-1").is_err());
        assert!(parse("x)").is_err());
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert!(parse_poly("1/x").is_err());
    }

    fn arb_ratfun() -> impl Strategy<Value = RatFun> {
        (
            prop::collection::vec(-30i64..30, 0..5),
            prop::collection::vec(-30i64..30, 1..5),
            1i64..9,
        )
            .prop_filter_map("zero denominator", |(n, d, s)| {
                let f = RatFun::new(Poly::from_ints(&n), Poly::from_ints(&d)).ok()?;
                Some(f.scale(&rat(1, s)))
            })
    }

    proptest! {
        #[test]
        fn display_round_trips(f in arb_ratfun()) {
            let text = f.to_string();
            prop_assert_eq!(parse(&text).unwrap(), f.clone());
            prop_assert_eq!(parse(&parse(&text).unwrap().to_string()).unwrap(), f);
        }
    }
}
