//! Ideal expressions for the `ideal` subcommand.
//!
//! ```text
//! expr    := product (':' product)*
//! product := atom ('*' atom)*
//! atom    := 'H' | 'C' | 'K' | 'N' | '{' int (',' int)* '}' | '(' expr ')'
//! ```
//!
//! `H` is the semigroup, `C` the canonical ideal, `K` the conductor and `N`
//! the normalization. `*` binds tighter than `:`; both associate to the left.

use std::fmt;

use crate::error::Result;
use crate::ideal::RelativeIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Unit,
    Canonical,
    Conductor,
    Normalization,
    Gens(Vec<i64>),
    Product(Box<Expr>, Box<Expr>),
    Colon(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// byte offset into the expression
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at position {}", self.message, self.position)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> std::result::Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: u8) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn expr(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut lhs = self.product()?;
        while self.peek() == Some(b':') {
            self.pos += 1;
            let rhs = self.product()?;
            lhs = Expr::Colon(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn product(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut lhs = self.atom()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.atom()?;
            lhs = Expr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn int(&mut self) -> std::result::Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
        text.parse().map_err(|_| ParseError {
            position: start,
            message: "expected an integer".into(),
        })
    }

    fn atom(&mut self) -> std::result::Result<Expr, ParseError> {
        let atom = match self.peek() {
            Some(b'H') => Expr::Unit,
            Some(b'C') => Expr::Canonical,
            Some(b'K') => Expr::Conductor,
            Some(b'N') => Expr::Normalization,
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                return Ok(e);
            }
            Some(b'{') => {
                self.pos += 1;
                let mut gens = vec![self.int()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    gens.push(self.int()?);
                }
                self.expect(b'}')?;
                return Ok(Expr::Gens(gens));
            }
            Some(c) => return self.err(format!("unexpected '{}'", c as char)),
            None => return self.err("unexpected end of expression"),
        };
        self.pos += 1;
        Ok(atom)
    }
}

pub fn parse(src: &str) -> std::result::Result<Expr, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Expr {
    pub fn eval(&self, h: &NumericalSemigroup) -> Result<RelativeIdeal> {
        Ok(match self {
            Expr::Unit => RelativeIdeal::unit(h),
            Expr::Canonical => RelativeIdeal::canonical(h),
            Expr::Conductor => RelativeIdeal::conductor(h),
            Expr::Normalization => RelativeIdeal::normalization(h),
            Expr::Gens(g) => RelativeIdeal::from_gens(h, g)?,
            Expr::Product(a, b) => a.eval(h)?.product(&b.eval(h)?)?,
            Expr::Colon(a, b) => a.eval(h)?.colon(&b.eval(h)?)?,
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Unit => write!(f, "H"),
            Expr::Canonical => write!(f, "C"),
            Expr::Conductor => write!(f, "K"),
            Expr::Normalization => write!(f, "N"),
            Expr::Gens(g) => {
                let parts: Vec<String> = g.iter().map(i64::to_string).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
            Expr::Product(a, b) => write!(f, "({a}*{b})"),
            Expr::Colon(a, b) => write!(f, "({a}:{b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_grouping() {
        assert_eq!(parse("(H:C)*C").unwrap().to_string(), "((H:C)*C)");
        assert_eq!(parse("H:C*C").unwrap().to_string(), "(H:(C*C))");
        assert_eq!(parse(" { -1, 3 } * K ").unwrap().to_string(), "({-1,3}*K)");
        assert_eq!(parse("H:H:C").unwrap().to_string(), "((H:H):C)");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse("H*").unwrap_err().position, 2);
        assert_eq!(parse("X").unwrap_err().position, 0);
        assert_eq!(parse("(H:C").unwrap_err().position, 4);
        assert_eq!(parse("{1,}").unwrap_err().position, 3);
        assert_eq!(parse("H H").unwrap_err().message, "trailing input");
    }

    #[test]
    fn evaluates_trace() {
        let h = NumericalSemigroup::from_generators(&[7, 8, 11, 17, 20]).unwrap();
        let tr = parse("(H:C)*C").unwrap().eval(&h).unwrap();
        assert_eq!(tr.min(), 14);
        assert!(tr.is_tail());
    }
}
