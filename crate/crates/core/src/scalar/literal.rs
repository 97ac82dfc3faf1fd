//! Scalar literal grammar.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary   := ('+' | '-') unary | power
//! power   := primary ('^' '-'? integer)?
//! primary := integer | 'q' | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_traits::One;

use super::{Field, RatFunc, Rational};
use crate::error::{Error, Result};

/// Parses a literal such as `-(q+1)/q^2` into `Q(q)`.
pub fn parse_literal(src: &str) -> Result<RatFunc> {
    let mut p = Parser {
        chars: src.char_indices().collect(),
        pos: 0,
        len: src.len(),
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(i, _)| i) + 1
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            column: self.column(),
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            if c == '+' {
                acc += &rhs;
            } else {
                acc -= &rhs;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc *= &rhs;
                }
                Some('/') => {
                    self.pos += 1;
                    let col = self.column();
                    let rhs = self.unary()?;
                    acc = acc.div(&rhs).map_err(|_| Error::Parse {
                        column: col,
                        message: "division by zero".into(),
                    })?;
                }
                Some(c) if c == 'q' || c == '(' || c.is_ascii_digit() => {
                    let rhs = self.power()?;
                    acc *= &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.primary()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let col = self.column();
        let digits = self.digits().ok_or_else(|| self.error("expected an exponent"))?;
        let k: i64 = digits.parse().map_err(|_| self.error("exponent too large"))?;
        base.pow(if negative { -k } else { k }).map_err(|_| Error::Parse {
            column: col,
            message: "zero raised to a negative power".into(),
        })
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().map(|&(_, c)| c).collect())
    }

    fn primary(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some('q') => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().unwrap();
                let n: BigInt = d.parse().expect("ascii digits");
                Ok(RatFunc::constant(Rational::new(n, BigInt::one())))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn grammar_examples() {
        let x = parse_literal("-(q+1)/q^2").unwrap();
        assert_eq!(x, parse_literal("-1/q - 1/q^2").unwrap());
        assert_eq!(parse_literal("q^-1").unwrap(), RatFunc::q_pow(-1));
        assert_eq!(parse_literal("2q").unwrap(), parse_literal("2*q").unwrap());
        assert_eq!(parse_literal("3/2*q^2").unwrap().to_string(), "3/2*q^2");
        assert!(parse_literal(" 0 ").unwrap().is_zero());
    }

    #[test]
    fn errors_carry_columns() {
        match parse_literal("1 + )") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_literal("1/(q-q)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_literal("(q+1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_literal(""), Err(Error::Parse { .. })));
    }
}
