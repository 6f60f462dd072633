//! Recursive-descent parser for rational expressions such as `-b/a`,
//! `(a + 1)/(a - 1)` or `4*a*f23_1*f13_3 + (a*f23_2)^2`.

use num_bigint::BigInt;

use super::{MultiPoly, RatFunc, Rational};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

pub(crate) fn parse_expression(src: &str) -> Result<RatFunc> {
    let mut p = Parser {
        src,
        chars: src.chars().collect(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(value)
}

impl Parser<'_> {
    fn error(&self, reason: impl Into<String>) -> Error {
        Error::parse(self.src, format!("{} at offset {}", reason.into(), self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == '*' {
                &acc * &rhs
            } else {
                acc.checked_div(&rhs).map_err(|_| self.error("division by zero"))?
            };
        }
        Ok(acc)
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
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let exp: u32 = digits
                .parse()
                .map_err(|_| self.error("expected a non-negative integer exponent"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = digits.parse().map_err(|_| self.error("bad integer"))?;
                Ok(RatFunc::constant(Rational::integer(n)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Ok(RatFunc::from(MultiPoly::var(&name)))
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let r = parse_expression("1 + 2*3^2 - 4/2").unwrap();
        assert_eq!(r.as_constant(), Some(Rational::from(17)));
        let r = parse_expression("-a^2").unwrap();
        assert_eq!(r.to_string(), "-a^2");
        let r = parse_expression("3/2*a").unwrap();
        assert_eq!(r.to_string(), "3/2*a");
    }

    #[test]
    fn errors() {
        for bad in ["", "(a", "a +", "2 ^ x", "a $ b", "1/0"] {
            assert!(parse_expression(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn unicode_identifiers() {
        let r = parse_expression("α^2 + β^2 - γ^2").unwrap();
        assert_eq!(r.variables(), vec!["α", "β", "γ"]);
    }
}
