// SPDX-License-Identifier: Apache-2.0

//! Parser for textual rational functions such as `(t1^2 - 3*t2)/(t1 + 1)`.

use std::str::FromStr;

use super::coeff::Coefficient;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Var(usize),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token::Num(chars[start..i].iter().collect()));
            }
            't' => {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let idx: usize = chars[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse(format!("expected variable index in {s:?}")))?;
                if idx == 0 {
                    return Err(Error::Parse("variables are numbered from t1".into()));
                }
                out.push(Token::Var(idx - 1));
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(Token::Op(c));
                i += 1;
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser<C> {
    tokens: Vec<Token>,
    pos: usize,
    _field: std::marker::PhantomData<C>,
}

impl<C: Coefficient> Parser<C> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc<C>> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc<C>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.eat('/') {
                let rhs = self.unary()?;
                acc = acc.try_div(&rhs)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc<C>> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc<C>> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        match self.peek().cloned() {
            Some(Token::Num(digits)) => {
                self.pos += 1;
                let e: i32 = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("exponent {digits} too large")))?;
                base.powi(if negative { -e } else { e })
            }
            _ => Err(Error::Parse("expected integer exponent".into())),
        }
    }

    fn atom(&mut self) -> Result<RatFunc<C>> {
        match self.peek().cloned() {
            Some(Token::Num(digits)) => {
                self.pos += 1;
                let c = C::from_literal(&digits)
                    .ok_or_else(|| Error::Parse(format!("bad literal {digits}")))?;
                Ok(RatFunc::constant(c))
            }
            Some(Token::Var(i)) => {
                self.pos += 1;
                Ok(RatFunc::var(i))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                Ok(inner)
            }
            Some(Token::Op(c)) => Err(Error::Parse(format!("unexpected '{c}'"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parses a rational function; division by zero is reported as an error.
pub fn parse_ratfunc<C: Coefficient>(s: &str) -> Result<RatFunc<C>> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        _field: std::marker::PhantomData,
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(value)
}

impl<C: Coefficient> FromStr for RatFunc<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ratfunc(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf2;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type R = RatFunc<BigRational>;

    #[test]
    fn parses_and_round_trips() {
        let f: R = "(t1^2-t2^2)/(t1-t2)".parse().unwrap();
        assert_eq!(f, R::var(0) + R::var(1));
        let g: R = "2*t1*t2".parse().unwrap();
        assert_eq!(g.to_string(), "(2*t1*t2)/(1)");
        let back: R = g.to_string().parse().unwrap();
        assert_eq!(back, g);
        let h: R = "-1/3*t1 + t2^-2".parse().unwrap();
        let printed: R = h.to_string().parse().unwrap();
        assert_eq!(printed, h);
        assert!(R::one().is_one());
    }

    #[test]
    fn errors() {
        assert!("t1/0".parse::<R>().is_err());
        assert!("t0".parse::<R>().is_err());
        assert!("(t1".parse::<R>().is_err());
        assert!("t1 $".parse::<R>().is_err());
        assert!("".parse::<R>().is_err());
    }

    #[test]
    fn characteristic_two_literals() {
        let f: RatFunc<Gf2> = "2*t1 + 3".parse().unwrap();
        assert!(f.is_one());
        assert!("t1 + t1".parse::<RatFunc<Gf2>>().unwrap().is_zero());
    }
}
