//! A small infix reader for polynomial literals such as `-beta`,
//! `3/2*x_1^2 - t_1` or `x_1^(2)`.
//!
//! Identifiers are `[A-Za-z_][A-Za-z0-9_]*`, optionally followed by an
//! upper index `^(k)` which belongs to the name. Plain `^k` is a power.

use num_bigint::BigInt;

use super::{Rational, Scalar};
use crate::error::{Error, Result};

pub fn parse_scalar(src: &str) -> Result<Scalar> {
    let mut p = Parser { chars: src.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
    if p.chars.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let value = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!("unexpected `{}` in `{src}`", p.chars[p.pos])));
    }
    Ok(value)
}

/// Names of identifiers occurring in an expression, in order of appearance.
pub fn identifiers(src: &str) -> Vec<String> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        if chars[i].is_ascii_alphabetic() || chars[i] == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(chars[start..i].iter().collect());
        } else {
            i += 1;
        }
    }
    out
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let neg = self.eat('-');
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = &acc * &self.power()?;
        }
        Ok(if neg { -acc } else { acc })
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.digits()?;
            let e: u32 = e.parse().map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected digits at position {start}")));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits()?.parse().expect("digit run");
                let mut r = Rational::from_integer(num);
                if self.eat('/') {
                    let den: BigInt = self.digits()?.parse().expect("digit run");
                    if den == BigInt::from(0) {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    r /= Rational::from_integer(den);
                }
                Ok(Scalar::from_rational(r))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                // upper index `^(k)` is part of the name
                if self.chars[self.pos..].starts_with(&['^', '(']) {
                    let mut j = self.pos + 2;
                    while self.chars.get(j).is_some_and(|c| c.is_ascii_digit()) {
                        j += 1;
                    }
                    if j > self.pos + 2 && self.chars.get(j) == Some(&')') {
                        self.pos = j + 1;
                    }
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                Ok(Scalar::var(&name))
            }
            other => Err(Error::Parse(format!("unexpected {:?} at position {}", other, self.pos))),
        }
    }
}
