use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::coeff::{self, Coeff, Rational};
use super::universe::{SymbolKind, Universe};
use super::{PolyError, PolyExpr};

/// Recursive-descent reader for the canonical text form (and a little more:
/// any sum of products of numbers, `i`, symbols with integer powers, and
/// parenthesised sub-expressions).
struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    u: &'a Arc<Universe>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<PolyExpr, PolyError> {
        let mut acc = PolyExpr::zero(self.u);
        let mut sign = if self.eat(b'-') { -1 } else { 1 };
        loop {
            let t = self.product()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<PolyExpr, PolyError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn factor(&mut self) -> Result<PolyExpr, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let value = if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    Rational::new(num, den)
                } else {
                    Rational::from_integer(num)
                };
                let c = if self.src.get(self.pos) == Some(&b'i')
                    && !self.src.get(self.pos + 1).is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
                {
                    self.pos += 1;
                    Coeff::new(Rational::zero(), value)
                } else {
                    coeff::from_rational(value)
                };
                Ok(PolyExpr::constant(self.u, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if name == "i" {
                    return Ok(PolyExpr::i(self.u));
                }
                let s = self.u.symbol(name)?;
                let mut exp: i64 = 1;
                if self.src.get(self.pos) == Some(&b'^') {
                    self.pos += 1;
                    let neg = self.src.get(self.pos) == Some(&b'-');
                    if neg {
                        self.pos += 1;
                    }
                    let k: i64 = self.integer()?.try_into().map_err(|_| self.err("exponent too large"))?;
                    exp = if neg { -k } else { k };
                }
                let slot = if exp < 0 {
                    match self.u.kind(s) {
                        SymbolKind::Constant => self.u.inverse(s)?,
                        _ => return Err(PolyError::NotInvertible(name.to_string())),
                    }
                } else {
                    s
                };
                Ok(PolyExpr::term(self.u, Coeff::one(), &[(slot, exp.unsigned_abs() as u32)]))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

impl PolyExpr {
    /// Reads the canonical text form produced by `Display`.
    pub fn parse(text: &str, u: &Arc<Universe>) -> Result<PolyExpr, PolyError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, u };
        let e = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(e)
    }
}
