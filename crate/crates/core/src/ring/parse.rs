//! Text format: `3*x^2*y - w^3 + 1`, variables `x, y, z, w`, integer
//! coefficients reduced mod `p`, whitespace ignored.

use super::field::PrimeField;
use super::monomial::{Monomial, NVARS, VAR_NAMES};
use super::poly::Polynomial;
use crate::error::{Error, Result};

pub fn parse_poly(text: &str, field: PrimeField) -> Result<Polynomial> {
    parse_poly_at(text, field, 1)
}

/// Parses one polynomial; errors report `line` and a 1-based column.
pub fn parse_poly_at(text: &str, field: PrimeField, line: usize) -> Result<Polynomial> {
    Parser { chars: text.chars().collect(), pos: 0, field, line }.expr()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    field: PrimeField,
    line: usize,
}

impl Parser {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: self.pos + 1, message: message.into() }
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

    fn expr(&mut self) -> Result<Polynomial> {
        let k = self.field;
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let mut negative = false;
            match self.peek() {
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                Some('+') => self.pos += 1,
                Some('-') => {
                    negative = true;
                    self.pos += 1
                }
                Some(c) if !first => return Err(self.err(format!("expected '+' or '-', found '{c}'"))),
                Some(_) => {}
            }
            first = false;
            let (m, mut c) = self.term()?;
            if negative {
                c = k.neg(c);
            }
            terms.push((m, c));
        }
        Ok(Polynomial::from_terms(k, terms))
    }

    fn term(&mut self) -> Result<(Monomial, u32)> {
        let k = self.field;
        let mut coeff = 1u32;
        let mut exp = [0u32; NVARS];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff = k.mul(coeff, self.integer_mod()?),
                Some(c) if VAR_NAMES.contains(&c) => {
                    let var = VAR_NAMES.iter().position(|v| *v == c).unwrap();
                    self.pos += 1;
                    let mut e = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        e = self.exponent()?;
                    }
                    exp[var] += e;
                }
                Some(c) => return Err(self.err(format!("unexpected '{c}'"))),
                None => return Err(self.err("unexpected end of input")),
            }
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if exp.iter().any(|e| *e > 255) {
            return Err(self.err("exponent too large"));
        }
        let m = Monomial::new([exp[0] as u8, exp[1] as u8, exp[2] as u8, exp[3] as u8]);
        Ok((m, coeff))
    }

    fn integer_mod(&mut self) -> Result<u32> {
        let p = self.field.prime() as u64;
        let mut v = 0u64;
        let start = self.pos;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            v = (v * 10 + d as u64) % p;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        Ok(v as u32)
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let mut v = 0u32;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            v = v.saturating_mul(10).saturating_add(d);
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected exponent"));
        }
        Ok(v)
    }
}
