//! Scalar literal grammar:
//!
//! ```text
//! expr     := term (('+' | '-' | '−') term)*
//! term     := rational | rational '*' zpow | zpow
//! zpow     := 'z' ['^' nat]
//! rational := int ['/' posint]
//! ```
//!
//! Whitespace between tokens is ignored and a leading sign is accepted on
//! any term, so every printed scalar parses back to itself.

use num::{BigInt, BigRational, One, Zero};

use super::field::{FieldSpec, Scalar};
use crate::error::{HopfError, Result};

struct Cursor<'a> {
    text: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    uses_z: bool,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            text,
            chars: text.char_indices().collect(),
            pos: 0,
            uses_z: false,
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

    fn byte_pos(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(b, _)| b)
    }

    fn error(&self, msg: impl Into<String>) -> HopfError {
        HopfError::Syntax {
            text: self.text.to_string(),
            pos: self.byte_pos(),
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num = self.digits()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(num))
        }
    }

    fn zpow(&mut self) -> Result<u64> {
        // caller has checked for 'z'
        self.pos += 1;
        self.uses_z = true;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.digits()?;
            e.try_into().map_err(|_| self.error("exponent too large"))
        } else {
            Ok(1)
        }
    }

    /// A term without its sign: (coefficient, power of z).
    fn term(&mut self) -> Result<(BigRational, u64)> {
        match self.peek() {
            Some('z') => Ok((BigRational::one(), self.zpow()?)),
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                if self.peek() == Some('*') {
                    self.pos += 1;
                    if self.peek() != Some('z') {
                        return Err(self.error("expected 'z' after '*'"));
                    }
                    Ok((r, self.zpow()?))
                } else {
                    Ok((r, 0))
                }
            }
            Some(_) => Err(self.error("expected a number or 'z'")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('−') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }
}

/// Parses a scalar literal into the canonical element of `field`.
pub fn parse_scalar(text: &str, field: &FieldSpec) -> Result<Scalar> {
    let mut cur = Cursor::new(text);
    let n = field.order() as u64;
    let mut poly = vec![BigRational::zero(); n as usize];
    let mut negative = cur.sign().unwrap_or(false);
    loop {
        let (coef, power) = cur.term()?;
        let slot = &mut poly[(power % n) as usize];
        if negative {
            *slot -= coef;
        } else {
            *slot += coef;
        }
        match cur.sign() {
            Some(neg) => negative = neg,
            None => break,
        }
    }
    if cur.peek().is_some() {
        return Err(cur.error("trailing input"));
    }
    if cur.uses_z && n == 1 {
        return Err(HopfError::RootOfUnityOverRationals(text.to_string()));
    }
    Ok(field.from_poly(poly))
}
