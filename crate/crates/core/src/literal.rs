//! Text literals.
//!
//! ```text
//! composition  := "(" ")" | "(" entry ("," entry)* ")"
//! entry        := "e" | positive | "e^" positive
//! weak         := "[" "]" | "[" natural ("," natural)* "]"
//! tensor       := "1" | "x^" natural ("|" natural)*
//! element      := "0" | term (("+" | "-") term)*
//! term         := [integer "*"] key
//! ```
//!
//! `e^3` expands to `e,e,e`. An element key is a composition with an optional
//! `M` or `F` prefix (unprefixed keys are monomial), or a tensor for `Ш(x)`
//! elements. Whitespace between tokens is ignored. Errors report a 1-based
//! character column.

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::composition::{Composition, WeakComposition};
use crate::error::{Error, Result};
use crate::hopf::{Basis, WQSymElem};
use crate::lincomb::LinComb;
use crate::monoid::NTilde;
use crate::rota_baxter::{PureTensor, ShaElem};

struct Cursor<'a> {
    what: &'static str,
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(what: &'static str, input: &'a str) -> Self {
        Self {
            what,
            input,
            pos: 0,
        }
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            what: self.what,
            input: self.input.to_string(),
            column: self.input[..pos].chars().count() + 1,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(self.pos, message)
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn unexpected(&mut self, wanted: &str) -> Error {
        match self.peek() {
            Some(c) => self.error(format!("expected {wanted}, found `{c}`")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected trailing `{c}`"))),
        }
    }

    /// A run of decimal digits without a redundant leading zero.
    fn natural(&mut self) -> Result<BigUint> {
        self.skip_ws();
        let start = self.pos;
        let digits = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if digits == 0 {
            return Err(self.unexpected("a decimal number"));
        }
        let text = &self.rest()[..digits];
        if digits > 1 && text.starts_with('0') {
            return Err(self.error_at(start, "numbers must not have leading zeros"));
        }
        self.pos += digits;
        Ok(text.parse().expect("ascii digits"))
    }

    fn positive(&mut self) -> Result<BigUint> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let n = self.natural()?;
        if n.is_zero() {
            return Err(self.error_at(start, "expected a positive number, found 0"));
        }
        Ok(n)
    }

    fn entry(&mut self, out: &mut Vec<NTilde>) -> Result<()> {
        if self.eat('e') {
            if self.eat('^') {
                let n = self.positive()?;
                let n: usize = n
                    .try_into()
                    .map_err(|_| self.error("epsilon run is too long"))?;
                out.extend(std::iter::repeat_n(NTilde::Eps, n));
            } else {
                out.push(NTilde::Eps);
            }
            return Ok(());
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                out.push(NTilde::Pos(self.positive()?));
                Ok(())
            }
            _ => Err(self.unexpected("`e` or a positive number")),
        }
    }

    fn composition(&mut self) -> Result<Composition> {
        self.expect('(')?;
        let mut entries = Vec::new();
        if !self.eat(')') {
            loop {
                self.entry(&mut entries)?;
                if self.eat(')') {
                    break;
                }
                if !self.eat(',') {
                    return Err(self.unexpected("`,` or `)`"));
                }
            }
        }
        Ok(Composition::from_vec_unchecked(entries))
    }

    fn weak(&mut self) -> Result<WeakComposition> {
        self.expect('[')?;
        let mut entries = Vec::new();
        if !self.eat(']') {
            loop {
                entries.push(self.natural()?);
                if self.eat(']') {
                    break;
                }
                if !self.eat(',') {
                    return Err(self.unexpected("`,` or `]`"));
                }
            }
        }
        Ok(WeakComposition(entries))
    }

    fn tensor(&mut self) -> Result<PureTensor> {
        if self.eat('1') {
            return Ok(PureTensor::unit());
        }
        if !self.eat('x') {
            return Err(self.unexpected("`1` or `x^`"));
        }
        self.expect('^')?;
        let head = self.natural()?;
        let mut tail = Vec::new();
        while self.eat('|') {
            tail.push(self.natural()?);
        }
        Ok(PureTensor::new(head, WeakComposition(tail)))
    }

    /// `[integer "*"]`, returning the parsed coefficient or one.
    fn coefficient(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let save = self.pos;
                let n = self.natural()?;
                if self.eat('*') {
                    Ok(BigInt::from(n))
                } else {
                    // A bare `1` is the tensor unit, not a coefficient.
                    self.pos = save;
                    Ok(BigInt::one())
                }
            }
            _ => Ok(BigInt::one()),
        }
    }

    /// A signed sum of terms; `key` parses one basis key.
    fn sum<K: Ord>(&mut self, mut key: impl FnMut(&mut Self) -> Result<K>) -> Result<LinComb<K>> {
        let mut out = LinComb::zero();
        let save = self.pos;
        if self.eat('0') && self.peek().is_none() {
            return Ok(out);
        }
        self.pos = save;

        let mut negative = self.eat('-');
        loop {
            let c = self.coefficient()?;
            let k = key(self)?;
            out.add_term(k, if negative { -c } else { c });
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        self.finish()?;
        Ok(out)
    }
}

impl FromStr for Composition<NTilde> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new("composition", s);
        let c = cur.composition()?;
        cur.finish()?;
        Ok(c)
    }
}

impl FromStr for WeakComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new("weak composition", s);
        let w = cur.weak()?;
        cur.finish()?;
        Ok(w)
    }
}

impl FromStr for PureTensor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cur = Cursor::new("tensor", s);
        let t = cur.tensor()?;
        cur.finish()?;
        Ok(t)
    }
}

/// Parses an element such as `M(3) + 2*M(2,1) - (e)` or `F(e,2,e^3)`.
///
/// Every term must use the same basis; unprefixed keys count as `default`.
pub fn parse_element(s: &str, default: Basis) -> Result<WQSymElem> {
    let mut cur = Cursor::new("element", s);
    let mut basis: Option<Basis> = None;
    let value = cur.sum(|cur| {
        let start = {
            cur.skip_ws();
            cur.pos
        };
        let tag = if cur.eat('M') {
            Basis::M
        } else if cur.eat('F') {
            Basis::F
        } else {
            default
        };
        match basis {
            None => basis = Some(tag),
            Some(b) if b != tag => {
                return Err(cur.error_at(start, format!("mixes the {b} and {tag} bases")));
            }
            Some(_) => {}
        }
        cur.composition()
    })?;
    Ok(WQSymElem {
        basis: basis.unwrap_or(default),
        value,
    })
}

impl FromStr for WQSymElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_element(s, Basis::M)
    }
}

/// Parses a `Ш(x)` element such as `x^1 + 2*x^0|1|1 - 1`.
impl FromStr for ShaElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Cursor::new("tensor", s).sum(Cursor::tensor)
    }
}
