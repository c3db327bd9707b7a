//! Literal syntax: a signed sum of terms, each a `*`-product of rationals `p/q` and
//! variables `z1`, `z2` with optional `^e`. Whitespace is ignored everywhere, and a
//! missing `*` between a coefficient and a variable is accepted (`3z1`, `1/2 z2`).

use std::str::FromStr;

use num_bigint::BigInt;

use super::{Monomial, Poly2, Rat};
use crate::error::Error;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
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

    fn digits(&mut self) -> Result<&'a str, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Rat, Error> {
        let num: BigInt = self
            .digits()?
            .parse()
            .map_err(|_| self.err("bad integer"))?;
        let den: BigInt = if self.eat(b'/') {
            self.digits()?
                .parse()
                .map_err(|_| self.err("bad integer"))?
        } else {
            BigInt::from(1)
        };
        Rat::from_bigints(num, den).map_err(|_| self.err("zero denominator"))
    }

    fn exponent(&mut self) -> Result<u32, Error> {
        if self.eat(b'^') {
            self.digits()?
                .parse()
                .map_err(|_| self.err("exponent out of range"))
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self, coeff: &mut Rat, mono: &mut Monomial) -> Result<(), Error> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                *coeff = &*coeff * &r;
                Ok(())
            }
            Some(b'z') => {
                self.pos += 1;
                let e = match self.src.get(self.pos) {
                    Some(b'1') => {
                        self.pos += 1;
                        let e = self.exponent()?;
                        Monomial::new(e, 0)
                    }
                    Some(b'2') => {
                        self.pos += 1;
                        let e = self.exponent()?;
                        Monomial::new(0, e)
                    }
                    _ => return Err(self.err("unknown variable; expected z1 or z2")),
                };
                *mono = *mono * e;
                Ok(())
            }
            Some(c) => Err(self.err(format!("unexpected character {:?}", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rat), Error> {
        let mut coeff = Rat::one();
        let mut mono = Monomial::ONE;
        self.factor(&mut coeff, &mut mono)?;
        loop {
            if self.eat(b'*') || matches!(self.peek(), Some(b'z')) {
                self.factor(&mut coeff, &mut mono)?;
            } else {
                break;
            }
        }
        Ok((mono, coeff))
    }

    fn poly(&mut self) -> Result<Poly2, Error> {
        let mut out = Poly2::zero();
        let mut first = true;
        loop {
            let negative = self.eat(b'-');
            if !negative && !self.eat(b'+') && !first {
                break;
            }
            first = false;
            let (m, c) = self.term()?;
            out.add_term(m, if negative { -c } else { c });
        }
        if self.peek().is_some() {
            return Err(self.err("trailing input"));
        }
        Ok(out)
    }
}

impl FromStr for Poly2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        if p.peek().is_none() {
            return Err(p.err("empty polynomial"));
        }
        p.poly()
    }
}
