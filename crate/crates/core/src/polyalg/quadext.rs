//! Scalars and polynomials over `Q(sqrt d)`.
//!
//! A discriminant of `0` denotes `Q` itself; in that case the irrational part is always zero.
//! Values over `Q` combine freely with values over any `Q(sqrt d)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use super::{Monomial, Poly2, Rat};
use crate::error::{Error, Result};

/// `re + im * sqrt(d)` with `d` a nonsquare rational (or `d = 0`, `im = 0` for plain rationals).
#[derive(Clone, Debug, Eq)]
pub struct SqrtExt {
    re: Rat,
    im: Rat,
    d: Rat,
}

fn join_disc(a: &Rat, b: &Rat) -> Rat {
    match (a.is_zero(), b.is_zero()) {
        (true, _) => b.clone(),
        (_, true) => a.clone(),
        _ => {
            assert_eq!(a, b, "mixing different quadratic extensions");
            a.clone()
        }
    }
}

impl SqrtExt {
    pub fn new(re: Rat, im: Rat, d: Rat) -> Result<Self> {
        if im.is_zero() {
            return Ok(SqrtExt::rational(re));
        }
        if d.is_zero() || d.is_square() {
            return Err(Error::InvalidInput(format!(
                "discriminant {d} is a rational square"
            )));
        }
        Ok(SqrtExt { re, im, d })
    }

    pub fn rational(re: Rat) -> Self {
        SqrtExt {
            re,
            im: Rat::zero(),
            d: Rat::zero(),
        }
    }

    pub fn zero() -> Self {
        SqrtExt::rational(Rat::zero())
    }

    pub fn one() -> Self {
        SqrtExt::rational(Rat::one())
    }

    /// A square root of `r`: rational and nonnegative when `r` is a rational square,
    /// otherwise the generator `sqrt r` of `Q(sqrt r)`.
    pub fn sqrt_of(r: &Rat) -> Self {
        match r.sqrt_exact() {
            Some(s) => SqrtExt::rational(s),
            None => SqrtExt {
                re: Rat::zero(),
                im: Rat::one(),
                d: r.clone(),
            },
        }
    }

    pub fn re(&self) -> &Rat {
        &self.re
    }

    pub fn im(&self) -> &Rat {
        &self.im
    }

    /// Discriminant, `0` for rationals.
    pub fn disc(&self) -> &Rat {
        &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm(&self) -> Rat {
        &(&self.re * &self.re) - &(&(&self.im * &self.im) * &self.d)
    }

    pub fn conj(&self) -> Self {
        SqrtExt {
            re: self.re.clone(),
            im: -&self.im,
            d: self.d.clone(),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm().recip()?;
        let c = self.conj();
        Some(SqrtExt {
            re: &c.re * &n,
            im: &c.im * &n,
            d: c.d,
        })
    }

    pub fn checked_div(&self, rhs: &SqrtExt) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    fn normalized(self) -> Self {
        if self.im.is_zero() {
            SqrtExt::rational(self.re)
        } else {
            self
        }
    }
}

impl PartialEq for SqrtExt {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im && (self.im.is_zero() || self.d == other.d)
    }
}

impl Add<&SqrtExt> for &SqrtExt {
    type Output = SqrtExt;
    fn add(self, rhs: &SqrtExt) -> SqrtExt {
        SqrtExt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
            d: join_disc(&self.d, &rhs.d),
        }
        .normalized()
    }
}

impl Sub<&SqrtExt> for &SqrtExt {
    type Output = SqrtExt;
    fn sub(self, rhs: &SqrtExt) -> SqrtExt {
        self + &(-rhs)
    }
}

impl Mul<&SqrtExt> for &SqrtExt {
    type Output = SqrtExt;
    fn mul(self, rhs: &SqrtExt) -> SqrtExt {
        let d = join_disc(&self.d, &rhs.d);
        SqrtExt {
            re: &(&self.re * &rhs.re) + &(&(&self.im * &rhs.im) * &d),
            im: &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
            d,
        }
        .normalized()
    }
}

impl Neg for &SqrtExt {
    type Output = SqrtExt;
    fn neg(self) -> SqrtExt {
        SqrtExt {
            re: -&self.re,
            im: -&self.im,
            d: self.d.clone(),
        }
    }
}

impl fmt::Display for SqrtExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let root = format!("sqrt({})", self.d);
        let imag = if self.im.is_one() {
            root
        } else if (-&self.im).is_one() {
            format!("-{root}")
        } else {
            format!("{}*{root}", self.im)
        };
        if self.re.is_zero() {
            f.write_str(&imag)
        } else if let Some(rest) = imag.strip_prefix('-') {
            write!(f, "{} - {rest}", self.re)
        } else {
            write!(f, "{} + {imag}", self.re)
        }
    }
}

impl Serialize for SqrtExt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Polynomial `re + im * sqrt(d)` with `re, im` in `Q[z1, z2]`.
#[derive(Clone, Debug, Eq)]
pub struct ExtPoly {
    re: Poly2,
    im: Poly2,
    d: Rat,
}

impl ExtPoly {
    pub fn from_rational(p: Poly2) -> Self {
        ExtPoly {
            re: p,
            im: Poly2::zero(),
            d: Rat::zero(),
        }
    }

    pub fn new(re: Poly2, im: Poly2, d: Rat) -> Result<Self> {
        if im.is_zero() {
            return Ok(ExtPoly::from_rational(re));
        }
        if d.is_zero() || d.is_square() {
            return Err(Error::InvalidInput(format!(
                "discriminant {d} is a rational square"
            )));
        }
        Ok(ExtPoly { re, im, d })
    }

    pub fn re(&self) -> &Poly2 {
        &self.re
    }

    pub fn im(&self) -> &Poly2 {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, c: &SqrtExt) -> ExtPoly {
        let d = join_disc(&self.d, c.disc());
        let re = &self.re.scale(c.re()) + &self.im.scale(&(c.im() * &d));
        let im = &self.re.scale(c.im()) + &self.im.scale(c.re());
        ExtPoly::new(re, im, d).expect("discriminant already validated")
    }

    pub fn mul_poly(&self, p: &Poly2) -> ExtPoly {
        ExtPoly {
            re: &self.re * p,
            im: &self.im * p,
            d: self.d.clone(),
        }
        .normalized()
    }

    /// Coefficient of the graded-lex largest monomial present.
    pub fn leading_coeff(&self) -> Option<SqrtExt> {
        let m: Monomial = match (self.re.leading_monomial(), self.im.leading_monomial()) {
            (Some(a), Some(b)) => a.max(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => return None,
        };
        Some(if self.im.coeff(m).is_zero() {
            SqrtExt::rational(self.re.coeff(m))
        } else {
            SqrtExt {
                re: self.re.coeff(m),
                im: self.im.coeff(m),
                d: self.d.clone(),
            }
        })
    }

    fn normalized(self) -> Self {
        if self.im.is_zero() {
            ExtPoly::from_rational(self.re)
        } else {
            self
        }
    }
}

impl PartialEq for ExtPoly {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re && self.im == other.im && (self.im.is_zero() || self.d == other.d)
    }
}

impl Add<&ExtPoly> for &ExtPoly {
    type Output = ExtPoly;
    fn add(self, rhs: &ExtPoly) -> ExtPoly {
        ExtPoly {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
            d: join_disc(&self.d, &rhs.d),
        }
        .normalized()
    }
}

impl Sub<&ExtPoly> for &ExtPoly {
    type Output = ExtPoly;
    fn sub(self, rhs: &ExtPoly) -> ExtPoly {
        ExtPoly {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
            d: join_disc(&self.d, &rhs.d),
        }
        .normalized()
    }
}

impl fmt::Display for ExtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})*sqrt({})", self.im, self.d)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.re, self.im, self.d)
        }
    }
}

impl Serialize for ExtPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic_in_gaussian_rationals() {
        let i = SqrtExt::sqrt_of(&Rat::from_int(-1));
        assert_eq!(&i * &i, SqrtExt::rational(Rat::from_int(-1)));
        let z = &SqrtExt::one() + &i;
        let w = z.inv().unwrap();
        assert_eq!(&z * &w, SqrtExt::one());
        assert_eq!(z.to_string(), "1 + sqrt(-1)");
        assert_eq!((-&z).to_string(), "-1 - sqrt(-1)");
    }

    #[test]
    fn rational_roots_stay_rational() {
        assert_eq!(
            SqrtExt::sqrt_of(&Rat::new(4, 9).unwrap()),
            SqrtExt::rational(Rat::new(2, 3).unwrap())
        );
        assert!(SqrtExt::new(Rat::one(), Rat::one(), Rat::from_int(4)).is_err());
        assert!(SqrtExt::zero().inv().is_none());
    }

    #[test]
    fn ext_poly_scaling() {
        let s2 = SqrtExt::sqrt_of(&Rat::from_int(2));
        let p = ExtPoly::from_rational(Poly2::z1()).scale(&s2);
        let pp = p.scale(&s2);
        assert_eq!(
            pp,
            ExtPoly::from_rational(Poly2::z1().scale(&Rat::from_int(2)))
        );
    }
}
