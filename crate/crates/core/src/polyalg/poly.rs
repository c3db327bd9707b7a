use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Rat;

/// Exponent pair `z1^e1 * z2^e2`, ordered graded-lexicographically (total degree first,
/// ties broken by the exponent of `z1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub e1: u32,
    pub e2: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { e1: 0, e2: 0 };

    pub fn new(e1: u32, e2: u32) -> Self {
        Monomial { e1, e2 }
    }

    pub fn degree(self) -> u32 {
        self.e1 + self.e2
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.e1 <= other.e1 && self.e2 <= other.e2
    }

    pub fn checked_div(self, other: Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial::new(self.e1 - other.e1, self.e2 - other.e2))
    }

    pub fn lcm(self, other: Monomial) -> Monomial {
        Monomial::new(self.e1.max(other.e1), self.e2.max(other.e2))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.e1 + rhs.e1, self.e2 + rhs.e2)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.e1).cmp(&(other.degree(), other.e1))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `z1, z2` with exact rational coefficients.
///
/// Sparse; zero coefficients are never stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly2 {
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn one() -> Self {
        Poly2::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly2::term(c, Monomial::ONE)
    }

    pub fn int(n: i64) -> Self {
        Poly2::constant(Rat::from_int(n))
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        let mut p = Poly2::zero();
        p.add_term(m, c);
        p
    }

    pub fn z1() -> Self {
        Poly2::term(Rat::one(), Monomial::new(1, 0))
    }

    pub fn z2() -> Self {
        Poly2::term(Rat::one(), Monomial::new(0, 1))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rat)>>(terms: I) -> Self {
        let mut p = Poly2::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c * m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Terms in increasing term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &Rat)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Monomial) -> Rat {
        self.terms.get(&m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    /// Value at the origin.
    pub fn constant_term(&self) -> Rat {
        self.coeff(Monomial::ONE)
    }

    pub fn leading(&self) -> Option<(Monomial, &Rat)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::degree)
    }

    pub fn degree_z1(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.e1).max()
    }

    pub fn degree_z2(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.e2).max()
    }

    pub fn scale(&self, c: &Rat) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &Rat, mono: Monomial) -> Poly2 {
        if c.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(m, a)| (*m * mono, a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly2 {
        let mut base = self.clone();
        let mut acc = Poly2::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly2 {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip().expect("stored coefficients are nonzero")),
            None => Poly2::zero(),
        }
    }

    /// Division with remainder by a single divisor in the graded-lex order.
    ///
    /// Every term of the remainder is not divisible by the leading monomial of `d`.
    pub fn div_rem(&self, d: &Poly2) -> Option<(Poly2, Poly2)> {
        let (dm, dc) = d.leading()?;
        let dc_inv = dc.recip()?;
        let mut q = Poly2::zero();
        let mut r = Poly2::zero();
        let mut p = self.clone();
        while let Some((pm, pc)) = p.leading() {
            match pm.checked_div(dm) {
                Some(qm) => {
                    let qc = pc * &dc_inv;
                    p = &p - &d.mul_term(&qc, qm);
                    q.add_term(qm, qc);
                }
                None => {
                    let pc = pc.clone();
                    p.terms.remove(&pm);
                    r.add_term(pm, pc);
                }
            }
        }
        Some((q, r))
    }

    /// `self / d` when the division is exact in the polynomial ring.
    pub fn div_exact(&self, d: &Poly2) -> Option<Poly2> {
        let (dm, dc) = d.leading()?;
        let dc_inv = dc.recip()?;
        let mut q = Poly2::zero();
        let mut p = self.clone();
        while let Some((pm, pc)) = p.leading() {
            let qm = pm.checked_div(dm)?;
            let qc = pc * &dc_inv;
            p = &p - &d.mul_term(&qc, qm);
            q.add_term(qm, qc);
        }
        Some(q)
    }

    pub fn divides(&self, other: &Poly2) -> bool {
        other.div_exact(self).is_some()
    }

    /// Composition `p(e1, e2)`.
    pub fn substitute(&self, e1: &Poly2, e2: &Poly2) -> Poly2 {
        let max1 = self.degree_z1().unwrap_or(0) as usize;
        let max2 = self.degree_z2().unwrap_or(0) as usize;
        let powers = |e: &Poly2, n: usize| {
            let mut v = Vec::with_capacity(n + 1);
            v.push(Poly2::one());
            for i in 1..=n {
                let next = &v[i - 1] * e;
                v.push(next);
            }
            v
        };
        let p1 = powers(e1, max1);
        let p2 = powers(e2, max2);
        let mut out = Poly2::zero();
        for (m, c) in self.terms() {
            let t = (&p1[m.e1 as usize] * &p2[m.e2 as usize]).scale(c);
            out = &out + &t;
        }
        out
    }

    pub fn eval(&self, x1: &Rat, x2: &Rat) -> Rat {
        self.terms().fold(Rat::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for _ in 0..m.e1 {
                t = &t * x1;
            }
            for _ in 0..m.e2 {
                t = &t * x2;
            }
            acc + t
        })
    }

    /// Coefficients with respect to `z1`: entry `k` is the coefficient of `z1^k`, a polynomial in `z2`.
    pub fn coeffs_in_z1(&self) -> Vec<Poly2> {
        let n = match self.degree_z1() {
            Some(n) => n as usize,
            None => return Vec::new(),
        };
        let mut out = vec![Poly2::zero(); n + 1];
        for (m, c) in self.terms() {
            out[m.e1 as usize].add_term(Monomial::new(0, m.e2), c.clone());
        }
        out
    }
}

impl Add<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, c.clone());
        }
        out
    }
}

impl Sub<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn sub(self, rhs: &Poly2) -> Poly2 {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m, -c);
        }
        out
    }
}

impl Mul<&Poly2> for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                out.add_term(m1 * m2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        self.scale(&Rat::from_int(-1))
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly2> for Poly2 {
            type Output = Poly2;
            fn $method(self, rhs: Poly2) -> Poly2 {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Poly2> for Poly2 {
            type Output = Poly2;
            fn $method(self, rhs: &Poly2) -> Poly2 {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        -&self
    }
}

/// Writes a monomial without coefficient, e.g. `z1^2*z2`.
fn write_monomial(f: &mut fmt::Formatter<'_>, m: Monomial) -> fmt::Result {
    let mut first = true;
    for (name, e) in [("z1", m.e1), ("z2", m.e2)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

/// Serialized as its literal string.
impl serde::Serialize for Poly2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    #[test]
    fn graded_lex_order() {
        let mut ms = vec![
            Monomial::new(0, 2),
            Monomial::new(1, 0),
            Monomial::new(2, 0),
            Monomial::new(1, 1),
            Monomial::ONE,
        ];
        ms.sort();
        assert_eq!(
            ms,
            vec![
                Monomial::ONE,
                Monomial::new(1, 0),
                Monomial::new(0, 2),
                Monomial::new(1, 1),
                Monomial::new(2, 0),
            ]
        );
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = p("z1 + z2");
        let b = p("z1 - z2");
        assert_eq!((&a + &b).num_terms(), 1);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_format() {
        assert_eq!(
            p("z2^2 + 2*z1*z2 + z1^2").to_string(),
            "z1^2 + 2*z1*z2 + z2^2"
        );
        assert_eq!(p("-1/2 z1 + 3").to_string(), "-1/2*z1 + 3");
        assert_eq!(Poly2::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let a = p("z1^2 - z2^2");
        assert_eq!(a.div_exact(&p("z1 - z2")), Some(p("z1 + z2")));
        assert_eq!(a.div_exact(&p("z1")), None);
        assert_eq!(a.div_exact(&Poly2::zero()), None);
    }

    #[test]
    fn division_with_remainder() {
        let a = p("z1^3 + z2");
        let d = p("z1 + 1");
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.terms().all(|(m, _)| m.e1 == 0));
    }

    #[test]
    fn substitution_examples() {
        let blow = p("z2").substitute(&p("z1"), &p("z1*z2"));
        assert_eq!(blow, p("z1*z2"));
        let id = p("z1^2 + z2").substitute(&Poly2::z1(), &Poly2::z2());
        assert_eq!(id, p("z1^2 + z2"));
        let rot = p("z1*z2").substitute(&p("z1 + z2"), &p("z1 - z2"));
        assert_eq!(rot, p("z1^2 - z2^2"));
    }

    #[test]
    fn power() {
        assert_eq!(p("z1 + z2").pow(2), p("z1^2 + 2*z1*z2 + z2^2"));
        assert_eq!(p("z1").pow(0), Poly2::one());
    }
}
