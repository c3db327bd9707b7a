//! Greatest common divisors in `Q[z1, z2]`, computed in `Q[z2][z1]` with a
//! primitive pseudo-remainder sequence.

use super::{Monomial, Poly2};
use crate::error::{Error, Result};

/// Gcd of two polynomials in `z2` alone, made monic.
fn gcd_univariate(a: &Poly2, b: &Poly2) -> Poly2 {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    a.monic()
}

/// Content with respect to `z1`: the monic gcd of the `z1`-coefficients.
fn content_z1(p: &Poly2) -> Poly2 {
    p.coeffs_in_z1()
        .iter()
        .filter(|c| !c.is_zero())
        .fold(Poly2::zero(), |g, c| gcd_univariate(&g, c))
}

fn primitive_part(p: &Poly2) -> Poly2 {
    let c = content_z1(p);
    p.div_exact(&c).expect("content divides")
}

/// Pseudo-remainder of `p` by `q` in `z1`.
fn pseudo_rem(p: &Poly2, q: &Poly2) -> Poly2 {
    let coeffs = q.coeffs_in_z1();
    let dq = coeffs.len() as u32 - 1;
    let lcq = coeffs.last().expect("nonzero divisor").clone();
    let mut r = p.clone();
    while let Some(dr) = r.degree_z1() {
        if r.is_zero() || dr < dq {
            break;
        }
        let lcr = r.coeffs_in_z1().pop().expect("nonzero");
        let shift = Poly2::term(super::Rat::one(), Monomial::new(dr - dq, 0));
        r = &(&lcq * &r) - &(&(&lcr * &shift) * q);
    }
    r
}

/// Monic gcd of two polynomials; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly2, b: &Poly2) -> Poly2 {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let cont = gcd_univariate(&content_z1(a), &content_z1(b));
    let (mut p, mut q) = (primitive_part(a), primitive_part(b));
    if p.degree_z1() < q.degree_z1() {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = pseudo_rem(&p, &q);
        p = q;
        q = if r.is_zero() { r } else { primitive_part(&r) };
    }
    (&primitive_part(&p) * &cont).monic()
}

/// Monic gcd of three polynomials, not all zero.
pub fn gcd3(a: &Poly2, b: &Poly2, c: &Poly2) -> Result<Poly2> {
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Err(Error::DegenerateInput(
            "gcd of three zero polynomials".into(),
        ));
    }
    Ok(gcd(&gcd(a, b), c))
}
