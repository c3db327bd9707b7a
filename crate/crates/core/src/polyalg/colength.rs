//! Length of the zero-dimensional scheme `{beta = gamma = 0}` in the affine plane,
//! i.e. `dim_Q Q[z1, z2] / (beta, gamma)`.

use std::fmt;

use serde::Serialize;

use super::{gcd, Monomial, Poly2, Rat};

/// Colength of an ideal: finite, or infinite when the generators share a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Colength {
    Finite(usize),
    NotFinite,
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::NotFinite => f.write_str("not finite"),
        }
    }
}

fn leading_term(p: &Poly2) -> (Monomial, Rat) {
    let (m, c) = p.leading().expect("nonzero");
    (m, c.clone())
}

/// Complete reduction of `f` modulo `basis`.
fn reduce(f: &Poly2, basis: &[Poly2]) -> Poly2 {
    let mut p = f.clone();
    let mut rem = Poly2::zero();
    while let Some((pm, pc)) = p.leading().map(|(m, c)| (m, c.clone())) {
        let divisor = basis.iter().find_map(|g| {
            let (gm, gc) = leading_term(g);
            pm.checked_div(gm).map(|q| (g, q, gc))
        });
        match divisor {
            Some((g, q, gc)) => {
                let c = pc.checked_div(&gc).expect("nonzero");
                p = &p - &g.mul_term(&c, q);
            }
            None => {
                rem.add_term(pm, pc.clone());
                p = &p - &Poly2::term(pc, pm);
            }
        }
    }
    rem
}

fn s_polynomial(f: &Poly2, g: &Poly2) -> Poly2 {
    let (fm, fc) = leading_term(f);
    let (gm, gc) = leading_term(g);
    let l = fm.lcm(gm);
    let a = f.mul_term(
        &fc.recip().expect("nonzero"),
        l.checked_div(fm).expect("lcm"),
    );
    let b = g.mul_term(
        &gc.recip().expect("nonzero"),
        l.checked_div(gm).expect("lcm"),
    );
    &a - &b
}

/// Leading monomials of a minimal Gröbner basis (graded-lex) of the ideal.
///
/// Only ever called on two bivariate generators; no general-purpose engine is intended.
fn leading_monomials(gens: &[Poly2]) -> Vec<Monomial> {
    let mut basis: Vec<Poly2> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(Poly2::monic)
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while let Some((i, j)) = pairs.pop() {
        let (mi, mj) = (basis[i].leading_monomial(), basis[j].leading_monomial());
        let (mi, mj) = (mi.expect("nonzero"), mj.expect("nonzero"));
        // Buchberger's first criterion: coprime leading monomials reduce to zero.
        if mi.lcm(mj) == mi * mj {
            continue;
        }
        let r = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            let k = basis.len() - 1;
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    let lms: Vec<Monomial> = basis.iter().filter_map(Poly2::leading_monomial).collect();
    let mut minimal: Vec<Monomial> = Vec::new();
    for (k, m) in lms.iter().enumerate() {
        let redundant = lms
            .iter()
            .enumerate()
            .any(|(l, other)| l != k && other.divides(*m) && (other != m || l < k));
        if !redundant {
            minimal.push(*m);
        }
    }
    minimal.sort();
    minimal
}

/// Number of monomials outside the monomial ideal generated by `lms`, if finite.
fn count_standard(lms: &[Monomial]) -> Option<usize> {
    let a = lms.iter().filter(|m| m.e2 == 0).map(|m| m.e1).min()?;
    let b = lms.iter().filter(|m| m.e1 == 0).map(|m| m.e2).min()?;
    let count = (0..a)
        .flat_map(|i| (0..b).map(move |j| Monomial::new(i, j)))
        .filter(|m| !lms.iter().any(|l| l.divides(*m)))
        .count();
    Some(count)
}

/// `dim_Q Q[z1, z2] / (beta, gamma)`, or `NotFinite` when `gcd(beta, gamma)` is not constant.
///
/// A zero generator is allowed: `(0, gamma)` is the principal ideal `(gamma)`, finite only
/// when `gamma` is a nonzero constant (colength 0).
pub fn colength(beta: &Poly2, gamma: &Poly2) -> Colength {
    let g = gcd::gcd(beta, gamma);
    if !g.is_constant() || g.is_zero() {
        return Colength::NotFinite;
    }
    let lms = leading_monomials(&[beta.clone(), gamma.clone()]);
    match count_standard(&lms) {
        Some(n) => {
            if let (Some(db), Some(dg)) = (beta.degree(), gamma.degree()) {
                debug_assert!(n as u64 <= db as u64 * dg as u64, "affine Bezout bound");
            }
            Colength::Finite(n)
        }
        None => Colength::NotFinite,
    }
}
