//! Model surfaces: Hirzebruch surfaces `F_n`, products of curves, and the numerical
//! identities satisfied by surfaces with split tangent bundle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Divisor class `a Sigma + b F` on `F_n`, where `Sigma^2 = -n`, `Sigma.F = 1`, `F^2 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivisorFn {
    pub n: u32,
    pub a: i64,
    pub b: i64,
}

impl DivisorFn {
    pub fn new(n: u32, a: i64, b: i64) -> Self {
        DivisorFn { n, a, b }
    }

    pub fn sigma(n: u32) -> Self {
        DivisorFn::new(n, 1, 0)
    }

    pub fn fibre(n: u32) -> Self {
        DivisorFn::new(n, 0, 1)
    }

    pub fn dot(&self, other: &DivisorFn) -> i64 {
        assert_eq!(self.n, other.n, "divisors on different Hirzebruch surfaces");
        -(self.n as i64) * self.a * other.a + self.a * other.b + other.a * self.b
    }

    pub fn minus_sigma(&self) -> Self {
        DivisorFn::new(self.n, self.a - 1, self.b)
    }

    /// The canonical class `-2 Sigma - (n + 2) F`.
    pub fn canonical(n: u32) -> Self {
        DivisorFn::new(n, -2, -(n as i64) - 2)
    }
}

/// One step of the `Sigma`-peeling reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeelStep {
    pub divisor: DivisorFn,
    pub dot_sigma: i64,
    /// Sections gained on `Sigma` at this step (`0` when `Sigma` is a fixed component).
    pub gained: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H0Trace {
    pub steps: Vec<PeelStep>,
    pub value: u64,
}

/// `h^0(F_n, D)` by peeling `Sigma` off one copy at a time.
///
/// If `D.Sigma < 0`, `Sigma` lies in the base locus and `h^0(D) = h^0(D - Sigma)`.
/// Otherwise `H^1(D - Sigma) = 0` and restriction to `Sigma = P^1` is onto, so
/// `h^0(D) = h^0(D - Sigma) + D.Sigma + 1`. At `a = 0` the answer is `h^0(P^1, O(b))`.
/// Each step lowers `a` by one, so the reduction stops after at most `a` steps.
pub fn h0_fn_trace(d: DivisorFn) -> H0Trace {
    let mut steps = Vec::new();
    if d.a < 0 {
        return H0Trace { steps, value: 0 };
    }
    let sigma = DivisorFn::sigma(d.n);
    let mut cur = d;
    let mut total = 0u64;
    loop {
        let dot_sigma = cur.dot(&sigma);
        if cur.a == 0 {
            let gained = (cur.b + 1).max(0) as u64;
            total += gained;
            steps.push(PeelStep {
                divisor: cur,
                dot_sigma,
                gained,
            });
            return H0Trace {
                steps,
                value: total,
            };
        }
        let gained = if dot_sigma < 0 {
            0
        } else {
            dot_sigma as u64 + 1
        };
        total += gained;
        steps.push(PeelStep {
            divisor: cur,
            dot_sigma,
            gained,
        });
        cur = cur.minus_sigma();
    }
}

pub fn h0_fn_recursive(d: DivisorFn) -> u64 {
    h0_fn_trace(d).value
}

/// Lattice-point count `sum_{j=0}^{a} max(0, b - j n + 1)`.
pub fn h0_fn_lattice(d: DivisorFn) -> u64 {
    if d.a < 0 {
        return 0;
    }
    (0..=d.a)
        .map(|j| (d.b - j * d.n as i64 + 1).max(0) as u64)
        .sum()
}

/// True iff the coefficient of `H` in `K_{P^2}` is odd, i.e. `K = 2L` has no solution in `Pic = Z H`.
pub fn p2_parity_obstruction(canonical_coeff: i64) -> bool {
    canonical_coeff.rem_euclid(2) == 1
}

/// Product `C1 x C2` of curves of genera `g1`, `g2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSurface {
    pub g1: u32,
    pub g2: u32,
}

/// Numerical invariants `(K^2, chi, c2, q, p_g)` of a compact surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalProfile {
    pub k2: i64,
    pub chi: i64,
    pub c2: i64,
    pub q: i64,
    pub pg: i64,
}

impl NumericalProfile {
    /// Validates Noether's formula `12 chi = K^2 + c2` and `chi = 1 + p_g - q`.
    pub fn new(k2: i64, chi: i64, c2: i64, q: i64, pg: i64) -> Result<Self> {
        if 12 * chi != k2 + c2 {
            return Err(Error::InvalidInput(format!(
                "Noether: 12 chi = {} but K^2 + c2 = {}",
                12 * chi,
                k2 + c2
            )));
        }
        if chi != 1 + pg - q {
            return Err(Error::InvalidInput(format!(
                "chi = {chi} but 1 + pg - q = {}",
                1 + pg - q
            )));
        }
        Ok(NumericalProfile { k2, chi, c2, q, pg })
    }
}

/// `h^0(C, K_C)` for a curve of genus `g`.
pub fn curve_h0_canonical(g: u32) -> u64 {
    g as u64
}

/// `h^0(C, -K_C)`: `3` on `P^1`, `1` on an elliptic curve, `0` otherwise.
pub fn curve_h0_anticanonical(g: u32) -> u64 {
    match g {
        0 => 3,
        1 => 1,
        _ => 0,
    }
}

/// `h^0(C, 2 K_C)`.
pub fn curve_h0_bicanonical(g: u32) -> u64 {
    match g {
        0 => 0,
        1 => 1,
        g => 3 * g as u64 - 3,
    }
}

pub fn product_invariants(p: ProductSurface) -> NumericalProfile {
    let (g1, g2) = (p.g1 as i64, p.g2 as i64);
    let chi = (g1 - 1) * (g2 - 1);
    let k2 = 8 * chi;
    NumericalProfile {
        k2,
        chi,
        c2: 12 * chi - k2,
        q: g1 + g2,
        pg: g1 * g2,
    }
}

/// `P_2` of a product, by Kunneth: `h^0(2K_1) h^0(2K_2)`.
pub fn product_bigenus(p: ProductSurface) -> u64 {
    curve_h0_bicanonical(p.g1) * curve_h0_bicanonical(p.g2)
}

/// `h^0(S^2 Omega^1 (-K))` on `C1 x C2`.
///
/// `Omega^1 = K_1 + K_2` (pulled back), so `S^2 Omega^1 (-K)` splits as
/// `O + (K_1 - K_2) + (K_2 - K_1)` and Kunneth gives
/// `1 + h^0(K_1) h^0(-K_2) + h^0(-K_1) h^0(K_2)`.
pub fn product_special_tensor_dim(p: ProductSurface) -> u64 {
    1 + curve_h0_canonical(p.g1) * curve_h0_anticanonical(p.g2)
        + curve_h0_anticanonical(p.g1) * curve_h0_canonical(p.g2)
}

/// `K^2 = 8 chi` and `c1^2 = 2 c2`.
pub fn split_tangent_identities(prof: &NumericalProfile) -> bool {
    prof.k2 == 8 * prof.chi && prof.k2 == 2 * prof.c2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersection_form() {
        let s = DivisorFn::sigma(3);
        let f = DivisorFn::fibre(3);
        assert_eq!(s.dot(&s), -3);
        assert_eq!(s.dot(&f), 1);
        assert_eq!(f.dot(&f), 0);
        // K^2 = 8 on every Hirzebruch surface.
        for n in 0..10 {
            let k = DivisorFn::canonical(n);
            assert_eq!(k.dot(&k), 8);
        }
    }

    #[test]
    fn vanishing_chain() {
        for n in [0, 1, 3, 7] {
            let d = DivisorFn::new(n, 2, -(n as i64) - 2);
            let trace = h0_fn_trace(d);
            let seen: Vec<DivisorFn> = trace.steps.iter().map(|s| s.divisor).collect();
            assert_eq!(
                seen,
                vec![
                    d,
                    DivisorFn::new(n, 1, -(n as i64) - 2),
                    DivisorFn::new(n, 0, -(n as i64) - 2)
                ]
            );
            assert!(trace.steps[..2]
                .iter()
                .all(|s| s.dot_sigma < 0 && s.gained == 0));
            assert_eq!(trace.value, 0);
            assert_eq!(h0_fn_lattice(d), 0);
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(h0_fn_recursive(DivisorFn::new(4, 0, 0)), 1);
        assert_eq!(h0_fn_recursive(DivisorFn::new(1, 2, 3)), 9);
        assert_eq!(h0_fn_lattice(DivisorFn::new(1, 2, 3)), 9);
        assert_eq!(h0_fn_lattice(DivisorFn::new(0, 3, 4)), 20);
        assert_eq!(h0_fn_recursive(DivisorFn::new(2, -1, 5)), 0);
        assert_eq!(h0_fn_recursive(DivisorFn::new(3, 2, -5)), 0);
    }

    #[test]
    fn parity() {
        assert!(p2_parity_obstruction(-3));
        assert!(!p2_parity_obstruction(-4));
        assert!(!p2_parity_obstruction(0));
    }

    #[test]
    fn product_examples() {
        let torus = product_invariants(ProductSurface { g1: 1, g2: 1 });
        assert_eq!((torus.chi, torus.k2, torus.q), (0, 0, 2));
        let quadric = product_invariants(ProductSurface { g1: 0, g2: 0 });
        assert_eq!(
            (quadric.chi, quadric.k2, quadric.q, quadric.pg),
            (1, 8, 0, 0)
        );
        let p22 = product_invariants(ProductSurface { g1: 2, g2: 2 });
        assert_eq!((p22.chi, p22.k2, p22.q, p22.pg, p22.c2), (1, 8, 4, 4, 4));
        assert!(NumericalProfile::new(p22.k2, p22.chi, p22.c2, p22.q, p22.pg).is_ok());
    }

    #[test]
    fn special_tensor_dims() {
        let dim = |g1, g2| product_special_tensor_dim(ProductSurface { g1, g2 });
        assert_eq!(dim(0, 0), 1);
        assert_eq!(dim(1, 1), 3);
        assert_eq!(dim(2, 3), 1);
        assert_eq!(dim(1, 2), 3);
    }

    #[test]
    fn split_identities() {
        let prof = |k2, chi, c2| NumericalProfile {
            k2,
            chi,
            c2,
            q: 0,
            pg: 0,
        };
        assert!(split_tangent_identities(&prof(8, 1, 4)));
        assert!(!split_tangent_identities(&prof(9, 1, 3)));
        assert!(split_tangent_identities(&prof(0, 0, 0)));
    }

    #[test]
    fn profile_validation() {
        assert!(NumericalProfile::new(9, 1, 3, 0, 0).is_ok());
        assert!(NumericalProfile::new(9, 1, 4, 0, 0).is_err());
        assert!(NumericalProfile::new(8, 1, 4, 1, 0).is_err());
    }
}
