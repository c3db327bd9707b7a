//! Pulling a special tensor back to the blow-up of a point, and pushing it down again.
//!
//! The center is the origin of the local coordinates `(x, y) = (z1, z2)`. Only the chart
//! `(x, u)` with `y = u x` is computed; in chart polynomials `z1` stands for `x` and `z2`
//! for `u`. The other chart is the same computation with the coordinates swapped.
//!
//! In commutative notation the tensor is `(a dx^2 + b dy^2 + c dx dy) / (dx ^ dy)` with
//! `a = a11`, `b = a22`, `c = 2 a12`. Since `dx ^ dy = x dx ^ du`, the pullback is
//! `((a + b u^2 + c u)/x) dx^2 + b x du^2 + (2 b u + c) dx du` over `dx ^ du`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyalg::{Monomial, Poly2, Rat};
use crate::tensor::SymTensor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupChartTensor {
    /// Coefficients in the chart coordinates `(x, u)`.
    pub tensor: SymTensor,
    /// The blown-up point in the base coordinates; always the origin.
    pub center: (Rat, Rat),
}

/// `p(x, u x)`.
fn pull(p: &Poly2) -> Poly2 {
    p.substitute(&Poly2::z1(), &(&Poly2::z1() * &Poly2::z2()))
}

/// Inverse of [`pull`]: rewrites `q(x, u)` as `p(x, y)` with `q(x, u) = p(x, u x)`,
/// which requires every term `x^i u^j` to have `i >= j`.
fn unpull(q: &Poly2) -> Option<Poly2> {
    let mut out = Poly2::zero();
    for (m, c) in q.terms() {
        if m.e1 < m.e2 {
            return None;
        }
        out.add_term(Monomial::new(m.e1 - m.e2, m.e2), c.clone());
    }
    Some(out)
}

/// True iff all coefficients vanish at the center.
pub fn regularity_criterion(w: &SymTensor) -> bool {
    [&w.a11, &w.a22, &w.a12]
        .iter()
        .all(|p| p.constant_term().is_zero())
}

pub fn pullback(w: &SymTensor) -> Result<BlowupChartTensor> {
    let x = Poly2::z1();
    let u = Poly2::z2();
    let a = pull(&w.a11);
    let b = pull(&w.a22);
    let half_c = pull(&w.a12);
    let c = half_c.scale(&Rat::from_int(2));
    let numerator = &(&a + &(&b * &(&u * &u))) + &(&c * &u);
    let a11 = numerator
        .div_exact(&x)
        .ok_or_else(|| Error::NonRegular(numerator.to_string()))?;
    let a22 = &b * &x;
    let a12 = &(&b * &u) + &half_c;
    Ok(BlowupChartTensor {
        tensor: SymTensor::new(a11, a22, a12),
        center: (Rat::zero(), Rat::zero()),
    })
}

/// Recovers the tensor on the base from a chart tensor produced by [`pullback`].
pub fn pushdown(chart: &BlowupChartTensor) -> Result<SymTensor> {
    let not_pulled = |what: &str| Error::NotPulledBack(format!("{what} in {}", chart.tensor));
    let x = Poly2::z1();
    let u = Poly2::z2();
    let t = &chart.tensor;
    let b = t
        .a22
        .div_exact(&x)
        .ok_or_else(|| not_pulled("a22 not divisible by x"))?;
    let half_c = &t.a12 - &(&b * &u);
    let c = half_c.scale(&Rat::from_int(2));
    let a = &(&(&t.a11 * &x) - &(&b * &(&u * &u))) - &(&c * &u);
    Ok(SymTensor::new(
        unpull(&a).ok_or_else(|| not_pulled("a11 has a pole along x = 0"))?,
        unpull(&b).ok_or_else(|| not_pulled("a22 has a pole along x = 0"))?,
        unpull(&half_c).ok_or_else(|| not_pulled("a12 has a pole along x = 0"))?,
    ))
}
