//! Exact arithmetic in `Q[z1, z2]`: rationals, polynomials, gcds, square roots,
//! substitution, colength of two-generator ideals, and quadratic extensions of `Q`.

mod colength;
mod gcd;
mod parse;
mod poly;
mod quadext;
mod rat;
mod sqrt;

pub use colength::{colength, Colength};
pub use gcd::{gcd, gcd3};
pub use poly::{Monomial, Poly2};
pub use quadext::{ExtPoly, SqrtExt};
pub use rat::Rat;
pub use sqrt::{is_square, poly_sqrt};

/// `p(z1 -> e1, z2 -> e2)`.
pub fn substitute(p: &Poly2, e1: &Poly2, e2: &Poly2) -> Poly2 {
    p.substitute(e1, e2)
}
