//! Seeded generators of random polynomials and tensors for self-checks and tests.

use rand::Rng;

use crate::polyalg::{gcd, Monomial, Poly2, Rat};
use crate::tensor::{SymTensor, TraceZeroEndo};

/// Random polynomial of total degree at most `max_deg`, each monomial present with
/// probability 1/2 and integer coefficients in `[-3, 3]`.
pub fn poly<R: Rng>(rng: &mut R, max_deg: u32) -> Poly2 {
    let mut p = Poly2::zero();
    for d in 0..=max_deg {
        for e1 in 0..=d {
            if rng.gen_bool(0.5) {
                p.add_term(
                    Monomial::new(e1, d - e1),
                    Rat::from_int(rng.gen_range(-3..=3)),
                );
            }
        }
    }
    p
}

/// Random nonzero polynomial.
pub fn nonzero_poly<R: Rng>(rng: &mut R, max_deg: u32) -> Poly2 {
    loop {
        let p = poly(rng, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn tensor<R: Rng>(rng: &mut R, max_deg: u32) -> SymTensor {
    SymTensor::new(poly(rng, max_deg), poly(rng, max_deg), poly(rng, max_deg))
}

/// Random tensor whose coefficients vanish at the origin with probability about 1/2.
pub fn tensor_near_origin<R: Rng>(rng: &mut R, max_deg: u32) -> SymTensor {
    let mut w = tensor(rng, max_deg);
    if rng.gen_bool(0.5) {
        for p in [&mut w.a11, &mut w.a22, &mut w.a12] {
            *p = &*p - &Poly2::constant(p.constant_term());
        }
    }
    w
}

pub fn trace_zero_endo<R: Rng>(rng: &mut R, max_deg: u32) -> TraceZeroEndo {
    TraceZeroEndo::from_abc(poly(rng, max_deg), poly(rng, max_deg), poly(rng, max_deg))
}

/// Triple `(delta, beta, gamma)` in the normal form returned by the nilpotent
/// decomposition: `delta` monic, `beta` and `gamma` nonzero and coprime, `beta` with
/// positive leading coefficient. Every entry of the synthesized endomorphism has degree
/// at most `max_deg`.
pub fn nilpotent_triple<R: Rng>(rng: &mut R, max_deg: u32) -> (Poly2, Poly2, Poly2) {
    loop {
        let half = rng.gen_range(0..=max_deg / 2);
        let delta = nonzero_poly(rng, max_deg - 2 * half).monic();
        let mut beta = nonzero_poly(rng, half);
        let gamma = nonzero_poly(rng, half);
        if !gcd(&beta, &gamma).is_constant() {
            continue;
        }
        if beta.leading_coeff().is_negative() {
            beta = -&beta;
        }
        return (delta, beta, gamma);
    }
}
