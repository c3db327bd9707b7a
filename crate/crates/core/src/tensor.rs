//! Special tensors in local coordinates and the trace-zero endomorphisms they define.
//!
//! A symmetric tensor `(a11 dz1^2 + a22 dz2^2 + a12 (dz1 dz2 + dz2 dz1)) / (dz1 ^ dz2)`
//! acts on `T_X` through the matrix `[[-a12, -a22], [a11, a12]]` in the basis
//! `d/dz1, d/dz2`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyalg::{colength, gcd3, poly_sqrt, Colength, ExtPoly, Poly2, SqrtExt};

/// Local coefficients of a section of `S^2 Omega^1 (-K)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymTensor {
    pub a11: Poly2,
    pub a22: Poly2,
    pub a12: Poly2,
}

impl SymTensor {
    pub fn new(a11: Poly2, a22: Poly2, a12: Poly2) -> Self {
        SymTensor { a11, a22, a12 }
    }

    pub fn is_zero(&self) -> bool {
        self.a11.is_zero() && self.a22.is_zero() && self.a12.is_zero()
    }
}

impl fmt::Display for SymTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a11={}; a22={}; a12={}", self.a11, self.a22, self.a12)
    }
}

impl Serialize for SymTensor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `a11=...; a22=...; a12=...` (fields in any order, each exactly once).
impl FromStr for SymTensor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut fields: [Option<Poly2>; 3] = [None, None, None];
        let mut offset = 0;
        for part in s.split(';') {
            let here = offset;
            offset += part.len() + 1;
            if part.trim().is_empty() {
                continue;
            }
            let (name, value) = part.split_once('=').ok_or_else(|| Error::Parse {
                pos: here,
                msg: format!("expected name=polynomial, got {:?}", part.trim()),
            })?;
            let slot = match name.trim() {
                "a11" => 0,
                "a22" => 1,
                "a12" => 2,
                other => {
                    return Err(Error::Parse {
                        pos: here,
                        msg: format!("unknown tensor field {other:?}"),
                    })
                }
            };
            if fields[slot].is_some() {
                return Err(Error::Parse {
                    pos: here,
                    msg: format!("duplicate field {}", name.trim()),
                });
            }
            let value_pos = here + name.len() + 1;
            let poly = value.parse::<Poly2>().map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse {
                    pos: value_pos + pos,
                    msg,
                },
                other => other,
            })?;
            fields[slot] = Some(poly);
        }
        let [a11, a22, a12] = fields;
        let missing = |n: &str| Error::Parse {
            pos: s.len(),
            msg: format!("missing field {n}"),
        };
        Ok(SymTensor {
            a11: a11.ok_or_else(|| missing("a11"))?,
            a22: a22.ok_or_else(|| missing("a22"))?,
            a12: a12.ok_or_else(|| missing("a12"))?,
        })
    }
}

/// Endomorphism `[[m11, m12], [m21, m22]]` of the tangent sheaf with `m11 + m22 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceZeroEndo {
    m: [[Poly2; 2]; 2],
}

impl TraceZeroEndo {
    pub fn new(m11: Poly2, m12: Poly2, m21: Poly2, m22: Poly2) -> Result<Self> {
        let trace = &m11 + &m22;
        if !trace.is_zero() {
            return Err(Error::InvalidInput(format!("trace {trace} is not zero")));
        }
        Ok(TraceZeroEndo {
            m: [[m11, m12], [m21, m22]],
        })
    }

    /// `[[a, b], [c, -a]]`.
    pub fn from_abc(a: Poly2, b: Poly2, c: Poly2) -> Self {
        let d = -&a;
        TraceZeroEndo {
            m: [[a, b], [c, d]],
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> &Poly2 {
        &self.m[row][col]
    }

    pub fn entries(&self) -> &[[Poly2; 2]; 2] {
        &self.m
    }

    pub fn trace(&self) -> Poly2 {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn det(&self) -> Poly2 {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }

    pub fn apply(&self, v: &(Poly2, Poly2)) -> (Poly2, Poly2) {
        (
            &(&self.m[0][0] * &v.0) + &(&self.m[0][1] * &v.1),
            &(&self.m[1][0] * &v.0) + &(&self.m[1][1] * &v.1),
        )
    }

    pub fn apply_ext(&self, v: &[ExtPoly; 2]) -> [ExtPoly; 2] {
        let row = |r: usize| &v[0].mul_poly(&self.m[r][0]) + &v[1].mul_poly(&self.m[r][1]);
        [row(0), row(1)]
    }

    /// Matrix square, as a plain 2x2 polynomial matrix.
    pub fn square(&self) -> [[Poly2; 2]; 2] {
        let m = &self.m;
        let e = |i: usize, j: usize| &(&m[i][0] * &m[0][j]) + &(&m[i][1] * &m[1][j]);
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }

    pub fn scale(&self, p: &Poly2) -> TraceZeroEndo {
        let m = &self.m;
        TraceZeroEndo {
            m: [[&m[0][0] * p, &m[0][1] * p], [&m[1][0] * p, &m[1][1] * p]],
        }
    }
}

impl fmt::Display for TraceZeroEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            m[0][0], m[0][1], m[1][0], m[1][1]
        )
    }
}

impl Serialize for TraceZeroEndo {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn tensor_to_endo(w: &SymTensor) -> TraceZeroEndo {
    TraceZeroEndo::from_abc(-&w.a12, -&w.a22, w.a11.clone())
}

pub fn endo_to_tensor(e: &TraceZeroEndo) -> Result<SymTensor> {
    let trace = e.trace();
    if !trace.is_zero() {
        return Err(Error::InvalidInput(format!("trace {trace} is not zero")));
    }
    Ok(SymTensor {
        a11: e.entry(1, 0).clone(),
        a22: -e.entry(0, 1),
        a12: e.entry(1, 1).clone(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Determinant {
    pub value: Poly2,
    pub constant: bool,
}

/// `det = a11 * a22 - a12^2`, the determinant of the associated endomorphism.
pub fn tensor_det(w: &SymTensor) -> Determinant {
    let value = &(&w.a11 * &w.a22) - &(&w.a12 * &w.a12);
    let constant = value.is_constant();
    Determinant {
        value: value.clone(),
        constant,
    }
}

/// Eigenvalues `+c, -c` with `c^2 = -det` and the matching eigenvector fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenSplit {
    pub eigenvalue: SqrtExt,
    pub eigenvector_plus: [ExtPoly; 2],
    pub eigenvector_minus: [ExtPoly; 2],
}

impl EigenSplit {
    /// Checks `e v+ = c v+` and `e v- = -c v-` as polynomial identities over the extension.
    pub fn verify(&self, e: &TraceZeroEndo) -> bool {
        let holds = |v: &[ExtPoly; 2], lambda: &SqrtExt| {
            let nonzero = !(v[0].is_zero() && v[1].is_zero());
            let image = e.apply_ext(v);
            nonzero && image[0] == v[0].scale(lambda) && image[1] == v[1].scale(lambda)
        };
        holds(&self.eigenvector_plus, &self.eigenvalue)
            && holds(&self.eigenvector_minus, &-&self.eigenvalue)
    }
}

fn ext_constant(c: &SqrtExt) -> ExtPoly {
    ExtPoly::from_rational(Poly2::one()).scale(c)
}

/// Eigenvector for `lambda` with `lambda^2 = -det`, scaled so the first nonzero
/// component has leading coefficient 1.
fn eigenvector(w: &SymTensor, lambda: &SqrtExt) -> [ExtPoly; 2] {
    let lam = ext_constant(lambda);
    let a11 = ExtPoly::from_rational(w.a11.clone());
    let a22 = ExtPoly::from_rational(w.a22.clone());
    let a12 = ExtPoly::from_rational(w.a12.clone());
    // Both candidates are annihilated by e - lambda; they cannot vanish together since lambda != 0.
    let first = [a22, &(&ExtPoly::from_rational(Poly2::zero()) - &a12) - &lam];
    let v = if first[0].is_zero() && first[1].is_zero() {
        [&a12 - &lam, &ExtPoly::from_rational(Poly2::zero()) - &a11]
    } else {
        first
    };
    let lead = if v[0].is_zero() { &v[1] } else { &v[0] }
        .leading_coeff()
        .expect("nonzero eigenvector");
    let inv = lead.inv().expect("nonzero leading coefficient");
    [v[0].scale(&inv), v[1].scale(&inv)]
}

pub fn eigen_split(w: &SymTensor) -> Result<EigenSplit> {
    let det = tensor_det(w);
    if det.value.is_zero() {
        return Err(Error::ZeroDeterminant);
    }
    if !det.constant {
        return Err(Error::NotSpecialTensor(det.value.to_string()));
    }
    let minus_det = -&det.value.constant_term();
    let c = SqrtExt::sqrt_of(&minus_det);
    Ok(EigenSplit {
        eigenvector_plus: eigenvector(w, &c),
        eigenvector_minus: eigenvector(w, &-&c),
        eigenvalue: c,
    })
}

/// Factorization `e = delta * [[beta gamma, -beta^2], [gamma^2, -beta gamma]]` of a
/// nilpotent endomorphism, with kernel generated by `(beta, gamma)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotentDecomposition {
    pub delta: Poly2,
    pub beta: Poly2,
    pub gamma: Poly2,
    pub kernel_generator: (Poly2, Poly2),
    pub z_colength: Colength,
}

impl NilpotentDecomposition {
    /// Rebuilds the endomorphism from `(delta, beta, gamma)`.
    pub fn endo(&self) -> TraceZeroEndo {
        nilpotent_endo(&self.delta, &self.beta, &self.gamma)
    }

    /// Checks `e^2 = 0`, `e (beta, gamma)^t = 0`, and that each column of `e / delta`
    /// is a polynomial multiple of `(beta, gamma)^t`.
    pub fn verify(&self, e: &TraceZeroEndo) -> bool {
        let sq = e.square();
        let sq_zero = sq.iter().flatten().all(Poly2::is_zero);
        let (k1, k2) = e.apply(&(self.beta.clone(), self.gamma.clone()));
        let kernel = k1.is_zero() && k2.is_zero();
        let columns = (0..2).all(|j| {
            let (Some(c0), Some(c1)) = (
                e.entry(0, j).div_exact(&self.delta),
                e.entry(1, j).div_exact(&self.delta),
            ) else {
                return false;
            };
            column_multiple(&(c0, c1), &(self.beta.clone(), self.gamma.clone())).is_some()
        });
        sq_zero && kernel && columns
    }
}

/// `f` with `col = f * gen`, if one exists.
fn column_multiple(col: &(Poly2, Poly2), gen: &(Poly2, Poly2)) -> Option<Poly2> {
    let f = if !gen.0.is_zero() {
        col.0.div_exact(&gen.0)?
    } else if !gen.1.is_zero() {
        col.1.div_exact(&gen.1)?
    } else {
        return (col.0.is_zero() && col.1.is_zero()).then(Poly2::zero);
    };
    (&f * &gen.0 == col.0 && &f * &gen.1 == col.1).then_some(f)
}

/// `delta * [[beta gamma, -beta^2], [gamma^2, -beta gamma]]`.
pub fn nilpotent_endo(delta: &Poly2, beta: &Poly2, gamma: &Poly2) -> TraceZeroEndo {
    let bg = beta * gamma;
    TraceZeroEndo::from_abc(
        delta * &bg,
        -&(delta * &(beta * beta)),
        delta * &(gamma * gamma),
    )
}

pub fn nilpotent_decompose(w: &SymTensor) -> Result<NilpotentDecomposition> {
    if w.is_zero() {
        return Err(Error::DegenerateInput("zero tensor".into()));
    }
    let det = tensor_det(w);
    if !det.value.is_zero() {
        return Err(Error::NonzeroDeterminant(det.value.to_string()));
    }
    let e = tensor_to_endo(w);
    let (a, b, c) = (e.entry(0, 0), e.entry(0, 1), e.entry(1, 0));
    let delta = gcd3(a, b, c)?;
    let reduce = |p: &Poly2| p.div_exact(&delta).expect("gcd divides every entry");
    let (a, b, c) = (reduce(a), reduce(b), reduce(c));
    let beta = poly_sqrt(&-&b)?;
    let mut gamma = poly_sqrt(&c)?;
    let bg = &beta * &gamma;
    if a != bg {
        assert_eq!(a, -&bg, "a^2 = beta^2 gamma^2 forces a = +-beta gamma");
        gamma = -&gamma;
    }
    let z_colength = colength(&beta, &gamma);
    Ok(NilpotentDecomposition {
        kernel_generator: (beta.clone(), gamma.clone()),
        delta,
        beta,
        gamma,
        z_colength,
    })
}

/// `c2 = length(Z) + L.(L - Delta)`.
pub fn chern_consistency(c2: i64, z_len: i64, l_self: i64, l_dot_delta: i64) -> bool {
    c2 == z_len + l_self - l_dot_delta
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::Rat;

    fn p(s: &str) -> Poly2 {
        s.parse().unwrap()
    }

    fn t(s: &str) -> SymTensor {
        s.parse().unwrap()
    }

    fn endo(m11: &str, m12: &str, m21: &str, m22: &str) -> TraceZeroEndo {
        TraceZeroEndo::new(p(m11), p(m12), p(m21), p(m22)).unwrap()
    }

    #[test]
    fn tensor_to_endo_examples() {
        assert_eq!(
            tensor_to_endo(&t("a11=0; a22=0; a12=1")),
            endo("-1", "0", "0", "1")
        );
        assert_eq!(
            tensor_to_endo(&t("a11=z1; a22=0; a12=0")),
            endo("0", "0", "z1", "0")
        );
        assert_eq!(
            tensor_to_endo(&t("a11=z2^2; a22=-z1^2; a12=z1*z2")),
            endo("-z1*z2", "z1^2", "z2^2", "z1*z2")
        );
    }

    #[test]
    fn endo_to_tensor_examples() {
        assert_eq!(
            endo_to_tensor(&endo("-1", "0", "0", "1")).unwrap(),
            t("a11=0; a22=0; a12=1")
        );
        assert_eq!(
            endo_to_tensor(&endo("0", "-1", "0", "0")).unwrap(),
            t("a11=0; a22=1; a12=0")
        );
        assert!(TraceZeroEndo::new(p("z1"), p("0"), p("0"), p("z1")).is_err());
    }

    #[test]
    fn det_examples() {
        let d = tensor_det(&t("a11=0; a22=0; a12=1"));
        assert_eq!((d.value, d.constant), (p("-1"), true));
        let d = tensor_det(&t("a11=z2^2; a22=z1^2; a12=z1*z2"));
        assert_eq!((d.value, d.constant), (Poly2::zero(), true));
        let d = tensor_det(&t("a11=1; a22=z1; a12=0"));
        assert_eq!((d.value, d.constant), (p("z1"), false));
        // Independent expansion of the 2x2 determinant.
        let w = t("a11=z2^2; a22=-z1^2; a12=z1*z2");
        assert_eq!(tensor_det(&w).value, tensor_to_endo(&w).det());
        assert_eq!(tensor_det(&w).value, p("-2*z1^2*z2^2"));
    }

    #[test]
    fn eigen_examples() {
        let one = ExtPoly::from_rational(Poly2::one());
        let zero = ExtPoly::from_rational(Poly2::zero());
        let neg = ExtPoly::from_rational(p("-1"));

        let w = t("a11=0; a22=0; a12=1");
        let s = eigen_split(&w).unwrap();
        assert_eq!(s.eigenvalue, SqrtExt::one());
        assert_eq!(s.eigenvector_plus, [zero.clone(), one.clone()]);
        assert_eq!(s.eigenvector_minus, [one.clone(), zero.clone()]);
        assert!(s.verify(&tensor_to_endo(&w)));

        let w = t("a11=1; a22=-1; a12=0");
        let s = eigen_split(&w).unwrap();
        assert_eq!(s.eigenvalue, SqrtExt::one());
        assert_eq!(s.eigenvector_plus, [one.clone(), one.clone()]);
        assert_eq!(s.eigenvector_minus, [one.clone(), neg]);
        assert!(s.verify(&tensor_to_endo(&w)));

        let w = t("a11=1; a22=1; a12=0");
        let s = eigen_split(&w).unwrap();
        assert_eq!(s.eigenvalue, SqrtExt::sqrt_of(&Rat::from_int(-1)));
        assert_eq!(s.eigenvalue.to_string(), "sqrt(-1)");
        assert!(s.verify(&tensor_to_endo(&w)));
    }

    #[test]
    fn eigen_errors() {
        assert_eq!(
            eigen_split(&t("a11=z2^2; a22=z1^2; a12=z1*z2")),
            Err(Error::ZeroDeterminant)
        );
        assert!(matches!(
            eigen_split(&t("a11=1; a22=z1; a12=0")),
            Err(Error::NotSpecialTensor(_))
        ));
    }

    #[test]
    fn eigen_with_polynomial_entries() {
        // det = (z1^2 + 1) - z1^2 = 1
        let w = t("a11=z1^2 + 1; a22=1; a12=z1");
        let s = eigen_split(&w).unwrap();
        assert_eq!(s.eigenvalue, SqrtExt::sqrt_of(&Rat::from_int(-1)));
        assert!(s.verify(&tensor_to_endo(&w)));
        // det = 2 - 4 = -2: c = sqrt(2), irrational but real.
        let w = t("a11=2; a22=1; a12=2");
        let s = eigen_split(&w).unwrap();
        assert_eq!(s.eigenvalue, SqrtExt::sqrt_of(&Rat::from_int(2)));
        assert!(s.verify(&tensor_to_endo(&w)));
    }

    #[test]
    fn nilpotent_first_example() {
        let w = t("a11=z2^2; a22=z1^2; a12=z1*z2");
        let n = nilpotent_decompose(&w).unwrap();
        assert_eq!(n.delta, Poly2::one());
        assert_eq!(n.beta, p("z1"));
        assert_eq!(n.gamma, p("-z2"));
        assert_eq!(n.z_colength, Colength::Finite(1));
        let e = tensor_to_endo(&w);
        assert!(n.verify(&e));
        assert_eq!(n.endo(), e);
    }

    #[test]
    fn nilpotent_constant_example() {
        // e = [[0, 0], [1, 0]]: kernel spanned by (0, 1) everywhere, Z empty.
        let n = nilpotent_decompose(&t("a11=1; a22=0; a12=0")).unwrap();
        assert_eq!(n.delta, Poly2::one());
        assert_eq!(n.beta, Poly2::zero());
        assert_eq!(n.gamma, Poly2::one());
        assert_eq!(n.kernel_generator, (Poly2::zero(), Poly2::one()));
        assert_eq!(n.z_colength, Colength::Finite(0));
    }

    #[test]
    fn nilpotent_extracts_delta() {
        let n = nilpotent_decompose(&t("a11=z1*z2^2; a22=z1^3; a12=z1^2*z2")).unwrap();
        assert_eq!(n.delta, p("z1"));
        assert_eq!((n.beta, n.gamma), (p("z1"), p("-z2")));
    }

    #[test]
    fn nilpotent_errors() {
        assert!(matches!(
            nilpotent_decompose(&t("a11=0; a22=0; a12=1")),
            Err(Error::NonzeroDeterminant(_))
        ));
        assert!(matches!(
            nilpotent_decompose(&SymTensor::default()),
            Err(Error::DegenerateInput(_))
        ));
        // c = -1 after normalization: a unit that is not a square over Q.
        assert!(matches!(
            nilpotent_decompose(&t("a11=-1; a22=0; a12=0")),
            Err(Error::NotASquare(_))
        ));
    }

    #[test]
    fn chern_examples() {
        assert!(chern_consistency(3, 3, 0, 0));
        assert!(chern_consistency(0, 1, 0, 1));
        assert!(!chern_consistency(5, 1, 1, 0));
    }

    #[test]
    fn literal_parsing() {
        let w = t(" a12 = z1 ; a11=1;a22=0 ");
        assert_eq!(w.to_string(), "a11=1; a22=0; a12=z1");
        assert!("a11=1; a22=0".parse::<SymTensor>().is_err());
        assert!("a11=1; a11=2; a22=0; a12=0".parse::<SymTensor>().is_err());
        assert!("a11=1; a33=0; a12=0".parse::<SymTensor>().is_err());
    }
}
