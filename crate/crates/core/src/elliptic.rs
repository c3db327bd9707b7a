//! Degree arithmetic on minimal properly elliptic surfaces `f: X -> B`: the canonical
//! bundle formula, existence of nilpotent special tensors from the class `2K_B - delta`,
//! the fibrewise check behind `f_* O(2 S_hat + S_m) = O_B`, and a Weierstrass family
//! over hyperelliptic curves.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyalg::Rat;

/// The shipped Kodaira table.
pub const KODAIRA_TABLE: &str = include_str!("../fixtures/kodaira.tbl");

/// Kodaira type of a singular fibre.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FibreType {
    /// `I_k`, `k >= 1`: a cycle of `k` rational curves (a nodal curve for `k = 1`).
    I(u32),
    /// `I_k^*`, `k >= 0`.
    IStar(u32),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
    /// `m I_k`, `m >= 2`.
    Multiple {
        m: u32,
        k: u32,
    },
}

impl FibreType {
    pub fn component_count(self) -> usize {
        match self {
            FibreType::I(k) => k as usize,
            FibreType::IStar(k) => k as usize + 5,
            FibreType::II => 1,
            FibreType::III => 2,
            FibreType::IV => 3,
            FibreType::IVStar => 7,
            FibreType::IIIStar => 8,
            FibreType::IIStar => 9,
            FibreType::Multiple { k, .. } => k.max(1) as usize,
        }
    }

    /// Component multiplicities from the classification (extended Dynkin diagram labels).
    pub fn standard_multiplicities(self) -> Vec<u32> {
        match self {
            FibreType::I(k) => vec![1; k as usize],
            FibreType::IStar(k) => {
                let mut v = vec![1; 4];
                v.extend(std::iter::repeat_n(2, k as usize + 1));
                v
            }
            FibreType::II => vec![1],
            FibreType::III => vec![1, 1],
            FibreType::IV => vec![1, 1, 1],
            FibreType::IVStar => vec![1, 1, 1, 2, 2, 2, 3],
            FibreType::IIIStar => vec![1, 1, 2, 2, 2, 3, 3, 4],
            FibreType::IIStar => vec![1, 2, 2, 3, 3, 4, 4, 5, 6],
            FibreType::Multiple { m, k } => vec![m; k.max(1) as usize],
        }
    }

    pub fn is_multiple(self) -> bool {
        matches!(self, FibreType::Multiple { .. })
    }
}

impl fmt::Display for FibreType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FibreType::I(k) => write!(f, "I{k}"),
            FibreType::IStar(k) => write!(f, "I{k}*"),
            FibreType::II => f.write_str("II"),
            FibreType::III => f.write_str("III"),
            FibreType::IV => f.write_str("IV"),
            FibreType::IIStar => f.write_str("II*"),
            FibreType::IIIStar => f.write_str("III*"),
            FibreType::IVStar => f.write_str("IV*"),
            FibreType::Multiple { m, k } => write!(f, "{m}I{k}"),
        }
    }
}

impl Serialize for FibreType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for FibreType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("unknown Kodaira fibre type {s:?}"));
        let tag = s.trim();
        let named = match tag {
            "II" => Some(FibreType::II),
            "III" => Some(FibreType::III),
            "IV" => Some(FibreType::IV),
            "II*" => Some(FibreType::IIStar),
            "III*" => Some(FibreType::IIIStar),
            "IV*" => Some(FibreType::IVStar),
            _ => None,
        };
        if let Some(t) = named {
            return Ok(t);
        }
        let (prefix, rest) = tag.split_once('I').ok_or_else(bad)?;
        let (index, star) = match rest.strip_suffix('*') {
            Some(r) => (r, true),
            None => (rest, false),
        };
        if index.is_empty() || !index.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let k: u32 = index.parse().map_err(|_| bad())?;
        if prefix.is_empty() {
            return match (star, k) {
                (true, k) => Ok(FibreType::IStar(k)),
                (false, 0) => Err(Error::InvalidInput(
                    "I0 is a smooth fibre, not singular".into(),
                )),
                (false, k) => Ok(FibreType::I(k)),
            };
        }
        if star || !prefix.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let m: u32 = prefix.parse().map_err(|_| bad())?;
        if m < 2 {
            return Err(Error::InvalidInput(format!(
                "multiple fibre {tag} needs multiplicity >= 2"
            )));
        }
        Ok(FibreType::Multiple { m, k })
    }
}

/// A singular fibre `F_p = sum m_i C_i`.
///
/// The constructor checks the component count and, for multiple fibres, that every
/// component has multiplicity `n_p`. Whether a non-multiple fibre has a reduced
/// component is left to [`multiple_fibre_claim_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KodairaFibre {
    pub kind: FibreType,
    pub multiplicities: Vec<u32>,
}

impl KodairaFibre {
    pub fn new(kind: FibreType, multiplicities: Vec<u32>) -> Result<Self> {
        if multiplicities.len() != kind.component_count() {
            return Err(Error::InvalidInput(format!(
                "{kind} has {} components, got {}",
                kind.component_count(),
                multiplicities.len()
            )));
        }
        if multiplicities.contains(&0) {
            return Err(Error::InvalidInput(format!("{kind}: zero multiplicity")));
        }
        if let FibreType::Multiple { m, .. } = kind {
            if multiplicities.iter().any(|&x| x != m) {
                return Err(Error::InvalidInput(format!(
                    "{kind}: every component of a multiple fibre has multiplicity {m}"
                )));
            }
        }
        Ok(KodairaFibre {
            kind,
            multiplicities,
        })
    }

    pub fn standard(kind: FibreType) -> Self {
        KodairaFibre {
            multiplicities: kind.standard_multiplicities(),
            kind,
        }
    }

    pub fn is_multiple(&self) -> bool {
        self.kind.is_multiple()
    }

    /// `n_p`, the multiplicity of the fibre (`1` unless multiple).
    pub fn fibre_multiplicity(&self) -> u32 {
        match self.kind {
            FibreType::Multiple { m, .. } => m,
            _ => 1,
        }
    }
}

/// Neither `2 S_hat_p >= F_p` nor `S_m,p >= F_p` on the fibre.
///
/// Multiple fibres: `S_m,p = (n_p - 1) F'_p < n_p F'_p`. Otherwise `2 (m_i - 1) >= m_i`
/// must fail for some component, i.e. some `m_i = 1`.
pub fn multiple_fibre_claim_check(f: &KodairaFibre) -> bool {
    if f.is_multiple() {
        let n = f.fibre_multiplicity();
        n - 1 < n
    } else {
        !f.multiplicities.iter().all(|&m| 2 * (m - 1) >= m)
    }
}

/// A parsed Kodaira table: one fibre per line, `tag m_1 m_2 ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaTable {
    pub fibres: Vec<KodairaFibre>,
}

impl KodairaTable {
    pub fn parse(src: &str) -> Result<Self> {
        let mut fibres = Vec::new();
        for (idx, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let at = |e: Error| Error::InvalidInput(format!("line {}: {e}", idx + 1));
            let mut words = line.split_whitespace();
            let kind: FibreType = words.next().expect("nonempty line").parse().map_err(at)?;
            let mults = words
                .map(|w| {
                    w.parse::<u32>()
                        .map_err(|_| at(Error::InvalidInput(format!("bad multiplicity {w:?}"))))
                })
                .collect::<Result<Vec<_>>>()?;
            fibres.push(KodairaFibre::new(kind, mults).map_err(at)?);
        }
        Ok(KodairaTable { fibres })
    }

    pub fn builtin() -> Self {
        KodairaTable::parse(KODAIRA_TABLE).expect("shipped table parses")
    }

    /// Reads a table file; a missing or unreadable file is reported with its path.
    pub fn from_path(path: &Path) -> Result<Self> {
        let src = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        KodairaTable::parse(&src)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
    }

    /// The types every table must cover: `I_k` (k <= 10), `I_k^*` (k <= 5), the six
    /// exceptional types and `m I_k` (2 <= m <= 5, k <= 4).
    pub fn required_types() -> Vec<FibreType> {
        let mut v: Vec<FibreType> = (1..=10).map(FibreType::I).collect();
        v.extend((0..=5).map(FibreType::IStar));
        v.extend([
            FibreType::II,
            FibreType::III,
            FibreType::IV,
            FibreType::IVStar,
            FibreType::IIIStar,
            FibreType::IIStar,
        ]);
        for m in 2..=5 {
            v.extend((0..=4).map(|k| FibreType::Multiple { m, k }));
        }
        v
    }

    pub fn lookup(&self, kind: FibreType) -> Option<&KodairaFibre> {
        self.fibres.iter().find(|f| f.kind == kind)
    }
}

/// `deg delta = chi - 2 + 2b` in `K_X = sum (n_i - 1) F'_i + f^* delta`.
pub fn delta_degree(chi: i64, b: i64) -> i64 {
    chi - 2 + 2 * b
}

/// `deg (2 K_B - delta) = 2b - 2 - (1 - b + p_g) = 3b - 3 - p_g`, assuming `q = b`.
pub fn special_tensor_degree(b: i64, pg: i64) -> Result<i64> {
    if b < 0 || pg < b {
        return Err(Error::InvalidDescriptor(format!(
            "need 0 <= b <= pg (chi = 1 + pg - b >= 1), got b = {b}, pg = {pg}"
        )));
    }
    Ok(3 * b - 3 - pg)
}

/// Whether a nilpotent special tensor is guaranteed by Riemann-Roch on the base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensorExistence {
    pub guaranteed: bool,
    pub degree: i64,
    pub reason: String,
}

/// Guaranteed iff `deg(2K_B - delta) >= b`, i.e. `b >= 3` and `b <= p_g <= 2b - 3`.
///
/// A negative answer means "not guaranteed", not "impossible".
pub fn exists_nilpotent_special_tensor(b: i64, pg: i64) -> Result<TensorExistence> {
    let degree = special_tensor_degree(b, pg)?;
    let (guaranteed, reason) = if degree >= b {
        (
            true,
            format!("deg(2K_B - delta) = {degree} >= b = {b}: every divisor of degree >= b on B is effective"),
        )
    } else if b < 3 {
        (
            false,
            format!("window b <= pg <= 2b - 3 is empty for b = {b} < 3"),
        )
    } else {
        (
            false,
            format!(
                "pg = {pg} > 2b - 3 = {} so deg(2K_B - delta) = {degree} < b = {b}; effectiveness not guaranteed",
                2 * b - 3
            ),
        )
    };
    Ok(TensorExistence {
        guaranteed,
        degree,
        reason,
    })
}

/// Numerical data of a minimal elliptic fibration that is not a product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllipticDescriptor {
    pub b: i64,
    pub chi: i64,
    pub pg: i64,
    pub q: i64,
    pub multiple_fibre_orders: Vec<u32>,
    pub singular_fibres: Vec<KodairaFibre>,
}

impl EllipticDescriptor {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidDescriptor(m));
        if self.b < 0 || self.pg < 0 || self.q < 0 {
            return bad("b, pg, q must be nonnegative".into());
        }
        if self.chi < 1 {
            return bad(format!("chi = {} < 1", self.chi));
        }
        if self.chi != 1 + self.pg - self.q {
            return bad(format!(
                "chi = {} but 1 + pg - q = {}",
                self.chi,
                1 + self.pg - self.q
            ));
        }
        if self.q != self.b {
            return bad(format!(
                "q = {} differs from the base genus b = {}",
                self.q, self.b
            ));
        }
        if let Some(n) = self.multiple_fibre_orders.iter().find(|&&n| n < 2) {
            return bad(format!("multiple fibre order {n} < 2"));
        }
        Ok(())
    }
}

/// Degree of the Q-divisor `delta + sum (n_i - 1)/n_i` on the base.
pub fn canonical_bundle_degree(d: &EllipticDescriptor) -> Rat {
    d.multiple_fibre_orders
        .iter()
        .fold(Rat::from_int(delta_degree(d.chi, d.b)), |acc, &n| {
            acc + Rat::new(n as i64 - 1, n as i64).expect("n >= 2")
        })
}

/// Kodaira dimension 1 needs a positive canonical degree.
pub fn is_properly_elliptic(d: &EllipticDescriptor) -> bool {
    canonical_bundle_degree(d).is_positive()
}

/// Jacobian fibration over a hyperelliptic base of genus `b = 6h + 1` with `M = h H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WeierstrassFamily {
    pub h: u32,
    pub b: i64,
    pub m_degree: i64,
    pub canonical_degree: i64,
    pub six_m_degree: i64,
    /// `deg(K_B - 6M)`.
    pub residual_degree: i64,
    /// `h^0(O_X(2L - K_X))` under the choice `K_B = 6M` (linear equivalence).
    pub h0: u64,
}

pub fn weierstrass_example(h: u32) -> Result<WeierstrassFamily> {
    if h == 0 {
        return Err(Error::InvalidInput("h must be positive".into()));
    }
    let b = 6 * h as i64 + 1;
    let m_degree = 2 * h as i64;
    let canonical_degree = 2 * b - 2;
    let six_m_degree = 6 * m_degree;
    let residual_degree = canonical_degree - six_m_degree;
    // K_B = (b - 1) H = 6h H = 6M on a hyperelliptic curve, so the residual class is trivial.
    let h0 = if residual_degree == 0 { 1 } else { 0 };
    Ok(WeierstrassFamily {
        h,
        b,
        m_degree,
        canonical_degree,
        six_m_degree,
        residual_degree,
        h0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_examples() {
        assert_eq!(delta_degree(1, 0), -1);
        assert_eq!(delta_degree(1, 3), 5);
        assert_eq!(delta_degree(2, 0), 0);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(special_tensor_degree(3, 3).unwrap(), 3);
        assert_eq!(special_tensor_degree(7, 7).unwrap(), 11);
        assert!(matches!(
            special_tensor_degree(3, 2),
            Err(Error::InvalidDescriptor(_))
        ));
    }

    #[test]
    fn existence_examples() {
        assert!(exists_nilpotent_special_tensor(3, 3).unwrap().guaranteed);
        let e = exists_nilpotent_special_tensor(2, 2).unwrap();
        assert!(!e.guaranteed && e.reason.contains("empty"));
        let e = exists_nilpotent_special_tensor(5, 8).unwrap();
        assert!(!e.guaranteed && e.degree == 4 && e.reason.contains("not guaranteed"));
    }

    #[test]
    fn claim_examples() {
        assert!(multiple_fibre_claim_check(&KodairaFibre::standard(
            FibreType::I(5)
        )));
        assert!(multiple_fibre_claim_check(&KodairaFibre::standard(
            FibreType::IIStar
        )));
        assert!(multiple_fibre_claim_check(&KodairaFibre::standard(
            FibreType::Multiple { m: 3, k: 2 }
        )));
        let broken = KodairaFibre::new(FibreType::IIStar, vec![2, 2, 2, 3, 3, 4, 4, 5, 6]).unwrap();
        assert!(!multiple_fibre_claim_check(&broken));
    }

    #[test]
    fn fibre_tags_roundtrip() {
        for t in KodairaTable::required_types() {
            assert_eq!(t.to_string().parse::<FibreType>().unwrap(), t);
        }
        for bad in ["I0", "1I2", "I", "V", "2I3*", "Ix"] {
            assert!(bad.parse::<FibreType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn fibre_validation() {
        assert!(KodairaFibre::new(FibreType::I(3), vec![1, 1]).is_err());
        assert!(KodairaFibre::new(FibreType::Multiple { m: 2, k: 2 }, vec![2, 3]).is_err());
        assert!(KodairaFibre::new(FibreType::III, vec![1, 0]).is_err());
    }

    #[test]
    fn shipped_table_matches_classification() {
        let table = KodairaTable::builtin();
        for t in KodairaTable::required_types() {
            let f = table.lookup(t).unwrap_or_else(|| panic!("{t} missing"));
            assert_eq!(f.multiplicities, t.standard_multiplicities(), "{t}");
        }
        assert_eq!(table.fibres.len(), KodairaTable::required_types().len());
    }

    #[test]
    fn table_errors_carry_lines() {
        let err = KodairaTable::parse("I2 1 1\nIV 1 1\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn canonical_degree_examples() {
        let d = |b, orders: Vec<u32>| EllipticDescriptor {
            b,
            chi: 1,
            pg: b,
            q: b,
            multiple_fibre_orders: orders,
            singular_fibres: vec![],
        };
        assert_eq!(
            canonical_bundle_degree(&d(0, vec![2, 3, 7])),
            Rat::new(43, 42).unwrap()
        );
        assert_eq!(canonical_bundle_degree(&d(1, vec![])), Rat::one());
        assert_eq!(canonical_bundle_degree(&d(0, vec![2, 2])), Rat::zero());
        assert!(!is_properly_elliptic(&d(0, vec![2, 2])));
    }

    #[test]
    fn descriptor_validation() {
        let ok = EllipticDescriptor {
            b: 3,
            chi: 1,
            pg: 3,
            q: 3,
            multiple_fibre_orders: vec![2],
            singular_fibres: vec![],
        };
        assert!(ok.validate().is_ok());
        assert!(EllipticDescriptor {
            q: 2,
            chi: 2,
            ..ok.clone()
        }
        .validate()
        .is_err());
        assert!(EllipticDescriptor {
            pg: 2,
            chi: 0,
            ..ok.clone()
        }
        .validate()
        .is_err());
        assert!(EllipticDescriptor {
            multiple_fibre_orders: vec![1],
            ..ok
        }
        .validate()
        .is_err());
    }

    #[test]
    fn weierstrass_examples() {
        let w = weierstrass_example(1).unwrap();
        assert_eq!((w.b, w.residual_degree, w.h0), (7, 0, 1));
        let w = weierstrass_example(2).unwrap();
        assert_eq!(
            (w.b, w.canonical_degree, w.six_m_degree, w.h0),
            (13, 24, 24, 1)
        );
        assert!(weierstrass_example(0).is_err());
    }
}
