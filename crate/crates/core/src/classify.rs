//! Uniformization decision procedure for minimal surfaces from numerical data and the
//! status of (semi) special tensors, with an evidence trail of the results applied.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// What is known about sections of `S^2 Omega^1 (-K) (x) eta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TensorStatus {
    NoTensor,
    SemiSpecialExists,
    /// The section space has dimension exactly one.
    SemiSpecialUnique,
    /// `h^0(S^2 Omega^1 (-K)) = d`.
    SpecialDim(u64),
}

impl TensorStatus {
    pub fn all_small(max_dim: u64) -> Vec<TensorStatus> {
        let mut v = vec![
            TensorStatus::NoTensor,
            TensorStatus::SemiSpecialExists,
            TensorStatus::SemiSpecialUnique,
        ];
        v.extend((0..=max_dim).map(TensorStatus::SpecialDim));
        v
    }

    pub fn has_tensor(self) -> bool {
        match self {
            TensorStatus::NoTensor => false,
            TensorStatus::SpecialDim(d) => d >= 1,
            _ => true,
        }
    }
}

impl fmt::Display for TensorStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorStatus::NoTensor => f.write_str("none"),
            TensorStatus::SemiSpecialExists => f.write_str("semi-special"),
            TensorStatus::SemiSpecialUnique => f.write_str("semi-special-unique"),
            TensorStatus::SpecialDim(d) => write!(f, "special:{d}"),
        }
    }
}

impl FromStr for TensorStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "none" => Ok(TensorStatus::NoTensor),
            "semi-special" => Ok(TensorStatus::SemiSpecialExists),
            "semi-special-unique" => Ok(TensorStatus::SemiSpecialUnique),
            other => other
                .strip_prefix("special:")
                .and_then(|d| d.trim().parse().ok())
                .map(TensorStatus::SpecialDim)
                .ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "tensor status {other:?}: expected none, semi-special, semi-special-unique or special:<d>"
                    ))
                }),
        }
    }
}

impl Serialize for TensorStatus {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TensorStatus {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Numerical profile fed to [`classify`]; `None` means unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    pub k2: i64,
    #[serde(default)]
    pub chi: Option<i64>,
    #[serde(default)]
    pub p2: Option<i64>,
    #[serde(default)]
    pub q: Option<i64>,
    pub tensor: TensorStatus,
}

impl SurfaceInvariants {
    pub fn validate(&self) -> Result<()> {
        if let Some(p2) = self.p2.filter(|&p| p < 0) {
            return Err(Error::InvalidInput(format!("P2 = {p2} is negative")));
        }
        if let Some(q) = self.q.filter(|&q| q < 0) {
            return Err(Error::InvalidInput(format!("q = {q} is negative")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "reason", rename_all = "snake_case")]
pub enum Verdict {
    Bidisk,
    Quadric,
    Ball,
    /// Bidisk quotient or smooth quadric; `P_2` unknown.
    Dichotomy,
    NotCovered,
    Contradiction(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Bidisk => f.write_str("Bidisk"),
            Verdict::Quadric => f.write_str("Quadric"),
            Verdict::Ball => f.write_str("Ball"),
            Verdict::Dichotomy => f.write_str("Dichotomy"),
            Verdict::NotCovered => f.write_str("NotCovered"),
            Verdict::Contradiction(r) => write!(f, "Contradiction({r})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub label: String,
    pub detail: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
}

impl Classification {
    pub fn has_label(&self, label: &str) -> bool {
        self.evidence.iter().any(|e| e.label == label)
    }
}

pub mod labels {
    pub const SHARP: &str = "sharp-criterion";
    pub const DICHOTOMY: &str = "unibidisk-dichotomy";
    pub const BALL: &str = "miyaoka-yau";
    pub const K2_EQ_8CHI: &str = "k2-eq-8chi";
    pub const QUADRIC_PROFILE: &str = "quadric-profile";
    pub const UNIQUENESS: &str = "uniqueness-of-special-tensor";
    pub const BIGENUS: &str = "bigenus-gap";
    pub const NOT_COVERED: &str = "not-covered";
    pub const OPEN_QUESTION: &str = "open-question";
}

fn fmt_opt(v: Option<i64>) -> String {
    v.map_or_else(|| "unknown".to_string(), |x| x.to_string())
}

struct Trail(Vec<Evidence>);

impl Trail {
    fn push(&mut self, label: &str, passed: bool, detail: String) {
        self.0.push(Evidence {
            label: label.to_string(),
            detail,
            passed,
        });
    }
}

pub fn classify(inv: &SurfaceInvariants) -> Result<Classification> {
    inv.validate()?;
    let mut trail = Trail(Vec::new());
    let has_tensor = inv.tensor.has_tensor();

    let r1 = has_tensor && inv.k2 > 0;
    trail.push(
        labels::DICHOTOMY,
        r1,
        format!("tensor = {}, K2 = {} > 0", inv.tensor, inv.k2),
    );
    if r1 {
        let verdict = match inv.p2 {
            None => Verdict::Dichotomy,
            Some(0) => quadric_branch(inv, &mut trail),
            Some(1) => {
                trail.push(
                    labels::BIGENUS,
                    false,
                    "P2 = 1: a quadric has P2 = 0 and a bidisk quotient has P2 = chi + K2 >= 2"
                        .into(),
                );
                Verdict::Contradiction("P2 = 1 is excluded by the bidisk/quadric dichotomy".into())
            }
            Some(p2) => bidisk_branch(inv, p2, &mut trail),
        };
        return Ok(Classification {
            verdict,
            evidence: trail.0,
        });
    }

    let r2 = matches!(inv.chi, Some(chi) if inv.k2 > 0 && inv.k2 == 9 * chi)
        && matches!(inv.p2, Some(p) if p >= 1);
    trail.push(
        labels::BALL,
        r2,
        format!(
            "K2 = {}, 9 chi = {}, P2 = {}",
            inv.k2,
            inv.chi.map_or("unknown".into(), |c| (9 * c).to_string()),
            fmt_opt(inv.p2)
        ),
    );
    if r2 {
        return Ok(Classification {
            verdict: Verdict::Ball,
            evidence: trail.0,
        });
    }

    trail.push(labels::NOT_COVERED, true, "no criterion applies".into());
    if has_tensor && inv.k2 <= 0 {
        trail.push(
            labels::OPEN_QUESTION,
            true,
            format!(
                "K2 = {} with a tensor present: strong uniformization by the bidisk is open here (q = {})",
                inv.k2,
                fmt_opt(inv.q)
            ),
        );
    }
    Ok(Classification {
        verdict: Verdict::NotCovered,
        evidence: trail.0,
    })
}

fn uniqueness_check(inv: &SurfaceInvariants, trail: &mut Trail) -> Option<Verdict> {
    if let TensorStatus::SpecialDim(d) = inv.tensor {
        let ok = d <= 1;
        trail.push(
            labels::UNIQUENESS,
            ok,
            format!("h0(S^2 Omega^1(-K)) = {d}, at most 1 allowed"),
        );
        if !ok {
            return Some(Verdict::Contradiction(format!(
                "special tensor space of dimension {d} >= 2"
            )));
        }
    }
    None
}

fn quadric_branch(inv: &SurfaceInvariants, trail: &mut Trail) -> Verdict {
    trail.push(labels::SHARP, true, "P2 = 0: smooth quadric branch".into());
    let ok = inv.k2 == 8 && inv.chi.is_none_or(|c| c == 1) && inv.q.is_none_or(|q| q == 0);
    trail.push(
        labels::QUADRIC_PROFILE,
        ok,
        format!(
            "expect K2 = 8, chi = 1, q = 0; got K2 = {}, chi = {}, q = {}",
            inv.k2,
            fmt_opt(inv.chi),
            fmt_opt(inv.q)
        ),
    );
    if !ok {
        return Verdict::Contradiction("P2 = 0 but the invariants are not those of P1 x P1".into());
    }
    uniqueness_check(inv, trail).unwrap_or(Verdict::Quadric)
}

fn bidisk_branch(inv: &SurfaceInvariants, p2: i64, trail: &mut Trail) -> Verdict {
    trail.push(
        labels::SHARP,
        true,
        format!("P2 = {p2} >= 2: bidisk branch"),
    );
    if let Some(chi) = inv.chi {
        let ok = inv.k2 == 8 * chi;
        trail.push(
            labels::K2_EQ_8CHI,
            ok,
            format!("K2 = {}, 8 chi = {}", inv.k2, 8 * chi),
        );
        if !ok {
            return Verdict::Contradiction(format!(
                "K2 = {} differs from 8 chi = {}",
                inv.k2,
                8 * chi
            ));
        }
    }
    uniqueness_check(inv, trail).unwrap_or(Verdict::Bidisk)
}

/// `P_2 = chi + K^2` for a minimal surface of general type (vanishing of `H^1(2K)`).
pub fn min_bigenus(chi: i64, k2: i64) -> Result<i64> {
    if chi < 1 || k2 < 1 {
        return Err(Error::InvalidInput(format!(
            "need chi >= 1 and K2 >= 1, got ({chi}, {k2})"
        )));
    }
    Ok(chi + k2)
}

/// Special tensors on the etale double cover `X'` defined by `eta`:
/// `h^0(S^2 Omega^1 (-K)) + h^0(S^2 Omega^1 (-K) (x) eta)`.
pub fn double_cover_dims(dim_special: u64, dim_twisted: u64) -> u64 {
    dim_special + dim_twisted
}

/// Necessary condition for a quotient of the `n`-fold polydisk: a semi-special tensor
/// and `K^n > 0`. Only `n = 2` is implemented.
pub fn polydisk_necessary_profile(n: u32) -> Result<fn(&SurfaceInvariants) -> bool> {
    if n != 2 {
        return Err(Error::Unsupported(format!("polydisk profile for n = {n}")));
    }
    Ok(|inv| inv.tensor.has_tensor() && inv.k2 > 0)
}
