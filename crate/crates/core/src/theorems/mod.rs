//! Executable cohomology predictions and brute-force checks of the weight
//! combinatorics behind them.

mod predict;
mod verify;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Family, NodeSet, RootSystem, Weight};
use crate::weyl::{longest_element, WeylElement};

pub use predict::{predicted_cohomology, CohomologyPrediction, DegreePrediction, PredictionConfig};
pub use verify::{
    tilting_weight_envelope_check, verify_kempf_dominance, verify_linkage_uniqueness, verify_weighteq,
    EnvelopeReport, EnvelopeVerdict, KempfReport, KempfViolation, LinkageReport, LinkedPair, VerifyConfig,
    WeightEqReport, WeightEqSolution, Witness, DEFAULT_MODULE_CAP,
};

/// Quantum group at an ℓ-th root of unity, or Frobenius kernel in characteristic p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Quantum,
    Frobenius,
}

/// The realization theorems that produce predictions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// General realization, arbitrary parity offset t (quantum).
    T33,
    /// Non-shifted realization, t = 0 (quantum).
    T42,
    /// Shifted realization, t = l(w) (quantum).
    T51,
    /// General realization, arbitrary t (Frobenius kernel).
    T71,
    /// Non-shifted realization (Frobenius kernel).
    T73,
    /// Shifted realization (Frobenius kernel).
    T74,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [Theorem::T33, Theorem::T42, Theorem::T51, Theorem::T71, Theorem::T73, Theorem::T74];

    pub fn regime(self) -> Regime {
        match self {
            Theorem::T33 | Theorem::T42 | Theorem::T51 => Regime::Quantum,
            _ => Regime::Frobenius,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Theorem::T33 => "3.3",
            Theorem::T42 => "4.2",
            Theorem::T51 => "5.1",
            Theorem::T71 => "7.1",
            Theorem::T73 => "7.3",
            Theorem::T74 => "7.4",
        }
    }

    /// Whether the parity offset is supplied by the caller.
    pub fn generic_offset(self) -> bool {
        matches!(self, Theorem::T33 | Theorem::T71)
    }

    /// Whether the offset is `l(w)`.
    pub fn shifted(self) -> bool {
        matches!(self, Theorem::T51 | Theorem::T74)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches(['T', 't']);
        match t {
            "3.3" | "33" => Ok(Theorem::T33),
            "4.2" | "42" => Ok(Theorem::T42),
            "5.1" | "51" => Ok(Theorem::T51),
            "7.1" | "71" => Ok(Theorem::T71),
            "7.2" | "7.3" | "73" => Ok(Theorem::T73),
            "7.4" | "7.5" | "74" => Ok(Theorem::T74),
            _ => Err(Error::InvalidParameter(format!("unknown theorem {s:?}"))),
        }
    }
}

impl Serialize for Theorem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for Theorem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HypothesisStatus {
    Satisfied,
    Violated,
    /// Not decidable from characters; the computation proceeds regardless.
    Unverified,
    /// Taken as an input assumption.
    Assumed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub satisfied: bool,
    pub status: HypothesisStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Hypothesis {
    pub fn new(name: &str, status: HypothesisStatus) -> Self {
        Hypothesis {
            name: name.to_string(),
            satisfied: status == HypothesisStatus::Satisfied,
            status,
            detail: None,
        }
    }

    pub fn check(name: &str, ok: bool) -> Self {
        Self::new(name, if ok { HypothesisStatus::Satisfied } else { HypothesisStatus::Violated })
    }

    pub fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

/// True when no listed hypothesis is violated.
pub fn none_violated(hs: &[Hypothesis]) -> bool {
    hs.iter().all(|h| h.status != HypothesisStatus::Violated)
}

/// Parameters shared by the predictions and checks.
#[derive(Debug, Clone)]
pub struct RegimeParams {
    pub mode: Regime,
    /// ℓ in quantum mode, p in Frobenius mode.
    pub ell: i64,
    pub j: NodeSet,
    pub gamma: Weight,
    pub w: WeylElement,
}

impl RegimeParams {
    /// Validates shapes; arithmetic hypotheses are reported, not enforced.
    pub fn new(rs: &RootSystem, mode: Regime, ell: i64, j: NodeSet, gamma: Weight, w: WeylElement) -> Result<Self> {
        if ell < 2 {
            return Err(Error::InvalidParameter(format!("ℓ must be at least 2, got {ell}")));
        }
        rs.check_weight(&gamma)?;
        if !j.is_subset(NodeSet::full(rs.rank())) {
            let bad = j.iter().find(|&i| i >= rs.rank()).unwrap_or(0);
            return Err(Error::IndexOutOfRange { index: bad + 1, rank: rs.rank() });
        }
        if w.rho_image().rank() != rs.rank() {
            return Err(Error::DimensionMismatch { expected: rs.rank(), found: w.rho_image().rank() });
        }
        if !w.is_min_coset_rep(j) {
            return Err(Error::NotInJW);
        }
        Ok(RegimeParams { mode, ell, j, gamma, w })
    }
}

/// Standing arithmetic hypotheses on ℓ (quantum) or p (Frobenius).
pub fn regime_hypotheses(rs: &RootSystem, mode: Regime, ell: i64) -> Vec<Hypothesis> {
    let mut out = Vec::new();
    match mode {
        Regime::Quantum => {
            out.push(Hypothesis::check("ell_odd", ell % 2 == 1));
            if rs.spec().family == Family::G {
                out.push(Hypothesis::check("three_does_not_divide_ell", ell % 3 != 0));
            }
        }
        Regime::Frobenius => {
            out.push(Hypothesis::check("p_at_least_3", ell >= 3));
            out.push(Hypothesis::check("p_prime", is_prime(ell)));
        }
    }
    out
}

fn is_prime(n: i64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `ε_J = (ℓ−1) Σ_{j ∈ J} ω_j`.
pub fn epsilon_j(rank: usize, ell: i64, j: NodeSet) -> Weight {
    Weight((0..rank).map(|i| if j.contains(i) { ell - 1 } else { 0 }).collect())
}

/// `σ_{w,J} = ε_J − w_{0,J} ε_J + w_{0,J}(w·0)`, checked `J`-dominant.
pub fn sigma_wj(rs: &RootSystem, ell: i64, j: NodeSet, w: &WeylElement) -> Result<Weight> {
    if !w.is_min_coset_rep(j) {
        return Err(Error::NotInJW);
    }
    let w0j = longest_element(rs, j);
    let eps = epsilon_j(rs.rank(), ell, j);
    let dot = w.dot(&Weight::zero(rs.rank()));
    let sigma = &(&eps - &w0j.act(&eps)) + &w0j.act(&dot);
    if !sigma.is_dominant_on(j) {
        return Err(Error::NotJDominant(sigma));
    }
    Ok(sigma)
}

/// Condition (b): `ε_J − w_{0,J}(w·0) + ℓγ ∈ X⁺`.
pub fn check_condition_b(rs: &RootSystem, ell: i64, j: NodeSet, w: &WeylElement, gamma: &Weight) -> bool {
    let w0j = longest_element(rs, j);
    let eps = epsilon_j(rs.rank(), ell, j);
    let dot = w.dot(&Weight::zero(rs.rank()));
    let v = &(&eps - &w0j.act(&dot)) + &gamma.scaled(ell);
    v.is_dominant()
}

/// Bound on ℓ used by the non-shifted theorems: `ℓ > h` suffices for
/// `w = e`, otherwise `ℓ > 2h − 1`.
pub(crate) fn nonshifted_bound(rs: &RootSystem, ell: i64, w: &WeylElement) -> Hypothesis {
    let h = rs.coxeter_number();
    if w.is_identity() {
        Hypothesis::check("ell_gt_h", ell > h).with_detail(format!("h = {h}"))
    } else {
        Hypothesis::check("ell_gt_2h_minus_1", ell > 2 * h - 1).with_detail(format!("2h-1 = {}", 2 * h - 1))
    }
}
