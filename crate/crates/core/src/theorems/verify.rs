use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{check_condition_b, epsilon_j, nonshifted_bound, regime_hypotheses, sigma_wj, Hypothesis, Regime};
use crate::charlib::Engine;
use crate::error::{Error, Result};
use crate::rootsys::{NodeSet, RootSystemSpec, RootVector, Weight};
use crate::weyl::{affine_linked_witnesses, longest_element, WeylElement};

/// Default cap on `dim H^0(ε_J)` for the weight-equation search.
pub const DEFAULT_MODULE_CAP: i64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    #[serde(rename = "type")]
    pub root_system: RootSystemSpec,
    pub ell: i64,
    #[serde(rename = "J")]
    pub j: NodeSet,
    /// 1-based reduced word.
    pub w: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Weight>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu_bound: Option<i64>,
}

impl VerifyConfig {
    fn new(engine: &Engine, ell: i64, j: NodeSet, w: &WeylElement) -> Self {
        VerifyConfig {
            root_system: engine.root_system().spec(),
            ell,
            j,
            w: w.one_based_word(),
            gamma: None,
            nu_bound: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightEqSolution {
    pub y: Vec<usize>,
    pub nu: Weight,
    pub mu: Weight,
    pub mu_multiplicity: i64,
    pub sigma: Weight,
    pub sigma_multiplicity: i64,
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEqReport {
    pub config: VerifyConfig,
    pub hypotheses: Vec<Hypothesis>,
    pub tuples_examined: u64,
    pub solutions: Vec<WeightEqSolution>,
    pub conformant: bool,
}

fn validate(engine: &Engine, ell: i64, j: NodeSet, w: &WeylElement) -> Result<()> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!("ℓ must be at least 2, got {ell}")));
    }
    engine.check_nodes(j)?;
    if w.rho_image().rank() != engine.rank() {
        return Err(Error::DimensionMismatch { expected: engine.rank(), found: w.rho_image().rank() });
    }
    if !w.is_min_coset_rep(j) {
        return Err(Error::NotInJW);
    }
    Ok(())
}

fn coset_reps(engine: &Engine, j: NodeSet) -> Vec<WeylElement> {
    engine.group().iter().filter(|y| y.is_min_coset_rep(j)).cloned().collect()
}

/// Solves `ε_J + ℓν = μ + y·0 + σ` over `y ∈ ^J W`, weights μ of `H^0(ε_J)`,
/// weights σ of the Levi module `H^0_J(w·0)` and `J`-dominant ν.
///
/// ν is determined by the other three, so the search is exact.
pub fn verify_weighteq(engine: &Engine, ell: i64, j: NodeSet, w: &WeylElement, cap: i64) -> Result<WeightEqReport> {
    validate(engine, ell, j, w)?;
    let rs = engine.root_system();
    let n = rs.rank();
    let eps = epsilon_j(n, ell, j);
    let dim = engine.weyl_dim(&eps)?;
    if dim > cap as i128 {
        return Err(Error::TooLarge { dim: dim.min(i64::MAX as i128) as i64, cap });
    }
    let mut hyps = regime_hypotheses(rs, Regime::Quantum, ell);
    hyps.push(nonshifted_bound(rs, ell, w));
    let zero = Weight::zero(n);
    let top = engine.weyl_character(&eps)?;
    let levi = engine.levi_character(&w.dot(&zero), j)?;
    let mut solutions = Vec::new();
    let mut examined = 0u64;
    for y in coset_reps(engine, j) {
        let y0 = y.dot(&zero);
        for (mu, &mm) in top.iter() {
            let base = &(mu + &y0) - &eps;
            for (sigma, &sm) in levi.iter() {
                examined += 1;
                let rhs = &base + sigma;
                if rhs.0.iter().any(|c| c % ell != 0) {
                    continue;
                }
                let nu = Weight(rhs.0.iter().map(|c| c / ell).collect());
                if !nu.is_dominant_on(j) {
                    continue;
                }
                let trivial = y.is_identity() && nu.is_zero() && sigma.is_zero() && mu == &eps;
                solutions.push(WeightEqSolution {
                    y: y.one_based_word(),
                    nu,
                    mu: mu.clone(),
                    mu_multiplicity: mm,
                    sigma: sigma.clone(),
                    sigma_multiplicity: sm,
                    trivial,
                });
            }
        }
    }
    solutions.sort();
    let conformant = solutions.iter().all(|s| s.trivial);
    Ok(WeightEqReport {
        config: VerifyConfig::new(engine, ell, j, w),
        hypotheses: hyps,
        tuples_examined: examined,
        solutions,
        conformant,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KempfViolation {
    pub mu: Weight,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KempfReport {
    pub config: VerifyConfig,
    pub hypotheses: Vec<Hypothesis>,
    pub weights_checked: usize,
    /// Weights μ with `ε_J + μ + ℓγ ∉ X⁺`.
    pub solutions: Vec<KempfViolation>,
    pub conformant: bool,
}

/// Checks `ε_J + μ + ℓγ ∈ X⁺` for every weight μ of `H^0_J(−w_{0,J}(w·0))`.
pub fn verify_kempf_dominance(
    engine: &Engine,
    ell: i64,
    j: NodeSet,
    w: &WeylElement,
    gamma: &Weight,
) -> Result<KempfReport> {
    validate(engine, ell, j, w)?;
    let rs = engine.root_system();
    rs.check_weight(gamma)?;
    let n = rs.rank();
    let mut hyps = regime_hypotheses(rs, Regime::Quantum, ell);
    hyps.push(nonshifted_bound(rs, ell, w));
    hyps.push(Hypothesis::check("gamma_in_x_pj", gamma.in_x_pj(j)));
    hyps.push(Hypothesis::check("condition_b", check_condition_b(rs, ell, j, w, gamma)));
    let w0j = longest_element(rs, j);
    let hw = -w0j.act(&w.dot(&Weight::zero(n)));
    let levi = engine.levi_character(&hw, j)?;
    let shift = &epsilon_j(n, ell, j) + &gamma.scaled(ell);
    let solutions: Vec<KempfViolation> = levi
        .weights()
        .filter_map(|mu| {
            let v = &shift + mu;
            (!v.is_dominant()).then(|| KempfViolation { mu: mu.clone(), weight: v })
        })
        .collect();
    Ok(KempfReport {
        config: VerifyConfig { gamma: Some(gamma.clone()), ..VerifyConfig::new(engine, ell, j, w) },
        hypotheses: hyps,
        weights_checked: levi.len(),
        conformant: solutions.is_empty(),
        solutions,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub x: Vec<usize>,
    /// Simple-root coordinates of σ ∈ ZΦ_J.
    pub sigma: RootVector,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LinkedPair {
    pub y: Vec<usize>,
    pub nu: Weight,
    pub witnesses: Vec<Witness>,
    /// `y = w` with the single witness `(e, ν)`.
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkageReport {
    pub config: VerifyConfig,
    pub hypotheses: Vec<Hypothesis>,
    pub pairs_examined: u64,
    pub solutions: Vec<LinkedPair>,
    pub conformant: bool,
}

/// All `ν` with coordinates in `[0, b]` on `j` and `[−b, b]` elsewhere.
fn nu_box(rank: usize, j: NodeSet, b: i64) -> Vec<Weight> {
    let mut out = alloc::vec![Weight::zero(rank)];
    for i in 0..rank {
        let lo = if j.contains(i) { 0 } else { -b };
        let mut next = Vec::with_capacity(out.len() * (b - lo + 1) as usize);
        for v in &out {
            for c in lo..=b {
                let mut u = v.clone();
                u.0[i] = c;
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// Searches `y ∈ ^J W`, `J`-dominant ν in a box of radius `nu_bound`, for
/// `y·0 + ℓν` linked to `w·0` under the affine Weyl group of `Φ_J`.
pub fn verify_linkage_uniqueness(
    engine: &Engine,
    ell: i64,
    j: NodeSet,
    w: &WeylElement,
    nu_bound: i64,
) -> Result<LinkageReport> {
    validate(engine, ell, j, w)?;
    if nu_bound < 0 {
        return Err(Error::InvalidParameter(format!("ν bound must be non-negative, got {nu_bound}")));
    }
    let rs = engine.root_system();
    let n = rs.rank();
    let h = rs.coxeter_number();
    let mut hyps = regime_hypotheses(rs, Regime::Quantum, ell);
    hyps.push(Hypothesis::check("ell_gt_h", ell > h).with_detail(format!("h = {h}")));
    let levi = engine.levi(j)?;
    let zero = Weight::zero(n);
    let w0 = w.dot(&zero);
    let mut solutions = Vec::new();
    let mut examined = 0u64;
    let nus = nu_box(n, j, nu_bound);
    for y in coset_reps(engine, j) {
        let y0 = y.dot(&zero);
        for nu in &nus {
            examined += 1;
            let target = &y0 + &nu.scaled(ell);
            let found = affine_linked_witnesses(rs, &levi.group, &w0, &target, ell)?;
            if found.is_empty() {
                continue;
            }
            let witnesses: Vec<Witness> = found
                .into_iter()
                .map(|(x, sigma)| Witness { x: x.one_based_word(), sigma })
                .collect();
            let expected = &y == w
                && witnesses.len() == 1
                && witnesses[0].x.is_empty()
                && rs.root_to_weight(&witnesses[0].sigma) == *nu;
            solutions.push(LinkedPair { y: y.one_based_word(), nu: nu.clone(), witnesses, expected });
        }
    }
    solutions.sort();
    let conformant = solutions.iter().all(|p| p.expected);
    Ok(LinkageReport {
        config: VerifyConfig { nu_bound: Some(nu_bound), ..VerifyConfig::new(engine, ell, j, w) },
        hypotheses: hyps,
        pairs_examined: examined,
        solutions,
        conformant,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EnvelopeVerdict {
    /// Every envelope weight is dominant (sufficient).
    Dominant,
    /// Some extremal weight fails (necessary direction).
    NotDominant,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvelopeReport {
    pub config: VerifyConfig,
    pub hypotheses: Vec<Hypothesis>,
    pub sigma_wj: Weight,
    pub envelope_size: usize,
    /// Shifted envelope weights that are not dominant.
    pub solutions: Vec<Weight>,
    pub verdict: EnvelopeVerdict,
    pub conformant: bool,
}

/// Bounds the weights of the tilting module `T_J(σ_{w,J}) ⊗ ℓγ` by the
/// saturated `W_J`-hull of `σ_{w,J}`.
pub fn tilting_weight_envelope_check(
    engine: &Engine,
    ell: i64,
    j: NodeSet,
    w: &WeylElement,
    gamma: &Weight,
) -> Result<EnvelopeReport> {
    validate(engine, ell, j, w)?;
    let rs = engine.root_system();
    rs.check_weight(gamma)?;
    let sigma = sigma_wj(rs, ell, j, w)?;
    let shift = gamma.scaled(ell);
    let hull = engine.levi_character(&sigma, j)?;
    let failing: Vec<Weight> = hull
        .weights()
        .map(|mu| mu + &shift)
        .filter(|v| !v.is_dominant())
        .collect();
    let verdict = if failing.is_empty() {
        EnvelopeVerdict::Dominant
    } else {
        let extremal: BTreeSet<Weight> = engine.levi_orbit(&(&sigma + &shift), j).into_iter().collect();
        if extremal.iter().any(|v| !v.is_dominant()) {
            EnvelopeVerdict::NotDominant
        } else {
            EnvelopeVerdict::Inconclusive
        }
    };
    Ok(EnvelopeReport {
        config: VerifyConfig { gamma: Some(gamma.clone()), ..VerifyConfig::new(engine, ell, j, w) },
        hypotheses: Vec::new(),
        sigma_wj: sigma,
        envelope_size: hull.len(),
        solutions: failing,
        conformant: verdict == EnvelopeVerdict::Dominant,
        verdict,
    })
}
