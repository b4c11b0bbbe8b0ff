use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::verify::{tilting_weight_envelope_check, EnvelopeVerdict};
use super::{
    check_condition_b, none_violated, nonshifted_bound, regime_hypotheses, Hypothesis, HypothesisStatus, Regime,
    RegimeParams, Theorem,
};
use crate::charlib::{mult_entries, Decomposition, Engine};
use crate::error::{Error, Result};
use crate::rootsys::{NodeSet, RootSystemSpec, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictionConfig {
    #[serde(rename = "type")]
    pub root_system: RootSystemSpec,
    pub theorem: Theorem,
    pub mode: Regime,
    pub ell: i64,
    #[serde(rename = "J")]
    pub j: NodeSet,
    pub gamma: Weight,
    /// 1-based reduced word.
    pub w: Vec<usize>,
    pub t: usize,
    pub up_to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreePrediction {
    pub n: usize,
    /// `(n − t)/2` when the parity matches.
    pub sym_degree: Option<usize>,
    #[serde(with = "mult_entries")]
    pub decomposition: Decomposition,
    pub dimension: i64,
    /// Frobenius mode: the same decomposition with every σ replaced by pσ.
    #[serde(with = "mult_entries", default, skip_serializing_if = "BTreeMap::is_empty")]
    pub twisted: Decomposition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyPrediction {
    pub config: PredictionConfig,
    pub hypotheses: Vec<Hypothesis>,
    /// No hypothesis is violated (unverified and assumed ones do not count).
    pub hypotheses_ok: bool,
    pub warnings: Vec<String>,
    pub parity_offset: usize,
    /// 1 in quantum mode; p in Frobenius mode.
    pub twist: i64,
    pub degrees: Vec<DegreePrediction>,
}

impl CohomologyPrediction {
    pub fn dimensions(&self) -> Vec<i64> {
        self.degrees.iter().map(|d| d.dimension).collect()
    }
}

/// Predicted `H^n` for `n ≤ up_to`, as `H^0`-multiplicities.
///
/// `t` is only consulted by the general-offset theorems; for the others it
/// must be absent or agree with the theorem's own offset.
pub fn predicted_cohomology(
    engine: &Engine,
    theorem: Theorem,
    params: &RegimeParams,
    t: Option<usize>,
    up_to: usize,
) -> Result<CohomologyPrediction> {
    let rs = engine.root_system();
    if params.mode != theorem.regime() {
        return Err(Error::InvalidParameter(format!(
            "theorem {theorem} belongs to the {:?} regime",
            theorem.regime()
        )));
    }
    let own = if theorem.generic_offset() {
        t.unwrap_or(0)
    } else if theorem.shifted() {
        params.w.length()
    } else {
        0
    };
    if let Some(given) = t {
        if given != own {
            return Err(Error::InvalidParameter(format!(
                "theorem {theorem} fixes t = {own}, got {given}"
            )));
        }
    }
    if !params.gamma.is_dominant() || !params.gamma.in_x_pj(params.j) {
        return Err(Error::PreconditionFailed(format!(
            "γ = {} must be dominant and vanish on J = {}",
            params.gamma, params.j
        )));
    }
    let ell = params.ell;
    let mut hyps = regime_hypotheses(rs, params.mode, ell);
    let mut warnings = Vec::new();
    if params.mode == Regime::Frobenius {
        hyps.push(Hypothesis::new("good_filtration_a1", HypothesisStatus::Assumed));
    } else {
        hyps.push(Hypothesis::new("grauert_riemenschneider_vanishing", HypothesisStatus::Assumed));
    }
    match theorem {
        Theorem::T33 | Theorem::T71 => {
            hyps.push(Hypothesis::new("condition_i", HypothesisStatus::Assumed));
            hyps.push(Hypothesis::new("condition_ii", HypothesisStatus::Assumed));
        }
        Theorem::T42 | Theorem::T73 => {
            hyps.push(nonshifted_bound(rs, ell, &params.w));
            hyps.push(if params.w.is_identity() {
                Hypothesis::new("condition_a", HypothesisStatus::Satisfied)
            } else {
                Hypothesis::new("condition_a", HypothesisStatus::Unverified)
                    .with_detail(String::from("not decidable from characters; see verify weighteq"))
            });
            hyps.push(Hypothesis::check(
                "condition_b",
                check_condition_b(rs, ell, params.j, &params.w, &params.gamma),
            ));
        }
        Theorem::T51 | Theorem::T74 => {
            let h = rs.coxeter_number();
            hyps.push(Hypothesis::check("ell_gt_h", ell > h).with_detail(format!("h = {h}")));
            let env = tilting_weight_envelope_check(engine, ell, params.j, &params.w, &params.gamma)?;
            let status = match env.verdict {
                EnvelopeVerdict::Dominant => HypothesisStatus::Satisfied,
                EnvelopeVerdict::NotDominant => HypothesisStatus::Violated,
                EnvelopeVerdict::Inconclusive => HypothesisStatus::Unverified,
            };
            hyps.push(Hypothesis::new("tilting_weights_dominant", status));
        }
    }

    // The Frobenius non-shifted statement only has non-zero cohomology at w = e.
    let vanishes = theorem == Theorem::T73 && !params.w.is_identity();
    if vanishes {
        warnings.push(String::from("w is not the identity: every degree vanishes"));
    }
    let table = if vanishes || up_to < own {
        BTreeMap::new()
    } else {
        engine.multiplicity_table_unchecked(params.j, &params.gamma, (up_to - own) / 2)?
    };
    let negatives: Vec<&Weight> = table
        .iter()
        .filter(|(_, p)| p.has_negative_coefficient())
        .map(|(s, _)| s)
        .collect();
    if !vanishes {
        let h = Hypothesis::check("effective_multiplicities", negatives.is_empty());
        hyps.push(if negatives.is_empty() {
            h
        } else {
            let list: Vec<String> = negatives.iter().map(|s| format!("{s}")).collect();
            h.with_detail(format!("negative coefficients at {}", list.join(" ")))
        });
    }
    for h in &hyps {
        if h.status == HypothesisStatus::Violated {
            warnings.push(format!("hypothesis {} is violated", h.name));
        }
    }

    let twist = match params.mode {
        Regime::Quantum => 1,
        Regime::Frobenius => ell,
    };
    let mut dims_cache: BTreeMap<Weight, i64> = BTreeMap::new();
    let mut degrees = Vec::with_capacity(up_to + 1);
    for n in 0..=up_to {
        let k = (n >= own && (n - own) % 2 == 0).then(|| (n - own) / 2);
        let mut decomposition = Decomposition::new();
        let mut dimension = 0i64;
        if let Some(k) = k {
            for (sigma, p) in &table {
                let m = p.coeff(k);
                if m != 0 {
                    decomposition.insert(sigma.clone(), m);
                    let d = match dims_cache.get(sigma) {
                        Some(&d) => d,
                        None => {
                            let d = engine.weyl_dim(sigma)? as i64;
                            dims_cache.insert(sigma.clone(), d);
                            d
                        }
                    };
                    dimension += m * d;
                }
            }
        }
        let twisted = if params.mode == Regime::Frobenius {
            decomposition.iter().map(|(s, m)| (s.scaled(ell), *m)).collect()
        } else {
            Decomposition::new()
        };
        degrees.push(DegreePrediction { n, sym_degree: k, decomposition, dimension, twisted });
    }

    Ok(CohomologyPrediction {
        config: PredictionConfig {
            root_system: rs.spec(),
            theorem,
            mode: params.mode,
            ell,
            j: params.j,
            gamma: params.gamma.clone(),
            w: params.w.one_based_word(),
            t: own,
            up_to,
        },
        hypotheses_ok: none_violated(&hyps),
        hypotheses: hyps,
        warnings,
        parity_offset: own,
        twist,
        degrees,
    })
}
