//! Parallel conformance sweeps over `(type, ℓ, J, w)`.
//!
//! Tasks are generated in a fixed order and results are collected in that
//! order, then sorted by configuration key, so the report does not depend on
//! the number of workers.

use std::collections::BTreeMap;

use clap::ValueEnum;
use cotan_core::charlib::Engine;
use cotan_core::theorems::{
    check_condition_b, tilting_weight_envelope_check, verify_kempf_dominance, verify_linkage_uniqueness,
    verify_weighteq, VerifyConfig,
};
use cotan_core::weyl::{min_coset_reps, DEFAULT_ENUMERATION_CAP};
use cotan_core::{Error, NodeSet, RootSystem, RootSystemSpec, Weight, WeylElement};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::args::SweepSystem;
use crate::render::{word, Report, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Weighteq,
    Kempf,
    Linkage,
    Envelope,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Conformant,
    Nonconformant,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepEntry {
    pub check: Check,
    pub config: VerifyConfig,
    pub outcome: Outcome,
    /// Kempf only: whether condition (b) holds for this γ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition_b: Option<bool>,
    pub examined: u64,
    pub solutions: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub entries: Vec<SweepEntry>,
    pub total: usize,
    pub conformant: usize,
    pub nonconformant: usize,
    pub skipped: usize,
}

impl Report for SweepReport {
    fn table(&self) -> Table {
        let mut t = Table::new(["check", "type", "l", "J", "w", "gamma", "outcome", "b", "examined", "solutions"]);
        for e in &self.entries {
            let c = &e.config;
            t.row(vec![
                format!("{:?}", e.check).to_lowercase(),
                c.root_system.to_string(),
                c.ell.to_string(),
                c.j.to_string(),
                word(&c.w),
                c.gamma.as_ref().map_or("-".into(), |g| g.to_string()),
                format!("{:?}", e.outcome).to_lowercase(),
                e.condition_b.map_or("-".into(), |b| b.to_string()),
                e.examined.to_string(),
                e.solutions.to_string(),
            ]);
        }
        t.note(format!(
            "{} runs: {} conformant, {} nonconformant, {} skipped",
            self.total, self.conformant, self.nonconformant, self.skipped
        ));
        t
    }
}

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub systems: Vec<SweepSystem>,
    pub checks: Vec<Check>,
    /// Restrict to `w = e`.
    pub identity_only: bool,
    pub nu_bound: i64,
    pub cap: i64,
    pub jobs: usize,
}

#[derive(Debug, Clone)]
struct Task {
    check: Check,
    spec: RootSystemSpec,
    ell: i64,
    j: NodeSet,
    w: Vec<usize>,
    gamma: Option<Weight>,
}

/// `{0} ∪ {ω_i : i ∉ J}`.
pub fn sweep_gammas(rank: usize, j: NodeSet) -> Vec<Weight> {
    let mut out = vec![Weight::zero(rank)];
    out.extend((0..rank).filter(|&i| !j.contains(i)).map(|i| Weight::fundamental(rank, i)));
    out
}

fn tasks(opts: &SweepOptions) -> Result<Vec<Task>, Error> {
    let mut out = Vec::new();
    for sys in &opts.systems {
        let rs = RootSystem::build(sys.spec)?;
        let ell = sys.ell.unwrap_or(2 * rs.coxeter_number() + 1);
        let n = rs.rank();
        for j in NodeSet::all_subsets(n) {
            let mut ws: Vec<WeylElement> = if opts.identity_only {
                vec![WeylElement::identity(n)]
            } else {
                min_coset_reps(&rs, j, DEFAULT_ENUMERATION_CAP)?
            };
            ws.sort();
            for w in &ws {
                for &check in &opts.checks {
                    let gammas = match check {
                        Check::Kempf | Check::Envelope => sweep_gammas(n, j).into_iter().map(Some).collect(),
                        _ => vec![None],
                    };
                    for gamma in gammas {
                        out.push(Task { check, spec: sys.spec, ell, j, w: w.one_based_word(), gamma });
                    }
                }
            }
        }
    }
    Ok(out)
}

fn run_task(cache: &mut BTreeMap<RootSystemSpec, Engine>, t: &Task, opts: &SweepOptions) -> Result<SweepEntry, Error> {
    let engine = match cache.entry(t.spec) {
        std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
        std::collections::btree_map::Entry::Vacant(v) => v.insert(Engine::new(t.spec)?),
    };
    let engine = &*engine;
    let rs = engine.root_system();
    let w = WeylElement::from_one_based_word(rs, &t.w)?;
    let config = VerifyConfig {
        root_system: t.spec,
        ell: t.ell,
        j: t.j,
        w: t.w.clone(),
        gamma: t.gamma.clone(),
        nu_bound: (t.check == Check::Linkage).then_some(opts.nu_bound),
    };
    let mk = |conformant: bool, examined: u64, solutions: usize| SweepEntry {
        check: t.check,
        config: config.clone(),
        outcome: if conformant { Outcome::Conformant } else { Outcome::Nonconformant },
        condition_b: None,
        examined,
        solutions,
        note: None,
    };
    let entry = match t.check {
        Check::Weighteq => match verify_weighteq(engine, t.ell, t.j, &w, opts.cap) {
            Ok(r) => mk(r.conformant, r.tuples_examined, r.solutions.len()),
            Err(e @ Error::TooLarge { .. }) => SweepEntry {
                outcome: Outcome::Skipped,
                note: Some(e.to_string()),
                ..mk(false, 0, 0)
            },
            Err(e) => return Err(e),
        },
        Check::Kempf => {
            let gamma = t.gamma.clone().unwrap_or_else(|| Weight::zero(rs.rank()));
            let r = verify_kempf_dominance(engine, t.ell, t.j, &w, &gamma)?;
            SweepEntry {
                condition_b: Some(check_condition_b(rs, t.ell, t.j, &w, &gamma)),
                ..mk(r.conformant, r.weights_checked as u64, r.solutions.len())
            }
        }
        Check::Linkage => {
            let r = verify_linkage_uniqueness(engine, t.ell, t.j, &w, opts.nu_bound)?;
            mk(r.conformant, r.pairs_examined, r.solutions.len())
        }
        Check::Envelope => {
            let gamma = t.gamma.clone().unwrap_or_else(|| Weight::zero(rs.rank()));
            let r = tilting_weight_envelope_check(engine, t.ell, t.j, &w, &gamma)?;
            SweepEntry {
                note: Some(format!("{:?}", r.verdict)),
                ..mk(r.conformant, r.envelope_size as u64, r.solutions.len())
            }
        }
    };
    Ok(entry)
}

fn sort_key(e: &SweepEntry) -> (String, i64, u32, usize, Vec<usize>, Check, Option<Weight>) {
    let c = &e.config;
    (c.root_system.to_string(), c.ell, c.j.bits(), c.w.len(), c.w.clone(), e.check, c.gamma.clone())
}

pub fn run_sweep(opts: &SweepOptions) -> Result<SweepReport, Error> {
    let tasks = tasks(opts)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let results: Vec<Result<SweepEntry, Error>> = pool.install(|| {
        tasks
            .par_iter()
            .map_init(BTreeMap::new, |cache, t| run_task(cache, t, opts))
            .collect()
    });
    let mut entries = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    entries.sort_by_key(sort_key);
    let count = |o: Outcome| entries.iter().filter(|e| e.outcome == o).count();
    Ok(SweepReport {
        total: entries.len(),
        conformant: count(Outcome::Conformant),
        nonconformant: count(Outcome::Nonconformant),
        skipped: count(Outcome::Skipped),
        entries,
    })
}
