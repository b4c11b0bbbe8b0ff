//! Acceptance criteria, one line each.
//!
//! Each criterion is checked against an oracle written here: multiset
//! enumeration for symmetric powers and partition functions, naive
//! dot-regularization for Euler characteristics, box enumeration for the
//! weight equation. Exit status is non-zero if any criterion outside
//! `KNOWN_FAILURES` fails, or if a known failure unexpectedly passes.

use std::collections::{BTreeMap, BTreeSet};
use std::process::Command;
use std::time::{Duration, Instant};

use cotan::sweep::{run_sweep, Check, Outcome, SweepOptions, SweepReport};
use cotan::args::SweepSystem;
use cotan_core::charlib::{q_partition, Engine, QPolynomial};
use cotan_core::orbits::{richardson_orbit, Partition};
use cotan_core::theorems::{
    check_condition_b, epsilon_j, predicted_cohomology, verify_kempf_dominance, verify_weighteq,
    CohomologyPrediction, RegimeParams, Regime, Theorem,
};
use cotan_core::weyl::{longest_element, min_coset_reps, DEFAULT_ENUMERATION_CAP};
use cotan_core::{NodeSet, RootSystem, RootSystemSpec, RootVector, Weight, WeylElement};

/// Criterion 6 fails: the weight equation has non-trivial solutions for
/// B2 and G2 at J = {1} and J = {2}.
const KNOWN_FAILURES: &[usize] = &[6];

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

/// ` (first: ..)` when anything went wrong.
fn first<T: std::fmt::Debug>(bad: &[T]) -> String {
    bad.first().map_or(String::new(), |b| format!(" (first: {b:?})"))
}

fn spec(label: &str) -> RootSystemSpec {
    RootSystemSpec::parse(label).unwrap()
}

fn engine(label: &str) -> Engine {
    Engine::new(spec(label)).unwrap()
}

fn cotan(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cotan")).args(args).output().expect("run cotan");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

// ---------------------------------------------------------------------------
// Oracles.

/// `λ ↦ s_i λ` straight from the Cartan matrix.
fn reflect(a: &[Vec<i64>], i: usize, v: &mut [i64]) {
    let c = v[i];
    for (j, x) in v.iter_mut().enumerate() {
        *x -= c * a[j][i];
    }
}

/// Sign and dominant representative for the dot action, or `None` when
/// `μ + ρ` is singular.
fn naive_regularize(a: &[Vec<i64>], mu: &[i64]) -> Option<(i64, Vec<i64>)> {
    let mut v: Vec<i64> = mu.iter().map(|x| x + 1).collect();
    let mut sign = 1;
    loop {
        if v.contains(&0) {
            return None;
        }
        match v.iter().position(|&x| x < 0) {
            None => return Some((sign, v.iter().map(|x| x - 1).collect())),
            Some(i) => {
                reflect(a, i, &mut v);
                sign = -sign;
            }
        }
    }
}

/// Root-lattice vector to fundamental coordinates.
fn to_weight(a: &[Vec<i64>], beta: &[i64]) -> Vec<i64> {
    (0..a.len()).map(|j| (0..a.len()).map(|i| beta[i] * a[j][i]).sum()).collect()
}

/// Weights of `S^n` of the span of `roots`, by listing multisets.
fn multiset_character(roots: &[RootVector], rank: usize, n: usize) -> BTreeMap<Vec<i64>, i64> {
    fn go(roots: &[RootVector], start: usize, left: usize, acc: &mut Vec<i64>, out: &mut BTreeMap<Vec<i64>, i64>) {
        if left == 0 {
            *out.entry(acc.clone()).or_insert(0) += 1;
            return;
        }
        for k in start..roots.len() {
            for (x, r) in acc.iter_mut().zip(&roots[k].0) {
                *x += r;
            }
            go(roots, k, left - 1, acc, out);
            for (x, r) in acc.iter_mut().zip(&roots[k].0) {
                *x -= r;
            }
        }
    }
    let mut out = BTreeMap::new();
    if roots.is_empty() {
        if n == 0 {
            out.insert(vec![0; rank], 1);
        }
        return out;
    }
    go(roots, 0, n, &mut vec![0; rank], &mut out);
    out
}

/// `Σ_μ m_μ χ(μ + γ)` over the weights of the degree-`n` symmetric power, as
/// `σ ↦ multiplicity`.
fn naive_euler(rs: &RootSystem, j: NodeSet, gamma: &[i64], n: usize) -> BTreeMap<Vec<i64>, i64> {
    let a = rs.cartan();
    let mut out = BTreeMap::new();
    for (beta, m) in multiset_character(&rs.nilradical_roots(j), rs.rank(), n) {
        let mu: Vec<i64> = to_weight(a, &beta).iter().zip(gamma).map(|(x, g)| x + g).collect();
        if let Some((s, sigma)) = naive_regularize(a, &mu) {
            *out.entry(sigma).or_insert(0) += s * m;
        }
    }
    out.retain(|_, m| *m != 0);
    out
}

fn decomposition_as_vecs(d: &BTreeMap<Weight, i64>) -> BTreeMap<Vec<i64>, i64> {
    d.iter().map(|(w, m)| (w.0.clone(), *m)).collect()
}

/// `P_q(μ)` for every μ of height `≤ max_height`, by listing multisets.
fn multiset_partitions(roots: &[RootVector], rank: usize, max_height: i64) -> BTreeMap<Vec<i64>, Vec<i64>> {
    fn go(
        roots: &[RootVector],
        k: usize,
        budget: i64,
        parts: usize,
        acc: &mut Vec<i64>,
        out: &mut BTreeMap<Vec<i64>, Vec<i64>>,
    ) {
        if k == roots.len() {
            let e = out.entry(acc.clone()).or_default();
            if e.len() <= parts {
                e.resize(parts + 1, 0);
            }
            e[parts] += 1;
            return;
        }
        let h = roots[k].height();
        let mut c = 0;
        while c * h <= budget {
            go(roots, k + 1, budget - c * h, parts + c as usize, acc, out);
            for (x, r) in acc.iter_mut().zip(&roots[k].0) {
                *x += r;
            }
            c += 1;
        }
        for (x, r) in acc.iter_mut().zip(&roots[k].0) {
            *x -= c * r;
        }
    }
    let mut out = BTreeMap::new();
    go(roots, 0, max_height, 0, &mut vec![0; rank], &mut out);
    out
}

fn box_points(rank: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p| (lo..=hi).map(move |c| [p.clone(), vec![c]].concat()))
            .collect();
    }
    out
}

const RANK3_TYPES: [&str; 8] = ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"];

// ---------------------------------------------------------------------------
// Criteria.

fn c1() -> Verdict {
    let t = Instant::now();
    let (code, out) = cotan(&[
        "--format", "json", "predict", "--thm", "4.2", "--type", "A1", "--l", "5", "--J", "", "--gamma", "0",
        "--upto", "10",
    ]);
    let elapsed = t.elapsed();
    if code != 0 {
        return verdict(false, format!("exit code {code}"));
    }
    let pred: CohomologyPrediction = serde_json::from_str(&out).unwrap();
    let expected: Vec<i64> = (0..=10).map(|n| if n % 2 == 0 { n + 1 } else { 0 }).collect();
    let ok = pred.dimensions() == expected && elapsed < Duration::from_secs(1);
    verdict(ok, format!("dims {:?}, {:.2?}", pred.dimensions(), elapsed))
}

fn c2() -> Verdict {
    let t = Instant::now();
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for label in ["A2", "B2", "G2"] {
        let e = engine(label);
        let rs = e.root_system();
        let n = rs.rank();
        for j in NodeSet::all_subsets(n) {
            let mut gammas = vec![Weight::zero(n)];
            gammas.extend((0..n).filter(|&i| !j.contains(i)).map(|i| Weight::fundamental(n, i)));
            for gamma in gammas {
                let per_degree: Vec<BTreeMap<Vec<i64>, i64>> =
                    (0..=6).map(|d| naive_euler(rs, j, &gamma.0, d)).collect();
                let mut sigmas: BTreeSet<Vec<i64>> = per_degree.iter().flat_map(|m| m.keys().cloned()).collect();
                sigmas.extend(e.candidate_weights(j, &gamma, 6).unwrap().into_iter().map(|w| w.0));
                for sigma in sigmas {
                    let sw = Weight(sigma.clone());
                    let p = e.graded_multiplicity_unchecked(j, &gamma, &sw).unwrap();
                    for (d, m) in per_degree.iter().enumerate() {
                        checked += 1;
                        let route2 = m.get(&sigma).copied().unwrap_or(0);
                        let lib = e.euler_degree_decomposition(j, &gamma, d).unwrap();
                        let lib2 = lib.get(&sw).copied().unwrap_or(0);
                        if p.coeff(d) != route2 || lib2 != route2 {
                            bad.push(format!("{label} J={j} γ={gamma} σ={sw} n={d}"));
                        }
                    }
                }
            }
        }
    }
    let elapsed = t.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(60);
    verdict(ok, format!("{checked} (σ, n) pairs, {} mismatches{}, {:.2?}", bad.len(), first(&bad), elapsed))
}

fn c3() -> Verdict {
    let mut parts = Vec::new();
    let mut ok = true;
    for (label, expected) in [("A2", vec![0, 1, 1]), ("B2", vec![0, 1, 0, 1])] {
        let e = engine(label);
        let rs = e.root_system();
        let theta = rs.root_to_weight(rs.highest_root());
        let zero = Weight::zero(rs.rank());
        let p = e.graded_multiplicity(NodeSet::empty(), &zero, &theta).unwrap();
        let brute: Vec<i64> = (0..=6)
            .map(|d| naive_euler(rs, NodeSet::empty(), &zero.0, d).get(&theta.0).copied().unwrap_or(0))
            .collect();
        let brute = QPolynomial::from_coeffs(brute);
        let want = QPolynomial::from_coeffs(expected);
        ok &= p == want && brute == want;
        parts.push(format!("{label}: {p} / {brute}"));
    }
    verdict(ok, parts.join(", "))
}

fn c4() -> Verdict {
    let t = Instant::now();
    let mut count = 0;
    let mut bad = Vec::new();
    for label in RANK3_TYPES {
        let e = engine(label);
        let rs = e.root_system();
        let n = rs.rank();
        let k0 = rs.positive_root_index(rs.highest_short_root()).unwrap();
        for p in box_points(n, 0, 12) {
            let lambda = Weight(p);
            let shifted = &lambda + rs.rho();
            if rs.pairing_with_positive(&shifted, k0) > 12 {
                continue;
            }
            count += 1;
            let kostant = e.weyl_character(&lambda).unwrap();
            let freud = e.freudenthal_character(&lambda, e.full_nodes()).unwrap();
            let mut num: i128 = 1;
            let mut den: i128 = 1;
            for k in 0..rs.num_positive_roots() {
                num *= rs.pairing_with_positive(&shifted, k) as i128;
                den *= rs.pairing_with_positive(rs.rho(), k) as i128;
            }
            let dim = num / den;
            let lib_dim = e.weyl_dim(&lambda).unwrap();
            if *kostant != freud || kostant.mass() as i128 != dim || lib_dim != dim || num % den != 0 {
                bad.push(format!("{label} {lambda}"));
            }
        }
    }
    let elapsed = t.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(120);
    verdict(ok, format!("{count} highest weights, {} mismatches{}, {:.2?}", bad.len(), first(&bad), elapsed))
}

fn c5() -> Verdict {
    let mut count = 0;
    let mut bad = Vec::new();
    for label in RANK3_TYPES {
        let rs = RootSystem::build(spec(label)).unwrap();
        let n = rs.rank();
        for j in NodeSet::all_subsets(n) {
            let roots = rs.nilradical_roots(j);
            let brute = multiset_partitions(&roots, n, 10);
            for p in box_points(n, 0, 10) {
                if p.iter().sum::<i64>() > 10 {
                    continue;
                }
                count += 1;
                let want = QPolynomial::from_coeffs(brute.get(&p).cloned().unwrap_or_default());
                if q_partition(&RootVector(p.clone()), &roots) != want {
                    bad.push(format!("{label} J={j} μ={p:?}"));
                }
            }
        }
    }
    verdict(bad.is_empty(), format!("{count} (J, μ) pairs, {} mismatches{}", bad.len(), first(&bad)))
}

fn criterion6_sweep(identity_only: bool, systems: &[(&str, Option<i64>)], checks: Vec<Check>) -> SweepReport {
    let opts = SweepOptions {
        systems: systems.iter().map(|(l, ell)| SweepSystem { spec: spec(l), ell: *ell }).collect(),
        checks,
        identity_only,
        nu_bound: 3,
        cap: cotan_core::theorems::DEFAULT_MODULE_CAP,
        jobs: 4,
    };
    run_sweep(&opts).unwrap()
}

/// Solutions of the weight equation with ν in a box, straight from
/// Freudenthal characters.
type Solution = (Vec<usize>, Weight, Weight, Weight);

fn box_weighteq(e: &Engine, ell: i64, j: NodeSet, w: &WeylElement, b: i64) -> BTreeSet<Solution> {
    let rs = e.root_system();
    let n = rs.rank();
    let zero = Weight::zero(n);
    let eps = epsilon_j(n, ell, j);
    let top = e.freudenthal_character(&eps, e.full_nodes()).unwrap();
    let levi = e.freudenthal_character(&w.dot(&zero), j).unwrap();
    let mut out = BTreeSet::new();
    for y in min_coset_reps(rs, j, DEFAULT_ENUMERATION_CAP).unwrap() {
        let y0 = y.dot(&zero);
        for nu in box_points(n, -b, b) {
            let nu = Weight(nu);
            if !nu.is_dominant_on(j) {
                continue;
            }
            let lhs = &eps + &nu.scaled(ell);
            for (sigma, _) in levi.iter() {
                let mu = &(&lhs - &y0) - sigma;
                if top.get(&mu) > 0 {
                    out.insert((y.one_based_word(), nu.clone(), mu, sigma.clone()));
                }
            }
        }
    }
    out
}

fn weighteq_oracle_agrees() -> Result<usize, String> {
    let mut n = 0;
    for (label, ell) in [("A2", 7), ("B2", 11), ("B2", 9), ("A2", 3)] {
        let e = engine(label);
        let rs = e.root_system();
        for j in NodeSet::all_subsets(rs.rank()) {
            for w in min_coset_reps(rs, j, DEFAULT_ENUMERATION_CAP).unwrap() {
                let r = match verify_weighteq(&e, ell, j, &w, 100_000) {
                    Ok(r) => r,
                    Err(_) => continue,
                };
                let b = 3;
                let lib: BTreeSet<_> = r
                    .solutions
                    .iter()
                    .filter(|s| s.nu.0.iter().all(|c| c.abs() <= b))
                    .map(|s| (s.y.clone(), s.nu.clone(), s.mu.clone(), s.sigma.clone()))
                    .collect();
                if lib != box_weighteq(&e, ell, j, &w, b) {
                    return Err(format!("{label} ℓ={ell} J={j} w={:?}", w.one_based_word()));
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

fn c6() -> Verdict {
    let t = Instant::now();
    let oracle = weighteq_oracle_agrees();
    let a = criterion6_sweep(true, &[("A2", Some(7)), ("B2", Some(11)), ("G2", Some(13))], vec![Check::Weighteq]);
    let b = criterion6_sweep(false, &[("A2", None), ("B2", None), ("G2", None)], vec![Check::Weighteq]);
    let elapsed = t.elapsed();
    let mut failing = Vec::new();
    let mut skipped = 0;
    for e in a.entries.iter().chain(&b.entries) {
        match e.outcome {
            Outcome::Nonconformant => failing.push(format!(
                "{} ℓ={} J={} w={:?}",
                e.config.root_system, e.config.ell, e.config.j, e.config.w
            )),
            Outcome::Skipped => skipped += 1,
            Outcome::Conformant => {}
        }
    }
    let total = a.total + b.total;
    let ok = failing.is_empty() && oracle.is_ok() && elapsed < Duration::from_secs(600);
    let oracle_note = match &oracle {
        Ok(n) => format!("box oracle agrees on {n} configurations"),
        Err(s) => format!("box oracle DISAGREES at {s}"),
    };
    verdict(
        ok,
        format!(
            "{total} runs, {} nonconformant (first: {}), {skipped} skipped as too large; {oracle_note}; {:.2?}",
            failing.len(),
            failing.first().map_or("-", String::as_str),
            elapsed
        ),
    )
}

fn c7() -> Verdict {
    let mut with_b = 0;
    let mut bad = Vec::new();
    let configs: Vec<(&str, Option<i64>, bool)> = vec![
        ("A2", Some(7), true),
        ("B2", Some(11), true),
        ("G2", Some(13), true),
        ("A2", None, false),
        ("B2", None, false),
        ("G2", None, false),
    ];
    for (label, ell, identity_only) in configs {
        let e = engine(label);
        let rs = e.root_system();
        let n = rs.rank();
        let ell = ell.unwrap_or(2 * rs.coxeter_number() + 1);
        for j in NodeSet::all_subsets(n) {
            let ws = if identity_only {
                vec![WeylElement::identity(n)]
            } else {
                min_coset_reps(rs, j, DEFAULT_ENUMERATION_CAP).unwrap()
            };
            let mut gammas = vec![Weight::zero(n)];
            gammas.extend((0..n).filter(|&i| !j.contains(i)).map(|i| Weight::fundamental(n, i)));
            for w in &ws {
                for gamma in &gammas {
                    if !check_condition_b(rs, ell, j, w, gamma) {
                        continue;
                    }
                    with_b += 1;
                    let r = verify_kempf_dominance(&e, ell, j, w, gamma).unwrap();
                    let w0j = longest_element(rs, j);
                    let top = w0j.act(&w.dot(&Weight::zero(n))).scaled(-1);
                    let levi = e.freudenthal_character(&top, j).unwrap();
                    let eps = epsilon_j(n, ell, j);
                    let oracle = levi
                        .weights()
                        .filter(|mu| !(&(&eps + mu) + &gamma.scaled(ell)).is_dominant())
                        .count();
                    if !r.conformant || !r.solutions.is_empty() || oracle != 0 {
                        bad.push(format!("{label} ℓ={ell} J={j} w={:?} γ={gamma}", w.one_based_word()));
                    }
                }
            }
        }
    }
    verdict(bad.is_empty(), format!("{with_b} configurations with condition (b), {} violations{}", bad.len(), first(&bad)))
}

fn c8() -> Verdict {
    let t = Instant::now();
    let r = criterion6_sweep(false, &[("A2", None), ("B2", None)], vec![Check::Linkage]);
    let elapsed = t.elapsed();
    let ok = r.nonconformant == 0 && r.skipped == 0 && elapsed < Duration::from_secs(120);
    verdict(ok, format!("{} runs, {} nonconformant, {:.2?}", r.total, r.nonconformant, elapsed))
}

fn c9() -> Verdict {
    let e = engine("A2");
    let rs = e.root_system();
    let mut count = 0;
    let mut bad = Vec::new();
    for w in e.group().iter() {
        for gamma in [Weight::zero(2), rs.rho().clone()] {
            let params = RegimeParams::new(rs, Regime::Quantum, 7, NodeSet::empty(), gamma.clone(), w.clone()).unwrap();
            let pred = predicted_cohomology(&e, Theorem::T51, &params, None, 8).unwrap();
            for d in &pred.degrees {
                count += 1;
                let expected = if d.n >= w.length() && (d.n - w.length()) % 2 == 0 {
                    naive_euler(rs, NodeSet::empty(), &gamma.0, (d.n - w.length()) / 2)
                } else {
                    BTreeMap::new()
                };
                if decomposition_as_vecs(&d.decomposition) != expected {
                    bad.push(format!("w={:?} γ={gamma} n={}", w.one_based_word(), d.n));
                }
            }
        }
    }
    verdict(bad.is_empty(), format!("{count} (w, γ, n) triples, {} mismatches{}", bad.len(), first(&bad)))
}

/// Jordan type of the Richardson orbit by counting, not by transposing.
fn naive_transpose(p: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let mut k = 1;
    loop {
        let c = p.iter().filter(|&&x| x >= k).count();
        if c == 0 {
            return out;
        }
        out.push(c);
        k += 1;
    }
}

fn c10() -> Verdict {
    let mut count = 0;
    let mut bad = Vec::new();
    for n in 1..=6usize {
        for j in NodeSet::all_subsets(n - 1) {
            count += 1;
            // Blocks of consecutive indices joined by the nodes in J.
            let mut block = vec![0usize; n];
            for i in 1..n {
                block[i] = if j.contains(i - 1) { block[i - 1] } else { block[i - 1] + 1 };
            }
            let nil = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| block[a] != block[b]).count();
            let levi = n * (n - 1) / 2 - nil;
            let o = richardson_orbit(j, n).unwrap();
            let lambda_dim = n * n - naive_transpose(o.lambda.parts()).iter().map(|c| c * c).sum::<usize>();
            let sigma: Partition = o.sigma.clone();
            let ok = o.dim == 2 * nil
                && lambda_dim == o.dim
                && sigma.sum_of_squares() == n + 2 * levi
                && o.lambda.parts() == naive_transpose(sigma.parts()).as_slice();
            if !ok {
                bad.push(format!("n={n} J={j}"));
            }
        }
    }
    verdict(bad.is_empty(), format!("{count} (n, J) pairs, {} mismatches{}", bad.len(), first(&bad)))
}

fn c11() -> Verdict {
    let commands: Vec<Vec<&str>> = vec![
        vec!["roots", "--type", "B3"],
        vec!["weyl", "--type", "G2"],
        vec!["coset", "--type", "C3", "--J", "1,2"],
        vec!["kostant", "--type", "B3", "--mu", "2,3,4"],
        vec!["character", "--type", "G2", "--lambda", "2,1"],
        vec!["induce", "--type", "B2", "--J", "1", "--gamma", "0,1", "--upto", "4"],
        vec!["multiplicity", "--type", "A3", "--J", "2", "--gamma", "0", "--upto", "4"],
        vec!["series", "--type", "G2", "--upto", "5"],
        vec!["predict", "--thm", "5.1", "--type", "B2", "--l", "9", "--w", "2,1", "--upto", "8"],
        vec!["verify", "weighteq", "--type", "A2", "--l", "3", "--J", "1"],
        vec!["orbit", "--n", "5", "--J", "1,3,4"],
    ];
    let mut bad = Vec::new();
    for c in &commands {
        let mut args = vec!["--format", "json"];
        args.extend(c);
        let runs: Vec<(i32, String)> = (0..3).map(|_| cotan(&args)).collect();
        if runs.iter().any(|r| r.0 != 0 || r.1 != runs[0].1) {
            bad.push(c.join(" "));
        }
    }
    let sweep = |jobs: &str| {
        cotan(&[
            "--format", "json", "verify", "sweep", "--systems", "A2,B2:11,G2", "--checks", "weighteq,kempf,linkage,envelope",
            "--jobs", jobs,
        ])
    };
    let base = sweep("1");
    let mut sweeps = 1;
    for jobs in ["1", "1", "4", "8"] {
        sweeps += 1;
        let r = sweep(jobs);
        if r.0 != 0 || r.1 != base.1 {
            bad.push(format!("sweep --jobs {jobs}"));
        }
    }
    verdict(
        bad.is_empty() && base.0 == 0,
        format!("{} commands x3, {sweeps} sweeps over 1/4/8 workers, {} differences{}", commands.len(), bad.len(), first(&bad)),
    )
}

fn main() {
    let criteria: Vec<(usize, &str, fn() -> Verdict)> = vec![
        (1, "A1 nilpotent cone dimensions (T4.2, degree <= 10)", c1),
        (2, "dual-route graded multiplicities, A2/B2/G2", c2),
        (3, "generalized exponents of the adjoint representation", c3),
        (4, "Kostant = Freudenthal, mass = Weyl dimension", c4),
        (5, "q-partition function vs multiset enumeration", c5),
        (6, "weight equation has only the trivial solution", c6),
        (7, "Kempf dominance under condition (b)", c7),
        (8, "linkage uniqueness, A2/B2, nu bound 3", c8),
        (9, "shifted prediction at J = {} vs direct induction, A2", c9),
        (10, "type A Richardson orbit dictionary, n <= 6", c10),
        (11, "deterministic JSON across runs and worker counts", c11),
    ];
    let mut unexpected = Vec::new();
    for (id, name, f) in criteria {
        let v = f();
        let known = KNOWN_FAILURES.contains(&id);
        let tag = match (v.pass, known) {
            (true, false) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
            (true, true) => "PASS (expected failure)",
        };
        println!("criterion {id:>2}: {tag:<12} {name}: {}", v.detail);
        if v.pass == known {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
