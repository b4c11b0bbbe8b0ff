use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::rc::Rc;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::character::{Character, GradedCharacter};
use super::partition::PartitionFunction;
use crate::error::{Error, Result};
use crate::rootsys::{NodeSet, RootSystem, RootSystemSpec, RootVector, Weight};
use crate::weyl::{to_dominant_on, WeylElement, WeylGroup, DEFAULT_ENUMERATION_CAP};

/// Data attached to a Levi subsystem `Φ_J`.
#[derive(Debug)]
pub struct LeviData {
    pub nodes: NodeSet,
    pub group: WeylGroup,
    pub positive_roots: Vec<RootVector>,
    pub nilradical_roots: Vec<RootVector>,
    pub(crate) levi_pf: PartitionFunction,
    pub(crate) nil_pf: PartitionFunction,
}

/// Character computations over one root system, with memo tables.
///
/// Interior mutability makes an engine `!Sync`: parallel sweeps build one
/// per worker.
#[derive(Debug)]
pub struct Engine {
    rs: RootSystem,
    group: WeylGroup,
    cap: u64,
    levis: RefCell<BTreeMap<NodeSet, Rc<LeviData>>>,
    characters: RefCell<BTreeMap<(NodeSet, Weight), Rc<Character>>>,
    pub(crate) sym_cache: RefCell<BTreeMap<NodeSet, (usize, Rc<GradedCharacter>)>>,
}

/// `∏_{α ∈ S} <λ+ρ, α^∨> / <ρ, α^∨>` over the given positive-root indices.
fn dim_product(rs: &RootSystem, lambda: &Weight, indices: impl Iterator<Item = usize>) -> i128 {
    let shifted = lambda + rs.rho();
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for k in indices {
        num *= rs.pairing_with_positive(&shifted, k) as i128;
        den *= rs.pairing_with_positive(rs.rho(), k) as i128;
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
        if g > 1 {
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Weyl dimension formula for dominant λ.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<i128> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(dim_product(rs, lambda, 0..rs.num_positive_roots()))
}

/// Dimension of the irreducible Levi module of `J`-dominant highest weight λ.
pub fn levi_dim(rs: &RootSystem, lambda: &Weight, j: NodeSet) -> Result<i128> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant_on(j) {
        return Err(Error::NotJDominant(lambda.clone()));
    }
    let idx = (0..rs.num_positive_roots()).filter(|&k| rs.positive_roots()[k].supported_on(j));
    Ok(dim_product(rs, lambda, idx))
}

impl Engine {
    pub fn new(spec: RootSystemSpec) -> Result<Self> {
        Self::with_cap(spec, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(spec: RootSystemSpec, cap: u64) -> Result<Self> {
        let rs = RootSystem::build(spec)?;
        let group = WeylGroup::enumerate(&rs, cap)?;
        Ok(Engine {
            rs,
            group,
            cap,
            levis: RefCell::new(BTreeMap::new()),
            characters: RefCell::new(BTreeMap::new()),
            sym_cache: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn full_nodes(&self) -> NodeSet {
        NodeSet::full(self.rs.rank())
    }

    pub fn check_nodes(&self, j: NodeSet) -> Result<()> {
        if j.is_subset(self.full_nodes()) {
            Ok(())
        } else {
            let bad = j.iter().find(|&i| i >= self.rank()).unwrap_or(0);
            Err(Error::IndexOutOfRange { index: bad + 1, rank: self.rank() })
        }
    }

    pub fn levi(&self, j: NodeSet) -> Result<Rc<LeviData>> {
        self.check_nodes(j)?;
        if let Some(d) = self.levis.borrow().get(&j) {
            return Ok(d.clone());
        }
        let group = if j == self.full_nodes() {
            self.group.clone()
        } else {
            WeylGroup::parabolic(&self.rs, j, self.cap)?
        };
        let positive_roots = self.rs.levi_positive_roots(j);
        let nilradical_roots = self.rs.nilradical_roots(j);
        let data = Rc::new(LeviData {
            nodes: j,
            group,
            levi_pf: PartitionFunction::new(positive_roots.clone()),
            nil_pf: PartitionFunction::new(nilradical_roots.clone()),
            positive_roots,
            nilradical_roots,
        });
        self.levis.borrow_mut().insert(j, data.clone());
        Ok(data)
    }

    pub fn weyl_dim(&self, lambda: &Weight) -> Result<i128> {
        weyl_dim(&self.rs, lambda)
    }

    /// `J`-dominant weights μ with `λ − μ ∈ Z_{≥0} Φ_J⁺`, paired with the
    /// simple-root coordinates of `λ − μ`, ordered by depth.
    pub fn dominant_weights_below(&self, lambda: &Weight, j: NodeSet) -> Result<Vec<(Weight, RootVector)>> {
        self.rs.check_weight(lambda)?;
        if !lambda.is_dominant_on(j) {
            return Err(Error::NotJDominant(lambda.clone()));
        }
        let roots = self.rs.levi_positive_roots(j);
        let n = self.rank();
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        seen.insert(lambda.clone());
        let mut out = alloc::vec![(lambda.clone(), RootVector::zero(n))];
        let mut head = 0;
        while head < out.len() {
            let (mu, depth) = out[head].clone();
            head += 1;
            for a in &roots {
                let next = &mu - &self.rs.root_to_weight(a);
                if next.is_dominant_on(j) && seen.insert(next.clone()) {
                    out.push((next, &depth + a));
                }
            }
        }
        out.sort_by(|x, y| x.1.height().cmp(&y.1.height()).then_with(|| y.0.cmp(&x.0)));
        Ok(out)
    }

    /// Multiplicity of μ in the irreducible `L_J`-module of highest weight λ
    /// (`J = Δ` gives `H^0(λ)`), by Kostant's formula.
    pub fn kostant_multiplicity(&self, lambda: &Weight, mu: &Weight, j: NodeSet) -> Result<i64> {
        self.rs.check_weight(lambda)?;
        self.rs.check_weight(mu)?;
        if !lambda.is_dominant_on(j) {
            return Err(Error::NotJDominant(lambda.clone()));
        }
        let levi = self.levi(j)?;
        let lr = lambda + self.rs.rho();
        let mr = mu + self.rs.rho();
        let mut total = 0;
        for x in levi.group.iter() {
            let diff = &x.act(&lr) - &mr;
            if let Some(v) = self.rs.weight_in_root_lattice(&diff) {
                total += x.sign() * levi.levi_pf.count(&v);
            }
        }
        Ok(total)
    }

    /// Character of the irreducible `L_J`-module of `J`-dominant highest
    /// weight λ. For `J = Δ` this is `ch H^0(λ)`.
    pub fn levi_character(&self, lambda: &Weight, j: NodeSet) -> Result<Rc<Character>> {
        self.check_nodes(j)?;
        let key = (j, lambda.clone());
        if let Some(c) = self.characters.borrow().get(&key) {
            return Ok(c.clone());
        }
        let levi = self.levi(j)?;
        let below = self.dominant_weights_below(lambda, j)?;
        let lr = lambda + self.rs.rho();
        // root coordinates of x(λ+ρ) − (λ+ρ) for each x ∈ W_J
        let shifts: Vec<(i64, RootVector)> = levi
            .group
            .iter()
            .map(|x| {
                let d = &x.act(&lr) - &lr;
                (x.sign(), self.rs.weight_in_root_lattice(&d).expect("W_J moves within the root lattice"))
            })
            .collect();
        let mut ch = Character::new();
        for (mu, depth) in &below {
            let mut m = 0;
            for (sgn, s) in &shifts {
                m += sgn * levi.levi_pf.count(&(s + depth));
            }
            if m != 0 {
                for nu in self.levi_orbit(mu, j) {
                    ch.add_term(nu, m);
                }
            }
        }
        let ch = Rc::new(ch);
        self.characters.borrow_mut().insert(key, ch.clone());
        Ok(ch)
    }

    /// `ch H^0(λ)` for dominant λ.
    pub fn weyl_character(&self, lambda: &Weight) -> Result<Rc<Character>> {
        self.rs.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        self.levi_character(lambda, self.full_nodes())
    }

    /// The `W_J`-orbit of a weight, sorted.
    pub fn levi_orbit(&self, mu: &Weight, j: NodeSet) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        seen.insert(mu.clone());
        let mut stack = alloc::vec![mu.clone()];
        while let Some(v) = stack.pop() {
            for i in j.iter() {
                if v.0[i] == 0 {
                    continue;
                }
                let mut u = v.clone();
                self.rs.reflect_weight(i, &mut u);
                if seen.insert(u.clone()) {
                    stack.push(u);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Independent route via Freudenthal's recursion; used to cross-check
    /// [`levi_character`](Self::levi_character).
    pub fn freudenthal_character(&self, lambda: &Weight, j: NodeSet) -> Result<Character> {
        self.check_nodes(j)?;
        let below = self.dominant_weights_below(lambda, j)?;
        let roots = self.rs.levi_positive_roots(j);
        let d = self.rs.symmetrizers();
        let two_rho = self.rs.rho().scaled(2);
        let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
        let lookup = |mult: &BTreeMap<Weight, i64>, nu: &Weight| -> i64 {
            let (_, dom) = to_dominant_on(&self.rs, nu, j);
            mult.get(&dom).copied().unwrap_or(0)
        };
        for (mu, depth) in &below {
            if depth.is_zero() {
                mult.insert(mu.clone(), 1);
                continue;
            }
            // (λ−μ, λ+μ+2ρ) with λ−μ = Σ depth_j α_j
            let sum = &(lambda + mu) + &two_rho;
            let lhs: i64 = (0..self.rank()).map(|i| depth.0[i] * d[i] * sum.0[i]).sum();
            let mut rhs = 0;
            for a in &roots {
                let aw = self.rs.root_to_weight(a);
                let mut nu = mu + &aw;
                let mut rest = depth - a;
                while rest.is_nonnegative() {
                    let m = lookup(&mult, &nu);
                    if m != 0 {
                        rhs += 2 * self.rs.form_root_weight(a, &nu) * m;
                    }
                    nu += &aw;
                    rest -= a;
                }
            }
            if rhs % lhs != 0 {
                return Err(Error::PreconditionFailed(format!(
                    "inexact Freudenthal step at {mu}: {rhs}/{lhs}"
                )));
            }
            mult.insert(mu.clone(), rhs / lhs);
        }
        let mut ch = Character::new();
        for (mu, m) in mult {
            if m != 0 {
                for nu in self.levi_orbit(&mu, j) {
                    ch.add_term(nu, m);
                }
            }
        }
        Ok(ch)
    }

    /// `σ ↦ w` with `w(σ) = σ⁺` dominant, restricted to `W_J`.
    pub fn dominant_on(&self, mu: &Weight, j: NodeSet) -> (WeylElement, Weight) {
        to_dominant_on(&self.rs, mu, j)
    }
}
