use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::rc::Rc;
use alloc::vec::Vec;

use super::character::{Character, GradedCharacter};
use super::engine::Engine;
use super::polynomial::QPolynomial;
use crate::error::{Error, Result};
use crate::rootsys::{NodeSet, RootVector, Weight};
use crate::weyl::dot_regularize;

/// Dominant weight ↦ multiplicity.
pub type Decomposition = BTreeMap<Weight, i64>;

impl Engine {
    /// `Σ_{n ≤ D} ch S^n(u_J^*) q^n`. The weights of `u_J^*` are `Φ⁺ ∖ Φ_J⁺`.
    pub fn sym_graded(&self, j: NodeSet, max_degree: usize) -> Result<Rc<GradedCharacter>> {
        self.check_nodes(j)?;
        if let Some((d, g)) = self.sym_cache.borrow().get(&j) {
            if *d == max_degree {
                return Ok(g.clone());
            }
        }
        let n = self.rank();
        let mut table: BTreeMap<RootVector, QPolynomial> = BTreeMap::new();
        table.insert(RootVector::zero(n), QPolynomial::one());
        for beta in self.root_system().nilradical_roots(j) {
            let mut next: BTreeMap<RootVector, QPolynomial> = BTreeMap::new();
            for (v, p) in &table {
                let lowest = p.coeffs().iter().position(|&c| c != 0).unwrap_or(0);
                let mut cur = v.clone();
                let mut k = 0;
                while lowest + k <= max_degree {
                    let shifted = p.shifted(k).truncated(max_degree);
                    if !shifted.is_zero() {
                        *next.entry(cur.clone()).or_default() += &shifted;
                    }
                    cur += &beta;
                    k += 1;
                }
            }
            table = next;
        }
        let mut g = GradedCharacter::new();
        for (v, p) in table {
            g.add_term(self.root_system().root_to_weight(&v), &p);
        }
        let g = Rc::new(g);
        self.sym_cache.borrow_mut().insert(j, (max_degree, g.clone()));
        Ok(g)
    }

    /// `ch S^n(u_J^*)`.
    pub fn sym_character(&self, j: NodeSet, n: usize) -> Result<Character> {
        Ok(self.sym_graded(j, n)?.degree_part(n))
    }

    /// `Σ_i (−1)^i ch H^i(μ)` via Bott's theorem.
    pub fn bott_euler(&self, mu: &Weight) -> Result<Character> {
        self.root_system().check_weight(mu)?;
        match dot_regularize(self.root_system(), mu) {
            None => Ok(Character::new()),
            Some((w, sigma)) => Ok(self.weyl_character(&sigma)?.scaled(w.sign())),
        }
    }

    /// Signed sum of dominant weights: `Σ_μ m_μ · sgn(w_μ) [w_μ·μ]`.
    pub fn euler_decomposition(&self, c: &Character) -> Decomposition {
        let mut out = Decomposition::new();
        for (mu, &m) in c.iter() {
            if let Some((w, sigma)) = dot_regularize(self.root_system(), mu) {
                let e = out.entry(sigma).or_insert(0);
                *e += m * w.sign();
            }
        }
        out.retain(|_, m| *m != 0);
        out
    }

    /// Euler characteristic of the induced module with the given
    /// (`B`-module) character.
    pub fn euler_induction(&self, c: &Character) -> Result<Character> {
        let mut out = Character::new();
        for (sigma, m) in self.euler_decomposition(c) {
            out.add_scaled(&*self.weyl_character(&sigma)?, m);
        }
        Ok(out)
    }

    /// Writes a W-invariant character as `Σ m_σ ch H^0(σ)`.
    pub fn decompose(&self, c: &Character) -> Result<Decomposition> {
        let rs = self.root_system();
        for (mu, &m) in c.iter() {
            rs.check_weight(mu)?;
            for i in 0..rs.rank() {
                let mut image = mu.clone();
                rs.reflect_weight(i, &mut image);
                if c.get(&image) != m {
                    return Err(Error::NotWInvariant(mu.clone()));
                }
            }
        }
        let mut rest = c.dominant_part();
        let mut out = Decomposition::new();
        while !rest.is_zero() {
            let top = rest
                .weights()
                .max_by(|a, b| rs.scaled_height(a).cmp(&rs.scaled_height(b)).then_with(|| a.cmp(b)))
                .cloned()
                .expect("nonempty");
            let m = rest.get(&top);
            out.insert(top.clone(), m);
            rest.add_scaled(&self.weyl_character(&top)?.dominant_part(), -m);
        }
        Ok(out)
    }

    fn check_gamma(&self, j: NodeSet, gamma: &Weight) -> Result<()> {
        self.root_system().check_weight(gamma)?;
        if !gamma.in_x_pj(j) || !gamma.is_dominant() {
            return Err(Error::PreconditionFailed(format!(
                "γ = {gamma} must be dominant and vanish on J = {j}"
            )));
        }
        Ok(())
    }

    /// `Σ_w sgn(w) P_q(w(σ+ρ) − ρ − γ; Φ⁺∖Φ_J⁺)` without sign checks.
    pub fn graded_multiplicity_unchecked(&self, j: NodeSet, gamma: &Weight, sigma: &Weight) -> Result<QPolynomial> {
        self.check_gamma(j, gamma)?;
        self.root_system().check_weight(sigma)?;
        if !sigma.is_dominant() {
            return Err(Error::NotDominant(sigma.clone()));
        }
        let rs = self.root_system();
        let levi = self.levi(j)?;
        let sr = sigma + rs.rho();
        let target = rs.rho() + gamma;
        let mut acc = QPolynomial::zero();
        for w in self.group().iter() {
            let diff = &w.act(&sr) - &target;
            if let Some(v) = rs.weight_in_root_lattice(&diff) {
                if v.is_nonnegative() {
                    acc.add_scaled_shifted(&levi.nil_pf.q_count(&v), w.sign(), 0);
                }
            }
        }
        Ok(acc)
    }

    /// Graded multiplicity of `H^0(σ)` in `ind_{P_J}^G (S(u_J^*) ⊗ γ)`.
    ///
    /// A negative coefficient means higher cohomology does not vanish for
    /// this configuration; it is reported as `AssumptionViolated`.
    pub fn graded_multiplicity(&self, j: NodeSet, gamma: &Weight, sigma: &Weight) -> Result<QPolynomial> {
        let p = self.graded_multiplicity_unchecked(j, gamma, sigma)?;
        if p.has_negative_coefficient() {
            return Err(Error::AssumptionViolated { sigma: sigma.clone(), poly: p });
        }
        Ok(p)
    }

    /// Dominant σ that can occur in degrees `≤ max_degree`.
    pub fn candidate_weights(&self, j: NodeSet, gamma: &Weight, max_degree: usize) -> Result<BTreeSet<Weight>> {
        self.check_gamma(j, gamma)?;
        let sym = self.sym_graded(j, max_degree)?;
        let mut out = BTreeSet::new();
        for (mu, _) in sym.iter() {
            if let Some((_, sigma)) = dot_regularize(self.root_system(), &(mu + gamma)) {
                out.insert(sigma);
            }
        }
        Ok(out)
    }

    /// `σ ↦` graded multiplicity truncated to degree `max_degree`, for all
    /// candidates with a non-zero truncation.
    pub fn multiplicity_table(
        &self,
        j: NodeSet,
        gamma: &Weight,
        max_degree: usize,
    ) -> Result<BTreeMap<Weight, QPolynomial>> {
        let table = self.multiplicity_table_unchecked(j, gamma, max_degree)?;
        if let Some((sigma, p)) = table.iter().find(|(_, p)| p.has_negative_coefficient()) {
            return Err(Error::AssumptionViolated { sigma: sigma.clone(), poly: p.clone() });
        }
        Ok(table)
    }

    /// As [`multiplicity_table`](Self::multiplicity_table), keeping negative
    /// coefficients instead of failing.
    pub fn multiplicity_table_unchecked(
        &self,
        j: NodeSet,
        gamma: &Weight,
        max_degree: usize,
    ) -> Result<BTreeMap<Weight, QPolynomial>> {
        let mut out = BTreeMap::new();
        for sigma in self.candidate_weights(j, gamma, max_degree)? {
            let p = self.graded_multiplicity_unchecked(j, gamma, &sigma)?.truncated(max_degree);
            if !p.is_zero() {
                out.insert(sigma, p);
            }
        }
        Ok(out)
    }

    /// Dimensions of the graded pieces in degrees `0..=max_degree`.
    pub fn poincare_series(&self, j: NodeSet, gamma: &Weight, max_degree: usize) -> Result<Vec<i64>> {
        let mut dims = alloc::vec![0i64; max_degree + 1];
        for (sigma, p) in self.multiplicity_table(j, gamma, max_degree)? {
            let d = self.weyl_dim(&sigma)? as i64;
            for (n, slot) in dims.iter_mut().enumerate() {
                *slot += d * p.coeff(n);
            }
        }
        Ok(dims)
    }

    /// Euler characteristic in a single degree: `Σ_μ m_μ χ(μ+γ)` over the
    /// weights of `S^n(u_J^*)`, as a decomposition.
    pub fn euler_degree_decomposition(&self, j: NodeSet, gamma: &Weight, n: usize) -> Result<Decomposition> {
        self.root_system().check_weight(gamma)?;
        let sym = self.sym_character(j, n)?;
        let mut shifted = Character::new();
        shifted.add_scaled_shifted(&sym, 1, gamma);
        Ok(self.euler_decomposition(&shifted))
    }
}

/// Frobenius twist: every weight multiplied by `m ≥ 1`.
pub fn twist_character(c: &Character, m: i64) -> Result<Character> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("twist factor must be positive, got {m}")));
    }
    Ok(c.scale_weights(m))
}

/// Total dimension `Σ m_σ dim H^0(σ)` of a decomposition.
pub fn decomposition_dim(engine: &Engine, d: &Decomposition) -> Result<i128> {
    let mut total = 0;
    for (sigma, m) in d {
        total += *m as i128 * engine.weyl_dim(sigma)?;
    }
    Ok(total)
}

/// Entries of a decomposition as `[(σ, m)]`.
pub fn decomposition_entries(d: &Decomposition) -> Vec<(Weight, i64)> {
    d.iter().map(|(w, m)| (w.clone(), *m)).collect()
}
