//! Weyl group elements, enumeration, parabolic data and the dot action.
//!
//! An element is identified by its action matrix on fundamental-weight
//! coordinates. Its word is the canonical reduced word obtained by peeling
//! off the smallest left descent, so two words for the same element always
//! produce identical `WeylElement`s.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::rootsys::{Family, NodeSet, RootSystem, RootSystemSpec, RootVector, Weight};

/// Default cap on the number of group elements enumerated.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

#[derive(Debug, Clone)]
pub struct WeylElement {
    word: Vec<usize>,
    rank: usize,
    /// Row-major `rank × rank` action on fundamental-weight coordinates.
    matrix: Vec<i64>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by length, then by canonical word.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.matrix.cmp(&other.matrix))
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        WeylElement {
            word: Vec::new(),
            rank,
            matrix,
        }
    }

    /// Element for an arbitrary (not necessarily reduced) word of 0-based
    /// simple indices; the stored word is the canonical reduced one.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let n = rs.rank();
        if let Some(&bad) = word.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad + 1, rank: n });
        }
        let mut image = rs.rho().clone();
        for &i in word.iter().rev() {
            rs.reflect_weight(i, &mut image);
        }
        Ok(Self::from_rho_image(rs, image))
    }

    /// Same as [`from_word`](Self::from_word) with 1-based indices.
    pub fn from_one_based_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let n = rs.rank();
        let mut zero_based = Vec::with_capacity(word.len());
        for &i in word {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, rank: n });
            }
            zero_based.push(i - 1);
        }
        Self::from_word(rs, &zero_based)
    }

    /// Recovers `w` from `w(ρ)`.
    pub(crate) fn from_rho_image(rs: &RootSystem, image: Weight) -> Self {
        let n = rs.rank();
        let mut cur = image;
        let mut word = Vec::new();
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            word.push(i);
            rs.reflect_weight(i, &mut cur);
        }
        let mut w = WeylElement::identity(n);
        for &i in &word {
            w.right_multiply_simple(rs, i);
        }
        w.word = word;
        w
    }

    fn right_multiply_simple(&mut self, rs: &RootSystem, i: usize) {
        let n = self.rank;
        let cartan = rs.cartan();
        for r in 0..n {
            let s: i64 = (0..n).map(|k| self.matrix[r * n + k] * cartan[k][i]).sum();
            self.matrix[r * n + i] -= s;
        }
        self.word.push(i);
    }

    /// Reduced word, 0-based simple indices; `w = s_{word[0]} s_{word[1]} ⋯`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn one_based_word(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn act(&self, lambda: &Weight) -> Weight {
        let n = self.rank;
        Weight(
            (0..n)
                .map(|r| (0..n).map(|c| self.matrix[r * n + c] * lambda.0[c]).sum())
                .collect(),
        )
    }

    /// `w·λ = w(λ+ρ) − ρ`.
    pub fn dot(&self, lambda: &Weight) -> Weight {
        let shifted = Weight(lambda.0.iter().map(|c| c + 1).collect());
        let mut out = self.act(&shifted);
        for c in &mut out.0 {
            *c -= 1;
        }
        out
    }

    /// Action on a root-lattice vector, by successive simple reflections.
    pub fn act_root(&self, rs: &RootSystem, beta: &RootVector) -> RootVector {
        let mut v = beta.clone();
        for &i in self.word.iter().rev() {
            rs.reflect_root(i, &mut v);
        }
        v
    }

    pub fn rho_image(&self) -> Weight {
        self.act(&Weight(vec![1; self.rank]))
    }

    pub fn sign(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The product `self · other`.
    pub fn compose(&self, rs: &RootSystem, other: &WeylElement) -> WeylElement {
        WeylElement::from_rho_image(rs, self.act(&other.rho_image()))
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        WeylElement::from_word(rs, &rev).expect("indices already validated")
    }

    /// `Φ⁺(w) = {α ∈ Φ⁺ : w⁻¹(α) ∈ Φ⁻}`, in default root order.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<RootVector> {
        let image = self.rho_image();
        rs.positive_roots()
            .iter()
            .filter(|a| rs.form_root_weight(a, &image) < 0)
            .cloned()
            .collect()
    }

    /// Membership in `^J W` (no left descent in `j`).
    pub fn is_min_coset_rep(&self, j: NodeSet) -> bool {
        let image = self.rho_image();
        j.iter().all(|i| image.0[i] > 0)
    }

    /// Membership in `W_J`.
    pub fn in_parabolic(&self, j: NodeSet) -> bool {
        self.word.iter().all(|&i| j.contains(i))
    }
}

/// Order of the full Weyl group of an irreducible type.
pub fn group_order(spec: RootSystemSpec) -> u64 {
    let n = spec.rank as u64;
    let fact = |k: u64| (1..=k).product::<u64>();
    match spec.family {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u64 << n) * fact(n),
        Family::D => (1u64 << (n - 1)) * fact(n),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}

/// A frozen table of the elements of `W_J` (or `W` when `J = Δ`), sorted
/// by length and then canonical word.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    nodes: NodeSet,
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn enumerate(rs: &RootSystem, cap: u64) -> Result<Self> {
        let order = group_order(rs.spec());
        if order > cap {
            return Err(Error::GroupTooLarge { order, cap });
        }
        Self::parabolic(rs, NodeSet::full(rs.rank()), cap)
    }

    /// The subgroup generated by the simple reflections in `j`.
    pub fn parabolic(rs: &RootSystem, j: NodeSet, cap: u64) -> Result<Self> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut frontier = vec![rs.rho().clone()];
        seen.insert(rs.rho().clone());
        while let Some(v) = frontier.pop() {
            for i in j.iter() {
                let mut u = v.clone();
                rs.reflect_weight(i, &mut u);
                if seen.insert(u.clone()) {
                    if seen.len() as u64 > cap {
                        return Err(Error::GroupTooLarge {
                            order: seen.len() as u64,
                            cap,
                        });
                    }
                    frontier.push(u);
                }
            }
        }
        let mut elements: Vec<WeylElement> = seen
            .into_iter()
            .map(|v| WeylElement::from_rho_image(rs, v))
            .collect();
        elements.sort();
        Ok(WeylGroup { nodes: j, elements })
    }

    pub fn nodes(&self) -> NodeSet {
        self.nodes
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("groups are nonempty")
    }

    pub fn iter(&self) -> core::slice::Iter<'_, WeylElement> {
        self.elements.iter()
    }
}

/// Parabolic data attached to `J ⊆ Δ`.
#[derive(Debug, Clone)]
pub struct ParabolicSubset {
    pub nodes: NodeSet,
    pub positive_roots: Vec<RootVector>,
    pub w0j: WeylElement,
}

impl ParabolicSubset {
    pub fn new(rs: &RootSystem, j: NodeSet) -> Result<Self> {
        if !j.is_subset(NodeSet::full(rs.rank())) {
            let bad = j.iter().find(|&i| i >= rs.rank()).unwrap_or(0);
            return Err(Error::IndexOutOfRange { index: bad + 1, rank: rs.rank() });
        }
        Ok(ParabolicSubset {
            nodes: j,
            positive_roots: rs.levi_positive_roots(j),
            w0j: longest_element(rs, j),
        })
    }

    /// `N_J = |Φ_J⁺|`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }
}

/// Right-greedy extension: repeatedly append the smallest `i ∈ j` that
/// lengthens the word. `inv_rho` tracks `w⁻¹(ρ)`.
fn greedy_extend(rs: &RootSystem, j: NodeSet, word: &mut Vec<usize>, inv_rho: &mut Weight) {
    while let Some(i) = j.iter().find(|&i| inv_rho.0[i] > 0) {
        word.push(i);
        rs.reflect_weight(i, inv_rho);
    }
}

/// Longest element of `W_J`, built without enumerating the group.
pub fn longest_element(rs: &RootSystem, j: NodeSet) -> WeylElement {
    let mut word = Vec::new();
    let mut inv_rho = rs.rho().clone();
    greedy_extend(rs, j, &mut word, &mut inv_rho);
    WeylElement::from_word(rs, &word).expect("valid indices")
}

/// Minimal length representatives of `W_J \ W`, sorted by length.
pub fn min_coset_reps(rs: &RootSystem, j: NodeSet, cap: u64) -> Result<Vec<WeylElement>> {
    let w = WeylGroup::enumerate(rs, cap)?;
    Ok(w.elements
        .into_iter()
        .filter(|e| e.is_min_coset_rep(j))
        .collect())
}

/// A reduced word for `w_0` whose first `N_J` letters are a reduced word for
/// `w_{0,J}`, together with the induced ordering `γ_k = s_{β_1}⋯s_{β_{k−1}}(α_{β_k})`
/// of the positive roots.
pub fn adapted_w0_word(rs: &RootSystem, j: NodeSet) -> (Vec<usize>, Vec<RootVector>) {
    let mut word = Vec::new();
    let mut inv_rho = rs.rho().clone();
    greedy_extend(rs, j, &mut word, &mut inv_rho);
    greedy_extend(rs, NodeSet::full(rs.rank()), &mut word, &mut inv_rho);
    let ordering = (0..word.len())
        .map(|k| {
            let mut g = rs.simple_root(word[k]);
            for &i in word[..k].iter().rev() {
                rs.reflect_root(i, &mut g);
            }
            g
        })
        .collect();
    (word, ordering)
}

/// Minimal-length `w` with `w(λ)` dominant, and that dominant weight.
pub fn to_dominant(rs: &RootSystem, lambda: &Weight) -> (WeylElement, Weight) {
    to_dominant_on(rs, lambda, NodeSet::full(rs.rank()))
}

/// As [`to_dominant`] but with respect to `W_J` and `J`-dominance.
pub fn to_dominant_on(rs: &RootSystem, lambda: &Weight, j: NodeSet) -> (WeylElement, Weight) {
    let mut cur = lambda.clone();
    let mut applied = Vec::new();
    while let Some(i) = j.iter().find(|&i| cur.0[i] < 0) {
        applied.push(i);
        rs.reflect_weight(i, &mut cur);
    }
    applied.reverse();
    (WeylElement::from_word(rs, &applied).expect("valid indices"), cur)
}

/// `None` when λ+ρ lies on a wall; otherwise the unique `(w, μ)` with μ
/// dominant and `μ = w·λ`.
pub fn dot_regularize(rs: &RootSystem, lambda: &Weight) -> Option<(WeylElement, Weight)> {
    let shifted = Weight(lambda.0.iter().map(|c| c + 1).collect());
    if (0..rs.num_positive_roots()).any(|k| rs.pairing_with_positive(&shifted, k) == 0) {
        return None;
    }
    let (w, mut mu) = to_dominant(rs, &shifted);
    for c in &mut mu.0 {
        *c -= 1;
    }
    Some((w, mu))
}

/// Every `(x, σ)` with `x ∈ W_J`, `σ ∈ ZΦ_J` and `μ = x·λ + ℓσ`.
pub fn affine_linked_witnesses(
    rs: &RootSystem,
    levi: &WeylGroup,
    lambda: &Weight,
    mu: &Weight,
    ell: i64,
) -> Result<Vec<(WeylElement, RootVector)>> {
    if ell < 2 {
        return Err(Error::InvalidParameter(alloc::format!("ℓ must be at least 2, got {ell}")));
    }
    let j = levi.nodes();
    let mut out = Vec::new();
    for x in levi.iter() {
        let diff = mu - &x.dot(lambda);
        let Some(root) = rs.weight_in_root_lattice(&diff) else {
            continue;
        };
        if !root.supported_on(j) || root.0.iter().any(|c| c % ell != 0) {
            continue;
        }
        out.push((x.clone(), RootVector(root.0.iter().map(|c| c / ell).collect())));
    }
    Ok(out)
}

/// First witness of ℓ-linkage under the affine Weyl group of `Φ_J`, if any.
pub fn affine_linked_j(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    ell: i64,
    j: NodeSet,
    cap: u64,
) -> Result<Option<(WeylElement, RootVector)>> {
    let levi = WeylGroup::parabolic(rs, j, cap)?;
    Ok(affine_linked_witnesses(rs, &levi, lambda, mu, ell)?.into_iter().next())
}

/// Factorises `w = u·v` with `u ∈ W_J`, `v ∈ ^J W`.
pub fn parabolic_factorization(rs: &RootSystem, w: &WeylElement, j: NodeSet) -> (WeylElement, WeylElement) {
    // peel left descents in J until none remain
    let mut v = w.clone();
    let mut u_word = Vec::new();
    loop {
        let image = v.rho_image();
        match j.iter().find(|&i| image.0[i] < 0) {
            Some(i) => {
                u_word.push(i);
                let s = WeylElement::from_word(rs, &[i]).expect("valid index");
                v = s.compose(rs, &v);
            }
            None => break,
        }
    }
    (WeylElement::from_word(rs, &u_word).expect("valid indices"), v)
}

/// Index of every element by its action matrix.
pub fn element_index(group: &WeylGroup) -> BTreeMap<Vec<i64>, usize> {
    group
        .iter()
        .enumerate()
        .map(|(k, e)| (e.matrix.clone(), k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::build(RootSystemSpec::parse(label).unwrap()).unwrap()
    }

    /// Brute-force closure under right multiplication by generators.
    fn closure_order(r: &RootSystem) -> usize {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let id = WeylElement::identity(r.rank());
        seen.insert(id.matrix.clone());
        let mut frontier = vec![id];
        while let Some(w) = frontier.pop() {
            for i in 0..r.rank() {
                let mut next = w.clone();
                next.right_multiply_simple(r, i);
                if seen.insert(next.matrix.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn orders_match_closure() {
        for label in ["A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"] {
            let r = rs(label);
            let w = WeylGroup::enumerate(&r, DEFAULT_ENUMERATION_CAP).unwrap();
            assert_eq!(w.order(), closure_order(&r), "{label}");
            assert_eq!(w.order() as u64, group_order(r.spec()), "{label}");
        }
        assert_eq!(WeylGroup::enumerate(&rs("A2"), 100).unwrap().order(), 6);
        let a1 = WeylGroup::enumerate(&rs("A1"), 100).unwrap();
        assert_eq!(a1.elements().iter().map(|e| e.word().to_vec()).collect::<Vec<_>>(), vec![vec![], vec![0]]);
    }

    #[test]
    fn large_groups() {
        let f4 = WeylGroup::enumerate(&rs("F4"), DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(f4.order(), 1152);
        assert_eq!(f4.longest().length(), 24);
        assert!(matches!(
            WeylGroup::enumerate(&rs("E7"), DEFAULT_ENUMERATION_CAP),
            Err(Error::GroupTooLarge { order: 2_903_040, .. })
        ));
        assert!(matches!(WeylGroup::enumerate(&rs("A3"), 10), Err(Error::GroupTooLarge { .. })));
    }

    #[test]
    fn longest_elements() {
        let b2 = rs("B2");
        assert_eq!(longest_element(&b2, NodeSet::full(2)).length(), 4);
        for label in ["A3", "B3", "G2", "C3", "D4"] {
            let r = rs(label);
            let w0 = longest_element(&r, NodeSet::full(r.rank()));
            assert_eq!(w0.length(), r.num_positive_roots());
            assert_eq!(w0.act(r.rho()), -r.rho());
            for j in NodeSet::all_subsets(r.rank()) {
                let p = ParabolicSubset::new(&r, j).unwrap();
                assert_eq!(p.w0j.length(), p.num_positive_roots());
                let levi = WeylGroup::parabolic(&r, j, DEFAULT_ENUMERATION_CAP).unwrap();
                assert_eq!(levi.longest(), &p.w0j);
                // w0J permutes Φ_J⁺ to Φ_J⁻ and fixes Φ⁺∖Φ_J⁺ setwise
                let outside: BTreeSet<RootVector> = r.nilradical_roots(j).into_iter().collect();
                for a in r.positive_roots() {
                    let img = p.w0j.act_root(&r, a);
                    if a.supported_on(j) {
                        assert!(p.positive_roots.contains(&-&img));
                    } else {
                        assert!(outside.contains(&img));
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_words() {
        let a2 = rs("A2");
        let x = WeylElement::from_word(&a2, &[0, 1, 0]).unwrap();
        let y = WeylElement::from_word(&a2, &[1, 0, 1]).unwrap();
        assert_eq!(x, y);
        assert_eq!(x.word(), y.word());
        let e = WeylElement::from_word(&a2, &[0, 0]).unwrap();
        assert!(e.is_identity());
        assert!(matches!(
            WeylElement::from_one_based_word(&a2, &[3]),
            Err(Error::IndexOutOfRange { index: 3, .. })
        ));
    }

    #[test]
    fn dot_action_examples() {
        let a2 = rs("A2");
        let zero = Weight::zero(2);
        for i in 0..2 {
            let s = WeylElement::from_word(&a2, &[i]).unwrap();
            assert_eq!(s.dot(&zero), -a2.root_to_weight(&a2.simple_root(i)));
        }
        let w = WeylElement::from_word(&a2, &[1, 0]).unwrap();
        assert_eq!(w.dot(&zero), -a2.root_to_weight(&RootVector(vec![1, 2])));
        assert_eq!(
            w.inversion_set(&a2),
            vec![RootVector(vec![0, 1]), RootVector(vec![1, 1])]
        );
    }

    #[test]
    fn dot_zero_is_minus_inversion_sum() {
        for label in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
            let r = rs(label);
            for w in WeylGroup::enumerate(&r, DEFAULT_ENUMERATION_CAP).unwrap().iter() {
                let inv = w.inversion_set(&r);
                assert_eq!(inv.len(), w.length());
                let mut sum = RootVector::zero(r.rank());
                for a in &inv {
                    sum += a;
                }
                assert_eq!(w.dot(&Weight::zero(r.rank())), -r.root_to_weight(&sum), "{label} {:?}", w.word());
                // inversion set through explicit w⁻¹ action
                let winv = w.inverse(&r);
                let direct: Vec<RootVector> = r
                    .positive_roots()
                    .iter()
                    .filter(|a| !winv.act_root(&r, a).is_nonnegative())
                    .cloned()
                    .collect();
                assert_eq!(inv, direct);
            }
        }
    }

    #[test]
    fn inversion_examples() {
        let a2 = rs("A2");
        assert!(WeylElement::identity(2).inversion_set(&a2).is_empty());
        for i in 0..2 {
            let s = WeylElement::from_word(&a2, &[i]).unwrap();
            assert_eq!(s.inversion_set(&a2), vec![a2.simple_root(i)]);
        }
        let w = WeylElement::from_word(&a2, &[0, 1]).unwrap();
        assert_eq!(w.inversion_set(&a2), vec![RootVector(vec![1, 0]), RootVector(vec![1, 1])]);
    }

    #[test]
    fn coset_representatives() {
        let a2 = rs("A2");
        let reps = min_coset_reps(&a2, NodeSet::from_indices([0]), 100).unwrap();
        let words: Vec<Vec<usize>> = reps.iter().map(|e| e.one_based_word()).collect();
        assert_eq!(words, vec![vec![], vec![2], vec![2, 1]]);
        assert_eq!(min_coset_reps(&a2, NodeSet::full(2), 100).unwrap().len(), 1);
        assert_eq!(min_coset_reps(&a2, NodeSet::empty(), 100).unwrap().len(), 6);
    }

    #[test]
    fn coset_factorization_is_unique_and_additive() {
        for label in ["A2", "A3", "B2", "B3", "G2", "C3"] {
            let r = rs(label);
            let w = WeylGroup::enumerate(&r, DEFAULT_ENUMERATION_CAP).unwrap();
            for j in NodeSet::all_subsets(r.rank()) {
                let levi = WeylGroup::parabolic(&r, j, DEFAULT_ENUMERATION_CAP).unwrap();
                let reps: Vec<&WeylElement> = w.iter().filter(|e| e.is_min_coset_rep(j)).collect();
                assert_eq!(reps.len() * levi.order(), w.order());
                let jplus: BTreeSet<RootVector> = r.levi_positive_roots(j).into_iter().collect();
                for v in &reps {
                    assert!(v.inversion_set(&r).iter().all(|a| !jplus.contains(a)));
                    // w·0 and −w_{0,J}(w·0) are J-dominant
                    let d = v.dot(&Weight::zero(r.rank()));
                    assert!(d.is_dominant_on(j));
                    let w0j = levi.longest();
                    assert!((-w0j.act(&d)).is_dominant_on(j));
                }
                let mut hits = BTreeMap::new();
                for u in levi.iter() {
                    for v in &reps {
                        let p = u.compose(&r, v);
                        assert_eq!(p.length(), u.length() + v.length());
                        *hits.entry(p.matrix.clone()).or_insert(0) += 1;
                    }
                }
                assert_eq!(hits.len(), w.order());
                assert!(hits.values().all(|&c| c == 1));
                for x in w.iter() {
                    let (u, v) = parabolic_factorization(&r, x, j);
                    assert!(u.in_parabolic(j));
                    assert!(v.is_min_coset_rep(j));
                    assert_eq!(&u.compose(&r, &v), x);
                }
            }
        }
    }

    fn check_adapted(r: &RootSystem, j: NodeSet) {
        let (word, order) = adapted_w0_word(r, j);
        let n = r.num_positive_roots();
        let nj = r.levi_positive_roots(j).len();
        assert_eq!(word.len(), n);
        let w0 = WeylElement::from_word(r, &word).unwrap();
        assert_eq!(w0.length(), n);
        assert_eq!(&w0, &longest_element(r, NodeSet::full(r.rank())));
        let prefix = WeylElement::from_word(r, &word[..nj]).unwrap();
        assert_eq!(prefix.length(), nj);
        assert_eq!(prefix, longest_element(r, j));
        let firsts: BTreeSet<RootVector> = order[..nj].iter().cloned().collect();
        let rest: BTreeSet<RootVector> = order[nj..].iter().cloned().collect();
        assert_eq!(firsts, r.levi_positive_roots(j).into_iter().collect());
        assert_eq!(rest, r.nilradical_roots(j).into_iter().collect());
    }

    #[test]
    fn adapted_words() {
        let a2 = rs("A2");
        let (word, order) = adapted_w0_word(&a2, NodeSet::from_indices([0]));
        assert_eq!(word, vec![0, 1, 0]);
        assert_eq!(order[0], RootVector(vec![1, 0]));
        let a1 = rs("A1");
        assert_eq!(adapted_w0_word(&a1, NodeSet::empty()), (vec![0], vec![RootVector(vec![1])]));
        for label in ["A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"] {
            let r = rs(label);
            for j in NodeSet::all_subsets(r.rank()) {
                check_adapted(&r, j);
            }
        }
    }

    #[test]
    fn regularization() {
        let a2 = rs("A2");
        assert!(dot_regularize(&a2, &Weight(vec![-1, -1])).is_none());
        for i in 0..2 {
            let minus = -a2.root_to_weight(&a2.simple_root(i));
            let (w, mu) = dot_regularize(&a2, &minus).unwrap();
            assert_eq!(w.word(), &[i]);
            assert!(mu.is_zero());
        }
        let lam = Weight(vec![2, 1]);
        let (w, mu) = to_dominant(&a2, &lam);
        assert!(w.is_identity());
        assert_eq!(mu, lam);
    }

    #[test]
    fn to_dominant_is_minimal() {
        for label in ["A2", "B2", "G2", "A3"] {
            let r = rs(label);
            let w = WeylGroup::enumerate(&r, DEFAULT_ENUMERATION_CAP).unwrap();
            for a in -2..=2 {
                for b in -2..=2 {
                    let mut v = vec![a, b];
                    v.resize(r.rank(), 1);
                    let lam = Weight(v);
                    let (x, mu) = to_dominant(&r, &lam);
                    assert!(mu.is_dominant());
                    assert_eq!(x.act(&lam), mu);
                    let best = w
                        .iter()
                        .filter(|y| y.act(&lam).is_dominant())
                        .map(WeylElement::length)
                        .min()
                        .unwrap();
                    assert_eq!(x.length(), best);
                }
            }
        }
    }

    #[test]
    fn regularization_is_independent_of_w() {
        let r = rs("B2");
        let group = WeylGroup::enumerate(&r, 100).unwrap();
        for a in -3..=3 {
            for b in -3..=3 {
                let lam = Weight(vec![a, b]);
                let base = dot_regularize(&r, &lam);
                for w in group.iter() {
                    let other = dot_regularize(&r, &w.dot(&lam));
                    assert_eq!(base.as_ref().map(|p| &p.1), other.as_ref().map(|p| &p.1));
                }
            }
        }
    }

    #[test]
    fn linkage_examples() {
        let a2 = rs("A2");
        let j = NodeSet::from_indices([0]);
        let zero = Weight::zero(2);
        let (x, s) = affine_linked_j(&a2, &zero, &zero, 7, j, 100).unwrap().unwrap();
        assert!(x.is_identity() && s.is_zero());
        let minus_a1 = -a2.root_to_weight(&a2.simple_root(0));
        let (x, s) = affine_linked_j(&a2, &zero, &minus_a1, 7, j, 100).unwrap().unwrap();
        assert_eq!(x.word(), &[0]);
        assert!(s.is_zero());
        assert!(affine_linked_j(&a2, &zero, &Weight(vec![0, 1]), 7, j, 100).unwrap().is_none());
        assert!(affine_linked_j(&a2, &zero, &zero, 1, j, 100).is_err());
    }

    #[test]
    fn linkage_is_an_equivalence_on_a_test_set() {
        let r = rs("B2");
        let j = NodeSet::from_indices([0]);
        let levi = WeylGroup::parabolic(&r, j, 100).unwrap();
        let ell = 5;
        let mut pts = Vec::new();
        for a in -6..=6 {
            for b in -3..=3 {
                pts.push(Weight(vec![a, b]));
            }
        }
        let linked = |x: &Weight, y: &Weight| !affine_linked_witnesses(&r, &levi, x, y, ell).unwrap().is_empty();
        for x in &pts {
            assert!(linked(x, x));
            for y in &pts {
                let xy = linked(x, y);
                assert_eq!(xy, linked(y, x));
                if xy {
                    // witness inverts: y = a·x + ℓσ ⇒ x = a⁻¹·y − ℓ a⁻¹(σ)
                    let (a, s) = affine_linked_witnesses(&r, &levi, x, y, ell).unwrap().remove(0);
                    let ainv = a.inverse(&r);
                    let back = &ainv.dot(y) - &r.root_to_weight(&ainv.act_root(&r, &s)).scaled(ell);
                    assert_eq!(&back, x);
                }
            }
        }
        for x in pts.iter().step_by(7) {
            for y in pts.iter().step_by(5) {
                for z in pts.iter().step_by(3) {
                    if linked(x, y) && linked(y, z) {
                        assert!(linked(x, z));
                    }
                }
            }
        }
    }
}
