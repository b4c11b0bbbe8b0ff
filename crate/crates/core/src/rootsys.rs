//! Finite irreducible root systems with exact Cartan data.
//!
//! Simple roots follow Bourbaki numbering. Internally simple indices are
//! 0-based; every external surface (JSON, CLI) uses 1-based indices.
//!
//! | type | long simple roots     | short simple roots   |
//! |------|-----------------------|----------------------|
//! | B_n  | α_1 .. α_{n-1}        | α_n                  |
//! | C_n  | α_n                   | α_1 .. α_{n-1}       |
//! | F_4  | α_1, α_2              | α_3, α_4             |
//! | G_2  | α_2                   | α_1                  |
//!
//! D_n attaches α_{n-1} and α_n to α_{n-2}; E_n has α_2 attached to α_4
//! and the chain α_1 - α_3 - α_4 - ... - α_n.
//!
//! The symmetric form is normalised so that short roots have squared
//! length 2; the symmetrizer `d_i` is half the squared length of α_i.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A (family, rank) pair such as `B2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemSpec { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    /// Parses labels like `A2`, `g2`, `E6`.
    pub fn parse(label: &str) -> Result<Self> {
        let mut chars = label.trim().chars();
        let family = chars
            .next()
            .and_then(Family::from_char)
            .ok_or_else(|| Error::InvalidParameter(alloc::format!("unknown root system type `{label}`")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidParameter(alloc::format!("bad rank in `{label}`")))?;
        RootSystemSpec::new(family, rank)
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl Serialize for RootSystemSpec {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootSystemSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let label = alloc::string::String::deserialize(d)?;
        RootSystemSpec::parse(&label).map_err(serde::de::Error::custom)
    }
}

macro_rules! lattice_vector {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            pub fn scaled(&self, k: i64) -> Self {
                $name(self.0.iter().map(|&c| c * k).collect())
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                $name(v)
            }
        }

        impl<'a> Add<&'a $name> for &'a $name {
            type Output = $name;
            fn add(self, rhs: &'a $name) -> $name {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl<'a> Sub<&'a $name> for &'a $name {
            type Output = $name;
            fn sub(self, rhs: &'a $name) -> $name {
                debug_assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                &self + &rhs
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                &self - &rhs
            }
        }

        impl AddAssign<&$name> for $name {
            fn add_assign(&mut self, rhs: &$name) {
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a += b;
                }
            }
        }

        impl SubAssign<&$name> for $name {
            fn sub_assign(&mut self, rhs: &$name) {
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a -= b;
                }
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|c| -c).collect())
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                -&self
            }
        }

        impl Mul<&$name> for i64 {
            type Output = $name;
            fn mul(self, rhs: &$name) -> $name {
                rhs.scaled(self)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    };
}

lattice_vector!(Weight, "An integral weight in fundamental-weight coordinates: `coords[j] = <λ, α_j^∨>`.");
lattice_vector!(RootVector, "An element of the root lattice in simple-root coordinates.");

impl Weight {
    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Dominant with respect to the simple roots in `j` only.
    pub fn is_dominant_on(&self, j: NodeSet) -> bool {
        j.iter().all(|i| self.0[i] >= 0)
    }

    /// Membership in `X_{P_J}`: vanishing coordinates on `j`.
    pub fn in_x_pj(&self, j: NodeSet) -> bool {
        j.iter().all(|i| self.0[i] == 0)
    }

    /// `k ω_i` in a rank-`rank` lattice.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }
}

impl RootVector {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        RootVector(v)
    }

    /// Nonnegative coordinates.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Support contained in `j`.
    pub fn supported_on(&self, j: NodeSet) -> bool {
        self.0.iter().enumerate().all(|(i, &c)| c == 0 || j.contains(i))
    }
}

/// A set of simple indices, stored as a bitmask (0-based internally,
/// serialized as a sorted list of 1-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NodeSet(u32);

impl NodeSet {
    pub const fn empty() -> Self {
        NodeSet(0)
    }

    pub fn full(rank: usize) -> Self {
        NodeSet(((1u64 << rank) - 1) as u32)
    }

    pub fn from_bits(bits: u32) -> Self {
        NodeSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        NodeSet(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    /// Builds a set from 1-based indices, checking them against `rank`.
    pub fn from_one_based(indices: &[usize], rank: usize) -> Result<Self> {
        let mut bits = 0u32;
        for &i in indices {
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            bits |= 1 << (i - 1);
        }
        Ok(NodeSet(bits))
    }

    pub fn contains(self, i: usize) -> bool {
        i < 32 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, rank: usize) -> Self {
        NodeSet(!self.0 & NodeSet::full(rank).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.0 & (1 << i) != 0)
    }

    pub fn one_based(self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// All subsets of `{0, .., rank-1}` in increasing bitmask order.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = NodeSet> {
        (0..(1u32 << rank)).map(NodeSet)
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

impl Serialize for NodeSet {
    fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for NodeSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.iter().any(|&i| i == 0 || i > 32) {
            return Err(serde::de::Error::custom("node indices are 1-based and at most 32"));
        }
        Ok(NodeSet::from_indices(v.into_iter().map(|i| i - 1)))
    }
}

/// Cartan data, positive roots and scalar invariants of an irreducible root
/// system. Immutable after [`RootSystem::build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    spec: RootSystemSpec,
    /// `cartan[i][j] = <α_j, α_i^∨>`.
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    positive_roots: Vec<RootVector>,
    /// Half squared length of each positive root.
    root_norms: Vec<i64>,
    /// Each positive coroot in the simple-coroot basis.
    coroots: Vec<Vec<i64>>,
    rho: Weight,
    highest_root: RootVector,
    highest_short_root: RootVector,
    coxeter_number: i64,
    det: i64,
    adjugate: Vec<Vec<i64>>,
}

impl RootSystem {
    pub fn build(spec: RootSystemSpec) -> Result<Self> {
        let spec = RootSystemSpec::new(spec.family, spec.rank)?;
        let n = spec.rank;
        let (d, edges) = dynkin_data(spec);
        // symmetric form on simple roots: (α_i, α_j)
        let mut form = vec![vec![0i64; n]; n];
        for i in 0..n {
            form[i][i] = 2 * d[i];
        }
        for &(i, j) in &edges {
            let v = -d[i].max(d[j]);
            form[i][j] = v;
            form[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| form[i][j] / d[i]).collect())
            .collect();

        let positive_roots = positive_roots_by_strings(&cartan);

        let norm = |r: &RootVector| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += r.0[i] * r.0[j] * form[i][j];
                }
            }
            s / 2
        };
        let root_norms: Vec<i64> = positive_roots.iter().map(norm).collect();
        let coroots: Vec<Vec<i64>> = positive_roots
            .iter()
            .zip(&root_norms)
            .map(|(r, &dn)| (0..n).map(|j| r.0[j] * d[j] / dn).collect())
            .collect();

        let max_height = positive_roots.iter().map(RootVector::height).max().unwrap_or(0);
        let highest_root = positive_roots
            .iter()
            .find(|r| r.height() == max_height)
            .cloned()
            .expect("nonempty root system");
        let min_norm = *root_norms.iter().min().expect("nonempty root system");
        let highest_short_root = positive_roots
            .iter()
            .zip(&root_norms)
            .filter(|(_, &dn)| dn == min_norm)
            .max_by_key(|(r, _)| r.height())
            .map(|(r, _)| r.clone())
            .expect("nonempty root system");

        let det = determinant(&cartan);
        let adjugate = adjugate(&cartan);

        let rs = RootSystem {
            spec,
            rho: Weight(vec![1; n]),
            coxeter_number: max_height + 1,
            cartan,
            symmetrizers: d,
            positive_roots,
            root_norms,
            coroots,
            highest_root,
            highest_short_root,
            det,
            adjugate,
        };
        debug_assert_eq!(2 * rs.num_positive_roots() as i64, rs.rank() as i64 * rs.coxeter_number);
        Ok(rs)
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    /// `N = |Φ⁺|`.
    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn highest_root(&self) -> &RootVector {
        &self.highest_root
    }

    /// The highest short root α_0 (equal to the highest root when simply laced).
    pub fn highest_short_root(&self) -> &RootVector {
        &self.highest_short_root
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn determinant(&self) -> i64 {
        self.det
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        RootVector::simple(self.rank(), i)
    }

    /// Index of `alpha` among the positive roots.
    pub fn positive_root_index(&self, alpha: &RootVector) -> Option<usize> {
        self.positive_roots.iter().position(|r| r == alpha)
    }

    pub fn is_root(&self, alpha: &RootVector) -> bool {
        self.positive_root_index(alpha).is_some() || self.positive_root_index(&-alpha).is_some()
    }

    /// Half squared length of the `k`-th positive root.
    pub fn root_norm(&self, k: usize) -> i64 {
        self.root_norms[k]
    }

    pub fn is_short(&self, k: usize) -> bool {
        self.root_norms[k] == self.symmetrizers.iter().copied().min().unwrap_or(1)
    }

    /// `<λ, γ_k^∨>` for the `k`-th positive root; always integral.
    pub fn pairing_with_positive(&self, lambda: &Weight, k: usize) -> i64 {
        self.coroots[k].iter().zip(&lambda.0).map(|(c, l)| c * l).sum()
    }

    /// `<λ, α^∨> = 2(λ,α)/(α,α)` for any non-zero element of the root lattice.
    pub fn pairing(&self, lambda: &Weight, alpha: &RootVector) -> Result<i64> {
        self.check_dim(lambda.rank())?;
        self.check_dim(alpha.rank())?;
        let num = self.form_root_weight(alpha, lambda);
        let den = self.form_roots(alpha, alpha);
        if den == 0 {
            return Err(Error::ZeroVector);
        }
        if (2 * num) % den != 0 {
            return Err(Error::NonIntegralPairing);
        }
        Ok(2 * num / den)
    }

    /// `(β, λ)` for β in the root lattice and λ a weight.
    pub fn form_root_weight(&self, beta: &RootVector, lambda: &Weight) -> i64 {
        (0..self.rank())
            .map(|j| beta.0[j] * self.symmetrizers[j] * lambda.0[j])
            .sum()
    }

    /// `(β, γ)` for β, γ in the root lattice.
    pub fn form_roots(&self, beta: &RootVector, gamma: &RootVector) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if beta.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += beta.0[i] * gamma.0[j] * self.symmetrizers[i] * self.cartan[i][j];
            }
        }
        s
    }

    /// Applies the Cartan matrix: weight coordinates of a root-lattice vector.
    pub fn root_to_weight(&self, alpha: &RootVector) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * alpha.0[j]).sum())
                .collect(),
        )
    }

    /// Root-lattice coordinates of λ, or `None` when λ ∉ ZΦ.
    pub fn weight_in_root_lattice(&self, lambda: &Weight) -> Option<RootVector> {
        let n = self.rank();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let num: i64 = (0..n).map(|j| self.adjugate[i][j] * lambda.0[j]).sum();
            if num % self.det != 0 {
                return None;
            }
            out.push(num / self.det);
        }
        Some(RootVector(out))
    }

    /// `det(C)` times the simple-root coordinates of λ (always integral).
    pub fn scaled_root_coords(&self, lambda: &Weight) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.adjugate[i][j] * lambda.0[j]).sum())
            .collect()
    }

    /// `det(C)` times the height `Σ_i c_i` of λ written in simple roots.
    pub fn scaled_height(&self, lambda: &Weight) -> i64 {
        self.scaled_root_coords(lambda).iter().sum()
    }

    pub fn dominant(&self, lambda: &Weight) -> bool {
        lambda.is_dominant()
    }

    pub fn in_x_pj(&self, lambda: &Weight, j: NodeSet) -> bool {
        lambda.in_x_pj(j)
    }

    /// The positive roots lying in the span of `j`, in default order.
    pub fn levi_positive_roots(&self, j: NodeSet) -> Vec<RootVector> {
        self.positive_roots
            .iter()
            .filter(|r| r.supported_on(j))
            .cloned()
            .collect()
    }

    /// `Φ⁺ ∖ Φ_J⁺`, the weights of `u_J^*`.
    pub fn nilradical_roots(&self, j: NodeSet) -> Vec<RootVector> {
        self.positive_roots
            .iter()
            .filter(|r| !r.supported_on(j))
            .cloned()
            .collect()
    }

    /// Simple reflection `s_i` on a weight.
    pub fn reflect_weight(&self, i: usize, lambda: &mut Weight) {
        let c = lambda.0[i];
        if c != 0 {
            for j in 0..self.rank() {
                lambda.0[j] -= c * self.cartan[j][i];
            }
        }
    }

    /// Simple reflection `s_i` on a root-lattice vector.
    pub fn reflect_root(&self, i: usize, beta: &mut RootVector) {
        let c: i64 = (0..self.rank()).map(|j| self.cartan[i][j] * beta.0[j]).sum();
        beta.0[i] -= c;
    }

    pub(crate) fn check_dim(&self, found: usize) -> Result<()> {
        if found == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                found,
            })
        }
    }

    /// Validates a weight given by the caller.
    pub fn check_weight(&self, lambda: &Weight) -> Result<()> {
        self.check_dim(lambda.rank())
    }

    /// Connected components of the Dynkin subdiagram on `j`.
    pub fn components(&self, j: NodeSet) -> Vec<NodeSet> {
        let mut seen = NodeSet::empty();
        let mut out = Vec::new();
        for start in j.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = NodeSet::empty();
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                if comp.contains(i) {
                    continue;
                }
                comp.insert(i);
                for k in j.iter() {
                    if !comp.contains(k) && self.cartan[i][k] != 0 {
                        stack.push(k);
                    }
                }
            }
            seen = NodeSet::from_bits(seen.bits() | comp.bits());
            out.push(comp);
        }
        out
    }
}

fn dynkin_data(spec: RootSystemSpec) -> (Vec<i64>, Vec<(usize, usize)>) {
    let n = spec.rank;
    let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match spec.family {
        Family::A => (vec![1; n], chain(n)),
        Family::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            (d, chain(n))
        }
        Family::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            (d, chain(n))
        }
        Family::D => {
            let mut e = chain(n - 1);
            e.push((n - 3, n - 1));
            (vec![1; n], e)
        }
        Family::E => {
            let mut e = vec![(0, 2), (1, 3)];
            for i in 2..n - 1 {
                e.push((i, i + 1));
            }
            (vec![1; n], e)
        }
        Family::F => (vec![2, 2, 1, 1], chain(4)),
        Family::G => (vec![1, 3], chain(2)),
    }
}

/// Positive roots via root strings: β + α_i is a root iff `p - <β, α_i^∨> > 0`
/// where `p` is the largest `r` with `β - r α_i` a root.
fn positive_roots_by_strings(cartan: &[Vec<i64>]) -> Vec<RootVector> {
    let n = cartan.len();
    let mut all: Vec<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
    let mut layer = all.clone();
    let contains = |set: &[RootVector], v: &RootVector| set.iter().any(|r| r == v);
    while !layer.is_empty() {
        let mut next: Vec<RootVector> = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down.0[i] -= 1;
                    if down.0[i] >= 0 && !down.is_zero() && contains(&all, &down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..n).map(|j| cartan[i][j] * beta.0[j]).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up.0[i] += 1;
                    if !contains(&next, &up) {
                        next.push(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    // height, then lexicographically decreasing so α_1 precedes α_2
    all.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
    all
}

fn determinant(m: &[Vec<i64>]) -> i64 {
    // Bareiss fraction-free elimination
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<i64>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c]).collect())
                .collect();
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            adj[i][j] = s * determinant(&minor);
        }
    }
    adj
}
