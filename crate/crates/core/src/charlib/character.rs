use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;

use serde::de::Deserializer;
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::polynomial::QPolynomial;
use crate::rootsys::Weight;

/// Finite formal sum `Σ m_μ e^μ` of weights with non-zero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Character {
    terms: BTreeMap<Weight, i64>,
}

#[derive(Serialize, Deserialize)]
struct MultEntry {
    weight: Weight,
    mult: i64,
}

#[derive(Serialize, Deserialize)]
struct PolyEntry {
    weight: Weight,
    poly: QPolynomial,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(mu: Weight) -> Self {
        let mut c = Self::new();
        c.add_term(mu, 1);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (Weight, i64)>>(it: I) -> Self {
        let mut c = Self::new();
        for (w, m) in it {
            c.add_term(w, m);
        }
        c
    }

    pub fn add_term(&mut self, mu: Weight, m: i64) {
        if m == 0 {
            return;
        }
        match self.terms.entry(mu) {
            btree_map::Entry::Vacant(e) => {
                e.insert(m);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Character, c: i64) {
        if c == 0 {
            return;
        }
        for (w, m) in &other.terms {
            self.add_term(w.clone(), c * m);
        }
    }

    /// `self += c · e^shift · other`.
    pub fn add_scaled_shifted(&mut self, other: &Character, c: i64, shift: &Weight) {
        if c == 0 {
            return;
        }
        for (w, m) in &other.terms {
            self.add_term(w + shift, c * m);
        }
    }

    pub fn get(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Weight, i64> {
        self.terms.iter()
    }

    pub fn weights(&self) -> btree_map::Keys<'_, Weight, i64> {
        self.terms.keys()
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i64> {
        &self.terms
    }

    /// Value at the identity: total signed multiplicity.
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scaled(&self, c: i64) -> Character {
        let mut out = Character::new();
        out.add_scaled(self, c);
        out
    }

    pub fn tensor(&self, other: &Character) -> Character {
        let mut out = Character::new();
        for (a, m) in &self.terms {
            for (b, n) in &other.terms {
                out.add_term(a + b, m * n);
            }
        }
        out
    }

    /// Every weight multiplied by `m`.
    pub fn scale_weights(&self, m: i64) -> Character {
        Character::from_terms(self.terms.iter().map(|(w, c)| (w.scaled(m), *c)))
    }

    /// Restriction to dominant weights.
    pub fn dominant_part(&self) -> Character {
        Character {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.is_dominant())
                .map(|(w, m)| (w.clone(), *m))
                .collect(),
        }
    }
}

impl Serialize for Character {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_mults(&self.terms, s)
    }
}

impl<'de> Deserialize<'de> for Character {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let entries = Vec::<MultEntry>::deserialize(d)?;
        Ok(Character::from_terms(entries.into_iter().map(|e| (e.weight, e.mult))))
    }
}

impl FromIterator<(Weight, i64)> for Character {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        Character::from_terms(iter)
    }
}

/// Serde adapter for `BTreeMap<Weight, i64>` as `[{"weight", "mult"}]`.
pub mod mult_entries {
    use super::*;

    pub fn serialize<S: Serializer>(map: &BTreeMap<Weight, i64>, s: S) -> Result<S::Ok, S::Error> {
        serialize_mults(map, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Weight, i64>, D::Error> {
        let entries = Vec::<MultEntry>::deserialize(d)?;
        Ok(entries.into_iter().map(|e| (e.weight, e.mult)).collect())
    }
}

/// Serde adapter for `BTreeMap<Weight, QPolynomial>` as `[{"weight", "poly"}]`.
pub mod poly_entries {
    use super::*;

    pub fn serialize<S: Serializer>(map: &BTreeMap<Weight, QPolynomial>, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(map.len()))?;
        for (w, p) in map {
            seq.serialize_element(&PolyEntry { weight: w.clone(), poly: p.clone() })?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Weight, QPolynomial>, D::Error> {
        let entries = Vec::<PolyEntry>::deserialize(d)?;
        Ok(entries.into_iter().map(|e| (e.weight, e.poly)).collect())
    }
}

fn serialize_mults<S: Serializer>(map: &BTreeMap<Weight, i64>, s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(map.len()))?;
    for (w, m) in map {
        seq.serialize_element(&MultEntry { weight: w.clone(), mult: *m })?;
    }
    seq.end()
}

/// Character with coefficients in `Z[q]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedCharacter {
    terms: BTreeMap<Weight, QPolynomial>,
}

impl GradedCharacter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, mu: Weight, p: &QPolynomial) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            btree_map::Entry::Vacant(e) => {
                e.insert(p.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += p;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn get(&self, mu: &Weight) -> QPolynomial {
        self.terms.get(mu).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Weight, QPolynomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Weight, QPolynomial> {
        &self.terms
    }

    /// The coefficient of `q^n`, as an ordinary character.
    pub fn degree_part(&self, n: usize) -> Character {
        Character::from_terms(self.terms.iter().map(|(w, p)| (w.clone(), p.coeff(n))))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> Character {
        Character::from_terms(self.terms.iter().map(|(w, p)| (w.clone(), p.eval_one())))
    }
}

impl Serialize for GradedCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        poly_entries::serialize(&self.terms, s)
    }
}

impl<'de> Deserialize<'de> for GradedCharacter {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut g = GradedCharacter::new();
        for (w, p) in poly_entries::deserialize(d)? {
            g.add_term(w, &p);
        }
        Ok(g)
    }
}
