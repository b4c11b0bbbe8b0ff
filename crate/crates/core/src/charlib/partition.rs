use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::polynomial::QPolynomial;
use crate::rootsys::RootVector;

/// Vector partition function over a fixed multiset of positive roots:
/// `count(μ)` is the number of ways to write μ as a non-negative integer
/// combination of the roots, and `q_count(μ)` grades each way by its number
/// of summands (with multiplicity).
///
/// Memoised on `(μ, first root index)`. Not `Sync`; build one per thread.
#[derive(Debug)]
pub struct PartitionFunction {
    roots: Vec<RootVector>,
    /// `reach[k]` is a bitmask of coordinates some root in `roots[k..]` touches.
    reach: Vec<u64>,
    scalar: RefCell<BTreeMap<(Vec<i64>, usize), i64>>,
    graded: RefCell<BTreeMap<(Vec<i64>, usize), QPolynomial>>,
}

impl PartitionFunction {
    pub fn new(roots: Vec<RootVector>) -> Self {
        let mut reach = alloc::vec![0u64; roots.len() + 1];
        for k in (0..roots.len()).rev() {
            let own = roots[k]
                .0
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .fold(0u64, |m, (i, _)| m | (1 << i));
            reach[k] = reach[k + 1] | own;
        }
        PartitionFunction {
            roots,
            reach,
            scalar: RefCell::new(BTreeMap::new()),
            graded: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    fn dead_end(&self, mu: &[i64], idx: usize) -> bool {
        mu.iter()
            .enumerate()
            .any(|(i, &c)| c < 0 || (c > 0 && self.reach[idx] & (1 << i) == 0))
    }

    pub fn count(&self, mu: &RootVector) -> i64 {
        self.count_from(&mu.0, 0)
    }

    fn count_from(&self, mu: &[i64], idx: usize) -> i64 {
        if mu.iter().all(|&c| c == 0) {
            return 1;
        }
        if idx == self.roots.len() || self.dead_end(mu, idx) {
            return 0;
        }
        let key = (mu.to_vec(), idx);
        if let Some(&v) = self.scalar.borrow().get(&key) {
            return v;
        }
        let root = &self.roots[idx].0;
        let mut cur = mu.to_vec();
        let mut acc = 0;
        loop {
            acc += self.count_from(&cur, idx + 1);
            for (c, r) in cur.iter_mut().zip(root) {
                *c -= r;
            }
            if cur.iter().any(|&c| c < 0) {
                break;
            }
        }
        self.scalar.borrow_mut().insert(key, acc);
        acc
    }

    pub fn q_count(&self, mu: &RootVector) -> QPolynomial {
        self.q_count_from(&mu.0, 0)
    }

    fn q_count_from(&self, mu: &[i64], idx: usize) -> QPolynomial {
        if mu.iter().all(|&c| c == 0) {
            return QPolynomial::one();
        }
        if idx == self.roots.len() || self.dead_end(mu, idx) {
            return QPolynomial::zero();
        }
        let key = (mu.to_vec(), idx);
        if let Some(v) = self.graded.borrow().get(&key) {
            return v.clone();
        }
        let root = &self.roots[idx].0;
        let mut cur = mu.to_vec();
        let mut acc = QPolynomial::zero();
        let mut uses = 0;
        loop {
            let sub = self.q_count_from(&cur, idx + 1);
            acc.add_scaled_shifted(&sub, 1, uses);
            for (c, r) in cur.iter_mut().zip(root) {
                *c -= r;
            }
            uses += 1;
            if cur.iter().any(|&c| c < 0) {
                break;
            }
        }
        self.graded.borrow_mut().insert(key, acc.clone());
        acc
    }
}

/// One-shot graded partition function of μ over `roots`.
pub fn q_partition(mu: &RootVector, roots: &[RootVector]) -> QPolynomial {
    PartitionFunction::new(roots.to_vec()).q_count(mu)
}

/// One-shot Kostant-style count of μ over `roots`.
pub fn partition_count(mu: &RootVector, roots: &[RootVector]) -> i64 {
    PartitionFunction::new(roots.to_vec()).count(mu)
}
