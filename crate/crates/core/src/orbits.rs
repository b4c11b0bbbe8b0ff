//! Partitions, Richardson orbits in `gl_n` and their coordinate rings.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::charlib::Engine;
use crate::error::{Error, Result};
use crate::rootsys::{Family, NodeSet, RootSystemSpec, Weight};

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum_of_squares(&self) -> usize {
        self.0.iter().map(|p| p * p).sum()
    }

    pub fn transpose(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = &'static str;
    fn try_from(v: Vec<usize>) -> core::result::Result<Self, Self::Error> {
        if v.windows(2).any(|w| w[0] < w[1]) || v.contains(&0) {
            return Err("partition parts must be positive and weakly decreasing");
        }
        Ok(Partition(v))
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

fn check_nodes(j: NodeSet, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(String::from("n must be positive")));
    }
    if let Some(bad) = j.iter().find(|&i| i + 1 >= n) {
        return Err(Error::IndexOutOfRange { index: bad + 1, rank: n - 1 });
    }
    Ok(())
}

/// Block sizes of the Levi `L_J ⊆ GL_n`.
pub fn sigma_partition(j: NodeSet, n: usize) -> Result<Partition> {
    check_nodes(j, n)?;
    let mut parts = Vec::new();
    let mut block = 1;
    for i in 0..n - 1 {
        if j.contains(i) {
            block += 1;
        } else {
            parts.push(block);
            block = 1;
        }
    }
    parts.push(block);
    Ok(Partition::new(parts))
}

pub fn transpose(p: &Partition) -> Partition {
    p.transpose()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDescriptor {
    pub n: usize,
    #[serde(rename = "J")]
    pub j: NodeSet,
    pub sigma: Partition,
    /// The Jordan type of the orbit, `σ(J)^t`.
    pub lambda: Partition,
    pub dim: usize,
}

/// The Richardson orbit `G·u_J` in `gl_n`.
pub fn richardson_orbit(j: NodeSet, n: usize) -> Result<OrbitDescriptor> {
    let sigma = sigma_partition(j, n)?;
    let lambda = sigma.transpose();
    let dim = n * n - sigma.sum_of_squares();
    Ok(OrbitDescriptor { n, j, sigma, lambda, dim })
}

/// Graded dimensions of `k[G ×_{P_J} u_J]` for `GL_n`, via type `A_{n−1}`.
pub fn orbit_ring_series(j: NodeSet, n: usize, max_degree: usize) -> Result<Vec<i64>> {
    check_nodes(j, n)?;
    if n == 1 {
        let mut v = alloc::vec![0; max_degree + 1];
        v[0] = 1;
        return Ok(v);
    }
    let engine = Engine::new(RootSystemSpec::new(Family::A, n - 1)?)?;
    engine.poincare_series(j, &Weight::zero(n - 1), max_degree)
}

/// Partial-sum dominance `λ ≤ μ`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let (mut a, mut b) = (0, 0);
    for k in 0..lambda.len().max(mu.len()) {
        a += lambda.0.get(k).copied().unwrap_or(0);
        b += mu.0.get(k).copied().unwrap_or(0);
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}
