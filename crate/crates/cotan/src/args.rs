//! Flag value types.
//!
//! Weights are comma-separated fundamental coordinates, root vectors are
//! comma-separated simple-root coordinates, index lists are 1-based. The
//! empty string is an empty list; a lone `0` stands for the zero weight of
//! whatever rank the command needs.

use std::fmt;
use std::str::FromStr;

use cotan_core::{NodeSet, RootSystem, RootSystemSpec, RootVector, Weight, WeylElement};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coords(pub Vec<i64>);

impl FromStr for Coords {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Coords(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()
            .map(Coords)
    }
}

impl fmt::Display for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl Coords {
    pub fn weight(&self, rank: usize, flag: &str) -> Result<Weight, CliError> {
        if self.0 == [0] {
            return Ok(Weight::zero(rank));
        }
        self.check_len(rank, flag)?;
        Ok(Weight(self.0.clone()))
    }

    pub fn root(&self, rank: usize, flag: &str) -> Result<RootVector, CliError> {
        if self.0 == [0] {
            return Ok(RootVector::zero(rank));
        }
        self.check_len(rank, flag)?;
        Ok(RootVector(self.0.clone()))
    }

    fn check_len(&self, rank: usize, flag: &str) -> Result<(), CliError> {
        if self.0.len() != rank {
            return Err(CliError::usage(
                flag,
                format!("expected {rank} coordinates, got {}", self.0.len()),
            ));
        }
        Ok(())
    }
}

/// 1-based indices, order preserved.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Indices(pub Vec<usize>);

impl FromStr for Indices {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Indices(Vec::new()));
        }
        s.split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(0) => Err("indices are 1-based".to_string()),
                Ok(i) => Ok(i),
                Err(e) => Err(format!("{t:?}: {e}")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Indices)
    }
}

impl Indices {
    pub fn nodes(&self, rank: usize, flag: &str) -> Result<NodeSet, CliError> {
        NodeSet::from_one_based(&self.0, rank).map_err(|e| CliError::usage(flag, e.to_string()))
    }

    pub fn element(&self, rs: &RootSystem, flag: &str) -> Result<WeylElement, CliError> {
        WeylElement::from_one_based_word(rs, &self.0).map_err(|e| CliError::usage(flag, e.to_string()))
    }
}

pub fn parse_spec(s: &str) -> Result<RootSystemSpec, String> {
    RootSystemSpec::parse(s.trim()).map_err(|e| e.to_string())
}

/// `TYPE[:ℓ]` entries for sweeps; a missing ℓ means `2h + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSystem {
    pub spec: RootSystemSpec,
    pub ell: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepSystems(pub Vec<SweepSystem>);

impl FromStr for SweepSystems {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (label, ell) = match item.split_once(':') {
                Some((a, b)) => (a, Some(b.trim().parse::<i64>().map_err(|e| format!("{b:?}: {e}"))?)),
                None => (item, None),
            };
            out.push(SweepSystem { spec: parse_spec(label)?, ell });
        }
        if out.is_empty() {
            return Err("no root systems given".into());
        }
        Ok(SweepSystems(out))
    }
}
