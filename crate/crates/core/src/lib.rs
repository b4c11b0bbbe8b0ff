//! Root systems, Weyl groups and characters of induced modules on
//! cotangent bundles of flag varieties, together with the cohomology
//! predictions and conformance checks built on them.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod charlib;
pub mod error;
pub mod orbits;
pub mod rootsys;
pub mod theorems;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{Family, NodeSet, RootSystem, RootSystemSpec, RootVector, Weight};
pub use weyl::{WeylElement, WeylGroup};
