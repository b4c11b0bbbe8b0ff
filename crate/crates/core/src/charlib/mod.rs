//! Characters, partition functions and induced graded characters.

mod character;
mod engine;
mod induction;
mod partition;
mod polynomial;

pub use character::{mult_entries, poly_entries, Character, GradedCharacter};
pub use engine::{levi_dim, weyl_dim, Engine, LeviData};
pub use induction::{decomposition_dim, decomposition_entries, twist_character, Decomposition};
pub use partition::{partition_count, q_partition, PartitionFunction};
pub use polynomial::QPolynomial;
