//! Finite semigroups, power semigroups of finite groups and embeddings of
//! Clifford inverse semigroups into them.
//!
//! * [`algebra`]: Cayley tables, class predicates, the idempotent order and
//!   necessary conditions for embedding into a power semigroup.
//! * [`hyperspace`]: the power semigroup `exp(G)` and the coset
//!   classification of its elements.
//! * [`constructions`]: products, semidirect products, holomorphs, Brandt
//!   semigroups, Rees quotients and the maps between power semigroups they
//!   induce.
//! * [`clifford`]: verified embeddings of Clifford inverse semigroups.
//! * [`search`]: backtracking search for homomorphisms and embeddings.
//! * [`cli`]: the `hsg` command line.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod clifford;
pub mod constructions;
pub mod error;
pub mod hyperspace;
pub mod limits;
pub mod morphism;
pub mod search;
pub mod subset;

pub use algebra::{parse_semigroup, ClassFlags, FiniteSemigroup, Group, Operation};
pub use error::{Error, Result};
pub use subset::Subset;
