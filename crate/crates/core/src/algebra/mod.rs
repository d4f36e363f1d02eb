//! Finite semigroups as Cayley tables, and the class predicates used across
//! the crate: groups, semilattices, regular, inverse and Clifford semigroups,
//! maximal subgroups, the natural order on idempotents and conjugacy.

mod classes;
mod format;
mod group;
mod obstruction;
mod table;

pub use classes::{ClassFlags, IdempotentPoset};
pub use format::parse_semigroup;
pub use group::{Group, GroupFacts};
pub use obstruction::{ObstructionReport, Violation};
pub use table::FiniteSemigroup;

/// A binary operation on `0..order()`. Implemented by materialized tables and
/// by product groups too large to tabulate.
pub trait Operation {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
}
