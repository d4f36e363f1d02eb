//! Derived semigroups: direct and semidirect products, zero attachment,
//! holomorphs, Brandt semigroups and Rees quotients, together with the maps
//! that carry embeddings into power semigroups through these constructions.

mod action;
mod brandt;
mod hyper;
mod products;
mod semidirect;

pub use action::GroupAction;
pub use brandt::{brandt, ideal_violation, rees_quotient};
pub use hyper::{
    coset_lift, equivariant_lift, induced_action, product_embedding, semidirect_hyper_embedding, shift, HyperMap,
    MapReport, PowerShiftGroup, SemidirectEmbedding,
};
pub use products::{attach_zero, box_product, direct_product, MixedRadix, ProductGroup};
pub use semidirect::{automorphism_group, holomorph, semidirect_inverse, semidirect_product};
