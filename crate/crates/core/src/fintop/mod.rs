//! Finite topological spaces as preorders, continuous maps, and the category they form.

mod canon;
mod category;
mod construct;
pub mod dictionary;
mod enumerate;
mod map;
pub mod oracle;
mod search;
mod space;

use thiserror::Error;

pub use canon::{automorphisms, canonical_form, canonical_space, is_homeomorphic, map_key, CanonicalForm, MapKey, CANONICAL_LIMIT};
pub use category::{lift_maps, universe_profile, FinTop};
pub use construct::{coproduct, coproduct_map, product, product_map, pullback, pushout, retracts};
pub use enumerate::{enumerate_maps, enumerate_spaces, spaces_of_size, ENUMERATION_LIMIT, LABELED_LIMIT};
pub use map::SpaceMap;
pub use oracle::{map_has, space_has, space_properties, MapProperty, SpaceProperty};
pub use space::{default_label, FiniteSpace, MAX_POINTS};


#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("duplicate point label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("empty point label")]
    EmptyLabel,
    #[error("{size} points exceeds the limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("{0}")]
    Shape(String),
    #[error("assignment is not continuous")]
    NotMonotone,
}
