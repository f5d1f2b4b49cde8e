//! Freiman isomorphisms of order 2, relation lattices and dimension.

mod matching;
mod pattern;
mod relations;

pub(crate) use matching::ClassMap;
pub use matching::{find_isomorphism, is_isomorphic, isomorphism};
pub use pattern::{quadruple_pattern, Pair, QuadruplePattern, SumTable};
pub use relations::{
    dimension_of, freiman_dimension, universal_model, universal_model_of, RelationLattice,
};
