//! Irreducible representations of semisimple algebras: dimensions, weight
//! multisets and the multiplicity-free catalog.

mod algebra;
mod catalog;
mod character;
mod freudenthal;

pub use algebra::{HighestWeight, SemisimpleAlgebra};
pub use catalog::{enumerate_irreps_up_to_dim, multiplicity_free_catalog, CatalogEntry};
pub use character::{is_multiplicity_free, restrict_to_subsystem, FormalCharacter};
pub use freudenthal::{
    dominant_multiplicities, irreducible, weight_multiset, weight_multiset_with_cap,
    weyl_dimension, DEFAULT_DIM_CAP,
};
