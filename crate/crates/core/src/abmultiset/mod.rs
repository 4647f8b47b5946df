//! Multisets in finitely generated abelian groups: products, translation
//! equivalence and factorization.

mod factor;
mod group;

pub use factor::{character_kronecker_split, factorizations, Decomposition};
pub use group::{
    equivalent, generic_ratio_check, generic_ratio_report, multiset_product, AbGroupElem, Ambient,
    GenericRatioReport, GroupMultiset,
};
