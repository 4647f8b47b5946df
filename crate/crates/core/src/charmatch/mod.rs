//! The bilinear form a faithful character induces on weight space, Gram
//! data, complete matching of formal characters, and weight statistics.

mod conjugation;
mod form;
mod matching;
mod stats;

pub use conjugation::{conjugation_sums, fixed_point_exists, ConjugationMultiset};
pub use form::{
    char_inner_product, gram_data, normalized_inner_product, standard_form, BilinearForm,
    GramData, Normalization,
};
pub use matching::{same_formal_character, CharIsomorphism};
pub use stats::{
    alt_power_stats, max_norm_weights, type_a_count_report, AltPowerStats, MaxNormReport,
    TypeACountReport,
};
