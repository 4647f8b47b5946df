//! Named verification cases, the character file format, command-line
//! notation and the dimension gate behind the `charlattice` binary.

mod allowed;
mod cases;
mod charfile;
pub mod commands;
mod notation;
mod report;

pub use allowed::{cmd_allowed_pairs, dual_highest_weight, AllowedPair, AllowedPairs, MAX_ALLOWED_N};
pub use cases::{
    cmd_verify, default_suite, factorization_count_bound, run_default_suite, so_standard,
    CaseParams, CASE_IDS,
};
pub use charfile::{CharacterFile, FactorDesc, WeightRow};
pub use notation::parse_highest_weight;
pub use report::{CaseReport, Step, Verdict};
