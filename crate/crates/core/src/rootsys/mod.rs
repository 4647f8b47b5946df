//! Root systems in fixed ambient realizations, Weyl-group actions on weights,
//! diagram automorphisms and equal-rank subsystems.

mod automorphism;
mod subsystem;
mod system;
mod types;
mod weyl;

pub use automorphism::{diagram_automorphisms, DiagramAutomorphisms, LatticeInvolution};
pub use subsystem::{
    component_order, equal_rank_subsystems, identify_components, type_a_equal_rank, Subsystem,
};
pub use system::{build_root_system, cartan_of, positive_roots_from_cartan, RootSystem};
pub use types::{Family, SimpleType};
pub use weyl::{dominant, orbit_of, reflect, weyl_orbit, Weight};
