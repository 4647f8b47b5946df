//! Exact computational Lie theory for formal characters.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`]: root systems of every finite Cartan type in fixed rational
//!   realizations, Weyl orbits, diagram automorphisms and equal-rank
//!   subsystems found by iterated extended-diagram deletion;
//! * [`reps`]: irreducible representations of semisimple algebras (Weyl
//!   dimension formula, Freudenthal weight multiplicities) and the catalog of
//!   multiplicity-free irreducibles;
//! * [`charmatch`]: the bilinear form a faithful character induces on weight
//!   space, Gram data, complete formal-character matching, and the weight
//!   statistics used in type-A rigidity arguments;
//! * [`abmultiset`]: multisets in `Z/m × Z^d` under Minkowski product, with
//!   translation equivalence and complete factorization enumeration;
//! * [`goursat`]: rank bookkeeping for full-projection subalgebras of
//!   products of simple algebras;
//! * [`verify`]: named case reports, the character file format and the
//!   helpers behind the `charlattice` binary.
//!
//! All arithmetic is exact: integers for weights, arbitrary-precision
//! rationals for ambient coordinates and forms.

pub mod abmultiset;
pub mod charmatch;
pub mod error;
pub mod goursat;
pub mod linalg;
pub mod reps;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
