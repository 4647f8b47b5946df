use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::reps::FormalCharacter;
use crate::rootsys::{LatticeInvolution, Weight};

/// The multiset `{w + c(w)}` over the weights `w` of a character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationMultiset {
    pub base: FormalCharacter,
    pub involution: LatticeInvolution,
    /// Sums in the full weight lattice, with multiplicity.
    pub sums: BTreeMap<Weight, u64>,
}

impl ConjugationMultiset {
    pub fn size(&self) -> u64 {
        self.sums.values().sum()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.sums.get(w).copied().unwrap_or(0)
    }

    pub fn zero_multiplicity(&self) -> u64 {
        self.multiplicity(&Weight::zero(self.base.rank()))
    }
}

fn check_dims(fc: &FormalCharacter, inv: &LatticeInvolution) -> Result<()> {
    if inv.dim() != fc.rank() {
        return Err(Error::DimensionMismatch {
            expected: fc.rank(),
            actual: inv.dim(),
        });
    }
    Ok(())
}

/// Whether `w ↦ sign · inv(w)` permutes the weight multiset.
fn permutes(fc: &FormalCharacter, inv: &LatticeInvolution, sign: i64) -> bool {
    fc.weights
        .iter()
        .all(|(w, &m)| fc.multiplicity(&inv.apply(w).scaled(sign)) == m)
}

/// `{w + inv(w)}` with multiplicity.
///
/// `inv` must carry the weight multiset onto itself or onto its negative
/// (the dual character); anything else is rejected with [`Error::NotStable`].
pub fn conjugation_sums(fc: &FormalCharacter, inv: &LatticeInvolution) -> Result<ConjugationMultiset> {
    check_dims(fc, inv)?;
    if !permutes(fc, inv, 1) && !permutes(fc, inv, -1) {
        return Err(Error::NotStable);
    }
    let mut sums = BTreeMap::new();
    for (w, &m) in &fc.weights {
        *sums.entry(w + &inv.apply(w)).or_insert(0) += m;
    }
    Ok(ConjugationMultiset {
        base: fc.clone(),
        involution: inv.clone(),
        sums,
    })
}

/// Whether some weight satisfies `w = -inv(w)`.
///
/// `w ↦ -inv(w)` must permute the weight multiset; it is then an involution
/// of it, so a fixed point always exists when the total size is odd.
pub fn fixed_point_exists(fc: &FormalCharacter, inv: &LatticeInvolution) -> Result<bool> {
    check_dims(fc, inv)?;
    if !permutes(fc, inv, -1) {
        return Err(Error::NotStable);
    }
    Ok(fc.weights.keys().any(|w| inv.apply(w).scaled(-1) == *w))
}
