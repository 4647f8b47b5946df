use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::algebra::SemisimpleAlgebra;
use crate::error::{Error, Result};
use crate::rootsys::{reflect, Subsystem, Weight};

/// A finite multiset of weights of a semisimple algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormalCharacter {
    pub algebra: SemisimpleAlgebra,
    /// Weight ↦ multiplicity; multiplicities are always positive.
    pub weights: BTreeMap<Weight, u64>,
}

impl FormalCharacter {
    pub fn new<I>(algebra: SemisimpleAlgebra, weights: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, u64)>,
    {
        let rank = algebra.rank();
        let mut map = BTreeMap::new();
        for (w, m) in weights {
            if w.len() != rank {
                return Err(Error::DimensionMismatch {
                    expected: rank,
                    actual: w.len(),
                });
            }
            if m > 0 {
                *map.entry(w).or_insert(0) += m;
            }
        }
        Ok(FormalCharacter {
            algebra,
            weights: map,
        })
    }

    /// From a list of weights, repeats allowed.
    pub fn from_list(algebra: SemisimpleAlgebra, weights: Vec<Weight>) -> Result<Self> {
        Self::new(algebra, weights.into_iter().map(|w| (w, 1)))
    }

    /// `n` copies of the trivial character.
    pub fn trivial(algebra: SemisimpleAlgebra, n: u64) -> Self {
        let rank = algebra.rank();
        let mut weights = BTreeMap::new();
        if n > 0 {
            weights.insert(Weight::zero(rank), n);
        }
        FormalCharacter { algebra, weights }
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    /// Total size counted with multiplicity.
    pub fn dim(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn num_distinct(&self) -> usize {
        self.weights.len()
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    pub fn max_multiplicity(&self) -> u64 {
        self.weights.values().copied().max().unwrap_or(0)
    }

    /// Every weight repeated according to its multiplicity, in sorted order.
    pub fn expanded(&self) -> Vec<Weight> {
        self.weights
            .iter()
            .flat_map(|(w, &m)| std::iter::repeat(w.clone()).take(m as usize))
            .collect()
    }

    pub fn weight_sum(&self) -> Weight {
        let mut s = vec![0i64; self.rank()];
        for (w, &m) in &self.weights {
            for (x, c) in s.iter_mut().zip(w.iter()) {
                *x += c * m as i64;
            }
        }
        Weight(s)
    }

    /// Whether every simple reflection of every factor permutes the multiset.
    pub fn is_weyl_stable(&self) -> Result<bool> {
        for (k, rs) in self.algebra.root_systems()?.iter().enumerate() {
            let range = self.algebra.factor_range(k);
            for i in 0..rs.rank() {
                for (w, &m) in &self.weights {
                    let mut v = w.0.clone();
                    reflect(&rs.cartan_matrix, i, &mut v[range.clone()]);
                    if self.multiplicity(&Weight(v)) != m {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The dual character: every weight negated.
    pub fn dual(&self) -> Self {
        FormalCharacter {
            algebra: self.algebra.clone(),
            weights: self.weights.iter().map(|(w, &m)| (-w, m)).collect(),
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.weights.iter().all(|(w, &m)| self.multiplicity(&-w) == m)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::RankMismatch(format!(
                "cannot add characters of {} and {}",
                self.algebra, other.algebra
            )));
        }
        let mut out = self.clone();
        for (w, &m) in &other.weights {
            *out.weights.entry(w.clone()).or_insert(0) += m;
        }
        Ok(out)
    }

    /// The external tensor product, a character of `self.algebra × other.algebra`.
    pub fn outer_tensor(&self, other: &Self) -> Self {
        let mut weights = BTreeMap::new();
        for (a, &ma) in &self.weights {
            for (b, &mb) in &other.weights {
                let mut v = a.0.clone();
                v.extend_from_slice(b);
                *weights.entry(Weight(v)).or_insert(0) += ma * mb;
            }
        }
        FormalCharacter {
            algebra: self.algebra.product(&other.algebra),
            weights,
        }
    }

    /// The tensor product of two characters of the same algebra (weights add).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::RankMismatch(format!(
                "cannot tensor characters of {} and {}",
                self.algebra, other.algebra
            )));
        }
        let mut weights = BTreeMap::new();
        for (a, &ma) in &self.weights {
            for (b, &mb) in &other.weights {
                *weights.entry(a + b).or_insert(0) += ma * mb;
            }
        }
        Ok(FormalCharacter {
            algebra: self.algebra.clone(),
            weights,
        })
    }

    /// Coordinates of factor `k` of every weight, with multiplicity.
    pub fn factor_projection(&self, k: usize) -> Self {
        let range = self.algebra.factor_range(k);
        let mut weights = BTreeMap::new();
        for (w, &m) in &self.weights {
            *weights.entry(Weight(w[range.clone()].to_vec())).or_insert(0) += m;
        }
        FormalCharacter {
            algebra: SemisimpleAlgebra::simple(self.algebra.factors[k]),
            weights,
        }
    }

    /// Whether factor `k` has a nonzero weight, i.e. does not act trivially.
    pub fn is_faithful_on(&self, k: usize) -> bool {
        let range = self.algebra.factor_range(k);
        self.weights.keys().any(|w| w[range.clone()].iter().any(|&c| c != 0))
    }
}

/// True iff every weight occurs exactly once.
pub fn is_multiplicity_free(fc: &FormalCharacter) -> bool {
    fc.weights.values().all(|&m| m == 1)
}

/// Re-expresses a character of a simple algebra in the fundamental-weight
/// coordinates of an equal-rank subsystem.
///
/// Each weight is taken to the ambient space of the parent and paired with
/// the subsystem's simple coroots; the multiset itself is unchanged.
pub fn restrict_to_subsystem(fc: &FormalCharacter, sub: &Subsystem) -> Result<FormalCharacter> {
    if fc.algebra.factors != [sub.parent.stype] {
        return Err(Error::RankMismatch(format!(
            "character of {} cannot be restricted along a subsystem of {}",
            fc.algebra, sub.parent.stype
        )));
    }
    if sub.rank() != sub.parent.rank() {
        return Err(Error::RankMismatch(format!(
            "subsystem {sub} has rank {} but {} has rank {}",
            sub.rank(),
            sub.parent.stype,
            sub.parent.rank()
        )));
    }
    let target = SemisimpleAlgebra::new(sub.component_types.clone())?;
    let coroots: Vec<(Vec<_>, _)> = sub
        .selected_roots
        .iter()
        .map(|b| (b.clone(), crate::linalg::dot(b, b)))
        .collect();
    let mut weights = Vec::with_capacity(fc.num_distinct());
    for (w, &m) in &fc.weights {
        let v = sub.parent.to_ambient(w);
        let coords = coroots
            .iter()
            .map(|(b, n2)| {
                let x = crate::linalg::q(2) * crate::linalg::dot(&v, b) / n2;
                crate::linalg::to_i64(&x).ok_or_else(|| {
                    Error::RankMismatch("weight pairs non-integrally with a coroot".into())
                })
            })
            .collect::<Result<Vec<i64>>>()?;
        weights.push((Weight(coords), m));
    }
    FormalCharacter::new(target, weights)
}
