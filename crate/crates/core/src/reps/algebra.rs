use std::fmt;
use std::ops::Range;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{build_root_system, RootSystem, SimpleType};

/// A semisimple Lie algebra as an ordered list of simple factors.
///
/// Factor order matters: weights are concatenations of per-factor
/// fundamental-weight coordinates in this order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SemisimpleAlgebra {
    pub factors: Vec<SimpleType>,
}

impl SemisimpleAlgebra {
    pub fn new(factors: Vec<SimpleType>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Parse("an algebra needs at least one factor".into()));
        }
        for t in &factors {
            SimpleType::new(t.family, t.rank)?;
        }
        Ok(SemisimpleAlgebra { factors })
    }

    pub fn simple(t: SimpleType) -> Self {
        SemisimpleAlgebra { factors: vec![t] }
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank).sum()
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// Coordinate range of factor `k` inside a concatenated weight.
    pub fn factor_range(&self, k: usize) -> Range<usize> {
        let start: usize = self.factors[..k].iter().map(|t| t.rank).sum();
        start..start + self.factors[k].rank
    }

    pub fn root_systems(&self) -> Result<Vec<Arc<RootSystem>>> {
        self.factors.iter().map(|t| build_root_system(*t)).collect()
    }

    pub fn is_all_type_a(&self) -> bool {
        self.factors.iter().all(|t| t.is_type_a())
    }

    /// The product algebra `self × other`.
    pub fn product(&self, other: &SemisimpleAlgebra) -> SemisimpleAlgebra {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().copied());
        SemisimpleAlgebra { factors }
    }
}

impl fmt::Display for SemisimpleAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", names.join("+"))
    }
}

impl FromStr for SemisimpleAlgebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let factors = s
            .split(['+', 'x', '×'])
            .map(|p| p.trim().parse::<SimpleType>())
            .collect::<Result<Vec<_>>>()?;
        SemisimpleAlgebra::new(factors)
    }
}

/// A dominant integral highest weight, one coordinate vector per factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HighestWeight(pub Vec<Vec<i64>>);

impl HighestWeight {
    pub fn new(alg: &SemisimpleAlgebra, parts: Vec<Vec<i64>>) -> Result<Self> {
        if parts.len() != alg.num_factors() {
            return Err(Error::DimensionMismatch {
                expected: alg.num_factors(),
                actual: parts.len(),
            });
        }
        for (t, p) in alg.factors.iter().zip(&parts) {
            if p.len() != t.rank {
                return Err(Error::DimensionMismatch {
                    expected: t.rank,
                    actual: p.len(),
                });
            }
            if p.iter().any(|&c| c < 0) {
                return Err(Error::NotDominant(p.clone()));
            }
        }
        Ok(HighestWeight(parts))
    }

    /// Splits concatenated coordinates according to the factors of `alg`.
    pub fn from_flat(alg: &SemisimpleAlgebra, coords: &[i64]) -> Result<Self> {
        if coords.len() != alg.rank() {
            return Err(Error::DimensionMismatch {
                expected: alg.rank(),
                actual: coords.len(),
            });
        }
        let parts = (0..alg.num_factors())
            .map(|k| coords[alg.factor_range(k)].to_vec())
            .collect();
        Self::new(alg, parts)
    }

    /// `ω_i` (1-based, as in the usual notation) of a simple algebra of rank `rank`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        HighestWeight(vec![v])
    }

    pub fn zero(alg: &SemisimpleAlgebra) -> Self {
        HighestWeight(alg.factors.iter().map(|t| vec![0; t.rank]).collect())
    }

    pub fn flat(&self) -> Vec<i64> {
        self.0.iter().flatten().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(|&c| c == 0)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "⊠")?;
            }
            let s: Vec<String> = p.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let alg: SemisimpleAlgebra = "A1+A1".parse().unwrap();
        assert_eq!(alg.rank(), 2);
        assert_eq!(alg.to_string(), "A1+A1");
        let alg: SemisimpleAlgebra = "A4 + D5".parse().unwrap();
        assert_eq!(alg.factor_range(1), 4..9);
        assert!("B1".parse::<SemisimpleAlgebra>().is_err());
    }

    #[test]
    fn highest_weight_validation() {
        let alg: SemisimpleAlgebra = "A2+A1".parse().unwrap();
        let hw = HighestWeight::from_flat(&alg, &[1, 0, 3]).unwrap();
        assert_eq!(hw.0, vec![vec![1, 0], vec![3]]);
        assert_eq!(hw.to_string(), "(1,0)⊠(3)");
        assert!(matches!(
            HighestWeight::from_flat(&alg, &[1, -1, 0]),
            Err(Error::NotDominant(_))
        ));
        assert!(HighestWeight::from_flat(&alg, &[1, 0]).is_err());
    }
}
