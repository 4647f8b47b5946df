//! The character file: a JSON document with fields `algebra`, `weights`
//! and an optional `involution`.
//!
//! ```json
//! {
//!   "algebra": [{ "family": "A", "rank": 1 }],
//!   "weights": [{ "coords": [-1], "mult": 1 }, { "coords": [1], "mult": 1 }]
//! }
//! ```
//!
//! Weight rows are in fundamental-weight coordinates. Emitted files are
//! canonical: rows sorted and merged, pretty-printed, newline-terminated.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reps::{FormalCharacter, SemisimpleAlgebra};
use crate::rootsys::{Family, LatticeInvolution, SimpleType, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDesc {
    pub family: String,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRow {
    pub coords: Vec<i64>,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterFile {
    pub algebra: Vec<FactorDesc>,
    pub weights: Vec<WeightRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<Vec<i64>>>,
}

impl CharacterFile {
    pub fn from_character(fc: &FormalCharacter, involution: Option<&LatticeInvolution>) -> Self {
        CharacterFile {
            algebra: fc
                .algebra
                .factors
                .iter()
                .map(|t| FactorDesc {
                    family: t.family.letter().to_string(),
                    rank: t.rank,
                })
                .collect(),
            weights: fc
                .weights
                .iter()
                .map(|(w, &m)| WeightRow {
                    coords: w.0.clone(),
                    mult: m,
                })
                .collect(),
            involution: involution.map(|i| i.matrix.clone()),
        }
    }

    pub fn algebra(&self) -> Result<SemisimpleAlgebra> {
        let factors = self
            .algebra
            .iter()
            .map(|f| {
                let mut cs = f.family.chars();
                let fam = match (cs.next(), cs.next()) {
                    (Some(c), None) => Family::from_letter(c),
                    _ => None,
                }
                .ok_or_else(|| Error::Parse(format!("unknown family `{}`", f.family)))?;
                SimpleType::new(fam, f.rank)
            })
            .collect::<Result<Vec<_>>>()?;
        SemisimpleAlgebra::new(factors)
    }

    pub fn character(&self) -> Result<FormalCharacter> {
        let alg = self.algebra()?;
        FormalCharacter::new(
            alg,
            self.weights.iter().map(|r| (Weight(r.coords.clone()), r.mult)),
        )
    }

    pub fn lattice_involution(&self) -> Result<Option<LatticeInvolution>> {
        let Some(m) = &self.involution else {
            return Ok(None);
        };
        let inv = LatticeInvolution::new(m.clone())?;
        let r = self.algebra()?.rank();
        if inv.dim() != r {
            return Err(Error::DimensionMismatch {
                expected: r,
                actual: inv.dim(),
            });
        }
        Ok(Some(inv))
    }

    /// Parses and validates; the result is canonical.
    pub fn parse(s: &str) -> Result<Self> {
        let raw: CharacterFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let fc = raw.character()?;
        let inv = raw.lattice_involution()?;
        Ok(CharacterFile::from_character(&fc, inv.as_ref()))
    }

    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let s = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&s)
    }
}
