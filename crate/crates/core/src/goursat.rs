//! Subalgebras of a product of simple Lie algebras that project onto every
//! factor: a partition of the factors into blocks of isomorphic types, each
//! block embedded diagonally.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::SimpleType;

/// Largest factor list [`verify_goursat_lemma`] will enumerate.
pub const MAX_FACTORS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoursatSpec {
    pub factors: Vec<SimpleType>,
    /// Blocks of 0-based factor indices.
    pub blocks: Vec<Vec<usize>>,
}

impl GoursatSpec {
    /// Checks that `blocks` partitions the factor indices and that each
    /// block has a single type.
    pub fn new(factors: Vec<SimpleType>, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let spec = GoursatSpec { factors, blocks };
        spec.validate()?;
        Ok(spec)
    }

    /// Every factor its own block: the full product.
    pub fn full(factors: Vec<SimpleType>) -> Self {
        let blocks = (0..factors.len()).map(|i| vec![i]).collect();
        GoursatSpec { factors, blocks }
    }

    pub fn validate(&self) -> Result<()> {
        let k = self.factors.len();
        let mut seen = vec![false; k];
        for b in &self.blocks {
            if b.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            for &i in b {
                if i >= k {
                    return Err(Error::MalformedPartition(format!("index {} out of range", i + 1)));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(Error::MalformedPartition(format!("index {} repeated", i + 1)));
                }
            }
            let t = self.factors[b[0]];
            if b.iter().any(|&i| self.factors[i] != t) {
                return Err(Error::MalformedPartition(format!(
                    "block {} mixes types",
                    self.block_label(b)
                )));
            }
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::MalformedPartition(format!("index {} not covered", i + 1)));
        }
        Ok(())
    }

    pub fn all_singletons(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    fn block_label(&self, b: &[usize]) -> String {
        let s: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
        format!("{{{}}}", s.join(","))
    }
}

impl fmt::Display for GoursatSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ts: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        let bs: Vec<String> = self.blocks.iter().map(|b| self.block_label(b)).collect();
        write!(f, "{} / {}", ts.join("×"), bs.join(""))
    }
}

/// One representative rank per block.
pub fn goursat_rank(spec: &GoursatSpec) -> Result<usize> {
    spec.validate()?;
    Ok(spec.blocks.iter().map(|b| spec.factors[b[0]].rank).sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GoursatReport {
    pub factors: Vec<SimpleType>,
    pub total_rank: usize,
    /// Type-compatible partitions examined.
    pub specs_checked: usize,
    /// Specs where "rank is full" and "all blocks are singletons" disagree.
    pub counterexamples: Vec<String>,
}

impl GoursatReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Set partitions of `0..k` as restricted growth strings, keeping only
/// blocks of equal type.
fn compatible_partitions(factors: &[SimpleType]) -> Vec<Vec<Vec<usize>>> {
    fn go(factors: &[SimpleType], i: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == factors.len() {
            out.push(blocks.clone());
            return;
        }
        for j in 0..blocks.len() {
            if factors[blocks[j][0]] == factors[i] {
                blocks[j].push(i);
                go(factors, i + 1, blocks, out);
                blocks[j].pop();
            }
        }
        blocks.push(vec![i]);
        go(factors, i + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(factors, 0, &mut Vec::new(), &mut out);
    out
}

/// Exhaustively checks that a full-projection subalgebra has the rank of the
/// whole product exactly when it is the whole product.
pub fn verify_goursat_lemma(factors: &[SimpleType]) -> Result<GoursatReport> {
    if factors.len() > MAX_FACTORS {
        return Err(Error::ResourceLimit(format!(
            "{} factors exceeds the limit of {MAX_FACTORS}",
            factors.len()
        )));
    }
    let total: usize = factors.iter().map(|t| t.rank).sum();
    let mut report = GoursatReport {
        factors: factors.to_vec(),
        total_rank: total,
        specs_checked: 0,
        counterexamples: Vec::new(),
    };
    for blocks in compatible_partitions(factors) {
        let spec = GoursatSpec::new(factors.to_vec(), blocks)?;
        let r = goursat_rank(&spec)?;
        report.specs_checked += 1;
        if (r == total) != spec.all_singletons() || r > total {
            report.counterexamples.push(format!("{spec}: rank {r} of {total}"));
        }
    }
    Ok(report)
}
