use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, q, qr, Q, QMatrix};
use crate::reps::{FormalCharacter, SemisimpleAlgebra};
use crate::rootsys::{reflect, Weight};

/// How a form is scaled on each simple factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Normalization {
    /// Exactly the form induced by the character.
    Raw,
    /// Long roots have squared norm 2 on every factor. On `A_n` this is the
    /// form with `⟨e_i, e_j⟩ = δ_ij - 1/(n+1)` for the weights `e_i` of `Std`.
    Standard,
    /// Each factor block divided by the least positive squared norm among
    /// the character's weights projected to that factor.
    RatioCanonical,
}

/// A symmetric form on weight space, in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub algebra: SemisimpleAlgebra,
    pub matrix: QMatrix,
}

pub(crate) fn to_q(w: &[i64]) -> Vec<Q> {
    w.iter().map(|&c| q(c)).collect()
}

impl BilinearForm {
    pub fn pair(&self, a: &[i64], b: &[i64]) -> Q {
        linalg::bilinear(&self.matrix, &to_q(a), &to_q(b))
    }

    pub fn norm2(&self, a: &[i64]) -> Q {
        self.pair(a, a)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.matrix.len();
        (0..n).all(|i| (0..n).all(|j| self.matrix[i][j] == self.matrix[j][i]))
    }

    /// `⟨s v, s w⟩ = ⟨v, w⟩` for every simple reflection `s`, as a matrix identity.
    pub fn is_reflection_invariant(&self) -> Result<bool> {
        let n = self.algebra.rank();
        for (k, rs) in self.algebra.root_systems()?.iter().enumerate() {
            let range = self.algebra.factor_range(k);
            for i in 0..rs.rank() {
                // Matrix of s_i on coordinates: column c is s_i(e_c).
                let mut s = vec![vec![Q::zero(); n]; n];
                for c in 0..n {
                    let mut e = vec![0i64; n];
                    e[c] = 1;
                    reflect(&rs.cartan_matrix, i, &mut e[range.clone()]);
                    for r in 0..n {
                        s[r][c] = q(e[r]);
                    }
                }
                let conj = linalg::mul(&linalg::mul(&linalg::transpose(&s), &self.matrix), &s);
                if conj != self.matrix {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Scale factor block `k` by `s`.
    fn scale_block(&mut self, k: usize, s: &Q) {
        let range = self.algebra.factor_range(k);
        for i in range.clone() {
            for j in range.clone() {
                self.matrix[i][j] = &self.matrix[i][j] * s;
            }
        }
    }

    /// Ratio of this form to [`standard_form`] on each factor block.
    ///
    /// Only meaningful for Weyl-invariant forms, which are block-diagonal
    /// and proportional to the standard form on every block.
    pub fn factor_scalars(&self) -> Result<Vec<Q>> {
        let std = standard_form(&self.algebra)?;
        Ok((0..self.algebra.num_factors())
            .map(|k| {
                let i = self.algebra.factor_range(k).start;
                &self.matrix[i][i] / &std.matrix[i][i]
            })
            .collect())
    }

    pub fn rescaled(&self, scalars: &[Q]) -> BilinearForm {
        let mut out = self.clone();
        for (k, s) in scalars.iter().enumerate() {
            out.scale_block(k, s);
        }
        out
    }
}

/// The Weyl-invariant form with long roots of squared norm 2 on every factor.
pub fn standard_form(alg: &SemisimpleAlgebra) -> Result<BilinearForm> {
    let n = alg.rank();
    let mut matrix = vec![vec![Q::zero(); n]; n];
    for (k, rs) in alg.root_systems()?.iter().enumerate() {
        // Some simple root is long; sym2[i][i] = 2|α_i|².
        let long = qr(rs.sym2.iter().enumerate().map(|(i, r)| r[i]).max().expect("roots exist"), 2);
        let s = q(2) / long;
        let off = alg.factor_range(k).start;
        for i in 0..rs.rank() {
            for j in 0..rs.rank() {
                matrix[off + i][off + j] = &rs.fund_gram[i][j] * &s;
            }
        }
    }
    Ok(BilinearForm {
        algebra: alg.clone(),
        matrix,
    })
}

/// `Σ m_w · w wᵀ` over the weights: the form `(x, y) = Σ w(x) w(y)` on the
/// dual of weight space, in the dual basis.
pub(crate) fn dual_gram(fc: &FormalCharacter) -> QMatrix {
    let n = fc.rank();
    let mut b = vec![vec![0i128; n]; n];
    for (w, &m) in &fc.weights {
        let m = m as i128;
        for i in 0..n {
            if w[i] == 0 {
                continue;
            }
            for j in 0..n {
                b[i][j] += m * w[i] as i128 * w[j] as i128;
            }
        }
    }
    b.into_iter()
        .map(|row| row.into_iter().map(|x| Q::from_integer(x.into())).collect())
        .collect()
}

/// The form on weight space dual to `(x, y) = Σ_w w(x) w(y)`.
///
/// Fails with [`Error::Degenerate`] when some factor acts trivially.
pub fn char_inner_product(fc: &FormalCharacter) -> Result<BilinearForm> {
    for k in 0..fc.algebra.num_factors() {
        if !fc.is_faithful_on(k) {
            return Err(Error::Degenerate { factor: k });
        }
    }
    let b = dual_gram(fc);
    let matrix = linalg::inverse(&b).ok_or(Error::Degenerate { factor: 0 })?;
    Ok(BilinearForm {
        algebra: fc.algebra.clone(),
        matrix,
    })
}

/// The character-induced form under the requested normalization.
pub fn normalized_inner_product(fc: &FormalCharacter, norm: Normalization) -> Result<BilinearForm> {
    let raw = char_inner_product(fc)?;
    match norm {
        Normalization::Raw => Ok(raw),
        Normalization::Standard => {
            let s: Vec<Q> = raw.factor_scalars()?.iter().map(|x| Q::one() / x).collect();
            Ok(raw.rescaled(&s))
        }
        Normalization::RatioCanonical => {
            let mut scalars = Vec::new();
            for k in 0..fc.algebra.num_factors() {
                let range = fc.algebra.factor_range(k);
                let min = fc
                    .weights
                    .keys()
                    .map(|w| {
                        let mut p = vec![0i64; fc.rank()];
                        p[range.clone()].copy_from_slice(&w[range.clone()]);
                        raw.norm2(&p)
                    })
                    .filter(linalg::is_positive)
                    .min()
                    .expect("factor is faithful");
                scalars.push(Q::one() / min);
            }
            Ok(raw.rescaled(&scalars))
        }
    }
}

/// Pairwise inner products of the distinct weights of a character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramData {
    /// Distinct weights in lexicographic order.
    pub weights: Vec<Weight>,
    pub multiplicities: Vec<u64>,
    pub gram: QMatrix,
}

impl GramData {
    pub fn norms(&self) -> Vec<Q> {
        (0..self.weights.len()).map(|i| self.gram[i][i].clone()).collect()
    }
}

/// Gram matrix of the distinct weights under the normalized induced form.
pub fn gram_data(fc: &FormalCharacter, norm: Normalization) -> Result<GramData> {
    let form = normalized_inner_product(fc, norm)?;
    let weights: Vec<Weight> = fc.weights.keys().cloned().collect();
    let multiplicities = fc.weights.values().copied().collect();
    let gram = weights
        .iter()
        .map(|a| weights.iter().map(|b| form.pair(a, b)).collect())
        .collect();
    Ok(GramData {
        weights,
        multiplicities,
        gram,
    })
}
