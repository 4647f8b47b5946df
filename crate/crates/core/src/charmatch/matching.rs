use std::collections::BTreeMap;

use num_traits::Zero;

use super::form::to_q;
use crate::linalg::{self, q, Q, QMatrix};
use crate::reps::FormalCharacter;
use crate::rootsys::Weight;

/// A linear isomorphism of weight spaces carrying one character onto another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharIsomorphism {
    pub source: FormalCharacter,
    pub target: FormalCharacter,
    /// `target_rank × source_rank`, acting on column vectors of
    /// fundamental-weight coordinates.
    pub map: QMatrix,
    /// Source weight ↦ image, over the distinct source weights.
    pub matching: Vec<(Weight, Weight)>,
}

impl CharIsomorphism {
    pub fn apply(&self, w: &[i64]) -> Vec<Q> {
        linalg::mul_vec(&self.map, &to_q(w))
    }

    /// Re-checks the witness from scratch: the map is invertible and sends
    /// the source multiset exactly onto the target multiset.
    pub fn verify(&self) -> bool {
        if self.map.len() != self.target.rank()
            || self.map.iter().any(|r| r.len() != self.source.rank())
            || linalg::rank(&self.map) != self.source.rank()
        {
            return false;
        }
        let mut image: BTreeMap<Weight, u64> = BTreeMap::new();
        for (w, &m) in &self.source.weights {
            let v = self.apply(w);
            let Some(coords) = v.iter().map(linalg::to_i64).collect::<Option<Vec<i64>>>() else {
                return false;
            };
            *image.entry(Weight(coords)).or_insert(0) += m;
        }
        image == self.target.weights
    }

    /// The inverse witness, from target to source.
    pub fn inverse(&self) -> Option<CharIsomorphism> {
        Some(CharIsomorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            map: linalg::inverse(&self.map)?,
            matching: self.matching.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        })
    }
}

/// Distinct weights of a character with their span data and induced Gram matrix.
struct Prepared {
    weights: Vec<Weight>,
    mults: Vec<u64>,
    /// Indices (into `weights`) of a basis of the span, chosen greedily.
    basis: Vec<usize>,
    /// Coordinates of each weight in that basis.
    coords: Vec<Vec<Q>>,
    gram: QMatrix,
    /// Per weight: sorted `(⟨w, u⟩, mult(u))` over all distinct `u`.
    profiles: Vec<Vec<(Q, u64)>>,
}

/// Solves `Σ x_i b_i = v` for `v` in the span of the independent `b_i`.
fn span_coordinates(basis: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    // Normal equations: (BᵀB) x = Bᵀ v, with BᵀB invertible.
    let g: QMatrix = basis
        .iter()
        .map(|a| basis.iter().map(|b| linalg::dot(a, b)).collect())
        .collect();
    let rhs: Vec<Q> = basis.iter().map(|a| linalg::dot(a, v)).collect();
    let inv = linalg::inverse(&g).expect("basis is independent");
    linalg::mul_vec(&inv, &rhs)
}

fn prepare(fc: &FormalCharacter) -> Prepared {
    let mut weights: Vec<Weight> = fc.weights.keys().cloned().collect();
    let vecs: Vec<Vec<Q>> = weights.iter().map(|w| to_q(w)).collect();
    let basis_vecs_idx = linalg::independent_subset(&vecs);
    let basis_vecs: Vec<Vec<Q>> = basis_vecs_idx.iter().map(|&i| vecs[i].clone()).collect();
    let raw_coords: Vec<Vec<Q>> = vecs.iter().map(|v| span_coordinates(&basis_vecs, v)).collect();
    let s = basis_vecs.len();
    // (x, y) = Σ m_w w(x) w(y) on the dual of the span; invert for the form.
    let mut b = vec![vec![Q::zero(); s]; s];
    for (w, c) in weights.iter().zip(&raw_coords) {
        let m = q(fc.weights[w] as i64);
        for i in 0..s {
            for j in 0..s {
                b[i][j] += &m * &c[i] * &c[j];
            }
        }
    }
    let form = if s == 0 {
        Vec::new()
    } else {
        linalg::inverse(&b).expect("span form is nondegenerate")
    };
    let pair = |x: &[Q], y: &[Q]| linalg::bilinear(&form, x, y);
    // Order by (norm, lexicographic weight).
    let norms: Vec<Q> = raw_coords.iter().map(|c| pair(c, c)).collect();
    let mut order: Vec<usize> = (0..weights.len()).collect();
    order.sort_by(|&a, &b| norms[a].cmp(&norms[b]).then_with(|| weights[a].cmp(&weights[b])));
    weights = order.iter().map(|&i| weights[i].clone()).collect();
    let coords: Vec<Vec<Q>> = order.iter().map(|&i| raw_coords[i].clone()).collect();
    let mults: Vec<u64> = weights.iter().map(|w| fc.weights[w]).collect();
    let gram: QMatrix = coords
        .iter()
        .map(|a| coords.iter().map(|b| pair(a, b)).collect())
        .collect();
    let profiles = gram
        .iter()
        .map(|row| {
            let mut p: Vec<(Q, u64)> = row.iter().cloned().zip(mults.iter().copied()).collect();
            p.sort();
            p
        })
        .collect();
    // Greedy basis in the search order, re-expressed in its own coordinates.
    let ordered_vecs: Vec<Vec<Q>> = weights.iter().map(|w| to_q(w)).collect();
    let basis = linalg::independent_subset(&ordered_vecs);
    let bv: Vec<Vec<Q>> = basis.iter().map(|&i| ordered_vecs[i].clone()).collect();
    let coords = ordered_vecs.iter().map(|v| span_coordinates(&bv, v)).collect();
    Prepared {
        weights,
        mults,
        basis,
        coords,
        gram,
        profiles,
    }
}

/// Extends independent vectors to a basis of `Q^n` with unit vectors.
fn extend_to_basis(vs: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    let mut out = vs.to_vec();
    for i in 0..n {
        let mut e = vec![Q::zero(); n];
        e[i] = q(1);
        out.push(e);
        if linalg::rank(&out) < out.len() {
            out.pop();
        }
    }
    out
}

fn columns(vs: &[Vec<Q>]) -> QMatrix {
    linalg::transpose(&vs.to_vec())
}

struct Search<'a> {
    a: &'a Prepared,
    b: &'a Prepared,
    candidates: Vec<Vec<usize>>,
    assign: Vec<usize>,
    used: Vec<bool>,
    /// Position after which the assignment is forced by linearity.
    forced_from: usize,
    target_index: BTreeMap<Weight, usize>,
}

impl Search<'_> {
    fn consistent(&self, i: usize, j: usize) -> bool {
        (0..i).all(|k| self.a.gram[i][k] == self.b.gram[j][self.assign[k]])
    }

    /// With the basis assigned, every remaining image is `Σ x_i F(b_i)`.
    fn complete_by_linearity(&mut self) -> bool {
        let images: Vec<Vec<Q>> = self
            .a
            .basis
            .iter()
            .map(|&i| to_q(&self.b.weights[self.assign[i]]))
            .collect();
        let dim = self.b.weights.first().map_or(0, |w| w.len());
        let start = self.assign.len();
        for u in start..self.a.weights.len() {
            let mut v = vec![Q::zero(); dim];
            for (x, img) in self.a.coords[u].iter().zip(&images) {
                for (t, y) in v.iter_mut().zip(img) {
                    *t += x * y;
                }
            }
            let hit = v
                .iter()
                .map(linalg::to_i64)
                .collect::<Option<Vec<i64>>>()
                .and_then(|c| self.target_index.get(&Weight(c)).copied())
                .filter(|&j| !self.used[j] && self.b.mults[j] == self.a.mults[u]);
            match hit {
                Some(j) => {
                    self.used[j] = true;
                    self.assign.push(j);
                }
                None => {
                    for &j in &self.assign[start..] {
                        self.used[j] = false;
                    }
                    self.assign.truncate(start);
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self) -> bool {
        let i = self.assign.len();
        if i >= self.forced_from {
            return self.complete_by_linearity();
        }
        for c in 0..self.candidates[i].len() {
            let j = self.candidates[i][c];
            if self.used[j] || !self.consistent(i, j) {
                continue;
            }
            self.used[j] = true;
            self.assign.push(j);
            if self.run() {
                return true;
            }
            self.assign.pop();
            self.used[j] = false;
        }
        false
    }
}

/// Searches for a linear isomorphism of weight spaces carrying `fc1` onto
/// `fc2` (with multiplicities), returning the first witness in search order.
///
/// Such a map preserves the character-induced forms exactly, so the search
/// backtracks over bijections of distinct weights that preserve
/// multiplicities and Gram entries, pruned by norm and by each weight's
/// multiset of inner products. Source weights are taken in order of
/// (norm, coordinates); once a basis of the span is assigned the rest of the
/// map is forced and checked directly. Characters whose weights do not span
/// are compared on their spans, which is equivalent since any isomorphism of
/// spans extends to the whole space.
pub fn same_formal_character(
    fc1: &FormalCharacter,
    fc2: &FormalCharacter,
) -> Option<CharIsomorphism> {
    if fc1.dim() != fc2.dim()
        || fc1.rank() != fc2.rank()
        || fc1.num_distinct() != fc2.num_distinct()
    {
        return None;
    }
    let a = prepare(fc1);
    let b = prepare(fc2);
    if a.basis.len() != b.basis.len() {
        return None;
    }
    let key = |p: &Prepared, i: usize| (p.mults[i], p.profiles[i].clone());
    let mut ka: Vec<_> = (0..a.weights.len()).map(|i| key(&a, i)).collect();
    let mut kb: Vec<_> = (0..b.weights.len()).map(|i| key(&b, i)).collect();
    ka.sort();
    kb.sort();
    if ka != kb {
        return None;
    }
    let candidates = (0..a.weights.len())
        .map(|i| {
            (0..b.weights.len())
                .filter(|&j| a.mults[i] == b.mults[j] && a.profiles[i] == b.profiles[j])
                .collect()
        })
        .collect();
    let forced_from = a.basis.last().map_or(0, |&i| i + 1);
    let mut search = Search {
        a: &a,
        b: &b,
        candidates,
        assign: Vec::new(),
        used: vec![false; b.weights.len()],
        forced_from,
        target_index: b.weights.iter().cloned().enumerate().map(|(j, w)| (w, j)).collect(),
    };
    if !search.run() {
        return None;
    }
    // Linear map: the span bases correspond, complements are matched by
    // extending each side with unit vectors.
    let n = fc1.rank();
    let src: Vec<Vec<Q>> = a.basis.iter().map(|&i| to_q(&a.weights[i])).collect();
    let dst: Vec<Vec<Q>> = a.basis.iter().map(|&i| to_q(&b.weights[search.assign[i]])).collect();
    let p1 = columns(&extend_to_basis(&src, n));
    let p2 = columns(&extend_to_basis(&dst, n));
    let map = linalg::mul(&p2, &linalg::inverse(&p1)?);
    let mut matching: Vec<(Weight, Weight)> = (0..a.weights.len())
        .map(|i| (a.weights[i].clone(), b.weights[search.assign[i]].clone()))
        .collect();
    matching.sort();
    let iso = CharIsomorphism {
        source: fc1.clone(),
        target: fc2.clone(),
        map,
        matching,
    };
    debug_assert!(iso.verify());
    Some(iso)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{irreducible, SemisimpleAlgebra};
    use crate::rootsys::SimpleType;

    #[test]
    fn g2_seven_matches_sl3_std_plus_dual_plus_one() {
        let g2 = irreducible(SimpleType::G2, &[1, 0]).unwrap();
        let std = irreducible(SimpleType::a(2), &[1, 0]).unwrap();
        let sum = std
            .direct_sum(&std.dual())
            .unwrap()
            .direct_sum(&FormalCharacter::trivial(std.algebra.clone(), 1))
            .unwrap();
        let iso = same_formal_character(&g2, &sum).expect("witness");
        assert!(iso.verify());
        assert!(iso.inverse().unwrap().verify());
    }

    #[test]
    fn std_and_dual_of_sl5() {
        let std = irreducible(SimpleType::a(4), &[1, 0, 0, 0]).unwrap();
        let iso = same_formal_character(&std, &std.dual()).unwrap();
        assert!(iso.verify());
        assert!(same_formal_character(&std, &std).unwrap().verify());
    }

    #[test]
    fn different_characters_do_not_match() {
        let alt = irreducible(SimpleType::a(3), &[0, 1, 0]).unwrap();
        let std = irreducible(SimpleType::a(3), &[1, 0, 0]).unwrap();
        // Different sizes.
        let sum = std.direct_sum(&std.dual()).unwrap();
        assert!(same_formal_character(&alt, &sum).is_none());
        // Same size and rank: Λ²Std of sl4 contains w and -w, Std ⊠ Std of
        // sl3 × sl2 never does.
        let a2 = irreducible(SimpleType::a(2), &[1, 0]).unwrap();
        let a1 = irreducible(SimpleType::a(1), &[1]).unwrap();
        assert!(same_formal_character(&alt, &a2.outer_tensor(&a1)).is_none());
    }

    #[test]
    fn sp6_std_matches_sl4_alt2() {
        // Both are {±e_1, ±e_2, ±e_3} in rank 3.
        let alt = irreducible(SimpleType::a(3), &[0, 1, 0]).unwrap();
        let sp6 = irreducible(SimpleType::c(3), &[1, 0, 0]).unwrap();
        assert!(same_formal_character(&alt, &sp6).unwrap().verify());
    }

    #[test]
    fn b2_std_matches_a1a1_std_std_plus_one() {
        // so5 Std restricted to so4 = sl2 × sl2.
        let so5 = irreducible(SimpleType::b(2), &[1, 0]).unwrap();
        let alg: SemisimpleAlgebra = "A1+A1".parse().unwrap();
        let a = irreducible(SimpleType::a(1), &[1]).unwrap();
        let ss = a.outer_tensor(&a).direct_sum(&FormalCharacter::trivial(alg, 1)).unwrap();
        assert!(same_formal_character(&so5, &ss).unwrap().verify());
    }

    #[test]
    fn non_spanning_characters_compare_on_spans() {
        let alg: SemisimpleAlgebra = "A1+A1".parse().unwrap();
        let a = irreducible(SimpleType::a(1), &[1]).unwrap();
        let t = irreducible(SimpleType::a(1), &[0]).unwrap();
        let left = a.outer_tensor(&t);
        let right = t.outer_tensor(&a);
        assert_eq!(left.algebra, alg);
        let iso = same_formal_character(&left, &right).unwrap();
        assert!(iso.verify());
    }
}
