use std::collections::HashMap;

use num_rational::Ratio;
use rustc_hash::FxHashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use super::types::{Family, SimpleType};
use crate::error::Result;
use crate::linalg::{self, q, qr, Q, QMatrix};

/// A simple root system in a fixed ambient Euclidean realization.
///
/// Realizations (Bourbaki node labels):
/// * `A_n`: `e_i - e_{i+1}` in the sum-zero hyperplane of `Q^{n+1}`;
/// * `B_n`, `C_n`, `D_n`: the usual vectors in `Q^n`;
/// * `E_6 ⊂ E_7 ⊂ E_8`: the even half-integral lattice in `Q^8`;
/// * `F_4` in `Q^4`, `G_2` in the sum-zero hyperplane of `Q^3`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub stype: SimpleType,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Vec<Q>>,
    /// `cartan_matrix[i][j] = 2<α_i, α_j> / <α_j, α_j>`.
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Ambient positive roots, built on first use (large for high ranks).
    ambient_roots: OnceLock<Vec<Vec<Q>>>,
    pub fundamental_weights: Vec<Vec<Q>>,
    /// Positive roots in simple-root coordinates, same order as `positive_roots`.
    pub positive_root_coords: Vec<Vec<i64>>,
    /// Positive roots in fundamental-weight coordinates.
    pub positive_roots_fund: Vec<Vec<i64>>,
    /// `2<α_i, α_j>`, always integral in these realizations.
    pub sym2: Vec<Vec<i64>>,
    /// Gram matrix `<ω_i, ω_j>` of the fundamental weights.
    pub fund_gram: QMatrix,
    /// `fund_gram` times the least common denominator of its entries.
    pub fund_gram_int: Vec<Vec<i128>>,
    /// Positive coroots in simple-coroot coordinates, sparse, same order as
    /// `positive_roots`: `⟨λ, α^∨⟩ = Σ k_i λ_i`.
    pub positive_coroots: Vec<Vec<(usize, i64)>>,
    /// For each simple index `i`, the pairs `(r, k)` with `k ≠ 0` the `i`-th
    /// coefficient of positive coroot `r`.
    pub coroots_by_index: Vec<Vec<(usize, i64)>>,
    /// `⟨ρ, α^∨⟩` for each positive coroot.
    pub coroot_heights: Vec<i64>,
}

fn unit(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = q(1);
    v
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn half_vec(entries: &[i64]) -> Vec<Q> {
    entries.iter().map(|&x| qr(x, 2)).collect()
}

fn ambient_simple_roots(t: SimpleType) -> (usize, Vec<Vec<Q>>) {
    let n = t.rank;
    let chain = |dim: usize, len: usize| -> Vec<Vec<Q>> {
        (0..len).map(|i| sub(&unit(dim, i), &unit(dim, i + 1))).collect()
    };
    match t.family {
        Family::A => (n + 1, chain(n + 1, n)),
        Family::B => {
            let mut r = chain(n, n - 1);
            r.push(unit(n, n - 1));
            (n, r)
        }
        Family::C => {
            let mut r = chain(n, n - 1);
            r.push(unit(n, n - 1).into_iter().map(|x| x * q(2)).collect());
            (n, r)
        }
        Family::D => {
            let mut r = chain(n, n - 1);
            let last: Vec<Q> = unit(n, n - 2)
                .iter()
                .zip(unit(n, n - 1))
                .map(|(a, b)| a + b)
                .collect();
            r.push(last);
            (n, r)
        }
        Family::E => {
            let e = |i: usize| unit(8, i);
            let mut r = vec![
                half_vec(&[1, -1, -1, -1, -1, -1, -1, 1]),
                e(0).iter().zip(e(1)).map(|(a, b)| a + b).collect(),
            ];
            for i in 0..6 {
                r.push(sub(&e(i + 1), &e(i)));
            }
            r.truncate(n);
            (8, r)
        }
        Family::F => (
            4,
            vec![
                sub(&unit(4, 1), &unit(4, 2)),
                sub(&unit(4, 2), &unit(4, 3)),
                unit(4, 3),
                half_vec(&[1, -1, -1, -1]),
            ],
        ),
        Family::G => (
            3,
            vec![
                sub(&unit(3, 0), &unit(3, 1)),
                vec![q(-2), q(1), q(1)],
            ],
        ),
    }
}

/// Positive roots, in simple-root coordinates, of the root system with the
/// given (finite-type) Cartan matrix. Sorted by height, then lexicographically.
pub fn positive_roots_from_cartan(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    positive_roots_with_pairings(cartan).into_iter().map(|(c, _)| c).collect()
}

/// As [`positive_roots_from_cartan`], each root paired with its
/// fundamental-weight coordinates.
fn positive_roots_with_pairings(cartan: &[Vec<i64>]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let n = cartan.len();
    // Root coefficients are at most 6, so byte keys hash quickly.
    let mut seen: FxHashMap<Vec<u8>, Vec<i64>> = FxHashMap::default();
    let mut frontier: Vec<Vec<u8>> = Vec::new();
    for i in 0..n {
        let mut v = vec![0u8; n];
        v[i] = 1;
        seen.insert(v.clone(), cartan[i].clone());
        frontier.push(v);
    }
    while let Some(beta) = frontier.pop() {
        let fund = seen[&beta].clone();
        for i in 0..n {
            let pairing = fund[i];
            let c = beta[i] as i64 - pairing;
            if pairing == 0 || !(0..=u8::MAX as i64).contains(&c) {
                continue;
            }
            let mut img = beta.clone();
            img[i] = c as u8;
            if img.iter().any(|&c| c > 0) && !seen.contains_key(&img) {
                let f = fund.iter().zip(&cartan[i]).map(|(x, a)| x - pairing * a).collect();
                seen.insert(img.clone(), f);
                frontier.push(img);
            }
        }
    }
    let mut out: Vec<(Vec<i64>, Vec<i64>)> = seen
        .into_iter()
        .map(|(k, f)| (k.into_iter().map(i64::from).collect(), f))
        .collect();
    out.sort_by(|(a, _), (b, _)| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    out
}

/// Small exact rationals; Cartan inverses have tiny entries.
type R = Ratio<i128>;

/// Inverse of a matrix whose off-diagonal support is a forest (every Cartan
/// matrix of finite type), by eliminating leaves first so nothing fills in.
fn forest_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<R>>> {
    let n = m.len();
    let e = |i: usize, j: usize| R::from_integer(m[i][j] as i128);
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && m[i][j] != 0).collect())
        .collect();
    let mut degree: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let mut done = vec![false; n];
    let mut diag: Vec<R> = (0..n).map(|i| e(i, i)).collect();
    // (leaf, parent) in elimination order; no parent for the last of a tree.
    let mut order: Vec<(usize, Option<usize>)> = Vec::with_capacity(n);
    let mut stack: Vec<usize> = (0..n).filter(|&i| degree[i] <= 1).collect();
    while let Some(l) = stack.pop() {
        if done[l] {
            continue;
        }
        done[l] = true;
        if diag[l].is_zero() {
            return None;
        }
        let parent = nbrs[l].iter().copied().find(|&p| !done[p]);
        if let Some(p) = parent {
            // Row p -= (m[p][l] / d_l) · row l only touches (p, p).
            let sub = e(p, l) / diag[l] * e(l, p);
            diag[p] -= sub;
            degree[p] -= 1;
            if degree[p] <= 1 {
                stack.push(p);
            }
        }
        order.push((l, parent));
    }
    if order.len() != n {
        return None;
    }
    let mut inv = vec![vec![R::zero(); n]; n];
    for col in 0..n {
        let mut b = vec![R::zero(); n];
        b[col] = R::from_integer(1);
        for &(l, parent) in &order {
            if let (Some(p), false) = (parent, b[l].is_zero()) {
                let sub = e(p, l) / diag[l] * b[l];
                b[p] -= sub;
            }
        }
        let mut x = vec![R::zero(); n];
        for &(l, parent) in order.iter().rev() {
            let r = match parent {
                Some(p) => b[l] - e(l, p) * x[p],
                None => b[l],
            };
            x[l] = r / diag[l];
        }
        for (i, v) in x.into_iter().enumerate() {
            inv[i][col] = v;
        }
    }
    Some(inv)
}

fn big(x: &R) -> Q {
    Q::new((*x.numer()).into(), (*x.denom()).into())
}

/// Cartan integers `2<a_i, a_j>/<a_j, a_j>` of a family of ambient vectors.
pub fn cartan_of(vectors: &[Vec<Q>]) -> Vec<Vec<i64>> {
    vectors
        .iter()
        .map(|ai| {
            vectors
                .iter()
                .map(|aj| {
                    let v = q(2) * linalg::dot(ai, aj) / linalg::dot(aj, aj);
                    linalg::to_i64(&v).expect("Cartan integer must be integral")
                })
                .collect()
        })
        .collect()
}

impl RootSystem {
    pub fn new(stype: SimpleType) -> Self {
        let (ambient_dim, simple_roots) = ambient_simple_roots(stype);
        let n = stype.rank;
        let scaled = ScaledRoots::new(&simple_roots);
        let sym2: Vec<Vec<i64>> = scaled
            .rows
            .iter()
            .map(|a| {
                scaled
                    .rows
                    .iter()
                    .map(|b| {
                        let d: i64 = a
                            .iter()
                            .filter_map(|&(j, x)| b.iter().find(|&&(k, _)| k == j).map(|&(_, y)| x * y))
                            .sum();
                        let d2 = scaled.denom * scaled.denom;
                        assert_eq!(2 * d % d2, 0, "integral form");
                        2 * d / d2
                    })
                    .collect()
            })
            .collect();
        let cartan_matrix: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * sym2[i][j] / sym2[j][j]).collect())
            .collect();
        let (positive_root_coords, positive_roots_fund): (Vec<Vec<i64>>, Vec<Vec<i64>>) =
            positive_roots_with_pairings(&cartan_matrix).into_iter().unzip();
        let inv = forest_inverse(&cartan_matrix).expect("Dynkin diagrams are forests");
        let fundamental_weights: Vec<Vec<Q>> = inv
            .iter()
            .map(|row| {
                let mut w = vec![R::zero(); ambient_dim];
                for (coef, root) in row.iter().zip(&scaled.rows) {
                    if coef.is_zero() {
                        continue;
                    }
                    for &(j, y) in root {
                        w[j] += coef * R::new(y as i128, scaled.denom as i128);
                    }
                }
                w.iter().map(big).collect()
            })
            .collect();
        // ⟨ω_i, ω_j⟩ = (C⁻¹)_ij |α_j|²/2, and sym2_jj = 2|α_j|².
        let gram: Vec<Vec<R>> = inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&sym2)
                    .enumerate()
                    .map(|(j, (c, s))| c * R::new(s[j] as i128, 4))
                    .collect()
            })
            .collect();
        let lcd = gram.iter().flatten().fold(1i128, |l, x| num_integer::lcm(l, *x.denom()));
        let fund_gram_int = gram
            .iter()
            .map(|row| row.iter().map(|x| (x * lcd).to_integer()).collect())
            .collect();
        let fund_gram = gram.iter().map(|row| row.iter().map(big).collect()).collect();
        // α^∨ = Σ c_i (|α_i|²/|α|²) α_i^∨, integral in every coordinate.
        let sym2_rows: Vec<Vec<(usize, i64)>> = sym2
            .iter()
            .map(|row| row.iter().copied().enumerate().filter(|(_, x)| *x != 0).collect())
            .collect();
        let positive_coroots: Vec<Vec<(usize, i64)>> = positive_root_coords
            .iter()
            .map(|c| {
                let support: Vec<usize> = (0..n).filter(|&i| c[i] != 0).collect();
                let len2: i64 = support
                    .iter()
                    .map(|&i| c[i] * sym2_rows[i].iter().map(|&(j, s)| s * c[j]).sum::<i64>())
                    .sum();
                support.iter().map(|&i| (i, c[i] * sym2[i][i] / len2)).collect()
            })
            .collect();
        let coroot_heights = positive_coroots.iter().map(|k| k.iter().map(|&(_, c)| c).sum()).collect();
        let mut coroots_by_index = vec![Vec::new(); n];
        for (r, k) in positive_coroots.iter().enumerate() {
            for &(i, c) in k {
                coroots_by_index[i].push((r, c));
            }
        }
        RootSystem {
            stype,
            ambient_dim,
            simple_roots,
            cartan_matrix,
            ambient_roots: OnceLock::new(),
            fundamental_weights,
            positive_root_coords,
            positive_roots_fund,
            sym2,
            fund_gram,
            fund_gram_int,
            positive_coroots,
            coroots_by_index,
            coroot_heights,
        }
    }

    pub fn rank(&self) -> usize {
        self.stype.rank
    }

    /// Positive roots as ambient vectors, in the order of
    /// `positive_root_coords`.
    pub fn positive_roots(&self) -> &[Vec<Q>] {
        self.ambient_roots.get_or_init(|| {
            let scaled = ScaledRoots::new(&self.simple_roots);
            self.positive_root_coords
                .iter()
                .map(|c| scaled.combine(c, self.ambient_dim))
                .collect()
        })
    }

    /// Positive roots followed by their negatives.
    pub fn roots(&self) -> Vec<Vec<Q>> {
        let mut all = self.positive_roots().to_vec();
        all.extend(
            self.positive_roots()
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Vec<Q>>()),
        );
        all
    }

    /// Ambient vector of a weight given in fundamental-weight coordinates.
    pub fn to_ambient(&self, coords: &[i64]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.ambient_dim];
        for (&c, w) in coords.iter().zip(&self.fundamental_weights) {
            if c != 0 {
                let c = q(c);
                for (x, y) in v.iter_mut().zip(w) {
                    *x += &c * y;
                }
            }
        }
        v
    }

    /// Fundamental-weight coordinates `<v, α_i^∨>` of an ambient vector, when
    /// they are all integral.
    pub fn from_ambient(&self, v: &[Q]) -> Option<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|a| linalg::to_i64(&(q(2) * linalg::dot(v, a) / linalg::dot(a, a))))
            .collect()
    }

    /// Simple reflection `s_i` on an ambient vector.
    pub fn reflect_ambient(&self, i: usize, v: &[Q]) -> Vec<Q> {
        let a = &self.simple_roots[i];
        let c = q(2) * linalg::dot(v, a) / linalg::dot(a, a);
        v.iter().zip(a).map(|(x, y)| x - &c * y).collect()
    }

    /// The highest root, in simple-root coordinates.
    pub fn highest_root_coords(&self) -> &[i64] {
        self.positive_root_coords.last().expect("nonempty")
    }

    /// `⟨λ, α^∨⟩` for every positive root α, in the order of `positive_roots`.
    pub fn coroot_pairings(&self, coords: &[i64]) -> Vec<Q> {
        let n = self.rank();
        self.positive_root_coords
            .iter()
            .map(|c| {
                let len2: i64 = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .map(|(i, j)| c[i] * c[j] * self.sym2[i][j])
                    .sum();
                let mut num = 0i64;
                for i in 0..n {
                    num += c[i] * self.sym2[i][i] * coords[i];
                }
                qr(num, len2)
            })
            .collect()
    }
}

/// Simple roots as sparse integer vectors over a common denominator.
struct ScaledRoots {
    denom: i64,
    rows: Vec<Vec<(usize, i64)>>,
}

impl ScaledRoots {
    fn new(simple_roots: &[Vec<Q>]) -> Self {
        let denom = simple_roots
            .iter()
            .flatten()
            .map(|x| linalg::to_i64(&Q::from_integer(x.denom().clone())).expect("small denominators"))
            .fold(1i64, num_integer::lcm);
        let rows = simple_roots
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(j, x)| (j, linalg::to_i64(&(x * q(denom))).expect("integral after scaling")))
                    .collect()
            })
            .collect();
        ScaledRoots { denom, rows }
    }

    fn combine(&self, coefs: &[i64], dim: usize) -> Vec<Q> {
        let mut v = vec![0i64; dim];
        for (&c, r) in coefs.iter().zip(&self.rows) {
            if c != 0 {
                for &(j, y) in r {
                    v[j] += c * y;
                }
            }
        }
        v.into_iter().map(|x| if x == 0 { Q::zero() } else { qr(x, self.denom) }).collect()
    }
}

fn cache() -> &'static Mutex<HashMap<SimpleType, Arc<RootSystem>>> {
    static CACHE: OnceLock<Mutex<HashMap<SimpleType, Arc<RootSystem>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Root systems of rank above this are cached only a few at a time: their
/// root tables grow like the cube of the rank.
const LARGE_RANK: usize = 24;
const MAX_LARGE_CACHED: usize = 4;

/// Builds (or fetches from the process-wide cache) the root system of a type.
pub fn build_root_system(stype: SimpleType) -> Result<Arc<RootSystem>> {
    let stype = SimpleType::new(stype.family, stype.rank)?;
    if let Some(rs) = cache().lock().expect("cache poisoned").get(&stype) {
        return Ok(Arc::clone(rs));
    }
    let rs = Arc::new(RootSystem::new(stype));
    let mut c = cache().lock().expect("cache poisoned");
    if stype.rank > LARGE_RANK && c.keys().filter(|t| t.rank > LARGE_RANK).count() >= MAX_LARGE_CACHED {
        c.retain(|t, _| t.rank <= LARGE_RANK);
    }
    c.insert(stype, Arc::clone(&rs));
    Ok(rs)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn forest_inverse_matches_dense_inverse() {
        for t in all_test_types() {
            let c = cartan_of(&ambient_simple_roots(t).1);
            let inv = forest_inverse(&c).unwrap();
            let inv: QMatrix = inv.iter().map(|r| r.iter().map(big).collect()).collect();
            assert_eq!(Some(inv), linalg::inverse(&linalg::from_int(&c)), "{t}");
        }
        let cycle = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert_eq!(forest_inverse(&cycle), None);
    }

    fn all_test_types() -> Vec<SimpleType> {
        let mut v: Vec<SimpleType> = (1..=6).map(SimpleType::a).collect();
        v.extend((2..=5).map(SimpleType::b));
        v.extend((3..=5).map(SimpleType::c));
        v.extend((4..=6).map(SimpleType::d));
        v.extend([SimpleType::e(6), SimpleType::e(7), SimpleType::e(8)]);
        v.extend([SimpleType::F4, SimpleType::G2]);
        v
    }

    #[test]
    fn a2_and_g2_basics() {
        let a2 = build_root_system(SimpleType::a(2)).unwrap();
        assert_eq!(a2.positive_roots().len(), 3);
        assert_eq!(a2.roots().len(), 6);
        let g2 = build_root_system(SimpleType::G2).unwrap();
        assert_eq!(g2.roots().len(), 12);
        assert_eq!(g2.cartan_matrix, vec![vec![2, -1], vec![-3, 2]]);
    }

    #[test]
    fn positive_root_counts_match_classical_formulas() {
        for t in all_test_types() {
            let rs = build_root_system(t).unwrap();
            assert_eq!(rs.positive_roots().len(), t.num_positive_roots(), "{t}");
        }
    }

    #[test]
    fn e7_has_126_roots_by_reflection_closure() {
        // Independent of the Cartan-matrix closure: close the ambient simple
        // roots under ambient reflections.
        let rs = build_root_system(SimpleType::e(7)).unwrap();
        let mut seen: HashSet<Vec<Q>> = rs.simple_roots.iter().cloned().collect();
        let mut stack: Vec<Vec<Q>> = seen.iter().cloned().collect();
        while let Some(v) = stack.pop() {
            for i in 0..rs.rank() {
                let w = rs.reflect_ambient(i, &v);
                if seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
        assert_eq!(seen.len(), 126);
    }

    #[test]
    fn simple_reflections_preserve_root_set() {
        for t in all_test_types() {
            let rs = build_root_system(t).unwrap();
            let roots: HashSet<Vec<Q>> = rs.roots().into_iter().collect();
            for i in 0..rs.rank() {
                for r in &roots {
                    assert!(roots.contains(&rs.reflect_ambient(i, r)), "{t}");
                }
            }
        }
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for t in all_test_types() {
            let rs = build_root_system(t).unwrap();
            for (i, w) in rs.fundamental_weights.iter().enumerate() {
                let coords = rs.from_ambient(w).unwrap();
                let mut expect = vec![0; rs.rank()];
                expect[i] = 1;
                assert_eq!(coords, expect, "{t}");
            }
        }
    }

    #[test]
    fn fundamental_gram_matches_ambient_dot_products() {
        for t in all_test_types() {
            let rs = build_root_system(t).unwrap();
            for (i, a) in rs.fundamental_weights.iter().enumerate() {
                for (j, b) in rs.fundamental_weights.iter().enumerate() {
                    assert_eq!(rs.fund_gram[i][j], linalg::dot(a, b), "{t} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn cartan_matrix_matches_ambient_pairing() {
        for t in all_test_types() {
            let rs = build_root_system(t).unwrap();
            assert_eq!(cartan_of(&rs.simple_roots), rs.cartan_matrix);
            for i in 0..rs.rank() {
                assert_eq!(rs.cartan_matrix[i][i], 2);
            }
        }
    }

    #[test]
    fn bourbaki_labels_for_exceptional_types() {
        // E8: node 2 hangs off node 4; chain 1-3-4-5-6-7-8.
        let e8 = build_root_system(SimpleType::e(8)).unwrap();
        let a = &e8.cartan_matrix;
        assert_eq!(a[1][3], -1);
        assert_eq!(a[0][2], -1);
        assert_eq!(a[0][1], 0);
        assert_eq!(e8.highest_root_coords(), &[2, 3, 4, 6, 5, 4, 3, 2]);
        let f4 = build_root_system(SimpleType::F4).unwrap();
        assert_eq!(f4.cartan_matrix[1][2], -2);
        assert_eq!(f4.cartan_matrix[2][1], -1);
    }
}
