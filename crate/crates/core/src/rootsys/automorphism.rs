use serde::{Deserialize, Serialize};

use super::system::build_root_system;
use super::types::SimpleType;
use super::weyl::Weight;
use crate::error::{Error, Result};

/// An integer matrix of order 1 or 2 acting on fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeInvolution {
    pub matrix: Vec<Vec<i64>>,
    pub order: u8,
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn is_identity(m: &[Vec<i64>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, r)| r.iter().enumerate().all(|(j, &x)| x == i64::from(i == j)))
}

impl LatticeInvolution {
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInvolution("matrix is not square".into()));
        }
        let order = if is_identity(&matrix) {
            1
        } else if is_identity(&mat_mul(&matrix, &matrix)) {
            2
        } else {
            return Err(Error::InvalidInvolution("matrix does not square to the identity".into()));
        };
        Ok(LatticeInvolution { matrix, order })
    }

    pub fn identity(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        LatticeInvolution { matrix, order: 1 }
    }

    /// `w ↦ -w`.
    pub fn negation(n: usize) -> Self {
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| -i64::from(i == j)).collect())
            .collect();
        LatticeInvolution { matrix, order: 2 }
    }

    /// The permutation matrix sending coordinate `i` to coordinate `perm[i]`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut matrix = vec![vec![0; n]; n];
        for (i, &p) in perm.iter().enumerate() {
            matrix[p][i] = 1;
        }
        Self::new(matrix)
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(w.iter()).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }
}

/// Automorphisms of the Dynkin diagram, as permutations of the nodes.
#[derive(Debug, Clone)]
pub struct DiagramAutomorphisms {
    pub stype: SimpleType,
    /// Every group element as a node permutation (identity first).
    pub permutations: Vec<Vec<usize>>,
    /// Elements of order ≤ 2, as maps on fundamental-weight coordinates.
    pub involutions: Vec<LatticeInvolution>,
    /// Elements of order 3 (only `D_4` has any).
    pub order_three: Vec<Vec<usize>>,
}

impl DiagramAutomorphisms {
    pub fn group_order(&self) -> usize {
        self.permutations.len()
    }

    /// Involutions other than the identity.
    pub fn nontrivial_involutions(&self) -> impl Iterator<Item = &LatticeInvolution> {
        self.involutions.iter().filter(|i| i.order == 2)
    }
}

fn perm_order(p: &[usize]) -> usize {
    let mut cur: Vec<usize> = p.to_vec();
    let mut k = 1;
    while cur.iter().enumerate().any(|(i, &x)| i != x) {
        cur = cur.iter().map(|&x| p[x]).collect();
        k += 1;
    }
    k
}

/// All permutations `π` of the nodes with `A[π i][π j] = A[i][j]`, by backtracking.
pub fn diagram_automorphisms(stype: SimpleType) -> Result<DiagramAutomorphisms> {
    let rs = build_root_system(stype)?;
    let a = &rs.cartan_matrix;
    let n = a.len();
    let mut perms = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn search(
        a: &[Vec<i64>],
        cur: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = a.len();
        let i = cur.len();
        if i == n {
            out.push(cur.clone());
            return;
        }
        for img in 0..n {
            if used[img] {
                continue;
            }
            let ok = (0..i).all(|j| a[i][j] == a[img][cur[j]] && a[j][i] == a[cur[j]][img]);
            if ok {
                used[img] = true;
                cur.push(img);
                search(a, cur, used, out);
                cur.pop();
                used[img] = false;
            }
        }
    }
    search(a, &mut cur, &mut used, &mut perms);
    perms.sort();
    let ident: Vec<usize> = (0..n).collect();
    if let Some(pos) = perms.iter().position(|p| *p == ident) {
        perms.swap(0, pos);
        perms[1..].sort();
    }
    let mut involutions = Vec::new();
    let mut order_three = Vec::new();
    for p in &perms {
        match perm_order(p) {
            1 | 2 => involutions.push(LatticeInvolution::from_permutation(p)?),
            3 => order_three.push(p.clone()),
            _ => {}
        }
    }
    Ok(DiagramAutomorphisms {
        stype,
        permutations: perms,
        involutions,
        order_three,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        for n in 2..=6 {
            assert_eq!(diagram_automorphisms(SimpleType::a(n)).unwrap().group_order(), 2);
        }
        assert_eq!(diagram_automorphisms(SimpleType::a(1)).unwrap().group_order(), 1);
        for n in 5..=7 {
            assert_eq!(diagram_automorphisms(SimpleType::d(n)).unwrap().group_order(), 2);
        }
        let d4 = diagram_automorphisms(SimpleType::d(4)).unwrap();
        assert_eq!(d4.group_order(), 6);
        assert_eq!(d4.order_three.len(), 2);
        assert_eq!(d4.nontrivial_involutions().count(), 3);
        assert_eq!(diagram_automorphisms(SimpleType::e(6)).unwrap().group_order(), 2);
        for t in [
            SimpleType::b(3),
            SimpleType::c(3),
            SimpleType::e(7),
            SimpleType::e(8),
            SimpleType::F4,
            SimpleType::G2,
        ] {
            assert_eq!(diagram_automorphisms(t).unwrap().group_order(), 1, "{t}");
        }
    }

    #[test]
    fn a5_involution_reverses_the_diagram() {
        let auts = diagram_automorphisms(SimpleType::a(5)).unwrap();
        let inv: Vec<_> = auts.nontrivial_involutions().collect();
        assert_eq!(inv.len(), 1);
        assert_eq!(inv[0].apply(&Weight(vec![1, 2, 3, 4, 5])), Weight(vec![5, 4, 3, 2, 1]));
    }

    #[test]
    fn rejects_non_involutions() {
        assert!(LatticeInvolution::new(vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]).is_err());
        assert_eq!(LatticeInvolution::negation(3).order, 2);
        assert_eq!(LatticeInvolution::new(vec![vec![1, 0], vec![0, 1]]).unwrap().order, 1);
    }
}
