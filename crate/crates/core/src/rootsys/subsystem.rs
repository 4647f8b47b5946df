use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use super::system::{build_root_system, cartan_of, RootSystem};
use super::types::{Family, SimpleType};
use crate::error::{Error, Result};
use crate::linalg::{self, Q};

/// A root subsystem given by a simple system of parent roots.
///
/// `selected_roots` is the concatenation of the components' simple roots,
/// each component in Bourbaki order for its type, components ordered as in
/// `component_types`.
#[derive(Debug, Clone)]
pub struct Subsystem {
    pub parent: Arc<RootSystem>,
    pub selected_roots: Vec<Vec<Q>>,
    pub component_types: Vec<SimpleType>,
}

/// Order used for component lists: larger rank first, then family letter.
pub fn component_order(a: &SimpleType, b: &SimpleType) -> Ordering {
    b.rank.cmp(&a.rank).then(a.family.cmp(&b.family))
}

fn signature_key(types: &[SimpleType]) -> Vec<(std::cmp::Reverse<usize>, Family)> {
    types
        .iter()
        .map(|t| (std::cmp::Reverse(t.rank), t.family))
        .collect()
}

impl Subsystem {
    /// The whole root system viewed as a subsystem of itself.
    pub fn identity(parent: Arc<RootSystem>) -> Self {
        Subsystem {
            selected_roots: parent.simple_roots.clone(),
            component_types: vec![parent.stype],
            parent,
        }
    }

    /// Builds a subsystem from an arbitrary linearly independent set of roots
    /// whose Cartan matrix is of finite type. Components are identified and
    /// the roots reordered into Bourbaki order.
    pub fn from_roots(parent: Arc<RootSystem>, roots: Vec<Vec<Q>>) -> Result<Self> {
        if linalg::rank(&roots) != roots.len() {
            return Err(Error::RankMismatch(
                "selected roots are linearly dependent".into(),
            ));
        }
        let parent_roots: BTreeSet<Vec<Q>> = parent.roots().into_iter().collect();
        if roots.iter().any(|r| !parent_roots.contains(r)) {
            return Err(Error::RankMismatch(
                "selected vector is not a root of the parent".into(),
            ));
        }
        let mut comps = identify_components(&roots)?;
        comps.sort_by(|a, b| component_order(&a.0, &b.0));
        let mut selected = Vec::new();
        let mut types = Vec::new();
        for (t, order) in comps {
            types.push(t);
            selected.extend(order.into_iter().map(|i| roots[i].clone()));
        }
        Ok(Subsystem {
            parent,
            selected_roots: selected,
            component_types: types,
        })
    }

    pub fn rank(&self) -> usize {
        self.selected_roots.len()
    }

    pub fn is_all_type_a(&self) -> bool {
        self.component_types.iter().all(|t| t.is_type_a())
    }

    /// Rank of the span of the selected roots, computed by elimination.
    pub fn span_rank(&self) -> usize {
        linalg::rank(&self.selected_roots)
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_of(&self.selected_roots)
    }

    /// Block-diagonal Cartan matrix expected from `component_types`.
    pub fn expected_cartan_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.rank();
        let mut out = vec![vec![0; n]; n];
        let mut off = 0;
        for t in &self.component_types {
            let rs = build_root_system(*t)?;
            for i in 0..t.rank {
                for j in 0..t.rank {
                    out[off + i][off + j] = rs.cartan_matrix[i][j];
                }
            }
            off += t.rank;
        }
        Ok(out)
    }

    /// Simple roots of the `k`-th component.
    pub fn component_roots(&self, k: usize) -> &[Vec<Q>] {
        let start: usize = self.component_types[..k].iter().map(|t| t.rank).sum();
        &self.selected_roots[start..start + self.component_types[k].rank]
    }
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.component_types.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", names.join("+"))
    }
}

fn bond(c: &[Vec<i64>], i: usize, j: usize) -> i64 {
    c[i][j] * c[j][i]
}

/// Splits a family of roots into connected components of its Dynkin diagram
/// and returns, per component, its type and the indices in Bourbaki order.
pub fn identify_components(roots: &[Vec<Q>]) -> Result<Vec<(SimpleType, Vec<usize>)>> {
    let n = roots.len();
    let cartan = cartan_of(roots);
    let mut comp_id = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp_id[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![];
        let mut queue = VecDeque::from([s]);
        comp_id[s] = id;
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for w in 0..n {
                if w != v && cartan[v][w] != 0 && comp_id[w] == usize::MAX {
                    comp_id[w] = id;
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    let lengths: Vec<Q> = roots.iter().map(|r| linalg::dot(r, r)).collect();
    comps
        .into_iter()
        .map(|members| {
            let local: Vec<Vec<i64>> = members
                .iter()
                .map(|&i| members.iter().map(|&j| cartan[i][j]).collect())
                .collect();
            let len: Vec<Q> = members.iter().map(|&i| lengths[i].clone()).collect();
            let (t, order) = classify_connected(&local, &len)?;
            Ok((t, order.into_iter().map(|k| members[k]).collect()))
        })
        .collect()
}

fn walk(c: &[Vec<i64>], start: usize, avoid: usize) -> Vec<usize> {
    let n = c.len();
    let mut path = vec![start];
    let mut prev = avoid;
    let mut cur = start;
    loop {
        let next = (0..n).find(|&w| w != cur && w != prev && c[cur][w] != 0 && !path.contains(&w));
        match next {
            Some(w) => {
                path.push(w);
                prev = cur;
                cur = w;
            }
            None => return path,
        }
    }
}

fn classify_connected(c: &[Vec<i64>], len: &[Q]) -> Result<(SimpleType, Vec<usize>)> {
    let n = c.len();
    let neighbors: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && c[i][j] != 0).collect())
        .collect();
    let unsupported = || Error::RankMismatch("root family is not of finite type".into());
    let (t, order) = if n == 1 {
        (SimpleType::a(1), vec![0])
    } else if let Some(b) = (0..n).find(|&i| neighbors[i].len() == 3) {
        let mut legs: Vec<Vec<usize>> = neighbors[b].iter().map(|&s| walk(c, s, b)).collect();
        legs.sort_by_key(|l| l.len());
        let lens: Vec<usize> = legs.iter().map(|l| l.len()).collect();
        match lens.as_slice() {
            [1, 1, k] => {
                let mut order: Vec<usize> = legs[2].iter().rev().copied().collect();
                debug_assert_eq!(*k + 3, n);
                order.push(b);
                order.push(legs[0][0]);
                order.push(legs[1][0]);
                (SimpleType::new(Family::D, n)?, order)
            }
            [1, 2, k] if (2..=4).contains(k) => {
                let mut order = vec![legs[1][1], legs[0][0], legs[1][0], b];
                order.extend(legs[2].iter().copied());
                (SimpleType::new(Family::E, n)?, order)
            }
            _ => return Err(unsupported()),
        }
    } else {
        let ends: Vec<usize> = (0..n).filter(|&i| neighbors[i].len() == 1).collect();
        if ends.len() != 2 {
            return Err(unsupported());
        }
        let path = walk(c, ends[0], usize::MAX);
        let bonds: Vec<i64> = path.windows(2).map(|w| bond(c, w[0], w[1])).collect();
        let multi: Vec<usize> = (0..bonds.len()).filter(|&i| bonds[i] > 1).collect();
        match multi.as_slice() {
            [] => (SimpleType::a(n), path),
            [_] if bonds.iter().any(|&b| b == 3) => {
                // G2: short root first.
                let order = if len[path[0]] < len[path[1]] {
                    path
                } else {
                    path.into_iter().rev().collect()
                };
                (SimpleType::G2, order)
            }
            [_] if n == 2 => {
                // B2: long root first.
                let order = if len[path[0]] > len[path[1]] {
                    path
                } else {
                    path.into_iter().rev().collect()
                };
                (SimpleType::b(2), order)
            }
            [i] if *i == 0 || *i == n - 2 => {
                let path = if *i == 0 { path.into_iter().rev().collect() } else { path };
                let last = path[n - 1];
                let prev = path[n - 2];
                if len[last] < len[prev] {
                    (SimpleType::b(n), path)
                } else {
                    (SimpleType::c(n), path)
                }
            }
            [1] if n == 4 => {
                let order = if len[path[0]] > len[path[3]] {
                    path
                } else {
                    path.into_iter().rev().collect()
                };
                (SimpleType::F4, order)
            }
            _ => return Err(unsupported()),
        }
    };
    let canonical = build_root_system(t)?;
    for i in 0..n {
        for j in 0..n {
            if c[order[i]][order[j]] != canonical.cartan_matrix[i][j] {
                return Err(unsupported());
            }
        }
    }
    Ok((t, order))
}

#[derive(Clone)]
struct Component {
    stype: SimpleType,
    roots: Vec<Vec<Q>>,
}

fn highest_root(comp: &Component) -> Result<Vec<Q>> {
    let rs = build_root_system(comp.stype)?;
    let coefs = rs.highest_root_coords();
    let dim = comp.roots[0].len();
    let mut v = vec![linalg::q(0); dim];
    for (&c, r) in coefs.iter().zip(&comp.roots) {
        let c = linalg::q(c);
        for (x, y) in v.iter_mut().zip(r) {
            *x += &c * y;
        }
    }
    Ok(v)
}

fn sorted_types(comps: &[Component]) -> Vec<SimpleType> {
    let mut t: Vec<SimpleType> = comps.iter().map(|c| c.stype).collect();
    t.sort_by(component_order);
    t
}

/// Equal-rank subsystems obtained by iterating extended-Dynkin-diagram node
/// deletion, one representative per component-type signature.
///
/// The first entry is the full system; the rest are sorted by signature,
/// larger leading components first.
pub fn equal_rank_subsystems(rs: &Arc<RootSystem>) -> Result<Vec<Subsystem>> {
    let start = vec![Component {
        stype: rs.stype,
        roots: rs.simple_roots.clone(),
    }];
    let mut seen: BTreeSet<Vec<SimpleType>> = BTreeSet::new();
    seen.insert(sorted_types(&start));
    let mut found: Vec<Vec<Component>> = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        for (k, comp) in state.iter().enumerate() {
            if comp.stype.family == Family::A {
                // Deleting from the affine A_n cycle gives A_n back.
                continue;
            }
            let theta = highest_root(comp)?;
            let neg_theta: Vec<Q> = theta.iter().map(|x| -x).collect();
            for drop in 0..comp.roots.len() {
                let mut roots: Vec<Vec<Q>> = comp
                    .roots
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != drop)
                    .map(|(_, r)| r.clone())
                    .collect();
                roots.push(neg_theta.clone());
                let pieces = identify_components(&roots)?;
                let mut next: Vec<Component> = state
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != k)
                    .map(|(_, c)| c.clone())
                    .collect();
                for (t, order) in pieces {
                    next.push(Component {
                        stype: t,
                        roots: order.into_iter().map(|i| roots[i].clone()).collect(),
                    });
                }
                if seen.insert(sorted_types(&next)) {
                    found.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    let mut out: Vec<Subsystem> = found
        .into_iter()
        .map(|mut comps| {
            comps.sort_by(|a, b| component_order(&a.stype, &b.stype));
            Subsystem {
                parent: Arc::clone(rs),
                component_types: comps.iter().map(|c| c.stype).collect(),
                selected_roots: comps.into_iter().flat_map(|c| c.roots).collect(),
            }
        })
        .collect();
    out[1..].sort_by(|a, b| {
        signature_key(&a.component_types).cmp(&signature_key(&b.component_types))
    });
    Ok(out)
}

/// The first all-type-A subsystem in the order of [`equal_rank_subsystems`],
/// i.e. the one with the largest leading factor.
pub fn type_a_equal_rank(rs: &Arc<RootSystem>) -> Result<Subsystem> {
    equal_rank_subsystems(rs)?
        .into_iter()
        .find(Subsystem::is_all_type_a)
        .ok_or_else(|| Error::RankMismatch("no type-A equal-rank subsystem".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(rs: &Arc<RootSystem>) -> Vec<String> {
        equal_rank_subsystems(rs)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    #[test]
    fn identify_recovers_each_type_from_shuffled_roots() {
        let types = [
            SimpleType::a(4),
            SimpleType::b(4),
            SimpleType::c(4),
            SimpleType::d(5),
            SimpleType::e(6),
            SimpleType::e(7),
            SimpleType::e(8),
            SimpleType::F4,
            SimpleType::G2,
            SimpleType::b(2),
        ];
        for t in types {
            let rs = build_root_system(t).unwrap();
            let mut roots = rs.simple_roots.clone();
            roots.reverse();
            roots.rotate_left(1);
            let comps = identify_components(&roots).unwrap();
            assert_eq!(comps.len(), 1);
            assert_eq!(comps[0].0, t);
        }
    }

    #[test]
    fn type_a_has_only_itself() {
        for n in 1..=5 {
            let rs = build_root_system(SimpleType::a(n)).unwrap();
            assert_eq!(names(&rs), vec![format!("A{n}")]);
        }
    }

    #[test]
    fn g2_contains_long_root_a2() {
        let rs = build_root_system(SimpleType::G2).unwrap();
        let subs = equal_rank_subsystems(&rs).unwrap();
        let a2 = subs.iter().find(|s| s.to_string() == "A2").unwrap();
        // Both simple roots of the A2 are long.
        for r in &a2.selected_roots {
            assert_eq!(linalg::dot(r, r), linalg::q(6));
        }
        assert_eq!(names(&rs), vec!["G2", "A2", "A1+A1"]);
    }

    #[test]
    fn b3_and_c3_deletion_oracle() {
        let b3 = build_root_system(SimpleType::b(3)).unwrap();
        assert_eq!(names(&b3), vec!["B3", "A3", "A1+A1+A1"]);
        assert_eq!(type_a_equal_rank(&b3).unwrap().to_string(), "A3");
        let c3 = build_root_system(SimpleType::c(3)).unwrap();
        assert_eq!(names(&c3), vec!["C3", "B2+A1", "A1+A1+A1"]);
        let pick = type_a_equal_rank(&c3).unwrap();
        assert_eq!(pick.to_string(), "A1+A1+A1");
        for r in &pick.selected_roots {
            assert_eq!(linalg::dot(r, r), linalg::q(4), "long roots");
        }
    }

    #[test]
    fn e7_type_a_pick_is_a7() {
        let e7 = build_root_system(SimpleType::e(7)).unwrap();
        let n = names(&e7);
        assert!(n.contains(&"A5+A2".to_string()));
        assert_eq!(type_a_equal_rank(&e7).unwrap().to_string(), "A7");
    }

    #[test]
    fn returned_subsystems_are_consistent() {
        for t in [SimpleType::d(5), SimpleType::F4, SimpleType::e(6), SimpleType::b(4)] {
            let rs = build_root_system(t).unwrap();
            for s in equal_rank_subsystems(&rs).unwrap() {
                assert_eq!(s.span_rank(), rs.rank(), "{t}: {s}");
                assert_eq!(s.cartan_matrix(), s.expected_cartan_matrix().unwrap(), "{t}: {s}");
            }
        }
    }

    #[test]
    fn from_roots_rejects_dependent_family() {
        let rs = build_root_system(SimpleType::a(2)).unwrap();
        let r = rs.simple_roots[0].clone();
        assert!(Subsystem::from_roots(rs, vec![r.clone(), r]).is_err());
    }
}
