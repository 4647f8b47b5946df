use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::system::RootSystem;
use crate::error::{Error, Result};

/// A weight in fundamental-weight coordinates (concatenated over the simple
/// factors when the algebra is semisimple).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl Deref for Weight {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `s_i` acting on fundamental-weight coordinates: `λ - λ_i α_i`.
pub fn reflect(cartan: &[Vec<i64>], i: usize, coords: &mut [i64]) {
    let li = coords[i];
    if li != 0 {
        for (k, c) in coords.iter_mut().enumerate() {
            *c -= li * cartan[i][k];
        }
    }
}

/// The dominant representative of the Weyl orbit of `coords`.
pub fn dominant(cartan: &[Vec<i64>], coords: &[i64]) -> Vec<i64> {
    let mut v = coords.to_vec();
    while let Some(i) = v.iter().position(|&c| c < 0) {
        reflect(cartan, i, &mut v);
    }
    v
}

/// Full orbit of a weight under the Weyl group of `cartan`.
///
/// Generated from the dominant representative by lowering: from each orbit
/// element, `s_i` with a positive `i`-th coordinate yields a strictly lower
/// element, and every orbit element is reached this way.
pub fn orbit_of(cartan: &[Vec<i64>], coords: &[i64]) -> Vec<Vec<i64>> {
    let dom = dominant(cartan, coords);
    let mut out = vec![dom.clone()];
    let mut layer: Vec<Vec<i64>> = vec![dom];
    while !layer.is_empty() {
        let mut next: HashSet<Vec<i64>> = HashSet::new();
        for mu in &layer {
            for i in 0..mu.len() {
                if mu[i] > 0 {
                    let mut nu = mu.clone();
                    reflect(cartan, i, &mut nu);
                    next.insert(nu);
                }
            }
        }
        let mut next: Vec<Vec<i64>> = next.into_iter().collect();
        next.sort();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `weyl_orbit` for a simple root system, as a sorted set.
pub fn weyl_orbit(rs: &RootSystem, w: &Weight) -> Result<BTreeSet<Weight>> {
    if w.len() != rs.rank() {
        return Err(Error::DimensionMismatch {
            expected: rs.rank(),
            actual: w.len(),
        });
    }
    Ok(orbit_of(&rs.cartan_matrix, w).into_iter().map(Weight).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, SimpleType};

    /// Brute-force closure under all simple reflections, no dominance tricks.
    fn closure(cartan: &[Vec<i64>], w: &[i64]) -> BTreeSet<Vec<i64>> {
        let mut seen = BTreeSet::new();
        seen.insert(w.to_vec());
        let mut stack = vec![w.to_vec()];
        while let Some(v) = stack.pop() {
            for i in 0..v.len() {
                let mut u = v.clone();
                reflect(cartan, i, &mut u);
                if seen.insert(u.clone()) {
                    stack.push(u);
                }
            }
        }
        seen
    }

    #[test]
    fn a_n_orbit_of_e1_has_n_plus_one_elements() {
        for n in 1..=6 {
            let rs = build_root_system(SimpleType::a(n)).unwrap();
            let mut w = vec![0; n];
            w[0] = 1;
            assert_eq!(weyl_orbit(&rs, &Weight(w)).unwrap().len(), n + 1);
        }
    }

    #[test]
    fn a3_orbit_of_e1_plus_e2() {
        // e1 + e2 = ω2 in A3.
        let rs = build_root_system(SimpleType::a(3)).unwrap();
        let orbit = weyl_orbit(&rs, &Weight(vec![0, 1, 0])).unwrap();
        assert_eq!(orbit.len(), 6);
        let brute = closure(&rs.cartan_matrix, &[0, 1, 0]);
        assert_eq!(orbit.iter().map(|w| w.0.clone()).collect::<BTreeSet<_>>(), brute);
    }

    #[test]
    fn zero_is_fixed() {
        let rs = build_root_system(SimpleType::e(6)).unwrap();
        let orbit = weyl_orbit(&rs, &Weight::zero(6)).unwrap();
        assert_eq!(orbit.len(), 1);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let rs = build_root_system(SimpleType::a(2)).unwrap();
        assert!(matches!(
            weyl_orbit(&rs, &Weight(vec![1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn orbit_sizes_divide_weyl_group_order() {
        let cases: Vec<(SimpleType, Vec<i64>)> = vec![
            (SimpleType::b(3), vec![1, 1, 0]),
            (SimpleType::c(3), vec![0, 2, 1]),
            (SimpleType::d(4), vec![1, 0, 1, 1]),
            (SimpleType::G2, vec![1, 1]),
            (SimpleType::F4, vec![0, 0, 0, 1]),
            (SimpleType::e(6), vec![1, 0, 0, 0, 0, 0]),
            (SimpleType::e(7), vec![0, 0, 0, 0, 0, 0, 1]),
        ];
        for (t, w) in cases {
            let rs = build_root_system(t).unwrap();
            let orbit = weyl_orbit(&rs, &Weight(w.clone())).unwrap();
            let order = t.weyl_group_order();
            assert_eq!(order % orbit.len() as u128, 0, "{t} {w:?}");
            let brute = closure(&rs.cartan_matrix, &w);
            assert_eq!(orbit.len(), brute.len(), "{t} {w:?}");
        }
    }

    #[test]
    fn regular_orbit_is_whole_group() {
        let rs = build_root_system(SimpleType::b(3)).unwrap();
        let orbit = weyl_orbit(&rs, &Weight(vec![1, 1, 1])).unwrap();
        assert_eq!(orbit.len() as u128, SimpleType::b(3).weyl_group_order());
    }
}
