use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The group `Z/m × Z^d`, written additively (`m = 1`: no torsion).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ambient {
    pub m: u64,
    pub d: usize,
}

impl Ambient {
    pub fn new(m: u64, d: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::OutOfRange("torsion modulus must be at least 1".into()));
        }
        Ok(Ambient { m, d })
    }

    /// `Z^d`.
    pub fn free(d: usize) -> Self {
        Ambient { m: 1, d }
    }

    pub fn zero(&self) -> AbGroupElem {
        AbGroupElem {
            free: vec![0; self.d],
            torsion: 0,
        }
    }

    pub fn elem(&self, torsion: i64, free: Vec<i64>) -> Result<AbGroupElem> {
        if free.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                actual: free.len(),
            });
        }
        Ok(AbGroupElem {
            free,
            torsion: torsion.rem_euclid(self.m as i64) as u64,
        })
    }

    pub fn add(&self, a: &AbGroupElem, b: &AbGroupElem) -> AbGroupElem {
        AbGroupElem {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: (a.torsion + b.torsion) % self.m,
        }
    }

    pub fn sub(&self, a: &AbGroupElem, b: &AbGroupElem) -> AbGroupElem {
        AbGroupElem {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x - y).collect(),
            torsion: (a.torsion + self.m - b.torsion) % self.m,
        }
    }

    /// `n · a`.
    pub fn times(&self, n: u64, a: &AbGroupElem) -> AbGroupElem {
        AbGroupElem {
            free: a.free.iter().map(|x| x * n as i64).collect(),
            torsion: ((a.torsion as u128 * n as u128) % self.m as u128) as u64,
        }
    }
}

/// An element of `Z/m × Z^d`. Ordered by free part first, then residue.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AbGroupElem {
    pub free: Vec<i64>,
    pub torsion: u64,
}

impl AbGroupElem {
    pub fn is_zero(&self) -> bool {
        self.torsion == 0 && self.free.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for AbGroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let free: Vec<String> = self.free.iter().map(|x| x.to_string()).collect();
        write!(f, "[{};{}]", self.torsion, free.join(","))
    }
}

/// A finite multiset in an abelian group, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupMultiset {
    pub ambient: Ambient,
    pub elems: Vec<AbGroupElem>,
}

impl PartialOrd for Ambient {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ambient {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.m, self.d).cmp(&(other.m, other.d))
    }
}

impl GroupMultiset {
    pub fn new(ambient: Ambient, elems: Vec<AbGroupElem>) -> Result<Self> {
        let mut out = Vec::with_capacity(elems.len());
        for e in elems {
            out.push(ambient.elem(e.torsion as i64, e.free)?);
        }
        out.sort();
        Ok(GroupMultiset {
            ambient,
            elems: out,
        })
    }

    /// Integers, as a multiset in `Z`.
    pub fn from_ints(xs: &[i64]) -> Self {
        let mut elems: Vec<AbGroupElem> = xs
            .iter()
            .map(|&x| AbGroupElem {
                free: vec![x],
                torsion: 0,
            })
            .collect();
        elems.sort();
        GroupMultiset {
            ambient: Ambient::free(1),
            elems,
        }
    }

    /// Integer vectors, as a multiset in `Z^d`.
    pub fn from_vectors(d: usize, vs: Vec<Vec<i64>>) -> Result<Self> {
        let amb = Ambient::free(d);
        let elems = vs.into_iter().map(|v| amb.elem(0, v)).collect::<Result<Vec<_>>>()?;
        GroupMultiset::new(amb, elems)
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn counts(&self) -> BTreeMap<AbGroupElem, usize> {
        let mut c = BTreeMap::new();
        for e in &self.elems {
            *c.entry(e.clone()).or_insert(0) += 1;
        }
        c
    }

    pub fn distinct(&self) -> Vec<AbGroupElem> {
        let mut v = self.elems.clone();
        v.dedup();
        v
    }

    pub fn translate(&self, xi: &AbGroupElem) -> GroupMultiset {
        let mut elems: Vec<AbGroupElem> = self.elems.iter().map(|e| self.ambient.add(e, xi)).collect();
        elems.sort();
        GroupMultiset {
            ambient: self.ambient,
            elems,
        }
    }

    /// The translate that is least (as a sorted list) among all translates
    /// taking some element to zero. Equivalent multisets share it.
    pub fn canonical(&self) -> GroupMultiset {
        let Some(first) = self.elems.first() else {
            return self.clone();
        };
        // Only elements with the least free part can become the least
        // element after translation, and then it is zero.
        self.distinct()
            .iter()
            .filter(|e| e.free == first.free)
            .map(|e| self.translate(&self.ambient.sub(&self.ambient.zero(), e)))
            .min()
            .expect("nonempty")
    }
}

impl fmt::Display for GroupMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = if self.ambient.m == 1 {
            self.elems
                .iter()
                .map(|e| {
                    if e.free.len() == 1 {
                        e.free[0].to_string()
                    } else {
                        let s: Vec<String> = e.free.iter().map(|x| x.to_string()).collect();
                        format!("({})", s.join(","))
                    }
                })
                .collect()
        } else {
            self.elems.iter().map(|e| e.to_string()).collect()
        };
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn same_ambient(a: &GroupMultiset, b: &GroupMultiset) -> Result<()> {
    if a.ambient != b.ambient {
        return Err(Error::AmbientMismatch);
    }
    Ok(())
}

/// `AB = {a + b}` with multiplicity.
pub fn multiset_product(a: &GroupMultiset, b: &GroupMultiset) -> Result<GroupMultiset> {
    same_ambient(a, b)?;
    let amb = a.ambient;
    let mut elems = Vec::with_capacity(a.len() * b.len());
    for x in &a.elems {
        for y in &b.elems {
            elems.push(amb.add(x, y));
        }
    }
    elems.sort();
    Ok(GroupMultiset {
        ambient: amb,
        elems,
    })
}

/// The least `ξ` (in element order) with `ξ + A = B`, if any.
///
/// Every witness sends `min A` into `B`, so the candidates are `b - min A`.
pub fn equivalent(a: &GroupMultiset, b: &GroupMultiset) -> Result<Option<AbGroupElem>> {
    same_ambient(a, b)?;
    if a.len() != b.len() {
        return Ok(None);
    }
    let Some(a0) = a.elems.first() else {
        return Ok(Some(a.ambient.zero()));
    };
    let amb = a.ambient;
    Ok(b.distinct()
        .iter()
        .map(|y| amb.sub(y, a0))
        .filter(|xi| a.translate(xi) == *b)
        .min())
}

/// Whether `n (x - y) ≠ 0` for all distinct values `x ≠ y` of `C`.
pub fn generic_ratio_check(c: &GroupMultiset, n: u64) -> bool {
    generic_ratio_report(c, n).generic
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericRatioReport {
    pub generic: bool,
    /// Some value occurs more than once; repeats are not compared.
    pub has_repeats: bool,
    /// First offending pair of distinct values, if any.
    pub witness: Option<(AbGroupElem, AbGroupElem)>,
}

pub fn generic_ratio_report(c: &GroupMultiset, n: u64) -> GenericRatioReport {
    let vals = c.distinct();
    let amb = c.ambient;
    let mut witness = None;
    'outer: for (i, x) in vals.iter().enumerate() {
        for y in &vals[i + 1..] {
            if amb.times(n, &amb.sub(x, y)).is_zero() {
                witness = Some((x.clone(), y.clone()));
                break 'outer;
            }
        }
    }
    GenericRatioReport {
        generic: witness.is_none(),
        has_repeats: vals.len() < c.len(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products() {
        let p = multiset_product(&GroupMultiset::from_ints(&[0, 1]), &GroupMultiset::from_ints(&[0, 2])).unwrap();
        assert_eq!(p, GroupMultiset::from_ints(&[0, 1, 2, 3]));
        let p = multiset_product(&GroupMultiset::from_ints(&[0, 1]), &GroupMultiset::from_ints(&[0, 1])).unwrap();
        assert_eq!(p, GroupMultiset::from_ints(&[0, 1, 1, 2]));
        let b = GroupMultiset::from_ints(&[3, 4, 9]);
        let p = multiset_product(&GroupMultiset::from_ints(&[5]), &b).unwrap();
        assert_eq!(p, GroupMultiset::from_ints(&[8, 9, 14]));
        let z2 = GroupMultiset::from_vectors(2, vec![vec![0, 0]]).unwrap();
        assert_eq!(multiset_product(&b, &z2), Err(Error::AmbientMismatch));
    }

    #[test]
    fn equivalences() {
        let a = GroupMultiset::from_ints(&[0, 1, 3]);
        let w = equivalent(&a, &GroupMultiset::from_ints(&[5, 6, 8])).unwrap();
        assert_eq!(w.unwrap().free, vec![5]);
        assert_eq!(equivalent(&GroupMultiset::from_ints(&[0, 1]), &GroupMultiset::from_ints(&[0, 2])).unwrap(), None);
        assert!(equivalent(&a, &a).unwrap().unwrap().is_zero());
    }

    #[test]
    fn torsion_canonical_form() {
        let amb = Ambient::new(4, 0).unwrap();
        let a = GroupMultiset::new(amb, vec![amb.elem(1, vec![]).unwrap(), amb.elem(2, vec![]).unwrap()]).unwrap();
        let b = a.translate(&amb.elem(3, vec![]).unwrap()); // {0, 1}
        assert_eq!(a.canonical(), b.canonical());
        assert_eq!(equivalent(&a, &b).unwrap().unwrap().torsion, 3);
        // {0, 2} in Z/4 is fixed by translation by 2: two witnesses, least is 0.
        let c = GroupMultiset::new(amb, vec![amb.elem(0, vec![]).unwrap(), amb.elem(2, vec![]).unwrap()]).unwrap();
        assert!(equivalent(&c, &c).unwrap().unwrap().is_zero());
    }

    #[test]
    fn generic_ratio() {
        assert!(generic_ratio_check(&GroupMultiset::from_ints(&[0, 3, 7]), 12));
        let amb = Ambient::new(6, 1).unwrap();
        let c = GroupMultiset::new(amb, vec![amb.elem(0, vec![1]).unwrap(), amb.elem(3, vec![1]).unwrap()]).unwrap();
        assert!(!generic_ratio_check(&c, 2));
        assert!(generic_ratio_check(&c, 1));
        let r = generic_ratio_report(&GroupMultiset::from_ints(&[1, 1, 2]), 5);
        assert!(r.generic && r.has_repeats);
    }
}
