use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::group::{multiset_product, AbGroupElem, Ambient, GroupMultiset};
use crate::error::{Error, Result};
use crate::reps::FormalCharacter;

/// `C = A_1 ⋯ A_k`, one representative per equivalence class.
///
/// Every factor but the last is in canonical form; the last is translated so
/// the product is exactly `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub factors: Vec<GroupMultiset>,
}

impl Decomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.len()).collect()
    }

    pub fn product(&self) -> Result<GroupMultiset> {
        let mut it = self.factors.iter();
        let first = it.next().cloned().ok_or_else(|| Error::ProfileMismatch("empty".into()))?;
        it.try_fold(first, |acc, f| multiset_product(&acc, f))
    }

    /// Canonical forms of the factors, sorted: equal for equivalent decompositions.
    pub fn class_key(&self) -> Vec<GroupMultiset> {
        let mut k: Vec<GroupMultiset> = self.factors.iter().map(|f| f.canonical()).collect();
        k.sort();
        k
    }
}

type Counts = BTreeMap<AbGroupElem, usize>;

fn remove_translate(r: &mut Counts, a: &GroupMultiset, x: &AbGroupElem) -> bool {
    let amb = a.ambient;
    let mut removed = Vec::new();
    for e in &a.elems {
        let y = amb.add(e, x);
        match r.get_mut(&y) {
            Some(c) if *c > 0 => {
                *c -= 1;
                if *c == 0 {
                    r.remove(&y);
                }
                removed.push(y);
            }
            _ => {
                for y in removed {
                    *r.entry(y).or_insert(0) += 1;
                }
                return false;
            }
        }
    }
    true
}

fn restore_translate(r: &mut Counts, a: &GroupMultiset, x: &AbGroupElem) {
    for e in &a.elems {
        *r.entry(a.ambient.add(e, x)).or_insert(0) += 1;
    }
}

/// All `B` with `A + B = C`, given `R = C` as counts.
///
/// The least remaining element `r` is `a + x` with `x ∈ B` and `a` of least
/// free part in `A`; only the residue of `a` is ambiguous.
fn solve_cofactor(a: &GroupMultiset, r: &mut Counts, chosen: &mut Vec<AbGroupElem>, out: &mut BTreeSet<Vec<AbGroupElem>>) {
    let Some(least) = r.keys().next().cloned() else {
        let mut b = chosen.clone();
        b.sort();
        out.insert(b);
        return;
    };
    let amb = a.ambient;
    let low = &a.elems[0].free;
    let heads: Vec<AbGroupElem> = a.distinct().into_iter().filter(|e| &e.free == low).collect();
    for h in heads {
        let x = amb.sub(&least, &h);
        if remove_translate(r, a, &x) {
            chosen.push(x.clone());
            solve_cofactor(a, r, chosen, out);
            chosen.pop();
            restore_translate(r, a, &x);
        }
    }
}

/// Sub-multisets of `pool` of the given size, by counts.
fn sub_multisets(pool: &[(AbGroupElem, usize)], size: usize, i: usize, cur: &mut Vec<AbGroupElem>, out: &mut Vec<Vec<AbGroupElem>>) {
    if size == 0 {
        out.push(cur.clone());
        return;
    }
    if i == pool.len() {
        return;
    }
    let remaining: usize = pool[i..].iter().map(|(_, c)| c).sum();
    if remaining < size {
        return;
    }
    let (e, c) = &pool[i];
    for k in (0..=(*c).min(size)).rev() {
        for _ in 0..k {
            cur.push(e.clone());
        }
        sub_multisets(pool, size - k, i + 1, cur, out);
        cur.truncate(cur.len() - k);
    }
}

/// All `(A, B)` with `#A = a` and `A + B = C`, up to simultaneous translation.
fn binary_splits(c: &GroupMultiset, a: usize) -> Vec<(GroupMultiset, GroupMultiset)> {
    let amb = c.ambient;
    // Normalise so 0 ∈ A and c* = min C ∈ B; then A + c* ⊆ C.
    let cstar = c.elems[0].clone();
    let mut pool: Counts = BTreeMap::new();
    for e in &c.elems {
        *pool.entry(amb.sub(e, &cstar)).or_insert(0) += 1;
    }
    let zero = amb.zero();
    *pool.get_mut(&zero).expect("0 in C - c*") -= 1;
    let pool: Vec<(AbGroupElem, usize)> = pool.into_iter().filter(|(_, k)| *k > 0).collect();
    let mut cands = Vec::new();
    sub_multisets(&pool, a - 1, 0, &mut Vec::new(), &mut cands);

    let base = c.counts();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mut elems in cands {
        elems.push(zero.clone());
        elems.sort();
        let am = GroupMultiset { ambient: amb, elems };
        let mut sols = BTreeSet::new();
        solve_cofactor(&am, &mut base.clone(), &mut Vec::new(), &mut sols);
        for b in sols {
            let bm = GroupMultiset { ambient: amb, elems: b };
            if seen.insert((am.canonical(), bm.canonical())) {
                out.push((am.clone(), bm));
            }
        }
    }
    out
}

fn check_profile(n: usize, profile: &[usize]) -> Result<()> {
    if profile.is_empty() {
        return Err(Error::ProfileMismatch("empty profile".into()));
    }
    if profile.len() > 1 && profile.iter().any(|&s| s < 2) {
        return Err(Error::ProfileMismatch(format!("factor sizes must exceed 1: {profile:?}")));
    }
    let prod = profile.iter().try_fold(1usize, |acc, &s| acc.checked_mul(s));
    if prod != Some(n) {
        return Err(Error::ProfileMismatch(format!(
            "product of {profile:?} is not #C = {n}"
        )));
    }
    Ok(())
}

fn rec(c: &GroupMultiset, profile: &[usize]) -> Vec<Vec<GroupMultiset>> {
    if profile.len() == 1 {
        return vec![vec![c.clone()]];
    }
    let mut out = Vec::new();
    for (a, rest) in binary_splits(c, profile[0]) {
        for mut tail in rec(&rest, &profile[1..]) {
            tail.insert(0, a.clone());
            out.push(tail);
        }
    }
    out
}

/// All decompositions `C = A_1 ⋯ A_k` with `#A_i = profile[i]`, up to
/// translating factors and reordering factors of equal size.
pub fn factorizations(c: &GroupMultiset, profile: &[usize]) -> Result<Vec<Decomposition>> {
    check_profile(c.len(), profile)?;
    if profile.len() == 1 {
        return Ok(vec![Decomposition { factors: vec![c.clone()] }]);
    }
    let amb = c.ambient;
    let mut classes: BTreeMap<Vec<GroupMultiset>, Decomposition> = BTreeMap::new();
    for factors in rec(c, profile) {
        let d = Decomposition { factors };
        let key = d.class_key();
        if classes.contains_key(&key) {
            continue;
        }
        // Representative: factors in canonical form, equal sizes in key
        // order, last one shifted to restore the product.
        let mut canon: Vec<GroupMultiset> = Vec::with_capacity(profile.len());
        let mut pool = key.clone();
        for &s in profile {
            let i = pool.iter().position(|f| f.len() == s).expect("sizes match");
            canon.push(pool.remove(i));
        }
        let shift = {
            let p = Decomposition { factors: canon.clone() }.product().expect("same ambient");
            equivalent_shift(&p, c, amb)
        };
        let last = canon.len() - 1;
        canon[last] = canon[last].translate(&shift);
        classes.insert(key, Decomposition { factors: canon });
    }
    Ok(classes.into_values().collect())
}

fn equivalent_shift(p: &GroupMultiset, c: &GroupMultiset, amb: Ambient) -> AbGroupElem {
    super::group::equivalent(p, c)
        .expect("same ambient")
        .unwrap_or_else(|| amb.zero())
}

/// Factorizations of the weight multiset of a character, as a multiset in
/// `Z^rank` (fundamental-weight coordinates).
pub fn character_kronecker_split(fc: &FormalCharacter, profile: &[usize]) -> Result<Vec<Decomposition>> {
    let elems: Vec<Vec<i64>> = fc.expanded().into_iter().map(|w| w.0).collect();
    let c = GroupMultiset::from_vectors(fc.rank(), elems)?;
    factorizations(&c, profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::irreducible;
    use crate::rootsys::SimpleType;

    fn ints(xs: &[i64]) -> GroupMultiset {
        GroupMultiset::from_ints(xs)
    }

    #[test]
    fn interval_factorizations() {
        // {0..3} = {0,1}{0,2} only.
        let d = factorizations(&ints(&[0, 1, 2, 3]), &[2, 2]).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].product().unwrap(), ints(&[0, 1, 2, 3]));
        // {0..5}: {0,1}{0,2,4} and {0,3}{0,1,2}.
        let d = factorizations(&ints(&[0, 1, 2, 3, 4, 5]), &[2, 3]).unwrap();
        assert_eq!(d.len(), 2);
        for x in &d {
            assert_eq!(x.product().unwrap(), ints(&[0, 1, 2, 3, 4, 5]));
            assert_eq!(x.sizes(), vec![2, 3]);
        }
    }

    #[test]
    fn repeated_and_three_factors() {
        let c = ints(&[0, 1, 1, 2]);
        let d = factorizations(&c, &[2, 2]).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].factors[0], ints(&[0, 1]));
        let c = ints(&[0, 1, 2, 3, 4, 5, 6, 7]);
        let d = factorizations(&c, &[2, 2, 2]).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].class_key(), vec![ints(&[0, 1]), ints(&[0, 2]), ints(&[0, 4])]);
    }

    #[test]
    fn torsion_factorizations() {
        let amb = Ambient::new(4, 0).unwrap();
        let all: Vec<AbGroupElem> = (0..4).map(|t| amb.elem(t, vec![]).unwrap()).collect();
        let c = GroupMultiset::new(amb, all).unwrap();
        let d = factorizations(&c, &[2, 2]).unwrap();
        // Z/4 = {0,1}{0,2} = {0,2}{0,1}, the same class up to reordering.
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].product().unwrap(), c);
    }

    #[test]
    fn profile_errors() {
        assert!(matches!(factorizations(&ints(&[0, 1, 2]), &[2, 2]), Err(Error::ProfileMismatch(_))));
        assert!(matches!(factorizations(&ints(&[0, 1, 2]), &[1, 3]), Err(Error::ProfileMismatch(_))));
        assert!(factorizations(&ints(&[0, 1, 5]), &[3]).unwrap().len() == 1);
        assert!(factorizations(&ints(&[0, 1, 5, 9]), &[2, 2]).unwrap().is_empty());
    }

    #[test]
    fn character_splits() {
        // Weights of sl3 Std do not split; Std⊠Std of A1+A1 does.
        let s = irreducible(SimpleType::a(2), &[1, 0]).unwrap();
        assert_eq!(character_kronecker_split(&s, &[3]).unwrap().len(), 1);
        let a = irreducible(SimpleType::a(1), &[1]).unwrap();
        let t = a.outer_tensor(&a);
        let d = character_kronecker_split(&t, &[2, 2]).unwrap();
        assert!(!d.is_empty());
        assert!(d.iter().all(|x| x.product().is_ok()));
    }
}
