use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::algebra::{HighestWeight, SemisimpleAlgebra};
use super::freudenthal::{dimension_at_most, weyl_dimension};
use crate::error::Result;
use crate::rootsys::{build_root_system, Family, RootSystem, SimpleType};

/// One multiplicity-free irreducible representation of a simple algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub stype: SimpleType,
    pub hw: Vec<i64>,
    pub dim: u128,
    /// Human-readable names, e.g. `["Λ^2 Std", "Λ^2 Std∨"]` for `ω_2` of `A_3`.
    pub names: Vec<String>,
}

fn fundamental(rank: usize, i: usize, scale: i64) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i - 1] = scale;
    v
}

/// `C(n, k)`, saturating at `u128::MAX`.
fn binom_sat(n: u64, k: u64) -> u128 {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc.to_u128().unwrap_or(u128::MAX)
}

/// Dimensions of the type-A catalog entries by closed form:
/// `dim Λ^a = C(m+1, a)`, `dim Sym^s = C(m+s, s)`.
fn type_a_dim(m: usize, hw: &[i64]) -> Option<u128> {
    let nz: Vec<(usize, i64)> = hw.iter().copied().enumerate().filter(|&(_, c)| c != 0).collect();
    match nz.as_slice() {
        [] => Some(1),
        [(i, 1)] => Some(binom_sat(m as u64 + 1, *i as u64 + 1)),
        [(i, s)] if *i == 0 || *i == m - 1 => Some(binom_sat(m as u64 + *s as u64, *s as u64)),
        _ => None,
    }
}

fn catalog_dim(t: SimpleType, hw: &[i64]) -> u128 {
    if t.family == Family::A {
        if let Some(d) = type_a_dim(t.rank, hw) {
            return d;
        }
    }
    dim_of(t, hw)
}

fn dim_of(t: SimpleType, hw: &[i64]) -> u128 {
    let alg = SemisimpleAlgebra::simple(t);
    weyl_dimension(&alg, &HighestWeight(vec![hw.to_vec()])).expect("dominant by construction")
}

/// The non-trivial multiplicity-free irreducibles of a simple algebra.
///
/// * `A_m`: `Sym^a` and `Λ^a` of `Std` and `Std∨` (the symmetric powers form an
///   infinite family, truncated at `max_dim`);
/// * `B_m`: `Std = ω_1` and the spin representation `ω_m`;
/// * `C_m` (`m ≥ 3`): `Std = ω_1`, plus `ω_3` (dimension 14) when `m = 3`;
/// * `D_m`: `Std = ω_1` and the half-spin representations `ω_{m-1}`, `ω_m`;
/// * `E_6`: `ω_1`, `ω_6`; `E_7`: `ω_7`; `G_2`: `ω_1`;
/// * `E_8`, `F_4`: none.
///
/// Coincident descriptions are merged into one entry with several names
/// (`Λ^a Std∨ = Λ^{m+1-a} Std`, and for `A_1` `Λ^1 = Sym^1`). Low-rank
/// coincidences across families (`B_2 = C_2`, `D_3 = A_3`, …) are not folded:
/// each type is listed by its own rule. Sorted by dimension, then weight.
pub fn multiplicity_free_catalog(stype: SimpleType, max_dim: u128) -> Vec<CatalogEntry> {
    let m = stype.rank;
    let mut raw: Vec<(Vec<i64>, String)> = Vec::new();
    match stype.family {
        Family::A => {
            for a in 1..=m {
                raw.push((fundamental(m, a, 1), format!("Λ^{a} Std")));
                raw.push((fundamental(m, m + 1 - a, 1), format!("Λ^{a} Std∨")));
            }
            let mut a = 1i64;
            loop {
                let hw = fundamental(m, 1, a);
                if catalog_dim(stype, &hw) > max_dim {
                    break;
                }
                raw.push((hw, format!("Sym^{a} Std")));
                raw.push((fundamental(m, m, a), format!("Sym^{a} Std∨")));
                a += 1;
            }
        }
        Family::B => {
            raw.push((fundamental(m, 1, 1), "Std".into()));
            raw.push((fundamental(m, m, 1), "spin".into()));
        }
        Family::C => {
            raw.push((fundamental(m, 1, 1), "Std".into()));
            if m == 3 {
                raw.push((fundamental(m, 3, 1), "ω3".into()));
            }
        }
        Family::D => {
            raw.push((fundamental(m, 1, 1), "Std".into()));
            raw.push((fundamental(m, m - 1, 1), "half-spin".into()));
            raw.push((fundamental(m, m, 1), "half-spin".into()));
        }
        Family::E => match m {
            6 => {
                raw.push((fundamental(6, 1, 1), "ω1".into()));
                raw.push((fundamental(6, 6, 1), "ω6".into()));
            }
            7 => raw.push((fundamental(7, 7, 1), "ω7".into())),
            _ => {}
        },
        Family::F => {}
        Family::G => raw.push((fundamental(2, 1, 1), "ω1".into())),
    }
    let mut out: Vec<CatalogEntry> = Vec::new();
    for (hw, name) in raw {
        if let Some(e) = out.iter_mut().find(|e| e.hw == hw) {
            if !e.names.contains(&name) {
                e.names.push(name);
            }
            continue;
        }
        let dim = catalog_dim(stype, &hw);
        if dim <= max_dim {
            out.push(CatalogEntry {
                stype,
                hw,
                dim,
                names: vec![name],
            });
        }
    }
    out.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| b.hw.cmp(&a.hw)));
    out
}

fn simple_sweep(t: SimpleType, dmax: u128) -> Vec<(Vec<i64>, u128)> {
    // The dimension is increasing in each coordinate, so a coordinate stops
    // growing once the bound is exceeded.
    fn go(rs: &RootSystem, hw: &mut Vec<i64>, i: usize, dmax: u128, out: &mut Vec<(Vec<i64>, u128)>) {
        if i == hw.len() {
            let d = dimension_at_most(rs, hw, dmax).expect("checked by the caller");
            out.push((hw.clone(), d));
            return;
        }
        while dimension_at_most(rs, hw, dmax).is_some() {
            go(rs, hw, i + 1, dmax, out);
            hw[i] += 1;
        }
        hw[i] = 0;
    }
    let rs = build_root_system(t).expect("valid type");
    let mut out = Vec::new();
    go(&rs, &mut vec![0; t.rank], 0, dmax, &mut out);
    out
}

/// Every irreducible of `alg` of dimension at most `dmax`, sorted by
/// dimension then highest weight.
pub fn enumerate_irreps_up_to_dim(
    alg: &SemisimpleAlgebra,
    dmax: u128,
) -> Result<Vec<(HighestWeight, u128)>> {
    let mut acc: Vec<(Vec<Vec<i64>>, u128)> = vec![(Vec::new(), 1)];
    for t in &alg.factors {
        let sweep = simple_sweep(*t, dmax);
        let mut next = Vec::new();
        for (parts, d) in &acc {
            for (hw, e) in &sweep {
                if d * e <= dmax {
                    let mut p = parts.clone();
                    p.push(hw.clone());
                    next.push((p, d * e));
                }
            }
        }
        acc = next;
    }
    let mut out: Vec<(HighestWeight, u128)> = acc
        .into_iter()
        .map(|(p, d)| (HighestWeight(p), d))
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(t: SimpleType) -> Vec<(Vec<i64>, u128)> {
        multiplicity_free_catalog(t, 1000)
            .into_iter()
            .map(|e| (e.hw, e.dim))
            .collect()
    }

    #[test]
    fn exceptional_and_small_entries() {
        assert_eq!(dims(SimpleType::e(6)), vec![(vec![1, 0, 0, 0, 0, 0], 27), (vec![0, 0, 0, 0, 0, 1], 27)]);
        assert_eq!(dims(SimpleType::e(7)), vec![(vec![0, 0, 0, 0, 0, 0, 1], 56)]);
        assert_eq!(dims(SimpleType::G2), vec![(vec![1, 0], 7)]);
        assert!(dims(SimpleType::e(8)).is_empty());
        assert!(dims(SimpleType::F4).is_empty());
        assert!(dims(SimpleType::c(3)).contains(&(vec![0, 0, 1], 14)));
        assert_eq!(
            dims(SimpleType::d(5)),
            vec![(vec![1, 0, 0, 0, 0], 10), (vec![0, 0, 0, 1, 0], 16), (vec![0, 0, 0, 0, 1], 16)]
        );
    }

    #[test]
    fn type_a_closed_forms_match_weyl() {
        for m in 1..=6 {
            let t = SimpleType::a(m);
            for e in multiplicity_free_catalog(t, 300) {
                assert_eq!(e.dim, dim_of(t, &e.hw), "{t} {:?}", e.hw);
            }
        }
    }

    #[test]
    fn type_a_merges_coincident_names() {
        let cat = multiplicity_free_catalog(SimpleType::a(3), 20);
        let w2 = cat.iter().find(|e| e.hw == vec![0, 1, 0]).unwrap();
        assert_eq!(w2.dim, 6);
        assert_eq!(w2.names, vec!["Λ^2 Std", "Λ^2 Std∨"]);
        let a1 = multiplicity_free_catalog(SimpleType::a(1), 4);
        assert_eq!(a1.iter().map(|e| e.hw[0]).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn sweeps() {
        let a1 = SemisimpleAlgebra::simple(SimpleType::a(1));
        let got: Vec<u128> = enumerate_irreps_up_to_dim(&a1, 4).unwrap().iter().map(|x| x.1).collect();
        assert_eq!(got, vec![1, 2, 3, 4]);
        let a2 = SemisimpleAlgebra::simple(SimpleType::a(2));
        let got = enumerate_irreps_up_to_dim(&a2, 3).unwrap();
        assert_eq!(got.len(), 3);
        let a1a1: SemisimpleAlgebra = "A1+A1".parse().unwrap();
        let got = enumerate_irreps_up_to_dim(&a1a1, 4).unwrap();
        assert!(got.contains(&(HighestWeight(vec![vec![1], vec![1]]), 4)));
    }
}
