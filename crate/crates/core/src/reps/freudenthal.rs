use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::algebra::{HighestWeight, SemisimpleAlgebra};
use super::character::FormalCharacter;
use crate::error::{Error, Result};
use crate::rootsys::{dominant, orbit_of, RootSystem, Weight};

/// Default bound on the dimension of a representation to be expanded.
pub const DEFAULT_DIM_CAP: u128 = 100_000;

/// Weyl's product over the positive coroots meeting the support of `hw`,
/// or `None` as soon as a partial product exceeds `cap`. Every factor
/// `⟨λ+ρ, α^∨⟩ / ⟨ρ, α^∨⟩` is at least 1, so partial products bound the
/// dimension from below; roots come in height order, largest factors first.
fn simple_dimension_capped(rs: &RootSystem, hw: &[i64], cap: Option<u128>) -> Option<BigUint> {
    let mut roots: Vec<(usize, i64)> = Vec::new();
    for (i, &l) in hw.iter().enumerate().filter(|(_, &l)| l != 0) {
        roots.extend(rs.coroots_by_index[i].iter().map(|&(r, c)| (r, c * l)));
    }
    roots.sort_unstable_by_key(|&(r, _)| r);
    roots.dedup_by(|b, a| {
        let same = a.0 == b.0;
        if same {
            a.1 += b.1;
        }
        same
    });
    let (mut num, mut den) = (1u128, 1u128);
    let mut big: Option<(BigUint, BigUint)> = None;
    for (r, s) in roots {
        let bot = rs.coroot_heights[r] as u128;
        let top = bot + s as u128;
        if let Some((n, d)) = big.as_mut() {
            *n *= top;
            *d *= bot;
            continue;
        }
        let step = |num: u128, den: u128| Some((num.checked_mul(top)?, den.checked_mul(bot)?));
        let next = step(num, den).or_else(|| {
            let g = num.gcd(&den);
            step(num / g, den / g)
        });
        match next {
            Some((n, d)) => (num, den) = (n, d),
            None => {
                big = Some((BigUint::from(num) * top, BigUint::from(den) * bot));
                continue;
            }
        }
        if let Some(c) = cap {
            if c.checked_mul(den).map_or(false, |cd| num > cd) {
                return None;
            }
        }
    }
    let dim = match big {
        Some((n, d)) => n / d,
        None => BigUint::from(num / den),
    };
    match cap {
        Some(c) if dim > BigUint::from(c) => None,
        _ => Some(dim),
    }
}

fn simple_dimension(rs: &RootSystem, hw: &[i64]) -> BigUint {
    simple_dimension_capped(rs, hw, None).expect("no cap")
}

/// The Weyl dimension of an irreducible of a simple algebra if it is at
/// most `cap`. `hw` must be dominant of the right length.
pub(crate) fn dimension_at_most(rs: &RootSystem, hw: &[i64], cap: u128) -> Option<u128> {
    simple_dimension_capped(rs, hw, Some(cap)).map(|d| d.to_u128().expect("at most cap"))
}

fn check_hw(alg: &SemisimpleAlgebra, hw: &HighestWeight) -> Result<()> {
    HighestWeight::new(alg, hw.0.clone()).map(|_| ())
}

/// Weyl dimension formula, multiplied over the simple factors.
///
/// Values too large for `u128` saturate to `u128::MAX`.
pub fn weyl_dimension(alg: &SemisimpleAlgebra, hw: &HighestWeight) -> Result<u128> {
    check_hw(alg, hw)?;
    let mut total = BigUint::from(1u32);
    for (rs, part) in alg.root_systems()?.iter().zip(&hw.0) {
        total *= simple_dimension(rs, part);
    }
    Ok(total.to_u128().unwrap_or(u128::MAX))
}

fn ip(g: &[Vec<i128>], a: &[i64], b: &[i64]) -> i128 {
    let mut s = 0i128;
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        let mut t = 0i128;
        for (j, &bj) in b.iter().enumerate() {
            t += g[i][j] * bj as i128;
        }
        s += ai as i128 * t;
    }
    s
}

/// Multiplicities of the dominant weights of the irreducible module with
/// highest weight `hw`, by Freudenthal's formula.
pub fn dominant_multiplicities(rs: &RootSystem, hw: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let cartan = &rs.cartan_matrix;
    let roots = &rs.positive_roots_fund;
    // Dominant weights below hw are connected to hw by subtracting positive
    // roots through dominant weights only.
    let mut seen: HashSet<Vec<i64>> = HashSet::from([hw.to_vec()]);
    let mut stack = vec![hw.to_vec()];
    while let Some(mu) = stack.pop() {
        for beta in roots {
            let nu: Vec<i64> = mu.iter().zip(beta).map(|(a, b)| a - b).collect();
            if nu.iter().all(|&c| c >= 0) && seen.insert(nu.clone()) {
                stack.push(nu);
            }
        }
    }
    // An integer multiple of the form; the formula is homogeneous in it.
    let g = &rs.fund_gram_int;
    let shift = |v: &[i64]| -> Vec<i64> { v.iter().map(|c| c + 1).collect() };
    let norm_rho = |v: &[i64]| -> i128 {
        let s = shift(v);
        ip(g, &s, &s)
    };
    let mut order: Vec<Vec<i64>> = seen.into_iter().collect();
    order.sort_by_key(|v| (std::cmp::Reverse(norm_rho(v)), v.clone()));
    let top = norm_rho(hw);
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for mu in &order {
        if mu.as_slice() == hw {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut sum = 0i128;
        for beta in roots {
            let mut v: Vec<i64> = mu.clone();
            loop {
                for (x, b) in v.iter_mut().zip(beta) {
                    *x += b;
                }
                let m = mult.get(&dominant(cartan, &v)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                sum += m as i128 * ip(g, &v, beta);
            }
        }
        let den = top - norm_rho(mu);
        debug_assert!(den > 0 && (2 * sum) % den == 0);
        mult.insert(mu.clone(), (2 * sum / den) as u64);
    }
    mult.into_iter().filter(|(_, m)| *m > 0).collect()
}

fn simple_character(rs: &RootSystem, hw: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let mut out = BTreeMap::new();
    for (mu, m) in dominant_multiplicities(rs, hw) {
        for w in orbit_of(&rs.cartan_matrix, &mu) {
            out.insert(w, m);
        }
    }
    out
}

/// The formal character of the irreducible module, with the default size cap.
pub fn weight_multiset(alg: &SemisimpleAlgebra, hw: &HighestWeight) -> Result<FormalCharacter> {
    weight_multiset_with_cap(alg, hw, DEFAULT_DIM_CAP)
}

pub fn weight_multiset_with_cap(
    alg: &SemisimpleAlgebra,
    hw: &HighestWeight,
    cap: u128,
) -> Result<FormalCharacter> {
    let dim = weyl_dimension(alg, hw)?;
    if dim > cap {
        return Err(Error::ResourceLimit(format!(
            "representation of dimension {dim} exceeds the cap {cap}"
        )));
    }
    let mut acc: BTreeMap<Vec<i64>, u64> = BTreeMap::from([(Vec::new(), 1)]);
    for (rs, part) in alg.root_systems()?.iter().zip(&hw.0) {
        let factor = simple_character(rs, part);
        let mut next = BTreeMap::new();
        for (a, &ma) in &acc {
            for (b, &mb) in &factor {
                let mut v = a.clone();
                v.extend_from_slice(b);
                next.insert(v, ma * mb);
            }
        }
        acc = next;
    }
    FormalCharacter::new(alg.clone(), acc.into_iter().map(|(w, m)| (Weight(w), m)))
}

/// Convenience: the character of `V_hw` for a simple algebra.
pub fn irreducible(t: crate::rootsys::SimpleType, hw: &[i64]) -> Result<FormalCharacter> {
    let alg = SemisimpleAlgebra::simple(t);
    weight_multiset(&alg, &HighestWeight::new(&alg, vec![hw.to_vec()])?)
}
