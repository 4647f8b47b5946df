use serde::Serialize;

use crate::error::{Error, Result};
use crate::reps::multiplicity_free_catalog;
use crate::rootsys::{Family, SimpleType};

/// Largest `n` accepted by [`cmd_allowed_pairs`]; the sweep builds root
/// systems up to rank `n - 1`.
pub const MAX_ALLOWED_N: u64 = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AllowedPair {
    pub stype: SimpleType,
    pub hw: Vec<i64>,
    pub dim: u128,
    pub names: Vec<String>,
    pub self_dual: bool,
    /// Which case of the irreducibility argument disposes of this pair.
    pub handled_by: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AllowedPairs {
    pub n: u64,
    /// Failed divisibility assumptions; empty when `n` is admissible.
    pub gate_violations: Vec<String>,
    /// Why specific pairs of this dimension are ruled out by the gate.
    pub notes: Vec<String>,
    /// Every multiplicity-free `(g, V)` of dimension `n`. When the gate
    /// fails these are the pairs that would otherwise be admitted.
    pub pairs: Vec<AllowedPair>,
}

impl AllowedPairs {
    pub fn accepted(&self) -> bool {
        self.gate_violations.is_empty()
    }
}

fn binom(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Cheap closed-form test: can the catalog of `t` contain dimension `n`?
fn may_have_dim(t: SimpleType, n: u128) -> bool {
    let m = t.rank as u128;
    match t.family {
        Family::A => {
            (1..=m).any(|a| binom(m + 1, a) == n) || {
                let mut a = 1u128;
                loop {
                    let d = binom(m + a, a);
                    if d == n {
                        break true;
                    }
                    if d > n {
                        break false;
                    }
                    a += 1;
                }
            }
        }
        Family::B => 2 * m + 1 == n || (m < 127 && 1u128 << m == n),
        Family::C => 2 * m == n || (m == 3 && n == 14),
        Family::D => 2 * m == n || (m < 128 && 1u128 << (m - 1) == n),
        Family::E => matches!((m, n), (6, 27) | (7, 56)),
        Family::F => false,
        Family::G => n == 7,
    }
}

/// Simple types that can have a faithful representation of dimension `n`.
fn candidate_types(n: u64) -> Vec<SimpleType> {
    let n = n as usize;
    let mut out = Vec::new();
    for m in 1..n {
        out.push(SimpleType::a(m));
    }
    for m in 2..=n / 2 {
        out.push(SimpleType::b(m));
    }
    for m in 3..=n / 2 {
        out.push(SimpleType::c(m));
    }
    for m in 4..=n / 2 {
        out.push(SimpleType::d(m));
    }
    out.extend([SimpleType::e(6), SimpleType::e(7), SimpleType::e(8), SimpleType::F4, SimpleType::G2]);
    out
}

/// Highest weight of the dual representation, `-w_0 λ`.
pub fn dual_highest_weight(t: SimpleType, hw: &[i64]) -> Vec<i64> {
    let mut v = hw.to_vec();
    match (t.family, t.rank) {
        (Family::A, _) => v.reverse(),
        (Family::D, m) if m % 2 == 1 => v.swap(m - 2, m - 1),
        (Family::E, 6) => {
            v.swap(0, 5);
            v.swap(2, 4);
        }
        _ => {}
    }
    v
}

fn handled_by(t: SimpleType, self_dual: bool) -> String {
    let m = t.rank;
    match t.family {
        Family::A if m == 1 => "sl_2: rank one forces sl_2, every summand self-dual".into(),
        Family::A if m % 2 == 0 => format!("sl_{}: odd size, V not self-dual; lift through GL_{}", m + 1, m + 1),
        Family::A if self_dual => format!("sl_{}: self-dual Λ^k Std, norm-ratio contradiction", m + 1),
        Family::A => format!("sl_{}: non-self-dual, type-A rigidity", m + 1),
        Family::B | Family::C | Family::D => {
            "orthogonal/symplectic: so_n Std formal character forces self-dual summands".into()
        }
        Family::E if m == 6 => "e_6: 27 odd, the involution w ↦ -c(w) has a fixed point".into(),
        _ => "not reachable under the divisibility assumptions".into(),
    }
}

/// All multiplicity-free `(g, V)` with `g` simple and `dim V = n`, and the
/// outcome of the `7 ∤ n`, `4 ∤ n` gate.
pub fn cmd_allowed_pairs(n: u64) -> Result<AllowedPairs> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    if n > MAX_ALLOWED_N {
        return Err(Error::ResourceLimit(format!("n = {n} exceeds {MAX_ALLOWED_N}")));
    }
    let mut pairs = Vec::new();
    for t in candidate_types(n) {
        if !may_have_dim(t, n as u128) {
            continue;
        }
        for e in multiplicity_free_catalog(t, n as u128) {
            if e.dim != n as u128 {
                continue;
            }
            let self_dual = dual_highest_weight(t, &e.hw) == e.hw;
            pairs.push(AllowedPair {
                stype: t,
                handled_by: handled_by(t, self_dual),
                hw: e.hw,
                dim: e.dim,
                names: e.names,
                self_dual,
            });
        }
    }

    let mut gate_violations = Vec::new();
    if n % 7 == 0 {
        gate_violations.push(format!("7 | {n}: the assumption 7 ∤ n fails"));
    }
    if n % 4 == 0 {
        gate_violations.push(format!("4 | {n}: the assumption 4 ∤ n fails"));
    }
    let mut notes = Vec::new();
    if n == 20 || n == 70 {
        let k = if n == 20 { 3 } else { 4 };
        notes.push(format!(
            "n = 20 (resp. n = 70) is dim Λ^k Std of sl_2k for k = 3 (resp. k = 4); here k = {k}"
        ));
    }
    if n == 7 {
        notes.push("G2 acting on its 7-dimensional representation is excluded by 7 ∤ n".into());
    }
    if n == 56 {
        notes.push("E7 acting on its 56-dimensional representation is excluded by 7 ∤ n".into());
    }
    if [28, 56, 70].contains(&n) {
        notes.push("proper alternating powers of sl_8 have dimensions 28, 56, 70".into());
    }
    Ok(AllowedPairs {
        n,
        gate_violations,
        notes,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::irreducible;

    fn has(p: &AllowedPairs, t: SimpleType, hw: &[i64]) -> bool {
        p.pairs.iter().any(|x| x.stype == t && x.hw == hw)
    }

    #[test]
    fn dimension_six() {
        let p = cmd_allowed_pairs(6).unwrap();
        assert!(p.accepted());
        assert!(has(&p, SimpleType::a(1), &[5]));
        assert!(has(&p, SimpleType::a(5), &[1, 0, 0, 0, 0]));
        assert!(has(&p, SimpleType::a(5), &[0, 0, 0, 0, 1]));
        assert!(has(&p, SimpleType::a(3), &[0, 1, 0]));
        assert!(has(&p, SimpleType::c(3), &[1, 0, 0]));
        assert!(has(&p, SimpleType::a(2), &[2, 0]));
        assert!(has(&p, SimpleType::a(2), &[0, 2]));
    }

    #[test]
    fn twenty_seven_has_both_e6_reps() {
        let p = cmd_allowed_pairs(27).unwrap();
        assert!(p.accepted());
        assert!(has(&p, SimpleType::e(6), &[1, 0, 0, 0, 0, 0]));
        assert!(has(&p, SimpleType::e(6), &[0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn gate_rejections() {
        for n in [7u64, 20, 28, 56, 70] {
            let p = cmd_allowed_pairs(n).unwrap();
            assert!(!p.accepted(), "{n}");
        }
        let p = cmd_allowed_pairs(20).unwrap();
        assert!(p.notes.iter().any(|s| s.contains("n = 20 (resp. n = 70)")));
        assert!(has(&p, SimpleType::a(5), &[0, 0, 1, 0, 0]));
        assert!(has(&cmd_allowed_pairs(7).unwrap(), SimpleType::G2, &[1, 0]));
        assert!(matches!(cmd_allowed_pairs(0), Err(Error::OutOfRange(_))));
        assert!(matches!(cmd_allowed_pairs(10_000), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn dual_weights_agree_with_characters() {
        for (t, hw) in [
            (SimpleType::a(3), vec![1, 1, 0]),
            (SimpleType::d(5), vec![0, 0, 0, 1, 0]),
            (SimpleType::e(6), vec![1, 0, 0, 0, 0, 0]),
            (SimpleType::b(3), vec![0, 0, 1]),
        ] {
            let fc = irreducible(t, &hw).unwrap();
            let d = irreducible(t, &dual_highest_weight(t, &hw)).unwrap();
            assert_eq!(fc.dual(), d, "{t}");
        }
    }
}
