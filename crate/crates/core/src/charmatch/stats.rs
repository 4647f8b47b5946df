use std::collections::BTreeMap;

use serde::Serialize;

use super::form::{char_inner_product, to_q};
use crate::error::{Error, Result};
use crate::linalg::{self, qr, Q};
use crate::reps::{FormalCharacter, SemisimpleAlgebra};
use crate::rootsys::Weight;

/// Counts of `A_n` factors of two all-type-A algebras and the constraints
/// a shared formal character would impose on them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeACountReport {
    /// `n ↦ a_n`, omitting zeros.
    pub counts1: BTreeMap<usize, usize>,
    pub counts2: BTreeMap<usize, usize>,
    /// One line per violated constraint; empty when consistent.
    pub violations: Vec<String>,
}

impl TypeACountReport {
    pub fn consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

fn type_a_counts(alg: &SemisimpleAlgebra) -> Result<BTreeMap<usize, usize>> {
    let mut counts = BTreeMap::new();
    for t in &alg.factors {
        if !t.is_type_a() {
            return Err(Error::NotTypeA(*t));
        }
        *counts.entry(t.rank).or_insert(0) += 1;
    }
    Ok(counts)
}

/// Necessary conditions for two all-type-A algebras to carry faithful
/// representations with the same formal character: equal numbers of `A_n`
/// factors for `n = 6` and `n ≥ 9`, and equal parity of the number of `A_4`
/// factors. Other counts are unconstrained.
pub fn type_a_count_report(
    alg1: &SemisimpleAlgebra,
    alg2: &SemisimpleAlgebra,
) -> Result<TypeACountReport> {
    let counts1 = type_a_counts(alg1)?;
    let counts2 = type_a_counts(alg2)?;
    let get = |c: &BTreeMap<usize, usize>, n: usize| c.get(&n).copied().unwrap_or(0);
    let mut violations = Vec::new();
    let (p1, p2) = (get(&counts1, 4) % 2, get(&counts2, 4) % 2);
    if p1 != p2 {
        violations.push(format!(
            "a_4 parity differs: {} vs {}",
            get(&counts1, 4),
            get(&counts2, 4)
        ));
    }
    let mut ns: Vec<usize> = counts1.keys().chain(counts2.keys()).copied().collect();
    ns.sort();
    ns.dedup();
    for n in ns {
        if (n == 6 || n >= 9) && get(&counts1, n) != get(&counts2, n) {
            violations.push(format!(
                "a_{n} differs: {} vs {}",
                get(&counts1, n),
                get(&counts2, n)
            ));
        }
    }
    Ok(TypeACountReport {
        counts1,
        counts2,
        violations,
    })
}

/// Squared norm and extreme inner products for the weights of `Λ^a Std` of
/// `sl_{n+1}`, under the form with `⟨e_i, e_j⟩ = δ_ij - 1/(n+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltPowerStats {
    pub norm2: Q,
    /// `max ⟨u, v⟩` over weights `u ≠ v`.
    pub max_ip: Q,
    /// `min ⟨u, v⟩` over weights `u ≠ v`.
    pub min_ip: Q,
}

/// Closed forms: `|v|² = a(n+1-a)/(n+1)`, `max = |v|² - 1`,
/// `min = |v|² - min(a, n+1-a)`.
pub fn alt_power_stats(n: usize, a: usize) -> Result<AltPowerStats> {
    if n == 0 || a == 0 || a > n {
        return Err(Error::OutOfRange(format!("need 1 ≤ a ≤ n, got n = {n}, a = {a}")));
    }
    let (n, a) = (n as i64, a as i64);
    let norm2 = qr(a * (n + 1 - a), n + 1);
    Ok(AltPowerStats {
        max_ip: &norm2 - qr(1, 1),
        min_ip: &norm2 - qr(a.min(n + 1 - a), 1),
        norm2,
    })
}

/// The weights of maximal norm and the counting bound they must satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxNormReport {
    /// Distinct weights of maximal norm, sorted.
    pub weights: Vec<Weight>,
    pub max_norm2: Q,
    /// Whether `weights` spans the weight space.
    pub spans: bool,
    /// `#weights ≥ rank + 1`, required whenever `spans` (vacuous otherwise).
    pub bound_ok: bool,
    /// `#weights = rank + 1` with `spans` happens only for a simple algebra.
    pub equality_ok: bool,
    /// The bound is established for all-type-A algebras only.
    pub type_a: bool,
}

/// Weights of maximal norm under the character-induced form.
///
/// The set does not depend on the choice of Weyl-invariant form only when
/// the algebra is simple; the induced form is the one that is preserved by
/// isomorphisms of formal characters, so it is used here.
pub fn max_norm_weights(fc: &FormalCharacter) -> Result<MaxNormReport> {
    let form = char_inner_product(fc)?;
    let norms: Vec<(Q, &Weight)> = fc.weights.keys().map(|w| (form.norm2(w), w)).collect();
    let max = norms.iter().map(|(n, _)| n.clone()).max().expect("nonempty character");
    let weights: Vec<Weight> = norms
        .iter()
        .filter(|(n, _)| *n == max)
        .map(|(_, w)| (*w).clone())
        .collect();
    let r = fc.rank();
    let vecs: Vec<Vec<Q>> = weights.iter().map(|w| to_q(w)).collect();
    let spans = linalg::rank(&vecs) == r;
    let count = weights.len();
    let k = fc.algebra.num_factors();
    Ok(MaxNormReport {
        bound_ok: !spans || count > r,
        equality_ok: !(spans && count == r + 1) || k == 1,
        spans,
        max_norm2: max,
        weights,
        type_a: fc.algebra.is_all_type_a(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::irreducible;
    use crate::rootsys::SimpleType;

    fn alg(s: &str) -> SemisimpleAlgebra {
        s.parse().unwrap()
    }

    #[test]
    fn count_reports() {
        let r = type_a_count_report(&alg("A4+A4"), &alg("A8")).unwrap();
        assert!(r.consistent(), "{:?}", r.violations);
        let r = type_a_count_report(&alg("A9"), &alg("A4+A5")).unwrap();
        assert!(!r.consistent());
        assert!(r.violations.iter().any(|v| v.starts_with("a_9")));
        let r = type_a_count_report(&alg("A4+A1"), &alg("A2+A3")).unwrap();
        assert!(r.violations.iter().any(|v| v.starts_with("a_4 parity")));
        assert!(matches!(
            type_a_count_report(&alg("B2"), &alg("A2")),
            Err(Error::NotTypeA(_))
        ));
    }

    #[test]
    fn alt_power_closed_forms() {
        let s = alt_power_stats(5, 3).unwrap();
        assert_eq!(s.norm2, qr(3, 2));
        assert_eq!(s.max_ip, qr(1, 2));
        assert_eq!(s.min_ip, qr(-3, 2));
        assert_eq!(alt_power_stats(7, 1).unwrap().norm2, qr(7, 8));
        assert!(alt_power_stats(3, 4).is_err());
        assert!(alt_power_stats(3, 0).is_err());
    }

    #[test]
    fn sym_power_has_n_plus_one_maximal_weights() {
        for n in 1..=4usize {
            for a in 1..=3i64 {
                let mut hw = vec![0; n];
                hw[0] = a;
                let fc = irreducible(SimpleType::a(n), &hw).unwrap();
                let r = max_norm_weights(&fc).unwrap();
                assert_eq!(r.weights.len(), n + 1, "n={n} a={a}");
                assert!(r.spans && r.bound_ok && r.equality_ok);
            }
        }
    }

    #[test]
    fn std_tensor_std_of_a1a1() {
        let a = irreducible(SimpleType::a(1), &[1]).unwrap();
        let r = max_norm_weights(&a.outer_tensor(&a)).unwrap();
        assert_eq!(r.weights.len(), 4);
        assert!(r.spans && r.bound_ok && r.equality_ok);
    }
}
