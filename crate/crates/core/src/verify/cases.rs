use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::allowed::{cmd_allowed_pairs, dual_highest_weight};
use super::charfile::CharacterFile;
use super::notation::parse_highest_weight;
use super::report::CaseReport;
use crate::abmultiset::{factorizations, multiset_product, GroupMultiset};
use crate::charmatch::{
    alt_power_stats, conjugation_sums, fixed_point_exists, max_norm_weights, same_formal_character,
};
use crate::error::{Error, Result};
use crate::goursat::{goursat_rank, verify_goursat_lemma, GoursatSpec};
use crate::linalg::{qr, Q};
use crate::reps::{
    dominant_multiplicities, enumerate_irreps_up_to_dim, irreducible, is_multiplicity_free,
    restrict_to_subsystem, weight_multiset, weyl_dimension, FormalCharacter, HighestWeight,
    SemisimpleAlgebra,
};
use crate::rootsys::{build_root_system, diagram_automorphisms, type_a_equal_rank, SimpleType, Weight};

/// `key=value` parameters of a case.
pub type CaseParams = BTreeMap<String, String>;

pub const CASE_IDS: &[&str] = &[
    "sl2k-selfdual",
    "sl2k-selfdual-exclusions",
    "sl2k-nonselfdual-dims",
    "e6-parity",
    "so-selfdual",
    "so2m-conj-zero",
    "g2-sl3-coincidence",
    "max-norm-bound",
    "sym-power-rigidity",
    "goursat",
    "factorization-bound",
];

const P_WEYL: &str = "Weyl dimension formula";
const P_CLOSED: &str = "closed form for Λ^a weights of sl_{n+1}";
const P_EXACT: &str = "exact rational arithmetic";
const P_CLASS: &str = "classification of multiplicity-free irreducibles";
const P_ENUM: &str = "exhaustive enumeration";
const P_GATE: &str = "divisibility assumptions 7 ∤ n, 4 ∤ n";

fn get_usize(p: &CaseParams, key: &str, default: usize, lo: usize, hi: usize) -> Result<usize> {
    let v = match p.get(key) {
        None => default,
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("parameter {key} = `{s}` is not an integer")))?,
    };
    if v < lo || v > hi {
        return Err(Error::OutOfRange(format!("{key} = {v} outside [{lo}, {hi}]")));
    }
    Ok(v)
}

fn params(pairs: &[(&str, String)]) -> CaseParams {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn binom(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

fn fundamental(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i - 1] = 1;
    v
}

fn show_q(x: &Q) -> String {
    x.to_string()
}

/// Runs one named case.
pub fn cmd_verify(case_id: &str, p: &CaseParams) -> Result<CaseReport> {
    match case_id {
        "sl2k-selfdual" => sl2k_selfdual(get_usize(p, "k", 5, 5, 30)?),
        "sl2k-selfdual-exclusions" => sl2k_selfdual_exclusions(),
        "sl2k-nonselfdual-dims" => sl2k_nonselfdual_dims(),
        "e6-parity" => e6_parity(),
        "so-selfdual" => so_selfdual(get_usize(p, "m", 5, 3, 9)?),
        "so2m-conj-zero" => so2m_conj_zero(get_usize(p, "m", 4, 4, 12)?),
        "g2-sl3-coincidence" => g2_sl3_coincidence(),
        "max-norm-bound" => max_norm_bound(p),
        "sym-power-rigidity" => sym_power_rigidity(get_usize(p, "n", 2, 1, 8)?, get_usize(p, "a", 2, 1, 6)?),
        "goursat" => goursat_case(p.get("factors").map(String::as_str).unwrap_or("A1,A2,A2")),
        "factorization-bound" => {
            let a = get_usize(p, "a", 2, 2, 8)?;
            let b = get_usize(p, "b", 3, 2, 8)?;
            if a * b > 16 {
                return Err(Error::OutOfRange(format!("a·b = {} exceeds 16", a * b)));
            }
            let seed = p
                .get("seed")
                .map(|s| s.parse::<u64>().map_err(|_| Error::Parse(format!("bad seed `{s}`"))))
                .transpose()?
                .unwrap_or(0);
            factorization_bound(a, b, seed)
        }
        other => Err(Error::UnknownCase(other.to_string())),
    }
}

/// The cases and parameters that make up the full verification run, in
/// canonical order. `seed` only affects `factorization-bound`.
pub fn default_suite(seed: u64) -> Vec<(String, CaseParams)> {
    let mut out = Vec::new();
    let mut add = |id: &str, p: CaseParams| out.push((id.to_string(), p));
    for k in 5..=12 {
        add("sl2k-selfdual", params(&[("k", k.to_string())]));
    }
    add("sl2k-selfdual-exclusions", CaseParams::new());
    add("sl2k-nonselfdual-dims", CaseParams::new());
    add("e6-parity", CaseParams::new());
    for m in 3..=9 {
        add("so-selfdual", params(&[("m", m.to_string())]));
    }
    for m in 4..=7 {
        add("so2m-conj-zero", params(&[("m", m.to_string())]));
    }
    add("g2-sl3-coincidence", CaseParams::new());
    for (alg, hw) in [("A1+A1", "ω1|ω1"), ("A2", "2ω1"), ("A3", "ω2"), ("A1+A2", "ω1|ω1")] {
        add("max-norm-bound", params(&[("alg", alg.into()), ("hw", hw.into())]));
    }
    for n in 1..=4 {
        for a in 1..=3 {
            add("sym-power-rigidity", params(&[("n", n.to_string()), ("a", a.to_string())]));
        }
    }
    for f in ["A1,A1", "A2,A2,A2", "A1,A2", "A1,A1,A2,A2"] {
        add("goursat", params(&[("factors", f.into())]));
    }
    for (a, b) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
        add(
            "factorization-bound",
            params(&[("a", a.to_string()), ("b", b.to_string()), ("seed", seed.to_string())]),
        );
    }
    out
}

pub fn run_default_suite(seed: u64) -> Result<Vec<CaseReport>> {
    default_suite(seed)
        .iter()
        .map(|(id, p)| cmd_verify(id, p))
        .collect()
}

fn sl2k_selfdual(k: usize) -> Result<CaseReport> {
    let mut r = CaseReport::new("sl2k-selfdual", json!({ "k": k }));
    let n = 2 * k - 1;
    let t = SimpleType::a(n);
    let alg = SemisimpleAlgebra::simple(t);
    let wk = fundamental(n, k);
    let dim = weyl_dimension(&alg, &HighestWeight(vec![wk.clone()]))?;
    r.check_eq("dim Λ^k Std = C(2k, k)", dim, binom(2 * k as u128, k as u128), P_WEYL);
    r.check_eq("Λ^k Std is self-dual", dual_highest_weight(t, &wk) == wk, true, P_CLASS);
    let rs = build_root_system(t)?;
    r.check_eq(
        "Λ^k Std has one dominant weight, so all weights share one norm",
        dominant_multiplicities(&rs, &wk).len(),
        1,
        "Weyl orbit of a minuscule weight",
    );

    let (kq, k2) = (k as i64, 2 * k as i64);
    let st = alt_power_stats(n, k)?;
    r.check_eq("|w|² of Λ^k Std", show_q(&st.norm2), show_q(&qr(kq * kq, k2)), P_CLOSED);
    let target = qr(1, 1) - qr(2, kq);
    r.check_eq("max_{v≠w} ⟨w,v⟩ / |w|² = 1 - 2/k", show_q(&(&st.max_ip / &st.norm2)), show_q(&target), P_CLOSED);

    let q = |a: i64| a * (k2 - a);
    for a in 1..kq {
        let repeats: Vec<i64> = (1..k2).filter(|&b| q(b) == q(a)).collect();
        r.check_eq(
            format!("a(2k-a) at a = {a} repeats only at a and 2k-a, below its maximum k²"),
            format!("{:?}, {} < {}", repeats, q(a), kq * kq),
            format!("{:?}, {} < {}", vec![a, k2 - a], q(a), kq * kq),
            P_EXACT,
        );
        // Ratio for U = Λ^a ⊕ Λ^{2k-a}: within Λ^a and across the two.
        let sa = alt_power_stats(n, a as usize)?;
        let within = &sa.max_ip / &sa.norm2;
        r.check_eq(
            format!("within Λ^{a}: ratio = 1 - 2k/(a(2k-a))"),
            show_q(&within),
            show_q(&(qr(1, 1) - qr(k2, q(a)))),
            P_CLOSED,
        );
        let across = qr(k2, k2 - a) - qr(1, 1);
        let ratio = if within > across { within } else { across };
        r.check(
            format!("Λ^{a} ⊕ Λ^{} ratio differs from 1 - 2/k", k2 - a),
            show_q(&ratio),
            format!("≠ {}", show_q(&target)),
            ratio != target && qr(2, kq) != qr(k2, q(a)),
            P_EXACT,
        );
    }
    // 1 - 2/k = 2k/(2k-a) - 1  ⇔  2k - a = k²/(k-1).
    let a_star = qr(k2, 1) - qr(kq * kq, kq - 1);
    r.check_eq(
        "solution of 1 - 2/k = 2k/(2k-a) - 1 is a = k-1 - 1/(k-1)",
        show_q(&a_star),
        show_q(&(qr(kq - 1, 1) - qr(1, kq - 1))),
        P_EXACT,
    );
    r.check_eq("that solution is not an integer", a_star.is_integer(), false, P_EXACT);
    // 2/k = 2k/(a(2k-a))  ⇔  (a - k)² = 0.
    let sols: Vec<i64> = (1..kq).filter(|&a| 2 * q(a) == k2 * kq).collect();
    r.check_eq("no integer 1 ≤ a ≤ k-1 solves 2/k = 2k/(a(2k-a))", format!("{sols:?}"), "[]".to_string(), P_EXACT);
    Ok(r.finish())
}

fn sl2k_selfdual_exclusions() -> Result<CaseReport> {
    let mut r = CaseReport::new("sl2k-selfdual-exclusions", json!({}));
    for (k, n, p) in [(3usize, 20u128, 4u128), (4, 70, 7)] {
        let t = SimpleType::a(2 * k - 1);
        let d = weyl_dimension(&SemisimpleAlgebra::simple(t), &HighestWeight(vec![fundamental(2 * k - 1, k)]))?;
        r.check_eq(format!("k = {k}: dim Λ^k Std of sl_{}", 2 * k), d, n, P_WEYL);
        r.check_eq(format!("{p} divides {n}"), n % p, 0, P_EXACT);
        let ap = cmd_allowed_pairs(n as u64)?;
        r.check(
            format!("n = {n} is rejected by the divisibility gate"),
            ap.gate_violations.join("; "),
            "nonempty",
            !ap.accepted(),
            P_GATE,
        );
    }
    Ok(r.finish())
}

fn sl2k_nonselfdual_dims() -> Result<CaseReport> {
    let mut r = CaseReport::new("sl2k-nonselfdual-dims", json!({}));
    let t = SimpleType::a(7);
    let alg = SemisimpleAlgebra::simple(t);
    for (a, n) in [(2usize, 28u128), (3, 56), (4, 70), (5, 56), (6, 28)] {
        let d = weyl_dimension(&alg, &HighestWeight(vec![fundamental(7, a)]))?;
        r.check_eq(format!("dim Λ^{a} Std of sl_8"), d, n, P_WEYL);
        r.check(format!("7 or 4 divides {d}"), d % 28, "7 | d or 4 | d", d % 7 == 0 || d % 4 == 0, P_EXACT);
    }
    let w2 = fundamental(3, 2);
    r.check_eq(
        "k = 2: Λ^2 Std of sl_4 is self-dual, so is not a non-self-dual V",
        dual_highest_weight(SimpleType::a(3), &w2) == w2,
        true,
        P_CLASS,
    );
    let e7 = weyl_dimension(&SemisimpleAlgebra::simple(SimpleType::e(7)), &HighestWeight(vec![fundamental(7, 7)]))?;
    r.check_eq("E7 ω7 has dimension 56 = 7·8", e7, 56, P_WEYL);
    Ok(r.finish())
}

fn e6_parity() -> Result<CaseReport> {
    let mut r = CaseReport::new("e6-parity", json!({}));
    let t = SimpleType::e(6);
    let auts = diagram_automorphisms(t)?;
    let delta = auts
        .nontrivial_involutions()
        .next()
        .ok_or_else(|| Error::InvalidInvolution("E6 has no diagram involution".into()))?
        .clone();
    r.check_eq("δ swaps ω1 and ω6", delta.apply(&Weight(fundamental(6, 1))), Weight(fundamental(6, 6)), "Dynkin diagram of E6");
    for i in [1usize, 6] {
        let fc = irreducible(t, &fundamental(6, i))?;
        r.check_eq(format!("dim V(ω{i})"), fc.dim(), 27, P_WEYL);
        r.check_eq(format!("V(ω{i}) is multiplicity-free"), is_multiplicity_free(&fc), true, "Freudenthal multiplicities");
        r.check_eq(format!("V(ω{i}) is not self-dual"), fc.is_self_dual(), false, P_CLASS);
        let image = FormalCharacter::new(fc.algebra.clone(), fc.weights.iter().map(|(w, &m)| (delta.apply(w), m)))?;
        r.check_eq(format!("δ carries the weights of V(ω{i}) onto those of its dual"), image == fc.dual(), true, P_EXACT);
        r.check_eq("27 is odd", 27 % 2, 1, P_EXACT);
        let fixed = fixed_point_exists(&fc, &delta)?;
        r.check_eq("w ↦ -δ(w) has a fixed point on the weights", fixed, true, "odd-size involution");
        r.check_eq("0 is not a weight", fc.multiplicity(&Weight::zero(6)), 0, "Freudenthal multiplicities");
        let wc = conjugation_sums(&fc, &delta)?;
        r.check("0 occurs in {w + δ(w)}", wc.zero_multiplicity(), "> 0", wc.zero_multiplicity() > 0, P_EXACT);
    }
    Ok(r.finish())
}

/// The standard representation of `so_m`, through the low-rank
/// isomorphisms `so_3 = sl_2`, `so_4 = sl_2 × sl_2`, `so_6 = sl_4`.
pub fn so_standard(m: usize) -> Result<FormalCharacter> {
    match m {
        3 => irreducible(SimpleType::a(1), &[2]),
        4 => {
            let s = irreducible(SimpleType::a(1), &[1])?;
            Ok(s.outer_tensor(&s))
        }
        6 => irreducible(SimpleType::a(3), &[0, 1, 0]),
        m if m >= 5 && m % 2 == 1 => irreducible(SimpleType::b(m / 2), &fundamental(m / 2, 1)),
        m if m >= 8 => irreducible(SimpleType::d(m / 2), &fundamental(m / 2, 1)),
        _ => Err(Error::OutOfRange(format!("so_{m} needs m ≥ 3"))),
    }
}

/// Partitions of `r` into positive parts, largest first.
fn partitions(r: usize) -> Vec<Vec<usize>> {
    fn go(r: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=r.min(max)).rev() {
            cur.push(p);
            go(r - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, &mut Vec::new(), &mut out);
    out
}

/// `p(r)` by the coin-change recurrence, independent of [`partitions`].
fn partition_number(r: usize) -> u128 {
    let mut ways = vec![0u128; r + 1];
    ways[0] = 1;
    for part in 1..=r {
        for total in part..=r {
            ways[total] += ways[total - part];
        }
    }
    ways[r]
}

fn type_a_algebra(parts: &[usize]) -> SemisimpleAlgebra {
    SemisimpleAlgebra::new(parts.iter().map(|&p| SimpleType::a(p)).collect()).expect("nonempty")
}

struct Irrep {
    hw: HighestWeight,
    dim: u64,
    fc: FormalCharacter,
}

/// Multisets of irreducibles (indices into `irreps`) of total dimension `m`
/// whose sum stays multiplicity-free.
fn mf_sums(irreps: &[Irrep], m: u64) -> Vec<Vec<usize>> {
    fn go(irreps: &[Irrep], start: usize, left: u64, acc: &FormalCharacter, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..irreps.len() {
            if irreps[i].dim > left {
                continue;
            }
            let next = acc.direct_sum(&irreps[i].fc).expect("same algebra");
            if !is_multiplicity_free(&next) {
                continue;
            }
            cur.push(i);
            go(irreps, i, left - irreps[i].dim, &next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let Some(first) = irreps.first() else { return out };
    let empty = FormalCharacter::trivial(first.fc.algebra.clone(), 0);
    go(irreps, 0, m, &empty, &mut Vec::new(), &mut out);
    out
}

fn so_selfdual(m: usize) -> Result<CaseReport> {
    let r_ = m / 2;
    let mut r = CaseReport::new("so-selfdual", json!({ "m": m, "rank": r_ }));
    let target = so_standard(m)?;
    r.check_eq("dim of so_m Std", target.dim(), m as u64, P_WEYL);

    // Reduction to type A: restrict to an equal-rank type-A subsystem.
    if target.algebra.num_factors() == 1 && !target.algebra.is_all_type_a() {
        let rs = build_root_system(target.algebra.factors[0])?;
        let sub = type_a_equal_rank(&rs)?;
        let res = restrict_to_subsystem(&target, &sub)?;
        r.check_eq(
            format!("restriction to the equal-rank subalgebra {sub} keeps the formal character"),
            same_formal_character(&res, &target).is_some_and(|w| w.verify()),
            true,
            "equal-rank restriction",
        );
    }

    let parts = partitions(r_);
    let mut enumerated = 0usize;
    let mut matched = 0usize;
    let mut non_self_dual_summands = Vec::new();
    let mut chain_checked = 0usize;
    let mut chain_failures = Vec::new();
    for p in &parts {
        let alg = type_a_algebra(p);
        let mut irreps = Vec::new();
        for (hw, d) in enumerate_irreps_up_to_dim(&alg, m as u128)? {
            let fc = weight_multiset(&alg, &hw)?;
            // Dimension chain for every non-self-dual irreducible that fits.
            if !fc.is_self_dual() {
                let ms: Vec<u128> = alg
                    .factors
                    .iter()
                    .zip(&hw.0)
                    .filter(|(_, h)| h.iter().any(|&x| x != 0))
                    .map(|(t, _)| t.rank as u128)
                    .collect();
                let sum: u128 = ms.iter().sum();
                let prod: u128 = ms.iter().map(|x| 1 + x).product();
                chain_checked += 1;
                // 1 + Σ m_i ≤ Π (1 + m_i) ≤ dim U, yet 2 dim U ≤ 1 + 2 Σ m_i is needed.
                if !(1 + sum <= prod && prod <= d && 2 * d > 1 + 2 * sum) {
                    chain_failures.push(format!("{alg} {hw}"));
                }
            }
            if is_multiplicity_free(&fc) {
                irreps.push(Irrep { hw, dim: d as u64, fc });
            }
        }
        for combo in mf_sums(&irreps, m as u64) {
            let mut fc = FormalCharacter::trivial(alg.clone(), 0);
            for &i in &combo {
                fc = fc.direct_sum(&irreps[i].fc)?;
            }
            if !(0..alg.num_factors()).all(|k| fc.is_faithful_on(k)) {
                continue;
            }
            enumerated += 1;
            if same_formal_character(&fc, &target).is_some_and(|w| w.verify()) {
                matched += 1;
                for &i in &combo {
                    if !irreps[i].fc.is_self_dual() {
                        non_self_dual_summands.push(format!("{alg}: {}", irreps[i].hw));
                    }
                }
            }
        }
    }
    r.inputs = json!({ "m": m, "rank": r_, "type_a_algebras": parts.len(), "faithful_mf_characters": enumerated });
    r.check_eq("type-A algebras of rank ⌊m/2⌋", parts.len() as u128, partition_number(r_), "partition numbers");
    r.check("characters matching so_m Std", matched, "≥ 1", matched >= 1, P_ENUM);
    r.check_eq(
        "every irreducible summand of a matching character is self-dual",
        format!("{non_self_dual_summands:?}"),
        "[]".to_string(),
        P_ENUM,
    );
    r.check_eq(
        format!("dimension chain excludes all {chain_checked} non-self-dual irreducibles of dim ≤ m"),
        format!("{chain_failures:?}"),
        "[]".to_string(),
        "1 + Σ m_i ≤ Π(1 + m_i) ≤ dim U",
    );
    Ok(r.finish())
}

fn so2m_conj_zero(m: usize) -> Result<CaseReport> {
    let mut r = CaseReport::new("so2m-conj-zero", json!({ "m": m }));
    let t = SimpleType::d(m);
    let fc = irreducible(t, &fundamental(m, 1))?;
    r.check_eq("dim so_2m Std", fc.dim(), 2 * m as u64, P_WEYL);
    let auts = diagram_automorphisms(t)?;
    // The involution that fixes Std (for D4, the one swapping ω3 and ω4).
    let inv = auts
        .nontrivial_involutions()
        .find(|i| i.apply(&Weight(fundamental(m, 1))) == Weight(fundamental(m, 1)))
        .ok_or_else(|| Error::InvalidInvolution(format!("no outer involution of {t} fixes ω1")))?
        .clone();
    let wc = conjugation_sums(&fc, &inv)?;
    r.check_eq("{w + c(w)} has size 2m", wc.size(), 2 * m as u64, P_EXACT);
    r.check_eq("0 occurs in {w + c(w)} with multiplicity 2", wc.zero_multiplicity(), 2, "outer automorphism of so_2m on Std weights");
    Ok(r.finish())
}

fn g2_sl3_coincidence() -> Result<CaseReport> {
    let mut r = CaseReport::new("g2-sl3-coincidence", json!({}));
    let v7 = irreducible(SimpleType::G2, &[1, 0])?;
    let a2 = SimpleType::a(2);
    let summands = [irreducible(a2, &[1, 0])?, irreducible(a2, &[0, 1])?, irreducible(a2, &[0, 0])?];
    let sum = summands[0].direct_sum(&summands[1])?.direct_sum(&summands[2])?;
    r.check_eq("dim G2 V7", v7.dim(), 7, P_WEYL);
    r.check_eq("dim Std ⊕ Std∨ ⊕ 1", sum.dim(), 7, P_WEYL);
    let w = same_formal_character(&v7, &sum);
    r.check_eq("a formal-character isomorphism exists", w.is_some(), true, "Gram-preserving search");
    r.check_eq("the witness maps the weight multiset exactly", w.as_ref().is_some_and(|w| w.verify()), true, P_EXACT);
    r.check_eq("Std ⊕ Std∨ ⊕ 1 is self-dual", sum.is_self_dual(), true, P_EXACT);
    let sd: Vec<bool> = summands[..2].iter().map(|s| s.is_self_dual()).collect();
    r.check_eq("no non-trivial irreducible summand is self-dual", format!("{sd:?}"), "[false, false]".to_string(), P_EXACT);
    Ok(r.finish())
}

fn max_norm_bound(p: &CaseParams) -> Result<CaseReport> {
    let fc = if let Some(path) = p.get("char") {
        CharacterFile::read(std::path::Path::new(path))?.character()?
    } else {
        let alg: SemisimpleAlgebra = p.get("alg").map(String::as_str).unwrap_or("A1+A1").parse()?;
        let hw = parse_highest_weight(&alg, p.get("hw").map(String::as_str).unwrap_or("ω1|ω1"))?;
        weight_multiset(&alg, &hw)?
    };
    let inputs: Value = json!({
        "algebra": fc.algebra.to_string(),
        "dim": fc.dim(),
        "source": p.get("char").cloned().or_else(|| p.get("hw").cloned()),
    });
    let mut r = CaseReport::new("max-norm-bound", inputs);
    let rep = max_norm_weights(&fc)?;
    let rank = fc.rank();
    let count = rep.weights.len();
    r.check("W_max spans the weight space", rep.spans, true, true, "informational");
    if rep.spans {
        r.check(
            "#W_max ≥ r + 1",
            count,
            format!("≥ {}", rank + 1),
            count > rank,
            "max-norm counting bound",
        );
        let k = fc.algebra.num_factors();
        r.check(
            "#W_max = r + 1 only for a simple algebra",
            format!("#W_max = {count}, k = {k}"),
            "equality ⇒ k = 1",
            count != rank + 1 || k == 1,
            if rep.type_a { "max-norm counting bound" } else { "max-norm counting bound (proved for type A)" },
        );
    }
    Ok(r.finish())
}

/// Least `Σ_{I∈P} Π_{i∈I} (1 + n_i)` over set partitions `P` of the factors.
fn min_partition_bound(ns: &[u128]) -> u128 {
    fn go(ns: &[u128], i: usize, blocks: &mut Vec<u128>, best: &mut u128) {
        if i == ns.len() {
            *best = (*best).min(blocks.iter().sum());
            return;
        }
        for j in 0..blocks.len() {
            blocks[j] *= 1 + ns[i];
            go(ns, i + 1, blocks, best);
            blocks[j] /= 1 + ns[i];
        }
        blocks.push(1 + ns[i]);
        go(ns, i + 1, blocks, best);
        blocks.pop();
    }
    let mut best = u128::MAX;
    go(ns, 0, &mut Vec::new(), &mut best);
    best
}

fn sym_power_rigidity(n: usize, a: usize) -> Result<CaseReport> {
    let mut r = CaseReport::new("sym-power-rigidity", json!({ "n": n, "a": a }));
    let t = SimpleType::a(n);
    let mut hw = vec![0i64; n];
    hw[0] = a as i64;
    let fc = irreducible(t, &hw)?;
    let rep = max_norm_weights(&fc)?;
    r.check_eq("Sym^a Std has exactly n + 1 weights of maximal norm", rep.weights.len(), n + 1, "weights a·e_i");
    let std = irreducible(t, &fundamental(n, 1))?;
    let expected: BTreeSet<Weight> = std.weights.keys().map(|w| w.scaled(a as i64)).collect();
    let got: BTreeSet<Weight> = rep.weights.iter().cloned().collect();
    r.check_eq("they are the weights a·e_i", got == expected, true, "weights a·e_i");
    r.check_eq("they span the weight space", rep.spans, true, P_EXACT);
    let mut worst = Vec::new();
    for p in partitions(n).into_iter().filter(|p| p.len() >= 2) {
        let ns: Vec<u128> = p.iter().map(|&x| x as u128).collect();
        let b = min_partition_bound(&ns);
        if b <= (n + 1) as u128 {
            worst.push(format!("{p:?}: {b}"));
        }
    }
    r.check_eq(
        "every rank-n type-A algebra with k ≥ 2 factors needs more than n + 1 maximal weights",
        format!("{worst:?}"),
        "[]".to_string(),
        "max-norm counting bound, exhaustive over partitions",
    );
    Ok(r.finish())
}

fn bell(n: usize) -> u128 {
    // Bell triangle.
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("nonempty")];
        for x in &row {
            let v = next.last().expect("nonempty") + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

fn goursat_case(factors: &str) -> Result<CaseReport> {
    let ts = factors
        .split([',', '+', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<SimpleType>())
        .collect::<Result<Vec<_>>>()?;
    let mut r = CaseReport::new("goursat", json!({ "factors": ts.iter().map(|t| t.to_string()).collect::<Vec<_>>() }));
    let rep = verify_goursat_lemma(&ts)?;
    let mut groups: BTreeMap<SimpleType, usize> = BTreeMap::new();
    for t in &ts {
        *groups.entry(*t).or_insert(0) += 1;
    }
    let expected: u128 = groups.values().map(|&c| bell(c)).product();
    r.check_eq("type-compatible partitions checked", rep.specs_checked as u128, expected, "product of Bell numbers");
    r.check_eq("full rank exactly at the full product", format!("{:?}", rep.counterexamples), "[]".to_string(), P_ENUM);
    let full = goursat_rank(&GoursatSpec::full(ts.clone()))?;
    r.check_eq("rank of the full product", full, ts.iter().map(|t| t.rank).sum(), P_EXACT);
    Ok(r.finish())
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `(ab)! / (a! b!)`.
pub fn factorization_count_bound(a: usize, b: usize) -> BigUint {
    factorial(a * b) / (factorial(a) * factorial(b))
}

fn random_multiset(rng: &mut ChaCha8Rng, size: usize) -> GroupMultiset {
    let vs = (0..size)
        .map(|_| vec![rng.gen_range(-3..=3), rng.gen_range(-3..=3)])
        .collect();
    GroupMultiset::from_vectors(2, vs).expect("dimension 2")
}

fn factorization_bound(a: usize, b: usize, seed: u64) -> Result<CaseReport> {
    let mut r = CaseReport::new("factorization-bound", json!({ "a": a, "b": b, "seed": seed }));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = factorization_count_bound(a, b);
    let fa = random_multiset(&mut rng, a);
    let fb = random_multiset(&mut rng, b);
    let c = multiset_product(&fa, &fb)?;
    let decs = factorizations(&c, &[a, b])?;
    r.check(
        format!("C = AB of size {}: count ≤ (ab)!/(a!b!)", a * b),
        decs.len(),
        format!("≤ {bound}"),
        BigUint::from(decs.len()) <= bound,
        "enumeration bound",
    );
    let mut key = vec![fa.canonical(), fb.canonical()];
    key.sort();
    r.check_eq("the planted factorization is found", decs.iter().any(|d| d.class_key() == key), true, P_ENUM);
    r.check_eq(
        "every decomposition multiplies back to C",
        decs.iter().all(|d| d.product().ok().as_ref() == Some(&c)),
        true,
        P_EXACT,
    );
    let free = random_multiset(&mut rng, a * b);
    let decs = factorizations(&free, &[a, b])?;
    r.check(
        format!("random C of size {}: count ≤ (ab)!/(a!b!)", a * b),
        decs.len(),
        format!("≤ {bound}"),
        BigUint::from(decs.len()) <= bound,
        "enumeration bound",
    );
    Ok(r.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn helpers() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!((1..=8).map(partition_number).collect::<Vec<_>>(), vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(bell(3), 5);
        assert_eq!(bell(4), 15);
        assert_eq!(min_partition_bound(&[1, 1]), 4);
        assert_eq!(factorization_count_bound(2, 3), BigUint::from(60u32));
    }

    #[test]
    fn unknown_and_out_of_range() {
        assert!(matches!(cmd_verify("nope", &CaseParams::new()), Err(Error::UnknownCase(_))));
        let p = params(&[("k", "4".into())]);
        assert!(matches!(cmd_verify("sl2k-selfdual", &p), Err(Error::OutOfRange(_))));
        let p = params(&[("m", "10".into())]);
        assert!(matches!(cmd_verify("so-selfdual", &p), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn small_cases_pass() {
        for (id, p) in [
            ("sl2k-selfdual", params(&[("k", "5".into())])),
            ("sl2k-selfdual-exclusions", CaseParams::new()),
            ("sl2k-nonselfdual-dims", CaseParams::new()),
            ("g2-sl3-coincidence", CaseParams::new()),
            ("so-selfdual", params(&[("m", "5".into())])),
            ("so2m-conj-zero", params(&[("m", "4".into())])),
            ("sym-power-rigidity", params(&[("n", "3".into()), ("a", "2".into())])),
            ("goursat", CaseParams::new()),
            ("factorization-bound", params(&[("seed", "7".into())])),
            ("max-norm-bound", CaseParams::new()),
        ] {
            let r = cmd_verify(id, &p).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn sl2k_selfdual_mentions_non_integral_root() {
        let r = cmd_verify("sl2k-selfdual", &params(&[("k", "5".into())])).unwrap();
        assert!(r.steps.iter().any(|s| s.computed == "15/4"));
    }
}
