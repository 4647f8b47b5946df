use std::collections::BTreeMap;

use charlattice::abmultiset::{equivalent, factorizations, multiset_product, GroupMultiset};
use charlattice::charmatch::{alt_power_stats, same_formal_character};
use charlattice::linalg::Q;
use charlattice::goursat::{goursat_rank, GoursatSpec};
use charlattice::reps::{irreducible, weyl_dimension, FormalCharacter, HighestWeight, SemisimpleAlgebra};
use charlattice::rootsys::{build_root_system, dominant, orbit_of, reflect, SimpleType, Weight};
use charlattice::verify::{dual_highest_weight, CharacterFile};
use proptest::prelude::*;

fn small_type() -> impl Strategy<Value = SimpleType> {
    prop_oneof![
        (1usize..=6).prop_map(SimpleType::a),
        (2usize..=5).prop_map(SimpleType::b),
        (3usize..=5).prop_map(SimpleType::c),
        (4usize..=6).prop_map(SimpleType::d),
        (6usize..=8).prop_map(SimpleType::e),
        Just(SimpleType::F4),
        Just(SimpleType::G2),
    ]
}

/// A type with a highest weight whose module stays small enough to expand.
fn small_irrep() -> impl Strategy<Value = (SimpleType, Vec<i64>)> {
    small_type()
        .prop_flat_map(|t| (Just(t), proptest::collection::vec(0i64..=2, t.rank)))
        .prop_filter("dimension at most 2000", |(t, hw)| dim(*t, hw) <= 2000)
}

fn dim(t: SimpleType, hw: &[i64]) -> u128 {
    let alg = SemisimpleAlgebra::simple(t);
    weyl_dimension(&alg, &HighestWeight(vec![hw.to_vec()])).unwrap()
}

/// Unimodular integer matrix: a product of elementary row operations and a
/// coordinate permutation.
fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    let ops = proptest::collection::vec((0..n, 0..n, prop_oneof![Just(-1i64), Just(1)]), 0..3 * n);
    (ops, Just((0..n).collect::<Vec<usize>>()).prop_shuffle()).prop_map(move |(ops, perm)| {
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (perm[i] == j) as i64).collect()).collect();
        for (i, j, s) in ops {
            if i != j {
                let row = m[j].clone();
                for (x, y) in m[i].iter_mut().zip(row) {
                    *x += s * y;
                }
            }
        }
        m
    })
}

fn transform(fc: &FormalCharacter, u: &[Vec<i64>]) -> FormalCharacter {
    let weights = fc.weights.iter().map(|(w, &m)| {
        let img = u.iter().map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum()).collect();
        (Weight(img), m)
    });
    FormalCharacter::new(fc.algebra.clone(), weights).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reflections_are_involutions(t in small_type(), seed in proptest::collection::vec(-3i64..=3, 8)) {
        let rs = build_root_system(t).unwrap();
        let w: Vec<i64> = seed[..t.rank].to_vec();
        for i in 0..t.rank {
            let mut v = w.clone();
            reflect(&rs.cartan_matrix, i, &mut v);
            prop_assert_eq!(v[i], -w[i]);
            reflect(&rs.cartan_matrix, i, &mut v);
            prop_assert_eq!(&v, &w);
        }
        let d = dominant(&rs.cartan_matrix, &w);
        prop_assert!(d.iter().all(|&c| c >= 0));
        prop_assert_eq!(dominant(&rs.cartan_matrix, &d), d);
    }

    #[test]
    fn orbit_sizes_divide_the_weyl_group(t in small_type(), hw in proptest::collection::vec(0i64..=1, 8)) {
        prop_assume!(t.rank <= 6);
        let rs = build_root_system(t).unwrap();
        let hw = &hw[..t.rank];
        let orbit = orbit_of(&rs.cartan_matrix, hw);
        prop_assert_eq!(t.weyl_group_order() % orbit.len() as u128, 0);
        for w in &orbit {
            prop_assert_eq!(dominant(&rs.cartan_matrix, w), hw.to_vec());
        }
    }

    #[test]
    fn ambient_roundtrip(t in small_type(), w in proptest::collection::vec(-4i64..=4, 8)) {
        let rs = build_root_system(t).unwrap();
        let w = &w[..t.rank];
        prop_assert_eq!(rs.from_ambient(&rs.to_ambient(w)), Some(w.to_vec()));
        prop_assert_eq!(rs.positive_roots().len(), t.num_positive_roots());
    }

    #[test]
    fn irreducible_invariants((t, hw) in small_irrep()) {
        let fc = irreducible(t, &hw).unwrap();
        prop_assert_eq!(fc.dim() as u128, dim(t, &hw));
        prop_assert!(fc.weight_sum().is_zero());
        prop_assert!(fc.is_weyl_stable().unwrap());
        prop_assert_eq!(fc.multiplicity(&Weight(hw.clone())), 1);
        let dual = irreducible(t, &dual_highest_weight(t, &hw)).unwrap();
        prop_assert_eq!(fc.dual(), dual);
    }

    #[test]
    fn matching_recovers_unimodular_images((t, hw) in small_irrep().prop_filter("small", |(t, hw)| t.rank <= 4 && dim(*t, hw) <= 200),
                                          u in unimodular(4)) {
        let fc = irreducible(t, &hw).unwrap();
        let u: Vec<Vec<i64>> = u[..t.rank].iter().map(|r| r[..t.rank].to_vec()).collect();
        prop_assume!(charlattice::linalg::rank(&charlattice::linalg::from_int(&u)) == t.rank);
        let image = transform(&fc, &u);
        let iso = same_formal_character(&fc, &image);
        prop_assert!(iso.is_some());
        let iso = iso.unwrap();
        prop_assert!(iso.verify());
        prop_assert!(iso.inverse().unwrap().verify());
    }

    #[test]
    fn matching_rejects_extra_weight((t, hw) in small_irrep().prop_filter("small", |(t, hw)| dim(*t, hw) <= 200)) {
        let fc = irreducible(t, &hw).unwrap();
        let bigger = fc.direct_sum(&FormalCharacter::trivial(fc.algebra.clone(), 1)).unwrap();
        prop_assert!(same_formal_character(&fc, &bigger).is_none());
    }

    #[test]
    fn alt_power_stats_match_gram_oracle(n in 1usize..=9, a in 1usize..=9) {
        prop_assume!(a <= n);
        let s = alt_power_stats(n, a).unwrap();
        let fc = irreducible(SimpleType::a(n), &{
            let mut hw = vec![0; n];
            hw[a - 1] = 1;
            hw
        }).unwrap();
        prop_assert_eq!(fc.max_multiplicity(), 1);
        // (n+1)⟨ω_i, ω_j⟩ = min(i,j)(n+1-max(i,j)) for sl_{n+1}.
        let m = n as i64 + 1;
        let gram = |u: &[i64], v: &[i64]| -> Q {
            let mut acc = 0i64;
            for i in 0..n {
                for j in 0..n {
                    let (lo, hi) = ((i.min(j) + 1) as i64, (i.max(j) + 1) as i64);
                    acc += u[i] * v[j] * lo * (m - hi);
                }
            }
            Q::new(acc.into(), m.into())
        };
        let ws: Vec<&Weight> = fc.weights.keys().collect();
        let mut ips = Vec::new();
        for (i, u) in ws.iter().enumerate() {
            prop_assert_eq!(gram(&u.0, &u.0), s.norm2.clone());
            for v in &ws[i + 1..] {
                ips.push(gram(&u.0, &v.0));
            }
        }
        if !ips.is_empty() {
            prop_assert_eq!(ips.iter().max().unwrap(), &s.max_ip);
            prop_assert_eq!(ips.iter().min().unwrap(), &s.min_ip);
        }
    }

    #[test]
    fn character_file_roundtrip((t, hw) in small_irrep()) {
        let fc = irreducible(t, &hw).unwrap();
        let file = CharacterFile::from_character(&fc, None);
        let back = CharacterFile::parse(&file.emit()).unwrap();
        prop_assert_eq!(&back, &file);
        prop_assert_eq!(back.character().unwrap(), fc);
    }
}

fn planar_multiset(min_len: usize, max_len: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), min_len..=max_len)
}

/// Every factorization class by direct search. Translating so that
/// `min A = 0` (lexicographic order is translation invariant) forces
/// `min B = min C`, hence `B ⊂ C` and `A ⊂ C - min C`.
fn brute_force_classes(c: &GroupMultiset, a: usize, b: usize) -> BTreeMap<Vec<GroupMultiset>, ()> {
    let elems: Vec<Vec<i64>> = c.elems.iter().map(|e| e.free.clone()).collect();
    let low = elems.iter().min().unwrap().clone();
    let shifted: Vec<Vec<i64>> = elems.iter().map(|v| vec![v[0] - low[0], v[1] - low[1]]).collect();
    let subsets = |pool: &[Vec<i64>], k: usize| -> Vec<GroupMultiset> {
        let mut out: Vec<GroupMultiset> = (0u32..1 << pool.len())
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| {
                let pick = (0..pool.len()).filter(|i| m >> i & 1 == 1).map(|i| pool[i].clone()).collect();
                GroupMultiset::from_vectors(2, pick).unwrap()
            })
            .collect();
        out.sort();
        out.dedup();
        out
    };
    let mut found = BTreeMap::new();
    for am in subsets(&shifted, a) {
        for bm in subsets(&elems, b) {
            if multiset_product(&am, &bm).unwrap() == *c {
                let mut key = vec![am.canonical(), bm.canonical()];
                key.sort();
                found.insert(key, ());
            }
        }
    }
    found
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planted_products_are_found(a in planar_multiset(2, 3), b in planar_multiset(2, 3)) {
        let am = GroupMultiset::from_vectors(2, a).unwrap();
        let bm = GroupMultiset::from_vectors(2, b).unwrap();
        let c = multiset_product(&am, &bm).unwrap();
        let decs = factorizations(&c, &[am.len(), bm.len()]).unwrap();
        let mut planted = vec![am.canonical(), bm.canonical()];
        planted.sort();
        prop_assert!(decs.iter().any(|d| d.class_key() == planted));
        for d in &decs {
            prop_assert_eq!(d.product().unwrap(), c.clone());
        }
        if c.len() <= 9 {
            let oracle = brute_force_classes(&c, am.len(), bm.len());
            let got: BTreeMap<Vec<GroupMultiset>, ()> = decs.iter().map(|d| (d.class_key(), ())).collect();
            prop_assert_eq!(got, oracle);
        }
    }

    #[test]
    fn canonical_forms_ignore_translation(a in planar_multiset(1, 5), t in proptest::collection::vec(-5i64..=5, 2)) {
        let am = GroupMultiset::from_vectors(2, a).unwrap();
        let xi = am.ambient.elem(0, t).unwrap();
        let moved = am.translate(&xi);
        prop_assert_eq!(moved.canonical(), am.canonical());
        let w = equivalent(&am, &moved).unwrap();
        prop_assert!(w.is_some());
        prop_assert_eq!(am.translate(&w.unwrap()), moved);
    }

    #[test]
    fn goursat_rank_is_sum_over_blocks(labels in proptest::collection::vec(0usize..3, 1..=6)) {
        let types = [SimpleType::a(1), SimpleType::a(2), SimpleType::G2];
        let factors: Vec<SimpleType> = labels.iter().map(|&l| types[l]).collect();
        // Merge equal types greedily into one block each.
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, t) in factors.iter().enumerate() {
            match blocks.iter_mut().find(|b| factors[b[0]] == *t) {
                Some(b) => b.push(i),
                None => blocks.push(vec![i]),
            }
        }
        let spec = GoursatSpec::new(factors.clone(), blocks.clone()).unwrap();
        let distinct: usize = blocks.iter().map(|b| factors[b[0]].rank).sum();
        prop_assert_eq!(goursat_rank(&spec).unwrap(), distinct);
        let total: usize = factors.iter().map(|t| t.rank).sum();
        prop_assert_eq!(goursat_rank(&GoursatSpec::full(factors.clone())).unwrap(), total);
        prop_assert_eq!(distinct == total, spec.all_singletons());
    }
}
