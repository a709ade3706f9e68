use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use uqcanon::canonical::{check_triangular_form, MonomialCache, Realization};
use uqcanon::module::{weight_multiplicity_oracle, TensorVector};
use uqcanon::path::RootOp;
use uqcanon::type_a::{lectof_monomial, tableau_crystal_op, tableau_to_tensor_index, TableauCrystal};
use uqcanon::{AdaptedMonomial, CartanDatum, RootVector, Weight};

fn small_case() -> impl Strategy<Value = (String, Vec<i64>)> {
    prop_oneof![
        (1i64..=4).prop_map(|a| ("A1".to_string(), vec![a])),
        (0i64..=2, 0i64..=2).prop_filter("nonzero", |(a, b)| a + b > 0).prop_map(|(a, b)| ("A2".to_string(), vec![a, b])),
        (0i64..=1, 0i64..=1, 0i64..=1).prop_filter("nonzero", |(a, b, c)| a + b + c > 0).prop_map(|(a, b, c)| ("A3".to_string(), vec![a, b, c])),
        prop_oneof![Just(vec![1, 0]), Just(vec![0, 1]), Just(vec![2, 0]), Just(vec![1, 1])].prop_map(|l| ("G2".to_string(), l)),
    ]
}

fn realization(name: &str, lambda: &[i64]) -> Realization {
    let d: CartanDatum = name.parse().unwrap();
    Realization::builtin(&d, &Weight(lambda.to_vec())).unwrap()
}

/// A random block, capped in height so the G2 cases stay quick.
fn pick_block(r: &Realization, seed: u64) -> RootVector {
    let nus: Vec<RootVector> = r.crystal().weight_blocks().into_keys().filter(|nu| nu.height() <= 8).collect();
    nus[(seed as usize) % nus.len()].clone()
}

fn apply_monomial(r: &Realization, m: &AdaptedMonomial) -> TensorVector {
    let mut x = r.space().highest_vector();
    for &(i, n) in m.factors.iter().rev() {
        x = r.space().divided_power_f(i, n, &x).unwrap();
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn blocks_have_triangular_form_and_oracle_sizes((name, lambda) in small_case(), seed in any::<u64>()) {
        let r = realization(&name, &lambda);
        let nu = pick_block(&r, seed);
        let block = r.canonical_block(&nu).unwrap();
        let mut leads = BTreeSet::new();
        for e in &block.elements {
            let lead = check_triangular_form(&e.vector).unwrap();
            prop_assert!(leads.insert(lead));
            let w = r.space().vector_weight(&e.vector).unwrap();
            prop_assert_eq!(w, r.lambda().sub(&r.datum().root_to_weight(&nu)));
        }
        prop_assert_eq!(block.len(), weight_multiplicity_oracle(r.space(), &nu).unwrap());
    }

    #[test]
    fn order_independence((name, lambda) in small_case(), seed in any::<u64>()) {
        let r = realization(&name, &lambda);
        let nu = pick_block(&r, seed);
        let base = r.canonical_block(&nu).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        let mut remaining = r.block_paths(&nu);
        let mut order = Vec::new();
        while !remaining.is_empty() {
            let minimal: Vec<usize> = remaining.iter().copied().filter(|&p| !remaining.iter().any(|&s| s != p && r.path_less(s, p))).collect();
            let pick = *minimal.choose(&mut rng).unwrap();
            remaining.retain(|&p| p != pick);
            order.push(pick);
        }
        let other = r.canonical_block_in_order(&nu, &order).unwrap();
        let key = |b: &uqcanon::WeightBlock| b.elements.iter().map(|e| (e.vertex, e.vector.clone())).collect::<std::collections::BTreeMap<_, _>>();
        prop_assert_eq!(key(&base), key(&other));
    }

    #[test]
    fn incremental_and_direct_monomial_vectors_agree((name, lambda) in small_case(), seed in any::<u64>()) {
        let r = realization(&name, &lambda);
        let v = (seed as usize) % r.crystal().len();
        let mut cache = MonomialCache::new();
        prop_assert_eq!(r.monomial_vector(v, &mut cache).unwrap(), r.monomial_vector_direct(v).unwrap());
    }

    #[test]
    fn tableau_operators((n, lambda) in prop_oneof![
        (0i64..=2, 0i64..=2).prop_map(|(a, b)| (2usize, vec![a, b])),
        (0i64..=1, 0i64..=2, 0i64..=1).prop_map(|(a, b, c)| (3usize, vec![a, b, c])),
    ], seed in any::<u64>(), i in 0usize..3) {
        prop_assume!(i < n && lambda.iter().sum::<i64>() > 0);
        let lambda = Weight(lambda);
        let crystal = TableauCrystal::generate(n, &lambda).unwrap();
        let t = &crystal.vertices()[(seed as usize) % crystal.len()];
        let d: CartanDatum = format!("A{n}").parse().unwrap();
        if let Some(f) = tableau_crystal_op(t, i, RootOp::F) {
            prop_assert_eq!(tableau_crystal_op(&f, i, RootOp::E), Some(t.clone()));
            let changed: Vec<(usize, usize)> = t.columns().iter().flatten().zip(f.columns().iter().flatten()).map(|(a, b)| (*a, *b)).filter(|(a, b)| a != b).collect();
            prop_assert_eq!(changed, vec![(i + 1, i + 2)]);
            prop_assert_eq!(f.weight(n), t.weight(n).sub(&d.simple_root(i)));
        }
        if let Some(e) = tableau_crystal_op(t, i, RootOp::E) {
            prop_assert_eq!(tableau_crystal_op(&e, i, RootOp::F), Some(t.clone()));
        }
        let m = lectof_monomial(t).unwrap();
        let nu = d.weight_to_root(&lambda.sub(&t.weight(n))).unwrap();
        prop_assert_eq!(m.weight(n), nu);
    }
}

#[test]
fn path_leading_index_is_the_tableau_index() {
    for (n, l) in [(2usize, vec![1, 1]), (2, vec![2, 1]), (3, vec![0, 1, 0]), (3, vec![1, 1, 0])] {
        let d: CartanDatum = format!("A{n}").parse().unwrap();
        let lambda = Weight(l);
        let r = Realization::builtin(&d, &lambda).unwrap();
        let tableaux = TableauCrystal::generate(n, &lambda).unwrap();
        let map = tableaux.isomorphism_to(r.crystal()).unwrap();
        let mut cache = MonomialCache::new();
        for (t, &v) in tableaux.vertices().iter().zip(&map) {
            let x = r.monomial_vector(v, &mut cache).unwrap();
            assert_eq!(x.leading_key().unwrap(), &tableau_to_tensor_index(n, t).unwrap(), "{t}");
        }
    }
}

#[test]
fn both_monomials_share_the_leading_index() {
    let d: CartanDatum = "A2".parse().unwrap();
    let lambda = Weight(vec![1, 1]);
    let r = Realization::builtin(&d, &lambda).unwrap();
    let tableaux = TableauCrystal::generate(2, &lambda).unwrap();
    let map = tableaux.isomorphism_to(r.crystal()).unwrap();
    for (t, &v) in tableaux.vertices().iter().zip(&map) {
        let ours = apply_monomial(&r, &r.label(v).monomial);
        let theirs = apply_monomial(&r, &lectof_monomial(t).unwrap());
        assert_eq!(ours.leading_key(), theirs.leading_key(), "{t}");
    }
}

#[test]
fn tableau_index_is_injective() {
    let tableaux = TableauCrystal::generate(2, &Weight(vec![1, 1])).unwrap();
    let idx: BTreeSet<_> = tableaux.vertices().iter().map(|t| tableau_to_tensor_index(2, t).unwrap()).collect();
    assert_eq!(idx.len(), 8);
}
