mod common;

use common::*;
use uqcanon::canonical::{triangular_reduce, MonomialCache};
use uqcanon::LaurentPoly;

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

#[test]
fn first_two_elements_need_no_correction() {
    let r = g2_golden_realization();
    let vs = golden_vertices(&r).unwrap();
    let mut cache = MonomialCache::new();
    assert_eq!(r.monomial_vector(vs[0], &mut cache).unwrap(), g_pi1());
    assert_eq!(r.monomial_vector(vs[1], &mut cache).unwrap(), g_pi2());
}

#[test]
fn pi4_sweep_subtracts_q_plus_inverse_times_pi1() {
    let r = g2_golden_realization();
    let vs = golden_vertices(&r).unwrap();
    let block = r.canonical_block(&g2_golden_nu()).unwrap();
    let find = |v: usize| block.elements.iter().find(|e| e.vertex == v).unwrap();
    let mut done = vec![find(vs[0]), find(vs[1])];
    done.sort_by(|a, b| b.leading.cmp(&a.leading));
    let mut cache = MonomialCache::new();
    let x = r.monomial_vector(vs[3], &mut cache).unwrap();
    let (g, xis) = triangular_reduce(x, &done).unwrap();
    assert_eq!(g, g_pi4());
    let xi_of = |v: usize| xis[done.iter().position(|e| e.vertex == v).unwrap()].clone();
    assert_eq!(xi_of(vs[0]), lp("-q-q^-1"));
    assert!(xi_of(vs[1]).is_zero());
}

#[test]
fn pi5_sweep_order_and_coefficients() {
    let r = g2_golden_realization();
    let vs = golden_vertices(&r).unwrap();
    let block = r.canonical_block(&g2_golden_nu()).unwrap();
    let mut done: Vec<_> = block.elements.iter().filter(|e| e.vertex != vs[4]).collect();
    done.sort_by(|a, b| b.leading.cmp(&a.leading));
    let mut cache = MonomialCache::new();
    let x = r.monomial_vector(vs[4], &mut cache).unwrap();
    assert_eq!(x, f_pi5());
    let (_, xis) = triangular_reduce(x, &done).unwrap();
    let nonzero: Vec<(usize, LaurentPoly)> = done
        .iter()
        .zip(&xis)
        .filter(|(_, xi)| !xi.is_zero())
        .map(|(e, xi)| (vs.iter().position(|&v| v == e.vertex).unwrap() + 1, xi.clone()))
        .collect();
    assert_eq!(nonzero, vec![(3, lp("-q-q^-1")), (1, lp("-q-q^-1")), (4, lp("-1"))]);
}

#[test]
fn leading_indices_are_the_expected_first_terms() {
    let r = g2_golden_realization();
    let vs = golden_vertices(&r).unwrap();
    let block = r.canonical_block(&g2_golden_nu()).unwrap();
    let lead = |v: usize| block.elements.iter().find(|e| e.vertex == v).unwrap().leading.clone();
    let expected = [16, 11, 17, 13, 18];
    for (v, k) in vs.iter().zip(expected) {
        assert_eq!(lead(*v), x(k));
    }
}

#[test]
fn x_labels_are_lex_sorted_and_have_weight_mu() {
    let r = g2_golden_realization();
    let mu = uqcanon::Weight(vec![-2, 2]);
    for k in 1..=18 {
        assert_eq!(r.space().index_weight(&x(k)), mu, "x{k}");
        if k > 1 {
            assert!(x(k - 1) < x(k));
        }
    }
}
