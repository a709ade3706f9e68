#![allow(dead_code)]

use uqcanon::canonical::Realization;
use uqcanon::module::{MultiIndex, TensorVector, Vector};
use uqcanon::{CartanDatum, LaurentPoly, RootVector, Weight};

/// Tensor basis vectors `x_1 .. x_18` of weight `(-2, 2)` in `V(l1)⊗V(l1)⊗V(l2)` for G2, as
/// `(v_a, v_b, w_c)`, 1-based.
pub const X_INDEX: [(usize, usize, usize); 18] = [
    (1, 2, 10),
    (1, 4, 5),
    (1, 5, 4),
    (2, 1, 10),
    (2, 2, 7),
    (2, 2, 8),
    (2, 3, 5),
    (2, 4, 4),
    (2, 5, 3),
    (2, 7, 1),
    (3, 2, 5),
    (4, 1, 5),
    (4, 2, 4),
    (4, 5, 1),
    (5, 1, 4),
    (5, 2, 3),
    (5, 4, 1),
    (7, 2, 1),
];

pub fn x(k: usize) -> MultiIndex {
    let (a, b, c) = X_INDEX[k - 1];
    vec![a - 1, b - 1, c - 1]
}

pub fn expansion(terms: &[(&str, usize)]) -> TensorVector {
    let mut v = Vector::zero();
    for (c, k) in terms {
        v.add_term(x(*k), c.parse::<LaurentPoly>().expect("golden coefficient"));
    }
    v
}

pub fn g2() -> CartanDatum {
    "G2".parse().unwrap()
}

pub fn g2_golden_realization() -> Realization {
    Realization::builtin(&g2(), &Weight(vec![2, 1])).unwrap()
}

/// `nu` for the weight `(-2, 2)` of `V(2 lambda_1 + lambda_2)`.
pub fn g2_golden_nu() -> RootVector {
    RootVector(vec![5, 2])
}

pub fn g_pi1() -> TensorVector {
    expansion(&[
        ("1", 16),
        ("q^2", 15),
        ("q^3", 13),
        ("q^6", 12),
        ("q^8", 11),
        ("q", 9),
        ("q^3", 8),
        ("q^7", 7),
        ("q^5", 3),
        ("q^8", 2),
    ])
}

pub fn g_pi2() -> TensorVector {
    expansion(&[("1", 11), ("q^3", 7), ("q^6", 6)])
}

pub fn f_pi3() -> TensorVector {
    expansion(&[
        ("1", 17),
        ("q^2", 16),
        ("q^2", 14),
        ("q^3", 13),
        ("q^6", 11),
        ("q^3", 9),
        ("q^5", 8),
        ("q^9", 7),
    ])
}

pub fn f_pi4() -> TensorVector {
    expansion(&[
        ("q+q^-1", 16),
        ("q+q^3", 15),
        ("1+q^2+q^4", 13),
        ("q^3+q^5+q^7", 12),
        ("q^3+q^5+q^7+q^9", 11),
        ("1+q^2", 9),
        ("2*q^2+q^4", 8),
        ("q^4+2*q^6+q^8", 7),
        ("q^4", 5),
        ("q^6", 4),
        ("q^4+q^6", 3),
        ("q^5+q^7+q^9", 2),
        ("q^7", 1),
    ])
}

pub fn g_pi4() -> TensorVector {
    expansion(&[
        ("1", 13),
        ("q^3", 12),
        ("q^3+q^5", 11),
        ("q^2", 8),
        ("q^4+q^6", 7),
        ("q^4", 5),
        ("q^6", 4),
        ("q^5", 2),
        ("q^7", 1),
    ])
}

pub fn f_pi5() -> TensorVector {
    expansion(&[
        ("1", 18),
        ("2*q+q^-1", 17),
        ("2*q^3+2*q+q^-1", 16),
        ("q+q^3", 15),
        ("2*q+q^3", 14),
        ("2*q^4+3*q^2+1", 13),
        ("q^3+q^5+q^7", 12),
        ("q+2*q^3+3*q^5+2*q^7+q^9", 11),
        ("q^3", 10),
        ("1+2*q^2+2*q^4", 9),
        ("2*q^2+3*q^4+q^6", 8),
        ("2*q^4+3*q^6+3*q^8+q^10", 7),
        ("q^4+q^6", 5),
        ("q^6", 4),
        ("q^4+q^6", 3),
        ("q^5+q^7+q^9", 2),
        ("q^7", 1),
    ])
}

/// `(phi as 1-based word, eta)` for `pi_1 .. pi_5`; `s_alpha` is `s1`.
pub const PATH_GOLDENS: [(&[usize], &[u32]); 5] = [
    (&[1, 2, 1], &[4, 2, 1]),
    (&[2, 1, 2], &[1, 5, 1]),
    (&[1, 2, 1], &[3, 2, 2]),
    (&[1, 2, 1, 2], &[3, 1, 2, 1]),
    (&[1, 2, 1, 2, 1], &[2, 1, 2, 1, 1]),
];

/// Crystal vertices of `pi_1 .. pi_5`, located by their labels.
pub fn golden_vertices(r: &Realization) -> Option<Vec<usize>> {
    let block = r.block_paths(&g2_golden_nu());
    PATH_GOLDENS
        .iter()
        .map(|(phi, eta)| {
            block.iter().copied().find(|&v| {
                let l = r.label(v);
                l.phi.one_based() == *phi && l.eta == *eta
            })
        })
        .collect()
}
