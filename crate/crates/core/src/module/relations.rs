use std::fmt;

use crate::laurent::{q_binomial, q_int_signed, LaurentPoly};
use crate::rootdata::{CartanDatum, Weight};

use super::{ModuleRep, Vector};

/// Anything with a weight basis and `E_i`, `F_i` actions.
pub trait Representation {
    type Key: Ord + Clone + fmt::Debug;

    fn datum(&self) -> &CartanDatum;
    fn basis_keys(&self) -> Vec<Self::Key>;
    fn key_weight(&self, key: &Self::Key) -> Weight;
    fn act_f(&self, i: usize, v: &Vector<Self::Key>) -> Vector<Self::Key>;
    fn act_e(&self, i: usize, v: &Vector<Self::Key>) -> Vector<Self::Key>;

    /// `K_i` through the weight grading.
    fn act_k(&self, i: usize, v: &Vector<Self::Key>) -> Vector<Self::Key> {
        Vector::from_entries(v.iter().map(|(k, c)| {
            let e = self.datum().pairing_with_root(&self.key_weight(k), i);
            (k.clone(), c.shift(e))
        }))
    }
}

impl Representation for ModuleRep {
    type Key = usize;

    fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    fn basis_keys(&self) -> Vec<usize> {
        (0..self.dim()).collect()
    }

    fn key_weight(&self, key: &usize) -> Weight {
        self.weight(*key).clone()
    }

    fn act_f(&self, i: usize, v: &Vector<usize>) -> Vector<usize> {
        act(self, true, i, v)
    }

    fn act_e(&self, i: usize, v: &Vector<usize>) -> Vector<usize> {
        act(self, false, i, v)
    }
}

fn act(m: &ModuleRep, gen_f: bool, i: usize, v: &Vector<usize>) -> Vector<usize> {
    let mut out = Vector::zero();
    for (&k, c) in v.iter() {
        for (t, a) in m.act_basis(gen_f, i, k) {
            out.add_term(*t, c * a);
        }
    }
    out
}

/// Outcome of [`verify_relations`]: pass, or the first violated relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationReport {
    Pass,
    Fail { relation: String, basis_vector: String },
}

impl RelationReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, RelationReport::Pass)
    }
}

impl fmt::Display for RelationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationReport::Pass => write!(f, "all relations hold"),
            RelationReport::Fail { relation, basis_vector } => write!(f, "{relation} fails on {basis_vector}"),
        }
    }
}

fn power<R: Representation>(rep: &R, gen_f: bool, i: usize, n: i64, v: &Vector<R::Key>) -> Vector<R::Key> {
    let mut cur = v.clone();
    for _ in 0..n {
        cur = if gen_f { rep.act_f(i, &cur) } else { rep.act_e(i, &cur) };
        if cur.is_zero() {
            break;
        }
    }
    cur
}

/// Checks, on every basis vector: that `E_i`/`F_i` shift weights by
/// `+-alpha_i` (the `K`-conjugation relations), the `E_i F_j - F_j E_i`
/// commutator, and both quantum Serre relations.
pub fn verify_relations<R: Representation>(rep: &R) -> RelationReport {
    let datum = rep.datum().clone();
    let rank = datum.rank();
    for key in rep.basis_keys() {
        let fail = |relation: String| RelationReport::Fail { relation, basis_vector: format!("{key:?}") };
        let mu = rep.key_weight(&key);
        let v = Vector::basis(key.clone());
        for i in 0..rank {
            let alpha = datum.simple_root(i);
            let fv = rep.act_f(i, &v);
            if fv.keys().any(|k| rep.key_weight(k) != mu.sub(&alpha)) {
                return fail(format!("K F{} = q^-(a,a{}) F{} K", i + 1, i + 1, i + 1));
            }
            let ev = rep.act_e(i, &v);
            if ev.keys().any(|k| rep.key_weight(k) != mu.add(&alpha)) {
                return fail(format!("E{} K = q^-(a,a{}) K E{}", i + 1, i + 1, i + 1));
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                let lhs = rep.act_e(i, &rep.act_f(j, &v)).sub(&rep.act_f(j, &rep.act_e(i, &v)));
                let rhs = if i == j { v.scaled(&commutator_scalar(&datum, &mu, i)) } else { Vector::zero() };
                if lhs != rhs {
                    return fail(format!("E{} F{} - F{} E{}", i + 1, j + 1, j + 1, i + 1));
                }
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let top = 1 - datum.entry(j, i);
                for gen_f in [true, false] {
                    let mut acc = Vector::zero();
                    for k in 0..=top {
                        let inner = power(rep, gen_f, i, k, &v);
                        let mid = if gen_f { rep.act_f(j, &inner) } else { rep.act_e(j, &inner) };
                        let outer = power(rep, gen_f, i, top - k, &mid);
                        let mut c = q_binomial(top, k, datum.d(i)).expect("binomial");
                        if k % 2 == 1 {
                            c = -c;
                        }
                        acc.add_scaled(&outer, &c);
                    }
                    if !acc.is_zero() {
                        let g = if gen_f { "F" } else { "E" };
                        return fail(format!("quantum Serre relation for {g}{} and {g}{}", i + 1, j + 1));
                    }
                }
            }
        }
    }
    RelationReport::Pass
}

/// `(K_i - K_i^-1)/(q_i - q_i^-1)` on a weight vector of weight `mu`.
pub(crate) fn commutator_scalar(datum: &CartanDatum, mu: &Weight, i: usize) -> LaurentPoly {
    q_int_signed(mu.pairing(i), datum.d(i))
}
