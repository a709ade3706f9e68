use crate::error::{Error, Result};
use crate::laurent::{q_int, LaurentPoly};
use crate::rootdata::{CartanDatum, Weight};

use super::{ModuleRep, Representation, Vector};

/// One basis index per tensor factor; compared lexicographically.
pub type MultiIndex = Vec<usize>;

pub type TensorVector = Vector<MultiIndex>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E(usize),
    F(usize),
    K(usize),
}

/// `V(mu_1) (x) ... (x) V(mu_r)` with the product basis.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    datum: CartanDatum,
    factors: Vec<ModuleRep>,
}

impl TensorSpace {
    pub fn new(factors: Vec<ModuleRep>) -> Result<Self> {
        let datum = factors
            .first()
            .ok_or_else(|| Error::InvalidArgument("tensor product of no factors".into()))?
            .datum()
            .clone();
        if factors.iter().any(|m| *m.datum() != datum) {
            return Err(Error::InvalidArgument("tensor factors over different Cartan data".into()));
        }
        Ok(TensorSpace { datum, factors })
    }

    pub fn factors(&self) -> &[ModuleRep] {
        &self.factors
    }

    /// Sum of the factors' highest weights.
    pub fn highest_weight(&self) -> Weight {
        self.factors
            .iter()
            .fold(Weight::zero(self.datum.rank()), |acc, m| acc.add(m.highest_weight()))
    }

    /// `v_1 (x) ... (x) v_1`.
    pub fn highest_vector(&self) -> TensorVector {
        Vector::basis(vec![0; self.factors.len()])
    }

    pub fn index_weight(&self, idx: &[usize]) -> Weight {
        idx.iter()
            .zip(&self.factors)
            .fold(Weight::zero(self.datum.rank()), |acc, (&k, m)| acc.add(m.weight(k)))
    }

    /// Weight of a nonzero homogeneous vector.
    pub fn vector_weight(&self, v: &TensorVector) -> Option<Weight> {
        v.keys().next().map(|k| self.index_weight(k))
    }

    pub fn is_homogeneous(&self, v: &TensorVector) -> bool {
        match self.vector_weight(v) {
            None => true,
            Some(w) => v.keys().all(|k| self.index_weight(k) == w),
        }
    }

    /// Exponent of `q` in `K_i` acting on factor `slot`'s basis vector `k`.
    fn k_exp(&self, i: usize, slot: usize, k: usize) -> i64 {
        self.datum.pairing_with_root(self.factors[slot].weight(k), i)
    }

    pub fn act(&self, gen: Generator, v: &TensorVector) -> TensorVector {
        match gen {
            Generator::F(i) => self.act_generator(true, i, v),
            Generator::E(i) => self.act_generator(false, i, v),
            Generator::K(i) => Representation::act_k(self, i, v),
        }
    }

    fn act_generator(&self, gen_f: bool, i: usize, v: &TensorVector) -> TensorVector {
        let r = self.factors.len();
        let mut out = Vector::zero();
        for (idx, c) in v.iter() {
            let exps: Vec<i64> = (0..r).map(|s| self.k_exp(i, s, idx[s])).collect();
            for slot in 0..r {
                // F: K on the factors before `slot`; E: K^-1 on the factors after it
                let shift: i64 = if gen_f { exps[..slot].iter().sum() } else { -exps[slot + 1..].iter().sum::<i64>() };
                for (t, a) in self.factors[slot].act_basis(gen_f, i, idx[slot]) {
                    let mut target = idx.clone();
                    target[slot] = *t;
                    out.add_term(target, (c * a).shift(shift));
                }
            }
        }
        out
    }

    /// `F_i^(n) v = F_i^n v / [n]_i!`, one division by `[k]_i` per step.
    pub fn divided_power_f(&self, i: usize, n: u32, v: &TensorVector) -> Result<TensorVector> {
        let d = self.datum.d(i);
        let mut cur = v.clone();
        for k in 1..=n as i64 {
            cur = self.act_generator(true, i, &cur).divide_exact(&q_int(k, d)?)?;
        }
        Ok(cur)
    }

    pub fn datum_ref(&self) -> &CartanDatum {
        &self.datum
    }

    /// Every multi-index; only for small spaces.
    pub fn all_indices(&self) -> Vec<MultiIndex> {
        let mut out: Vec<MultiIndex> = vec![vec![]];
        for m in &self.factors {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..m.dim()).map(move |k| {
                        let mut q = p.clone();
                        q.push(k);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// Converts a multiplicative scalar to the vector it multiplies; used by
    /// the commutator checks.
    pub fn scalar_on(&self, v: &TensorVector, f: impl Fn(&Weight) -> LaurentPoly) -> TensorVector {
        Vector::from_entries(v.iter().map(|(k, c)| (k.clone(), c * &f(&self.index_weight(k)))))
    }
}

impl Representation for TensorSpace {
    type Key = MultiIndex;

    fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    fn basis_keys(&self) -> Vec<MultiIndex> {
        self.all_indices()
    }

    fn key_weight(&self, key: &MultiIndex) -> Weight {
        self.index_weight(key)
    }

    fn act_f(&self, i: usize, v: &TensorVector) -> TensorVector {
        self.act_generator(true, i, v)
    }

    fn act_e(&self, i: usize, v: &TensorVector) -> TensorVector {
        self.act_generator(false, i, v)
    }
}
