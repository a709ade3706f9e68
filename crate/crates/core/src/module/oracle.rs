//! Weight multiplicities of the submodule generated by the highest tensor
//! vector, computed by linear algebra alone (no paths, no crystals).
//!
//! The span of all monomials `F_{j_1} ... F_{j_m} v_lambda` of weight
//! `lambda - nu` is built level by level; linear independence is decided
//! after specializing `q` to a rational number. Two specializations are
//! used and must agree, which flags an unlucky point.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootdata::RootVector;

use super::{MultiIndex, TensorSpace, TensorVector};

/// Incremental row echelon form over Q with sparse rows; each row's pivot is
/// its smallest key.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<MultiIndex, BTreeMap<MultiIndex, BigRational>>,
}

impl Echelon {
    /// Inserts `v` if it is independent of the rows so far.
    fn insert(&mut self, mut v: BTreeMap<MultiIndex, BigRational>) -> bool {
        v.retain(|_, c| !c.is_zero());
        let mut cursor: Option<MultiIndex> = None;
        loop {
            let next = match &cursor {
                None => v.keys().find(|k| self.rows.contains_key(*k)).cloned(),
                Some(c) => v.range(c.clone()..).map(|(k, _)| k).find(|k| self.rows.contains_key(*k)).cloned(),
            };
            let Some(p) = next else { break };
            let factor = v[&p].clone();
            for (k, c) in &self.rows[&p] {
                let slot = v.entry(k.clone()).or_insert_with(BigRational::zero);
                *slot -= &factor * c;
                if slot.is_zero() {
                    v.remove(k);
                }
            }
            cursor = Some(p);
        }
        let Some((pivot, lead)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        for c in v.values_mut() {
            *c /= &lead;
        }
        self.rows.insert(pivot, v);
        true
    }
}

fn specialize(v: &TensorVector, x: &BigRational) -> BTreeMap<MultiIndex, BigRational> {
    v.iter().map(|(k, c)| (k.clone(), c.eval(x))).collect()
}

struct Spanner<'a> {
    space: &'a TensorSpace,
    point: BigRational,
    memo: HashMap<RootVector, Vec<TensorVector>>,
}

impl Spanner<'_> {
    /// A basis (independent at `point`) of the `lambda - nu` weight space of
    /// `U^- v_lambda`.
    fn basis(&mut self, nu: &RootVector) -> Vec<TensorVector> {
        if let Some(b) = self.memo.get(nu) {
            return b.clone();
        }
        let rank = nu.0.len();
        let out = if nu.height() == 0 {
            vec![self.space.highest_vector()]
        } else {
            let mut ech = Echelon::default();
            let mut out = Vec::new();
            for j in 0..rank {
                if nu.0[j] == 0 {
                    continue;
                }
                let mut prev = nu.clone();
                prev.0[j] -= 1;
                for u in self.basis(&prev) {
                    let w = self.space.act(super::Generator::F(j), &u);
                    if !w.is_zero() && ech.insert(specialize(&w, &self.point)) {
                        out.push(w);
                    }
                }
            }
            out
        };
        self.memo.insert(nu.clone(), out.clone());
        out
    }
}

/// Dimension of the `lambda - nu` weight space of the submodule generated by
/// the highest tensor vector.
pub fn weight_multiplicity_oracle(space: &TensorSpace, nu: &RootVector) -> Result<usize> {
    if !nu.is_nonnegative() || nu.0.len() != space.datum_ref().rank() {
        return Err(Error::InvalidArgument(format!("{nu} is not a nonnegative root combination")));
    }
    let points = [
        BigRational::new(BigInt::from(1009), BigInt::from(13)),
        BigRational::new(BigInt::from(-97), BigInt::from(61)),
    ];
    let dims: Vec<usize> = points
        .iter()
        .map(|p| Spanner { space, point: p.clone(), memo: HashMap::new() }.basis(nu).len())
        .collect();
    if dims[0] != dims[1] {
        return Err(Error::InvalidArgument(format!(
            "rank oracle disagrees between evaluation points ({} vs {})",
            dims[0], dims[1]
        )));
    }
    Ok(dims[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{a_fundamental, g2_fundamental};

    #[test]
    fn small_multiplicities() {
        let space = TensorSpace::new(vec![a_fundamental(2, 1).unwrap(), a_fundamental(2, 2).unwrap()]).unwrap();
        assert_eq!(weight_multiplicity_oracle(&space, &RootVector(vec![0, 0])).unwrap(), 1);
        assert_eq!(weight_multiplicity_oracle(&space, &RootVector(vec![1, 1])).unwrap(), 2);
        assert_eq!(weight_multiplicity_oracle(&space, &RootVector(vec![2, 2])).unwrap(), 1);
        assert_eq!(weight_multiplicity_oracle(&space, &RootVector(vec![3, 0])).unwrap(), 0);
    }

    #[test]
    fn g2_example_weight_space() {
        let l1 = g2_fundamental(1).unwrap();
        let space = TensorSpace::new(vec![l1.clone(), l1, g2_fundamental(2).unwrap()]).unwrap();
        assert_eq!(weight_multiplicity_oracle(&space, &RootVector(vec![5, 2])).unwrap(), 5);
    }
}
