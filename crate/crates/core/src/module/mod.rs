//! Concrete `U_q(g)`-modules.
//!
//! A [`ModuleRep`] is a weight-graded basis together with sparse matrices for
//! the generators `E_i`, `F_i`; `K_i` acts on a vector of weight `mu` by
//! `q^{(mu, alpha_i)}` and is never stored. Modules combine into a
//! [`TensorSpace`] through the comultiplication
//!
//! ```text
//! Delta(E) = E (x) K^-1 + 1 (x) E
//! Delta(F) = F (x) 1 + K (x) F
//! Delta(K) = K (x) K
//! ```

mod builders;
mod file;
mod oracle;
mod relations;
mod tensor;
mod vector;

use std::collections::BTreeMap;

pub use builders::{a_fundamental, g2_fundamental};
pub(crate) use builders::{a_columns, column_weight};
pub use file::{load_module_file, module_to_file, module_to_json, FileBasisVector, ModuleFile};
pub use oracle::weight_multiplicity_oracle;
pub use relations::{verify_relations, RelationReport, Representation};
pub use tensor::{Generator, MultiIndex, TensorSpace, TensorVector};
pub use vector::Vector;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rootdata::{CartanDatum, RootVector, Weight};

/// Sparse generator matrix: source basis index to `(target index, coefficient)`.
pub type Action = BTreeMap<usize, Vec<(usize, LaurentPoly)>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub label: String,
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    datum: CartanDatum,
    basis: Vec<BasisVector>,
    f: Vec<Action>,
    e: Vec<Action>,
}

impl ModuleRep {
    /// Assembles a module, checking shapes and index ranges only. Basis
    /// vector 0 must be the highest-weight vector; use
    /// [`verify_relations`] to check that the data really is a module.
    pub fn new(datum: CartanDatum, basis: Vec<BasisVector>, f: Vec<Action>, e: Vec<Action>) -> Result<Self> {
        let rank = datum.rank();
        if basis.is_empty() {
            return Err(Error::InvalidArgument("module has an empty basis".into()));
        }
        if f.len() != rank || e.len() != rank {
            return Err(Error::InvalidArgument(format!("expected {rank} E and F matrices")));
        }
        for b in &basis {
            datum.validate_weight(&b.weight)?;
        }
        for action in f.iter().chain(&e) {
            for (&src, targets) in action {
                if src >= basis.len() || targets.iter().any(|(t, _)| *t >= basis.len()) {
                    return Err(Error::InvalidArgument("action index out of range".into()));
                }
            }
        }
        Ok(ModuleRep { datum, basis, f, e })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn weight(&self, k: usize) -> &Weight {
        &self.basis[k].weight
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.basis[0].weight
    }

    pub fn f_matrix(&self, i: usize) -> &Action {
        &self.f[i]
    }

    pub fn e_matrix(&self, i: usize) -> &Action {
        &self.e[i]
    }

    /// `highest - weight(k)` in simple-root coordinates, if it is one.
    pub fn depth(&self, k: usize) -> Option<RootVector> {
        self.datum.weight_to_root(&self.highest_weight().sub(self.weight(k)))
    }

    pub fn height(&self, k: usize) -> Option<i64> {
        self.depth(k).map(|d| d.height())
    }

    /// `F_i` or `E_i` applied to basis vector `k`.
    pub fn act_basis(&self, gen_f: bool, i: usize, k: usize) -> &[(usize, LaurentPoly)] {
        let m = if gen_f { &self.f[i] } else { &self.e[i] };
        m.get(&k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Checks that the basis is ordered by non-decreasing height with a unique
    /// vector at height 0.
    pub fn check_height_order(&self) -> Result<()> {
        let mut last = 0;
        for k in 0..self.dim() {
            let d = self.depth(k).filter(RootVector::is_nonnegative).ok_or_else(|| {
                Error::RelationViolation(format!(
                    "weight {} of {} is not below the highest weight {}",
                    self.weight(k),
                    self.basis[k].label,
                    self.highest_weight()
                ))
            })?;
            let h = d.height();
            if h < last || (k > 0 && h == 0) {
                return Err(Error::RelationViolation(format!(
                    "basis is not ordered by increasing height at {}",
                    self.basis[k].label
                )));
            }
            last = h;
        }
        Ok(())
    }

    /// Stable reorder by height (file order kept within a height level).
    pub(crate) fn sorted_by_height(self) -> Result<Self> {
        let heights: Vec<i64> = (0..self.dim())
            .map(|k| self.height(k).ok_or_else(|| Error::RelationViolation(format!("{} has a weight outside the root lattice coset", self.basis[k].label))))
            .collect::<Result<_>>()?;
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by_key(|&k| heights[k]);
        if order.iter().enumerate().all(|(a, &b)| a == b) {
            return Ok(self);
        }
        let mut new_pos = vec![0; order.len()];
        for (pos, &old) in order.iter().enumerate() {
            new_pos[old] = pos;
        }
        let remap = |a: &Action| -> Action {
            a.iter()
                .map(|(src, ts)| (new_pos[*src], ts.iter().map(|(t, c)| (new_pos[*t], c.clone())).collect()))
                .collect()
        };
        let basis = order.iter().map(|&k| self.basis[k].clone()).collect();
        let f = self.f.iter().map(remap).collect();
        let e = self.e.iter().map(remap).collect();
        ModuleRep::new(self.datum, basis, f, e)
    }

    /// Replaces one `F` coefficient; used for mutation tests.
    pub fn with_f_entry(mut self, i: usize, src: usize, dst: usize, c: LaurentPoly) -> Self {
        let col = self.f[i].entry(src).or_default();
        col.retain(|(t, _)| *t != dst);
        if !c.is_zero() {
            col.push((dst, c));
        }
        self
    }
}
