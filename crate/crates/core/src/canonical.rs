//! Canonical basis elements `G(b_pi)` of `V(lambda)` inside a tensor product
//! of modules with known canonical bases.
//!
//! For each weight `lambda - nu` the paths of weight `nu` are processed in a
//! linear extension of the path order. Each path contributes its monomial
//! vector `F_pi v_lambda`; earlier elements are then subtracted with
//! bar-invariant coefficients until every coefficient other than the
//! leading one lies in `qZ[q]`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{bar_symmetric_correction, q_int, LaurentPoly};
use crate::module::{a_fundamental, g2_fundamental, Generator, ModuleRep, MultiIndex, TensorSpace, TensorVector};
use crate::path::{label_order_less, PathCrystal, PathLabel};
use crate::rootdata::{CartanDatum, RootVector, Weight, WeylWord};

/// `G(b_pi)` expanded in the tensor basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalElement {
    /// Crystal vertex of the path `pi`.
    pub vertex: usize,
    pub phi: WeylWord,
    pub eta: Vec<u32>,
    pub vector: TensorVector,
    /// The lexicographically largest index in the support; its coefficient is 1.
    pub leading: MultiIndex,
}

#[derive(Clone, Debug)]
pub struct WeightBlock {
    pub lambda: Weight,
    pub nu: RootVector,
    /// In processing order.
    pub elements: Vec<CanonicalElement>,
}

/// Reads off the leading index and checks the shape every canonical element
/// has: coefficient 1 at the lex-largest index, everything else in `qZ[q]`.
pub fn check_triangular_form(v: &TensorVector) -> Result<MultiIndex> {
    let (lead, c) = v.iter().next_back().ok_or_else(|| Error::NotTriangular("zero vector".into()))?;
    if !c.is_one() {
        return Err(Error::NotTriangular(format!("leading coefficient at {lead:?} is {c}")));
    }
    if let Some((k, c)) = v.iter().rev().skip(1).find(|(_, c)| !c.in_q_zq()) {
        return Err(Error::NotTriangular(format!("coefficient {c} at {k:?} is not in qZ[q]")));
    }
    Ok(lead.clone())
}

/// The sweep: `computed` must be sorted by strictly decreasing leading index.
/// Returns the corrected vector and the coefficient `xi_i` used for each
/// element.
pub fn triangular_reduce(x: TensorVector, computed: &[&CanonicalElement]) -> Result<(TensorVector, Vec<LaurentPoly>)> {
    if computed.windows(2).any(|w| w[0].leading <= w[1].leading) {
        return Err(Error::NotTriangular("computed elements are not sorted by decreasing leading index".into()));
    }
    let mut x = x;
    let mut xis = Vec::with_capacity(computed.len());
    for g in computed {
        let zeta = x.get(&g.leading);
        let xi = bar_symmetric_correction(&zeta);
        x.add_scaled(&g.vector, &xi);
        xis.push(xi);
    }
    check_triangular_form(&x)?;
    Ok((x, xis))
}

/// `V(lambda)` realized in a tensor product of fundamental-type modules,
/// together with its path crystal.
#[derive(Clone, Debug)]
pub struct Realization {
    datum: CartanDatum,
    lambda: Weight,
    space: TensorSpace,
    crystal: PathCrystal,
    labels: Vec<PathLabel>,
}

/// Per-block memo for monomial vectors, keyed by crystal vertex.
pub type MonomialCache = HashMap<usize, TensorVector>;

impl Realization {
    /// `lambda` is the sum of the factors' highest weights.
    pub fn new(factors: Vec<ModuleRep>) -> Result<Self> {
        let space = TensorSpace::new(factors)?;
        let datum = space.datum_ref().clone();
        let lambda = space.highest_weight();
        let crystal = PathCrystal::generate(&datum, &lambda)?;
        let labels = (0..crystal.len()).map(|v| crystal.label(v)).collect::<Result<Vec<_>>>()?;
        Ok(Realization { datum, lambda, space, crystal, labels })
    }

    /// Uses the built-in fundamental modules (`A_n`, `G2`) for `lambda`,
    /// factors ordered `lambda_1` copies first.
    pub fn builtin(datum: &CartanDatum, lambda: &Weight) -> Result<Self> {
        Self::new(builtin_factors(datum, lambda, &[])?)
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn space(&self) -> &TensorSpace {
        &self.space
    }

    pub fn crystal(&self) -> &PathCrystal {
        &self.crystal
    }

    pub fn label(&self, v: usize) -> &PathLabel {
        &self.labels[v]
    }

    /// Crystal vertices of weight `nu`.
    pub fn block_paths(&self, nu: &RootVector) -> Vec<usize> {
        (0..self.crystal.len()).filter(|&v| self.crystal.depth(v) == *nu).collect()
    }

    /// `pi < sigma` in the path order.
    pub fn path_less(&self, p: usize, s: usize) -> bool {
        label_order_less(&self.datum, &self.labels[p], &self.labels[s])
    }

    /// `F_pi v_lambda`, computed from the vector of `e_{i_1} pi` by one
    /// application of `F_{i_1}` and one exact division by `[n_1]_{i_1}`.
    pub fn monomial_vector(&self, v: usize, cache: &mut MonomialCache) -> Result<TensorVector> {
        if let Some(x) = cache.get(&v) {
            return Ok(x.clone());
        }
        let label = &self.labels[v];
        let out = match label.monomial.factors.first() {
            None => self.space.highest_vector(),
            Some(&(i, n)) => {
                let pred = self.crystal.e(v, i).ok_or_else(|| {
                    Error::MalformedPath(format!("e_{} vanishes on vertex {v} with eta {:?}", i + 1, label.eta))
                })?;
                let prev = self.monomial_vector(pred, cache)?;
                self.space
                    .act(Generator::F(i), &prev)
                    .divide_exact(&q_int(n as i64, self.datum.d(i))?)?
            }
        };
        cache.insert(v, out.clone());
        Ok(out)
    }

    /// `F_pi v_lambda` evaluated factor by factor with divided powers,
    /// right to left; independent of the crystal recursion.
    pub fn monomial_vector_direct(&self, v: usize) -> Result<TensorVector> {
        let mut x = self.space.highest_vector();
        for &(i, n) in self.labels[v].monomial.factors.iter().rev() {
            x = self.space.divided_power_f(i, n, &x)?;
        }
        Ok(x)
    }

    /// The default linear extension of the path order on `paths`: repeatedly
    /// take a minimal remaining path, preferring larger `eta` and then the
    /// smaller `phi` word.
    pub fn default_order(&self, paths: &[usize]) -> Vec<usize> {
        let mut remaining: Vec<usize> = paths.to_vec();
        let mut out = Vec::with_capacity(paths.len());
        while !remaining.is_empty() {
            let minimal = remaining
                .iter()
                .copied()
                .filter(|&p| !remaining.iter().any(|&s| s != p && self.path_less(s, p)));
            let pick = minimal
                .min_by(|&a, &b| {
                    let (la, lb) = (&self.labels[a], &self.labels[b]);
                    lb.eta.cmp(&la.eta).then_with(|| la.phi.cmp(&lb.phi))
                })
                .expect("a finite partial order has minimal elements");
            remaining.retain(|&p| p != pick);
            out.push(pick);
        }
        out
    }

    /// Whether `order` lists `paths` as a linear extension of the path order.
    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        order
            .iter()
            .enumerate()
            .all(|(a, &p)| order[a + 1..].iter().all(|&s| !self.path_less(s, p)))
    }

    pub fn canonical_block(&self, nu: &RootVector) -> Result<WeightBlock> {
        let paths = self.block_paths(nu);
        let order = self.default_order(&paths);
        self.canonical_block_in_order(nu, &order)
    }

    /// Runs the block computation with an explicit processing order, which
    /// must be a linear extension of the path order.
    pub fn canonical_block_in_order(&self, nu: &RootVector, order: &[usize]) -> Result<WeightBlock> {
        if !self.is_linear_extension(order) {
            return Err(Error::InvalidArgument("processing order is not a linear extension of the path order".into()));
        }
        let mut cache = MonomialCache::new();
        let mut done: Vec<CanonicalElement> = Vec::with_capacity(order.len());
        for &v in order {
            let x = self.monomial_vector(v, &mut cache)?;
            let mut sorted: Vec<&CanonicalElement> = done.iter().collect();
            sorted.sort_by(|a, b| b.leading.cmp(&a.leading));
            let (g, _) = triangular_reduce(x, &sorted)?;
            let leading = check_triangular_form(&g)?;
            if done.iter().any(|d| d.leading == leading) {
                return Err(Error::NotTriangular(format!("two elements share the leading index {leading:?}")));
            }
            let label = &self.labels[v];
            done.push(CanonicalElement { vertex: v, phi: label.phi.clone(), eta: label.eta.clone(), vector: g, leading });
        }
        Ok(WeightBlock { lambda: self.lambda.clone(), nu: nu.clone(), elements: done })
    }

    /// Blocks for every weight `nu` with paths, up to `max_height` if given.
    pub fn full_basis(&self, max_height: Option<i64>) -> Result<Vec<WeightBlock>> {
        let mut nus: Vec<RootVector> = self.crystal.weight_blocks().into_keys().collect();
        nus.sort_by_key(|nu| (nu.height(), nu.clone()));
        nus.into_iter()
            .filter(|nu| max_height.is_none_or(|h| nu.height() <= h))
            .map(|nu| self.canonical_block(&nu))
            .collect()
    }
}

/// Splits a dominant weight into fundamental weights, `lambda_1` copies
/// first, ascending index.
pub fn fundamental_decomposition(lambda: &Weight) -> Vec<usize> {
    lambda
        .0
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i, m.max(0) as usize))
        .collect()
}

/// Fundamental modules for the decomposition of `lambda`. Modules in
/// `supplied` take precedence; otherwise the built-in `A_n` and `G2`
/// constructions are used.
pub fn builtin_factors(datum: &CartanDatum, lambda: &Weight, supplied: &[ModuleRep]) -> Result<Vec<ModuleRep>> {
    datum.validate_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::InvalidArgument(format!("highest weight {lambda} is not dominant")));
    }
    let mut cache: BTreeMap<usize, ModuleRep> = BTreeMap::new();
    let mut out = Vec::new();
    let parts = fundamental_decomposition(lambda);
    if parts.is_empty() {
        return Err(Error::InvalidArgument("the zero weight has no tensor realization here".into()));
    }
    for i in parts {
        if let std::collections::btree_map::Entry::Vacant(e) = cache.entry(i) {
            let target = Weight::fundamental(datum.rank(), i);
            let m = match supplied.iter().find(|m| m.datum() == datum && *m.highest_weight() == target) {
                Some(m) => m.clone(),
                None => match datum.letter() {
                    'A' => a_fundamental(datum.rank(), i + 1)?,
                    'G' => g2_fundamental(i + 1)?,
                    _ => {
                        return Err(Error::InvalidArgument(format!(
                            "no module for fundamental weight {} of {}; supply one with --module-file",
                            i + 1,
                            datum.name()
                        )))
                    }
                },
            };
            e.insert(m);
        }
        out.push(cache[&i].clone());
    }
    Ok(out)
}

pub fn canonical_block(datum: &CartanDatum, lambda: &Weight, nu: &RootVector) -> Result<WeightBlock> {
    Realization::builtin(datum, lambda)?.canonical_block(nu)
}

#[derive(Serialize)]
struct JsonEntry {
    index: Vec<usize>,
    coeff: String,
}

#[derive(Serialize)]
struct JsonElement {
    phi: Vec<usize>,
    eta: Vec<u32>,
    vector: Vec<JsonEntry>,
}

#[derive(Serialize)]
pub struct JsonBlock {
    lambda: Vec<i64>,
    nu: Vec<i64>,
    elements: Vec<JsonElement>,
}

impl WeightBlock {
    /// JSON form: indices are 1-based positions in each factor's
    /// height-ordered basis, entries sorted by descending lex order.
    pub fn to_json_value(&self) -> JsonBlock {
        JsonBlock {
            lambda: self.lambda.0.clone(),
            nu: self.nu.0.clone(),
            elements: self
                .elements
                .iter()
                .map(|e| JsonElement {
                    phi: e.phi.one_based(),
                    eta: e.eta.clone(),
                    vector: e
                        .vector
                        .iter()
                        .rev()
                        .map(|(k, c)| JsonEntry { index: k.iter().map(|x| x + 1).collect(), coeff: c.to_string() })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::Vector;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn a1_full_basis() {
        let a1: CartanDatum = "A1".parse().unwrap();
        let r = Realization::builtin(&a1, &Weight(vec![2])).unwrap();
        let blocks = r.full_basis(None).unwrap();
        assert_eq!(blocks.iter().map(|b| b.len()).sum::<usize>(), 3);
        // middle element: F v1 v1 = v2 v1 + q v1 v2
        assert_eq!(
            blocks[1].elements[0].vector,
            Vector::from_entries([(vec![1, 0], lp("1")), (vec![0, 1], lp("q"))])
        );
    }

    #[test]
    fn zero_weight_block_is_highest_vector() {
        let a2: CartanDatum = "A2".parse().unwrap();
        let r = Realization::builtin(&a2, &Weight(vec![1, 1])).unwrap();
        let b = r.canonical_block(&RootVector(vec![0, 0])).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b.elements[0].vector, r.space().highest_vector());
    }

    #[test]
    fn a2_adjoint_middle_block() {
        let a2: CartanDatum = "A2".parse().unwrap();
        let r = Realization::builtin(&a2, &Weight(vec![1, 1])).unwrap();
        let b = r.canonical_block(&RootVector(vec![1, 1])).unwrap();
        assert_eq!(b.len(), 2);
        assert_ne!(b.elements[0].leading, b.elements[1].leading);
        let all = r.full_basis(None).unwrap();
        assert_eq!(all.iter().map(|b| b.len()).sum::<usize>(), 8);
    }

    #[test]
    fn g2_single_factor_is_its_own_basis() {
        let g2: CartanDatum = "G2".parse().unwrap();
        let r = Realization::builtin(&g2, &Weight(vec![1, 0])).unwrap();
        let all = r.full_basis(None).unwrap();
        let elems: Vec<_> = all.iter().flat_map(|b| &b.elements).collect();
        assert_eq!(elems.len(), 7);
        for e in elems {
            assert_eq!(e.vector.len(), 1);
        }
    }

    #[test]
    fn both_monomial_routes_agree() {
        let g2: CartanDatum = "G2".parse().unwrap();
        let r = Realization::builtin(&g2, &Weight(vec![1, 1])).unwrap();
        let mut cache = MonomialCache::new();
        for v in 0..r.crystal().len() {
            assert_eq!(r.monomial_vector(v, &mut cache).unwrap(), r.monomial_vector_direct(v).unwrap());
        }
    }

    #[test]
    fn reduce_rejects_unsorted_input() {
        let e = |lead: Vec<usize>| CanonicalElement {
            vertex: 0,
            phi: WeylWord::identity(),
            eta: vec![],
            vector: Vector::basis(lead.clone()),
            leading: lead,
        };
        let (a, b) = (e(vec![0, 1]), e(vec![1, 0]));
        assert!(triangular_reduce(Vector::basis(vec![1, 1]), &[&a, &b]).is_err());
        let (x, xis) = triangular_reduce(Vector::basis(vec![1, 1]), &[&b, &a]).unwrap();
        assert_eq!(x, Vector::basis(vec![1, 1]));
        assert!(xis.iter().all(LaurentPoly::is_zero));
    }

    #[test]
    fn decomposition_order() {
        assert_eq!(fundamental_decomposition(&Weight(vec![2, 1])), vec![0, 0, 1]);
        assert_eq!(fundamental_decomposition(&Weight(vec![0, 1, 2])), vec![1, 2, 2]);
    }
}
