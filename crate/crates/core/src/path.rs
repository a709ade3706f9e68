//! Littelmann paths and root operators.
//!
//! A path is stored as a list of segments, each a direction (an integral
//! weight, the velocity on that segment) and a positive rational duration;
//! durations sum to 1. Paths are kept in canonical form: no zero-duration
//! segments and no two adjacent segments with the same direction.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rootdata::{CartanDatum, Rational, RootVector, Weight, WeylWord};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub direction: Weight,
    pub duration: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LsPath {
    segments: Vec<Segment>,
}

/// Which root operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootOp {
    E,
    F,
}

impl LsPath {
    /// The straight path `t -> t * lambda`.
    pub fn straight(lambda: &Weight) -> Self {
        Self::from_segments(vec![Segment { direction: lambda.clone(), duration: Rational::one() }])
    }

    pub fn from_segments(segments: Vec<Segment>) -> Self {
        let mut out: Vec<Segment> = Vec::with_capacity(segments.len());
        for s in segments {
            if s.duration.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.direction == s.direction => last.duration += s.duration,
                _ => out.push(s),
            }
        }
        LsPath { segments: out }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Direction of the first segment.
    pub fn first_direction(&self) -> &Weight {
        &self.segments[0].direction
    }

    /// `pi(1)`; integral for every path reachable from a straight path.
    pub fn endpoint(&self) -> Weight {
        let rank = self.segments[0].direction.rank();
        let mut acc = vec![Rational::zero(); rank];
        for s in &self.segments {
            for (a, d) in acc.iter_mut().zip(&s.direction.0) {
                *a += s.duration * Rational::from(*d);
            }
        }
        Weight(
            acc.into_iter()
                .map(|x| {
                    assert!(x.is_integer(), "path endpoint is not integral");
                    x.to_integer()
                })
                .collect(),
        )
    }

    /// Breakpoint times `0 = t_0 < ... < t_k = 1` and the values of
    /// `h(t) = <pi(t), alpha_i^vee>` at them.
    fn height_profile(&self, i: usize) -> (Vec<Rational>, Vec<Rational>) {
        let mut ts = vec![Rational::zero()];
        let mut hs = vec![Rational::zero()];
        for s in &self.segments {
            let t = *ts.last().unwrap() + s.duration;
            let h = *hs.last().unwrap() + s.duration * Rational::from(s.direction.0[i]);
            ts.push(t);
            hs.push(h);
        }
        (ts, hs)
    }

    /// Minimum of `<pi(t), alpha_i^vee>` over `t`.
    pub fn min_height(&self, i: usize) -> Rational {
        let (_, hs) = self.height_profile(i);
        hs.into_iter().min().unwrap()
    }

    /// Splits the segments at time `t`, returning the index of the first
    /// segment starting at or after `t`.
    fn split_at(segments: &mut Vec<Segment>, t: Rational) -> usize {
        let mut start = Rational::zero();
        for k in 0..segments.len() {
            if start == t {
                return k;
            }
            let end = start + segments[k].duration;
            if t < end {
                let dir = segments[k].direction.clone();
                segments[k].duration = t - start;
                segments.insert(k + 1, Segment { direction: dir, duration: end - t });
                return k + 1;
            }
            start = end;
        }
        segments.len()
    }

    /// Root operator `e_i` or `f_i`; `None` stands for the zero path.
    pub fn apply(&self, datum: &CartanDatum, i: usize, op: RootOp) -> Option<LsPath> {
        let (ts, hs) = self.height_profile(i);
        let m = *hs.iter().min().unwrap();
        let one = Rational::one();
        let (t0, t1) = match op {
            RootOp::F => {
                if *hs.last().unwrap() - m < one {
                    return None;
                }
                let p = (0..hs.len()).rev().find(|&k| hs[k] == m).unwrap();
                let t0 = ts[p];
                let t1 = first_crossing(&ts, &hs, p, m + one, true);
                (t0, t1)
            }
            RootOp::E => {
                if m > -one {
                    return None;
                }
                let p = (0..hs.len()).find(|&k| hs[k] == m).unwrap();
                let t1 = ts[p];
                let t0 = first_crossing(&ts, &hs, p, m + one, false);
                (t0, t1)
            }
        };
        let mut segs = self.segments.clone();
        let a = Self::split_at(&mut segs, t0);
        let b = Self::split_at(&mut segs, t1);
        for s in &mut segs[a..b] {
            s.direction = datum.reflect(i, &s.direction);
        }
        Some(Self::from_segments(segs))
    }

    pub fn e(&self, datum: &CartanDatum, i: usize) -> Option<LsPath> {
        self.apply(datum, i, RootOp::E)
    }

    pub fn f(&self, datum: &CartanDatum, i: usize) -> Option<LsPath> {
        self.apply(datum, i, RootOp::F)
    }

    /// Largest `n` with `e_i^n(pi) != 0`.
    pub fn epsilon(&self, i: usize) -> i64 {
        -self.min_height(i).floor().to_integer()
    }
}

/// Time at which the piecewise-linear profile first reaches `target`,
/// searching forward (`forward = true`) or backward from breakpoint `from`.
fn first_crossing(ts: &[Rational], hs: &[Rational], from: usize, target: Rational, forward: bool) -> Rational {
    let hit = |a: usize, b: usize| -> Option<Rational> {
        let (ha, hb) = (hs[a], hs[b]);
        if ha == target {
            return Some(ts[a]);
        }
        let lo = ha.min(hb);
        let hi = ha.max(hb);
        if hb != ha && lo <= target && target <= hi {
            return Some(ts[a] + (ts[b] - ts[a]) * (target - ha) / (hb - ha));
        }
        None
    };
    if forward {
        for k in from..hs.len() - 1 {
            if let Some(t) = hit(k, k + 1) {
                return t;
            }
        }
        *ts.last().unwrap()
    } else {
        for k in (1..=from).rev() {
            if let Some(t) = hit(k, k - 1) {
                return t;
            }
        }
        ts[0]
    }
}

impl fmt::Display for LsPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.segments.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            write!(f, "{}[{}]", s.direction, s.duration)?;
        }
        Ok(())
    }
}

/// `F_{i_1}^{(n_1)} ... F_{i_r}^{(n_r)}` as (0-based index, exponent) factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AdaptedMonomial {
    pub factors: Vec<(usize, u32)>,
}

impl AdaptedMonomial {
    /// Total weight `sum n_k alpha_{i_k}`.
    pub fn weight(&self, rank: usize) -> RootVector {
        let mut nu = RootVector::zero(rank);
        for &(i, n) in &self.factors {
            nu.0[i] += n as i64;
        }
        nu
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for AdaptedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (i, n)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if *n == 1 {
                write!(f, "F{}", i + 1)?;
            } else {
                write!(f, "F{}^({})", i + 1, n)?;
            }
        }
        Ok(())
    }
}

/// Everything the canonical-basis algorithm needs to know about a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathLabel {
    /// Lex-minimal reduced word of the first direction's coset representative.
    pub phi: WeylWord,
    pub eta: Vec<u32>,
    pub monomial: AdaptedMonomial,
}

/// `phi(pi)`: the minimal `w` with `w(lambda)` equal to the first direction.
pub fn first_direction_phi(datum: &CartanDatum, lambda: &Weight, path: &LsPath) -> Result<WeylWord> {
    datum.min_coset_rep(lambda, path.first_direction()).map_err(|e| match e {
        Error::NotInOrbit { .. } => Error::MalformedPath(format!("first direction of {path} is not in W.{lambda}: {e}")),
        other => other,
    })
}

/// Peels maximal `e`-powers along the lex-minimal word of `phi(pi)`.
pub fn adapted_monomial(datum: &CartanDatum, lambda: &Weight, path: &LsPath) -> Result<PathLabel> {
    let phi = first_direction_phi(datum, lambda, path)?;
    let mut cur = path.clone();
    let mut eta = Vec::with_capacity(phi.len());
    for &i in &phi.0 {
        let mut n = 0u32;
        while let Some(next) = cur.e(datum, i) {
            cur = next;
            n += 1;
        }
        eta.push(n);
    }
    if cur != LsPath::straight(lambda) {
        return Err(Error::MalformedPath(format!("peeling {path} along {phi} ends at {cur}")));
    }
    let monomial = AdaptedMonomial { factors: phi.0.iter().copied().zip(eta.iter().copied()).filter(|&(_, n)| n > 0).collect() };
    Ok(PathLabel { phi, eta, monomial })
}

/// The partial order on paths of one weight: `pi < sigma` iff
/// `phi(pi) <_B phi(sigma)`, or `phi` agrees and `eta_pi >_lex eta_sigma`.
pub fn label_order_less(datum: &CartanDatum, p: &PathLabel, s: &PathLabel) -> bool {
    if p.phi == s.phi {
        p.eta > s.eta
    } else {
        datum.bruhat_less(&p.phi, &s.phi)
    }
}

pub fn path_order_less(datum: &CartanDatum, lambda: &Weight, p: &LsPath, s: &LsPath) -> Result<bool> {
    let lp = adapted_monomial(datum, lambda, p)?;
    let ls = adapted_monomial(datum, lambda, s)?;
    Ok(label_order_less(datum, &lp, &ls))
}

/// The crystal `Pi_lambda` with its `f`-edges. Vertex 0 is `pi_lambda`.
#[derive(Clone, Debug)]
pub struct PathCrystal {
    datum: CartanDatum,
    lambda: Weight,
    vertices: Vec<LsPath>,
    index: HashMap<LsPath, usize>,
    f_edges: BTreeMap<(usize, usize), usize>,
}

impl PathCrystal {
    /// Breadth-first closure of `{pi_lambda}` under all `f_i`.
    pub fn generate(datum: &CartanDatum, lambda: &Weight) -> Result<Self> {
        datum.validate_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::InvalidArgument(format!("{lambda} is not dominant")));
        }
        let start = LsPath::straight(lambda);
        let mut vertices = vec![start.clone()];
        let mut index = HashMap::from([(start, 0usize)]);
        let mut f_edges = BTreeMap::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for i in 0..datum.rank() {
                if let Some(next) = vertices[v].f(datum, i) {
                    let id = match index.get(&next) {
                        Some(&id) => id,
                        None => {
                            let id = vertices.len();
                            index.insert(next.clone(), id);
                            vertices.push(next);
                            queue.push_back(id);
                            id
                        }
                    };
                    f_edges.insert((v, i), id);
                }
            }
        }
        Ok(PathCrystal { datum: datum.clone(), lambda: lambda.clone(), vertices, index, f_edges })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[LsPath] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &LsPath {
        &self.vertices[v]
    }

    pub fn index_of(&self, path: &LsPath) -> Option<usize> {
        self.index.get(path).copied()
    }

    pub fn f(&self, v: usize, i: usize) -> Option<usize> {
        self.f_edges.get(&(v, i)).copied()
    }

    /// Computed by applying `e_i` to the stored path.
    pub fn e(&self, v: usize, i: usize) -> Option<usize> {
        self.vertices[v].e(&self.datum, i).and_then(|p| self.index_of(&p))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.f_edges.iter().map(|(&(v, i), &w)| (v, i, w))
    }

    /// `lambda - endpoint`, in simple-root coordinates.
    pub fn depth(&self, v: usize) -> RootVector {
        let diff = self.lambda.sub(&self.vertices[v].endpoint());
        self.datum.weight_to_root(&diff).expect("path weights differ from lambda by roots")
    }

    pub fn label(&self, v: usize) -> Result<PathLabel> {
        adapted_monomial(&self.datum, &self.lambda, &self.vertices[v])
    }

    /// Vertices grouped by `nu = lambda - endpoint`.
    pub fn weight_blocks(&self) -> BTreeMap<RootVector, Vec<usize>> {
        let mut blocks: BTreeMap<RootVector, Vec<usize>> = BTreeMap::new();
        for v in 0..self.len() {
            blocks.entry(self.depth(v)).or_default().push(v);
        }
        blocks
    }

    /// DOT rendering: vertices labeled by `eta` and endpoint weight, edges by
    /// 1-based simple-root index.
    pub fn to_dot(&self) -> Result<String> {
        let mut out = String::new();
        writeln!(out, "digraph crystal {{").unwrap();
        writeln!(out, "  // {} lambda={}", self.datum.name(), self.lambda).unwrap();
        for v in 0..self.len() {
            let label = self.label(v)?;
            let eta: Vec<String> = label.eta.iter().map(|n| n.to_string()).collect();
            writeln!(out, "  v{v} [label=\"({}) {}\"];", eta.join(","), self.vertices[v].endpoint()).unwrap();
        }
        for (v, i, w) in self.edges() {
            writeln!(out, "  v{v} -> v{w} [label=\"{}\"];", i + 1).unwrap();
        }
        writeln!(out, "}}").unwrap();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn g2() -> CartanDatum {
        "G2".parse().unwrap()
    }

    #[test]
    fn a1_strings() {
        let a1: CartanDatum = "A1".parse().unwrap();
        let lam = Weight(vec![1]);
        let p = LsPath::straight(&lam);
        let fp = p.f(&a1, 0).unwrap();
        assert_eq!(fp, LsPath::straight(&Weight(vec![-1])));
        assert_eq!(fp.f(&a1, 0), None);
        assert_eq!(fp.e(&a1, 0), Some(p.clone()));
        assert_eq!(p.e(&a1, 0), None);
        let c = PathCrystal::generate(&a1, &Weight(vec![3])).unwrap();
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn highest_path_has_no_raising() {
        let g = g2();
        let p = LsPath::straight(&Weight(vec![2, 1]));
        assert!((0..2).all(|i| p.e(&g, i).is_none()));
    }

    #[test]
    fn split_path_is_reflected_in_the_middle() {
        // A1, lambda = 2: f cuts at t1 = 1/2 and reflects the first half
        let a1: CartanDatum = "A1".parse().unwrap();
        let p = LsPath::straight(&Weight(vec![2])).f(&a1, 0).unwrap();
        assert_eq!(p.segments().len(), 2);
        assert_eq!(p.segments()[0].direction, Weight(vec![-2]));
        assert_eq!(p.segments()[0].duration, Rational::new(1, 2));
        assert_eq!(p.endpoint(), Weight(vec![0]));
    }

    #[test]
    fn g2_example_eta_walk() {
        let g = g2();
        let mut p = LsPath::straight(&Weight(vec![2, 1]));
        for (i, n) in [(0usize, 4), (1, 2), (0, 1)].iter().rev() {
            for _ in 0..*n {
                p = p.f(&g, *i).unwrap();
            }
        }
        assert_eq!(p.endpoint(), Weight(vec![-2, 2]));
    }

    #[test]
    fn crystal_sizes() {
        let g = g2();
        assert_eq!(PathCrystal::generate(&g, &Weight(vec![1, 0])).unwrap().len(), 7);
        assert_eq!(PathCrystal::generate(&g, &Weight(vec![0, 1])).unwrap().len(), 14);
        let c = PathCrystal::generate(&g, &Weight(vec![2, 1])).unwrap();
        assert_eq!(BigInt::from(c.len()), g.weyl_dim(&Weight(vec![2, 1])).unwrap());
        let blocks = c.weight_blocks();
        assert_eq!(blocks[&RootVector(vec![5, 2])].len(), 5);
    }

    #[test]
    fn ef_are_partial_inverses_and_shift_endpoints() {
        let g = g2();
        let c = PathCrystal::generate(&g, &Weight(vec![1, 1])).unwrap();
        for v in 0..c.len() {
            let p = c.vertex(v);
            for i in 0..2 {
                if let Some(fp) = p.f(&g, i) {
                    assert_eq!(fp.e(&g, i).as_ref(), Some(p));
                    assert_eq!(fp.endpoint(), p.endpoint().sub(&g.simple_root(i)));
                }
                if let Some(ep) = p.e(&g, i) {
                    assert_eq!(ep.f(&g, i).as_ref(), Some(p));
                }
            }
        }
    }

    #[test]
    fn labels_are_weight_consistent() {
        let g = g2();
        let lam = Weight(vec![2, 1]);
        let c = PathCrystal::generate(&g, &lam).unwrap();
        for v in 0..c.len() {
            let l = c.label(v).unwrap();
            assert_eq!(l.monomial.weight(2), c.depth(v));
        }
        assert_eq!(c.label(0).unwrap().eta, Vec::<u32>::new());
    }

    #[test]
    fn dot_output() {
        let a1: CartanDatum = "A1".parse().unwrap();
        let c = PathCrystal::generate(&a1, &Weight(vec![1])).unwrap();
        let dot = c.to_dot().unwrap();
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("v0 -> v1 [label=\"1\"]"));
    }
}
