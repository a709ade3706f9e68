//! Type `A_n`: semistandard tableaux as labels of tensor basis vectors,
//! Kashiwara operators by the signature rule, and the row-replacement
//! monomial construction for comparison with adapted monomials.
//!
//! Root indices are 0-based as everywhere else in the crate: operator `i`
//! moves entries between `i + 1` and `i + 2`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::module::{a_columns, column_weight, MultiIndex};
use crate::path::{AdaptedMonomial, PathCrystal, PathLabel, RootOp};
use crate::rootdata::{CartanDatum, Weight};

/// A tableau stored by columns, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    columns: Vec<Vec<usize>>,
}

impl Tableau {
    /// Columns must be nonempty, strictly increasing and weakly decreasing in
    /// length.
    pub fn from_columns(columns: Vec<Vec<usize>>) -> Result<Self> {
        if columns.iter().any(|c| c.is_empty() || c.windows(2).any(|w| w[0] >= w[1]) || c[0] == 0) {
            return Err(Error::Parse("columns must be nonempty and strictly increasing over 1, 2, ...".into()));
        }
        if columns.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::Parse("column lengths must not increase to the right".into()));
        }
        Ok(Tableau { columns })
    }

    /// `T_lambda`: entry `r` throughout row `r`.
    pub fn highest(lambda: &Weight) -> Self {
        let n = lambda.rank();
        let columns = (1..=n)
            .rev()
            .flat_map(|k| std::iter::repeat_n((1..=k).collect::<Vec<_>>(), lambda.0[k - 1].max(0) as usize))
            .collect();
        Tableau { columns }
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let height = self.columns.first().map_or(0, Vec::len);
        (0..height).map(|r| self.columns.iter().filter_map(|c| c.get(r).copied()).collect()).collect()
    }

    pub fn has_weak_rows(&self) -> bool {
        self.rows().iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]))
    }

    /// The dominant weight whose `T_lambda` has this shape.
    pub fn shape(&self, n: usize) -> Weight {
        let mut w = Weight::zero(n);
        for c in &self.columns {
            if (1..=n).contains(&c.len()) {
                w.0[c.len() - 1] += 1;
            }
        }
        w
    }

    /// Sum of the column weights.
    pub fn weight(&self, n: usize) -> Weight {
        self.columns.iter().fold(Weight::zero(n), |acc, c| acc.add(&column_weight(n, c)))
    }

    /// Checks that the tableau fits `A_n`: columns of length at most `n`,
    /// entries at most `n + 1`.
    pub fn check_rank(&self, n: usize) -> Result<()> {
        if self.columns.iter().any(|c| c.len() > n || c.iter().any(|&x| x > n + 1)) {
            return Err(Error::InvalidArgument(format!("tableau {self} does not fit A{n}")));
        }
        Ok(())
    }

    /// Positions `(column, row)` in reading order: columns right to left,
    /// each top to bottom.
    fn reading_positions(&self) -> Vec<(usize, usize)> {
        (0..self.columns.len()).rev().flat_map(|c| (0..self.columns[c].len()).map(move |r| (c, r))).collect()
    }

    pub fn reading_word(&self) -> Vec<usize> {
        self.reading_positions().into_iter().map(|(c, r)| self.columns[c][r]).collect()
    }

    fn with_entry(&self, (c, r): (usize, usize), value: usize) -> Self {
        let mut t = self.clone();
        t.columns[c][r] = value;
        t
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows().iter().map(|row| row.iter().map(|x| x.to_string()).collect()).collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Row-wise, rows separated by `/`, one digit per entry (`114/23/3`). Rows
/// with entries above 9 use commas: `1,1,10/2,3`.
impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<Vec<usize>> = s
            .trim()
            .split('/')
            .map(|row| {
                let row = row.trim();
                let cells: Vec<std::result::Result<usize, _>> = if row.contains(',') {
                    row.split(',').map(|x| x.trim().parse::<usize>()).collect()
                } else {
                    row.chars().map(|ch| ch.to_string().parse::<usize>()).collect()
                };
                cells.into_iter().collect::<std::result::Result<Vec<_>, _>>().map_err(|_| Error::Parse(format!("bad tableau row {row:?}")))
            })
            .collect::<Result<_>>()?;
        if rows.iter().any(Vec::is_empty) {
            return Err(Error::Parse(format!("empty row in tableau {s:?}")));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::Parse(format!("row lengths increase in tableau {s:?}")));
        }
        let width = rows.first().map_or(0, Vec::len);
        let columns = (0..width).map(|c| rows.iter().filter_map(|row| row.get(c).copied()).collect()).collect();
        Tableau::from_columns(columns)
    }
}

/// Factor indices of the tensor basis vector labeled by `t`. Columns are
/// read right to left, so the factors run from the shortest columns to the
/// longest, matching the `lambda_1`-first factor order.
pub fn tableau_to_tensor_index(n: usize, t: &Tableau) -> Result<MultiIndex> {
    t.check_rank(n)?;
    let mut tables: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
    Ok(t.columns
        .iter()
        .rev()
        .map(|c| {
            let cols = tables.entry(c.len()).or_insert_with(|| a_columns(n, c.len()));
            cols.iter().position(|s| s == c).expect("every strictly increasing column is a basis label")
        })
        .collect())
}

/// The signature string: `+` for entries `i + 1`, `-` for `i + 2`, `o`
/// otherwise, in reading order.
pub fn signature(t: &Tableau, i: usize) -> String {
    t.reading_word()
        .iter()
        .map(|&x| if x == i + 1 { '+' } else if x == i + 2 { '-' } else { 'o' })
        .collect()
}

/// Positions (in reading order) of the uncancelled signs, after deleting
/// `+ -` pairs.
fn surviving(sig: &[char]) -> Vec<usize> {
    let mut minus = Vec::new();
    let mut open = Vec::new();
    for (k, &c) in sig.iter().enumerate() {
        match c {
            '+' => open.push(k),
            '-'
                if open.pop().is_none() => {
                    minus.push(k);
                }
            _ => {}
        }
    }
    minus.extend(open);
    minus
}

/// The signature after cancellation, cancelled signs shown as `o`.
pub fn reduced_signature(t: &Tableau, i: usize) -> String {
    let sig: Vec<char> = signature(t, i).chars().collect();
    let keep = surviving(&sig);
    (0..sig.len()).map(|k| if keep.contains(&k) { sig[k] } else { 'o' }).collect()
}

/// `f~_i` or `e~_i` by the signature rule; `None` when no suitable sign
/// survives.
pub fn tableau_crystal_op(t: &Tableau, i: usize, op: RootOp) -> Option<Tableau> {
    let sig: Vec<char> = signature(t, i).chars().collect();
    let keep = surviving(&sig);
    let pos = t.reading_positions();
    match op {
        RootOp::F => keep.iter().find(|&&k| sig[k] == '+').map(|&k| t.with_entry(pos[k], i + 2)),
        RootOp::E => keep.iter().rev().find(|&&k| sig[k] == '-').map(|&k| t.with_entry(pos[k], i + 1)),
    }
}

/// The row-replacement monomial: repeatedly take the smallest `i` such that
/// `i + 1` occurs in some row `m <= i` (rows 1-based), turn all those
/// occurrences into `i`, and record `F_i^(r)`. Factors are 0-based like
/// [`AdaptedMonomial`].
pub fn lectof_monomial(t: &Tableau) -> Result<AdaptedMonomial> {
    let mut rows = t.rows();
    let budget: usize = rows.iter().flatten().sum::<usize>() + 1;
    let mut factors = Vec::new();
    for _ in 0..budget {
        let top = rows.iter().flatten().max().copied().unwrap_or(0);
        let hit = (1..top).find(|&i| rows.iter().take(i).any(|row| row.contains(&(i + 1))));
        let Some(i) = hit else {
            let done = rows.iter().enumerate().all(|(r, row)| row.iter().all(|&x| x == r + 1));
            return if done {
                Ok(AdaptedMonomial { factors })
            } else {
                Err(Error::NonTerminating(format!("row replacement stalls on {t}")))
            };
        };
        let mut r = 0u32;
        for row in rows.iter_mut().take(i) {
            for x in row.iter_mut().filter(|x| **x == i + 1) {
                *x = i;
                r += 1;
            }
        }
        factors.push((i - 1, r));
    }
    Err(Error::NonTerminating(format!("row replacement does not reach the highest tableau from {t}")))
}

/// The crystal generated from `T_lambda` by the signature rule.
#[derive(Clone, Debug)]
pub struct TableauCrystal {
    n: usize,
    vertices: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    f_edges: BTreeMap<(usize, usize), usize>,
}

impl TableauCrystal {
    pub fn generate(n: usize, lambda: &Weight) -> Result<Self> {
        if lambda.rank() != n || !lambda.is_dominant() {
            return Err(Error::InvalidArgument(format!("{lambda} is not a dominant weight of A{n}")));
        }
        let start = Tableau::highest(lambda);
        let mut vertices = vec![start.clone()];
        let mut index = HashMap::from([(start, 0usize)]);
        let mut f_edges = BTreeMap::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for i in 0..n {
                if let Some(next) = tableau_crystal_op(&vertices[v], i, RootOp::F) {
                    let id = *index.entry(next.clone()).or_insert_with(|| {
                        vertices.push(next);
                        queue.push_back(vertices.len() - 1);
                        vertices.len() - 1
                    });
                    f_edges.insert((v, i), id);
                }
            }
        }
        Ok(TableauCrystal { n, vertices, index, f_edges })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Tableau] {
        &self.vertices
    }

    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn f(&self, v: usize, i: usize) -> Option<usize> {
        self.f_edges.get(&(v, i)).copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.f_edges.iter().map(|(&(v, i), &w)| (v, i, w))
    }

    /// The label-preserving bijection onto a path crystal that fixes the
    /// highest vertex, as `tableau vertex -> path vertex`. Fails if the two
    /// edge-labeled graphs are not isomorphic.
    pub fn isomorphism_to(&self, paths: &PathCrystal) -> Result<Vec<usize>> {
        if paths.len() != self.len() || paths.datum().rank() != self.n {
            return Err(Error::InvalidArgument(format!("crystals have sizes {} and {}", self.len(), paths.len())));
        }
        let mut map = vec![usize::MAX; self.len()];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.n {
                match (self.f(v, i), paths.f(map[v], i)) {
                    (None, None) => {}
                    (Some(t), Some(p)) => {
                        if map[t] == usize::MAX {
                            map[t] = p;
                            queue.push_back(t);
                        } else if map[t] != p {
                            return Err(Error::InvalidArgument(format!("f{} edge from {} disagrees", i + 1, self.vertices[v])));
                        }
                    }
                    _ => return Err(Error::InvalidArgument(format!("f{} defined on only one side at {}", i + 1, self.vertices[v]))),
                }
            }
        }
        let mut seen = map.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.len() || seen.contains(&usize::MAX) {
            return Err(Error::InvalidArgument("tableau-to-path map is not a bijection".into()));
        }
        Ok(map)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialComparison {
    pub ours: PathLabel,
    pub lectof: AdaptedMonomial,
    pub same: bool,
}

/// Pairs the adapted monomial of the path matching `t` with the
/// row-replacement monomial of `t`.
pub fn compare_monomials(datum: &CartanDatum, lambda: &Weight, t: &Tableau) -> Result<MonomialComparison> {
    if datum.letter() != 'A' {
        return Err(Error::InvalidArgument(format!("{} is not of type A", datum.name())));
    }
    let tableaux = TableauCrystal::generate(datum.rank(), lambda)?;
    let v = tableaux
        .index_of(t)
        .ok_or_else(|| Error::InvalidArgument(format!("{t} is not in the crystal of {lambda}")))?;
    let paths = PathCrystal::generate(datum, lambda)?;
    let map = tableaux.isomorphism_to(&paths)?;
    let ours = paths.label(map[v])?;
    let lectof = lectof_monomial(t)?;
    let same = ours.monomial == lectof;
    Ok(MonomialComparison { ours, lectof, same })
}
