use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rootdata::{CartanDatum, Weight};

use super::{load_module_file, Action, BasisVector, ModuleRep};

const G2_L1: &str = include_str!("../../fixtures/g2_lambda1.json");
const G2_L2: &str = include_str!("../../fixtures/g2_lambda2.json");

/// Weight of the column `s` (a strictly increasing subset of `1..=n+1`) in
/// fundamental coordinates.
pub(crate) fn column_weight(n: usize, s: &[usize]) -> Weight {
    Weight(
        (1..=n)
            .map(|i| match (s.contains(&i), s.contains(&(i + 1))) {
                (true, false) => 1,
                (false, true) => -1,
                _ => 0,
            })
            .collect(),
    )
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Columns of `V(lambda_k)` for `A_n`, in the module's basis order: by
/// height, ties broken by lexicographic order of the subsets.
pub(crate) fn a_columns(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut cols = subsets(n + 1, k);
    // height of lambda_k - mu_s is sum_j (s_j - j)
    cols.sort_by_key(|s| (s.iter().enumerate().map(|(j, &x)| x - (j + 1)).sum::<usize>(), s.clone()));
    cols
}

/// The minuscule module `V(lambda_k)` of `A_n` with basis `v_s`,
/// `F_i v_s = v_{s with i replaced by i+1}` and `E_i` the reverse move.
pub fn a_fundamental(n: usize, k: usize) -> Result<ModuleRep> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::InvalidArgument(format!("A{n} has no fundamental weight {k}")));
    }
    let datum = CartanDatum::new('A', n)?;
    let cols = a_columns(n, k);
    let pos: BTreeMap<&Vec<usize>, usize> = cols.iter().enumerate().map(|(p, s)| (s, p)).collect();
    let basis = cols
        .iter()
        .map(|s| BasisVector {
            label: s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
            weight: column_weight(n, s),
        })
        .collect();
    let mut f = vec![Action::new(); n];
    let mut e = vec![Action::new(); n];
    for (p, s) in cols.iter().enumerate() {
        for i in 1..=n {
            let (has_i, has_next) = (s.contains(&i), s.contains(&(i + 1)));
            if has_i && !has_next {
                let t: Vec<usize> = s.iter().map(|&x| if x == i { i + 1 } else { x }).collect();
                f[i - 1].insert(p, vec![(pos[&t], LaurentPoly::one())]);
            }
            if has_next && !has_i {
                let t: Vec<usize> = s.iter().map(|&x| if x == i + 1 { i } else { x }).collect();
                e[i - 1].insert(p, vec![(pos[&t], LaurentPoly::one())]);
            }
        }
    }
    ModuleRep::new(datum, basis, f, e)
}

/// The fundamental `G2`-modules `V(lambda_1)` (7-dimensional) and
/// `V(lambda_2)` (14-dimensional) in their canonical bases, loaded from
/// embedded fixtures and validated like any module file.
pub fn g2_fundamental(k: usize) -> Result<ModuleRep> {
    match k {
        1 => load_module_file(G2_L1.as_bytes()),
        2 => load_module_file(G2_L2.as_bytes()),
        _ => Err(Error::InvalidArgument(format!("G2 has no fundamental weight {k}"))),
    }
}
