//! JSON module files.
//!
//! ```json
//! {"type": "A1", "highest": [1],
//!  "basis": [{"label": "v1", "weight": [1]}, {"label": "v2", "weight": [-1]}],
//!  "F": [[[1, 0, "1"]]],
//!  "E": [[[0, 1, "1"]]]}
//! ```
//!
//! `F` and `E` hold one list per simple root of `[row, column, coefficient]`
//! matrix entries (0-based basis indices; the generator sends basis vector
//! `column` to `coefficient * basis[row]`). Coefficients are Laurent
//! polynomial literals such as `"q^2+1"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rootdata::{CartanDatum, Weight};

use super::{verify_relations, Action, BasisVector, ModuleRep, RelationReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub highest: Vec<i64>,
    pub basis: Vec<FileBasisVector>,
    #[serde(rename = "F")]
    pub f: Vec<Vec<(usize, usize, String)>>,
    #[serde(rename = "E")]
    pub e: Vec<Vec<(usize, usize, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileBasisVector {
    pub label: String,
    pub weight: Vec<i64>,
}

fn parse_action(entries: &[(usize, usize, String)]) -> Result<Action> {
    let mut action = Action::new();
    for (row, col, lit) in entries {
        let c: LaurentPoly = lit.parse()?;
        if c.is_zero() {
            continue;
        }
        let column = action.entry(*col).or_default();
        if column.iter().any(|(r, _)| r == row) {
            return Err(Error::Parse(format!("duplicate matrix entry ({row}, {col})")));
        }
        column.push((*row, c));
    }
    Ok(action)
}

/// Parses, height-orders and validates a module file. Within one height
/// level the file's order is kept.
pub fn load_module_file(bytes: &[u8]) -> Result<ModuleRep> {
    let file: ModuleFile = serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    let datum: CartanDatum = file.cartan_type.parse()?;
    if file.f.len() != datum.rank() || file.e.len() != datum.rank() {
        return Err(Error::Parse(format!("{} needs {} F and E lists", datum.name(), datum.rank())));
    }
    let basis = file
        .basis
        .iter()
        .map(|b| BasisVector { label: b.label.clone(), weight: Weight(b.weight.clone()) })
        .collect::<Vec<_>>();
    let highest = Weight(file.highest.clone());
    datum.validate_weight(&highest)?;
    if !basis.iter().any(|b| b.weight == highest) {
        return Err(Error::Parse(format!("no basis vector of highest weight {highest}")));
    }
    let f = file.f.iter().map(|a| parse_action(a)).collect::<Result<Vec<_>>>()?;
    let e = file.e.iter().map(|a| parse_action(a)).collect::<Result<Vec<_>>>()?;
    // heights relative to any basis vector induce the same order
    let module = ModuleRep::new(datum, basis, f, e)?.sorted_by_height()?;
    if *module.highest_weight() != highest {
        return Err(Error::RelationViolation(format!("declared highest weight {highest} is not the top of the module")));
    }
    module.check_height_order()?;
    match verify_relations(&module) {
        RelationReport::Pass => Ok(module),
        RelationReport::Fail { relation, basis_vector } => Err(Error::RelationViolation(format!(
            "{relation} fails on basis vector {}",
            basis_vector.parse::<usize>().ok().and_then(|k| module.basis().get(k)).map_or(basis_vector.clone(), |b| b.label.clone())
        ))),
    }
}

pub fn module_to_file(m: &ModuleRep) -> ModuleFile {
    let dump = |gen_f: bool| -> Vec<Vec<(usize, usize, String)>> {
        (0..m.datum().rank())
            .map(|i| {
                let a = if gen_f { m.f_matrix(i) } else { m.e_matrix(i) };
                a.iter().flat_map(|(src, ts)| ts.iter().map(move |(t, c)| (*t, *src, c.to_string()))).collect()
            })
            .collect()
    };
    ModuleFile {
        cartan_type: m.datum().name(),
        highest: m.highest_weight().0.clone(),
        basis: m.basis().iter().map(|b| FileBasisVector { label: b.label.clone(), weight: b.weight.0.clone() }).collect(),
        f: dump(true),
        e: dump(false),
    }
}

pub fn module_to_json(m: &ModuleRep) -> String {
    serde_json::to_string_pretty(&module_to_file(m)).expect("module files serialize")
}
