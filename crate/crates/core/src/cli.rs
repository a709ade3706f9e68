//! Command-line front end.
//!
//! ```text
//! uqcanon basis     --type G2 --highest 2,1 [--weight -2,2] [--max-height N] [--format json|text]
//! uqcanon crystal   --type A1 --highest 1 [--format dot|json|text]
//! uqcanon monomials --type A3 --highest 1,1,1 [--format text|json]
//! uqcanon verify    --type A2 --highest 1,1 [--max-height N]
//! uqcanon dims      --type G2 --highest 0,1
//! ```
//!
//! Weights are in fundamental coordinates. Exit status is 0 on success, 1
//! on a domain error and 2 on a usage error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::canonical::{builtin_factors, check_triangular_form, Realization};
use crate::error::{Error, Result};
use crate::module::{load_module_file, verify_relations, weight_multiplicity_oracle, ModuleRep, RelationReport};
use crate::rootdata::{CartanDatum, RootVector, Weight};

#[derive(Parser, Debug)]
#[command(name = "uqcanon", version, about = "Canonical bases of irreducible U_q(g)-modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Canonical basis elements, one JSON block per weight
    Basis(Common),
    /// The path crystal
    Crystal(Common),
    /// First direction, eta and adapted monomial of every path
    Monomials(Common),
    /// Module, crystal and block checks
    Verify(Common),
    /// Dimension by the Weyl formula
    Dims(Common),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Cartan type such as A3 or G2
    #[arg(long = "type", value_name = "TYPE")]
    pub cartan_type: String,
    /// Highest weight, e.g. 2,1
    #[arg(long, value_name = "M1,M2,...", allow_hyphen_values = true)]
    pub highest: String,
    /// Restrict to one weight of V(lambda)
    #[arg(long, value_name = "M1,M2,...", allow_hyphen_values = true)]
    pub weight: Option<String>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// JSON module file for a fundamental weight (repeatable)
    #[arg(long = "module-file", value_name = "PATH")]
    pub module_files: Vec<PathBuf>,
    /// Only weights lambda - nu with height(nu) at most this
    #[arg(long)]
    pub max_height: Option<i64>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Text,
}

struct Context {
    datum: CartanDatum,
    lambda: Weight,
    supplied: Vec<ModuleRep>,
}

/// Usage errors exit with 2, domain errors with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

fn context(c: &Common) -> CliResult<Context> {
    let datum: CartanDatum = c.cartan_type.parse().map_err(|e| usage(format!("--type {}: {e}", c.cartan_type)))?;
    let lambda: Weight = c.highest.parse().map_err(|e| usage(format!("--highest {}: {e}", c.highest)))?;
    if lambda.rank() != datum.rank() {
        return Err(usage(format!("--highest has {} entries but {} has rank {}", lambda.rank(), datum.name(), datum.rank())));
    }
    if !lambda.is_dominant() {
        return Err(usage(format!("--highest {lambda} has a negative coordinate")));
    }
    let mut supplied = Vec::new();
    for p in &c.module_files {
        let bytes = std::fs::read(p).map_err(|e| usage(format!("--module-file {}: {e}", p.display())))?;
        let m = load_module_file(&bytes)?;
        if *m.datum() != datum {
            return Err(usage(format!("--module-file {} is for {}, not {}", p.display(), m.datum().name(), datum.name())));
        }
        supplied.push(m);
    }
    Ok(Context { datum, lambda, supplied })
}

fn target_nu(ctx: &Context, weight: &str) -> CliResult<RootVector> {
    let mu: Weight = weight.parse().map_err(|e| usage(format!("--weight {weight}: {e}")))?;
    if mu.rank() != ctx.datum.rank() {
        return Err(usage(format!("--weight has {} entries, expected {}", mu.rank(), ctx.datum.rank())));
    }
    ctx.datum
        .weight_to_root(&ctx.lambda.sub(&mu))
        .ok_or_else(|| Error::InvalidArgument(format!("weight {mu} does not differ from {} by a sum of roots", ctx.lambda)).into())
}

fn realization(ctx: &Context) -> Result<Realization> {
    Realization::new(builtin_factors(&ctx.datum, &ctx.lambda, &ctx.supplied)?)
}

fn basis(c: &Common) -> CliResult<String> {
    let ctx = context(c)?;
    let r = realization(&ctx)?;
    let blocks = match &c.weight {
        Some(w) => vec![r.canonical_block(&target_nu(&ctx, w)?)?],
        None => r.full_basis(c.max_height)?,
    };
    match c.format.unwrap_or(Format::Json) {
        Format::Json => {
            let values: Vec<_> = blocks.iter().map(|b| b.to_json_value()).collect();
            let out = if c.weight.is_some() { serde_json::to_string_pretty(&values[0]) } else { serde_json::to_string_pretty(&values) };
            Ok(out.expect("blocks serialize") + "\n")
        }
        Format::Text => {
            let mut out = String::new();
            for b in &blocks {
                writeln!(out, "nu = {} ({} elements)", b.nu, b.len()).unwrap();
                for e in &b.elements {
                    let terms: Vec<String> = e
                        .vector
                        .iter()
                        .rev()
                        .map(|(k, c)| format!("({}){}", c, k.iter().map(|x| format!("[{}]", x + 1)).collect::<String>()))
                        .collect();
                    writeln!(out, "  {} {:?}: {}", e.phi, e.eta, terms.join(" + ")).unwrap();
                }
            }
            Ok(out)
        }
        Format::Dot => Err(usage("--format dot only applies to crystal".into())),
    }
}

fn crystal(c: &Common) -> CliResult<String> {
    let ctx = context(c)?;
    let crystal = crate::path::PathCrystal::generate(&ctx.datum, &ctx.lambda)?;
    match c.format.unwrap_or(Format::Dot) {
        Format::Dot => Ok(crystal.to_dot()?),
        Format::Json => {
            let vertices = (0..crystal.len())
                .map(|v| {
                    let l = crystal.label(v)?;
                    Ok(json!({"id": v, "weight": crystal.vertex(v).endpoint().0, "phi": l.phi.one_based(), "eta": l.eta}))
                })
                .collect::<Result<Vec<_>>>()?;
            let edges: Vec<_> = crystal.edges().map(|(v, i, w)| json!({"from": v, "to": w, "label": i + 1})).collect();
            Ok(serde_json::to_string_pretty(&json!({"vertices": vertices, "edges": edges})).expect("serializes") + "\n")
        }
        Format::Text => {
            let mut out = String::new();
            for (v, i, w) in crystal.edges() {
                writeln!(out, "{v} -{}-> {w}", i + 1).unwrap();
            }
            Ok(out)
        }
    }
}

fn monomials(c: &Common) -> CliResult<String> {
    let ctx = context(c)?;
    let crystal = crate::path::PathCrystal::generate(&ctx.datum, &ctx.lambda)?;
    let nu_filter = c.weight.as_deref().map(|w| target_nu(&ctx, w)).transpose()?;
    let rows = (0..crystal.len())
        .filter(|&v| nu_filter.as_ref().is_none_or(|nu| crystal.depth(v) == *nu))
        .filter(|&v| c.max_height.is_none_or(|h| crystal.depth(v).height() <= h))
        .map(|v| Ok((v, crystal.label(v)?)))
        .collect::<Result<Vec<_>>>()?;
    match c.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut out = String::new();
            for (v, l) in rows {
                let eta: Vec<String> = l.eta.iter().map(|n| n.to_string()).collect();
                writeln!(out, "{}\t{}\t({})\t{}", crystal.vertex(v).endpoint(), l.phi, eta.join(","), l.monomial).unwrap();
            }
            Ok(out)
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(v, l)| {
                    json!({"weight": crystal.vertex(*v).endpoint().0, "phi": l.phi.one_based(), "eta": l.eta, "monomial": l.monomial.to_string()})
                })
                .collect();
            Ok(serde_json::to_string_pretty(&items).expect("serializes") + "\n")
        }
        Format::Dot => Err(usage("--format dot only applies to crystal".into())),
    }
}

fn dims(c: &Common) -> CliResult<String> {
    let ctx = context(c)?;
    Ok(format!("{}\n", ctx.datum.weyl_dim(&ctx.lambda)?))
}

/// Runs every check suite, one `PASS`/`FAIL` line each. The boolean is true
/// when all passed.
pub fn verify_report(datum: &CartanDatum, lambda: &Weight, supplied: &[ModuleRep], max_height: Option<i64>) -> Result<(String, bool)> {
    let mut lines: Vec<(String, std::result::Result<(), String>)> = Vec::new();
    let factors = builtin_factors(datum, lambda, supplied)?;
    let mut distinct: Vec<&ModuleRep> = Vec::new();
    for f in &factors {
        if !distinct.contains(&f) {
            distinct.push(f);
        }
    }
    for f in &distinct {
        let res = match verify_relations(*f) {
            RelationReport::Pass => f.check_height_order().map_err(|e| e.to_string()),
            fail => Err(fail.to_string()),
        };
        lines.push((format!("module relations V({})", f.highest_weight()), res));
    }
    let r = Realization::new(factors)?;
    let crystal = r.crystal();
    let dim = datum.weyl_dim(lambda)?;
    lines.push((
        "crystal size equals Weyl dimension".into(),
        if dim == crystal.len().into() { Ok(()) } else { Err(format!("{} vertices, dimension {dim}", crystal.len())) },
    ));
    let inverse = (0..crystal.len()).try_for_each(|v| {
        (0..datum.rank()).try_for_each(|i| match crystal.f(v, i) {
            Some(w) if crystal.e(w, i) != Some(v) => Err(format!("e{} f{} fails at vertex {v}", i + 1, i + 1)),
            _ => Ok(()),
        })
    });
    lines.push(("e and f are partial inverses".into(), inverse));
    let labels = (0..crystal.len()).try_for_each(|v| {
        let l = r.label(v);
        if l.monomial.weight(datum.rank()) == crystal.depth(v) {
            Ok(())
        } else {
            Err(format!("monomial {} has the wrong weight at vertex {v}", l.monomial))
        }
    });
    lines.push(("adapted monomials have the path weight".into(), labels));
    let tableau_check = if datum.letter() == 'A' {
        Some(
            crate::type_a::TableauCrystal::generate(datum.rank(), lambda)
                .and_then(|t| t.isomorphism_to(crystal).map(|_| ()))
                .map_err(|e| e.to_string()),
        )
    } else {
        None
    };
    if let Some(res) = tableau_check {
        lines.push(("tableau crystal is isomorphic to the path crystal".into(), res));
    }
    let blocks = r.full_basis(max_height);
    match blocks {
        Err(e) => lines.push(("canonical blocks".into(), Err(e.to_string()))),
        Ok(blocks) => {
            let form = blocks.iter().flat_map(|b| &b.elements).try_for_each(|e| {
                check_triangular_form(&e.vector).map(|_| ()).map_err(|err| err.to_string())
            });
            lines.push(("canonical elements have leading coefficient 1 and lower terms in qZ[q]".into(), form));
            let sizes = blocks.iter().try_for_each(|b| {
                let expected = weight_multiplicity_oracle(r.space(), &b.nu).map_err(|e| e.to_string())?;
                if expected == b.len() {
                    Ok(())
                } else {
                    Err(format!("block {} has {} elements, weight space has dimension {expected}", b.nu, b.len()))
                }
            });
            lines.push(("block sizes equal weight multiplicities".into(), sizes));
        }
    }
    let mut out = String::new();
    let mut ok = true;
    for (name, res) in lines {
        match res {
            Ok(()) => writeln!(out, "PASS {name}").unwrap(),
            Err(msg) => {
                ok = false;
                writeln!(out, "FAIL {name}: {msg}").unwrap();
            }
        }
    }
    Ok((out, ok))
}

/// Output text and whether the run counts as successful.
pub fn run(cli: &Cli) -> CliResult<(String, bool)> {
    match &cli.command {
        Command::Basis(c) => basis(c).map(|s| (s, true)),
        Command::Crystal(c) => crystal(c).map(|s| (s, true)),
        Command::Monomials(c) => monomials(c).map(|s| (s, true)),
        Command::Dims(c) => dims(c).map(|s| (s, true)),
        Command::Verify(c) => {
            let ctx = context(c)?;
            Ok(verify_report(&ctx.datum, &ctx.lambda, &ctx.supplied, c.max_height)?)
        }
    }
}

/// Parses `args` (program name first), runs, writes to the given streams and
/// returns the exit status.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(stdout, "{}", e.render()) } else { write!(stderr, "{}", e.render()) };
            return code;
        }
    };
    match run(&cli) {
        Ok((out, ok)) => {
            let _ = stdout.write_all(out.as_bytes());
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                CliError::Usage(_) => 2,
                CliError::Domain(_) => 1,
            }
        }
    }
}
