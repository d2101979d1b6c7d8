//! Command implementations. Each returns an [`Outcome`] or an error; the
//! caller maps errors to exit codes with [`exit_code_for`].

use std::fs;
use std::path::Path;

use crate::catalog;
use crate::error::{Error, Result};
use crate::exactcore::{LinearMap, Rational};
use crate::homalg;
use crate::homcoalg;
use crate::homcomod::{self, ComoduleKind};
use crate::hommod::{self, twist_provenance, Provenance};
use crate::report::{Axiom, AxiomReport};
use crate::structure::Structure;

use super::format::StructureFile;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// What a successful command prints and returns.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub notes: Vec<String>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, notes: Vec::new() }
    }
}

/// Exit 2 for malformed input, 1 for refused constructions and other preconditions.
pub fn exit_code_for(e: &Error) -> i32 {
    if e.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_FAILURE
    }
}

fn input(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn load(path: &Path) -> Result<StructureFile> {
    let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    StructureFile::parse(&text)
}

fn emit(file: &StructureFile, out: Option<&Path>) -> Result<Outcome> {
    let text = file.to_canonical_string();
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display())))?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}

fn render_reports(reports: &[&AxiomReport], max_witnesses: usize) -> Outcome {
    let mut stdout = String::new();
    for r in reports {
        stdout.push_str(&r.render(max_witnesses));
    }
    let all = reports.iter().all(|r| r.holds);
    stdout.push_str(if all { "result: PASS\n" } else { "result: FAIL\n" });
    Outcome { code: if all { EXIT_OK } else { EXIT_FAILURE }, stdout, notes: Vec::new() }
}

/// Runs the requested axioms (comma-separated ids, or `all`) on one structure.
pub fn verify(path: &Path, name: &str, suite: &str, max_witnesses: usize) -> Result<Outcome> {
    let s = load(path)?.resolve(name)?;
    let reports = s.full_suite();
    if reports.is_empty() {
        return Err(input(format!("{name:?} is a {} and has no axioms", s.kind_name())));
    }
    let selected: Vec<&AxiomReport> = if suite == "all" {
        reports.iter().collect()
    } else {
        suite
            .split(',')
            .map(|id| {
                let axiom: Axiom = id.trim().parse()?;
                reports
                    .iter()
                    .find_map(|r| r.find(axiom))
                    .ok_or_else(|| input(format!("{axiom} does not apply to a {}", s.kind_name())))
            })
            .collect::<Result<_>>()?
    };
    let mut outcome = render_reports(&selected, max_witnesses);
    outcome.stdout.insert_str(0, &format!("structure: {name} ({})\n", s.kind_name()));
    Ok(outcome)
}

/// `id`, `diag:a,b,...`, or the name of a `linear_map` entry.
fn parse_endo(file: &StructureFile, arg: &str, dim: usize) -> Result<LinearMap> {
    let map = if arg == "id" {
        LinearMap::identity(dim)
    } else if let Some(list) = arg.strip_prefix("diag:") {
        let diag: Vec<Rational> = list.split(',').map(|t| t.trim().parse()).collect::<Result<_>>()?;
        LinearMap::diagonal(&diag)
    } else {
        match file.resolve(arg)? {
            Structure::Map(f) => f,
            other => return Err(input(format!("{arg:?} is a {}, not a linear_map", other.kind_name()))),
        }
    };
    if map.dim_in() != dim || map.dim_out() != dim {
        return Err(Error::DimensionMismatch(format!(
            "endomorphism is {}x{}, structure has dim {dim}",
            map.dim_out(),
            map.dim_in()
        )));
    }
    Ok(map)
}

/// Applies the twist matching the structure's kind and replaces it in the file.
pub fn twist(path: &Path, name: &str, endo: Option<&str>, out: Option<&Path>) -> Result<Outcome> {
    let mut file = load(path)?;
    let s = file.resolve(name)?;
    let needs_endo = matches!(s, Structure::Algebra(_) | Structure::Coalgebra(_));
    match (needs_endo, endo) {
        (true, None) => return Err(input(format!("twisting a {} needs --endo", s.kind_name()))),
        (false, Some(_)) => {
            return Err(input(format!("a {} is twisted by the α² of its base; --endo is not accepted", s.kind_name())))
        }
        _ => {}
    }
    let mut notes = Vec::new();
    let twisted = match &s {
        Structure::Algebra(a) => {
            Structure::Algebra(homalg::yau_twist(a, &parse_endo(&file, endo.unwrap_or("id"), a.dim())?)?)
        }
        Structure::Coalgebra(c) => {
            Structure::Coalgebra(homcoalg::yau_twist_coalgebra(c, &parse_endo(&file, endo.unwrap_or("id"), c.dim())?)?)
        }
        Structure::Module(m) => {
            if twist_provenance(m.side()) == Provenance::Remark {
                notes.push("note: the right-module twist follows the mirrored remark, not a proved theorem".into());
            }
            Structure::Module(hommod::twist_module(m)?)
        }
        Structure::Comodule(c) => Structure::Comodule(match c.kind() {
            ComoduleKind::Coassociative => homcomod::twist_coassoc_comodule(c)?,
            ComoduleKind::Lie => homcomod::twist_lie_comodule(c)?,
            ComoduleKind::Poisson => homcomod::twist_poisson_comodule(c)?,
        }),
        Structure::Map(_) => return Err(input("a linear_map cannot be twisted")),
    };
    let base = file.base_of(name).map(str::to_string);
    file.insert(name, &twisted, base.as_deref())?;
    let mut outcome = emit(&file, out)?;
    outcome.notes = notes;
    Ok(outcome)
}

/// Name for a transformed base: an existing equal entry, else `<base>_<suffix>`.
fn base_name_for(file: &StructureFile, base: &Structure, old: &str, suffix: &str) -> String {
    file.structures
        .keys()
        .find(|k| file.resolve(k).ok().as_ref() == Some(base))
        .cloned()
        .unwrap_or_else(|| format!("{old}_{suffix}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformOp {
    Negate,
    Opposite,
}

impl TransformOp {
    fn suffix(self) -> &'static str {
        match self {
            TransformOp::Negate => "neg",
            TransformOp::Opposite => "op",
        }
    }
}

/// Negation or opposite, dispatched by kind; modules and comodules get a new base.
pub fn transform(path: &Path, name: &str, op: TransformOp, out: Option<&Path>) -> Result<Outcome> {
    use TransformOp::*;
    let mut file = load(path)?;
    let s = file.resolve(name)?;
    let result = match (&s, op) {
        (Structure::Algebra(a), Negate) => Structure::Algebra(homalg::negate(a)),
        (Structure::Algebra(a), Opposite) => Structure::Algebra(homalg::opposite(a)),
        (Structure::Coalgebra(c), Negate) => Structure::Coalgebra(homcoalg::negate_coalgebra(c)),
        (Structure::Coalgebra(c), Opposite) => Structure::Coalgebra(homcoalg::opposite_coalgebra(c)),
        (Structure::Module(m), Negate) => Structure::Module(hommod::negate_module(m)?),
        (Structure::Module(m), Opposite) => Structure::Module(hommod::opposite_module(m)?),
        (Structure::Comodule(c), Negate) => Structure::Comodule(homcomod::negate_poisson_comodule(c)?),
        (Structure::Comodule(_), Opposite) => return Err(input("opposite is not defined for comodules")),
        (Structure::Map(_), _) => return Err(input("a linear_map cannot be transformed")),
    };
    let base = match &result {
        Structure::Module(m) => {
            let old = file.base_of(name).expect("modules have a base").to_string();
            Some(base_name_for(&file, &Structure::Algebra(m.algebra().clone()), &old, op.suffix()))
        }
        Structure::Comodule(c) => {
            let old = file.base_of(name).expect("comodules have a base").to_string();
            Some(base_name_for(&file, &Structure::Coalgebra(c.coalgebra().clone()), &old, op.suffix()))
        }
        _ => None,
    };
    file.insert(name, &result, base.as_deref())?;
    emit(&file, out)
}

/// Checks that the map named `map` is a morphism `from → to`, dispatched by kind.
pub fn check_morphism(
    path: &Path,
    map: &str,
    from: &str,
    to: &str,
    strict: bool,
    max_witnesses: usize,
) -> Result<Outcome> {
    let file = load(path)?;
    let f = match file.resolve(map)? {
        Structure::Map(f) => f,
        other => return Err(input(format!("{map:?} is a {}, not a linear_map", other.kind_name()))),
    };
    let (a, b) = (file.resolve(from)?, file.resolve(to)?);
    let report = match (&a, &b) {
        (Structure::Algebra(x), Structure::Algebra(y)) => homalg::check_morphism(&f, x, y)?,
        (Structure::Coalgebra(x), Structure::Coalgebra(y)) => homcoalg::check_coalgebra_morphism(&f, x, y)?,
        (Structure::Module(x), Structure::Module(y)) if strict => hommod::check_module_morphism_strict(&f, x, y)?,
        (Structure::Module(x), Structure::Module(y)) => hommod::check_module_morphism(&f, x, y)?,
        (Structure::Comodule(x), Structure::Comodule(y)) if strict => {
            homcomod::check_comodule_morphism_strict(&f, x, y)?
        }
        (Structure::Comodule(x), Structure::Comodule(y)) => homcomod::check_comodule_morphism(&f, x, y)?,
        _ => return Err(input(format!("no morphism notion between a {} and a {}", a.kind_name(), b.kind_name()))),
    };
    Ok(render_reports(&[&report], max_witnesses))
}

/// One line per catalogue entry: name and kind.
pub fn catalog_list() -> Outcome {
    let mut stdout = String::new();
    for e in catalog::entries() {
        stdout.push_str(&format!("{}\t{}\n", e.name, e.structure.kind_name()));
    }
    Outcome::ok(stdout)
}

/// A structure file holding the entry and, for modules and comodules, its base.
pub fn catalog_export(name: &str, out: Option<&Path>) -> Result<Outcome> {
    let entry = catalog::entry(name).ok_or_else(|| input(format!("no catalogue entry {name:?}")))?;
    let mut file = StructureFile::new();
    file.insert(name, &entry.structure, entry.base)?;
    emit(&file, out)
}
