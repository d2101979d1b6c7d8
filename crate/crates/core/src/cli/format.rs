//! Versioned JSON structure files.
//!
//! Canonical form: compact JSON, structure names sorted, fields in declaration
//! order, rationals as lowest-terms strings, one trailing newline. Modules and
//! comodules name their base structure inside the same file.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactcore::{ActionTensor, CoactionTensor, ComulTensor, LinearMap, MulTensor, Rational, Side};
use crate::homalg::HomAlgebra;
use crate::homcoalg::HomPoissonCoalgebra;
use crate::homcomod::{ComoduleKind, HomComodule};
use crate::hommod::HomModule;
use crate::structure::Structure;

pub const FORMAT_VERSION: u32 = 1;

type Matrix = Vec<Vec<Rational>>;
type Tensor3 = Vec<Vec<Vec<Rational>>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraEntry {
    pub dim: usize,
    /// `mu[i][j][k]`: coefficient of `e_k` in `e_i·e_j`.
    pub mu: Tensor3,
    pub alpha: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraEntry {
    pub dim: usize,
    pub cocommutative: bool,
    /// `delta[k][i][j]`: coefficient of `e_i⊗e_j` in `Δ(e_k)`.
    pub delta: Tensor3,
    pub gamma: Tensor3,
    pub alpha: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleEntry {
    pub algebra: String,
    pub side: Side,
    pub dim_m: usize,
    pub beta: Matrix,
    /// Left: `action[i][p][q]`; right: `action[p][i][q]`.
    pub action: Tensor3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleEntry {
    pub coalgebra: String,
    pub comodule_kind: ComoduleKind,
    pub dim_m: usize,
    pub beta: Matrix,
    /// `delta_m[p][i][q]`: coefficient of `e_i⊗f_q` in `Δ_M(f_p)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta_m: Option<Tensor3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_m: Option<Tensor3>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub dim_out: usize,
    pub dim_in: usize,
    pub entries: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Entry {
    HomAlgebra(AlgebraEntry),
    HomPoissonCoalgebra(CoalgebraEntry),
    HomModule(ModuleEntry),
    HomComodule(ComoduleEntry),
    LinearMap(MapEntry),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub version: u32,
    pub structures: BTreeMap<String, Entry>,
}

fn format_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

fn flatten3(t: &Tensor3, shape: (usize, usize, usize), what: &str) -> Result<Vec<Rational>> {
    let (a, b, c) = shape;
    let ok = t.len() == a && t.iter().all(|x| x.len() == b && x.iter().all(|y| y.len() == c));
    if !ok {
        return Err(format_err(format!("{what} must have shape {a}x{b}x{c}")));
    }
    Ok(t.iter().flatten().flatten().cloned().collect())
}

fn nest3(flat: &[Rational], shape: (usize, usize, usize)) -> Tensor3 {
    let (a, b, c) = shape;
    (0..a).map(|i| (0..b).map(|j| flat[(i * b + j) * c..(i * b + j + 1) * c].to_vec()).collect()).collect()
}

fn matrix(m: &Matrix, rows: usize, cols: usize, what: &str) -> Result<LinearMap> {
    LinearMap::from_rows(rows, cols, m.clone()).map_err(|_| format_err(format!("{what} must have shape {rows}x{cols}")))
}

fn rows(m: &LinearMap) -> Matrix {
    m.rows().map(<[Rational]>::to_vec).collect()
}

impl StructureFile {
    pub fn new() -> Self {
        StructureFile { version: FORMAT_VERSION, structures: BTreeMap::new() }
    }

    /// Parses and validates every entry.
    pub fn parse(text: &str) -> Result<Self> {
        let file: StructureFile = serde_json::from_str(text).map_err(|e| format_err(e.to_string()))?;
        if file.version != FORMAT_VERSION {
            return Err(format_err(format!("unsupported version {} (expected {FORMAT_VERSION})", file.version)));
        }
        for name in file.structures.keys() {
            file.resolve(name)?;
        }
        Ok(file)
    }

    /// Canonical text.
    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn entry(&self, name: &str) -> Result<&Entry> {
        self.structures.get(name).ok_or_else(|| format_err(format!("no structure named {name:?}")))
    }

    /// Builds the structure named `name`, resolving its base.
    pub fn resolve(&self, name: &str) -> Result<Structure> {
        match self.entry(name)? {
            Entry::HomAlgebra(e) => Ok(Structure::Algebra(algebra_from(e)?)),
            Entry::HomPoissonCoalgebra(e) => Ok(Structure::Coalgebra(coalgebra_from(e)?)),
            Entry::LinearMap(e) => Ok(Structure::Map(matrix(&e.entries, e.dim_out, e.dim_in, "entries")?)),
            Entry::HomModule(e) => {
                let algebra = match self.entry(&e.algebra)? {
                    Entry::HomAlgebra(a) => algebra_from(a)?,
                    _ => return Err(format_err(format!("{:?} is not a hom_algebra", e.algebra))),
                };
                let (n, m) = (algebra.dim(), e.dim_m);
                let shape = match e.side {
                    Side::Left => (n, m, m),
                    Side::Right => (m, n, m),
                };
                let action = ActionTensor::from_flat(n, m, e.side, flatten3(&e.action, shape, "action")?)?;
                let beta = matrix(&e.beta, m, m, "beta")?;
                Ok(Structure::Module(HomModule::new(algebra, beta, action)?))
            }
            Entry::HomComodule(e) => {
                let coalgebra = match self.entry(&e.coalgebra)? {
                    Entry::HomPoissonCoalgebra(c) => coalgebra_from(c)?,
                    _ => return Err(format_err(format!("{:?} is not a hom_poisson_coalgebra", e.coalgebra))),
                };
                let (n, m) = (coalgebra.dim(), e.dim_m);
                let coaction = |t: &Option<Tensor3>, what| -> Result<Option<CoactionTensor>> {
                    t.as_ref().map(|t| CoactionTensor::from_flat(n, m, flatten3(t, (m, n, m), what)?)).transpose()
                };
                let beta = matrix(&e.beta, m, m, "beta")?;
                Ok(Structure::Comodule(HomComodule::new(
                    coalgebra,
                    beta,
                    e.comodule_kind,
                    coaction(&e.delta_m, "delta_m")?,
                    coaction(&e.gamma_m, "gamma_m")?,
                )?))
            }
        }
    }

    /// Stores `s` under `name`. Modules and comodules reference `base`, which
    /// must already hold an equal base structure or be free.
    pub fn insert(&mut self, name: &str, s: &Structure, base: Option<&str>) -> Result<()> {
        let entry = match s {
            Structure::Algebra(a) => Entry::HomAlgebra(algebra_entry(a)),
            Structure::Coalgebra(c) => Entry::HomPoissonCoalgebra(coalgebra_entry(c)),
            Structure::Map(f) => {
                Entry::LinearMap(MapEntry { dim_out: f.dim_out(), dim_in: f.dim_in(), entries: rows(f) })
            }
            Structure::Module(m) => {
                let base = base.ok_or_else(|| format_err("a module needs a base name"))?;
                self.insert_base(base, Entry::HomAlgebra(algebra_entry(m.algebra())))?;
                let (n, dm) = (m.algebra().dim(), m.dim_m());
                let shape = match m.side() {
                    Side::Left => (n, dm, dm),
                    Side::Right => (dm, n, dm),
                };
                Entry::HomModule(ModuleEntry {
                    algebra: base.to_string(),
                    side: m.side(),
                    dim_m: dm,
                    beta: rows(m.beta()),
                    action: nest3(m.action().flat(), shape),
                })
            }
            Structure::Comodule(c) => {
                let base = base.ok_or_else(|| format_err("a comodule needs a base name"))?;
                self.insert_base(base, Entry::HomPoissonCoalgebra(coalgebra_entry(c.coalgebra())))?;
                let shape = (c.dim_m(), c.coalgebra().dim(), c.dim_m());
                Entry::HomComodule(ComoduleEntry {
                    coalgebra: base.to_string(),
                    comodule_kind: c.kind(),
                    dim_m: c.dim_m(),
                    beta: rows(c.beta()),
                    delta_m: c.delta_m().map(|t| nest3(t.flat(), shape)),
                    gamma_m: c.gamma_m().map(|t| nest3(t.flat(), shape)),
                })
            }
        };
        self.structures.insert(name.to_string(), entry);
        Ok(())
    }

    fn insert_base(&mut self, name: &str, entry: Entry) -> Result<()> {
        match self.structures.get(name) {
            Some(existing) if *existing != entry => {
                Err(format_err(format!("structure {name:?} already exists with different content")))
            }
            Some(_) => Ok(()),
            None => {
                self.structures.insert(name.to_string(), entry);
                Ok(())
            }
        }
    }

    /// Name of the base a module or comodule refers to.
    pub fn base_of(&self, name: &str) -> Option<&str> {
        match self.structures.get(name)? {
            Entry::HomModule(e) => Some(&e.algebra),
            Entry::HomComodule(e) => Some(&e.coalgebra),
            _ => None,
        }
    }
}

fn algebra_from(e: &AlgebraEntry) -> Result<HomAlgebra> {
    let n = e.dim;
    let mu = MulTensor::from_flat(n, flatten3(&e.mu, (n, n, n), "mu")?)?;
    HomAlgebra::new(mu, matrix(&e.alpha, n, n, "alpha")?)
}

fn coalgebra_from(e: &CoalgebraEntry) -> Result<HomPoissonCoalgebra> {
    let n = e.dim;
    let delta = ComulTensor::from_flat(n, flatten3(&e.delta, (n, n, n), "delta")?)?;
    let gamma = ComulTensor::from_flat(n, flatten3(&e.gamma, (n, n, n), "gamma")?)?;
    HomPoissonCoalgebra::new(delta, gamma, matrix(&e.alpha, n, n, "alpha")?, e.cocommutative)
}

fn algebra_entry(a: &HomAlgebra) -> AlgebraEntry {
    let n = a.dim();
    AlgebraEntry { dim: n, mu: nest3(a.mu().flat(), (n, n, n)), alpha: rows(a.alpha()) }
}

fn coalgebra_entry(c: &HomPoissonCoalgebra) -> CoalgebraEntry {
    let n = c.dim();
    CoalgebraEntry {
        dim: n,
        cocommutative: c.cocommutative_expected(),
        delta: nest3(c.delta().flat(), (n, n, n)),
        gamma: nest3(c.gamma().flat(), (n, n, n)),
        alpha: rows(c.alpha()),
    }
}
