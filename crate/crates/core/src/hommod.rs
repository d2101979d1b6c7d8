//! Modules over left and right Hom-alternative algebras.
//!
//! A left module is checked through the polarized identity
//!
//! ```text
//! μ_M(α(x),μ_M(y,m)) − μ_M(μ(x,y),β(m)) + μ_M(α(y),μ_M(x,m)) − μ_M(μ(y,x),β(m)) = 0
//! ```
//!
//! on basis triples `(e_i, e_j, f_p)`; right modules use the mirrored form.

use crate::error::{dim_mismatch, Error, Result};
use crate::exactcore::{ActionTensor, LinearMap, Side, Vector};
use crate::homalg::{self, HomAlgebra};
use crate::report::{Axiom, AxiomReport, Witnesses};

/// `(M, μ_M, β)` over a Hom-algebra `(A, μ, α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomModule {
    algebra: HomAlgebra,
    beta: LinearMap,
    action: ActionTensor,
}

/// Whether a construction is backed by a theorem or only by the mirrored
/// remark that follows it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Theorem,
    Remark,
}

impl HomModule {
    pub fn new(algebra: HomAlgebra, beta: LinearMap, action: ActionTensor) -> Result<Self> {
        if action.dim_a() != algebra.dim() {
            return Err(dim_mismatch(format!(
                "action expects an algebra of dim {}, got {}",
                action.dim_a(),
                algebra.dim()
            )));
        }
        let m = action.dim_m();
        if beta.dim_in() != m || beta.dim_out() != m {
            return Err(dim_mismatch(format!("beta must be {m}x{m}, got {}x{}", beta.dim_out(), beta.dim_in())));
        }
        Ok(HomModule { algebra, beta, action })
    }

    /// The algebra acting on itself: `M = A`, `β = α`, `μ_M = μ`.
    pub fn regular(algebra: &HomAlgebra, side: Side) -> Self {
        let mu = algebra.mu();
        let action = ActionTensor::from_fn(algebra.dim(), algebra.dim(), side, |i, p, q| match side {
            Side::Left => mu.get(i, p, q).clone(),
            Side::Right => mu.get(p, i, q).clone(),
        });
        HomModule { algebra: algebra.clone(), beta: algebra.alpha().clone(), action }
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn beta(&self) -> &LinearMap {
        &self.beta
    }

    pub fn action(&self) -> &ActionTensor {
        &self.action
    }

    pub fn side(&self) -> Side {
        self.action.side()
    }

    pub fn dim_m(&self) -> usize {
        self.action.dim_m()
    }

    /// The action of `x ∈ A` on `m ∈ M` from the module's side.
    pub fn act(&self, x: &Vector, m: &Vector) -> Result<Vector> {
        self.action.act(x, m)
    }

    fn require(&self, side: Side) -> Result<()> {
        if self.side() != side {
            return Err(Error::WrongSide { expected: side.as_str() });
        }
        Ok(())
    }
}

struct Tables {
    alpha_cols: Vec<Vector>,
    products: Vec<Vec<Vector>>,
    beta_cols: Vec<Vector>,
    /// `acts[i][p]` is the action of `e_i` on `f_p`.
    acts: Vec<Vec<Vector>>,
}

impl Tables {
    fn new(m: &HomModule) -> Self {
        let (n, dm) = (m.algebra.dim(), m.dim_m());
        let mu = m.algebra.mu();
        Tables {
            alpha_cols: (0..n).map(|i| m.algebra.alpha().column(i)).collect(),
            products: (0..n)
                .map(|i| (0..n).map(|j| Vector::new(mu.product_of_basis(i, j).to_vec())).collect())
                .collect(),
            beta_cols: (0..dm).map(|p| m.beta.column(p)).collect(),
            acts: (0..n)
                .map(|i| (0..dm).map(|p| (0..dm).map(|q| m.action.get(i, p, q).clone()).collect()).collect())
                .collect(),
        }
    }
}

fn scan(m: &HomModule, axiom: Axiom, residual: impl Fn(&Tables, usize, usize, usize) -> Vector) -> AxiomReport {
    let t = Tables::new(m);
    let (n, dm) = (m.algebra.dim(), m.dim_m());
    let mut w = Witnesses::default();
    for i in 0..n {
        for j in 0..n {
            for p in 0..dm {
                w.record(&[i, j, p], residual(&t, i, j, p));
            }
        }
    }
    w.finish(axiom)
}

fn combine(terms: [(i64, Vector); 4]) -> Vector {
    let dim = terms[0].1.dim();
    terms.into_iter().fold(Vector::zeros(dim), |acc, (sign, v)| {
        if sign > 0 {
            acc.add(&v).expect("module dim")
        } else {
            acc.sub(&v).expect("module dim")
        }
    })
}

/// Left module identity on basis triples `(e_i, e_j, f_p)`; witnesses are `(i, j, p)`.
pub fn check_left_module(module: &HomModule) -> Result<AxiomReport> {
    module.require(Side::Left)?;
    let act = |x: &Vector, m: &Vector| module.action.act_unchecked(x, m);
    Ok(scan(module, Axiom::LeftModule, |t, i, j, p| {
        let bm = &t.beta_cols[p];
        combine([
            (1, act(&t.alpha_cols[i], &t.acts[j][p])),
            (-1, act(&t.products[i][j], bm)),
            (1, act(&t.alpha_cols[j], &t.acts[i][p])),
            (-1, act(&t.products[j][i], bm)),
        ])
    }))
}

/// Right module identity, polarized from
/// `μ_M(μ_M(m,x),α(x)) = μ_M(β(m),μ(x,x))`; witnesses are `(i, j, p)`.
pub fn check_right_module(module: &HomModule) -> Result<AxiomReport> {
    module.require(Side::Right)?;
    // act(x, m) is μ_M(m, x) for a right module
    let act = |x: &Vector, m: &Vector| module.action.act_unchecked(x, m);
    Ok(scan(module, Axiom::RightModule, |t, i, j, p| {
        let bm = &t.beta_cols[p];
        combine([
            (1, act(&t.alpha_cols[j], &t.acts[i][p])),
            (1, act(&t.alpha_cols[i], &t.acts[j][p])),
            (-1, act(&t.products[i][j], bm)),
            (-1, act(&t.products[j][i], bm)),
        ])
    }))
}

/// Runs the check matching the module's side.
pub fn check_module(module: &HomModule) -> AxiomReport {
    match module.side() {
        Side::Left => check_left_module(module),
        Side::Right => check_right_module(module),
    }
    .expect("side matches")
}

/// `as(α,β)(x,y,m) = μ_M(α(x),μ_M(y,m)) − μ_M(μ(y,x),β(m))`, with the operand
/// order of the second term taken literally.
pub fn module_hom_associator(module: &HomModule, x: &Vector, y: &Vector, m: &Vector) -> Result<Vector> {
    module.require(Side::Left)?;
    let a = &module.algebra;
    let ax = a.alpha().apply(x)?;
    let ym = module.act(y, m)?;
    let yx = a.mul(y, x)?;
    let bm = module.beta.apply(m)?;
    module.act(&ax, &ym)?.sub(&module.act(&yx, &bm)?)
}

/// `μ̃_M = μ_M ∘ (α² ⊗ Id_M)` (left) or `μ_M ∘ (Id_M ⊗ α²)` (right); `β` unchanged.
pub fn twist_module(module: &HomModule) -> Result<HomModule> {
    let alpha_sq = module.algebra.alpha().pow(2)?;
    let action = module.action.precompose_algebra(&alpha_sq)?;
    HomModule::new(module.algebra.clone(), module.beta.clone(), action)
}

/// Left twists follow the module twist theorem; right twists follow the
/// mirrored remark.
pub fn twist_provenance(side: Side) -> Provenance {
    match side {
        Side::Left => Provenance::Theorem,
        Side::Right => Provenance::Remark,
    }
}

fn module_morphism(f: &LinearMap, m1: &HomModule, m2: &HomModule, strict: bool) -> Result<AxiomReport> {
    if m1.algebra != m2.algebra {
        return Err(Error::AlgebraMismatch);
    }
    if m1.side() != m2.side() {
        return Err(Error::WrongSide { expected: m1.side().as_str() });
    }
    if f.dim_in() != m1.dim_m() || f.dim_out() != m2.dim_m() {
        return Err(dim_mismatch(format!(
            "module morphism must be {}x{}, got {}x{}",
            m2.dim_m(),
            m1.dim_m(),
            f.dim_out(),
            f.dim_in()
        )));
    }
    let n = m1.algebra.dim();
    let mut intertwine = Witnesses::default();
    for i in 0..n {
        let e = Vector::basis(n, i);
        for p in 0..m1.dim_m() {
            let fp = Vector::basis(m1.dim_m(), p);
            let lhs = f.apply_unchecked(m1.action.act_unchecked(&e, &fp).entries());
            let rhs = m2.action.act_unchecked(&e, &f.column(p));
            intertwine.record(&[i, p], lhs.sub(&rhs)?);
        }
    }
    let mut subs = vec![intertwine.finish(Axiom::ModuleIntertwine)];
    if strict {
        subs.push(beta_commutation(f, &m1.beta, &m2.beta)?);
    }
    Ok(AxiomReport::aggregate(Axiom::ModuleMorphism, subs))
}

pub(crate) fn beta_commutation(f: &LinearMap, beta1: &LinearMap, beta2: &LinearMap) -> Result<AxiomReport> {
    let lhs = f.compose(beta1)?;
    let rhs = beta2.compose(f)?;
    let mut w = Witnesses::default();
    for p in 0..f.dim_in() {
        w.record(&[p], lhs.column(p).sub(&rhs.column(p))?);
    }
    Ok(w.finish(Axiom::BetaCommute))
}

/// `f(μ_M(x, m)) = μ_{M'}(x, f(m))` on basis pairs `(e_i, f_p)`.
pub fn check_module_morphism(f: &LinearMap, m1: &HomModule, m2: &HomModule) -> Result<AxiomReport> {
    module_morphism(f, m1, m2, false)
}

/// As [`check_module_morphism`], additionally requiring `f∘β = β'∘f`.
pub fn check_module_morphism_strict(f: &LinearMap, m1: &HomModule, m2: &HomModule) -> Result<AxiomReport> {
    module_morphism(f, m1, m2, true)
}

/// `(M, −μ_M, β)` over `(A, −μ, α)`.
pub fn negate_module(module: &HomModule) -> Result<HomModule> {
    module.require(Side::Left)?;
    HomModule::new(homalg::negate(&module.algebra), module.beta.clone(), module.action.neg())
}

/// `(M, μ_M^op, β)`, a right module over `(A, μ^op, α)`.
pub fn opposite_module(module: &HomModule) -> Result<HomModule> {
    module.require(Side::Left)?;
    HomModule::new(homalg::opposite(&module.algebra), module.beta.clone(), module.action.opposite())
}
