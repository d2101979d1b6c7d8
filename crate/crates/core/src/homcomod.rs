//! Comodules over Hom-coassociative, Hom-Lie and Hom-Poisson coalgebras.
//!
//! Coactions are `(n·m)×m` matrices into `C⊗M`, with `e_i⊗f_q` at row `i·m+q`.
//! Identities land in `C⊗C⊗M`, ordered lexicographically as `(i·n+j)·m+q`.
//! Witness `(p)` is the basis vector `f_p` on which the two sides differ.

use serde::{Deserialize, Serialize};

use crate::error::{dim_mismatch, Error, Result};
use crate::exactcore::{swap_map, CoactionTensor, ComulTensor, LinearMap};
use crate::homcoalg::{self, HomPoissonCoalgebra};
use crate::hommod::beta_commutation;
use crate::report::{column_report, Axiom, AxiomReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComoduleKind {
    Coassociative,
    Lie,
    Poisson,
}

impl ComoduleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ComoduleKind::Coassociative => "coassociative",
            ComoduleKind::Lie => "lie",
            ComoduleKind::Poisson => "poisson",
        }
    }

    fn has_delta(self) -> bool {
        self != ComoduleKind::Lie
    }

    fn has_gamma(self) -> bool {
        self != ComoduleKind::Coassociative
    }
}

/// `(M, Δ_M, Γ_M, β)` over a coalgebra. The kind fixes which coactions exist:
/// coassociative carries `Δ_M` only, Lie `Γ_M` only, Poisson both.
/// A coassociative comodule ignores `γ` of its base; a Lie comodule ignores `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomComodule {
    coalgebra: HomPoissonCoalgebra,
    beta: LinearMap,
    kind: ComoduleKind,
    delta_m: Option<CoactionTensor>,
    gamma_m: Option<CoactionTensor>,
}

impl HomComodule {
    pub fn new(
        coalgebra: HomPoissonCoalgebra,
        beta: LinearMap,
        kind: ComoduleKind,
        delta_m: Option<CoactionTensor>,
        gamma_m: Option<CoactionTensor>,
    ) -> Result<Self> {
        if kind.has_delta() != delta_m.is_some() || kind.has_gamma() != gamma_m.is_some() {
            return Err(Error::Format(format!("a {} comodule needs exactly its own coactions", kind.as_str())));
        }
        let m = beta.dim_in();
        if beta.dim_out() != m {
            return Err(dim_mismatch("beta must be square"));
        }
        for t in delta_m.iter().chain(gamma_m.iter()) {
            if t.dim_c() != coalgebra.dim() || t.dim_m() != m {
                return Err(dim_mismatch(format!(
                    "coaction is into C^{}⊗M^{}, expected C^{}⊗M^{m}",
                    t.dim_c(),
                    t.dim_m(),
                    coalgebra.dim()
                )));
            }
        }
        Ok(HomComodule { coalgebra, beta, kind, delta_m, gamma_m })
    }

    pub fn coassociative(c: HomPoissonCoalgebra, beta: LinearMap, delta_m: CoactionTensor) -> Result<Self> {
        Self::new(c, beta, ComoduleKind::Coassociative, Some(delta_m), None)
    }

    pub fn lie(c: HomPoissonCoalgebra, beta: LinearMap, gamma_m: CoactionTensor) -> Result<Self> {
        Self::new(c, beta, ComoduleKind::Lie, None, Some(gamma_m))
    }

    pub fn poisson(
        c: HomPoissonCoalgebra,
        beta: LinearMap,
        delta_m: CoactionTensor,
        gamma_m: CoactionTensor,
    ) -> Result<Self> {
        Self::new(c, beta, ComoduleKind::Poisson, Some(delta_m), Some(gamma_m))
    }

    /// `M = C`, `β = α`, `Δ_M = Δ`, `Γ_M = γ`.
    pub fn regular(c: &HomPoissonCoalgebra, kind: ComoduleKind) -> Self {
        let as_coaction = |t: &ComulTensor| CoactionTensor::from_fn(c.dim(), c.dim(), |p, i, q| t.get(p, i, q).clone());
        Self::new(
            c.clone(),
            c.alpha().clone(),
            kind,
            kind.has_delta().then(|| as_coaction(c.delta())),
            kind.has_gamma().then(|| as_coaction(c.gamma())),
        )
        .expect("regular comodule is well formed")
    }

    pub fn coalgebra(&self) -> &HomPoissonCoalgebra {
        &self.coalgebra
    }

    pub fn beta(&self) -> &LinearMap {
        &self.beta
    }

    pub fn kind(&self) -> ComoduleKind {
        self.kind
    }

    pub fn dim_m(&self) -> usize {
        self.beta.dim_in()
    }

    pub fn delta_m(&self) -> Option<&CoactionTensor> {
        self.delta_m.as_ref()
    }

    pub fn gamma_m(&self) -> Option<&CoactionTensor> {
        self.gamma_m.as_ref()
    }

    /// The same coactions over another coalgebra of equal dimension.
    pub fn with_coalgebra(&self, coalgebra: HomPoissonCoalgebra) -> Result<Self> {
        Self::new(coalgebra, self.beta.clone(), self.kind, self.delta_m.clone(), self.gamma_m.clone())
    }

    fn require(&self, ok: bool, expected: &'static str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::KindMismatch { expected, found: self.kind.as_str() })
        }
    }

    fn delta_map(&self) -> LinearMap {
        self.delta_m.as_ref().expect("kind carries Δ_M").as_linear_map()
    }

    fn gamma_map(&self) -> LinearMap {
        self.gamma_m.as_ref().expect("kind carries Γ_M").as_linear_map()
    }
}

/// `Δ∘β = (α⊗β)∘Δ` for a coaction `Δ`.
fn coaction_compat(axiom: Axiom, c: &HomComodule, g: &LinearMap) -> AxiomReport {
    let lhs = g.compose(&c.beta).expect("shape");
    let rhs = c.coalgebra.alpha().tensor_product(&c.beta).compose(g).expect("shape");
    column_report(axiom, &lhs, &rhs)
}

/// `(τ⊗Id_M)∘(α⊗Γ)`, the map `x⊗m ↦ Γ(m)_{C}⊗α(x)⊗Γ(m)_{M}`.
fn flipped_alpha_gamma(c: &HomComodule, gamma_m: &LinearMap) -> LinearMap {
    let n = c.coalgebra.dim();
    swap_map(n)
        .tensor_product(&LinearMap::identity(c.dim_m()))
        .compose(&c.coalgebra.alpha().tensor_product(gamma_m))
        .expect("shape")
}

/// `Δ∘β = (α⊗β)∘Δ` and `(α⊗Δ)∘Δ = (δ⊗β)∘Δ`.
pub fn check_coassoc_comodule(c: &HomComodule) -> Result<AxiomReport> {
    c.require(c.kind.has_delta(), "coassociative or poisson")?;
    let g = c.delta_map();
    let alpha = c.coalgebra.alpha();
    let lhs = alpha.tensor_product(&g).compose(&g)?;
    let rhs = c.coalgebra.delta().as_linear_map().tensor_product(&c.beta).compose(&g)?;
    Ok(AxiomReport::aggregate(
        Axiom::CoassociativeComodule,
        vec![coaction_compat(Axiom::CoactionCompat, c, &g), column_report(Axiom::CoactionCoassoc, &lhs, &rhs)],
    ))
}

/// `Γ∘β = (α⊗β)∘Γ` and `(γ⊗β)Γ = (α⊗Γ)Γ − (τ⊗Id_M)(α⊗Γ)Γ`.
pub fn check_lie_comodule(c: &HomComodule) -> Result<AxiomReport> {
    c.require(c.kind.has_gamma(), "lie or poisson")?;
    let g = c.gamma_map();
    let lhs = c.coalgebra.gamma().as_linear_map().tensor_product(&c.beta).compose(&g)?;
    let direct = c.coalgebra.alpha().tensor_product(&g).compose(&g)?;
    let flipped = flipped_alpha_gamma(c, &g).compose(&g)?;
    let rhs = direct.sub(&flipped)?;
    Ok(AxiomReport::aggregate(
        Axiom::LieComodule,
        vec![coaction_compat(Axiom::LieCoactionCompat, c, &g), column_report(Axiom::LieCoactionJacobi, &lhs, &rhs)],
    ))
}

/// The coassociative and Lie comodule axioms plus the two compatibility
/// identities
///
/// ```text
/// (α⊗Δ)Γ = (γ⊗β)Δ + (τ⊗Id_M)(α⊗Γ)Δ
/// (δ⊗β)Γ = (α⊗Γ)Δ + (τ⊗Id_M)(α⊗Γ)Δ
/// ```
///
/// The base coalgebra itself is not checked.
pub fn check_poisson_comodule(c: &HomComodule) -> Result<AxiomReport> {
    c.require(c.kind == ComoduleKind::Poisson, "poisson")?;
    let d = c.delta_map();
    let g = c.gamma_map();
    let base = &c.coalgebra;
    let alpha = base.alpha();
    let flipped = flipped_alpha_gamma(c, &g).compose(&d)?;

    let lhs1 = alpha.tensor_product(&d).compose(&g)?;
    let rhs1 = base.gamma().as_linear_map().tensor_product(&c.beta).compose(&d)?.add(&flipped)?;

    let lhs2 = base.delta().as_linear_map().tensor_product(&c.beta).compose(&g)?;
    let rhs2 = alpha.tensor_product(&g).compose(&d)?.add(&flipped)?;

    Ok(AxiomReport::aggregate(
        Axiom::PoissonComodule,
        vec![
            check_coassoc_comodule(c)?,
            check_lie_comodule(c)?,
            column_report(Axiom::PoissonCoactionFirst, &lhs1, &rhs1),
            column_report(Axiom::PoissonCoactionSecond, &lhs2, &rhs2),
        ],
    ))
}

/// Runs the check matching the comodule's kind.
pub fn check_comodule(c: &HomComodule) -> AxiomReport {
    match c.kind {
        ComoduleKind::Coassociative => check_coassoc_comodule(c),
        ComoduleKind::Lie => check_lie_comodule(c),
        ComoduleKind::Poisson => check_poisson_comodule(c),
    }
    .expect("kind matches")
}

fn twist_by_alpha_squared(t: &CoactionTensor, alpha: &LinearMap) -> CoactionTensor {
    t.postcompose_coalgebra(&alpha.pow(2).expect("square")).expect("shape")
}

fn twisted(c: &HomComodule, delta: bool, gamma: bool) -> HomComodule {
    let alpha = c.coalgebra.alpha();
    let mut out = c.clone();
    if delta {
        out.delta_m = c.delta_m.as_ref().map(|t| twist_by_alpha_squared(t, alpha));
    }
    if gamma {
        out.gamma_m = c.gamma_m.as_ref().map(|t| twist_by_alpha_squared(t, alpha));
    }
    out
}

/// `Δ̃ = (α²⊗Id_M)∘Δ`; `Γ_M` and `β` unchanged.
pub fn twist_coassoc_comodule(c: &HomComodule) -> Result<HomComodule> {
    c.require(c.kind.has_delta(), "coassociative or poisson")?;
    Ok(twisted(c, true, false))
}

/// `Γ̃ = (α²⊗Id_M)∘Γ`; `Δ_M` and `β` unchanged.
pub fn twist_lie_comodule(c: &HomComodule) -> Result<HomComodule> {
    c.require(c.kind.has_gamma(), "lie or poisson")?;
    Ok(twisted(c, false, true))
}

/// Both coactions composed with `α²⊗Id_M`.
pub fn twist_poisson_comodule(c: &HomComodule) -> Result<HomComodule> {
    c.require(c.kind == ComoduleKind::Poisson, "poisson")?;
    Ok(twisted(c, true, true))
}

/// `(M, −Δ, −Γ, β)` over `(A, −δ, −γ, α)`.
pub fn negate_poisson_comodule(c: &HomComodule) -> Result<HomComodule> {
    c.require(c.kind == ComoduleKind::Poisson, "poisson")?;
    HomComodule::new(
        homcoalg::negate_coalgebra(&c.coalgebra),
        c.beta.clone(),
        c.kind,
        c.delta_m.as_ref().map(CoactionTensor::neg),
        c.gamma_m.as_ref().map(CoactionTensor::neg),
    )
}

/// Given a Poisson comodule `c` over `(A, δ∘α, γ∘α, α)` and the coalgebra
/// `base = (A, δ, γ, α)`, checks the α²-twisted comodule over `base`.
pub fn check_twisted_over_untwisted(c: &HomComodule, base: &HomPoissonCoalgebra) -> Result<AxiomReport> {
    c.require(c.kind == ComoduleKind::Poisson, "poisson")?;
    let alpha = base.alpha();
    let expected = HomPoissonCoalgebra::new(
        base.delta().pre_compose(alpha)?,
        base.gamma().pre_compose(alpha)?,
        alpha.clone(),
        c.coalgebra.cocommutative_expected(),
    )?;
    if c.coalgebra != expected {
        return Err(Error::CoalgebraMismatch);
    }
    let twisted = twist_poisson_comodule(c)?.with_coalgebra(base.clone())?;
    check_poisson_comodule(&twisted)
}

fn comodule_morphism(f: &LinearMap, c1: &HomComodule, c2: &HomComodule, strict: bool) -> Result<AxiomReport> {
    if c1.coalgebra != c2.coalgebra {
        return Err(Error::CoalgebraMismatch);
    }
    if c1.kind != c2.kind {
        return Err(Error::KindMismatch { expected: c1.kind.as_str(), found: c2.kind.as_str() });
    }
    if f.dim_in() != c1.dim_m() || f.dim_out() != c2.dim_m() {
        return Err(dim_mismatch(format!(
            "comodule morphism must be {}x{}, got {}x{}",
            c2.dim_m(),
            c1.dim_m(),
            f.dim_out(),
            f.dim_in()
        )));
    }
    let lift = LinearMap::identity(c1.coalgebra.dim()).tensor_product(f);
    let intertwine = |axiom, g1: LinearMap, g2: LinearMap| -> Result<AxiomReport> {
        Ok(column_report(axiom, &lift.compose(&g1)?, &g2.compose(f)?))
    };
    let mut subs = Vec::new();
    if c1.kind.has_delta() {
        subs.push(intertwine(Axiom::CoactionIntertwine, c1.delta_map(), c2.delta_map())?);
    }
    if c1.kind.has_gamma() {
        subs.push(intertwine(Axiom::LieCoactionIntertwine, c1.gamma_map(), c2.gamma_map())?);
    }
    if strict {
        subs.push(beta_commutation(f, &c1.beta, &c2.beta)?);
    }
    Ok(AxiomReport::aggregate(Axiom::ComoduleMorphism, subs))
}

/// `(Id_C⊗f)∘Δ₁ = Δ₂∘f` and `(Id_C⊗f)∘Γ₁ = Γ₂∘f`, for the coactions the kind carries.
pub fn check_comodule_morphism(f: &LinearMap, c1: &HomComodule, c2: &HomComodule) -> Result<AxiomReport> {
    comodule_morphism(f, c1, c2, false)
}

/// As [`check_comodule_morphism`], additionally requiring `f∘β = β'∘f`.
pub fn check_comodule_morphism_strict(f: &LinearMap, c1: &HomComodule, c2: &HomComodule) -> Result<AxiomReport> {
    comodule_morphism(f, c1, c2, true)
}
