//! Hom-coassociative, Hom-Lie and Hom-Poisson coalgebras.
//!
//! Every identity is checked as an equality of linear maps out of `A`, built
//! from Kronecker products, the flip `τ` and the cyclic map `σ`. Witness `(k)`
//! is the basis vector `e_k` on which the two sides differ.

use std::sync::OnceLock;

use crate::error::{dim_mismatch, Error, Result};
use crate::exactcore::{cyclic_map, swap_map, ComulTensor, LinearMap};
use crate::report::{column_report, Axiom, AxiomReport};

/// `(A, Δ, α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoassocCoalgebra {
    delta: ComulTensor,
    alpha: LinearMap,
}

/// `(A, γ, α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieCoalgebra {
    gamma: ComulTensor,
    alpha: LinearMap,
}

/// `(A, Δ, γ, α)`. The cocommutativity flag decides whether `Δ = τ∘Δ` is part
/// of the verdict.
#[derive(Clone, Debug)]
pub struct HomPoissonCoalgebra {
    delta: ComulTensor,
    gamma: ComulTensor,
    alpha: LinearMap,
    cocommutative_expected: bool,
    verdict: OnceLock<AxiomReport>,
}

impl PartialEq for HomPoissonCoalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.delta == other.delta
            && self.gamma == other.gamma
            && self.alpha == other.alpha
            && self.cocommutative_expected == other.cocommutative_expected
    }
}

impl Eq for HomPoissonCoalgebra {}

fn check_square(alpha: &LinearMap, n: usize) -> Result<()> {
    if alpha.dim_in() != n || alpha.dim_out() != n {
        return Err(dim_mismatch(format!("alpha is {}x{}, coalgebra has dim {n}", alpha.dim_out(), alpha.dim_in())));
    }
    Ok(())
}

impl HomCoassocCoalgebra {
    pub fn new(delta: ComulTensor, alpha: LinearMap) -> Result<Self> {
        check_square(&alpha, delta.dim())?;
        Ok(HomCoassocCoalgebra { delta, alpha })
    }

    pub fn dim(&self) -> usize {
        self.delta.dim()
    }

    pub fn delta(&self) -> &ComulTensor {
        &self.delta
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }
}

impl HomLieCoalgebra {
    pub fn new(gamma: ComulTensor, alpha: LinearMap) -> Result<Self> {
        check_square(&alpha, gamma.dim())?;
        Ok(HomLieCoalgebra { gamma, alpha })
    }

    pub fn dim(&self) -> usize {
        self.gamma.dim()
    }

    pub fn gamma(&self) -> &ComulTensor {
        &self.gamma
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }
}

impl HomPoissonCoalgebra {
    pub fn new(delta: ComulTensor, gamma: ComulTensor, alpha: LinearMap, cocommutative_expected: bool) -> Result<Self> {
        if delta.dim() != gamma.dim() {
            return Err(dim_mismatch(format!("delta has dim {}, gamma has dim {}", delta.dim(), gamma.dim())));
        }
        check_square(&alpha, delta.dim())?;
        Ok(HomPoissonCoalgebra { delta, gamma, alpha, cocommutative_expected, verdict: OnceLock::new() })
    }

    /// `(A, Δ, γ, Id)`.
    pub fn untwisted(delta: ComulTensor, gamma: ComulTensor, cocommutative_expected: bool) -> Result<Self> {
        let n = delta.dim();
        Self::new(delta, gamma, LinearMap::identity(n), cocommutative_expected)
    }

    pub fn dim(&self) -> usize {
        self.delta.dim()
    }

    pub fn delta(&self) -> &ComulTensor {
        &self.delta
    }

    pub fn gamma(&self) -> &ComulTensor {
        &self.gamma
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn cocommutative_expected(&self) -> bool {
        self.cocommutative_expected
    }

    pub fn with_cocommutative_expected(&self, flag: bool) -> Self {
        Self::new(self.delta.clone(), self.gamma.clone(), self.alpha.clone(), flag).expect("shape preserved")
    }

    pub fn coassociative_part(&self) -> HomCoassocCoalgebra {
        HomCoassocCoalgebra { delta: self.delta.clone(), alpha: self.alpha.clone() }
    }

    pub fn lie_part(&self) -> HomLieCoalgebra {
        HomLieCoalgebra { gamma: self.gamma.clone(), alpha: self.alpha.clone() }
    }

    /// Full Poisson coalgebra report, computed once per value.
    pub fn verdict(&self) -> &AxiomReport {
        self.verdict.get_or_init(|| check_hom_poisson_coalgebra(self))
    }
}

/// `Δ = τ∘Δ`.
pub fn check_cocommutativity(c: &HomCoassocCoalgebra) -> AxiomReport {
    let d = c.delta.as_linear_map();
    let flipped = swap_map(c.dim()).compose(&d).expect("shape");
    column_report(Axiom::Cocommutativity, &d, &flipped)
}

/// `Δ∘α = (α⊗α)∘Δ` for any comultiplication-shaped map.
fn comultiplicativity(axiom: Axiom, d: &LinearMap, alpha: &LinearMap) -> AxiomReport {
    let lhs = d.compose(alpha).expect("shape");
    let rhs = alpha.tensor_product(alpha).compose(d).expect("shape");
    column_report(axiom, &lhs, &rhs)
}

/// Comultiplicativity and `(α⊗Δ)∘Δ = (Δ⊗α)∘Δ`.
pub fn check_hom_coassociative(c: &HomCoassocCoalgebra) -> AxiomReport {
    let d = c.delta.as_linear_map();
    let lhs = c.alpha.tensor_product(&d).compose(&d).expect("shape");
    let rhs = d.tensor_product(&c.alpha).compose(&d).expect("shape");
    AxiomReport::aggregate(
        Axiom::HomCoassociativeCoalgebra,
        vec![
            comultiplicativity(Axiom::Comultiplicativity, &d, &c.alpha),
            column_report(Axiom::HomCoassociativity, &lhs, &rhs),
        ],
    )
}

/// Skew-cosymmetry, comultiplicativity of `γ` and
/// `(Id + σ + σ²)∘(α⊗γ)∘γ = 0`.
pub fn check_hom_lie_coalgebra(l: &HomLieCoalgebra) -> AxiomReport {
    let n = l.dim();
    let g = l.gamma.as_linear_map();
    let skew = column_report(Axiom::SkewCosymmetry, &g, &swap_map(n).compose(&g).expect("shape").neg());
    let sigma = cyclic_map(n);
    let sigma2 = sigma.compose(&sigma).expect("shape");
    let cyclic_sum = LinearMap::identity(n * n * n).add(&sigma).and_then(|s| s.add(&sigma2)).expect("shape");
    let inner = l.alpha.tensor_product(&g).compose(&g).expect("shape");
    let jacobi = cyclic_sum.compose(&inner).expect("shape");
    AxiomReport::aggregate(
        Axiom::HomLieCoalgebra,
        vec![
            skew,
            comultiplicativity(Axiom::CobracketComultiplicativity, &g, &l.alpha),
            column_report(Axiom::HomCoJacobi, &jacobi, &LinearMap::zero(n * n * n, n)),
        ],
    )
}

/// `(α⊗Δ)∘γ = (γ⊗α)∘Δ + (τ⊗Id)∘(α⊗γ)∘Δ`.
pub fn check_hom_coleibniz(p: &HomPoissonCoalgebra) -> AxiomReport {
    let n = p.dim();
    let d = p.delta.as_linear_map();
    let g = p.gamma.as_linear_map();
    let a = &p.alpha;
    let lhs = a.tensor_product(&d).compose(&g).expect("shape");
    let first = g.tensor_product(a).compose(&d).expect("shape");
    let second = swap_map(n)
        .tensor_product(&LinearMap::identity(n))
        .compose(&a.tensor_product(&g))
        .and_then(|m| m.compose(&d))
        .expect("shape");
    let rhs = first.add(&second).expect("shape");
    column_report(Axiom::HomCoLeibniz, &lhs, &rhs)
}

/// All Poisson coalgebra axioms, with cocommutativity only when expected.
pub fn check_hom_poisson_coalgebra(p: &HomPoissonCoalgebra) -> AxiomReport {
    let coassoc = p.coassociative_part();
    let mut subs = Vec::with_capacity(4);
    if p.cocommutative_expected {
        subs.push(check_cocommutativity(&coassoc));
    }
    subs.push(check_hom_coassociative(&coassoc));
    subs.push(check_hom_lie_coalgebra(&p.lie_part()));
    subs.push(check_hom_coleibniz(p));
    AxiomReport::aggregate(Axiom::HomPoissonCoalgebra, subs)
}

/// `(A, Δ^op, γ, α)` with `Δ^op = τ∘Δ`; marked non-cocommutative.
pub fn opposite_coalgebra(p: &HomPoissonCoalgebra) -> HomPoissonCoalgebra {
    HomPoissonCoalgebra::new(p.delta.opposite(), p.gamma.clone(), p.alpha.clone(), false).expect("shape preserved")
}

/// `(A, −Δ, −γ, α)`.
pub fn negate_coalgebra(p: &HomPoissonCoalgebra) -> HomPoissonCoalgebra {
    HomPoissonCoalgebra::new(p.delta.neg(), p.gamma.neg(), p.alpha.clone(), p.cocommutative_expected)
        .expect("shape preserved")
}

fn intertwine(axiom: Axiom, f: &LinearMap, d1: &ComulTensor, d2: &ComulTensor) -> AxiomReport {
    let lhs = f.tensor_product(f).compose(&d1.as_linear_map()).expect("shape");
    let rhs = d2.as_linear_map().compose(f).expect("shape");
    column_report(axiom, &lhs, &rhs)
}

/// `Δ∘φ = (φ⊗φ)∘Δ` and `γ∘φ = (φ⊗φ)∘γ`.
pub fn check_coendomorphism(p: &HomPoissonCoalgebra, phi: &LinearMap) -> Result<AxiomReport> {
    let n = p.dim();
    if phi.dim_in() != n || phi.dim_out() != n {
        return Err(dim_mismatch("coendomorphism must be square of the coalgebra dim"));
    }
    Ok(AxiomReport::aggregate(
        Axiom::Coendomorphism,
        vec![
            intertwine(Axiom::ComultiplicationIntertwine, phi, &p.delta, &p.delta),
            intertwine(Axiom::CobracketIntertwine, phi, &p.gamma, &p.gamma),
        ],
    ))
}

/// Yau twist `(A, Δ∘φ, γ∘φ, φ)` of an untwisted coalgebra by a coendomorphism `φ`.
pub fn yau_twist_coalgebra(p: &HomPoissonCoalgebra, phi: &LinearMap) -> Result<HomPoissonCoalgebra> {
    let endo = check_coendomorphism(p, phi)?;
    if !p.alpha.is_identity() {
        return Err(Error::AlreadyTwisted);
    }
    if !endo.holds {
        return Err(Error::NotCoendomorphism);
    }
    HomPoissonCoalgebra::new(
        p.delta.pre_compose(phi)?,
        p.gamma.pre_compose(phi)?,
        phi.clone(),
        p.cocommutative_expected,
    )
}

/// `(f⊗f)∘Δ₁ = Δ₂∘f`, `(f⊗f)∘γ₁ = γ₂∘f` and `f∘α₁ = α₂∘f`.
pub fn check_coalgebra_morphism(
    f: &LinearMap,
    p1: &HomPoissonCoalgebra,
    p2: &HomPoissonCoalgebra,
) -> Result<AxiomReport> {
    if f.dim_in() != p1.dim() || f.dim_out() != p2.dim() {
        return Err(dim_mismatch(format!(
            "coalgebra morphism must be {}x{}, got {}x{}",
            p2.dim(),
            p1.dim(),
            f.dim_out(),
            f.dim_in()
        )));
    }
    let alpha = column_report(Axiom::AlphaCommute, &f.compose(&p1.alpha)?, &p2.alpha.compose(f)?);
    Ok(AxiomReport::aggregate(
        Axiom::CoalgebraMorphism,
        vec![
            intertwine(Axiom::ComultiplicationIntertwine, f, &p1.delta, &p2.delta),
            intertwine(Axiom::CobracketIntertwine, f, &p1.gamma, &p2.gamma),
            alpha,
        ],
    ))
}
