//! Hom-alternative and Hom-associative algebras given by structure constants.
//!
//! The left and right Hom-alternative identities quantify over a repeated
//! argument. The checkers here evaluate their polarized (multilinear) forms
//!
//! ```text
//! left:  μ(α(x),μ(y,z)) − μ(μ(x,y),α(z)) + μ(α(y),μ(x,z)) − μ(μ(y,x),α(z)) = 0
//! right: μ(α(x),μ(y,z)) − μ(μ(x,y),α(z)) + μ(α(x),μ(z,y)) − μ(μ(x,z),α(y)) = 0
//! ```
//!
//! on every basis triple, which decides the original identity exactly over a
//! field of characteristic zero.

use std::sync::OnceLock;

use crate::error::{dim_mismatch, Error, Result};
use crate::exactcore::{LinearMap, MulTensor, Vector};
use crate::report::{Axiom, AxiomReport, Witnesses};

pub use crate::report::Witness;

/// A triple `(A, μ, α)`. No axiom is assumed.
#[derive(Clone, Debug)]
pub struct HomAlgebra {
    mu: MulTensor,
    alpha: LinearMap,
    alpha_multiplicative: OnceLock<bool>,
}

impl PartialEq for HomAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.mu == other.mu && self.alpha == other.alpha
    }
}

impl Eq for HomAlgebra {}

impl HomAlgebra {
    pub fn new(mu: MulTensor, alpha: LinearMap) -> Result<Self> {
        let n = mu.dim();
        if alpha.dim_in() != n || alpha.dim_out() != n {
            return Err(dim_mismatch(format!("alpha is {}x{}, algebra has dim {n}", alpha.dim_out(), alpha.dim_in())));
        }
        Ok(HomAlgebra { mu, alpha, alpha_multiplicative: OnceLock::new() })
    }

    /// `(A, μ, Id)`.
    pub fn untwisted(mu: MulTensor) -> Self {
        let n = mu.dim();
        Self::new(mu, LinearMap::identity(n)).expect("identity has the right shape")
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn mu(&self) -> &MulTensor {
        &self.mu
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        self.mu.apply(x, y)
    }

    /// Whether `α` is multiplicative for `μ`. Computed once per value.
    pub fn alpha_is_multiplicative(&self) -> bool {
        *self
            .alpha_multiplicative
            .get_or_init(|| check_endomorphism(self, &self.alpha).map(|r| r.holds).unwrap_or(false))
    }

    fn check_element(&self, v: &Vector) -> Result<()> {
        if v.dim() != self.dim() {
            return Err(dim_mismatch(format!("element of dim {} in an algebra of dim {}", v.dim(), self.dim())));
        }
        Ok(())
    }
}

/// Basis data reused by every triple scan.
struct BasisTables {
    alpha_cols: Vec<Vector>,
    products: Vec<Vec<Vector>>,
}

impl BasisTables {
    fn new(a: &HomAlgebra) -> Self {
        let n = a.dim();
        let alpha_cols = (0..n).map(|i| a.alpha.column(i)).collect();
        let products =
            (0..n).map(|i| (0..n).map(|j| Vector::new(a.mu.product_of_basis(i, j).to_vec())).collect()).collect();
        BasisTables { alpha_cols, products }
    }
}

fn scan_triples(
    a: &HomAlgebra,
    axiom: Axiom,
    residual: impl Fn(&HomAlgebra, &BasisTables, usize, usize, usize) -> Vector,
) -> AxiomReport {
    let n = a.dim();
    let tables = BasisTables::new(a);
    let mut w = Witnesses::default();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                w.record(&[i, j, k], residual(a, &tables, i, j, k));
            }
        }
    }
    w.finish(axiom)
}

fn sub(x: Vector, y: &Vector) -> Vector {
    x.sub(y).expect("same algebra dim")
}

fn add(x: Vector, y: &Vector) -> Vector {
    x.add(y).expect("same algebra dim")
}

/// Left polarized residual on basis elements `(e_i, e_j, e_k)`.
fn left_residual(a: &HomAlgebra, t: &BasisTables, i: usize, j: usize, k: usize) -> Vector {
    let mu = &a.mu;
    let az = &t.alpha_cols[k];
    let r = mu.apply_unchecked(&t.alpha_cols[i], &t.products[j][k]);
    let r = sub(r, &mu.apply_unchecked(&t.products[i][j], az));
    let r = add(r, &mu.apply_unchecked(&t.alpha_cols[j], &t.products[i][k]));
    sub(r, &mu.apply_unchecked(&t.products[j][i], az))
}

fn right_residual(a: &HomAlgebra, t: &BasisTables, i: usize, j: usize, k: usize) -> Vector {
    let mu = &a.mu;
    let ax = &t.alpha_cols[i];
    let r = mu.apply_unchecked(ax, &t.products[j][k]);
    let r = sub(r, &mu.apply_unchecked(&t.products[i][j], &t.alpha_cols[k]));
    let r = add(r, &mu.apply_unchecked(ax, &t.products[k][j]));
    sub(r, &mu.apply_unchecked(&t.products[i][k], &t.alpha_cols[j]))
}

fn assoc_residual(a: &HomAlgebra, t: &BasisTables, i: usize, j: usize, k: usize) -> Vector {
    let mu = &a.mu;
    let r = mu.apply_unchecked(&t.alpha_cols[i], &t.products[j][k]);
    sub(r, &mu.apply_unchecked(&t.products[i][j], &t.alpha_cols[k]))
}

/// Left Hom-alternativity, witnesses are basis triples `(i, j, k)`.
pub fn check_left_hom_alternative(a: &HomAlgebra) -> AxiomReport {
    scan_triples(a, Axiom::LeftHomAlternative, left_residual)
}

/// Right Hom-alternativity, witnesses are basis triples `(i, j, k)`.
pub fn check_right_hom_alternative(a: &HomAlgebra) -> AxiomReport {
    scan_triples(a, Axiom::RightHomAlternative, right_residual)
}

/// `μ(α(x),μ(y,z)) = μ(μ(x,y),α(z))` on basis triples.
pub fn check_hom_associative(a: &HomAlgebra) -> AxiomReport {
    scan_triples(a, Axiom::HomAssociative, assoc_residual)
}

/// The Hom-associator `μ(α(x),μ(y,z)) − μ(μ(x,y),α(z))`.
pub fn hom_associator(a: &HomAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Result<Vector> {
    for v in [x, y, z] {
        a.check_element(v)?;
    }
    let alpha = &a.alpha;
    let lhs = a.mu.apply_unchecked(&alpha.apply(x)?, &a.mu.apply_unchecked(y, z));
    let rhs = a.mu.apply_unchecked(&a.mu.apply_unchecked(x, y), &alpha.apply(z)?);
    lhs.sub(&rhs)
}

/// `φ(μ(e_i, e_j)) = μ(φ(e_i), φ(e_j))` on basis pairs.
pub fn check_endomorphism(a: &HomAlgebra, phi: &LinearMap) -> Result<AxiomReport> {
    let n = a.dim();
    if phi.dim_in() != n || phi.dim_out() != n {
        return Err(dim_mismatch("endomorphism must be square of the algebra dim"));
    }
    let cols: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();
    let mut w = Witnesses::default();
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.apply_unchecked(a.mu.product_of_basis(i, j));
            let rhs = a.mu.apply_unchecked(&cols[i], &cols[j]);
            w.record(&[i, j], sub(lhs, &rhs));
        }
    }
    Ok(w.finish(Axiom::Endomorphism))
}

/// `(A, −μ, α)`.
pub fn negate(a: &HomAlgebra) -> HomAlgebra {
    HomAlgebra::new(a.mu.neg(), a.alpha.clone()).expect("shape preserved")
}

/// `(A, μ^op, α)` with `μ^op(x, y) = μ(y, x)`.
pub fn opposite(a: &HomAlgebra) -> HomAlgebra {
    HomAlgebra::new(a.mu.opposite(), a.alpha.clone()).expect("shape preserved")
}

/// Yau twist `(A, φ∘μ, φ)` of an untwisted algebra by an algebra endomorphism `φ`.
pub fn yau_twist(a: &HomAlgebra, phi: &LinearMap) -> Result<HomAlgebra> {
    let endo = check_endomorphism(a, phi)?;
    if !a.alpha.is_identity() {
        return Err(Error::AlreadyTwisted);
    }
    if !endo.holds {
        return Err(Error::NotEndomorphism);
    }
    HomAlgebra::new(a.mu.post_compose(phi)?, phi.clone())
}

/// Morphism of Hom-algebras: `μ'∘(f⊗f) = f∘μ` and `f∘α = α'∘f`.
///
/// Product witnesses are basis pairs `(i, j)`, twist witnesses basis indices `(i)`.
pub fn check_morphism(f: &LinearMap, a: &HomAlgebra, b: &HomAlgebra) -> Result<AxiomReport> {
    let (n, m) = (a.dim(), b.dim());
    if f.dim_in() != n || f.dim_out() != m {
        return Err(dim_mismatch(format!("morphism must be {m}x{n}, got {}x{}", f.dim_out(), f.dim_in())));
    }
    let cols: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    let mut product = Witnesses::default();
    for i in 0..n {
        for j in 0..n {
            let lhs = b.mu.apply_unchecked(&cols[i], &cols[j]);
            let rhs = f.apply_unchecked(a.mu.product_of_basis(i, j));
            product.record(&[i, j], sub(lhs, &rhs));
        }
    }
    let mut twist = Witnesses::default();
    let lhs = f.compose(&a.alpha)?;
    let rhs = b.alpha.compose(f)?;
    for i in 0..n {
        twist.record(&[i], sub(lhs.column(i), &rhs.column(i)));
    }
    Ok(AxiomReport::aggregate(
        Axiom::Morphism,
        vec![product.finish(Axiom::MorphismProduct), twist.finish(Axiom::MorphismTwist)],
    ))
}

/// For anticommuting `x, y` (checked first), whether both
/// `μ(α(x),μ(y,z)) = −μ(α(y),μ(x,z))` and `μ(μ(z,x),α(y)) = −μ(μ(z,y),α(x))` hold.
pub fn check_anticommute_identity(a: &HomAlgebra, x: &Vector, y: &Vector, z: &Vector) -> Result<bool> {
    for v in [x, y, z] {
        a.check_element(v)?;
    }
    let mu = &a.mu;
    if !mu.apply_unchecked(x, y).add(&mu.apply_unchecked(y, x))?.is_zero() {
        return Err(Error::NotAnticommuting);
    }
    let ax = a.alpha.apply(x)?;
    let ay = a.alpha.apply(y)?;
    let first =
        mu.apply_unchecked(&ax, &mu.apply_unchecked(y, z)).add(&mu.apply_unchecked(&ay, &mu.apply_unchecked(x, z)))?;
    let second =
        mu.apply_unchecked(&mu.apply_unchecked(z, x), &ay).add(&mu.apply_unchecked(&mu.apply_unchecked(z, y), &ax))?;
    Ok(first.is_zero() && second.is_zero())
}
