//! Built-in structures with known verdicts, and a seeded random generator.
//!
//! Octonion convention: Cayley–Dickson doubling of the quaternions with
//! `(a,b)(c,d) = (ac − d̄b, da + bc̄)` and `e_{4+k} = (0, q_k)`. This gives
//! `e_1e_2 = e_3`, `e_1e_4 = e_5`, `e_2e_4 = e_6`, `e_3e_4 = e_7` and
//! `e_i² = −e_0` for `i ≥ 1`.
//!
//! Random generator: the 64-bit LCG `s ← s·6364136223846793005 + 1442695040888963407`
//! (wrapping), output `s >> 33`; each entry is `(output mod 5) − 2`.

use std::collections::BTreeMap;

use crate::error::{dim_mismatch, Error, Result};
use crate::exactcore::{ActionTensor, CoactionTensor, ComulTensor, LinearMap, MulTensor, Rational, Side};
use crate::homalg::{yau_twist, HomAlgebra};
use crate::homcoalg::{yau_twist_coalgebra, HomPoissonCoalgebra};
use crate::homcomod::{ComoduleKind, HomComodule};
use crate::hommod::HomModule;
use crate::report::Axiom;
use crate::structure::Structure;

/// `(A, 0, Id)` of dimension `n`.
pub fn zero_algebra(n: usize) -> HomAlgebra {
    HomAlgebra::untwisted(MulTensor::zero(n))
}

/// `K[x]/(x²)` with basis `1, x`, and the endomorphism `diag(1, λ)`.
pub fn dual_numbers(lambda: Rational) -> (HomAlgebra, LinearMap) {
    let mu = MulTensor::zero(2).with(0, 0, 0, 1).with(0, 1, 1, 1).with(1, 0, 1, 1);
    (HomAlgebra::untwisted(mu), LinearMap::diagonal(&[Rational::one(), lambda]))
}

/// Dual numbers with `1·x = 1 + x`; neither left nor right alternative.
pub fn broken_dual_numbers() -> HomAlgebra {
    let mu = dual_numbers(Rational::one()).0.mu().clone().with(0, 1, 0, 1);
    HomAlgebra::untwisted(mu)
}

/// Dual numbers with `x·x = 1`, that is `K[x]/(x² − 1)`; associative.
pub fn square_one_numbers() -> HomAlgebra {
    let mu = dual_numbers(Rational::one()).0.mu().clone().with(1, 1, 0, 1);
    HomAlgebra::untwisted(mu)
}

/// `k×k` matrices over the units `E_{ij}` at index `i·k+j`, with `α = Id`.
pub fn matrix_algebra(k: usize) -> Result<HomAlgebra> {
    if !(1..=3).contains(&k) {
        return Err(Error::MatrixSizeOutOfRange(k));
    }
    let mu = MulTensor::from_fn(k * k, |a, b, c| {
        let (i, j) = (a / k, a % k);
        let (l, m) = (b / k, b % k);
        if j == l && c == i * k + m {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    Ok(HomAlgebra::untwisted(mu))
}

/// Conjugation `X ↦ D X D⁻¹` by `D = diag(d)`, acting on matrix units as
/// `E_{ij} ↦ (d_i/d_j) E_{ij}`. Entries of `d` must be nonzero.
pub fn matrix_conjugation(d: &[Rational]) -> LinearMap {
    let k = d.len();
    let diag: Vec<Rational> = (0..k * k).map(|a| &d[a / k] / &d[a % k]).collect();
    LinearMap::diagonal(&diag)
}

fn quaternion_mul(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    // basis 1, i, j, k with ij = k
    const TABLE: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let mut out = vec![Rational::zero(); 4];
    for (a, xa) in x.iter().enumerate() {
        for (b, yb) in y.iter().enumerate() {
            let (sign, c) = TABLE[a][b];
            out[c] += &(xa * yb * Rational::from_integer(sign));
        }
    }
    out
}

fn quaternion_conj(x: &[Rational]) -> Vec<Rational> {
    x.iter().enumerate().map(|(i, v)| if i == 0 { v.clone() } else { -v }).collect()
}

fn octonion_mul(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let (a, b) = x.split_at(4);
    let (c, d) = y.split_at(4);
    let sub = |p: Vec<Rational>, q: Vec<Rational>| p.into_iter().zip(q).map(|(u, v)| u - v).collect::<Vec<_>>();
    let add = |p: Vec<Rational>, q: Vec<Rational>| p.into_iter().zip(q).map(|(u, v)| u + v).collect::<Vec<_>>();
    let mut out = sub(quaternion_mul(a, c), quaternion_mul(&quaternion_conj(d), b));
    out.extend(add(quaternion_mul(d, a), quaternion_mul(b, &quaternion_conj(c))));
    out
}

/// The real octonions, `α = Id`.
pub fn octonions() -> HomAlgebra {
    let basis = |i: usize| -> Vec<Rational> {
        (0..8).map(|k| if k == i { Rational::one() } else { Rational::zero() }).collect()
    };
    let table: Vec<Vec<Vec<Rational>>> =
        (0..8).map(|i| (0..8).map(|j| octonion_mul(&basis(i), &basis(j))).collect()).collect();
    HomAlgebra::untwisted(MulTensor::from_fn(8, |i, j, k| table[i][j][k].clone()))
}

/// Dimension 1, `Δ(e_0) = e_0⊗e_0`, `γ = 0`, `α = Id`.
pub fn group_like_coalgebra() -> HomPoissonCoalgebra {
    HomPoissonCoalgebra::untwisted(ComulTensor::zero(1).with(0, 0, 0, 1), ComulTensor::zero(1), true).expect("dim 1")
}

/// `Δ(e_0) = e_0⊗e_0`, `Δ(e_1) = e_0⊗e_1 + e_1⊗e_0`, `γ = 0`, with the
/// coendomorphism `diag(1, λ)`.
pub fn primitive_coalgebra(lambda: Rational) -> (HomPoissonCoalgebra, LinearMap) {
    let d = ComulTensor::zero(2).with(0, 0, 0, 1).with(1, 0, 1, 1).with(1, 1, 0, 1);
    (
        HomPoissonCoalgebra::untwisted(d, ComulTensor::zero(2), true).expect("dim 2"),
        LinearMap::diagonal(&[Rational::one(), lambda]),
    )
}

/// `Δ(e_0) = e_0⊗e_0`, `Δ(e_1) = e_0⊗e_1`, `γ(e_0) = e_0⊗e_0`; fails co-Leibniz.
pub fn coleibniz_non_example() -> HomPoissonCoalgebra {
    let d = ComulTensor::zero(2).with(0, 0, 0, 1).with(1, 0, 1, 1);
    let g = ComulTensor::zero(2).with(0, 0, 0, 1);
    HomPoissonCoalgebra::untwisted(d, g, false).expect("dim 2")
}

/// `Δ(e_0) = e_0⊗e_0`, `Δ(e_1) = e_0⊗e_1`, `γ = 0`; coassociative, not cocommutative.
pub fn noncocommutative_coalgebra() -> HomPoissonCoalgebra {
    let d = ComulTensor::zero(2).with(0, 0, 0, 1).with(1, 0, 1, 1);
    HomPoissonCoalgebra::untwisted(d, ComulTensor::zero(2), false).expect("dim 2")
}

/// `Δ = 0`, `γ(e_0) = e_0⊗e_1 − e_1⊗e_0`, `γ(e_1) = 0`, with the
/// coendomorphism `diag(a, 1)`.
pub fn lie_coalgebra(a: Rational) -> (HomPoissonCoalgebra, LinearMap) {
    let g = ComulTensor::zero(2).with(0, 0, 1, 1).with(0, 1, 0, -1);
    (
        HomPoissonCoalgebra::untwisted(ComulTensor::zero(2), g, true).expect("dim 2"),
        LinearMap::diagonal(&[a, Rational::one()]),
    )
}

/// Dual of the Poisson algebra `span{1, x, y, xy}` with `x² = y² = 0` and
/// `{x, y} = xy`, in the dual basis `f_0..f_3`; with the coendomorphism
/// `diag(1, a, b, ab)` dual to `x ↦ ax, y ↦ by`.
pub fn poisson_dual_coalgebra(a: Rational, b: Rational) -> (HomPoissonCoalgebra, LinearMap) {
    let mut d = ComulTensor::zero(4);
    for k in 0..4 {
        d = d.with(k, 0, k, 1).with(k, k, 0, 1);
    }
    d = d.with(0, 0, 0, 1).with(3, 1, 2, 1).with(3, 2, 1, 1);
    let g = ComulTensor::zero(4).with(3, 1, 2, 1).with(3, 2, 1, -1);
    let ab = &a * &b;
    (HomPoissonCoalgebra::untwisted(d, g, true).expect("dim 4"), LinearMap::diagonal(&[Rational::one(), a, b, ab]))
}

/// One catalogue structure. Modules and comodules name their base entry.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub structure: Structure,
    pub base: Option<&'static str>,
    pub expected_verdicts: BTreeMap<Axiom, bool>,
}

fn verdicts(pass: &[Axiom], fail: &[Axiom]) -> BTreeMap<Axiom, bool> {
    pass.iter().map(|a| (*a, true)).chain(fail.iter().map(|a| (*a, false))).collect()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Every catalogue entry, in a fixed order.
pub fn entries() -> Vec<CatalogEntry> {
    use Axiom::*;
    let alg_all = [LeftHomAlternative, RightHomAlternative, HomAssociative];
    let alt_only = verdicts(&[LeftHomAlternative, RightHomAlternative], &[HomAssociative]);
    let poisson_all = [
        HomPoissonCoalgebra,
        Cocommutativity,
        HomCoassociativeCoalgebra,
        Comultiplicativity,
        HomCoassociativity,
        HomLieCoalgebra,
        SkewCosymmetry,
        CobracketComultiplicativity,
        HomCoJacobi,
        HomCoLeibniz,
    ];
    let noncocomm_all = &poisson_all[..];
    let noncocomm_all: Vec<Axiom> = noncocomm_all.iter().copied().filter(|a| *a != Cocommutativity).collect();
    let poisson_comodule_all = [
        PoissonComodule,
        CoassociativeComodule,
        CoactionCompat,
        CoactionCoassoc,
        LieComodule,
        LieCoactionCompat,
        LieCoactionJacobi,
        PoissonCoactionFirst,
        PoissonCoactionSecond,
    ];

    let (dual, endo2) = dual_numbers(int(2));
    let dual_twist_2 = yau_twist(&dual, &endo2).expect("endomorphism");
    let (_, endo0) = dual_numbers(int(0));
    let dual_twist_0 = yau_twist(&dual, &endo0).expect("endomorphism");
    let matrix_2 = matrix_algebra(2).expect("k = 2");
    let conj = matrix_conjugation(&[int(1), int(2)]);
    let matrix_2_conj = yau_twist(&matrix_2, &conj).expect("automorphism");
    let oct = octonions();

    let (primitive, endo3) = primitive_coalgebra(int(3));
    let primitive_twist_3 = yau_twist_coalgebra(&primitive, &endo3).expect("coendomorphism");
    let (lie_2, lie_endo) = lie_coalgebra(int(2));
    let lie_2_twist = yau_twist_coalgebra(&lie_2, &lie_endo).expect("coendomorphism");
    let (poisson_dual, dual_endo) = poisson_dual_coalgebra(int(2), int(3));
    let poisson_dual_twist = yau_twist_coalgebra(&poisson_dual, &dual_endo).expect("coendomorphism");
    let noncocomm = noncocommutative_coalgebra();

    let alg = |name, a: HomAlgebra, v: BTreeMap<Axiom, bool>| CatalogEntry {
        name,
        structure: Structure::Algebra(a),
        base: None,
        expected_verdicts: v,
    };
    let map = |name, f: LinearMap| CatalogEntry {
        name,
        structure: Structure::Map(f),
        base: None,
        expected_verdicts: BTreeMap::new(),
    };
    let module = |name, base, a: &HomAlgebra, side, axiom| CatalogEntry {
        name,
        structure: Structure::Module(HomModule::regular(a, side)),
        base: Some(base),
        expected_verdicts: verdicts(&[axiom], &[]),
    };
    let coalg = |name, c: crate::homcoalg::HomPoissonCoalgebra, v| CatalogEntry {
        name,
        structure: Structure::Coalgebra(c),
        base: None,
        expected_verdicts: v,
    };
    let comodule = |name, base, c: &crate::homcoalg::HomPoissonCoalgebra, kind, v| CatalogEntry {
        name,
        structure: Structure::Comodule(HomComodule::regular(c, kind)),
        base: Some(base),
        expected_verdicts: v,
    };

    vec![
        alg("zero_algebra", zero_algebra(2), verdicts(&alg_all, &[])),
        alg("field", matrix_algebra(1).expect("k = 1"), verdicts(&alg_all, &[])),
        alg("dual_numbers", dual, verdicts(&alg_all, &[])),
        map("dual_numbers_endo_2", endo2),
        map("dual_numbers_endo_bad", LinearMap::diagonal_ints(&[2, 1])),
        alg("dual_numbers_twist_2", dual_twist_2.clone(), verdicts(&alg_all, &[])),
        alg("dual_numbers_twist_0", dual_twist_0, verdicts(&alg_all, &[])),
        alg("dual_numbers_broken", broken_dual_numbers(), verdicts(&[], &alg_all)),
        alg("dual_numbers_square_one", square_one_numbers(), verdicts(&alg_all, &[])),
        alg("matrix_2", matrix_2.clone(), verdicts(&alg_all, &[])),
        alg("matrix_3", matrix_algebra(3).expect("k = 3"), verdicts(&alg_all, &[])),
        map("matrix_2_conj_map", conj),
        alg("matrix_2_conj", matrix_2_conj.clone(), verdicts(&alg_all, &[])),
        alg("octonions", oct.clone(), alt_only),
        module("dual_numbers_twist_2_regular", "dual_numbers_twist_2", &dual_twist_2, Side::Left, LeftModule),
        module("matrix_2_regular_right", "matrix_2", &matrix_2, Side::Right, RightModule),
        module("matrix_2_conj_regular", "matrix_2_conj", &matrix_2_conj, Side::Left, LeftModule),
        module("octonions_regular_left", "octonions", &oct, Side::Left, LeftModule),
        module("octonions_regular_right", "octonions", &oct, Side::Right, RightModule),
        coalg("group_like", group_like_coalgebra(), verdicts(&poisson_all, &[])),
        coalg("primitive", primitive, verdicts(&poisson_all, &[])),
        map("primitive_endo_3", endo3),
        coalg("primitive_twist_3", primitive_twist_3.clone(), verdicts(&poisson_all, &[])),
        coalg(
            "coleibniz_non_example",
            coleibniz_non_example(),
            verdicts(
                &[HomCoassociativeCoalgebra, Comultiplicativity, HomCoassociativity, CobracketComultiplicativity],
                &[HomPoissonCoalgebra, HomLieCoalgebra, SkewCosymmetry, HomCoJacobi, HomCoLeibniz],
            ),
        ),
        coalg("noncocommutative", noncocomm.clone(), verdicts(&noncocomm_all, &[])),
        coalg("lie_2", lie_2, verdicts(&poisson_all, &[])),
        map("lie_2_endo", lie_endo),
        coalg("lie_2_twist", lie_2_twist.clone(), verdicts(&poisson_all, &[])),
        coalg("poisson_dual", poisson_dual, verdicts(&poisson_all, &[])),
        map("poisson_dual_endo", dual_endo),
        coalg("poisson_dual_twist", poisson_dual_twist.clone(), verdicts(&poisson_all, &[])),
        comodule(
            "group_like_regular",
            "group_like",
            &group_like_coalgebra(),
            ComoduleKind::Poisson,
            verdicts(&poisson_comodule_all, &[]),
        ),
        comodule(
            "primitive_twist_3_regular",
            "primitive_twist_3",
            &primitive_twist_3,
            ComoduleKind::Poisson,
            verdicts(&poisson_comodule_all, &[]),
        ),
        comodule(
            "noncocommutative_regular",
            "noncocommutative",
            &noncocomm,
            ComoduleKind::Coassociative,
            verdicts(&[CoassociativeComodule, CoactionCompat, CoactionCoassoc], &[]),
        ),
        comodule(
            "lie_2_twist_regular",
            "lie_2_twist",
            &lie_2_twist,
            ComoduleKind::Lie,
            verdicts(&[LieComodule, LieCoactionCompat, LieCoactionJacobi], &[]),
        ),
        comodule(
            "poisson_dual_twist_regular",
            "poisson_dual_twist",
            &poisson_dual_twist,
            ComoduleKind::Poisson,
            verdicts(&poisson_comodule_all, &[]),
        ),
    ]
}

/// Looks up an entry by name.
pub fn entry(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}

/// The documented 64-bit linear congruential generator.
#[derive(Clone, Debug)]
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn next_u32(&mut self) -> u32 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 33) as u32
    }

    /// Uniform-ish integer in `{−2, …, 2}`.
    pub fn small(&mut self) -> i64 {
        (self.next_u32() % 5) as i64 - 2
    }

    pub fn small_rational(&mut self) -> Rational {
        Rational::from_integer(self.small())
    }

    fn rationals(&mut self, len: usize) -> Vec<Rational> {
        (0..len).map(|_| self.small_rational()).collect()
    }

    fn map(&mut self, n: usize) -> LinearMap {
        LinearMap::from_rows(n, n, (0..n).map(|_| self.rationals(n)).collect()).expect("square")
    }
}

/// What [`random_structure`] produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomKind {
    /// Random `μ` and `α`.
    Algebra,
    /// Random `μ`, `α = Id`.
    UntwistedAlgebra,
    /// Random `Δ`, `γ`, `α`, cocommutativity expected.
    Coalgebra,
    /// Random algebra and left action on a module of the same dim.
    LeftModule,
    RightModule,
    /// Random coalgebra and both coactions on a comodule of the same dim.
    PoissonComodule,
}

/// Deterministic structure with entries in `{−2, …, 2}`. Entries are drawn in
/// storage order: structure constants first, then `α`, then `β`, then actions.
pub fn random_structure(seed: u64, dim: usize, kind: RandomKind) -> Result<Structure> {
    if dim > 4 {
        return Err(dim_mismatch(format!("random structures have dim <= 4, got {dim}")));
    }
    let n = dim;
    let mut rng = Lcg::new(seed);
    let algebra = |rng: &mut Lcg, twisted: bool| {
        let mu = MulTensor::from_flat(n, rng.rationals(n * n * n)).expect("shape");
        let alpha = if twisted { rng.map(n) } else { LinearMap::identity(n) };
        HomAlgebra::new(mu, alpha).expect("shape")
    };
    let coalgebra = |rng: &mut Lcg| {
        let d = ComulTensor::from_flat(n, rng.rationals(n * n * n)).expect("shape");
        let g = ComulTensor::from_flat(n, rng.rationals(n * n * n)).expect("shape");
        HomPoissonCoalgebra::new(d, g, rng.map(n), true).expect("shape")
    };
    Ok(match kind {
        RandomKind::Algebra => Structure::Algebra(algebra(&mut rng, true)),
        RandomKind::UntwistedAlgebra => Structure::Algebra(algebra(&mut rng, false)),
        RandomKind::Coalgebra => Structure::Coalgebra(coalgebra(&mut rng)),
        RandomKind::LeftModule | RandomKind::RightModule => {
            let side = if kind == RandomKind::LeftModule { Side::Left } else { Side::Right };
            let a = algebra(&mut rng, true);
            let beta = rng.map(n);
            let action = ActionTensor::from_flat(n, n, side, rng.rationals(n * n * n)).expect("shape");
            Structure::Module(HomModule::new(a, beta, action).expect("shape"))
        }
        RandomKind::PoissonComodule => {
            let c = coalgebra(&mut rng);
            let beta = rng.map(n);
            let d = CoactionTensor::from_flat(n, n, rng.rationals(n * n * n)).expect("shape");
            let g = CoactionTensor::from_flat(n, n, rng.rationals(n * n * n)).expect("shape");
            Structure::Comodule(HomComodule::poisson(c, beta, d, g).expect("shape"))
        }
    })
}
