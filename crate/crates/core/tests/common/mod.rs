//! Brute-force oracle: every identity evaluated by explicit index loops over
//! the raw structure constants, sharing no code with the checkers beyond the
//! tensor accessors.

#![allow(dead_code, clippy::needless_range_loop)]

use homalt::catalog::Lcg;
use homalt::homalg::HomAlgebra;
use homalt::homcoalg::HomPoissonCoalgebra;
use homalt::homcomod::HomComodule;
use homalt::hommod::HomModule;
use homalt::{Axiom, AxiomReport, LinearMap, Rational};

pub type Q = Rational;

pub fn zero() -> Q {
    Rational::zero()
}

pub fn zeros(n: usize) -> Vec<Q> {
    vec![zero(); n]
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn basis(n: usize, i: usize) -> Vec<Q> {
    let mut v = zeros(n);
    v[i] = Rational::one();
    v
}

pub fn apply(f: &LinearMap, x: &[Q]) -> Vec<Q> {
    (0..f.dim_out()).map(|r| (0..f.dim_in()).map(|c| f.get(r, c) * &x[c]).sum()).collect()
}

/// Random rational with numerator in [-100, 100] and denominator in [1, 7].
pub fn random_rational(rng: &mut Lcg) -> Q {
    let num = i64::from(rng.next_u32() % 201) - 100;
    let den = i64::from(rng.next_u32() % 7) + 1;
    Rational::new(num, den)
}

pub fn random_point(rng: &mut Lcg, n: usize) -> Vec<Q> {
    (0..n).map(|_| random_rational(rng)).collect()
}

// ---- algebras and modules ----

pub fn mul(a: &HomAlgebra, x: &[Q], y: &[Q]) -> Vec<Q> {
    let n = a.dim();
    let mut out = zeros(n);
    for i in 0..n {
        for j in 0..n {
            let s = &x[i] * &y[j];
            if s.is_zero() {
                continue;
            }
            for k in 0..n {
                out[k] += &s * a.mu().get(i, j, k);
            }
        }
    }
    out
}

/// `μ(α(x),μ(y,z)) − μ(μ(x,y),α(z))`.
pub fn associator(a: &HomAlgebra, x: &[Q], y: &[Q], z: &[Q]) -> Vec<Q> {
    let l = mul(a, &apply(a.alpha(), x), &mul(a, y, z));
    let r = mul(a, &mul(a, x, y), &apply(a.alpha(), z));
    sub(&l, &r)
}

/// Left identity `as(x,x,y)` evaluated directly.
pub fn left_alt_at(a: &HomAlgebra, x: &[Q], y: &[Q]) -> Vec<Q> {
    associator(a, x, x, y)
}

/// Right identity `as(x,y,y)` evaluated directly.
pub fn right_alt_at(a: &HomAlgebra, x: &[Q], y: &[Q]) -> Vec<Q> {
    associator(a, x, y, y)
}

pub type Failures = Vec<(Vec<usize>, Vec<Q>)>;

fn triples(n: usize, m: usize, f: impl Fn(usize, usize, usize) -> Vec<Q>) -> Failures {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                let r = f(i, j, k);
                if !is_zero(&r) {
                    out.push((vec![i, j, k], r));
                }
            }
        }
    }
    out
}

pub fn algebra_failures(a: &HomAlgebra, axiom: Axiom) -> Failures {
    let n = a.dim();
    let e = |i| basis(n, i);
    triples(n, n, |i, j, k| match axiom {
        Axiom::LeftHomAlternative => add(&associator(a, &e(i), &e(j), &e(k)), &associator(a, &e(j), &e(i), &e(k))),
        Axiom::RightHomAlternative => add(&associator(a, &e(i), &e(j), &e(k)), &associator(a, &e(i), &e(k), &e(j))),
        Axiom::HomAssociative => associator(a, &e(i), &e(j), &e(k)),
        other => panic!("no algebra oracle for {other}"),
    })
}

/// Action of `x ∈ A` on `v ∈ M`, whichever side the module is on.
pub fn act(m: &HomModule, x: &[Q], v: &[Q]) -> Vec<Q> {
    let (n, dm) = (m.algebra().dim(), m.dim_m());
    let mut out = zeros(dm);
    for i in 0..n {
        for p in 0..dm {
            let s = &x[i] * &v[p];
            if s.is_zero() {
                continue;
            }
            for q in 0..dm {
                out[q] += &s * m.action().get(i, p, q);
            }
        }
    }
    out
}

/// `act(α(x), act(y, v)) − act(μ(x,y), β(v))`; the module identity is its
/// value at `x = y`.
pub fn module_form(m: &HomModule, x: &[Q], y: &[Q], v: &[Q]) -> Vec<Q> {
    let a = m.algebra();
    let l = act(m, &apply(a.alpha(), x), &act(m, y, v));
    let r = act(m, &mul(a, x, y), &apply(m.beta(), v));
    sub(&l, &r)
}

pub fn module_failures(m: &HomModule) -> Failures {
    let (n, dm) = (m.algebra().dim(), m.dim_m());
    triples(n, dm, |i, j, p| {
        let (x, y, v) = (basis(n, i), basis(n, j), basis(dm, p));
        add(&module_form(m, &x, &y, &v), &module_form(m, &y, &x, &v))
    })
}

// ---- coalgebras ----

struct Co<'a> {
    n: usize,
    d: &'a dyn Fn(usize, usize, usize) -> Q,
    g: &'a dyn Fn(usize, usize, usize) -> Q,
    a: &'a dyn Fn(usize, usize) -> Q,
}

fn columns(cols: usize, f: impl Fn(usize) -> Vec<Q>) -> Failures {
    (0..cols)
        .filter_map(|k| {
            let r = f(k);
            (!is_zero(&r)).then(|| (vec![k], r))
        })
        .collect()
}

fn idx2(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

fn idx3(n: usize, m: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..m).map(move |l| (i, j, l))))
}

/// `t(k)` at `(i,j)`: `Σ_l α[l][k] t[l][i][j] − Σ_{a,b} α[i][a] α[j][b] t[k][a][b]`.
fn comult(c: &Co, t: &dyn Fn(usize, usize, usize) -> Q, k: usize) -> Vec<Q> {
    let n = c.n;
    idx2(n)
        .map(|(i, j)| {
            let l: Q = (0..n).map(|l| (c.a)(l, k) * t(l, i, j)).sum();
            let r: Q = idx2(n).map(|(a, b)| (c.a)(i, a) * (c.a)(j, b) * t(k, a, b)).sum();
            l - r
        })
        .collect()
}

/// `(α⊗s)∘t` applied to `e_k`, at `(i,j,l)`.
fn alpha_then(
    c: &Co,
    t: &dyn Fn(usize, usize, usize) -> Q,
    s: &dyn Fn(usize, usize, usize) -> Q,
    k: usize,
    i: usize,
    j: usize,
    l: usize,
) -> Q {
    idx2(c.n).map(|(a, b)| t(k, a, b) * (c.a)(i, a) * s(b, j, l)).sum()
}

pub fn coalgebra_failures(p: &HomPoissonCoalgebra, axiom: Axiom) -> Failures {
    let d = |k: usize, i: usize, j: usize| p.delta().get(k, i, j).clone();
    let g = |k: usize, i: usize, j: usize| p.gamma().get(k, i, j).clone();
    let a = |r: usize, c: usize| p.alpha().get(r, c).clone();
    let c = Co { n: p.dim(), d: &d, g: &g, a: &a };
    let n = c.n;
    columns(n, |k| match axiom {
        Axiom::Cocommutativity => idx2(n).map(|(i, j)| d(k, i, j) - d(k, j, i)).collect(),
        Axiom::Comultiplicativity => comult(&c, c.d, k),
        Axiom::CobracketComultiplicativity => comult(&c, c.g, k),
        Axiom::HomCoassociativity => idx3(n, n)
            .map(|(i, j, l)| {
                let lhs = alpha_then(&c, c.d, c.d, k, i, j, l);
                let rhs: Q = idx2(n).map(|(x, y)| d(k, x, y) * d(x, i, j) * a(l, y)).sum();
                lhs - rhs
            })
            .collect(),
        Axiom::SkewCosymmetry => idx2(n).map(|(i, j)| g(k, i, j) + g(k, j, i)).collect(),
        Axiom::HomCoJacobi => {
            let x = |i, j, l| alpha_then(&c, c.g, c.g, k, i, j, l);
            idx3(n, n).map(|(i, j, l)| x(i, j, l) + x(j, l, i) + x(l, i, j)).collect()
        }
        Axiom::HomCoLeibniz => idx3(n, n)
            .map(|(i, j, l)| {
                let lhs = alpha_then(&c, c.g, c.d, k, i, j, l);
                let first: Q = idx2(n).map(|(x, y)| d(k, x, y) * g(x, i, j) * a(l, y)).sum();
                let second = alpha_then(&c, c.d, c.g, k, j, i, l);
                lhs - first - second
            })
            .collect(),
        other => panic!("no coalgebra oracle for {other}"),
    })
}

// ---- comodules ----

pub fn comodule_failures(cm: &HomComodule, axiom: Axiom) -> Failures {
    let base = cm.coalgebra();
    let (n, m) = (base.dim(), cm.dim_m());
    let d = |k: usize, i: usize, j: usize| base.delta().get(k, i, j).clone();
    let g = |k: usize, i: usize, j: usize| base.gamma().get(k, i, j).clone();
    let a = |r: usize, c: usize| base.alpha().get(r, c).clone();
    let b = |r: usize, c: usize| cm.beta().get(r, c).clone();
    // coefficient of e_i ⊗ f_q in the coaction of f_p
    let dm = |p: usize, i: usize, q: usize| cm.delta_m().map_or_else(zero, |t| t.get(p, i, q).clone());
    let gm = |p: usize, i: usize, q: usize| cm.gamma_m().map_or_else(zero, |t| t.get(p, i, q).clone());

    let compat = |t: &dyn Fn(usize, usize, usize) -> Q, p: usize| -> Vec<Q> {
        (0..n)
            .flat_map(|i| (0..m).map(move |q| (i, q)))
            .map(|(i, q)| {
                let l: Q = (0..m).map(|r| b(r, p) * t(r, i, q)).sum();
                let r: Q =
                    (0..n).flat_map(|x| (0..m).map(move |y| (x, y))).map(|(x, y)| a(i, x) * b(q, y) * t(p, x, y)).sum();
                l - r
            })
            .collect()
    };
    // (α⊗s)∘t on f_p at (i,j,q)
    let alpha_then = |t: &dyn Fn(usize, usize, usize) -> Q, s: &dyn Fn(usize, usize, usize) -> Q, p, i, j, q| -> Q {
        (0..n).flat_map(|x| (0..m).map(move |r| (x, r))).map(|(x, r)| t(p, x, r) * a(i, x) * s(r, j, q)).sum()
    };
    // (u⊗β)∘t on f_p at (i,j,q), with u a comultiplication-shaped tensor on C
    let co_then_beta = |t: &dyn Fn(usize, usize, usize) -> Q, u: &dyn Fn(usize, usize, usize) -> Q, p, i, j, q| -> Q {
        (0..n).flat_map(|x| (0..m).map(move |r| (x, r))).map(|(x, r)| t(p, x, r) * u(x, i, j) * b(q, r)).sum()
    };

    columns(m, |p| match axiom {
        Axiom::CoactionCompat => compat(&dm, p),
        Axiom::LieCoactionCompat => compat(&gm, p),
        Axiom::CoactionCoassoc => {
            idx3(n, m).map(|(i, j, q)| alpha_then(&dm, &dm, p, i, j, q) - co_then_beta(&dm, &d, p, i, j, q)).collect()
        }
        Axiom::LieCoactionJacobi => idx3(n, m)
            .map(|(i, j, q)| {
                co_then_beta(&gm, &g, p, i, j, q) - alpha_then(&gm, &gm, p, i, j, q) + alpha_then(&gm, &gm, p, j, i, q)
            })
            .collect(),
        Axiom::PoissonCoactionFirst => idx3(n, m)
            .map(|(i, j, q)| {
                alpha_then(&gm, &dm, p, i, j, q) - co_then_beta(&dm, &g, p, i, j, q) - alpha_then(&dm, &gm, p, j, i, q)
            })
            .collect(),
        Axiom::PoissonCoactionSecond => idx3(n, m)
            .map(|(i, j, q)| {
                co_then_beta(&gm, &d, p, i, j, q) - alpha_then(&dm, &gm, p, i, j, q) - alpha_then(&dm, &gm, p, j, i, q)
            })
            .collect(),
        other => panic!("no comodule oracle for {other}"),
    })
}

/// The checker's witnesses for a leaf axiom, in the oracle's shape.
pub fn reported(report: &AxiomReport, axiom: Axiom) -> Failures {
    let leaf = report.find(axiom).unwrap_or_else(|| panic!("{axiom} not in report"));
    assert!(leaf.sub_reports.is_empty(), "{axiom} is not a leaf");
    leaf.witnesses.iter().map(|w| (w.indices.clone(), w.residual.entries().to_vec())).collect()
}
