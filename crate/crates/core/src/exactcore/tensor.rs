//! Structure-constant tensors.
//!
//! Index conventions (fixed across the crate):
//!
//! * [`MulTensor`]: `μ(e_i, e_j) = Σ_k c[i][j][k] e_k` (inputs first, output last).
//! * [`ComulTensor`]: `Δ(e_k) = Σ_{i,j} d[k][i][j] e_i ⊗ e_j` (element first).
//! * [`ActionTensor`]: left `μ_M(e_i, f_p) = Σ_q a[i][p][q] f_q`,
//!   right `μ_M(f_p, e_i) = Σ_q a[p][i][q] f_q`.
//! * [`CoactionTensor`]: `f_p ↦ Σ_{i,q} g[p][i][q] e_i ⊗ f_q`.
//!
//! All flat storage is row-major in the order the indices are written.

use serde::{Deserialize, Serialize};

use crate::error::{dim_mismatch, Result};

use super::{LinearMap, Rational, Vector};

fn check_len(what: &str, v: &Vector, expected: usize) -> Result<()> {
    if v.dim() != expected {
        return Err(dim_mismatch(format!("{what}: expected dim {expected}, got {}", v.dim())));
    }
    Ok(())
}

/// Structure constants of a bilinear multiplication `A ⊗ A -> A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MulTensor {
    dim: usize,
    c: Vec<Rational>,
}

impl MulTensor {
    pub fn zero(dim: usize) -> Self {
        MulTensor { dim, c: vec![Rational::zero(); dim * dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    c.push(f(i, j, k));
                }
            }
        }
        MulTensor { dim, c }
    }

    /// Builds from a flat `c[i][j][k]` array of length `dim³`.
    pub fn from_flat(dim: usize, c: Vec<Rational>) -> Result<Self> {
        if c.len() != dim * dim * dim {
            return Err(dim_mismatch(format!(
                "multiplication tensor of dim {dim} needs {} constants, got {}",
                dim * dim * dim,
                c.len()
            )));
        }
        Ok(MulTensor { dim, c })
    }

    /// Sets `c[i][j][k]`.
    pub fn with(mut self, i: usize, j: usize, k: usize, value: impl Into<Rational>) -> Self {
        let n = self.dim;
        self.c[(i * n + j) * n + k] = value.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn flat(&self) -> &[Rational] {
        &self.c
    }

    /// Coordinates of `μ(e_i, e_j)`.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim;
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// `μ(x, y)`.
    pub fn apply(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        check_len("left factor", x, self.dim)?;
        check_len("right factor", y, self.dim)?;
        Ok(self.apply_unchecked(x, y))
    }

    pub(crate) fn apply_unchecked(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out.add_scaled_in_place(&(xi * yj), self.product_of_basis(i, j));
            }
        }
        out
    }

    /// The multiplication as an `n x n²` matrix on the lexicographic basis of `A ⊗ A`.
    pub fn as_linear_map(&self) -> LinearMap {
        let n = self.dim;
        LinearMap::from_fn(n, n * n, |k, col| self.get(col / n, col % n, k).clone())
    }

    pub fn from_linear_map(m: &LinearMap) -> Result<Self> {
        let n = m.dim_out();
        if m.dim_in() != n * n {
            return Err(dim_mismatch("multiplication map must be n x n²"));
        }
        Ok(Self::from_fn(n, |i, j, k| m.get(k, i * n + j).clone()))
    }

    pub fn neg(&self) -> Self {
        MulTensor { dim: self.dim, c: self.c.iter().map(|x| -x).collect() }
    }

    /// `μ ∘ τ`: `c'[i][j][k] = c[j][i][k]`.
    pub fn opposite(&self) -> Self {
        Self::from_fn(self.dim, |i, j, k| self.get(j, i, k).clone())
    }

    /// `φ ∘ μ`: `c'[i][j][k] = Σ_l c[i][j][l] φ[k][l]`.
    pub fn post_compose(&self, phi: &LinearMap) -> Result<Self> {
        if phi.dim_in() != self.dim || phi.dim_out() != self.dim {
            return Err(dim_mismatch("post-composition map must be square of the tensor dim"));
        }
        let n = self.dim;
        let mut c = Vec::with_capacity(self.c.len());
        for i in 0..n {
            for j in 0..n {
                c.extend(phi.apply_unchecked(self.product_of_basis(i, j)).into_entries());
            }
        }
        Ok(MulTensor { dim: n, c })
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }
}

/// `μ(x, y)` for a structure-constant tensor.
pub fn apply_bilinear(t: &MulTensor, x: &Vector, y: &Vector) -> Result<Vector> {
    t.apply(x, y)
}

/// Structure constants of a linear map `A -> A ⊗ A` (comultiplication or cobracket).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComulTensor {
    dim: usize,
    d: Vec<Rational>,
}

impl ComulTensor {
    pub fn zero(dim: usize) -> Self {
        ComulTensor { dim, d: vec![Rational::zero(); dim * dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut d = Vec::with_capacity(dim * dim * dim);
        for k in 0..dim {
            for i in 0..dim {
                for j in 0..dim {
                    d.push(f(k, i, j));
                }
            }
        }
        ComulTensor { dim, d }
    }

    /// Builds from a flat `d[k][i][j]` array of length `dim³`.
    pub fn from_flat(dim: usize, d: Vec<Rational>) -> Result<Self> {
        if d.len() != dim * dim * dim {
            return Err(dim_mismatch(format!(
                "comultiplication tensor of dim {dim} needs {} constants, got {}",
                dim * dim * dim,
                d.len()
            )));
        }
        Ok(ComulTensor { dim, d })
    }

    /// Sets `d[k][i][j]`.
    pub fn with(mut self, k: usize, i: usize, j: usize, value: impl Into<Rational>) -> Self {
        let n = self.dim;
        self.d[(k * n + i) * n + j] = value.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.d[(k * self.dim + i) * self.dim + j]
    }

    pub fn flat(&self) -> &[Rational] {
        &self.d
    }

    /// Coordinates of `Δ(e_k)` in the lexicographic basis of `A ⊗ A`.
    pub fn image_of_basis(&self, k: usize) -> &[Rational] {
        let nn = self.dim * self.dim;
        &self.d[k * nn..(k + 1) * nn]
    }

    pub fn apply(&self, x: &Vector) -> Result<Vector> {
        check_len("comultiplication argument", x, self.dim)?;
        let mut out = Vector::zeros(self.dim * self.dim);
        for (k, xk) in x.iter().enumerate() {
            out.add_scaled_in_place(xk, self.image_of_basis(k));
        }
        Ok(out)
    }

    /// The map as an `n² x n` matrix.
    pub fn as_linear_map(&self) -> LinearMap {
        let n = self.dim;
        LinearMap::from_fn(n * n, n, |row, k| self.get(k, row / n, row % n).clone())
    }

    pub fn from_linear_map(m: &LinearMap) -> Result<Self> {
        let n = m.dim_in();
        if m.dim_out() != n * n {
            return Err(dim_mismatch("comultiplication map must be n² x n"));
        }
        Ok(Self::from_fn(n, |k, i, j| m.get(i * n + j, k).clone()))
    }

    pub fn neg(&self) -> Self {
        ComulTensor { dim: self.dim, d: self.d.iter().map(|x| -x).collect() }
    }

    /// `τ ∘ Δ`: `d'[k][i][j] = d[k][j][i]`.
    pub fn opposite(&self) -> Self {
        Self::from_fn(self.dim, |k, i, j| self.get(k, j, i).clone())
    }

    /// `Δ ∘ φ`: `d'[k][i][j] = Σ_l φ[l][k] d[l][i][j]`.
    pub fn pre_compose(&self, phi: &LinearMap) -> Result<Self> {
        if phi.dim_in() != self.dim || phi.dim_out() != self.dim {
            return Err(dim_mismatch("pre-composition map must be square of the tensor dim"));
        }
        let n = self.dim;
        let mut d = Vec::with_capacity(self.d.len());
        for k in 0..n {
            let mut img = Vector::zeros(n * n);
            for l in 0..n {
                img.add_scaled_in_place(phi.get(l, k), self.image_of_basis(l));
            }
            d.extend(img.into_entries());
        }
        Ok(ComulTensor { dim: n, d })
    }

    pub fn is_zero(&self) -> bool {
        self.d.iter().all(Rational::is_zero)
    }
}

/// Which side the algebra acts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Structure constants of a module action `A ⊗ M -> M` (left) or `M ⊗ A -> M` (right).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActionTensor {
    dim_a: usize,
    dim_m: usize,
    side: Side,
    a: Vec<Rational>,
}

impl ActionTensor {
    pub fn zero(dim_a: usize, dim_m: usize, side: Side) -> Self {
        ActionTensor { dim_a, dim_m, side, a: vec![Rational::zero(); dim_a * dim_m * dim_m] }
    }

    /// `f(i, p, q)` is the coefficient of `f_q` in the action of `e_i` on `f_p`,
    /// whatever the side.
    pub fn from_fn(dim_a: usize, dim_m: usize, side: Side, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut t = Self::zero(dim_a, dim_m, side);
        for i in 0..dim_a {
            for p in 0..dim_m {
                for q in 0..dim_m {
                    let idx = t.flat_index(i, p, q);
                    t.a[idx] = f(i, p, q);
                }
            }
        }
        t
    }

    /// Builds from flat storage in side order (`a[i][p][q]` left, `a[p][i][q]` right).
    pub fn from_flat(dim_a: usize, dim_m: usize, side: Side, a: Vec<Rational>) -> Result<Self> {
        if a.len() != dim_a * dim_m * dim_m {
            return Err(dim_mismatch(format!(
                "action tensor ({dim_a}, {dim_m}) needs {} constants, got {}",
                dim_a * dim_m * dim_m,
                a.len()
            )));
        }
        Ok(ActionTensor { dim_a, dim_m, side, a })
    }

    fn flat_index(&self, i: usize, p: usize, q: usize) -> usize {
        match self.side {
            Side::Left => (i * self.dim_m + p) * self.dim_m + q,
            Side::Right => (p * self.dim_a + i) * self.dim_m + q,
        }
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_m(&self) -> usize {
        self.dim_m
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Coefficient of `f_q` in `e_i · f_p` (left) or `f_p · e_i` (right).
    pub fn get(&self, i: usize, p: usize, q: usize) -> &Rational {
        &self.a[self.flat_index(i, p, q)]
    }

    pub fn set(&mut self, i: usize, p: usize, q: usize, value: Rational) {
        let idx = self.flat_index(i, p, q);
        self.a[idx] = value;
    }

    pub fn flat(&self) -> &[Rational] {
        &self.a
    }

    /// Acts by the algebra element `x` on the module element `m`, on the
    /// tensor's side.
    pub fn act(&self, x: &Vector, m: &Vector) -> Result<Vector> {
        check_len("algebra element", x, self.dim_a)?;
        check_len("module element", m, self.dim_m)?;
        Ok(self.act_unchecked(x, m))
    }

    pub(crate) fn act_unchecked(&self, x: &Vector, m: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim_m);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (p, mp) in m.iter().enumerate() {
                if mp.is_zero() {
                    continue;
                }
                let s = xi * mp;
                for q in 0..self.dim_m {
                    let a = self.get(i, p, q);
                    if !a.is_zero() {
                        out.add_at(q, &s * a);
                    }
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        ActionTensor { a: self.a.iter().map(|x| -x).collect(), ..self.clone() }
    }

    /// Same constants read from the other side: `μ_M^op(m, x) = μ_M(x, m)`.
    pub fn opposite(&self) -> Self {
        Self::from_fn(self.dim_a, self.dim_m, self.side.flip(), |i, p, q| self.get(i, p, q).clone())
    }

    /// Precomposes the algebra slot with `ψ`: `a'[i][p][q] = Σ_j ψ[j][i] a[j][p][q]`.
    pub fn precompose_algebra(&self, psi: &LinearMap) -> Result<Self> {
        if psi.dim_in() != self.dim_a || psi.dim_out() != self.dim_a {
            return Err(dim_mismatch("algebra-slot map must be square of the algebra dim"));
        }
        Ok(Self::from_fn(self.dim_a, self.dim_m, self.side, |i, p, q| {
            (0..self.dim_a).map(|j| psi.get(j, i) * self.get(j, p, q)).sum()
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(Rational::is_zero)
    }
}

/// Structure constants of a coaction `M -> C ⊗ M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoactionTensor {
    dim_c: usize,
    dim_m: usize,
    g: Vec<Rational>,
}

impl CoactionTensor {
    pub fn zero(dim_c: usize, dim_m: usize) -> Self {
        CoactionTensor { dim_c, dim_m, g: vec![Rational::zero(); dim_c * dim_m * dim_m] }
    }

    pub fn from_fn(dim_c: usize, dim_m: usize, mut f: impl FnMut(usize, usize, usize) -> Rational) -> Self {
        let mut g = Vec::with_capacity(dim_c * dim_m * dim_m);
        for p in 0..dim_m {
            for i in 0..dim_c {
                for q in 0..dim_m {
                    g.push(f(p, i, q));
                }
            }
        }
        CoactionTensor { dim_c, dim_m, g }
    }

    /// Builds from a flat `g[p][i][q]` array.
    pub fn from_flat(dim_c: usize, dim_m: usize, g: Vec<Rational>) -> Result<Self> {
        if g.len() != dim_c * dim_m * dim_m {
            return Err(dim_mismatch(format!(
                "coaction tensor ({dim_c}, {dim_m}) needs {} constants, got {}",
                dim_c * dim_m * dim_m,
                g.len()
            )));
        }
        Ok(CoactionTensor { dim_c, dim_m, g })
    }

    /// Sets `g[p][i][q]`.
    pub fn with(mut self, p: usize, i: usize, q: usize, value: impl Into<Rational>) -> Self {
        let idx = (p * self.dim_c + i) * self.dim_m + q;
        self.g[idx] = value.into();
        self
    }

    pub fn dim_c(&self) -> usize {
        self.dim_c
    }

    pub fn dim_m(&self) -> usize {
        self.dim_m
    }

    pub fn get(&self, p: usize, i: usize, q: usize) -> &Rational {
        &self.g[(p * self.dim_c + i) * self.dim_m + q]
    }

    pub fn flat(&self) -> &[Rational] {
        &self.g
    }

    fn image_of_basis(&self, p: usize) -> &[Rational] {
        let block = self.dim_c * self.dim_m;
        &self.g[p * block..(p + 1) * block]
    }

    /// `Σ m_{(-1)} ⊗ m_{(0)}` as a flat `C ⊗ M` vector: entry `(i, q)` at `i * dim_m + q`.
    pub fn apply(&self, m: &Vector) -> Result<Vector> {
        check_len("comodule element", m, self.dim_m)?;
        let mut out = Vector::zeros(self.dim_c * self.dim_m);
        for (p, mp) in m.iter().enumerate() {
            out.add_scaled_in_place(mp, self.image_of_basis(p));
        }
        Ok(out)
    }

    /// The coaction as a `(dim_c · dim_m) x dim_m` matrix.
    pub fn as_linear_map(&self) -> LinearMap {
        let m = self.dim_m;
        LinearMap::from_fn(self.dim_c * m, m, |row, p| self.get(p, row / m, row % m).clone())
    }

    pub fn from_linear_map(dim_c: usize, map: &LinearMap) -> Result<Self> {
        let m = map.dim_in();
        if map.dim_out() != dim_c * m {
            return Err(dim_mismatch("coaction map must be (dim_c·m) x m"));
        }
        Ok(Self::from_fn(dim_c, m, |p, i, q| map.get(i * m + q, p).clone()))
    }

    pub fn neg(&self) -> Self {
        CoactionTensor { g: self.g.iter().map(|x| -x).collect(), ..self.clone() }
    }

    /// `(ψ ⊗ Id_M) ∘ coaction`: `g'[p][i][q] = Σ_l ψ[i][l] g[p][l][q]`.
    pub fn postcompose_coalgebra(&self, psi: &LinearMap) -> Result<Self> {
        if psi.dim_in() != self.dim_c || psi.dim_out() != self.dim_c {
            return Err(dim_mismatch("coalgebra-slot map must be square of the coalgebra dim"));
        }
        Ok(Self::from_fn(self.dim_c, self.dim_m, |p, i, q| {
            (0..self.dim_c).map(|l| psi.get(i, l) * self.get(p, l, q)).sum()
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.g.iter().all(Rational::is_zero)
    }
}

/// `Σ m_{(-1)} ⊗ m_{(0)}` for a coaction tensor, flat `(i, q) -> i * dim_m + q`.
pub fn apply_coaction(t: &CoactionTensor, m: &Vector) -> Result<Vector> {
    t.apply(m)
}
