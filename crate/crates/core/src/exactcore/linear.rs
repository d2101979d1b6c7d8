use std::fmt;
use std::ops::Index;

use crate::error::{dim_mismatch, Result};

use super::Rational;

/// A dense vector of exact rationals in a fixed basis.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(entries: Vec<Rational>) -> Self {
        Vector(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    /// The standard basis vector `e_index` of `K^dim`.
    pub fn basis(dim: usize, index: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[index] = Rational::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&x| Rational::from_integer(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    fn check_same_dim(&self, other: &Vector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(dim_mismatch(format!("vector of dim {} vs vector of dim {}", self.dim(), other.dim())));
        }
        Ok(())
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check_same_dim(other)?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check_same_dim(other)?;
        Ok(Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    /// `self ⊗ other` in the lexicographic basis (`e_i ⊗ e_j` at `i * other.dim() + j`).
    pub fn tensor(&self, other: &Vector) -> Vector {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.0 {
            for b in &other.0 {
                out.push(a * b);
            }
        }
        Vector(out)
    }

    pub(crate) fn add_at(&mut self, index: usize, x: Rational) {
        self.0[index] += x;
    }

    pub(crate) fn add_scaled_in_place(&mut self, s: &Rational, other: &[Rational]) {
        if s.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(other) {
            if !b.is_zero() {
                *a += s * b;
            }
        }
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl FromIterator<Rational> for Vector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        Vector(iter.into_iter().collect())
    }
}

/// A linear map `K^dim_in -> K^dim_out` stored as a dense `dim_out x dim_in`
/// matrix. Column `j` is the image of the basis vector `e_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    dim_out: usize,
    dim_in: usize,
    entries: Vec<Rational>,
}

impl LinearMap {
    pub fn zero(dim_out: usize, dim_in: usize) -> Self {
        LinearMap { dim_out, dim_in, entries: vec![Rational::zero(); dim_out * dim_in] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut m = Self::zero(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    pub fn diagonal_ints(diag: &[i64]) -> Self {
        Self::diagonal(&diag.iter().map(|&d| Rational::from_integer(d)).collect::<Vec<_>>())
    }

    /// Builds a map from its rows; every row must have length `dim_in`.
    pub fn from_rows(dim_out: usize, dim_in: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        if rows.len() != dim_out || rows.iter().any(|r| r.len() != dim_in) {
            return Err(dim_mismatch(format!("matrix rows do not form a {dim_out}x{dim_in} shape")));
        }
        Ok(LinearMap { dim_out, dim_in, entries: rows.into_iter().flatten().collect() })
    }

    /// Square or rectangular matrix from integer rows. Panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let dim_out = rows.len();
        let dim_in = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect()).collect();
        Self::from_rows(dim_out, dim_in, rows).expect("ragged integer matrix")
    }

    pub fn from_fn(dim_out: usize, dim_in: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(dim_out * dim_in);
        for i in 0..dim_out {
            for j in 0..dim_in {
                entries.push(f(i, j));
            }
        }
        LinearMap { dim_out, dim_in, entries }
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn is_square(&self) -> bool {
        self.dim_in == self.dim_out
    }

    /// Entry `a[i][j]`: coefficient of `e_i` in the image of `e_j`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim_in + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.dim_in..(i + 1) * self.dim_in]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.dim_out).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.dim_out).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.dim_out).all(|i| {
                (0..self.dim_in).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn apply(&self, v: &Vector) -> Result<Vector> {
        if v.dim() != self.dim_in {
            return Err(dim_mismatch(format!("map expects dim {}, vector has dim {}", self.dim_in, v.dim())));
        }
        Ok(self.apply_unchecked(v.entries()))
    }

    pub(crate) fn apply_unchecked(&self, v: &[Rational]) -> Vector {
        let mut out = Vector::zeros(self.dim_out);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.dim_out {
                let a = self.get(i, j);
                if !a.is_zero() {
                    out.0[i] += a * x;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> LinearMap {
        Self::from_fn(self.dim_in, self.dim_out, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> LinearMap {
        LinearMap { dim_out: self.dim_out, dim_in: self.dim_in, entries: self.entries.iter().map(|x| -x).collect() }
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_same_shape(other)?;
        Ok(LinearMap {
            dim_out: self.dim_out,
            dim_in: self.dim_in,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &LinearMap) -> Result<LinearMap> {
        self.check_same_shape(other)?;
        Ok(LinearMap {
            dim_out: self.dim_out,
            dim_in: self.dim_in,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    fn check_same_shape(&self, other: &LinearMap) -> Result<()> {
        if self.dim_out != other.dim_out || self.dim_in != other.dim_in {
            return Err(dim_mismatch(format!(
                "{}x{} map vs {}x{} map",
                self.dim_out, self.dim_in, other.dim_out, other.dim_in
            )));
        }
        Ok(())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if self.dim_in != other.dim_out {
            return Err(dim_mismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.dim_out, self.dim_in, other.dim_out, other.dim_in
            )));
        }
        let mut out = LinearMap::zero(self.dim_out, other.dim_in);
        for i in 0..self.dim_out {
            for l in 0..self.dim_in {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.dim_in {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.entries[i * other.dim_in + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ other`; `e_i ⊗ e_j` sits at flat index
    /// `i * other.dim_in() + j` on the input side (likewise on the output side).
    pub fn tensor_product(&self, other: &LinearMap) -> LinearMap {
        let (go, gi) = (other.dim_out, other.dim_in);
        let mut out = LinearMap::zero(self.dim_out * go, self.dim_in * gi);
        let cols = self.dim_in * gi;
        for a in 0..self.dim_out {
            for i in 0..self.dim_in {
                let f = self.get(a, i);
                if f.is_zero() {
                    continue;
                }
                for b in 0..go {
                    for j in 0..gi {
                        let g = other.get(b, j);
                        if !g.is_zero() {
                            out.entries[(a * go + b) * cols + i * gi + j] = f * g;
                        }
                    }
                }
            }
        }
        out
    }

    /// `self^k` for a square map; `k = 0` gives the identity.
    pub fn pow(&self, k: u32) -> Result<LinearMap> {
        if !self.is_square() {
            return Err(dim_mismatch("power of a non-square map"));
        }
        let mut acc = LinearMap::identity(self.dim_in);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.rows().collect();
        f.debug_struct("LinearMap")
            .field("dim_out", &self.dim_out)
            .field("dim_in", &self.dim_in)
            .field("rows", &rows)
            .finish()
    }
}

/// `τ` on `K^n ⊗ K^n`: `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
pub fn swap_map(n: usize) -> LinearMap {
    LinearMap::from_fn(n * n, n * n, |row, col| {
        let (i, j) = (col / n, col % n);
        if row == j * n + i {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `σ` on `(K^n)^{⊗3}`: `x₁ ⊗ x₂ ⊗ x₃ ↦ x₃ ⊗ x₁ ⊗ x₂`.
pub fn cyclic_map(n: usize) -> LinearMap {
    LinearMap::from_fn(n * n * n, n * n * n, |row, col| {
        let (i, j, k) = (col / (n * n), (col / n) % n, col % n);
        if row == (k * n + i) * n + j {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

pub fn compose(f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    f.compose(g)
}

pub fn tensor_product(f: &LinearMap, g: &LinearMap) -> LinearMap {
    f.tensor_product(g)
}
