//! Finite-dimensional Lie algebras given by structure constants.

pub mod builtin;
mod eigen;
mod radical;
mod subspace;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use num_traits::Zero;

pub use eigen::EigenSplit;
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::exactla::{vector, Mat};
use crate::scalar::Scalar;

/// An element of a Lie algebra, by its coordinates in the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Element(vector::zeros(dim))
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        Element(vector::unit(dim, i))
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        vector::is_zero(&self.0)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element(vector::scale(&self.0, c))
    }
}

impl From<Vec<Scalar>> for Element {
    fn from(v: Vec<Scalar>) -> Self {
        Element(v)
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        Element(vector::add(&self.0, &rhs.0))
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        Element(vector::sub(&self.0, &rhs.0))
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element(self.0.iter().map(|x| -x).collect())
    }
}

/// One failed axiom, by basis indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `[b_i, b_j] != -[b_j, b_i]` (or `[b_i, b_i] != 0` when `i == j`).
    Antisymmetry { i: usize, j: usize },
    /// The Jacobiator of `(b_i, b_j, b_k)` is nonzero.
    Jacobi { i: usize, j: usize, k: usize, value: Vec<Scalar> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A Lie algebra over the rationals.
///
/// `table[i * dim + j]` holds the coordinates of `[b_i, b_j]`. Construction
/// does not enforce the axioms; call [`LieAlgebra::check_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    table: Vec<Vec<Scalar>>,
}

impl LieAlgebra {
    /// `table[i][j]` are the coordinates of `[b_i, b_j]`.
    pub fn new(labels: Vec<String>, table: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let dim = labels.len();
        if table.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: table.len(),
            });
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for row in table {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: row.len(),
                });
            }
            for v in row {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        actual: v.len(),
                    });
                }
                flat.push(v);
            }
        }
        Ok(LieAlgebra {
            labels,
            table: flat,
        })
    }

    /// Builds the table from the brackets `[b_i, b_j] = v` for the listed
    /// pairs, filling in `[b_j, b_i] = -v`; unlisted brackets are zero.
    pub fn from_brackets(labels: Vec<String>, brackets: &[(usize, usize, Vec<Scalar>)]) -> Self {
        let dim = labels.len();
        let mut table = vec![vector::zeros(dim); dim * dim];
        for (i, j, v) in brackets {
            assert_eq!(v.len(), dim);
            table[i * dim + j] = v.clone();
            table[j * dim + i] = v.iter().map(|x| -x).collect();
        }
        LieAlgebra { labels, table }
    }

    /// Like [`LieAlgebra::from_brackets`] but writes each listed bracket
    /// without mirroring it, so malformed input stays visible to
    /// [`LieAlgebra::check_axioms`].
    pub fn from_raw_brackets(labels: Vec<String>, brackets: &[(usize, usize, Vec<Scalar>)]) -> Self {
        let dim = labels.len();
        let mut table = vec![vector::zeros(dim); dim * dim];
        let mut listed = vec![false; dim * dim];
        for (i, j, v) in brackets {
            table[i * dim + j] = v.clone();
            listed[i * dim + j] = true;
        }
        for i in 0..dim {
            for j in 0..dim {
                if listed[i * dim + j] && !listed[j * dim + i] {
                    table[j * dim + i] = table[i * dim + j].iter().map(|x| -x).collect();
                }
            }
        }
        LieAlgebra { labels, table }
    }

    pub fn abelian(labels: Vec<String>) -> Self {
        LieAlgebra::from_brackets(labels, &[])
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket_vec(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vector::zeros(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vector::axpy(&mut out, &(xi * yj), self.structure(i, j));
            }
        }
        out
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        Element(self.bracket_vec(x.coords(), y.coords()))
    }

    /// Matrix of `ad(x)`; column `j` is `[x, b_j]`.
    pub fn ad_matrix_vec(&self, x: &[Scalar]) -> Mat {
        let n = self.dim();
        let columns: Vec<Vec<Scalar>> = (0..n)
            .map(|j| self.bracket_vec(x, &vector::unit(n, j)))
            .collect();
        Mat::from_columns(n, &columns)
    }

    pub fn ad_matrix(&self, x: &Element) -> Mat {
        self.ad_matrix_vec(x.coords())
    }

    /// Every antisymmetry and Jacobi failure on basis elements.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                let sum = vector::add(self.structure(i, j), self.structure(j, i));
                if !vector::is_zero(&sum) {
                    violations.push(AxiomViolation::Antisymmetry { i, j });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let value = self.jacobiator(i, j, k);
                    if !vector::is_zero(&value) {
                        violations.push(AxiomViolation::Jacobi { i, j, k, value });
                    }
                }
            }
        }
        AxiomReport { violations }
    }

    fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let n = self.dim();
        let b = |a: usize| vector::unit(n, a);
        let t1 = self.bracket_vec(&b(i), self.structure(j, k));
        let t2 = self.bracket_vec(&b(j), self.structure(k, i));
        let t3 = self.bracket_vec(&b(k), self.structure(i, j));
        vector::add(&vector::add(&t1, &t2), &t3)
    }

    /// `K(x, y) = tr(ad x · ad y)`.
    pub fn killing_form(&self) -> Mat {
        let n = self.dim();
        let ads: Vec<Mat> = (0..n)
            .map(|i| self.ad_matrix_vec(&vector::unit(n, i)))
            .collect();
        Mat::from_fn(n, n, |i, j| (&ads[i] * &ads[j]).trace())
    }

    /// The alternating matrix `(f([b_i, b_j]))_{ij}` of a linear form `f`.
    pub fn form_matrix(&self, f: &[Scalar]) -> Mat {
        let n = self.dim();
        Mat::from_fn(n, n, |i, j| vector::dot(f, self.structure(i, j)))
    }

    /// `g^f = {y : f([y, z]) = 0 for all z}`.
    pub fn centralizer_of_form(&self, f: &[Scalar]) -> Subspace {
        Subspace::kernel_of(&self.form_matrix(f))
    }

    /// `{y : [x, y] = 0}`.
    pub fn centralizer(&self, x: &Element) -> Subspace {
        Subspace::kernel_of(&self.ad_matrix(x))
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let rows: Vec<Vec<Scalar>> = (0..n)
            .flat_map(|i| self.ad_matrix_vec(&vector::unit(n, i)).to_rows())
            .collect();
        if rows.is_empty() {
            return Subspace::zero(0);
        }
        // [b_i, y] = 0 for all i, stacked.
        Subspace::kernel_of(&Mat::from_rows(rows))
    }

    /// `span [a, b]`.
    pub fn bracket_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut out = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                out.push(self.bracket_vec(x, y));
            }
        }
        Subspace::span(self.dim(), out)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains_space(&self.bracket_space(s, s))
    }

    /// Whether `i` is an ideal of the subalgebra `s`: `i ⊆ s` and `[s, i] ⊆ i`.
    pub fn is_ideal_in(&self, i: &Subspace, s: &Subspace) -> bool {
        s.contains_space(i) && i.contains_space(&self.bracket_space(s, i))
    }

    /// Smallest bracket-closed subspace containing `s`.
    pub fn subalgebra_generated(&self, s: &Subspace) -> Subspace {
        let mut current = s.clone();
        loop {
            let next = current.sum(&self.bracket_space(&current, &current));
            if next.dim() == current.dim() {
                return current;
            }
            current = next;
        }
    }

    /// `s, [s, s], [s, [s, s]], …` until it stabilizes.
    pub fn lower_central_series(&self, s: &Subspace) -> Vec<Subspace> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_space(s, last);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    /// `s, [s, s], [[s, s], [s, s]], …` until it stabilizes.
    pub fn derived_series(&self, s: &Subspace) -> Vec<Subspace> {
        let mut series = vec![s.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_space(last, last);
            if next.dim() == last.dim() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_nilpotent(&self, s: &Subspace) -> Result<bool> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        Ok(self.lower_central_series(s).last().is_some_and(Subspace::is_zero))
    }

    pub fn is_solvable(&self, s: &Subspace) -> Result<bool> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        Ok(self.derived_series(s).last().is_some_and(Subspace::is_zero))
    }

    /// The subalgebra `s` as a Lie algebra in its own echelon basis.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        let r = s.dim();
        let mut table = Vec::with_capacity(r * r);
        for x in s.basis() {
            for y in s.basis() {
                let c = s
                    .coordinates(&self.bracket_vec(x, y))
                    .ok_or(Error::NotASubalgebra)?;
                table.push(c);
            }
        }
        let labels = s
            .basis()
            .iter()
            .enumerate()
            .map(|(a, v)| self.describe(v).unwrap_or_else(|| format!("u{}", a + 1)))
            .collect();
        Ok(LieAlgebra { labels, table })
    }

    /// The label of `v` if it is exactly one basis vector.
    pub fn describe(&self, v: &[Scalar]) -> Option<String> {
        let mut nz = v.iter().enumerate().filter(|(_, x)| !x.is_zero());
        let (i, x) = nz.next()?;
        (nz.next().is_none() && num_traits::One::is_one(x)).then(|| self.labels[i].clone())
    }
}
