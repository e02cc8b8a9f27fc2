use alloc::vec::Vec;

use num_traits::Zero;

use crate::exactla::{kernel, vector, Mat};
use crate::scalar::Scalar;

/// A linear subspace of coordinate space, stored by its reduced row echelon
/// basis.
///
/// The echelon basis is canonical, so `==` is equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let rows: Vec<Vec<Scalar>> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector length mismatch"))
            .filter(|v| !vector::is_zero(v))
            .collect();
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let (r, pivots) = Mat::from_rows(rows).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, (0..ambient).map(|i| vector::unit(ambient, i)))
    }

    /// The null space of `m`, as a subspace of its column space.
    pub fn kernel_of(m: &Mat) -> Self {
        Subspace::span(m.cols(), kernel(m))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vector::zeros(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            vector::axpy(&mut rebuilt, c, b);
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Linear combination of the basis with the given coordinates.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vector::zeros(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            vector::axpy(&mut out, c, b);
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // Solve Σ a_i u_i − Σ b_j w_j = 0.
        let mut columns: Vec<Vec<Scalar>> = self.basis.clone();
        columns.extend(other.basis.iter().map(|w| w.iter().map(|x| -x).collect()));
        let m = Mat::from_columns(self.ambient, &columns);
        Subspace::span(
            self.ambient,
            kernel(&m)
                .into_iter()
                .map(|sol| self.combine(&sol[..self.dim()])),
        )
    }

    /// Image under a linear map given by a matrix acting on columns.
    pub fn image(&self, m: &Mat) -> Subspace {
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }

    pub fn is_stable_under(&self, m: &Mat) -> bool {
        self.basis.iter().all(|v| self.contains(&m.mul_vec(v)))
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn as_columns(&self) -> Mat {
        Mat::from_columns(self.ambient, &self.basis)
    }

    /// Some complement of `self` inside `within`, spanned by vectors of
    /// `within`'s echelon basis.
    pub fn complement_in(&self, within: &Subspace) -> Vec<Vec<Scalar>> {
        let mut acc = self.clone();
        let mut picked = Vec::new();
        for v in &within.basis {
            if !acc.contains(v) {
                acc = acc.sum(&Subspace::span(self.ambient, [v.clone()]));
                picked.push(v.clone());
            }
        }
        picked
    }

    /// True when every basis vector has a single nonzero entry.
    pub fn is_coordinate_aligned(&self) -> bool {
        self.basis
            .iter()
            .all(|v| v.iter().filter(|x| !x.is_zero()).count() == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use alloc::vec;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, [v(&[1, 0, 0]), v(&[2, 3, 0]), v(&[0, 0, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&v(&[5, -7, 0])));
        assert!(!a.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, [v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersection(&b), Subspace::span(3, [v(&[0, 1, 0])]));
        assert_eq!(a.sum(&b), Subspace::full(3));
        assert_eq!(a.intersection(&Subspace::zero(3)).dim(), 0);
        let c = a.complement_in(&Subspace::full(3));
        assert_eq!(c, vec![v(&[0, 0, 1])]);
    }

    #[test]
    fn coordinates_round_trip() {
        let a = Subspace::span(3, [v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let x = v(&[2, 5, 7]);
        let c = a.coordinates(&x).unwrap();
        assert_eq!(a.combine(&c), x);
    }
}
