//! Exact rational linear algebra.
//!
//! Dense matrices only: every algebra handled by this crate has dimension at
//! most a dozen or so, and all arithmetic is exact.

mod mat;
mod unipoly;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use mat::Mat;
pub use unipoly::UniPoly;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A basis of `{v : m·v = 0}`, one vector per free column of the reduced
/// row echelon form.
pub fn kernel(m: &Mat) -> Vec<Vec<Scalar>> {
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); m.cols()];
            v[free] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            v
        })
        .collect()
}

/// Some `x` with `m·x = b`, with every free variable set to zero; `None`
/// when the system is inconsistent.
pub fn solve(m: &Mat, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(m.rows(), b.len(), "right-hand side length mismatch");
    let n = m.cols();
    let aug = Mat::from_fn(m.rows(), n + 1, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[(row, n)].clone();
    }
    Some(x)
}

/// `det(t·I − m)` by the Faddeev–LeVerrier recurrence.
pub fn charpoly(m: &Mat) -> UniPoly {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut acc = Mat::zeros(n, n);
    for k in 1..=n {
        // acc_k = m·acc_{k-1} + c_{n-k+1}·I
        acc = &(m * &acc) + &Mat::identity(n).scale(&coeffs[n - k + 1]);
        let t = (m * &acc).trace();
        coeffs[n - k] = -t / Scalar::from_integer(BigInt::from(k));
    }
    UniPoly::new(coeffs)
}

/// The monic polynomial of least degree annihilating `m`.
pub fn minimal_polynomial(m: &Mat) -> UniPoly {
    assert!(m.is_square());
    let n = m.rows();
    let mut powers: Vec<Vec<Scalar>> = vec![Mat::identity(n).vectorize()];
    let mut current = Mat::identity(n);
    for k in 1..=n {
        current = &current * m;
        let target = current.vectorize();
        let basis = Mat::from_columns(n * n, &powers);
        if let Some(c) = solve(&basis, &target) {
            let mut coeffs: Vec<Scalar> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Scalar::one());
            return UniPoly::new(coeffs);
        }
        powers.push(target);
        debug_assert!(k < n || n == 0);
    }
    UniPoly::one()
}

/// All rational roots with multiplicity, sorted ascending, provided the
/// polynomial splits completely over the rationals.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<Scalar>> {
    let Some(deg) = p.degree() else {
        return Err(Error::NonRationalSpectrum);
    };
    if deg == 0 {
        return Ok(Vec::new());
    }
    let p = p.monic();
    let sqf = p.squarefree_part();
    let distinct = distinct_rational_roots(&sqf);
    if distinct.len() != sqf.degree().unwrap_or(0) {
        return Err(Error::NonRationalSpectrum);
    }
    let mut roots = Vec::with_capacity(deg);
    for r in distinct {
        let lin = UniPoly::linear(&r);
        let mut rest = p.clone();
        loop {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            roots.push(r.clone());
            rest = q;
        }
    }
    roots.sort();
    debug_assert_eq!(roots.len(), deg);
    Ok(roots)
}

fn distinct_rational_roots(p: &UniPoly) -> Vec<Scalar> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(Scalar::zero());
    }
    let constant = &ints[low];
    let leading = ints.last().expect("nonzero polynomial");
    if ints.len() - low <= 1 {
        return roots;
    }
    let nums = divisors(constant);
    let dens = divisors(leading);
    for u in &nums {
        for v in &dens {
            for sign in [1i32, -1] {
                let cand = Scalar::new(u * BigInt::from(sign), v.clone());
                if !roots.contains(&cand) && p.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Positive divisors by trial division; inputs here are small.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Additive Jordan–Chevalley decomposition `m = s + n`.
///
/// `s` is obtained by Newton iteration `s ← s − q(s)·q'(s)⁻¹` where `q` is
/// the squarefree part of the characteristic polynomial, so `s` is a
/// polynomial in `m`, `q(s) = 0`, and `n = m − s` is nilpotent and commutes
/// with `s`. No eigenvalues are needed.
pub fn jordan_chevalley(m: &Mat) -> (Mat, Mat) {
    assert!(m.is_square(), "Jordan decomposition of a non-square matrix");
    let size = m.rows();
    if size == 0 {
        return (m.clone(), m.clone());
    }
    let q = charpoly(m).squarefree_part();
    let dq = q.derivative();
    let mut s = m.clone();
    loop {
        let qs = q.eval_mat(&s);
        if qs.is_zero() {
            break;
        }
        // gcd(q, q') = 1 makes q'(s) invertible for every iterate.
        let inv = dq
            .eval_mat(&s)
            .inverse()
            .expect("q'(s) invertible for squarefree q");
        s = &s - &(&qs * &inv);
    }
    let n = m - &s;
    (s, n)
}

/// Component-wise helpers for coordinate vectors.
pub mod vector {
    use alloc::vec::Vec;

    use num_traits::Zero;

    use crate::scalar::Scalar;

    pub fn zeros(n: usize) -> Vec<Scalar> {
        alloc::vec![Scalar::zero(); n]
    }

    pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = zeros(n);
        v[i] = num_traits::One::one();
        v
    }

    pub fn is_zero(v: &[Scalar]) -> bool {
        v.iter().all(Zero::is_zero)
    }

    pub fn add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(a: &[Scalar], c: &Scalar) -> Vec<Scalar> {
        a.iter().map(|x| x * c).collect()
    }

    /// `acc += c·v`
    pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        for (a, x) in acc.iter_mut().zip(v) {
            if !x.is_zero() {
                *a += c * x;
            }
        }
    }

    pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
        a.iter()
            .zip(b)
            .filter(|(x, y)| !x.is_zero() && !y.is_zero())
            .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    fn poly(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn kernel_examples() {
        let k = kernel(&Mat::zeros(2, 2));
        assert_eq!(k, vec![vector::unit(2, 0), vector::unit(2, 1)]);
        assert!(kernel(&Mat::identity(3)).is_empty());
        // Row reduction of [[1,1],[2,2]] leaves x + y = 0.
        assert_eq!(kernel(&m(&[&[1, 1], &[2, 2]])), vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn solve_examples() {
        let b = vec![int(3), frac(1, 2), int(-4)];
        assert_eq!(solve(&Mat::identity(3), &b), Some(b.clone()));
        assert_eq!(solve(&Mat::zeros(2, 2), &[int(1), int(0)]), None);
        assert_eq!(
            solve(&m(&[&[2, 0], &[0, 3]]), &[int(4), int(6)]),
            Some(vec![int(2), int(2)])
        );
        // Underdetermined: free variable set to zero.
        assert_eq!(solve(&m(&[&[1, 1]]), &[int(5)]), Some(vec![int(5), int(0)]));
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(charpoly(&Mat::zeros(2, 2)), poly(&[0, 0, 1]));
        assert_eq!(charpoly(&Mat::identity(2)), poly(&[1, -2, 1]));
        // Cofactor expansion: det [[t, 0], [1, t-1]] = t^2 - t.
        assert_eq!(charpoly(&m(&[&[0, 0], &[-1, 1]])), poly(&[0, -1, 1]));
        assert_eq!(charpoly(&Mat::zeros(0, 0)), UniPoly::one());
    }

    #[test]
    fn rational_roots_examples() {
        assert_eq!(rational_roots(&poly(&[0, -1, 1])).unwrap(), vec![int(0), int(1)]);
        assert_eq!(rational_roots(&poly(&[1, 0, 1])), Err(Error::NonRationalSpectrum));
        assert_eq!(
            rational_roots(&poly(&[0, -1, 0, 1])).unwrap(),
            vec![int(-1), int(0), int(1)]
        );
        // (t - 1/2)^2 (t + 3)
        let p = &(&UniPoly::linear(&frac(1, 2)) * &UniPoly::linear(&frac(1, 2)))
            * &UniPoly::linear(&int(-3));
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![int(-3), frac(1, 2), frac(1, 2)]
        );
        // t^2 - 2 has no rational roots.
        assert_eq!(rational_roots(&poly(&[-2, 0, 1])), Err(Error::NonRationalSpectrum));
    }

    #[test]
    fn jordan_chevalley_examples() {
        let nil = m(&[&[0, 1], &[0, 0]]);
        let (s, n) = jordan_chevalley(&nil);
        assert!(s.is_zero());
        assert_eq!(n, nil);

        let (s, n) = jordan_chevalley(&m(&[&[1, 1], &[0, 1]]));
        assert_eq!(s, Mat::identity(2));
        assert_eq!(n, nil);

        let d = m(&[&[2, 0], &[0, 3]]);
        let (s, n) = jordan_chevalley(&d);
        assert_eq!(s, d);
        assert!(n.is_zero());
    }

    #[test]
    fn minimal_polynomial_examples() {
        assert_eq!(minimal_polynomial(&Mat::identity(3)), poly(&[-1, 1]));
        assert_eq!(minimal_polynomial(&m(&[&[0, 1], &[0, 0]])), poly(&[0, 0, 1]));
        assert_eq!(minimal_polynomial(&m(&[&[2, 0], &[0, 3]])), poly(&[6, -5, 1]));
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant(), int(1));
        assert_eq!(&a * &a.inverse().unwrap(), Mat::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn unipoly_division() {
        let a = poly(&[-1, 0, 0, 1]);
        let b = poly(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, poly(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = poly(&[1, 0, 1]).div_rem(&poly(&[0, 1]));
        assert_eq!(q, poly(&[0, 1]));
        assert_eq!(r, poly(&[1]));
        assert_eq!(poly(&[0, 0, 1, 1]).squarefree_part(), poly(&[0, 1, 1]));
    }
}
