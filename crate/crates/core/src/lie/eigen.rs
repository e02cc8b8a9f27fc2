use alloc::format;
use alloc::vec::Vec;

use super::{Element, LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::exactla::{charpoly, rational_roots, Mat};
use crate::scalar::Scalar;

/// Eigenspace decomposition of `g` under `ad(x)` for a semisimple `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenSplit {
    /// `g_0 = ker ad(x)`.
    pub zero: Subspace,
    /// `(λ, g_λ)` for each nonzero eigenvalue, ascending in `λ`.
    pub parts: Vec<(Scalar, Subspace)>,
}

impl EigenSplit {
    /// The eigenspace for `λ` (possibly zero-dimensional).
    pub fn space(&self, lambda: &Scalar) -> Option<&Subspace> {
        if num_traits::Zero::is_zero(lambda) {
            return Some(&self.zero);
        }
        self.parts.iter().find(|(l, _)| l == lambda).map(|(_, s)| s)
    }

    /// All eigenspaces including `g_0`, ascending in eigenvalue.
    pub fn all(&self) -> Vec<(Scalar, &Subspace)> {
        let mut out: Vec<(Scalar, &Subspace)> =
            self.parts.iter().map(|(l, s)| (l.clone(), s)).collect();
        out.push((Scalar::from_integer(0.into()), &self.zero));
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }
}

impl LieAlgebra {
    /// Splits `g` into eigenspaces of `ad(x)`.
    ///
    /// Fails with [`Error::NonRationalSpectrum`] when the characteristic
    /// polynomial does not split over the rationals and with
    /// [`Error::NotSemisimple`] when the eigenspaces do not fill `g`.
    pub fn eigensplit(&self, x: &Element) -> Result<EigenSplit> {
        let n = self.dim();
        let ad = self.ad_matrix(x);
        let mut roots = rational_roots(&charpoly(&ad))?;
        roots.dedup();
        let mut zero = Subspace::zero(n);
        let mut parts = Vec::new();
        let mut total = 0;
        for lambda in roots {
            let shifted = &ad - &Mat::identity(n).scale(&lambda);
            let space = Subspace::kernel_of(&shifted);
            total += space.dim();
            if num_traits::Zero::is_zero(&lambda) {
                zero = space;
            } else {
                parts.push((lambda, space));
            }
        }
        if total != n {
            return Err(Error::NotSemisimple(format!(
                "eigenspaces of ad(x) span {total} of {n} dimensions"
            )));
        }
        Ok(EigenSplit { zero, parts })
    }
}

#[cfg(test)]
mod tests {
    use super::super::builtin;
    use super::*;
    use crate::scalar::int;
    use alloc::vec;

    #[test]
    fn split_of_sl2_under_h() {
        let sl2 = builtin::sl2();
        let split = sl2.eigensplit(&Element::basis(3, 0)).unwrap();
        assert_eq!(split.zero, Subspace::span(3, [vec![int(1), int(0), int(0)]]));
        assert_eq!(split.parts.len(), 2);
        assert_eq!(split.parts[0].0, int(-2));
        assert_eq!(split.parts[1].0, int(2));
        assert_eq!(split.parts[1].1, Subspace::span(3, [vec![int(0), int(1), int(0)]]));
    }

    #[test]
    fn zero_element_has_no_parts() {
        let sl2 = builtin::sl2();
        let split = sl2.eigensplit(&Element::zero(3)).unwrap();
        assert_eq!(split.zero, Subspace::full(3));
        assert!(split.parts.is_empty());
    }

    #[test]
    fn nilpotent_and_irrational_cases() {
        let sl2 = builtin::sl2();
        assert!(matches!(
            sl2.eigensplit(&Element::basis(3, 1)),
            Err(Error::NotSemisimple(_))
        ));
        // E - F has ad-eigenvalues 0 and ±2i.
        let x = Element::new(vec![int(0), int(1), int(-1)]);
        assert_eq!(sl2.eigensplit(&x), Err(Error::NonRationalSpectrum));
    }
}
