//! Solvable radical and nilradical of a subalgebra, each computed from the
//! trace form and then checked directly.

use alloc::format;
use alloc::vec::Vec;

use super::{LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::exactla::{kernel, vector, Mat};
use crate::scalar::Scalar;

impl LieAlgebra {
    /// Largest solvable ideal of the subalgebra `s`.
    ///
    /// Candidate: the orthogonal of `[s, s]` under the Killing form of `s`.
    /// The candidate must be an ideal of `s` and solvable, otherwise
    /// [`Error::RadicalVerificationFailed`].
    pub fn solvable_radical(&self, s: &Subspace) -> Result<Subspace> {
        let h = self.restrict(s)?;
        let r = h.solvable_radical_local()?;
        Ok(lift(s, &r))
    }

    /// Nilradical of the subalgebra `s`: the elements `x` of the solvable
    /// radical with `tr(ad x · ad y) = 0` for every `y` in the radical.
    ///
    /// Every basis vector of the result is checked to be `ad_s`-nilpotent and
    /// the result is checked to be an ideal of `s`; a failed check is
    /// [`Error::NilradicalVerificationFailed`].
    pub fn nilradical(&self, s: &Subspace) -> Result<Subspace> {
        let h = self.restrict(s)?;
        let radical = h
            .solvable_radical_local()
            .map_err(|e| Error::NilradicalVerificationFailed(format!("{e}")))?;
        let n = h.dim();
        let killing = h.killing_form();
        let rb = radical.basis();
        let gram = Mat::from_fn(rb.len(), rb.len(), |i, j| {
            vector::dot(&rb[i], &killing.mul_vec(&rb[j]))
        });
        let candidate = Subspace::span(
            n,
            kernel(&gram).into_iter().map(|c| radical.combine(&c)),
        );
        for x in candidate.basis() {
            if !h.ad_matrix_vec(x).is_nilpotent() {
                return Err(Error::NilradicalVerificationFailed(
                    "candidate contains an element that is not ad-nilpotent".into(),
                ));
            }
        }
        if !h.is_ideal_in(&candidate, &Subspace::full(n)) {
            return Err(Error::NilradicalVerificationFailed(
                "candidate is not an ideal".into(),
            ));
        }
        Ok(lift(s, &candidate))
    }

    fn solvable_radical_local(&self) -> Result<Subspace> {
        let n = self.dim();
        let full = Subspace::full(n);
        let derived = self.bracket_space(&full, &full);
        let killing = self.killing_form();
        let rows: Vec<Vec<Scalar>> = derived
            .basis()
            .iter()
            .map(|d| killing.transpose().mul_vec(d))
            .collect();
        let candidate = if rows.is_empty() {
            full.clone()
        } else {
            Subspace::kernel_of(&Mat::from_rows(rows))
        };
        if !self.is_ideal_in(&candidate, &full) {
            return Err(Error::RadicalVerificationFailed(
                "candidate is not an ideal".into(),
            ));
        }
        if !self.is_solvable(&candidate)? {
            return Err(Error::RadicalVerificationFailed(
                "candidate is not solvable".into(),
            ));
        }
        Ok(candidate)
    }
}

/// Maps a subspace given in the echelon coordinates of `s` back to ambient
/// coordinates.
fn lift(s: &Subspace, local: &Subspace) -> Subspace {
    Subspace::span(
        s.ambient(),
        local.basis().iter().map(|c| s.combine(c)),
    )
}

#[cfg(test)]
mod tests {
    use super::super::builtin;
    use super::*;
    use crate::scalar::int;

    #[test]
    fn radicals_of_catalog() {
        let sl2 = builtin::sl2();
        let full = Subspace::full(3);
        // The Killing form of sl2 has determinant -128, so the radical is 0.
        assert_eq!(sl2.killing_form().determinant(), int(-128));
        assert!(sl2.solvable_radical(&full).unwrap().is_zero());
        assert!(sl2.nilradical(&full).unwrap().is_zero());

        let aff = builtin::aff1();
        let two = Subspace::full(2);
        assert_eq!(aff.solvable_radical(&two).unwrap(), two);
        assert_eq!(
            aff.nilradical(&two).unwrap(),
            Subspace::span(2, [alloc::vec![int(0), int(1)]])
        );

        let ab = builtin::abelian2();
        assert_eq!(ab.solvable_radical(&two).unwrap(), two);
        assert_eq!(ab.nilradical(&two).unwrap(), two);

        let heis = builtin::heis3();
        assert_eq!(heis.nilradical(&full).unwrap(), full);
    }

    #[test]
    fn borel_of_sl2() {
        let sl2 = builtin::sl2();
        let b = Subspace::span(3, [alloc::vec![int(1), int(0), int(0)], alloc::vec![int(0), int(1), int(0)]]);
        assert_eq!(sl2.solvable_radical(&b).unwrap(), b);
        assert_eq!(
            sl2.nilradical(&b).unwrap(),
            Subspace::span(3, [alloc::vec![int(0), int(1), int(0)]])
        );
    }
}
