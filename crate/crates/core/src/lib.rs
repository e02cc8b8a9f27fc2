//! Exact computer algebra for orthogonal symmetric pairs.
//!
//! Everything here runs over the rationals with no tolerance anywhere:
//!
//! * [`exactla`]: dense rational matrices, kernels, characteristic
//!   polynomials, rational spectra, additive Jordan–Chevalley decomposition.
//! * [`lie`]: Lie algebras by structure constants, subspaces, centralizers,
//!   radicals and eigenspace splittings.
//! * [`sympair`]: symmetric pairs `g = k ⊕ p` with an invariant form that is
//!   anti-invariant for the involution, plus the builtin cotangent and swap
//!   families.
//! * [`polarization`]: recursive construction of σ-stable polarizations and
//!   their independent certification (isotropy, maximality, Pukanszky).
//! * [`poly`]: polynomials on `p`, truncated series on `p*`, the `k`-action,
//!   invariants and the `J` series.
//! * [`pbw`]: the enveloping algebra in PBW normal form, the quotient by the
//!   δ-twisted left ideal, symmetrization and the Rouvière map.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod error;
pub mod exactla;
pub mod lie;
pub mod pbw;
pub mod polarization;
pub mod poly;
pub mod scalar;
pub mod sympair;

pub use error::{Error, Result};
pub use scalar::Scalar;
