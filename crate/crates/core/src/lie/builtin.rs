//! The fixed catalog of small Lie algebras.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::LieAlgebra;
use crate::scalar::{int, Scalar};

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn v(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| int(x)).collect()
}

/// Two-dimensional abelian algebra.
pub fn abelian2() -> LieAlgebra {
    LieAlgebra::abelian(labels(&["e1", "e2"]))
}

/// Affine line algebra: `[e1, e2] = e2`.
pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_brackets(labels(&["e1", "e2"]), &[(0, 1, v(&[0, 1]))])
}

/// Heisenberg algebra: `[x, y] = z`.
pub fn heis3() -> LieAlgebra {
    LieAlgebra::from_brackets(labels(&["x", "y", "z"]), &[(0, 1, v(&[0, 0, 1]))])
}

/// `sl2` in the Chevalley basis `H, E, F`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        labels(&["H", "E", "F"]),
        &[
            (0, 1, v(&[0, 2, 0])),
            (0, 2, v(&[0, 0, -2])),
            (1, 2, v(&[1, 0, 0])),
        ],
    )
}

/// Looks up a catalog entry by name.
pub fn by_name(name: &str) -> Option<LieAlgebra> {
    match name {
        "abelian2" => Some(abelian2()),
        "aff1" => Some(aff1()),
        "heis3" => Some(heis3()),
        "sl2" => Some(sl2()),
        _ => None,
    }
}

pub const NAMES: [&str; 4] = ["abelian2", "aff1", "heis3", "sl2"];
