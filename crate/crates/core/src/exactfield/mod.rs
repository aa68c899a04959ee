//! Exact coefficient arithmetic and dense linear algebra over ℚ and ℚ(i).
//!
//! Every linear subspace used elsewhere in the crate (kernels, images,
//! filtration levels, bigrading pieces) is a [`Subspace`] with a canonical
//! echelon basis.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::Scalar;
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
}

/// Ground field of a presentation. ℝ and ℂ data are represented exactly by
/// ℚ and ℚ(i) respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Field {
    Rational,
    Gaussian,
}

impl Field {
    pub fn admits(self, s: &Scalar) -> bool {
        self == Field::Gaussian || s.is_real()
    }

    pub fn join(self, other: Field) -> Field {
        self.max(other)
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Gaussian => write!(f, "Q(i)"),
        }
    }
}
