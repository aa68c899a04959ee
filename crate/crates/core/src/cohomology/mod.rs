//! Cohomology of finite complexes and of algebra presentations, induced
//! maps and quasi-isomorphism checks.

mod complex;
mod morphism;
mod table;

pub use complex::{induced_defect, induced_map, ChainMap, FiniteComplex, Homology, HomologyDefect};
pub use morphism::{
    is_k_quasi_isomorphism, is_quasi_isomorphism, kunneth_check, DefectKind, DgaMorphism, KunnethReport, QuasiIsoFailure,
    QuasiIsoReport,
};
pub use table::{
    bidegree_bases, bigraded_cohomology, cohomology, de_rham_complex, degree_bases, differential_matrix, linear_map_matrix, total_complex,
    BidegreeDim, BigradedTable, CohomologyTable, GradedBasis,
};

use thiserror::Error;

use crate::gca::GcaError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("expected {expected} generator images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("source field is larger than the target field")]
    FieldMismatch,
    #[error("image of {generator} has the wrong (bi)degree")]
    NotGraded { generator: String },
    #[error("map does not commute with d on {generator}: {residue}")]
    NotAChainMap { generator: String, residue: String },
    #[error("relation {relation} is not sent to zero")]
    RelationNotPreserved { relation: String },
    #[error("degree {requested} requested, cohomology known only through degree {available}")]
    CutoffExceeded { requested: u32, available: u32 },
    #[error(transparent)]
    Algebra(#[from] GcaError),
}
