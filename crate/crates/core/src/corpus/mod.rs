//! Builders for the worked examples and their expected tables: Hopf
//! manifolds, `S³ × S³`, products, Vaisman-type models and
//! Chevalley–Eilenberg algebras of nilpotent Lie algebras.

mod builders;
mod entries;
mod lie;

pub use builders::{elliptic_model, hopf_basic_ring, hopf_model, product_model, s3s3_model, vaisman_model};
pub use entries::{
    entries, export, file_types, CheckOutcome, CorpusEntry, CorpusModel, Cell, EntryReport, Expectation, Origin, Quantity, Table, Verdict, FILE_EXTENSION,
};
pub use lie::{chevalley_eilenberg, standard_complex_structure, CeAlgebra, LieAlgebra};

use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::dolbeault::DolbeaultError;
use crate::gca::GcaError;
use crate::hodge::HodgeError;
use crate::sullivan::SullivanError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("Jacobi identity fails on (e{i}, e{j}, e{k})")]
    Jacobi { i: usize, j: usize, k: usize },
    #[error("the Lie algebra is not nilpotent")]
    NotNilpotent,
    #[error("invalid complex structure: {0}")]
    ComplexStructure(String),
    #[error("invalid input: {0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] GcaError),
    #[error(transparent)]
    Dolbeault(#[from] DolbeaultError),
    #[error(transparent)]
    Hodge(#[from] HodgeError),
    #[error(transparent)]
    Sullivan(#[from] SullivanError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}
