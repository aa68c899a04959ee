//! Filtrations, pure and mixed Hodge structures, the canonical bigrading
//! `V_{p,q} = R_{p,q} ∩ L_{p,q}`, the mixed Hodge diagram of `H ⊗ ∧W`, and
//! the weight bookkeeping of bigraded minimal models.

mod bigrading;
mod diagram;
mod filtration;
mod model;

pub use bigrading::{canonical_bigrading, check_mixed, Bigrading, BigradingAudit};
pub use diagram::{
    diagram_algebra, diagram_filtrations, diagram_types, h1_h2_shape_check, is_fundamental, DiagramDegree, DiagramReport, Fundamentality, ShapeReport,
    H1_SLOTS, H2_SLOTS,
};
pub use filtration::{validate_hodge_structure, Conjugation, Direction, Filtration, HodgeCell, HodgeStructure};
pub use model::{
    bigraded_minimal_model, dual_lie_presentation, weight_count_check, BigradedLiePresentation, BigradedModel, LieBracket, LieGenerator, LieRelation,
    WeightBranch, WeightCount, GENERATOR_TYPES, RELATION_TYPES,
};

use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::dolbeault::DolbeaultError;
use crate::gca::GcaError;
use crate::sullivan::SullivanError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("invalid filtration: {0}")]
    Filtration(String),
    #[error("F^{p} ⊕ conj F^{q} ≠ V in weight {weight}: deficit {deficit}, overlap {overlap}", q = weight + 1 - p)]
    Splitting { weight: i32, p: i32, deficit: usize, overlap: usize },
    #[error("Gr^W_{weight} is not a Hodge structure of weight {weight}: {source}")]
    NotMixed { weight: i32, source: Box<HodgeError> },
    #[error("W_{level} is not defined over the reals")]
    NotReal { level: i32 },
    #[error("d {generator} has the component {component} outside H^(1,1)")]
    NotFundamental { generator: String, component: String },
    #[error("invalid input: {0}")]
    Shape(String),
    #[error(transparent)]
    Dolbeault(#[from] DolbeaultError),
    #[error(transparent)]
    Sullivan(#[from] SullivanError),
    #[error(transparent)]
    Algebra(#[from] GcaError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}
