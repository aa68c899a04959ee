//! Free graded-commutative algebras with a differential.

mod monomial;
mod polynomial;
mod presentation;

pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use presentation::{Differential, Generator, Presentation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcaError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("invalid generator `{generator}`: {reason}")]
    InvalidGenerator { generator: String, reason: String },
    #[error("invalid relation `{0}`")]
    InvalidRelation(String),
    #[error("coefficient {coefficient} in d({generator}) is outside the declared field")]
    FieldViolation { generator: String, coefficient: String },
    #[error("d({generator}) must have degree {expected}, found a term of degree {found}")]
    InhomogeneousDifferential { generator: String, expected: u32, found: u32 },
    #[error("d({generator}) has term {term} of bidegree {bidegree:?}, neither del nor dbar type")]
    BidegreeViolation { generator: String, term: String, bidegree: (u32, u32) },
    #[error("relation ideal not d-stable: d({relation}) = {image}")]
    RelationNotStable { relation: String, image: String },
    #[error("{identity} does not vanish on {generator}: {residue}")]
    NotADifferential { generator: String, identity: &'static str, residue: String },
    #[error("degree {requested} exceeds the cutoff {cutoff}")]
    CutoffExceeded { requested: u32, cutoff: u32 },
    #[error("field mismatch")]
    FieldMismatch,
    #[error("cannot combine bigraded and singly graded presentations")]
    GradingMismatch,
}
