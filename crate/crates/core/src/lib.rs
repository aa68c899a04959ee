//! Exact-arithmetic engine for graded-commutative differential (bi)graded
//! algebras.
//!
//! The crate builds Hirsch extensions and their filtration spectral
//! sequences, Sullivan minimal and 1-minimal models, Dolbeault-type models of
//! transversely Kähler foliated manifolds with their `∂∂̄`-lemma checks, and
//! Morgan-style mixed Hodge bigradings. All arithmetic is exact over ℚ or the
//! Gaussian rationals ℚ(i).

pub mod exactfield;
pub mod gca;
pub mod cohomology;
pub mod dsl;
pub mod hirsch;
pub mod sullivan;
pub mod dolbeault;
pub mod hodge;
pub mod corpus;
