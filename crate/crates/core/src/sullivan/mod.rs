//! Minimal and 1-minimal models, built as towers of Hirsch extensions, and
//! formality certificates.

mod build;
mod formality;

pub use build::{monomial_type, TowerStep, Type};
pub use formality::{is_formal_certificate, FormalityCertificate, FormalityOutcome, StrategyFailure};


use serde::Serialize;
use thiserror::Error;

use crate::cohomology::{is_k_quasi_isomorphism, is_quasi_isomorphism, CohomologyError, DgaMorphism, QuasiIsoReport};
use crate::gca::{GcaError, Presentation};
use build::Builder;

/// Cap on the number of killing rounds in a single degree.
pub const MAX_ROUNDS: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SullivanError {
    #[error("H^0 has dimension {dim}, expected 1")]
    NotConnected { dim: usize },
    #[error("degree bound {requested} exceeds N-2 = {available}")]
    CutoffExceeded { requested: u32, available: u32 },
    #[error("no stable tower in degree {degree} after {rounds} rounds")]
    Resource { degree: u32, rounds: u32 },
    #[error("invalid type assignment: {0}")]
    Typing(String),
    #[error(transparent)]
    Algebra(#[from] GcaError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// `φ: ℳ → A` with `ℳ` minimal and `φ` a quasi-isomorphism up to `up_to`.
#[derive(Clone, Debug)]
pub struct MinimalModel {
    pub model: Presentation,
    pub map: DgaMorphism,
    /// Type of each generator of `ℳ`, `(0,0)` throughout for untyped targets.
    pub types: Vec<Type>,
    pub up_to: u32,
    pub tower: Vec<TowerStep>,
    /// False for a 1-minimal model whose stage limit cut the tower short.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCount {
    pub degree: u32,
    pub generators: usize,
}

impl MinimalModel {
    /// Number of generators in each degree `1..=up_to`.
    pub fn generator_counts(&self) -> Vec<DegreeCount> {
        (1..=self.up_to)
            .map(|degree| DegreeCount { degree, generators: self.model.generators().iter().filter(|g| g.degree == degree).count() })
            .collect()
    }

    /// The sub-DGA generated by the first `len` tower steps.
    pub fn stage(&self, len: usize) -> Presentation {
        let keep: usize = self.tower.iter().take(len).map(|s| s.generators.len()).sum();
        let mut p = Presentation::new(self.model.field(), self.model.cutoff(), false);
        for i in 0..keep {
            let g = self.model.generator(i);
            p.add_generator(&g.name, g.degree, None).expect("distinct names");
        }
        for i in 0..keep {
            p.set_d(i, self.model.d_of(i).clone());
        }
        p
    }

    pub fn certificate(&self) -> Result<QuasiIsoReport, SullivanError> {
        if self.up_to == 1 && !self.complete {
            return Ok(is_k_quasi_isomorphism(&self.map, 1)?);
        }
        Ok(is_quasi_isomorphism(&self.map, self.up_to)?)
    }
}

fn check_bound(a: &Presentation, up_to: u32) -> Result<(), SullivanError> {
    let available = a.cutoff().saturating_sub(2);
    if up_to > available {
        return Err(SullivanError::CutoffExceeded { requested: up_to, available });
    }
    Ok(())
}

/// Minimal model of `a` through degree `up_to ≤ N−2`.
pub fn minimal_model(a: &Presentation, up_to: u32) -> Result<MinimalModel, SullivanError> {
    build_model(a, None, up_to, None, None)
}

/// As [`minimal_model`], with echelon tie-breaking replaced by a seeded
/// random change of basis.
pub fn minimal_model_seeded(a: &Presentation, up_to: u32, seed: u64) -> Result<MinimalModel, SullivanError> {
    build_model(a, None, up_to, None, Some(seed))
}

/// Minimal model of `a` respecting an additive grading by types
/// `(s,t)` on the generators of `a`, preserved by `d`. Each generator of
/// the model inherits a type.
pub fn typed_minimal_model(a: &Presentation, types: &[Type], up_to: u32) -> Result<MinimalModel, SullivanError> {
    build_model(a, Some(types), up_to, None, None)
}

/// Tower of degree-1 extensions: stage 1 adjoins closed generators for
/// `H^1`, each further stage kills the kernel of `H^2(ℳ) → H^2(A)`.
pub fn one_minimal_model(a: &Presentation, stages: u32) -> Result<MinimalModel, SullivanError> {
    check_bound(a, 1)?;
    build_model(a, None, 1, Some(stages), None)
}

pub fn typed_one_minimal_model(a: &Presentation, types: &[Type], stages: u32) -> Result<MinimalModel, SullivanError> {
    check_bound(a, 1)?;
    build_model(a, Some(types), 1, Some(stages), None)
}

fn build_model(a: &Presentation, types: Option<&[Type]>, up_to: u32, stages: Option<u32>, seed: Option<u64>) -> Result<MinimalModel, SullivanError> {
    check_bound(a, up_to)?;
    let mut b = Builder::new(a, types, MAX_ROUNDS, seed)?;
    if stages == Some(0) {
        return b.finish(up_to, false);
    }
    let complete = b.run(up_to, stages)?;
    b.finish(up_to, complete)
}

/// No generator has a linear term in its differential.
pub fn is_minimal(a: &Presentation) -> bool {
    (0..a.ngens()).all(|i| a.d_of(i).terms().all(|(m, _)| a.monomial_degree(m) == 0 || m.length() >= 2))
}

/// Generators can be ordered so that each `d x_i` only involves earlier
/// generators; the witness is one such order.
pub fn tower_order(a: &Presentation) -> Option<Vec<usize>> {
    let n = a.ngens();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n).find(|&i| !placed[i] && a.d_of(i).terms().all(|(m, _)| m.factors().iter().all(|&(j, _)| placed[j])))?;
        placed[next] = true;
        order.push(next);
    }
    Some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Field;
    use crate::gca::{Monomial, Polynomial};

    #[test]
    fn sphere_model_gets_the_cubic_generator() {
        let mut a = Presentation::new(Field::Rational, 6, false);
        a.add_generator("e", 2, None).unwrap();
        a.add_relation(Monomial::power(0, 2));
        let m = minimal_model(&a, 4).unwrap();
        let counts: Vec<usize> = m.generator_counts().iter().map(|c| c.generators).collect();
        assert_eq!(counts, vec![0, 1, 1, 0]);
        assert!(is_minimal(&m.model));
        assert!(m.certificate().unwrap().holds);
    }

    #[test]
    fn linear_differential_is_not_minimal() {
        let mut a = Presentation::new(Field::Rational, 4, false);
        a.add_generator("x", 1, None).unwrap();
        let e = a.add_generator("e", 2, None).unwrap();
        a.set_d(0, Polynomial::generator(e));
        assert!(!is_minimal(&a));
    }
}
