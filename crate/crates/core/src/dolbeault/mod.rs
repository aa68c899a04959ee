//! Models `H ⊗ ∧W` and `H ⊗ ∧(W^{1,0} ⊕ W^{0,1})` of a transversely
//! Kähler foliation, the ∂∂̄-lemma, Bott–Chern cohomology, the `d^c`
//! comparison chain and the real/complex model comparison.

mod chain;
mod ddbar;
mod vaisman;

pub use chain::{dc_subalgebra_chain, Arrow, ArrowCertificate, ChainReport};
pub use ddbar::{bott_chern, ddbar_check, frolicher_check, BottChernCell, BottChernDegree, BottChernReport, DdbarDegree, DdbarReport, FrolicherDegree};
pub use vaisman::{tot_compare, vaisman_tot_compare, TotComparison};

use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::dsl::PresentationFile;
use crate::exactfield::{Field, Scalar};
use crate::gca::{GcaError, Polynomial, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DolbeaultError {
    #[error("invalid model data: {0}")]
    Shape(String),
    #[error("the ∂∂̄-lemma fails on the base in degree {degree}")]
    DdbarFails { degree: u32 },
    #[error(transparent)]
    Algebra(#[from] GcaError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

fn shape(msg: impl Into<String>) -> DolbeaultError {
    DolbeaultError::Shape(msg.into())
}

/// A bigraded algebra `H` with zero differential and conjugation, a real
/// space `W` with basis pairs `(u, Ju)` and `d: W → H²`.
///
/// `W^{1,0}` is spanned by `z = u + i·Ju`; `∂̄z` and `∂̄z̄` are the `(1,1)`
/// and `(0,2)` components of `dz`, `dz̄`.
#[derive(Clone, Debug)]
pub struct TransverseKahlerModelSpec {
    h: Presentation,
    w: Vec<(String, Polynomial)>,
    pairs: Vec<(usize, usize)>,
}

impl TransverseKahlerModelSpec {
    pub fn new(h: Presentation, w: Vec<(String, Polynomial)>, pairs: &[(String, String)]) -> Result<Self, DolbeaultError> {
        if !h.is_bigraded() {
            return Err(shape("H must be bigraded"));
        }
        h.validate()?;
        if let Some(i) = (0..h.ngens()).find(|&i| !h.d_of(i).is_zero()) {
            return Err(shape(format!("H must have zero differential, d {} ≠ 0", h.generator(i).name)));
        }
        for (name, value) in &w {
            if h.index_of(name).is_some() {
                return Err(shape(format!("{name} is already a generator of H")));
            }
            match h.homogeneous_degree(value) {
                Some(None) | Some(Some(2)) => {}
                _ => return Err(shape(format!("d {name} must lie in H^2"))),
            }
            if &h.conjugate(value) != value {
                return Err(shape(format!("d {name} must be real")));
            }
        }
        let find = |n: &str| w.iter().position(|(m, _)| m == n).ok_or_else(|| shape(format!("{n} is not in W")));
        let mut seen = vec![false; w.len()];
        let mut idx = Vec::new();
        for (u, v) in pairs {
            let (i, j) = (find(u)?, find(v)?);
            if i == j || seen[i] || seen[j] {
                return Err(shape(format!("pair ({u}, {v}) reuses a generator of W")));
            }
            seen[i] = true;
            seen[j] = true;
            idx.push((i, j));
        }
        if seen.iter().any(|s| !s) {
            return Err(shape(format!("W has real dimension {} but only {} pairs (u, Ju)", w.len(), idx.len())));
        }
        let spec = TransverseKahlerModelSpec { h, w, pairs: idx };
        build_dolbeault_model(&spec)?;
        Ok(spec)
    }

    pub fn from_file(f: &PresentationFile) -> Result<Self, DolbeaultError> {
        TransverseKahlerModelSpec::new(f.presentation.clone(), f.w.clone(), &f.wpairs)
    }

    pub fn h(&self) -> &Presentation {
        &self.h
    }

    pub fn w(&self) -> &[(String, Polynomial)] {
        &self.w
    }

    /// Index pairs `(u, Ju)` into [`Self::w`].
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `k = dim W^{1,0}`.
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    /// `dz_j = du_j + i·dv_j` for each pair.
    pub fn dz(&self, j: usize) -> Polynomial {
        let (u, v) = self.pairs[j];
        self.w[u].1.plus(&self.w[v].1.scale(&Scalar::i()))
    }

    pub fn to_file(&self) -> PresentationFile {
        let mut f = PresentationFile::plain(self.h.clone());
        f.w = self.w.clone();
        f.wpairs = self.pairs.iter().map(|&(u, v)| (self.w[u].0.clone(), self.w[v].0.clone())).collect();
        f
    }
}

/// `A = H ⊗ ∧W` with `d = 0` on `H`.
pub fn build_de_rham_model(s: &TransverseKahlerModelSpec) -> Result<Presentation, DolbeaultError> {
    let mut a = s.h.forget_bigrading();
    let field = s.w.iter().flat_map(|(_, p)| p.terms().map(|(_, c)| c.clone()).collect::<Vec<_>>()).fold(a.field(), |f, c| {
        if c.is_real() { f } else { Field::Gaussian }
    });
    if field != a.field() {
        a = a.complexified();
    }
    for (name, value) in &s.w {
        let i = a.add_generator(name, 1, None)?;
        a.set_d(i, value.clone());
    }
    a.validate()?;
    Ok(a)
}

/// Name of the `j`-th generator of `W^{1,0}` and of its conjugate.
pub fn w_names(j: usize) -> (String, String) {
    (format!("z{}", j + 1), format!("zb{}", j + 1))
}

/// `B = H ⊗ ∧(W^{1,0} ⊕ W^{0,1})` over ℚ(i).
pub fn build_dolbeault_model(s: &TransverseKahlerModelSpec) -> Result<Presentation, DolbeaultError> {
    let mut b = s.h.complexified();
    for j in 0..s.k() {
        let (zn, zbn) = w_names(j);
        if b.index_of(&zn).is_some() || b.index_of(&zbn).is_some() {
            return Err(shape(format!("{zn}/{zbn} clash with generators of H")));
        }
        let z = b.add_generator(&zn, 1, Some((1, 0)))?;
        let zb = b.add_generator(&zbn, 1, Some((0, 1)))?;
        b.set_conjugate(z, zb);
        let dz = s.dz(j);
        let dzb = b.conjugate(&dz);
        b.set_d(z, dz);
        b.set_d(zb, dzb);
    }
    b.validate()?;
    Ok(b)
}

/// `dim H^{p,q}_B` of the zero-differential algebra `H`.
pub fn basic_hodge_numbers(s: &TransverseKahlerModelSpec) -> Vec<crate::cohomology::BidegreeDim> {
    crate::cohomology::bigraded_cohomology(&s.h, crate::gca::Differential::Dbar).dims()
}
