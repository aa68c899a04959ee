use serde::Serialize;

use crate::cohomology::{cohomology, differential_matrix, CohomologyTable};
use crate::exactfield::{Scalar, Subspace};
use crate::gca::{Differential, Presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// `d = 0`: `A` is its own cohomology.
    ZeroDifferential,
    /// `A ← (ker d^c, d) → (ker d^c / im d^c, 0)` on a bigraded algebra.
    DdcZigZag,
    /// Cohomology representatives generate a subalgebra `S` of cocycles
    /// meeting the coboundaries trivially: `A ← (S, 0) ≅ H(A)`.
    CocycleSubalgebra,
}

/// A verified zig-zag `A ← C → H` of quasi-isomorphisms through degree `up_to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalityCertificate {
    pub strategy: Strategy,
    pub up_to: u32,
    /// Dimensions of the middle algebra `C` per degree.
    pub middle: Vec<usize>,
    pub cohomology: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrategyFailure {
    pub strategy: Strategy,
    pub degree: Option<u32>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FormalityOutcome {
    Formal(FormalityCertificate),
    /// Every strategy failed; this is not a proof of non-formality.
    Undetermined(Vec<StrategyFailure>),
}

impl FormalityOutcome {
    pub fn is_formal(&self) -> bool {
        matches!(self, FormalityOutcome::Formal(_))
    }
}

/// Searches for a formality zig-zag through degree `min(up_to, N−2)`.
pub fn is_formal_certificate(a: &Presentation, up_to: u32) -> FormalityOutcome {
    let up_to = up_to.min(a.cutoff().saturating_sub(2));
    let table = cohomology(a);
    let h: Vec<usize> = (0..=up_to as usize).map(|n| table.dim(n)).collect();
    let mut failures = Vec::new();

    if (0..a.ngens()).all(|i| a.d_of(i).is_zero()) {
        let middle = (0..=up_to as usize).map(|n| table.basis(n).len()).collect();
        return FormalityOutcome::Formal(FormalityCertificate { strategy: Strategy::ZeroDifferential, up_to, middle, cohomology: h });
    }
    failures.push(StrategyFailure { strategy: Strategy::ZeroDifferential, degree: None, reason: "nonzero differential".into() });

    if a.is_bigraded() {
        match ddc_zigzag(a, &table, up_to) {
            Ok(middle) => return FormalityOutcome::Formal(FormalityCertificate { strategy: Strategy::DdcZigZag, up_to, middle, cohomology: h }),
            Err((degree, reason)) => failures.push(StrategyFailure { strategy: Strategy::DdcZigZag, degree: Some(degree), reason }),
        }
    } else {
        failures.push(StrategyFailure { strategy: Strategy::DdcZigZag, degree: None, reason: "not bigraded".into() });
    }

    match cocycle_subalgebra(a, &table, up_to) {
        Ok(middle) => FormalityOutcome::Formal(FormalityCertificate { strategy: Strategy::CocycleSubalgebra, up_to, middle, cohomology: h }),
        Err((degree, reason)) => {
            failures.push(StrategyFailure { strategy: Strategy::CocycleSubalgebra, degree: Some(degree), reason });
            FormalityOutcome::Undetermined(failures)
        }
    }
}

fn meet(v: &Subspace, w: &Subspace) -> Subspace {
    v.intersection(w).expect("same ambient space")
}

fn join(v: &Subspace, w: &Subspace) -> Subspace {
    v.sum(w).expect("same ambient space")
}

fn within(v: &Subspace, w: &Subspace) -> bool {
    v.is_subset(w).expect("same ambient space")
}

/// `K = ker(∂̄ − ∂)`. Checks that `K ↪ A` and `K → K / im(∂̄ − ∂)` are
/// quasi-isomorphisms, the latter a chain map for the zero differential.
fn ddc_zigzag(a: &Presentation, table: &CohomologyTable, up_to: u32) -> Result<Vec<usize>, (u32, String)> {
    let dc = |n: usize| {
        let (src, dst) = (table.basis(n), table.basis(n + 1));
        differential_matrix(a, Differential::Dbar, src, dst).sub(&differential_matrix(a, Differential::Del, src, dst))
    };
    let mut middle = Vec::new();
    let mut prev: Option<Subspace> = None;
    for n in 0..=up_to as usize {
        let deg = n as u32;
        let h = table.homology(n);
        let k = dc(n).kernel();
        let (im_dc, dk) = match &prev {
            Some(pk) => (dc(n - 1).image(), pk.map(table.complex().differential(n - 1))),
            None => (Subspace::zero(k.ambient()), Subspace::zero(k.ambient())),
        };
        let zk = meet(&k, h.kernel());
        if !within(&dk, &im_dc) {
            return Err((deg, "d(ker d^c) is not contained in im d^c".into()));
        }
        if !within(&meet(&zk, h.image()), &dk) || !within(h.kernel(), &join(&zk, h.image())) {
            return Err((deg, "ker d^c -> A is not a quasi-isomorphism".into()));
        }
        if !within(&meet(&zk, &im_dc), &dk) || !within(&k, &join(&zk, &im_dc)) {
            return Err((deg, "ker d^c -> H_{d^c} is not a quasi-isomorphism".into()));
        }
        middle.push(k.dim());
        prev = Some(k);
    }
    Ok(middle)
}

/// `S^n` spanned by the echelon representatives of `H^n` and products
/// `S^i · S^{n−i}`; requires `S^n ⊕ B^n = Z^n`.
fn cocycle_subalgebra(a: &Presentation, table: &CohomologyTable, up_to: u32) -> Result<Vec<usize>, (u32, String)> {
    let mut s: Vec<Subspace> = Vec::new();
    for n in 0..=up_to as usize {
        let basis = table.basis(n);
        let h = table.homology(n);
        let mut vs: Vec<Vec<Scalar>> = h.representatives();
        for i in 1..n {
            for x in s[i].basis_vectors() {
                let px = table.basis(i).to_polynomial(&x);
                for y in s[n - i].basis_vectors() {
                    let py = table.basis(n - i).to_polynomial(&y);
                    vs.push(basis.to_vector(&a.multiply(&px, &py)).expect("degree n product"));
                }
            }
        }
        let sn = Subspace::span(basis.len(), &vs);
        let deg = n as u32;
        if !meet(&sn, h.image()).is_zero() {
            return Err((deg, "products of representatives become exact".into()));
        }
        if sn.dim() != h.dim() {
            return Err((deg, format!("subalgebra has dimension {} but H^{n} has dimension {}", sn.dim(), h.dim())));
        }
        s.push(sn);
    }
    Ok(s.iter().map(Subspace::dim).collect())
}
