use serde::Serialize;

use super::{cohomology, induced_defect, linear_map_matrix, CohomologyError, CohomologyTable, HomologyDefect};
use crate::exactfield::Matrix;
use crate::gca::{Polynomial, Presentation};

/// An algebra map given on generators, checked to commute with `d`.
#[derive(Clone, Debug)]
pub struct DgaMorphism {
    source: Presentation,
    target: Presentation,
    images: Vec<Polynomial>,
}

impl DgaMorphism {
    pub fn new(source: Presentation, target: Presentation, images: Vec<Polynomial>) -> Result<Self, CohomologyError> {
        if images.len() != source.ngens() {
            return Err(CohomologyError::ImageCount { expected: source.ngens(), found: images.len() });
        }
        if source.field() > target.field() {
            return Err(CohomologyError::FieldMismatch);
        }
        let check_bidegree = source.is_bigraded() && target.is_bigraded();
        for (i, (g, img)) in source.generators().iter().zip(&images).enumerate() {
            for (m, _) in img.terms() {
                if target.monomial_degree(m) != g.degree {
                    return Err(CohomologyError::NotGraded { generator: g.name.clone() });
                }
                if check_bidegree && target.monomial_bidegree(m) != g.bidegree {
                    return Err(CohomologyError::NotGraded { generator: g.name.clone() });
                }
            }
            let lhs = source.map_polynomial(source.d_of(i), &images, &target);
            let rhs = target.d(img);
            if lhs != rhs {
                return Err(CohomologyError::NotAChainMap { generator: g.name.clone(), residue: target.format(&lhs.minus(&rhs)) });
            }
        }
        for r in source.relations() {
            let img = source.map_polynomial(&Polynomial::monomial(r.clone()), &images, &target);
            if !img.is_zero() {
                return Err(CohomologyError::RelationNotPreserved { relation: source.format_monomial(r) });
            }
        }
        Ok(DgaMorphism { source, target, images })
    }

    pub fn identity(a: &Presentation) -> Self {
        let images = (0..a.ngens()).map(Polynomial::generator).collect();
        DgaMorphism { source: a.clone(), target: a.clone(), images }
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        self.source.map_polynomial(p, &self.images, &self.target)
    }

    /// `after ∘ self`.
    pub fn then(&self, after: &DgaMorphism) -> Result<DgaMorphism, CohomologyError> {
        let images = self.images.iter().map(|p| after.apply(p)).collect();
        DgaMorphism::new(self.source.clone(), after.target.clone(), images)
    }

    /// Matrix of the morphism in degree `n` between the given tables' bases.
    pub fn degree_matrix(&self, n: usize, src: &CohomologyTable, tgt: &CohomologyTable) -> Matrix {
        linear_map_matrix(src.basis(n), tgt.basis(n), |m| self.apply(&Polynomial::monomial(m.clone())))
    }

    /// Matrix of `H^n(source) → H^n(target)` in representative bases.
    pub fn induced(&self, n: usize, src: &CohomologyTable, tgt: &CohomologyTable) -> Matrix {
        super::induced_map(src.homology(n), tgt.homology(n), &self.degree_matrix(n, src, tgt))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DefectKind {
    Kernel,
    Cokernel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiIsoFailure {
    pub degree: u32,
    pub kind: DefectKind,
    /// A cocycle representing the offending class (in the source for
    /// `Kernel`, in the target for `Cokernel`).
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiIsoReport {
    pub holds: bool,
    pub up_to: u32,
    pub failure: Option<QuasiIsoFailure>,
}

fn max_reported(f: &DgaMorphism) -> u32 {
    f.source.cutoff().min(f.target.cutoff()).saturating_sub(1)
}

fn check(f: &DgaMorphism, iso_through: u32, inject_at: Option<u32>) -> Result<QuasiIsoReport, CohomologyError> {
    let last = inject_at.unwrap_or(iso_through);
    if last > max_reported(f) {
        return Err(CohomologyError::CutoffExceeded { requested: last, available: max_reported(f) });
    }
    let src = cohomology(&f.source.with_cutoff(last + 1));
    let tgt = cohomology(&f.target.with_cutoff(last + 1));
    for n in 0..=last {
        let m = f.degree_matrix(n as usize, &src, &tgt);
        let surj = n <= iso_through;
        if let Some(defect) = induced_defect(src.homology(n as usize), tgt.homology(n as usize), &m, surj) {
            let (kind, witness) = match defect {
                HomologyDefect::Kernel(v) => (DefectKind::Kernel, f.source.format(&src.basis(n as usize).to_polynomial(&v))),
                HomologyDefect::Cokernel(v) => (DefectKind::Cokernel, f.target.format(&tgt.basis(n as usize).to_polynomial(&v))),
            };
            return Ok(QuasiIsoReport { holds: false, up_to: iso_through, failure: Some(QuasiIsoFailure { degree: n, kind, witness }) });
        }
    }
    Ok(QuasiIsoReport { holds: true, up_to: iso_through, failure: None })
}

/// Whether `f` induces isomorphisms `H^j` for all `j ≤ up_to`.
pub fn is_quasi_isomorphism(f: &DgaMorphism, up_to: u32) -> Result<QuasiIsoReport, CohomologyError> {
    check(f, up_to, None)
}

/// Isomorphisms on `H^j` for `j ≤ k` and injective on `H^{k+1}`.
pub fn is_k_quasi_isomorphism(f: &DgaMorphism, k: u32) -> Result<QuasiIsoReport, CohomologyError> {
    check(f, k, Some(k + 1))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KunnethReport {
    pub holds: bool,
    pub product: Vec<usize>,
    pub convolution: Vec<usize>,
}

/// Compares the cohomology of `a ⊗ b` with the convolution of the factors'
/// Betti numbers in degrees below the common cutoff.
pub fn kunneth_check(a: &Presentation, b: &Presentation) -> Result<KunnethReport, CohomologyError> {
    let t = Presentation::tensor(a, b)?;
    let n = t.cutoff() as usize;
    let ha = cohomology(&a.with_cutoff(t.cutoff())).dims();
    let hb = cohomology(&b.with_cutoff(t.cutoff())).dims();
    let product = cohomology(&t).dims();
    let convolution: Vec<usize> = (0..n).map(|k| (0..=k).map(|i| ha[i] * hb[k - i]).sum()).collect();
    Ok(KunnethReport { holds: product == convolution, product, convolution })
}
