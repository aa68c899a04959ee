use serde::Serialize;

use crate::cohomology::{bidegree_bases, bigraded_cohomology, cohomology, differential_matrix, total_complex, GradedBasis};
use crate::exactfield::{Matrix, Scalar, Subspace};
use crate::gca::{Differential, Presentation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DdbarDegree {
    pub degree: u32,
    /// `dim(ker ∂ ∩ ker ∂̄ ∩ im d)`.
    pub closed_exact: usize,
    /// `dim(im ∂∂̄)`.
    pub ddbar_exact: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DdbarReport {
    pub degrees: Vec<DdbarDegree>,
    pub holds: bool,
    pub first_failure: Option<u32>,
}

fn meet(a: &Subspace, b: &Subspace) -> Subspace {
    a.intersection(b).expect("same ambient space")
}

/// `ker ∂ ∩ ker ∂̄ ∩ im d = im ∂∂̄` in every total degree `n < N`.
pub fn ddbar_check(b: &Presentation) -> DdbarReport {
    assert!(b.is_bigraded(), "the ∂∂̄-lemma needs a bigraded presentation");
    let (bases, d) = total_complex(b, Differential::D);
    let mat = |w: Differential, n: usize| differential_matrix(b, w, &bases[n], &bases[n + 1]);
    let mut degrees = Vec::new();
    for n in 0..b.cutoff() as usize {
        let ker = meet(&mat(Differential::Del, n).kernel(), &mat(Differential::Dbar, n).kernel());
        let (im_d, im_ddbar) = if n == 0 {
            (Subspace::zero(bases[0].len()), Subspace::zero(bases[0].len()))
        } else if n == 1 {
            (d.differential(0).image(), Subspace::zero(bases[1].len()))
        } else {
            (d.differential(n - 1).image(), mat(Differential::Del, n - 1).mul(&mat(Differential::Dbar, n - 2)).image())
        };
        let lhs = meet(&ker, &im_d);
        assert!(im_ddbar.is_subset(&lhs).expect("same ambient space"), "im ∂∂̄ ⊄ ker ∂ ∩ ker ∂̄ ∩ im d");
        degrees.push(DdbarDegree { degree: n as u32, closed_exact: lhs.dim(), ddbar_exact: im_ddbar.dim(), holds: lhs.dim() == im_ddbar.dim() });
    }
    let first_failure = degrees.iter().find(|d| !d.holds).map(|d| d.degree);
    DdbarReport { holds: first_failure.is_none(), degrees, first_failure }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BottChernCell {
    pub p: u32,
    pub q: u32,
    pub dim: usize,
    pub dolbeault: usize,
    /// `H_BC^{p,q} → H_∂̄^{p,q}` is an isomorphism.
    pub to_dolbeault_iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BottChernDegree {
    pub degree: u32,
    pub bott_chern: usize,
    pub de_rham: usize,
    /// `⊕_{p+q=n} H_BC^{p,q} → H^n` is an isomorphism.
    pub to_de_rham_iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BottChernReport {
    pub cells: Vec<BottChernCell>,
    pub degrees: Vec<BottChernDegree>,
    pub all_iso: bool,
}

fn is_iso(m: &Matrix, src: usize, dst: usize) -> bool {
    src == dst && m.rank() == src
}

/// `H_BC^{p,q} = (ker ∂ ∩ ker ∂̄) / im ∂∂̄` for `p+q < N` with the natural
/// maps to Dolbeault and de Rham cohomology.
pub fn bott_chern(b: &Presentation) -> BottChernReport {
    assert!(b.is_bigraded(), "Bott–Chern cohomology needs a bigraded presentation");
    let n_top = b.cutoff();
    let bases = bidegree_bases(b);
    let dolb = bigraded_cohomology(b, Differential::Dbar);
    let dr = cohomology(b);
    let empty = GradedBasis::new(Vec::new());
    let basis = |p: i64, q: i64| if p < 0 || q < 0 { &empty } else { bases.get(&(p as u32, q as u32)).unwrap_or(&empty) };
    let mut cells = Vec::new();
    let mut degree_cols: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); n_top as usize];
    for n in 0..n_top {
        for p in 0..=n {
            let q = n - p;
            let (pi, qi) = (p as i64, q as i64);
            let here = basis(pi, qi);
            let del = differential_matrix(b, Differential::Del, here, basis(pi + 1, qi));
            let dbar = differential_matrix(b, Differential::Dbar, here, basis(pi, qi + 1));
            let ker = meet(&del.kernel(), &dbar.kernel());
            let im = differential_matrix(b, Differential::Del, basis(pi - 1, qi), here)
                .mul(&differential_matrix(b, Differential::Dbar, basis(pi - 1, qi - 1), basis(pi - 1, qi)))
                .image();
            let h = crate::cohomology::Homology::new(n as usize, ker, im);
            let reps: Vec<Vec<Scalar>> = h.representatives();
            let (dbasis, dh) = dolb.cell(p, q).expect("cell below the cutoff");
            let cols: Vec<Vec<Scalar>> = reps
                .iter()
                .map(|v| {
                    let poly = here.to_polynomial(v);
                    dh.class_of(&dbasis.to_vector(&poly).expect("same cell")).expect("∂̄-closed")
                })
                .collect();
            let to_dolb = Matrix::from_columns(dh.dim(), &cols);
            cells.push(BottChernCell { p, q, dim: h.dim(), dolbeault: dh.dim(), to_dolbeault_iso: is_iso(&to_dolb, h.dim(), dh.dim()) });
            for v in &reps {
                let poly = here.to_polynomial(v);
                degree_cols[n as usize].push(dr.class_of(n as usize, &poly).expect("d-closed"));
            }
        }
    }
    let degrees: Vec<BottChernDegree> = degree_cols
        .iter()
        .enumerate()
        .map(|(n, cols)| {
            let m = Matrix::from_columns(dr.dim(n), cols);
            BottChernDegree { degree: n as u32, bott_chern: cols.len(), de_rham: dr.dim(n), to_de_rham_iso: is_iso(&m, cols.len(), dr.dim(n)) }
        })
        .collect();
    let all_iso = cells.iter().all(|c| c.to_dolbeault_iso) && degrees.iter().all(|d| d.to_de_rham_iso);
    BottChernReport { cells, degrees, all_iso }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrolicherDegree {
    pub degree: u32,
    pub hodge_sum: usize,
    pub betti: usize,
}

impl FrolicherDegree {
    pub fn holds(&self) -> bool {
        self.hodge_sum >= self.betti
    }

    pub fn is_equality(&self) -> bool {
        self.hodge_sum == self.betti
    }
}

/// `Σ_{p+q=r} dim H^{p,q}_∂̄` against `dim H^r(Tot)` for `r < N`.
pub fn frolicher_check(b: &Presentation) -> Vec<FrolicherDegree> {
    let hodge = bigraded_cohomology(b, Differential::Dbar).total_dims();
    let betti = cohomology(b).dims();
    betti.iter().enumerate().map(|(r, &bt)| FrolicherDegree { degree: r as u32, hodge_sum: hodge.get(r).copied().unwrap_or(0), betti: bt }).collect()
}
