use serde::Serialize;

use super::bigrading::{canonical_bigrading, Bigrading, BigradingAudit};
use super::filtration::{Conjugation, Direction, Filtration, HodgeCell};
use super::HodgeError;
use crate::cohomology::{cohomology, de_rham_complex, CohomologyTable};
use crate::dolbeault::{build_de_rham_model, TransverseKahlerModelSpec};
use crate::exactfield::{Matrix, Scalar, Subspace};
use crate::gca::{Monomial, Presentation};
use crate::hirsch::{binomial, FilteredComplex, PageEntry};
use crate::sullivan::Type;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fundamentality {
    pub holds: bool,
    /// A generator of `W` with `dw ∉ H^{1,1}`, and its off-type part.
    pub witness: Option<(String, String)>,
}

/// `d(W) ⊆ H^{1,1}`.
pub fn is_fundamental(s: &TransverseKahlerModelSpec) -> Fundamentality {
    let h = s.h();
    for (name, value) in s.w() {
        let off = value.filter(|m| h.monomial_bidegree(m) != Some((1, 1)));
        if !off.is_zero() {
            return Fundamentality { holds: false, witness: Some((name.clone(), h.format(&off))) };
        }
    }
    Fundamentality { holds: true, witness: None }
}

/// Types of the generators of `H ⊗ ∧W`: the bidegree on `H`, `(1,1)` on
/// `W`.
pub fn diagram_types(s: &TransverseKahlerModelSpec) -> Vec<Type> {
    let h = s.h();
    let mut t: Vec<Type> = h.generators().iter().map(|g| g.bidegree.expect("H is bigraded")).collect();
    t.extend(std::iter::repeat((1, 1)).take(s.w().len()));
    t
}

/// `A ⊗ ℂ` for `A = H ⊗ ∧W`, checked to be fundamental.
pub fn diagram_algebra(s: &TransverseKahlerModelSpec) -> Result<(Presentation, Vec<Type>), HodgeError> {
    let f = is_fundamental(s);
    if let Some((generator, component)) = f.witness {
        return Err(HodgeError::NotFundamental { generator, component });
    }
    Ok((build_de_rham_model(s)?.complexified(), diagram_types(s)))
}

fn w_count(m: &Monomial, nh: usize) -> u32 {
    m.factors().iter().filter(|&&(j, _)| j >= nh).map(|&(_, e)| e).sum()
}

fn hodge_p(m: &Monomial, types: &[Type]) -> u32 {
    m.factors().iter().map(|&(j, e)| types[j].0 * e).sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramDegree {
    pub degree: u32,
    pub dim: usize,
    /// `dim W′_i H^r` per listed `i`.
    pub weight: Vec<(i32, usize)>,
    /// `dim F^p H^r` per listed `p`.
    pub hodge: Vec<(i32, usize)>,
    pub slots: Vec<HodgeCell>,
    pub audit: BigradingAudit,
    #[serde(skip)]
    pub bigrading: Bigrading,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramReport {
    pub d0_vanishes: bool,
    /// `E_1^{−l, n+l}` of the filtration by the number of `W` factors.
    pub e1: Vec<PageEntry>,
    /// `dim E_1^{−l,q} = dim H^{q−2l} · C(dim W, l)`.
    pub e1_matches: bool,
    pub degrees: Vec<DiagramDegree>,
}

impl DiagramReport {
    pub fn degree(&self, r: u32) -> Option<&DiagramDegree> {
        self.degrees.iter().find(|d| d.degree == r)
    }
}

/// Classes in `H^r` with a representative spanned by the selected
/// monomials.
fn induced(table: &CohomologyTable, r: usize, keep: &dyn Fn(&Monomial) -> bool) -> Subspace {
    let basis = table.basis(r);
    let units: Vec<Vec<Scalar>> = basis.monomials().iter().enumerate().filter(|(_, m)| keep(m)).map(|(j, _)| Subspace::unit(basis.len(), j)).collect();
    let s = Subspace::span(basis.len(), &units);
    let h = table.homology(r);
    let z = s.intersection(h.kernel()).expect("same ambient space");
    let classes: Vec<Vec<Scalar>> = z.basis_vectors().iter().map(|v| h.class_of(v).expect("cocycle")).collect();
    Subspace::span(h.dim(), &classes)
}

/// The weight filtration `W_k A = ⊕_{l≤k} H ⊗ ∧^l W` and the Hodge
/// filtration from the types on `A ⊗ ℂ`, the first two pages of the weight
/// spectral sequence, and the canonical bigrading of each `H^r(A ⊗ ℂ)`
/// for the shifted weight `W′_i H^r = W_{i−r} H^r`.
pub fn diagram_filtrations(s: &TransverseKahlerModelSpec) -> Result<DiagramReport, HodgeError> {
    let (a, types) = diagram_algebra(s)?;
    let nh = s.h().ngens();
    let dim_w = s.w().len();
    let top = a.cutoff() as usize;

    let (bases, complex) = de_rham_complex(&a);
    let filtered = FilteredComplex::from_bases(complex, &bases, |m| -(w_count(m, nh) as i32));
    let e0 = filtered.page(0);
    let d0_vanishes = e0.entries().iter().all(|e| e0.differential(e.p, e.q).is_none_or(Matrix::is_zero));
    let e1_page = filtered.page(1);
    let mut e1_matches = true;
    for l in 0..=dim_w {
        for n in l..top {
            let expected = s.h().dimension((n - l) as u32)? * binomial(dim_w, l);
            if e1_page.dim(-(l as i32), (n + l) as i32) != expected {
                e1_matches = false;
            }
        }
    }
    let e1 = e1_page.entries().into_iter().filter(|e| ((e.p + e.q) as usize) < top).collect();

    let table = cohomology(&a);
    let mut degrees = Vec::new();
    for r in 0..table.len() {
        let h = table.homology(r);
        let cols: Vec<Vec<Scalar>> =
            table.representatives(r).iter().map(|rep| table.class_of(r, &a.conjugate(rep)).expect("conjugate of a cocycle")).collect();
        let conj = Conjugation::new(Matrix::from_columns(h.dim(), &cols))?;
        let lmax = r.min(dim_w) as i32;
        let ri = r as i32;
        let wl = (0..=lmax).map(|l| (ri + l, induced(&table, r, &|m| w_count(m, nh) as i32 <= l)));
        let w = Filtration::new(Direction::Increasing, h.dim(), wl)?;
        let fl = (0..=ri).map(|p| (p, induced(&table, r, &|m| hodge_p(m, &types) as i32 >= p)));
        let f = Filtration::new(Direction::Decreasing, h.dim(), fl)?;
        let bigrading = canonical_bigrading(&w, &f, &conj)?;
        degrees.push(DiagramDegree {
            degree: r as u32,
            dim: h.dim(),
            weight: w.dims(),
            hodge: f.dims(),
            slots: bigrading.cells(),
            audit: bigrading.audit.clone(),
            bigrading,
        });
    }
    Ok(DiagramReport { d0_vanishes, e1, e1_matches, degrees })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub h1: Vec<HodgeCell>,
    pub h2: Vec<HodgeCell>,
    /// `(degree, p, q)` of every occupied slot outside the allowed lists.
    pub offending: Vec<(u32, i32, i32)>,
    pub holds: bool,
}

pub const H1_SLOTS: [(i32, i32); 3] = [(1, 0), (0, 1), (1, 1)];
pub const H2_SLOTS: [(i32, i32); 6] = [(2, 0), (1, 1), (0, 2), (2, 1), (1, 2), (2, 2)];

/// Occupied slots of the bigradings of `H^1` and `H^2`.
pub fn h1_h2_shape_check(d: &DiagramReport) -> ShapeReport {
    let slots = |r: u32| d.degree(r).map(|x| x.slots.clone()).unwrap_or_default();
    let (h1, h2) = (slots(1), slots(2));
    let mut offending = Vec::new();
    for (r, cells, allowed) in [(1, &h1, &H1_SLOTS[..]), (2, &h2, &H2_SLOTS[..])] {
        for c in cells {
            if !allowed.contains(&(c.p, c.q)) {
                offending.push((r, c.p, c.q));
            }
        }
    }
    ShapeReport { holds: offending.is_empty(), h1, h2, offending }
}
