//! Hirsch extensions `B = A ⊗ ∧V`, their filtration spectral sequences,
//! and transfer of extensions along quasi-isomorphisms.

mod spectral;

pub use spectral::{FilteredComplex, PageEntry, SpectralPage};

use serde::Serialize;
use thiserror::Error;

use crate::cohomology::{cohomology, de_rham_complex, differential_matrix, GradedBasis, is_quasi_isomorphism, CohomologyError, DgaMorphism, QuasiIsoReport};
use crate::gca::{Differential, GcaError, Monomial, Polynomial, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HirschError {
    #[error("beta({generator}) is not a cocycle")]
    NotACocycle { generator: String },
    #[error("beta({generator}) must have degree {expected}")]
    WrongDegree { generator: String, expected: u32 },
    #[error("beta({generator}) has coefficients outside the base field")]
    FieldViolation { generator: String },
    #[error("cannot lift the class of beta({generator}) through the given map in degree {degree}")]
    Unsolvable { generator: String, degree: u32 },
    #[error(transparent)]
    Algebra(#[from] GcaError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// A base algebra, new generators `V` of a single degree `k`, and
/// `β: V → Z^{k+1}(A)`.
#[derive(Clone, Debug)]
pub struct HirschData {
    base: Presentation,
    degree: u32,
    names: Vec<String>,
    beta: Vec<Polynomial>,
}

impl HirschData {
    pub fn new(base: Presentation, degree: u32, names: Vec<String>, beta: Vec<Polynomial>) -> Result<Self, HirschError> {
        assert_eq!(names.len(), beta.len(), "one beta per generator");
        for (name, b) in names.iter().zip(&beta) {
            match base.homogeneous_degree(b) {
                Some(None) => {}
                Some(Some(d)) if d == degree + 1 => {}
                _ => return Err(HirschError::WrongDegree { generator: name.clone(), expected: degree + 1 }),
            }
            if b.terms().any(|(_, c)| !base.field().admits(c)) {
                return Err(HirschError::FieldViolation { generator: name.clone() });
            }
            if !base.d(b).is_zero() {
                return Err(HirschError::NotACocycle { generator: name.clone() });
            }
        }
        Ok(HirschData { base, degree, names, beta })
    }

    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn beta(&self) -> &[Polynomial] {
        &self.beta
    }

    pub fn dim_v(&self) -> usize {
        self.names.len()
    }

    /// Indices of the new generators inside the extended presentation.
    pub fn new_generators(&self) -> std::ops::Range<usize> {
        self.base.ngens()..self.base.ngens() + self.names.len()
    }
}

/// `B = A ⊗ ∧V` with `d = d_A` on `A` and `d = β` on `V`.
pub fn hirsch_extend(h: &HirschData) -> Result<Presentation, HirschError> {
    let mut b = h.base.clone();
    let bigraded = b.is_bigraded();
    for (name, beta) in h.names.iter().zip(&h.beta) {
        let bideg = if bigraded {
            let bd = beta.terms().next().and_then(|(m, _)| b.monomial_bidegree(m));
            match bd {
                Some((p, q)) if q > 0 && p + q == h.degree + 1 => Some((p, q - 1)),
                _ => return Err(HirschError::Algebra(GcaError::InvalidGenerator { generator: name.clone(), reason: "cannot infer a bidegree".into() })),
            }
        } else {
            None
        };
        let i = b.add_generator(name, h.degree, bideg)?;
        b.set_d(i, beta.clone());
    }
    b.validate()?;
    Ok(b)
}

/// Graded dimension of the free algebra `∧V` on `m` generators of degree
/// `k`, in degree `q`.
pub fn free_dimension(m: usize, k: u32, q: u32) -> usize {
    if q % k != 0 {
        return 0;
    }
    let j = (q / k) as usize;
    if k % 2 == 1 {
        binomial(m, j)
    } else if m == 0 {
        usize::from(j == 0)
    } else {
        binomial(m + j - 1, j)
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, Serialize)]
pub struct HirschSpectralReport {
    /// Dimensions of `E_0`, `E_1`, `E_2` keyed by `(p,q)`.
    pub pages: Vec<Vec<PageEntry>>,
    pub e_infinity: Vec<PageEntry>,
    /// `dim H^p(A) · dim (∧V)^q` at each position of `E_2`.
    pub predicted_e2: Vec<PageEntry>,
    pub e2_matches_prediction: bool,
    /// `dim H^n(B)` for `n < N`.
    pub cohomology: Vec<usize>,
    /// Total degrees where `Σ E_2 ≠ dim H^n(B)`, i.e. where `d_r` with
    /// `r ≥ 2` act nontrivially.
    pub later_differentials: Vec<u32>,
}

/// The spectral sequence of `F^p(B) = A^{≥p} ⊗ ∧V`.
pub fn weight_spectral_sequence(h: &HirschData) -> Result<(HirschSpectralReport, Vec<SpectralPage>), HirschError> {
    let b = hirsch_extend(h)?;
    let base_n = h.base.ngens();
    let a_degree = |m: &Monomial| -> i32 {
        m.factors().iter().filter(|&&(i, _)| i < base_n).map(|&(i, e)| (b.generator(i).degree * e) as i32).sum()
    };
    let (bases, complex) = de_rham_complex(&b);
    let fc = FilteredComplex::from_bases(complex, &bases, a_degree);
    let pages: Vec<SpectralPage> = (0..=2).map(|r| fc.page(r)).collect();
    let einf = fc.e_infinity();
    let ha = cohomology(&h.base).dims();
    let hb = cohomology(&b).dims();
    let e2 = &pages[2];
    let mut predicted = Vec::new();
    let mut matches = true;
    for entry in e2.entries() {
        let want = if entry.p >= 0 && entry.q >= 0 && (entry.p as usize) < ha.len() {
            ha[entry.p as usize] * free_dimension(h.dim_v(), h.degree, entry.q as u32)
        } else {
            0
        };
        matches &= want == entry.dim;
        predicted.push(PageEntry { p: entry.p, q: entry.q, dim: want });
    }
    let later = (0..hb.len()).filter(|&n| e2.total(n as i32) != hb[n]).map(|n| n as u32).collect();
    let report = HirschSpectralReport {
        pages: pages.iter().map(SpectralPage::entries).collect(),
        e_infinity: einf.entries(),
        predicted_e2: predicted,
        e2_matches_prediction: matches,
        cohomology: hb,
        later_differentials: later,
    };
    let mut all = pages;
    all.push(einf);
    Ok((report, all))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransferDirection {
    /// `h` lives over the source of `f`.
    Forward,
    /// `h` lives over the target of `f`.
    Backward,
}

/// The transported extension, the extended map `B_1 → B_2` and its
/// quasi-isomorphism certificate.
#[derive(Clone, Debug)]
pub struct Transfer {
    pub extension: HirschData,
    pub map: DgaMorphism,
    pub certificate: QuasiIsoReport,
}

/// Solves `d γ = target` in degree `n` of `a`.
pub(crate) fn solve_coboundary(a: &Presentation, n: u32, target: &Polynomial) -> Option<Polynomial> {
    if target.is_zero() {
        return Some(Polynomial::zero());
    }
    if n == 0 {
        return None;
    }
    let src = GradedBasis::new(a.basis_unchecked(n - 1));
    let dst = GradedBasis::new(a.basis_unchecked(n));
    let v = dst.to_vector(target)?;
    let x = differential_matrix(a, Differential::D, &src, &dst).solve(&v)?;
    Some(src.to_polynomial(&x))
}

/// Transports a Hirsch extension along `f: A_1 → A_2`.
///
/// Forward: `β_2 = f ∘ β_1` and `v ↦ v`. Backward: each `β_2(v)` is lifted
/// to a cocycle `β_1(v)` of `A_1` with `[f β_1(v)] = [β_2(v)]`, and `v ↦ v +
/// γ_v` with `d γ_v = f β_1(v) − β_2(v)`.
pub fn transfer_extension(f: &DgaMorphism, h: &HirschData, direction: TransferDirection) -> Result<Transfer, HirschError> {
    let (a1, a2) = (f.source(), f.target());
    let k = h.degree;
    let (h1, h2, gammas) = match direction {
        TransferDirection::Forward => {
            let beta2: Vec<Polynomial> = h.beta.iter().map(|b| f.apply(b)).collect();
            let h2 = HirschData::new(a2.clone(), k, h.names.clone(), beta2)?;
            (h.clone(), h2, vec![Polynomial::zero(); h.dim_v()])
        }
        TransferDirection::Backward => {
            let n = (k + 1) as usize;
            let top = a1.cutoff().min(a2.cutoff());
            if k + 1 >= top {
                return Err(CohomologyError::CutoffExceeded { requested: k + 1, available: top.saturating_sub(1) }.into());
            }
            let t1 = cohomology(&a1.with_cutoff(k + 2));
            let t2 = cohomology(&a2.with_cutoff(k + 2));
            let induced = f.induced(n, &t1, &t2);
            let mut beta1 = Vec::new();
            let mut gammas = Vec::new();
            for (name, b2) in h.names.iter().zip(&h.beta) {
                let c = t2.class_of(n, b2).expect("beta is a cocycle");
                let x = induced.solve(&c).ok_or_else(|| HirschError::Unsolvable { generator: name.clone(), degree: k + 1 })?;
                let b1 = t1.basis(n).to_polynomial(&t1.homology(n).lift(&x));
                let diff = f.apply(&b1).minus(b2);
                let g = solve_coboundary(a2, k + 1, &diff).ok_or_else(|| HirschError::Unsolvable { generator: name.clone(), degree: k + 1 })?;
                beta1.push(b1);
                gammas.push(g);
            }
            let h1 = HirschData::new(a1.clone(), k, h.names.clone(), beta1)?;
            (h1, h.clone(), gammas)
        }
    };
    let b1 = hirsch_extend(&h1)?;
    let b2 = hirsch_extend(&h2)?;
    let mut images: Vec<Polynomial> = f.images().to_vec();
    for (j, g) in gammas.iter().enumerate() {
        images.push(Polynomial::generator(a2.ngens() + j).plus(g));
    }
    let map = DgaMorphism::new(b1, b2, images)?;
    let up_to = map.source().cutoff().min(map.target().cutoff()).saturating_sub(1);
    let certificate = is_quasi_isomorphism(&map, up_to)?;
    let extension = match direction {
        TransferDirection::Forward => h2,
        TransferDirection::Backward => h1,
    };
    Ok(Transfer { extension, map, certificate })
}

/// The isomorphism `B_β → B_{β + dγ}`, `v ↦ v + γ_v`, showing that the
/// extension depends only on the classes of `β`.
pub fn rebase_isomorphism(h: &HirschData, gammas: &[Polynomial]) -> Result<DgaMorphism, HirschError> {
    let shifted: Vec<Polynomial> = h.beta.iter().zip(gammas).map(|(b, g)| b.plus(&h.base.d(g))).collect();
    let h2 = HirschData::new(h.base.clone(), h.degree, h.names.clone(), shifted)?;
    let b1 = hirsch_extend(h)?;
    let b2 = hirsch_extend(&h2)?;
    let n = h.base.ngens();
    let mut images: Vec<Polynomial> = (0..n).map(Polynomial::generator).collect();
    for (j, g) in gammas.iter().enumerate() {
        images.push(Polynomial::generator(n + j).minus(g));
    }
    Ok(DgaMorphism::new(b1, b2, images)?)
}
