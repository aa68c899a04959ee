use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::cohomology::{FiniteComplex, GradedBasis, Homology};
use crate::exactfield::{Matrix, Scalar, Subspace};
use crate::gca::Monomial;

/// A complex with a decreasing filtration given by a filtration degree on
/// each basis vector: `F^p C^n` is spanned by basis vectors of degree ≥ p.
#[derive(Clone, Debug)]
pub struct FilteredComplex {
    complex: FiniteComplex,
    filt: Vec<Vec<i32>>,
}

/// One page `E_r` of the spectral sequence, positions keyed by `(p, q)`
/// with total degree `n = p + q`.
#[derive(Clone, Debug)]
pub struct SpectralPage {
    pub r: u32,
    cells: BTreeMap<(i32, i32), Homology>,
    differentials: BTreeMap<(i32, i32), Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PageEntry {
    pub p: i32,
    pub q: i32,
    pub dim: usize,
}

impl SpectralPage {
    pub fn dim(&self, p: i32, q: i32) -> usize {
        self.cells.get(&(p, q)).map_or(0, Homology::dim)
    }

    pub fn entries(&self) -> Vec<PageEntry> {
        self.cells.iter().map(|(&(p, q), h)| PageEntry { p, q, dim: h.dim() }).collect()
    }

    pub fn nonzero(&self) -> BTreeMap<(i32, i32), usize> {
        self.cells.iter().filter(|(_, h)| h.dim() > 0).map(|(&k, h)| (k, h.dim())).collect()
    }

    /// `d_r` out of position `(p,q)`, when its target is on the page.
    pub fn differential(&self, p: i32, q: i32) -> Option<&Matrix> {
        self.differentials.get(&(p, q))
    }

    /// `Σ_{p+q=n} dim E^{p,q}`.
    pub fn total(&self, n: i32) -> usize {
        self.cells.iter().filter(|(&(p, q), _)| p + q == n).map(|(_, h)| h.dim()).sum()
    }

    /// `d_r ∘ d_r = 0` at every position.
    pub fn squares_to_zero(&self) -> bool {
        let r = self.r as i32;
        self.differentials.iter().all(|(&(p, q), m)| match self.differentials.get(&(p + r, q - r + 1)) {
            Some(next) => next.mul(m).is_zero(),
            None => true,
        })
    }
}

impl FilteredComplex {
    pub fn new(complex: FiniteComplex, filt: Vec<Vec<i32>>) -> Self {
        assert_eq!(filt.len(), complex.dims().len());
        for (n, f) in filt.iter().enumerate() {
            assert_eq!(f.len(), complex.dim(n));
        }
        FilteredComplex { complex, filt }
    }

    /// Builds the filtration from a monomial weight function.
    pub fn from_bases(complex: FiniteComplex, bases: &[GradedBasis], f: impl Fn(&Monomial) -> i32) -> Self {
        let filt = bases.iter().map(|b| b.monomials().iter().map(&f).collect()).collect();
        FilteredComplex::new(complex, filt)
    }

    pub fn complex(&self) -> &FiniteComplex {
        &self.complex
    }

    /// `d` preserves the filtration.
    pub fn is_filtered(&self) -> bool {
        (0..self.complex.top()).all(|n| {
            let d = self.complex.differential(n);
            (0..d.cols()).all(|j| (0..d.rows()).all(|i| d.get(i, j).is_zero() || self.filt[n + 1][i] >= self.filt[n][j]))
        })
    }

    fn range(&self) -> (i32, i32) {
        let all = self.filt.iter().flatten();
        let lo = all.clone().copied().min().unwrap_or(0);
        let hi = all.copied().max().unwrap_or(0);
        (lo, hi)
    }

    fn f(&self, p: i32, n: usize) -> Subspace {
        let dim = self.complex.dim(n);
        let vs: Vec<Vec<Scalar>> = (0..dim).filter(|&i| self.filt[n][i] >= p).map(|i| Subspace::unit(dim, i)).collect();
        Subspace::span(dim, &vs)
    }

    /// `Z_r^{p} C^n = F^p ∩ d^{-1}(F^{p+r})`, equal to `F^p` for `r ≤ 0`.
    fn z(&self, r: i32, p: i32, n: usize) -> Subspace {
        let fp = self.f(p, n);
        if r <= 0 || n + 1 >= self.complex.dims().len() {
            return fp;
        }
        fp.preimage_within(self.complex.differential(n), &self.f(p + r, n + 1))
    }

    fn cell(&self, r: i32, p: i32, n: usize) -> Homology {
        let num = self.z(r, p, n);
        let mut den = self.z(r - 1, p + 1, n);
        if n > 0 {
            let src = self.z(r - 1, p - r + 1, n - 1);
            den = den.sum(&src.map(self.complex.differential(n - 1))).expect("same ambient");
        }
        Homology::new(n, num, den)
    }

    /// Page `E_r` in total degrees below the top of the complex.
    pub fn page(&self, r: u32) -> SpectralPage {
        let (lo, hi) = self.range();
        let top = self.complex.top();
        let ri = r as i32;
        let mut cells = BTreeMap::new();
        for n in 0..top {
            for p in lo..=hi {
                cells.insert((p, n as i32 - p), self.cell(ri, p, n));
            }
        }
        let mut differentials = BTreeMap::new();
        for (&(p, q), h) in &cells {
            let n = (p + q) as usize;
            if let Some(t) = cells.get(&(p + ri, q - ri + 1)) {
                let d = self.complex.differential(n);
                let cols: Vec<Vec<Scalar>> = h
                    .representatives()
                    .iter()
                    .map(|v| t.class_of(&d.apply(v)).expect("d maps Z_r^p into Z_r^{p+r}"))
                    .collect();
                differentials.insert((p, q), Matrix::from_columns(t.dim(), &cols));
            }
        }
        SpectralPage { r, cells, differentials }
    }

    /// `E_∞^{p} = (F^p ∩ ker d) / (F^{p+1} ∩ ker d + F^p ∩ im d)`.
    pub fn e_infinity(&self) -> SpectralPage {
        let (lo, hi) = self.range();
        let mut cells = BTreeMap::new();
        for n in 0..self.complex.top() {
            let ker = self.complex.cocycles(n);
            let im = self.complex.coboundaries(n);
            for p in lo..=hi {
                let num = self.f(p, n).intersection(&ker).expect("ambient");
                let den = self.f(p + 1, n).intersection(&ker).expect("ambient").sum(&self.f(p, n).intersection(&im).expect("ambient")).expect("ambient");
                cells.insert((p, n as i32 - p), Homology::new(n, num, den));
            }
        }
        SpectralPage { r: u32::MAX, cells, differentials: BTreeMap::new() }
    }
}
