use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use super::{FiniteComplex, Homology};
use crate::exactfield::{Matrix, Scalar};
use crate::gca::{Differential, Monomial, Polynomial, Presentation};

/// An ordered monomial basis with reverse lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedBasis {
    pub fn new(monomials: Vec<Monomial>) -> Self {
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        GradedBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinate vector of `p`, or `None` if some monomial lies outside
    /// the basis.
    pub fn to_vector(&self, p: &Polynomial) -> Option<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); self.len()];
        for (m, c) in p.terms() {
            v[self.position(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn to_polynomial(&self, v: &[Scalar]) -> Polynomial {
        self.monomials.iter().cloned().zip(v.iter().cloned()).collect()
    }
}

/// Matrix of a linear map `src → dst` given on basis monomials.
pub fn linear_map_matrix(src: &GradedBasis, dst: &GradedBasis, f: impl Fn(&Monomial) -> Polynomial) -> Matrix {
    let cols: Vec<Vec<Scalar>> = src
        .monomials()
        .iter()
        .map(|m| dst.to_vector(&f(m)).expect("image outside the target basis"))
        .collect();
    Matrix::from_columns(dst.len(), &cols)
}

pub fn differential_matrix(a: &Presentation, which: Differential, src: &GradedBasis, dst: &GradedBasis) -> Matrix {
    linear_map_matrix(src, dst, |m| a.apply(&Polynomial::monomial(m.clone()), which))
}

/// Monomial bases of every degree `0..=N`.
pub fn degree_bases(a: &Presentation) -> Vec<GradedBasis> {
    (0..=a.cutoff()).map(|n| GradedBasis::new(a.basis(n).expect("within cutoff"))).collect()
}

/// Monomial bases of every bidegree `(p,q)` with `p+q ≤ N`.
pub fn bidegree_bases(a: &Presentation) -> BTreeMap<(u32, u32), GradedBasis> {
    let mut cells: BTreeMap<(u32, u32), Vec<Monomial>> = BTreeMap::new();
    for n in 0..=a.cutoff() {
        for p in 0..=n {
            cells.entry((p, n - p)).or_default();
        }
        for m in a.basis(n).expect("within cutoff") {
            let b = a.monomial_bidegree(&m).expect("bigraded presentation");
            cells.entry(b).or_default().push(m);
        }
    }
    cells.into_iter().map(|(k, v)| (k, GradedBasis::new(v))).collect()
}

/// The complex `(A^{≤N}, d)` of a presentation with its monomial bases.
pub fn de_rham_complex(a: &Presentation) -> (Vec<GradedBasis>, FiniteComplex) {
    total_complex(a, Differential::D)
}

/// `(A^{≤N}, δ)` graded by total degree, for `δ` one of `d`, `∂`, `∂̄`.
pub fn total_complex(a: &Presentation, which: Differential) -> (Vec<GradedBasis>, FiniteComplex) {
    let bases = degree_bases(a);
    let d = bases.windows(2).map(|w| differential_matrix(a, which, &w[0], &w[1])).collect();
    let dims = bases.iter().map(GradedBasis::len).collect();
    (bases, FiniteComplex::new(dims, d))
}

/// Cohomology of a presentation in degrees `0..N`.
#[derive(Clone, Debug)]
pub struct CohomologyTable {
    bases: Vec<GradedBasis>,
    complex: FiniteComplex,
    homology: Vec<Homology>,
}

pub fn cohomology(a: &Presentation) -> CohomologyTable {
    let (bases, complex) = de_rham_complex(a);
    let homology = complex.reported_degrees().map(|n| complex.homology(n)).collect();
    CohomologyTable { bases, complex, homology }
}

impl CohomologyTable {
    /// Highest reported degree plus one (the cutoff).
    pub fn len(&self) -> usize {
        self.homology.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homology.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.homology.iter().map(Homology::dim).collect()
    }

    pub fn dim(&self, n: usize) -> usize {
        self.homology[n].dim()
    }

    pub fn homology(&self, n: usize) -> &Homology {
        &self.homology[n]
    }

    pub fn basis(&self, n: usize) -> &GradedBasis {
        &self.bases[n]
    }

    pub fn complex(&self) -> &FiniteComplex {
        &self.complex
    }

    pub fn representatives(&self, n: usize) -> Vec<Polynomial> {
        self.homology[n].representatives().iter().map(|v| self.bases[n].to_polynomial(v)).collect()
    }

    /// Class coordinates of a degree-`n` element, `None` unless a cocycle.
    pub fn class_of(&self, n: usize, p: &Polynomial) -> Option<Vec<Scalar>> {
        self.homology[n].class_of(&self.bases[n].to_vector(p)?)
    }

    pub fn is_exact(&self, n: usize, p: &Polynomial) -> bool {
        self.bases[n].to_vector(p).is_some_and(|v| self.homology[n].is_exact(&v))
    }
}

/// Cohomology of `∂` or `∂̄` per bidegree `(p,q)` with `p+q < N`.
#[derive(Clone, Debug)]
pub struct BigradedTable {
    which: Differential,
    cells: BTreeMap<(u32, u32), (GradedBasis, Homology)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BidegreeDim {
    pub p: u32,
    pub q: u32,
    pub dim: usize,
}

pub fn bigraded_cohomology(a: &Presentation, which: Differential) -> BigradedTable {
    assert!(a.is_bigraded(), "bigraded cohomology needs a bigraded presentation");
    let n = a.cutoff();
    let bases = bidegree_bases(a);
    let step = |(p, q): (u32, u32)| match which {
        Differential::Dbar => (p, q + 1),
        Differential::Del => (p + 1, q),
        Differential::D => panic!("total differential is not bihomogeneous"),
    };
    let mut cells = BTreeMap::new();
    for p in 0..n {
        for q in 0..n - p {
            let here = (p, q);
            let next = step(here);
            let prev = match which {
                Differential::Dbar if q > 0 => Some((p, q - 1)),
                Differential::Del if p > 0 => Some((p - 1, q)),
                _ => None,
            };
            let out = differential_matrix(a, which, &bases[&here], &bases[&next]);
            let kernel = out.kernel();
            let image = match prev {
                Some(pr) => differential_matrix(a, which, &bases[&pr], &bases[&here]).image(),
                None => crate::exactfield::Subspace::zero(bases[&here].len()),
            };
            let h = Homology::new((p + q) as usize, kernel, image);
            cells.insert(here, (bases[&here].clone(), h));
        }
    }
    BigradedTable { which, cells }
}

impl BigradedTable {
    pub fn differential(&self) -> Differential {
        self.which
    }

    pub fn dim(&self, p: u32, q: u32) -> usize {
        self.cells.get(&(p, q)).map_or(0, |(_, h)| h.dim())
    }

    pub fn contains(&self, p: u32, q: u32) -> bool {
        self.cells.contains_key(&(p, q))
    }

    pub fn cell(&self, p: u32, q: u32) -> Option<(&GradedBasis, &Homology)> {
        self.cells.get(&(p, q)).map(|(b, h)| (b, h))
    }

    pub fn dims(&self) -> Vec<BidegreeDim> {
        self.cells.iter().map(|(&(p, q), (_, h))| BidegreeDim { p, q, dim: h.dim() }).collect()
    }

    pub fn nonzero(&self) -> BTreeMap<(u32, u32), usize> {
        self.cells.iter().filter(|(_, (_, h))| h.dim() > 0).map(|(&k, (_, h))| (k, h.dim())).collect()
    }

    /// `Σ_{p+q=r} dim H^{p,q}` for `r < N`.
    pub fn total_dims(&self) -> Vec<usize> {
        let top = self.cells.keys().map(|&(p, q)| p + q).max().map_or(0, |t| t as usize + 1);
        let mut out = vec![0; top];
        for (&(p, q), (_, h)) in &self.cells {
            out[(p + q) as usize] += h.dim();
        }
        out
    }

    pub fn representatives(&self, p: u32, q: u32) -> Vec<Polynomial> {
        match self.cells.get(&(p, q)) {
            Some((b, h)) => h.representatives().iter().map(|v| b.to_polynomial(v)).collect(),
            None => Vec::new(),
        }
    }
}
