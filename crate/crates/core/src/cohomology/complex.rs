use crate::exactfield::{Matrix, Scalar, Subspace};

/// A bounded cochain complex of finite-dimensional spaces `C^0 → … → C^top`.
///
/// Cohomology is only reported in degrees below `top`, where the outgoing
/// differential is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteComplex {
    dims: Vec<usize>,
    d: Vec<Matrix>,
}

impl FiniteComplex {
    /// `d[n]` maps `C^n` to `C^{n+1}`; `d.len() + 1 == dims.len()`.
    pub fn new(dims: Vec<usize>, d: Vec<Matrix>) -> Self {
        assert_eq!(d.len() + 1, dims.len().max(1), "differential count");
        for (n, m) in d.iter().enumerate() {
            assert_eq!((m.rows(), m.cols()), (dims[n + 1], dims[n]), "differential shape in degree {n}");
        }
        FiniteComplex { dims, d }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn differential(&self, n: usize) -> &Matrix {
        &self.d[n]
    }

    /// Largest degree carrying a space.
    pub fn top(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    /// Degrees with trustworthy cohomology: `0..top`.
    pub fn reported_degrees(&self) -> std::ops::Range<usize> {
        0..self.top()
    }

    pub fn is_differential(&self) -> bool {
        self.d.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }

    pub fn cocycles(&self, n: usize) -> Subspace {
        self.d[n].kernel()
    }

    pub fn coboundaries(&self, n: usize) -> Subspace {
        if n == 0 {
            Subspace::zero(self.dims[0])
        } else {
            self.d[n - 1].image()
        }
    }

    pub fn homology(&self, n: usize) -> Homology {
        assert!(n < self.top(), "degree {n} is at or above the top of the complex");
        Homology::new(n, self.cocycles(n), self.coboundaries(n))
    }

    pub fn betti(&self) -> Vec<usize> {
        self.reported_degrees().map(|n| self.homology(n).dim()).collect()
    }
}

/// `ker / im` in one degree, with representatives given by the echelon
/// complement of the coboundaries inside the cocycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    degree: usize,
    kernel: Subspace,
    image: Subspace,
    complement: Subspace,
}

impl Homology {
    pub fn new(degree: usize, kernel: Subspace, image: Subspace) -> Self {
        let reps = kernel.quotient_basis(&image).expect("coboundaries are cocycles");
        let complement = Subspace::span(kernel.ambient(), &reps);
        Homology { degree, kernel, image, complement }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.complement.dim()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn image(&self) -> &Subspace {
        &self.image
    }

    pub fn ambient(&self) -> usize {
        self.kernel.ambient()
    }

    pub fn representatives(&self) -> Vec<Vec<Scalar>> {
        self.complement.basis_vectors()
    }

    /// Coordinates of the class of `v` in the representative basis, or
    /// `None` when `v` is not a cocycle.
    pub fn class_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.kernel.contains(v) {
            return None;
        }
        let r = self.image.reduce(v);
        Some(self.complement.coordinates(&r).expect("reduced cocycle lies in the complement"))
    }

    pub fn is_exact(&self, v: &[Scalar]) -> bool {
        self.image.contains(v)
    }

    /// Cocycle with the given class coordinates.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        self.complement.combine(coords)
    }
}

/// Matrix of the map induced on cohomology by a cochain map `f` in one
/// degree (columns indexed by source classes).
pub fn induced_map(source: &Homology, target: &Homology, f: &Matrix) -> Matrix {
    let cols: Vec<Vec<Scalar>> = source
        .representatives()
        .iter()
        .map(|r| target.class_of(&f.apply(r)).expect("cochain map sends cocycles to cocycles"))
        .collect();
    Matrix::from_columns(target.dim(), &cols)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyDefect {
    /// A nonzero source class mapped to zero (cocycle vector in the source).
    Kernel(Vec<Scalar>),
    /// A target class not in the image (cocycle vector in the target).
    Cokernel(Vec<Scalar>),
}

/// Checks that the induced map is injective (and surjective when
/// `surjective` is set), returning a witness cocycle otherwise.
pub fn induced_defect(source: &Homology, target: &Homology, f: &Matrix, surjective: bool) -> Option<HomologyDefect> {
    let m = induced_map(source, target, f);
    let k = m.kernel();
    if !k.is_zero() {
        return Some(HomologyDefect::Kernel(source.lift(&k.basis_vectors()[0])));
    }
    if surjective {
        let im = m.image();
        if !im.is_full() {
            let missing = Subspace::full(target.dim()).quotient_basis(&im).expect("image inside full space");
            return Some(HomologyDefect::Cokernel(target.lift(&missing[0])));
        }
    }
    None
}

/// Degreewise maps between two complexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    maps: Vec<Matrix>,
}

impl ChainMap {
    pub fn new(maps: Vec<Matrix>) -> Self {
        ChainMap { maps }
    }

    pub fn map(&self, n: usize) -> &Matrix {
        &self.maps[n]
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn identity(c: &FiniteComplex) -> Self {
        ChainMap { maps: c.dims().iter().map(|&n| Matrix::identity(n)).collect() }
    }

    /// `f_{n+1} d = d f_n` wherever both sides are defined.
    pub fn commutes(&self, source: &FiniteComplex, target: &FiniteComplex) -> bool {
        let top = source.top().min(target.top()).min(self.maps.len().saturating_sub(1));
        (0..top).all(|n| self.maps[n + 1].mul(source.differential(n)) == target.differential(n).mul(&self.maps[n]))
    }

    /// First degree `≤ up_to` where the induced map is not an isomorphism.
    pub fn quasi_iso_defect(&self, source: &FiniteComplex, target: &FiniteComplex, up_to: usize) -> Option<(usize, HomologyDefect)> {
        (0..=up_to).find_map(|n| induced_defect(&source.homology(n), &target.homology(n), &self.maps[n], true).map(|w| (n, w)))
    }

    pub fn compose(&self, after: &ChainMap) -> ChainMap {
        ChainMap { maps: self.maps.iter().zip(&after.maps).map(|(f, g)| g.mul(f)).collect() }
    }
}
