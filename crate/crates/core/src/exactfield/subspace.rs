use num_traits::{One, Zero};

use super::{LinAlgError, Matrix, Scalar};

/// A linear subspace of `ℚ(i)^n` stored by its reduced row echelon basis.
///
/// The echelon form is canonical, so two subspaces are equal exactly when
/// their stored bases are identical and `==` is syntactic equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (basis, pivots) = m.rref();
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        Subspace::from_matrix(&Matrix::from_rows(ambient, vectors))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    /// Canonical remainder of `v` modulo this subspace: the pivot
    /// coordinates of the result are zero.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut r = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            let f = r[pc].clone();
            if f.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    r[j] -= &(&f * b);
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }

    pub fn is_subset(&self, other: &Subspace) -> Result<bool, LinAlgError> {
        self.check(other)?;
        Ok((0..self.dim()).all(|i| other.contains(self.basis.row(i))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check(other)?;
        Ok(Subspace::from_matrix(&self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // λ·A + μ·B = 0 ⇒ λ·A lies in both row spaces.
        let stacked = self.basis.vstack(&other.basis);
        let relations = stacked.transpose().kernel();
        let a = self.dim();
        let vectors: Vec<Vec<Scalar>> = relations
            .basis_vectors()
            .iter()
            .map(|rel| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (i, c) in rel[..a].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    for (j, b) in self.basis.row(i).iter().enumerate() {
                        if !b.is_zero() {
                            v[j] += &(c * b);
                        }
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::span(self.ambient, &vectors))
    }

    /// Vectors completing a basis of `sub` to a basis of `self`, in the
    /// echelon-complement convention. Requires `sub ⊆ self`.
    pub fn quotient_basis(&self, sub: &Subspace) -> Result<Vec<Vec<Scalar>>, LinAlgError> {
        self.check(sub)?;
        if !sub.is_subset(self)? {
            return Err(LinAlgError::NotContained);
        }
        let reduced: Vec<Vec<Scalar>> =
            (0..self.dim()).map(|i| sub.reduce(self.basis.row(i))).collect();
        let comp = Subspace::span(self.ambient, &reduced);
        Ok(comp.basis_vectors())
    }

    /// Complex conjugate subspace (entrywise conjugation of the basis).
    pub fn conj(&self) -> Subspace {
        Subspace::from_matrix(&self.basis.conj())
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map shape mismatch");
        let imgs: Vec<Vec<Scalar>> = (0..self.dim()).map(|i| m.apply(self.basis.row(i))).collect();
        Subspace::span(m.rows(), &imgs)
    }

    /// `{v in self : m·v ∈ target}`.
    pub fn preimage_within(&self, m: &Matrix, target: &Subspace) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "map shape mismatch");
        assert_eq!(m.rows(), target.ambient, "target mismatch");
        if self.is_zero() {
            return self.clone();
        }
        // Coordinates c with (m·Σ c_i b_i) reduced modulo target = 0.
        let images: Vec<Vec<Scalar>> =
            (0..self.dim()).map(|i| target.reduce(&m.apply(self.basis.row(i)))).collect();
        let cond = Matrix::from_columns(m.rows(), &images);
        let coeffs = cond.kernel();
        let vectors: Vec<Vec<Scalar>> =
            coeffs.basis_vectors().iter().map(|c| self.combine(c)).collect();
        Subspace::span(self.ambient, &vectors)
    }

    /// `Σ c_i b_i` for coordinates `c` in the echelon basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vec![Scalar::zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    v[j] += &(c * b);
                }
            }
        }
        v
    }

    /// Standard basis vector helper.
    pub fn unit(ambient: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); ambient];
        v[i] = Scalar::one();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn idempotent_sum_and_intersection() {
        let a = Subspace::span(3, &[v(&[1, 2, 0]), v(&[0, 1, 1])]);
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);
    }

    #[test]
    fn complementary_lines() {
        let a = Subspace::span(2, &[v(&[1, 1])]);
        let b = Subspace::span(2, &[v(&[1, -1])]);
        assert!(a.intersection(&b).unwrap().is_zero());
        assert!(a.sum(&b).unwrap().is_full());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(LinAlgError::DimensionMismatch { .. })));
        assert!(a.intersection(&b).is_err());
    }

    #[test]
    fn quotient_basis_requires_containment() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[1, 1, 0])]);
        let q = a.quotient_basis(&b).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(b.sum(&Subspace::span(3, &q)).unwrap(), a);
        let c = Subspace::span(3, &[v(&[0, 0, 1])]);
        assert_eq!(a.quotient_basis(&c), Err(LinAlgError::NotContained));
    }

    #[test]
    fn preimage_within_subspace() {
        // m projects to the first coordinate; preimage of 0 inside span(e0+e1, e2)
        let m = Matrix::from_ints(&[&[1, 0, 0]]);
        let s = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]);
        let p = s.preimage_within(&m, &Subspace::zero(1));
        assert_eq!(p, Subspace::span(3, &[v(&[0, 0, 1])]));
    }
}
