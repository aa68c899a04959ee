use num_traits::Zero;

use super::CorpusError;
use crate::exactfield::{Field, Matrix, Scalar, Subspace};
use crate::gca::{Monomial, Polynomial, Presentation};

/// A real Lie algebra given by structure constants on a basis `e_1, …, e_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// `table[i][j]` holds the coordinates of `[e_i, e_j]`.
    table: Vec<Vec<Vec<Scalar>>>,
}

impl LieAlgebra {
    /// `constants` lists `(i, j, k, c)` for `[e_i, e_j] += c·e_k`, 1-based;
    /// antisymmetry is implied. Jacobi is checked.
    pub fn new(dim: usize, constants: &[(usize, usize, usize, i64)]) -> Result<Self, CorpusError> {
        let mut table = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
        for &(i, j, k, c) in constants {
            if i == 0 || j == 0 || k == 0 || i > dim || j > dim || k > dim {
                return Err(CorpusError::Shape(format!("index out of range in [e{i}, e{j}] = {c}·e{k}")));
            }
            if i == j {
                return Err(CorpusError::Shape(format!("[e{i}, e{i}] must vanish")));
            }
            let c = Scalar::from_int(c);
            table[i - 1][j - 1][k - 1] = &table[i - 1][j - 1][k - 1] + &c;
            table[j - 1][i - 1][k - 1] = &table[j - 1][i - 1][k - 1] - &c;
        }
        let lie = LieAlgebra { dim, table };
        lie.check_jacobi()?;
        Ok(lie)
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra::new(dim, &[]).expect("abelian")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self, i: usize, j: usize) -> &[Scalar] {
        &self.table[i][j]
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for i in 0..self.dim {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if v[j].is_zero() {
                    continue;
                }
                let c = &u[i] * &v[j];
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    *o = &*o + &(&c * t);
                }
            }
        }
        out
    }

    fn check_jacobi(&self) -> Result<(), CorpusError> {
        let e = |i: usize| Subspace::unit(self.dim, i);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                for k in j + 1..self.dim {
                    let a = self.bracket(&e(i), &self.bracket(&e(j), &e(k)));
                    let b = self.bracket(&e(j), &self.bracket(&e(k), &e(i)));
                    let c = self.bracket(&e(k), &self.bracket(&e(i), &e(j)));
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(&(x + y) + z).is_zero()) {
                        return Err(CorpusError::Jacobi { i: i + 1, j: j + 1, k: k + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[𝔤, S]`.
    fn bracket_with(&self, s: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for i in 0..self.dim {
            for v in s.basis_vectors() {
                vs.push(self.bracket(&Subspace::unit(self.dim, i), &v));
            }
        }
        Subspace::span(self.dim, &vs)
    }

    /// Dimensions of `𝔤 = 𝔤¹ ⊇ 𝔤² = [𝔤, 𝔤] ⊇ …` until the series stabilizes.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let mut cur = Subspace::full(self.dim);
        let mut out = vec![cur.dim()];
        loop {
            let next = self.bracket_with(&cur);
            if next.dim() == cur.dim() {
                return out;
            }
            out.push(next.dim());
            cur = next;
        }
    }

    /// The least `s` with `𝔤^{s+1} = 0`, or `None` if not nilpotent.
    pub fn nilpotency_step(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if *series.last().expect("nonempty") != 0 {
            return None;
        }
        Some(series.len() - 1)
    }

    /// `[𝔤, [𝔤, 𝔤]] = 0`.
    pub fn is_two_step(&self) -> bool {
        self.nilpotency_step().is_some_and(|s| s <= 2)
    }

    pub fn center(&self) -> Subspace {
        let mut m = Matrix::zeros(self.dim * self.dim, self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    m.set(i * self.dim + k, j, self.table[i][j][k].clone());
                }
            }
        }
        m.kernel()
    }

    /// `J² = −1` and `[JA, JB] = [A, B]` on basis vectors.
    pub fn check_abelian_structure(&self, j: &Matrix) -> Result<(), CorpusError> {
        let n = self.dim;
        if j.rows() != n || j.cols() != n {
            return Err(CorpusError::ComplexStructure(format!("J must be {n}×{n}")));
        }
        if !j.mul(j).add(&Matrix::identity(n)).is_zero() {
            return Err(CorpusError::ComplexStructure("J² ≠ −1".into()));
        }
        if (0..n).flat_map(|r| j.row(r).iter()).any(|c| !c.is_real()) {
            return Err(CorpusError::ComplexStructure("J must be real".into()));
        }
        for a in 0..n {
            for b in a + 1..n {
                let (ja, jb) = (j.column(a), j.column(b));
                if self.bracket(&ja, &jb) != self.table[a][b] {
                    return Err(CorpusError::ComplexStructure(format!("[Je{}, Je{}] ≠ [e{}, e{}]", a + 1, b + 1, a + 1, b + 1)));
                }
            }
        }
        Ok(())
    }
}

/// Chevalley–Eilenberg algebra `∧𝔫*` with `dξ(A, B) = −ξ([A, B])`.
#[derive(Clone, Debug)]
pub struct CeAlgebra {
    pub lie: LieAlgebra,
    pub step: usize,
    /// Generators `e1, …, en` of degree 1 over ℚ.
    pub presentation: Presentation,
    /// With an abelian complex structure: `∧(𝔫^{1,0} ⊕ 𝔫^{0,1})*` over ℚ(i)
    /// on `w1, …, wk` and their conjugates `wb1, …, wbk`.
    pub bigraded: Option<Presentation>,
}

fn ce_cutoff(n: usize) -> u32 {
    (n as u32 + 2).max(6)
}

/// `de^k = −Σ_{i<j} c_{ij}^k e^i e^j` in the generators of `p`.
fn ce_differential(lie: &LieAlgebra, k: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for i in 0..lie.dim {
        for j in i + 1..lie.dim {
            let c = &lie.table[i][j][k];
            if !c.is_zero() {
                out.add_term(Monomial::from_pairs([(i, 1), (j, 1)]), &-c);
            }
        }
    }
    out
}

/// Rows `v_1, …, v_k` spanning the `(1,0)`-forms, `ξ ∘ J = i·ξ`, followed
/// by their conjugates; and the inverse expressing each `e^j` in that frame.
fn complex_frame(j: &Matrix) -> Result<(Vec<Vec<Scalar>>, Matrix), CorpusError> {
    let n = j.rows();
    let shifted = j.transpose().sub(&Matrix::identity(n).scale(&Scalar::i()));
    let holo = shifted.kernel().basis_vectors();
    if 2 * holo.len() != n {
        return Err(CorpusError::ComplexStructure("J has no ±i eigenspaces of half dimension".into()));
    }
    let mut rows = holo.clone();
    rows.extend(holo.iter().map(|v| v.iter().map(Scalar::conj).collect::<Vec<_>>()));
    let inverse = Matrix::from_rows(n, &rows).inverse().expect("eigenvectors of J form a basis");
    Ok((rows, inverse))
}

/// Exterior algebra on `k` generators of type `(1,0)` named `{prefix}1…`
/// and their conjugates `{prefix}b1…`.
fn bigraded_exterior(prefix: &str, k: usize, cutoff: u32) -> Presentation {
    let mut b = Presentation::new(Field::Gaussian, cutoff, true);
    for m in 0..k {
        b.add_generator(&format!("{prefix}{}", m + 1), 1, Some((1, 0))).expect("fresh name");
    }
    for m in 0..k {
        let i = b.add_generator(&format!("{prefix}b{}", m + 1), 1, Some((0, 1))).expect("fresh name");
        b.set_conjugate(m, i);
    }
    b
}

/// `e^j ↦ Σ_r Q[j][r]·g_r` for the listed coordinates `js` of `Q`'s rows.
fn frame_images(q: &Matrix, js: &[usize], n: usize) -> Vec<Polynomial> {
    let mut images = vec![Polynomial::zero(); n];
    for (a, &j) in js.iter().enumerate() {
        let mut p = Polynomial::zero();
        for r in 0..q.cols() {
            p.add_term(Monomial::generator(r), q.get(a, r));
        }
        images[j] = p;
    }
    images
}

/// Builds the CE algebra of a nilpotent Lie algebra, optionally with its
/// bigraded form for an abelian complex structure `J` (columns `J e_j`).
pub fn chevalley_eilenberg(dim: usize, constants: &[(usize, usize, usize, i64)], j: Option<&Matrix>) -> Result<CeAlgebra, CorpusError> {
    let lie = LieAlgebra::new(dim, constants)?;
    let step = lie.nilpotency_step().ok_or(CorpusError::NotNilpotent)?;
    let mut p = Presentation::new(Field::Rational, ce_cutoff(dim), false);
    for k in 0..dim {
        p.add_generator(&format!("e{}", k + 1), 1, None)?;
    }
    for k in 0..dim {
        p.set_d(k, ce_differential(&lie, k));
    }
    p.validate()?;
    let bigraded = match j {
        None => None,
        Some(j) => {
            lie.check_abelian_structure(j)?;
            let (rows, q) = complex_frame(j)?;
            let mut b = bigraded_exterior("w", dim / 2, ce_cutoff(dim));
            let all: Vec<usize> = (0..dim).collect();
            let images = frame_images(&q, &all, dim);
            for (r, row) in rows.iter().enumerate() {
                let mut de = Polynomial::zero();
                for (k, c) in row.iter().enumerate() {
                    de.add_scaled(p.d_of(k), c);
                }
                let value = p.map_polynomial(&de, &images, &b);
                b.set_d(r, value);
            }
            b.validate()?;
            Some(b)
        }
    };
    Ok(CeAlgebra { lie, step, presentation: p, bigraded })
}

impl CeAlgebra {
    /// The transversely Kähler model of the central foliation of a 2-step
    /// nilmanifold: `H = ∧(𝔫/𝔠)*` bigraded by `J` (generators `a1…`,
    /// `ab1…`) and `W = 𝔠*` on the listed 1-based central pairs
    /// `(u, v)` with `J e_u = e_v`.
    pub fn central_foliation(&self, j: &Matrix, center: &[(usize, usize)]) -> Result<crate::dolbeault::TransverseKahlerModelSpec, CorpusError> {
        let n = self.lie.dim;
        let mut central = vec![false; n];
        for &(u, v) in center {
            if u == 0 || v == 0 || u > n || v > n || central[u - 1] || central[v - 1] {
                return Err(CorpusError::Shape(format!("bad central pair ({u}, {v})")));
            }
            if j.column(u - 1) != Subspace::unit(n, v - 1) {
                return Err(CorpusError::Shape(format!("J e{u} ≠ e{v}")));
            }
            central[u - 1] = true;
            central[v - 1] = true;
        }
        let z = self.lie.center();
        let rest: Vec<usize> = (0..n).filter(|&i| !central[i]).collect();
        for (i, _) in central.iter().enumerate().filter(|(_, c)| **c) {
            if !z.contains(&Subspace::unit(n, i)) {
                return Err(CorpusError::Shape(format!("e{} is not central", i + 1)));
            }
        }
        for &a in &rest {
            if j.column(a).iter().enumerate().any(|(r, c)| central[r] && !c.is_zero()) {
                return Err(CorpusError::Shape("J does not preserve the complement of the center".into()));
            }
            for &b in &rest {
                if self.lie.table[a][b].iter().enumerate().any(|(r, c)| !central[r] && !c.is_zero()) {
                    return Err(CorpusError::Shape("the quotient by the listed center is not abelian".into()));
                }
            }
        }
        let jr = Matrix::from_rows(rest.len(), &rest.iter().map(|&r| rest.iter().map(|&c| j.get(r, c).clone()).collect()).collect::<Vec<_>>());
        let (_, q) = complex_frame(&jr)?;
        let h = bigraded_exterior("a", rest.len() / 2, ce_cutoff(n));
        let images = frame_images(&q, &rest, n);
        let mut w = Vec::new();
        let mut pairs = Vec::new();
        for &(u, v) in center {
            for c in [u, v] {
                let value = self.presentation.map_polynomial(self.presentation.d_of(c - 1), &images, &h);
                w.push((format!("e{c}"), value));
            }
            pairs.push((format!("e{u}"), format!("e{v}")));
        }
        Ok(crate::dolbeault::TransverseKahlerModelSpec::new(h, w, &pairs)?)
    }
}

/// `J e_{2m−1} = e_{2m}`, `J e_{2m} = −e_{2m−1}`.
pub fn standard_complex_structure(n: usize) -> Matrix {
    assert!(n % 2 == 0, "even dimension");
    let mut j = Matrix::zeros(n, n);
    for m in (0..n).step_by(2) {
        j.set(m + 1, m, Scalar::from_int(1));
        j.set(m, m + 1, Scalar::from_int(-1));
    }
    j
}
