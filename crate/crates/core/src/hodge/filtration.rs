use std::collections::BTreeMap;

use serde::Serialize;

use super::HodgeError;
use crate::dsl::LevelSpec;
use crate::exactfield::{Matrix, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    Increasing,
    Decreasing,
}

/// A filtration of `V = K^ambient` given by its listed levels.
///
/// Increasing: `W_k` is the listed level with the largest index `≤ k`, zero
/// below the lowest index; the highest listed level must be `V`.
/// Decreasing: `F^p` is the listed level with the smallest index `≥ p`,
/// zero above the highest index; the lowest listed level must be `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    direction: Direction,
    ambient: usize,
    levels: BTreeMap<i32, Subspace>,
}

impl Filtration {
    pub fn new(direction: Direction, ambient: usize, levels: impl IntoIterator<Item = (i32, Subspace)>) -> Result<Self, HodgeError> {
        let levels: BTreeMap<i32, Subspace> = levels.into_iter().collect();
        if levels.is_empty() {
            return Err(HodgeError::Filtration("no levels given".into()));
        }
        if let Some((k, _)) = levels.iter().find(|(_, s)| s.ambient() != ambient) {
            return Err(HodgeError::Filtration(format!("level {k} lives in the wrong ambient space")));
        }
        let list: Vec<(&i32, &Subspace)> = levels.iter().collect();
        for w in list.windows(2) {
            let (lo, hi) = (w[0].1, w[1].1);
            let nested = match direction {
                Direction::Increasing => lo.is_subset(hi),
                Direction::Decreasing => hi.is_subset(lo),
            }
            .expect("same ambient space");
            if !nested {
                return Err(HodgeError::Filtration(format!("levels {} and {} are not nested", w[0].0, w[1].0)));
            }
        }
        let (end, s) = match direction {
            Direction::Increasing => levels.iter().next_back().expect("nonempty"),
            Direction::Decreasing => levels.iter().next().expect("nonempty"),
        };
        if !s.is_full() {
            return Err(HodgeError::Filtration(format!("level {end} must be the whole space")));
        }
        Ok(Filtration { direction, ambient, levels })
    }

    pub fn from_levels(direction: Direction, ambient: usize, levels: &[(i32, LevelSpec)]) -> Result<Self, HodgeError> {
        let subs = levels.iter().map(|(k, spec)| {
            let s = match spec {
                LevelSpec::Zero => Subspace::zero(ambient),
                LevelSpec::Full => Subspace::full(ambient),
                LevelSpec::Span(vs) => Subspace::span(ambient, vs),
            };
            (*k, s)
        });
        Filtration::new(direction, ambient, subs)
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Lowest and highest listed index.
    pub fn range(&self) -> (i32, i32) {
        (*self.levels.keys().next().expect("nonempty"), *self.levels.keys().next_back().expect("nonempty"))
    }

    pub fn at(&self, k: i32) -> Subspace {
        let hit = match self.direction {
            Direction::Increasing => self.levels.range(..=k).next_back(),
            Direction::Decreasing => self.levels.range(k..).next(),
        };
        hit.map_or_else(|| Subspace::zero(self.ambient), |(_, s)| s.clone())
    }

    pub fn dims(&self) -> Vec<(i32, usize)> {
        self.levels.iter().map(|(&k, s)| (k, s.dim())).collect()
    }
}

/// An antilinear involution `v ↦ C·v̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conjugation(Matrix);

impl Conjugation {
    /// Entrywise conjugation, for coordinates in a real basis.
    pub fn standard(n: usize) -> Self {
        Conjugation(Matrix::identity(n))
    }

    pub fn new(c: Matrix) -> Result<Self, HodgeError> {
        if c.rows() != c.cols() || c.mul(&c.conj()) != Matrix::identity(c.rows()) {
            return Err(HodgeError::Filtration("conjugation must be an involution".into()));
        }
        Ok(Conjugation(c))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn apply_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        let bar: Vec<Scalar> = v.iter().map(Scalar::conj).collect();
        self.0.apply(&bar)
    }

    pub fn apply(&self, s: &Subspace) -> Subspace {
        s.conj().map(&self.0)
    }

    pub fn is_real(&self, s: &Subspace) -> bool {
        &self.apply(s) == s
    }
}

/// A pure Hodge structure of weight `n`: `V_ℂ = ⊕_{p+q=n} V_{p,q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeStructure {
    pub weight: i32,
    pub ambient: usize,
    /// Nonzero pieces only.
    pub pieces: BTreeMap<(i32, i32), Subspace>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeCell {
    pub p: i32,
    pub q: i32,
    pub dim: usize,
}

impl HodgeStructure {
    pub fn cells(&self) -> Vec<HodgeCell> {
        self.pieces.iter().map(|(&(p, q), s)| HodgeCell { p, q, dim: s.dim() }).collect()
    }

    /// The pieces add up to `V_ℂ` with dimensions adding up.
    pub fn is_direct_sum(&self) -> bool {
        let total: usize = self.pieces.values().map(Subspace::dim).sum();
        let span = self.pieces.values().fold(Subspace::zero(self.ambient), |acc, s| acc.sum(s).expect("same ambient space"));
        total == self.ambient && span.is_full()
    }

    pub fn swaps_under(&self, conj: &Conjugation) -> bool {
        self.pieces.iter().all(|(&(p, q), s)| {
            let other = self.pieces.get(&(q, p)).cloned().unwrap_or_else(|| Subspace::zero(self.ambient));
            conj.apply(s) == other
        })
    }
}

/// Checks `F^p ⊕ conj(F^{n+1−p}) = V_ℂ` for every `p` and returns
/// `V_{p,q} = F^p ∩ conj(F^q)`.
pub fn validate_hodge_structure(f: &Filtration, conj: &Conjugation, n: i32) -> Result<HodgeStructure, HodgeError> {
    if f.direction() != Direction::Decreasing {
        return Err(HodgeError::Filtration("a Hodge filtration is decreasing".into()));
    }
    if conj.dim() != f.ambient() {
        return Err(HodgeError::Filtration("conjugation and filtration live on different spaces".into()));
    }
    let v = f.ambient();
    let (lo, hi) = f.range();
    let bar = |p: i32| conj.apply(&f.at(p));
    for p in lo.min(n - hi)..=(hi + 1).max(n + 1 - lo) {
        let (a, b) = (f.at(p), bar(n + 1 - p));
        let sum = a.sum(&b).expect("same ambient space");
        let overlap = a.intersection(&b).expect("same ambient space").dim();
        if overlap > 0 || !sum.is_full() {
            return Err(HodgeError::Splitting { weight: n, p, deficit: v - sum.dim(), overlap });
        }
    }
    let mut pieces = BTreeMap::new();
    for p in lo..=hi {
        let s = f.at(p).intersection(&bar(n - p)).expect("same ambient space");
        if !s.is_zero() {
            pieces.insert((p, n - p), s);
        }
    }
    Ok(HodgeStructure { weight: n, ambient: v, pieces })
}
