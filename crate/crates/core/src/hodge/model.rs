use std::collections::BTreeMap;

use serde::Serialize;

use super::diagram::{diagram_algebra, diagram_filtrations, diagram_types};
use super::HodgeError;
use crate::cohomology::{cohomology, degree_bases, differential_matrix, GradedBasis};
use crate::dolbeault::TransverseKahlerModelSpec;
use crate::gca::{Differential, Polynomial, Presentation};
use crate::sullivan::{monomial_type, typed_minimal_model, MinimalModel, Type};

/// Per type `t`: the `d`-closed elements of degree `r` spanned by
/// monomials of type `t`, and `dim H^r_t`.
fn typed_cocycles(a: &Presentation, types: &[Type], r: usize) -> BTreeMap<Type, (Vec<Polynomial>, usize)> {
    let bases = degree_bases(a);
    let block = |n: usize| -> BTreeMap<Type, GradedBasis> {
        let mut out: BTreeMap<Type, Vec<_>> = BTreeMap::new();
        for m in bases[n].monomials() {
            out.entry(monomial_type(types, m)).or_default().push(m.clone());
        }
        out.into_iter().map(|(t, v)| (t, GradedBasis::new(v))).collect()
    };
    let here = block(r);
    let below = if r == 0 { BTreeMap::new() } else { block(r - 1) };
    let mut out = BTreeMap::new();
    for (t, b) in here {
        let ker = differential_matrix(a, Differential::D, &b, &bases[r + 1]).kernel();
        let exact = below.get(&t).map_or(0, |lb| differential_matrix(a, Differential::D, lb, &bases[r]).rank());
        let closed = ker.basis_vectors().iter().map(|v| b.to_polynomial(v)).collect();
        out.insert(t, (closed, ker.dim() - exact));
    }
    out
}

#[derive(Clone, Debug)]
pub struct BigradedModel {
    pub minimal: MinimalModel,
    /// Every term of `dv` has the type of `v`.
    pub d_homogeneous: bool,
    /// `φ(v)` has the type of `v`.
    pub map_homogeneous: bool,
    /// `(r, p, q)` where `φ*` sends a class of `H^r(ℳ_{p,q})` outside `V_{p,q}`.
    pub incompatible: Vec<(u32, u32, u32)>,
}

impl BigradedModel {
    pub fn holds(&self) -> bool {
        self.d_homogeneous && self.map_homogeneous && self.incompatible.is_empty()
    }
}

/// Typed minimal model of `A ⊗ ℂ` with the audit of the bigrading against
/// the canonical bigrading of `H(A ⊗ ℂ)`.
pub fn bigraded_minimal_model(s: &TransverseKahlerModelSpec, up_to: u32) -> Result<BigradedModel, HodgeError> {
    let (a, types) = diagram_algebra(s)?;
    let minimal = typed_minimal_model(&a, &types, up_to)?;
    let diagram = diagram_filtrations(s)?;
    let m = &minimal.model;
    let d_homogeneous = (0..m.ngens()).all(|i| m.d_of(i).terms().all(|(mono, _)| monomial_type(&minimal.types, mono) == minimal.types[i]));
    let a_types = diagram_types(s);
    let map_homogeneous =
        minimal.map.images().iter().enumerate().all(|(i, img)| img.terms().all(|(mono, _)| monomial_type(&a_types, mono) == minimal.types[i]));
    let table = cohomology(&a);
    let mut incompatible = Vec::new();
    for r in 0..=(up_to as usize).min(table.len() - 1) {
        let bigrading = &diagram.degree(r as u32).expect("reported degree").bigrading;
        for ((p, q), (closed, _)) in typed_cocycles(m, &minimal.types, r) {
            let target = bigrading.piece(p as i32, q as i32);
            let ok = closed.iter().all(|z| target.contains(&table.class_of(r, &minimal.map.apply(z)).expect("φ is a cochain map")));
            if !ok {
                incompatible.push((r as u32, p, q));
            }
        }
    }
    Ok(BigradedModel { minimal, d_homogeneous, map_homogeneous, incompatible })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WeightBranch {
    /// `m_2 = 2`, `m_w = 0` for `w ≥ 3`.
    TwoOfWeightTwo,
    /// `m_2 = 0`, `m_3 = 1`, `m_w = 0` for `w ≥ 4`.
    OneOfWeightThree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightCount {
    /// `(w, m_w)`: degree-1 generators of weight `w = s + t`.
    pub counts: Vec<(u32, usize)>,
    pub sum: usize,
    pub weighted_sum: usize,
    pub expected_sum: usize,
    pub expected_weighted_sum: usize,
    pub branch: Option<WeightBranch>,
    pub holds: bool,
}

/// `Σ m_w = 2n` and `Σ w·m_w = 2n + 2k` over the degree-1 generators of a
/// typed minimal model; for `k = 1` also which of the two possible weight
/// patterns occurs.
pub fn weight_count_check(m: &MinimalModel, n: usize, k: usize) -> WeightCount {
    let mut by_weight: BTreeMap<u32, usize> = BTreeMap::new();
    for (i, g) in m.model.generators().iter().enumerate() {
        if g.degree == 1 {
            let (s, t) = m.types[i];
            *by_weight.entry(s + t).or_default() += 1;
        }
    }
    let sum: usize = by_weight.values().sum();
    let weighted_sum: usize = by_weight.iter().map(|(&w, &c)| w as usize * c).sum();
    let count = |w: u32| by_weight.get(&w).copied().unwrap_or(0);
    let beyond = |w: u32| by_weight.range(w..).map(|(_, &c)| c).sum::<usize>();
    let (expected_sum, expected_weighted_sum) = (2 * n, 2 * n + 2 * k);
    let sums = sum == expected_sum && weighted_sum == expected_weighted_sum && count(0) == 0;
    let branch = if !sums || k != 1 {
        None
    } else if count(2) == 2 && beyond(3) == 0 {
        Some(WeightBranch::TwoOfWeightTwo)
    } else if count(2) == 0 && count(3) == 1 && beyond(4) == 0 {
        Some(WeightBranch::OneOfWeightThree)
    } else {
        None
    };
    WeightCount {
        counts: by_weight.into_iter().collect(),
        sum,
        weighted_sum,
        expected_sum,
        expected_weighted_sum,
        holds: sums && (k != 1 || branch.is_some()),
        branch,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieGenerator {
    pub name: String,
    pub bidegree: (i32, i32),
}

/// `[X, Y] = V` read off the quadratic differential `dv` of a non-closed
/// degree-1 generator `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieBracket {
    pub target: String,
    pub bidegree: (i32, i32),
    pub dual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieRelation {
    pub bidegree: (i32, i32),
    pub count: usize,
}

/// The Lie algebra dual to the degree-1 part of a typed minimal model, as
/// a quotient of the free Lie algebra on the dual of `H^1`. Minimal
/// relations are dual to `H^2(ℳ_1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BigradedLiePresentation {
    pub generators: Vec<LieGenerator>,
    pub brackets: Vec<LieBracket>,
    pub relations: Vec<LieRelation>,
    /// Generator or relation bidegrees outside the allowed lists.
    pub offending: Vec<(i32, i32)>,
    pub holds: bool,
}

pub const GENERATOR_TYPES: [(i32, i32); 3] = [(-1, 0), (0, -1), (-1, -1)];
pub const RELATION_TYPES: [(i32, i32); 4] = [(-1, -1), (-1, -2), (-2, -1), (-2, -2)];

pub fn dual_lie_presentation(m: &MinimalModel) -> Result<BigradedLiePresentation, HodgeError> {
    let model = &m.model;
    let n1 = model.generators().iter().take_while(|g| g.degree == 1).count();
    if model.generators()[n1..].iter().any(|g| g.degree == 1) {
        return Err(HodgeError::Shape("degree-1 generators must come first".into()));
    }
    let one = model.prefix(n1).ok_or_else(|| HodgeError::Shape("the degree-1 generators do not form a sub-algebra".into()))?;
    if one.cutoff() < 3 {
        return Err(HodgeError::Shape("H^2 needs cutoff at least 3".into()));
    }
    let neg = |(s, t): Type| (-(s as i32), -(t as i32));
    let mut generators = Vec::new();
    let mut brackets = Vec::new();
    for i in 0..n1 {
        let name = one.generator(i).name.clone();
        let bidegree = neg(m.types[i]);
        let dv = one.d_of(i);
        if dv.is_zero() {
            generators.push(LieGenerator { name, bidegree });
        } else {
            brackets.push(LieBracket { target: name, bidegree, dual: one.format(dv) });
        }
    }
    let relations: Vec<LieRelation> = typed_cocycles(&one, &m.types[..n1], 2)
        .into_iter()
        .filter(|(_, (_, dim))| *dim > 0)
        .map(|(t, (_, count))| LieRelation { bidegree: neg(t), count })
        .collect();
    let mut offending: Vec<(i32, i32)> = generators.iter().map(|g| g.bidegree).filter(|b| !GENERATOR_TYPES.contains(b)).collect();
    offending.extend(relations.iter().map(|r| r.bidegree).filter(|b| !RELATION_TYPES.contains(b)));
    offending.sort();
    offending.dedup();
    Ok(BigradedLiePresentation { holds: offending.is_empty(), generators, brackets, relations, offending })
}
