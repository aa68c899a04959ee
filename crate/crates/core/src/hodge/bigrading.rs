use std::collections::BTreeMap;

use serde::Serialize;

use super::filtration::{validate_hodge_structure, Conjugation, Direction, Filtration, HodgeCell, HodgeStructure};
use super::HodgeError;
use crate::exactfield::{Matrix, Scalar, Subspace};

fn meet(a: &Subspace, b: &Subspace) -> Subspace {
    a.intersection(b).expect("same ambient space")
}

fn join(a: &Subspace, b: &Subspace) -> Subspace {
    a.sum(b).expect("same ambient space")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BigradingAudit {
    /// `W_n = ⊕_{p+q≤n} V_{p,q}` for every `n`.
    pub weight_sum: bool,
    /// `F^r = ⊕_{p≥r} V_{p,q}` for every `r`.
    pub hodge_sum: bool,
    /// `conj(V_{p,q}) ⊆ V_{q,p} + ⊕_{r+s<p+q} V_{r,s}`.
    pub conj_swap: bool,
}

impl BigradingAudit {
    pub fn holds(&self) -> bool {
        self.weight_sum && self.hodge_sum && self.conj_swap
    }
}

/// The canonical splitting `V_{p,q} = R_{p,q} ∩ L_{p,q}` of a mixed Hodge
/// structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigrading {
    pub ambient: usize,
    pub pieces: BTreeMap<(i32, i32), Subspace>,
    pub r: BTreeMap<(i32, i32), Subspace>,
    pub l: BTreeMap<(i32, i32), Subspace>,
    /// Hodge numbers of each `Gr^W_n`.
    pub graded: BTreeMap<i32, Vec<HodgeCell>>,
    pub audit: BigradingAudit,
}

impl Bigrading {
    pub fn piece(&self, p: i32, q: i32) -> Subspace {
        self.pieces.get(&(p, q)).cloned().unwrap_or_else(|| Subspace::zero(self.ambient))
    }

    /// Nonzero slots with their dimensions.
    pub fn cells(&self) -> Vec<HodgeCell> {
        self.pieces.iter().filter(|(_, s)| !s.is_zero()).map(|(&(p, q), s)| HodgeCell { p, q, dim: s.dim() }).collect()
    }

    /// `conj(V_{p,q}) = V_{q,p}` exactly.
    pub fn is_real_split(&self, conj: &Conjugation) -> bool {
        self.pieces.iter().all(|(&(p, q), s)| conj.apply(s) == self.piece(q, p))
    }
}

/// `Gr^W_n` with the induced filtration and conjugation, in coordinates of a
/// complement of `W_{n−1}` in `W_n`.
fn graded_piece(w: &Filtration, f: &Filtration, conj: &Conjugation, n: i32) -> Result<(Filtration, Conjugation), HodgeError> {
    let (wn, wl) = (w.at(n), w.at(n - 1));
    let top = wn.quotient_basis(&wl).expect("W is increasing");
    let m = top.len();
    let mut cols = top.clone();
    cols.extend(wl.basis_vectors());
    let frame = Matrix::from_columns(w.ambient(), &cols);
    let coords = |v: &[Scalar]| -> Vec<Scalar> { frame.solve(v).expect("vector of W_n")[..m].to_vec() };
    let c_cols: Vec<Vec<Scalar>> = top.iter().map(|q| coords(&conj.apply_vector(q))).collect();
    let gr_conj = Conjugation::new(Matrix::from_columns(m, &c_cols))?;
    let (lo, hi) = f.range();
    let levels: Vec<(i32, Subspace)> = (lo..=hi)
        .map(|p| {
            let vs: Vec<Vec<Scalar>> = meet(&f.at(p), &wn).basis_vectors().iter().map(|v| coords(v)).collect();
            (p, Subspace::span(m, &vs))
        })
        .collect();
    Ok((Filtration::new(Direction::Decreasing, m, levels)?, gr_conj))
}

/// Each `Gr^W_n` with the induced `F` is a Hodge structure of weight `n`.
pub fn check_mixed(w: &Filtration, f: &Filtration, conj: &Conjugation) -> Result<BTreeMap<i32, HodgeStructure>, HodgeError> {
    if w.direction() != Direction::Increasing || f.direction() != Direction::Decreasing {
        return Err(HodgeError::Filtration("expected an increasing W and a decreasing F".into()));
    }
    if w.ambient() != f.ambient() || w.ambient() != conj.dim() {
        return Err(HodgeError::Filtration("W, F and the conjugation live on different spaces".into()));
    }
    let (lo, hi) = w.range();
    for k in lo..=hi {
        if !conj.is_real(&w.at(k)) {
            return Err(HodgeError::NotReal { level: k });
        }
    }
    let mut out = BTreeMap::new();
    for n in lo..=hi {
        let (gf, gc) = graded_piece(w, f, conj, n)?;
        let hs = validate_hodge_structure(&gf, &gc, n).map_err(|e| HodgeError::NotMixed { weight: n, source: Box::new(e) })?;
        out.insert(n, hs);
    }
    Ok(out)
}

/// `R_{p,q} = W_{p+q} ∩ F^p`,
/// `L_{p,q} = W_{p+q} ∩ conj F^q + Σ_{i≥2} W_{p+q−i} ∩ conj F^{q−i+1}`,
/// `V_{p,q} = R_{p,q} ∩ L_{p,q}`.
pub fn canonical_bigrading(w: &Filtration, f: &Filtration, conj: &Conjugation) -> Result<Bigrading, HodgeError> {
    let graded = check_mixed(w, f, conj)?;
    let ambient = w.ambient();
    let (wlo, whi) = w.range();
    let (flo, fhi) = f.range();
    let wn: BTreeMap<i32, Subspace> = (wlo - 1..=whi).map(|n| (n, w.at(n))).collect();
    let fp: BTreeMap<i32, Subspace> = (flo - whi + wlo - 1..=fhi + 1).map(|p| (p, f.at(p))).collect();
    let bar: BTreeMap<i32, Subspace> = fp.iter().map(|(&q, s)| (q, conj.apply(s))).collect();
    let mut cross: BTreeMap<(i32, i32), Subspace> = BTreeMap::new();
    let mut w_bar = |n: i32, q: i32| cross.entry((n, q)).or_insert_with(|| meet(&wn[&n], &bar[&q])).clone();
    let (mut r, mut l, mut pieces) = (BTreeMap::new(), BTreeMap::new(), BTreeMap::new());
    for p in flo..=fhi {
        for q in flo..=fhi {
            let n = p + q;
            if n < wlo || n > whi {
                continue;
            }
            let rpq = meet(&wn[&n], &fp[&p]);
            let mut lpq = w_bar(n, q);
            let mut i = 2;
            while n - i >= wlo {
                lpq = join(&lpq, &w_bar(n - i, q - i + 1));
                i += 1;
            }
            pieces.insert((p, q), meet(&rpq, &lpq));
            r.insert((p, q), rpq);
            l.insert((p, q), lpq);
        }
    }
    let zero = Subspace::zero(ambient);
    let direct = |sel: &dyn Fn(i32, i32) -> bool, target: &Subspace| {
        let chosen: Vec<&Subspace> = pieces.iter().filter(|(&(p, q), _)| sel(p, q)).map(|(_, s)| s).collect();
        let total: usize = chosen.iter().map(|s| s.dim()).sum();
        let vectors: Vec<Vec<Scalar>> = chosen.iter().flat_map(|s| s.basis_vectors()).collect();
        total == target.dim() && Subspace::span(ambient, &vectors) == *target
    };
    let weight_sum = (wlo - 1..=whi).all(|n| direct(&|p, q| p + q <= n, &wn[&n]));
    let hodge_sum = (flo..=fhi + 1).all(|k| direct(&|p, _| p >= k, &fp[&k]));
    let lower: BTreeMap<i32, Subspace> = (wlo..=whi)
        .map(|n| (n, pieces.iter().filter(|(&(a, b), _)| a + b < n).fold(zero.clone(), |acc, (_, t)| join(&acc, t))))
        .collect();
    let conj_swap = pieces.iter().all(|(&(p, q), s)| {
        let other = pieces.get(&(q, p)).cloned().unwrap_or_else(|| zero.clone());
        conj.apply(s).is_subset(&join(&other, &lower[&(p + q)])).expect("same ambient space")
    });
    pieces.retain(|_, s| !s.is_zero());
    let graded = graded.into_iter().map(|(n, h)| (n, h.cells())).collect();
    Ok(Bigrading { ambient, pieces, r, l, graded, audit: BigradingAudit { weight_sum, hodge_sum, conj_swap } })
}
