use serde::Serialize;

use super::{build_de_rham_model, build_dolbeault_model, w_names, DolbeaultError, TransverseKahlerModelSpec};
use crate::cohomology::{bigraded_cohomology, cohomology, degree_bases, linear_map_matrix, DgaMorphism};
use crate::exactfield::Scalar;
use crate::gca::{Differential, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TotComparison {
    /// The map `A ⊗ ℂ → Tot B` is bijective in each degree `n ≤ N`.
    pub bijective: Vec<bool>,
    pub is_isomorphism: bool,
    pub betti: Vec<usize>,
    /// `Σ_{p+q=r} dim H^{p,q}_∂̄(B)`.
    pub hodge_totals: Vec<usize>,
    pub totals_agree: bool,
    /// `b_1` against `dim H^{1,0}_B + dim H^{0,1}_B + 1`, for the
    /// one-dimensional foliation shape only.
    pub first_betti: Option<(usize, usize)>,
}

/// The isomorphism `A ⊗ ℂ → Tot B`: `H` fixed, `u ↦ (z + z̄)/2`,
/// `Ju ↦ (z − z̄)/2i`.
pub fn tot_compare(s: &TransverseKahlerModelSpec) -> Result<TotComparison, DolbeaultError> {
    let a = build_de_rham_model(s)?.complexified();
    let b = build_dolbeault_model(s)?;
    let tot = b.forget_bigrading();
    let mut images: Vec<Polynomial> = (0..s.h().ngens()).map(Polynomial::generator).collect();
    let half = Scalar::from_ratio(1, 2);
    let mut w_images = vec![Polynomial::zero(); s.w().len()];
    for (j, &(u, v)) in s.pairs().iter().enumerate() {
        let (zn, zbn) = w_names(j);
        let z = tot.gen(&zn)?;
        let zb = tot.gen(&zbn)?;
        w_images[u] = z.plus(&zb).scale(&half);
        w_images[v] = z.minus(&zb).scale(&(half.clone() * Scalar::i().inv()));
    }
    images.extend(w_images);
    let f = DgaMorphism::new(a.clone(), tot.clone(), images)?;
    let (src, dst) = (degree_bases(&a), degree_bases(&tot));
    let bijective: Vec<bool> = src
        .iter()
        .zip(&dst)
        .map(|(x, y)| {
            let m = linear_map_matrix(x, y, |mono| f.apply(&Polynomial::monomial(mono.clone())));
            x.len() == y.len() && m.rank() == x.len()
        })
        .collect();
    let betti = cohomology(&a).dims();
    let hodge_totals = bigraded_cohomology(&b, Differential::Dbar).total_dims();
    let totals_agree = betti == hodge_totals;
    Ok(TotComparison { is_isomorphism: bijective.iter().all(|&x| x), bijective, betti, hodge_totals, totals_agree, first_betti: None })
}

/// [`tot_compare`] for `W = ⟨θ, Jθ⟩` with `dθ = 0` and `dJθ = ω` a
/// nonzero class of type `(1,1)`, so that `∂̄(θ + iJθ) = iω` and
/// `∂̄(θ − iJθ) = 0`.
pub fn vaisman_tot_compare(s: &TransverseKahlerModelSpec) -> Result<TotComparison, DolbeaultError> {
    if s.k() != 1 {
        return Err(DolbeaultError::Shape(format!("W must be ⟨θ, Jθ⟩, found real dimension {}", s.w().len())));
    }
    let (t, jt) = s.pairs()[0];
    if !s.w()[t].1.is_zero() {
        return Err(DolbeaultError::Shape("dθ must vanish".into()));
    }
    let omega = &s.w()[jt].1;
    if omega.is_zero() {
        return Err(DolbeaultError::Shape("the transverse Kähler class must be nonzero".into()));
    }
    if omega.terms().any(|(m, _)| s.h().monomial_bidegree(m) != Some((1, 1))) {
        return Err(DolbeaultError::Shape("the transverse Kähler class must have type (1,1)".into()));
    }
    let mut out = tot_compare(s)?;
    let h = bigraded_cohomology(s.h(), Differential::Dbar);
    let b1 = out.betti.get(1).copied().unwrap_or(0);
    out.first_betti = Some((b1, h.dim(1, 0) + h.dim(0, 1) + 1));
    Ok(out)
}
