use serde::Serialize;

use super::{ddbar_check, DolbeaultError};
use crate::cohomology::{differential_matrix, total_complex, FiniteComplex, GradedBasis};
use crate::exactfield::Subspace;
use crate::gca::{Differential, Monomial, Polynomial, Presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Arrow {
    /// `(ker d^c ⊗ ∧W, d) → (Ω ⊗ ∧W, d)`
    DcInclusion,
    /// `(ker d^c ⊗ ∧W, d) → (H ⊗ ∧W, d)`
    DcProjection,
    /// `(ker ∂ ⊗ ∧W_ℂ, ∂̄′) → (Ω ⊗ ∧W_ℂ, ∂̄)`
    DelInclusion,
    /// `(ker ∂ ⊗ ∧W_ℂ, ∂̄′) → (H ⊗ ∧W_ℂ, ∂̄)`
    DelProjection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrowCertificate {
    pub arrow: Arrow,
    /// Dimensions of the source complex per total degree `n < N`.
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub holds: bool,
    pub failure_degree: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub arrows: Vec<ArrowCertificate>,
    pub holds: bool,
}

fn meet(a: &Subspace, b: &Subspace) -> Subspace {
    a.intersection(b).expect("same ambient space")
}

fn join(a: &Subspace, b: &Subspace) -> Subspace {
    a.sum(b).expect("same ambient space")
}

fn within(a: &Subspace, b: &Subspace) -> bool {
    a.is_subset(b).expect("same ambient space")
}

/// Splits each total-degree basis into base and `W` parts.
struct Split {
    bases: Vec<GradedBasis>,
    base_only: Vec<GradedBasis>,
    w_only: Vec<Vec<Monomial>>,
}

impl Split {
    fn new(b: &Presentation, bases: Vec<GradedBasis>, m: usize) -> Self {
        let is_base = |mono: &Monomial| mono.factors().iter().all(|&(j, _)| j < m);
        let is_w = |mono: &Monomial| mono.factors().iter().all(|&(j, _)| j >= m);
        let base_only = bases.iter().map(|g| GradedBasis::new(g.monomials().iter().filter(|x| is_base(x)).cloned().collect())).collect();
        let w_only = (0..=b.cutoff()).map(|n| b.basis_unchecked(n).into_iter().filter(|x| is_w(x)).collect()).collect();
        Split { bases, base_only, w_only }
    }

    /// `(S ⊗ ∧W)^n` for degreewise subspaces `S` of the base.
    fn tensor(&self, b: &Presentation, s: &[Subspace], n: usize) -> Subspace {
        let mut vs = Vec::new();
        for j in 0..=n {
            for k in s[j].basis_vectors() {
                let kp = self.base_only[j].to_polynomial(&k);
                for mu in &self.w_only[n - j] {
                    let prod = b.multiply(&kp, &Polynomial::monomial(mu.clone()));
                    vs.push(self.bases[n].to_vector(&prod).expect("within the cutoff"));
                }
            }
        }
        Subspace::span(self.bases[n].len(), &vs)
    }
}

/// Compares `H(S) → H(C)` for a subcomplex `S ⊆ C`, or `H(S) → H(S/I)`
/// for a subcomplex `I ⊆ S`, in degrees `n < top`.
fn certify(arrow: Arrow, c: &FiniteComplex, s: &[Subspace], quotient: Option<&[Subspace]>, top: usize) -> ArrowCertificate {
    let d = |n: usize| c.differential(n);
    let mut failure = None;
    let mut target = Vec::new();
    for n in 0..top {
        let dn = d(n);
        let zs = s[n].preimage_within(dn, &Subspace::zero(c.dim(n + 1)));
        let ds = if n == 0 { Subspace::zero(c.dim(0)) } else { s[n - 1].map(d(n - 1)) };
        let closed = within(&s[n].map(dn), &s[n + 1]);
        let ok = match quotient {
            None => {
                let zc = c.cocycles(n);
                let bc = c.coboundaries(n);
                target.push(c.dim(n));
                within(&meet(&zs, &bc), &ds) && within(&zc, &join(&zs, &bc))
            }
            Some(i) => {
                let zq = s[n].preimage_within(dn, &i[n + 1]);
                let bq = join(&ds, &i[n]);
                target.push(s[n].dim() - i[n].dim());
                within(&i[n], &s[n]) && within(&i[n].map(dn), &i[n + 1]) && within(&meet(&zs, &bq), &ds) && within(&zq, &join(&zs, &bq))
            }
        };
        if !(ok && closed) && failure.is_none() {
            failure = Some(n as u32);
        }
    }
    ArrowCertificate { arrow, source: s[..top].iter().map(Subspace::dim).collect(), target, holds: failure.is_none(), failure_degree: failure }
}

/// The four comparison maps for `B = Ω ⊗ ∧(W^{1,0} ⊕ W^{0,1})`, where `Ω`
/// is spanned by the first `base` generators of `b` and satisfies the
/// ∂∂̄-lemma. The `d^c` arrows are checked on `Tot B ≅ A ⊗ ℂ`.
///
/// `dW` is required to be `∂`- and `∂̄`-closed componentwise, so that
/// `∂̄′ = ∂̄` on `W`.
pub fn dc_subalgebra_chain(b: &Presentation, base: usize) -> Result<ChainReport, DolbeaultError> {
    if !b.is_bigraded() {
        return Err(DolbeaultError::Shape("the chain needs a bigraded model".into()));
    }
    let omega = b.prefix(base).ok_or_else(|| DolbeaultError::Shape("the first generators do not form a sub-algebra".into()))?;
    let report = ddbar_check(&omega);
    if let Some(degree) = report.first_failure {
        return Err(DolbeaultError::DdbarFails { degree });
    }
    for i in base..b.ngens() {
        let dw = b.d_of(i);
        if dw.terms().any(|(m, _)| m.factors().iter().any(|&(j, _)| j >= base)) {
            return Err(DolbeaultError::Shape(format!("d {} leaves the base", b.generator(i).name)));
        }
        for which in [Differential::Del, Differential::Dbar] {
            for part in [Differential::Del, Differential::Dbar] {
                if !b.apply(&b.apply(&Polynomial::generator(i), part), which).is_zero() {
                    return Err(DolbeaultError::Shape(format!("d {} is not ∂- and ∂̄-closed componentwise", b.generator(i).name)));
                }
            }
        }
    }
    let top = b.cutoff() as usize;
    let (bases, dtot) = total_complex(b, Differential::D);
    let (_, dbar) = total_complex(b, Differential::Dbar);
    let split = Split::new(b, bases, base);
    let on_base = |w: Differential, n: usize| differential_matrix(b, w, &split.base_only[n], &split.base_only[n + 1]);
    let dc = |n: usize| on_base(Differential::Dbar, n).sub(&on_base(Differential::Del, n));
    let zero_or = |n: usize, f: &dyn Fn(usize) -> Subspace| if n == 0 { Subspace::zero(split.base_only[0].len()) } else { f(n - 1) };

    let k_dc: Vec<Subspace> = (0..=top).map(|n| if n < top { dc(n).kernel() } else { Subspace::full(split.base_only[n].len()) }).collect();
    let im_dc: Vec<Subspace> = (0..=top).map(|n| zero_or(n, &|m| dc(m).image())).collect();
    let k_del: Vec<Subspace> =
        (0..=top).map(|n| if n < top { on_base(Differential::Del, n).kernel() } else { Subspace::full(split.base_only[n].len()) }).collect();
    let im_del: Vec<Subspace> = (0..=top).map(|n| zero_or(n, &|m| on_base(Differential::Del, m).image())).collect();

    let big = |s: &[Subspace]| -> Vec<Subspace> { (0..=top).map(|n| split.tensor(b, s, n)).collect() };
    let (s_dc, i_dc, s_del, i_del) = (big(&k_dc), big(&im_dc), big(&k_del), big(&im_del));

    let arrows = vec![
        certify(Arrow::DcInclusion, &dtot, &s_dc, None, top),
        certify(Arrow::DcProjection, &dtot, &s_dc, Some(&i_dc), top),
        certify(Arrow::DelInclusion, &dbar, &s_del, None, top),
        certify(Arrow::DelProjection, &dbar, &s_del, Some(&i_del), top),
    ];
    let holds = arrows.iter().all(|a| a.holds);
    Ok(ChainReport { arrows, holds })
}
