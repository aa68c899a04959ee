use super::CorpusError;
use crate::dolbeault::TransverseKahlerModelSpec;
use crate::exactfield::Field;
use crate::gca::{Monomial, Polynomial, Presentation};

/// `ℚ[e]/(e^n)` with `e` of type `(1,1)`: the basic cohomology of the
/// central foliation of `S¹ × S^{2n−1}`.
pub fn hopf_basic_ring(n: u32) -> Presentation {
    assert!(n >= 2, "n ≥ 2");
    let mut h = Presentation::new(Field::Rational, 2 * n + 2, true);
    h.add_generator("e", 2, Some((1, 1))).expect("fresh");
    h.add_relation(Monomial::power(0, n));
    h
}

/// `H = ℚ[e]/(e^n)`, `W = ⟨x, y⟩` with `dx = e`, `dy = 0`.
pub fn hopf_model(n: u32) -> TransverseKahlerModelSpec {
    let h = hopf_basic_ring(n);
    let w = vec![("x".to_string(), Polynomial::generator(0)), ("y".to_string(), Polynomial::zero())];
    TransverseKahlerModelSpec::new(h, w, &[("x".into(), "y".into())]).expect("valid model")
}

/// `H = ∧⟨a, b⟩` on two `(1,1)` classes with `a² = b² = 0`, `W = ⟨x, y⟩`
/// with `dx = a`, `dy = b`.
pub fn s3s3_model() -> TransverseKahlerModelSpec {
    let mut h = Presentation::new(Field::Rational, 8, true);
    h.add_generator("a", 2, Some((1, 1))).expect("fresh");
    h.add_generator("b", 2, Some((1, 1))).expect("fresh");
    h.add_relation(Monomial::power(0, 2));
    h.add_relation(Monomial::power(1, 2));
    let w = vec![("x".to_string(), Polynomial::generator(0)), ("y".to_string(), Polynomial::generator(1))];
    TransverseKahlerModelSpec::new(h, w, &[("x".into(), "y".into())]).expect("valid model")
}

/// The elliptic curve `S¹ × S¹` foliated by itself: `H = ℚ`, `dW = 0`.
pub fn elliptic_model() -> TransverseKahlerModelSpec {
    let h = Presentation::new(Field::Rational, 4, true);
    let w = vec![("x".to_string(), Polynomial::zero()), ("y".to_string(), Polynomial::zero())];
    TransverseKahlerModelSpec::new(h, w, &[("x".into(), "y".into())]).expect("valid model")
}

/// `H₁ ⊗ H₂` with `W₁ ⊕ W₂`; names of the second factor get a `_2`
/// suffix on collision. The cutoff is `N₁ + N₂ − 2`.
pub fn product_model(a: &TransverseKahlerModelSpec, b: &TransverseKahlerModelSpec) -> Result<TransverseKahlerModelSpec, CorpusError> {
    let cutoff = a.h().cutoff() + b.h().cutoff() - 2;
    let h = Presentation::tensor(&a.h().with_cutoff(cutoff), &b.h().with_cutoff(cutoff))?;
    let offset = a.h().ngens();
    let mut w: Vec<(String, Polynomial)> = a.w().to_vec();
    let mut names: Vec<String> = Vec::new();
    for (name, value) in b.w() {
        let mut fresh = name.clone();
        let mut k = 2;
        while w.iter().any(|(n, _)| n == &fresh) || h.index_of(&fresh).is_some() {
            fresh = format!("{name}_{k}");
            k += 1;
        }
        names.push(fresh.clone());
        w.push((fresh, value.map_monomials(|m| m.shift(offset))));
    }
    let mut pairs: Vec<(String, String)> = a.pairs().iter().map(|&(u, v)| (a.w()[u].0.clone(), a.w()[v].0.clone())).collect();
    pairs.extend(b.pairs().iter().map(|&(u, v)| (names[u].clone(), names[v].clone())));
    Ok(TransverseKahlerModelSpec::new(h, w, &pairs)?)
}

/// `A = H ⊗ ∧⟨θ, θ∘J⟩` with `dθ = 0` and `d(θ∘J) = ω` for the Kähler class
/// `ω ∈ H^{1,1}`; generators `theta`, `jtheta`.
pub fn vaisman_model(h: &Presentation, kahler: &Polynomial) -> Result<TransverseKahlerModelSpec, CorpusError> {
    if h.homogeneous_degree(kahler) != Some(Some(2)) || kahler.terms().any(|(m, _)| h.monomial_bidegree(m) != Some((1, 1))) {
        return Err(CorpusError::Shape("the Kähler class must be a nonzero element of H^{1,1}".into()));
    }
    let w = vec![("theta".to_string(), Polynomial::zero()), ("jtheta".to_string(), kahler.clone())];
    Ok(TransverseKahlerModelSpec::new(h.clone(), w, &[("theta".into(), "jtheta".into())])?)
}
