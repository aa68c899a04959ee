use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{GcaError, Monomial, Polynomial};
use crate::exactfield::{Field, Scalar};

/// Which differential of a (bi)differential algebra to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Differential {
    /// The total differential `d`.
    D,
    /// The type-(1,0) component `∂`.
    Del,
    /// The type-(0,1) component `∂̄`.
    Dbar,
}

impl std::fmt::Display for Differential {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Differential::D => write!(f, "d"),
            Differential::Del => write!(f, "del"),
            Differential::Dbar => write!(f, "dbar"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub bidegree: Option<(u32, u32)>,
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// A finitely generated free graded-commutative algebra (exterior on odd
/// generators, polynomial on even ones), optionally truncated by monomial
/// relations, with a differential given on generators and a degree cutoff.
///
/// In bigraded mode every generator carries a bidegree and the total
/// differential splits as `d = ∂ + ∂̄` by bidegree components; `∂̄` is the
/// part of `d` raising the second index and `∂` the part raising the first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    field: Field,
    cutoff: u32,
    bigraded: bool,
    generators: Vec<Generator>,
    conj: Vec<usize>,
    d: Vec<Polynomial>,
    relations: Vec<Monomial>,
}

impl Presentation {
    pub fn new(field: Field, cutoff: u32, bigraded: bool) -> Self {
        Presentation {
            field,
            cutoff,
            bigraded,
            generators: Vec::new(),
            conj: Vec::new(),
            d: Vec::new(),
            relations: Vec::new(),
        }
    }

    /// The ground field as a DGA (no generators).
    pub fn ground(field: Field, cutoff: u32) -> Self {
        Presentation::new(field, cutoff, false)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn is_bigraded(&self) -> bool {
        self.bigraded
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Generator {
        &self.generators[i]
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn relations(&self) -> &[Monomial] {
        &self.relations
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn gen(&self, name: &str) -> Result<Polynomial, GcaError> {
        self.index_of(name)
            .map(Polynomial::generator)
            .ok_or_else(|| GcaError::UnknownGenerator(name.to_string()))
    }

    pub fn conjugate_index(&self, i: usize) -> usize {
        self.conj[i]
    }

    /// Assigned differential of generator `i`.
    pub fn d_of(&self, i: usize) -> &Polynomial {
        &self.d[i]
    }

    pub fn add_generator(
        &mut self,
        name: &str,
        degree: u32,
        bidegree: Option<(u32, u32)>,
    ) -> Result<usize, GcaError> {
        if self.index_of(name).is_some() {
            return Err(GcaError::DuplicateGenerator(name.to_string()));
        }
        if degree == 0 {
            return Err(GcaError::InvalidGenerator {
                generator: name.to_string(),
                reason: "degree must be at least 1".into(),
            });
        }
        match (self.bigraded, bidegree) {
            (true, None) => {
                return Err(GcaError::InvalidGenerator {
                    generator: name.to_string(),
                    reason: "bigraded presentation requires a bidegree".into(),
                })
            }
            (false, Some(_)) => {
                return Err(GcaError::InvalidGenerator {
                    generator: name.to_string(),
                    reason: "bidegree given in a singly graded presentation".into(),
                })
            }
            (true, Some((p, q))) if p + q != degree => {
                return Err(GcaError::InvalidGenerator {
                    generator: name.to_string(),
                    reason: format!("bidegree ({p},{q}) does not sum to degree {degree}"),
                })
            }
            _ => {}
        }
        let i = self.generators.len();
        self.generators.push(Generator { name: name.to_string(), degree, bidegree });
        self.conj.push(i);
        self.d.push(Polynomial::zero());
        Ok(i)
    }

    pub fn set_d(&mut self, i: usize, p: Polynomial) {
        self.d[i] = p;
    }

    pub fn set_d_named(&mut self, name: &str, p: Polynomial) -> Result<(), GcaError> {
        let i = self.index_of(name).ok_or_else(|| GcaError::UnknownGenerator(name.to_string()))?;
        self.d[i] = p;
        Ok(())
    }

    /// Declares `a` and `b` complex conjugate to each other.
    pub fn set_conjugate(&mut self, a: usize, b: usize) {
        self.conj[a] = b;
        self.conj[b] = a;
    }

    pub fn add_relation(&mut self, m: Monomial) {
        if !self.relations.contains(&m) {
            self.relations.push(m);
        }
    }

    /// The sub-presentation on the first `m` generators, or `None` unless
    /// it is closed under `d` and conjugation.
    pub fn prefix(&self, m: usize) -> Option<Presentation> {
        if (0..m).any(|i| self.conj[i] >= m || self.d[i].terms().any(|(mono, _)| mono.factors().iter().any(|&(j, _)| j >= m))) {
            return None;
        }
        let mut p = Presentation::new(self.field, self.cutoff, self.bigraded);
        p.generators = self.generators[..m].to_vec();
        p.conj = self.conj[..m].to_vec();
        p.d = self.d[..m].to_vec();
        p.relations = self.relations.iter().filter(|r| r.factors().iter().all(|&(j, _)| j < m)).cloned().collect();
        Some(p)
    }

    pub fn with_cutoff(&self, cutoff: u32) -> Presentation {
        let mut p = self.clone();
        p.cutoff = cutoff;
        p
    }

    /// Same presentation over ℚ(i).
    pub fn complexified(&self) -> Presentation {
        let mut p = self.clone();
        p.field = Field::Gaussian;
        p
    }

    /// Same generators and differential with bidegrees dropped.
    pub fn forget_bigrading(&self) -> Presentation {
        let mut p = self.clone();
        p.bigraded = false;
        for g in &mut p.generators {
            g.bidegree = None;
        }
        p
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.generators[i].is_odd()
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        m.factors().iter().map(|&(i, e)| self.generators[i].degree * e).sum()
    }

    pub fn monomial_bidegree(&self, m: &Monomial) -> Option<(u32, u32)> {
        let mut acc = (0, 0);
        for &(i, e) in m.factors() {
            let (p, q) = self.generators[i].bidegree?;
            acc.0 += p * e;
            acc.1 += q * e;
        }
        Some(acc)
    }

    /// Degree shared by every term, `Some(None)` for the zero polynomial and
    /// `None` for an inhomogeneous polynomial.
    pub fn homogeneous_degree(&self, p: &Polynomial) -> Option<Option<u32>> {
        let mut deg = None;
        for (m, _) in p.terms() {
            let d = self.monomial_degree(m);
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        Some(deg)
    }

    pub fn is_in_ideal(&self, m: &Monomial) -> bool {
        self.relations.iter().any(|r| r.divides(m))
    }

    /// Product of two monomials as `(negated, monomial)`, or `None` when it
    /// vanishes. With `reduce` the monomial relations are applied.
    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial, reduce: bool) -> Option<(bool, Monomial)> {
        let mut parity = false;
        for &(i, _) in b.factors() {
            if !self.is_odd(i) {
                continue;
            }
            if a.exponent(i) > 0 {
                return None;
            }
            let later = a.factors().iter().filter(|&&(j, _)| j > i && self.is_odd(j)).count();
            parity ^= later % 2 == 1;
        }
        let m = Monomial::from_pairs(a.factors().iter().chain(b.factors()).copied());
        if reduce && self.is_in_ideal(&m) {
            return None;
        }
        Some((parity, m))
    }

    fn multiply_impl(&self, p: &Polynomial, q: &Polynomial, reduce: bool) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, ca) in p.terms() {
            for (b, cb) in q.terms() {
                if let Some((neg, m)) = self.multiply_monomials(a, b, reduce) {
                    let c = ca * cb;
                    out.add_term(m, &if neg { -c } else { c });
                }
            }
        }
        out
    }

    pub fn multiply(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        self.multiply_impl(p, q, true)
    }

    pub fn product(&self, factors: &[Polynomial]) -> Polynomial {
        factors.iter().fold(Polynomial::one(), |acc, f| self.multiply(&acc, f))
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        p.filter(|m| !self.is_in_ideal(m))
    }

    fn d_monomial(&self, m: &Monomial, reduce: bool) -> Polynomial {
        let Some((g, rest)) = m.split_first() else {
            return Polynomial::zero();
        };
        let rest_p = Polynomial::monomial(rest.clone());
        let mut out = self.multiply_impl(&self.d[g], &rest_p, reduce);
        let tail = self.d_monomial(&rest, reduce);
        if !tail.is_zero() {
            let head = self.multiply_impl(&Polynomial::generator(g), &tail, reduce);
            if self.is_odd(g) {
                out.add_scaled(&head, &-Scalar::one());
            } else {
                out.add_assign(&head);
            }
        }
        out
    }

    fn apply_impl(&self, p: &Polynomial, which: Differential, reduce: bool) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            let dm = self.d_monomial(m, reduce);
            let dm = match which {
                Differential::D => dm,
                _ => {
                    let (a, b) = self.monomial_bidegree(m).expect("bigraded differential on a singly graded presentation");
                    let target = if which == Differential::Dbar { (a, b + 1) } else { (a + 1, b) };
                    dm.filter(|t| self.monomial_bidegree(t) == Some(target))
                }
            };
            out.add_scaled(&dm, c);
        }
        out
    }

    /// Applies `d`, `∂` or `∂̄` using the graded Leibniz rule.
    pub fn apply(&self, p: &Polynomial, which: Differential) -> Polynomial {
        self.apply_impl(p, which, true)
    }

    pub fn d(&self, p: &Polynomial) -> Polynomial {
        self.apply(p, Differential::D)
    }

    /// Basis of the degree-`n` part: monomials avoiding the relations, in
    /// the canonical order (generators ranked by degree then declaration
    /// index, monomials in descending lexicographic order of exponents).
    pub fn basis(&self, n: u32) -> Result<Vec<Monomial>, GcaError> {
        if n > self.cutoff {
            return Err(GcaError::CutoffExceeded { requested: n, cutoff: self.cutoff });
        }
        Ok(self.basis_unchecked(n))
    }

    pub(crate) fn basis_unchecked(&self, n: u32) -> Vec<Monomial> {
        let order = self.canonical_order();
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.enumerate(&order, 0, n, &mut current, &mut out);
        out.retain(|m| !self.is_in_ideal(m));
        out
    }

    fn enumerate(&self, order: &[usize], pos: usize, remaining: u32, cur: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            out.push(Monomial::from_pairs(cur.iter().copied()));
            return;
        }
        if pos == order.len() {
            return;
        }
        let g = order[pos];
        let deg = self.generators[g].degree;
        let mut max_e = remaining / deg;
        if self.is_odd(g) {
            max_e = max_e.min(1);
        }
        for e in (0..=max_e).rev() {
            if e > 0 {
                cur.push((g, e));
            }
            self.enumerate(order, pos + 1, remaining - e * deg, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }

    /// Generator indices sorted by `(degree, declaration index)`.
    pub fn canonical_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.generators.len()).collect();
        order.sort_by_key(|&i| (self.generators[i].degree, i));
        order
    }

    pub fn dimension(&self, n: u32) -> Result<usize, GcaError> {
        self.basis(n).map(|b| b.len())
    }

    /// Complex conjugation: coefficients conjugated, generators sent to
    /// their declared partners.
    pub fn conjugate(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            let mut acc = Polynomial::constant(c.conj());
            for &(i, e) in m.factors() {
                let g = Polynomial::monomial(Monomial::power(self.conj[i], e));
                acc = self.multiply(&acc, &g);
            }
            out.add_assign(&acc);
        }
        out
    }

    /// Evaluates the algebra homomorphism sending generator `i` of `self`
    /// to `images[i]` in `target`.
    pub fn map_polynomial(&self, p: &Polynomial, images: &[Polynomial], target: &Presentation) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            let mut acc = Polynomial::constant(c.clone());
            for &(i, e) in m.factors() {
                for _ in 0..e {
                    acc = target.multiply(&acc, &images[i]);
                    if acc.is_zero() {
                        break;
                    }
                }
            }
            out.add_assign(&acc);
        }
        out
    }

    /// Checks the DGA axioms on generators (hence in every degree by the
    /// Leibniz rule): homogeneity, field membership, conjugation data,
    /// stability of the relation ideal, `d² = 0`, and in bigraded mode the
    /// type decomposition with `∂² = ∂̄² = ∂∂̄ + ∂̄∂ = 0`.
    pub fn validate(&self) -> Result<(), GcaError> {
        for (i, g) in self.generators.iter().enumerate() {
            let j = self.conj[i];
            if self.conj[j] != i {
                return Err(GcaError::InvalidGenerator { generator: g.name.clone(), reason: "conjugation is not an involution".into() });
            }
            let h = &self.generators[j];
            if h.degree != g.degree {
                return Err(GcaError::InvalidGenerator { generator: g.name.clone(), reason: format!("conjugate {} has a different degree", h.name) });
            }
            if let (Some((p, q)), Some(b)) = (g.bidegree, h.bidegree) {
                if b != (q, p) {
                    return Err(GcaError::InvalidGenerator { generator: g.name.clone(), reason: format!("conjugate {} must have bidegree ({q},{p})", h.name) });
                }
            }
        }
        for r in &self.relations {
            if r.factors().iter().any(|&(i, e)| self.is_odd(i) && e > 1) {
                return Err(GcaError::InvalidRelation(self.format_monomial(r)));
            }
            if r.is_one() {
                return Err(GcaError::InvalidRelation("1".into()));
            }
        }
        for (i, g) in self.generators.iter().enumerate() {
            let dg = &self.d[i];
            for (m, c) in dg.terms() {
                if !self.field.admits(c) {
                    return Err(GcaError::FieldViolation { generator: g.name.clone(), coefficient: c.to_string() });
                }
                let deg = self.monomial_degree(m);
                if deg != g.degree + 1 {
                    return Err(GcaError::InhomogeneousDifferential { generator: g.name.clone(), expected: g.degree + 1, found: deg });
                }
            }
            if self.bigraded {
                let (p, q) = g.bidegree.expect("bigraded generator");
                for (m, _) in dg.terms() {
                    let b = self.monomial_bidegree(m).expect("bigraded");
                    if b != (p + 1, q) && b != (p, q + 1) {
                        return Err(GcaError::BidegreeViolation { generator: g.name.clone(), term: self.format_monomial(m), bidegree: b });
                    }
                }
            }
        }
        for r in &self.relations {
            let dr = self.reduce(&self.apply_impl(&Polynomial::monomial(r.clone()), Differential::D, false));
            if !dr.is_zero() {
                return Err(GcaError::RelationNotStable { relation: self.format_monomial(r), image: self.format(&dr) });
            }
        }
        for (i, g) in self.generators.iter().enumerate() {
            let x = Polynomial::generator(i);
            let dd = self.d(&self.d(&x));
            if !dd.is_zero() {
                return Err(GcaError::NotADifferential { generator: g.name.clone(), identity: "d^2", residue: self.format(&dd) });
            }
            if self.bigraded {
                let del = |p: &Polynomial| self.apply(p, Differential::Del);
                let dbar = |p: &Polynomial| self.apply(p, Differential::Dbar);
                let checks: [(&'static str, Polynomial); 3] = [
                    ("del^2", del(&del(&x))),
                    ("dbar^2", dbar(&dbar(&x))),
                    ("del dbar + dbar del", del(&dbar(&x)).plus(&dbar(&del(&x)))),
                ];
                for (identity, residue) in checks {
                    if !residue.is_zero() {
                        return Err(GcaError::NotADifferential { generator: g.name.clone(), identity, residue: self.format(&residue) });
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether `d` commutes with conjugation on every generator.
    pub fn is_conjugation_compatible(&self) -> bool {
        (0..self.ngens()).all(|i| {
            let x = Polynomial::generator(i);
            self.d(&self.conjugate(&x)) == self.conjugate(&self.d(&x))
        })
    }

    /// Tensor product; generators of `b` are renamed with a `_2`, `_3`, …
    /// suffix on collision.
    pub fn tensor(a: &Presentation, b: &Presentation) -> Result<Presentation, GcaError> {
        if a.field != b.field {
            return Err(GcaError::FieldMismatch);
        }
        if a.bigraded != b.bigraded && a.ngens() > 0 && b.ngens() > 0 {
            return Err(GcaError::GradingMismatch);
        }
        let bigraded = if a.ngens() == 0 { b.bigraded } else { a.bigraded };
        let mut out = Presentation::new(a.field, a.cutoff.min(b.cutoff), bigraded);
        for g in &a.generators {
            out.add_generator(&g.name, g.degree, g.bidegree)?;
        }
        let offset = a.ngens();
        for g in &b.generators {
            let mut name = g.name.clone();
            let mut k = 2;
            while out.index_of(&name).is_some() {
                name = format!("{}_{k}", g.name);
                k += 1;
            }
            out.add_generator(&name, g.degree, g.bidegree)?;
        }
        for i in 0..a.ngens() {
            out.d[i] = a.d[i].clone();
            out.conj[i] = a.conj[i];
        }
        for i in 0..b.ngens() {
            out.d[offset + i] = b.d[i].map_monomials(|m| m.shift(offset));
            out.conj[offset + i] = b.conj[i] + offset;
        }
        for r in &a.relations {
            out.add_relation(r.clone());
        }
        for r in &b.relations {
            out.add_relation(r.shift(offset));
        }
        Ok(out)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let order = self.canonical_order();
        let rank: HashMap<usize, usize> = order.iter().enumerate().map(|(r, &i)| (i, r)).collect();
        let mut factors: Vec<(usize, u32)> = m.factors().to_vec();
        factors.sort_by_key(|&(i, _)| rank[&i]);
        let mut sign_fix = false;
        // Reordering odd factors into canonical order may introduce a sign.
        let odd: Vec<usize> = m.factors().iter().filter(|&&(i, _)| self.is_odd(i)).map(|&(i, _)| rank[&i]).collect();
        for a in 0..odd.len() {
            for b in a + 1..odd.len() {
                if odd[a] > odd[b] {
                    sign_fix = !sign_fix;
                }
            }
        }
        let body = factors
            .iter()
            .map(|&(i, e)| {
                let n = &self.generators[i].name;
                if e == 1 { n.clone() } else { format!("{n}^{e}") }
            })
            .collect::<Vec<_>>()
            .join("*");
        if sign_fix { format!("-{body}") } else { body }
    }

    /// Canonical textual form, parseable by the presentation language.
    pub fn format(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let order = self.canonical_order();
        let key = |m: &Monomial| -> (std::cmp::Reverse<u32>, std::cmp::Reverse<Vec<u32>>) {
            (std::cmp::Reverse(self.monomial_degree(m)), std::cmp::Reverse(order.iter().map(|&i| m.exponent(i)).collect()))
        };
        let mut terms: Vec<(&Monomial, &Scalar)> = p.terms().collect();
        terms.sort_by_key(|(m, _)| key(m));
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let mono = self.format_monomial(m);
            let (neg_mono, mono) = match mono.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, mono),
            };
            let c = if neg_mono { -c.clone() } else { c.clone() };
            let (neg, mag) = if c.is_real() && c.re() < &num_rational::BigRational::zero() {
                (true, -c)
            } else if !c.is_real() && c.re().is_zero() && c.im() < &num_rational::BigRational::zero() {
                (true, -c)
            } else {
                (false, c)
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coef = if mag.is_compound() { format!("({mag})") } else { mag.to_string() };
            if m.is_one() {
                out.push_str(&coef);
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{coef}*{mono}"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exterior(names: &[&str]) -> Presentation {
        let mut a = Presentation::new(Field::Rational, 8, false);
        for n in names {
            a.add_generator(n, 1, None).unwrap();
        }
        a
    }

    #[test]
    fn koszul_signs_for_odd_generators() {
        let a = exterior(&["x", "y"]);
        let x = a.gen("x").unwrap();
        let y = a.gen("y").unwrap();
        assert_eq!(a.multiply(&x, &y), a.multiply(&y, &x).neg());
        assert!(a.multiply(&x, &x).is_zero());
    }

    #[test]
    fn exterior_square_basis() {
        let a = exterior(&["x", "y"]);
        let b = a.basis(2).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(a.format_monomial(&b[0]), "x*y");
    }

    #[test]
    fn polynomial_generator_powers() {
        let mut a = Presentation::new(Field::Rational, 6, false);
        a.add_generator("e", 2, None).unwrap();
        let b = a.basis(6).unwrap();
        assert_eq!(b, vec![Monomial::power(0, 3)]);
        assert!(matches!(a.basis(7), Err(GcaError::CutoffExceeded { .. })));
    }

    #[test]
    fn leibniz_rule_on_product() {
        let mut a = Presentation::new(Field::Rational, 6, false);
        a.add_generator("x", 1, None).unwrap();
        a.add_generator("y", 1, None).unwrap();
        a.add_generator("e", 2, None).unwrap();
        a.set_d(0, a.gen("e").unwrap());
        let xy = a.multiply(&a.gen("x").unwrap(), &a.gen("y").unwrap());
        let expected = a.multiply(&a.gen("e").unwrap(), &a.gen("y").unwrap());
        assert_eq!(a.d(&xy), expected);
        assert!(a.d(&Polynomial::constant(Scalar::from_int(5))).is_zero());
    }

    #[test]
    fn validation_accepts_and_rejects() {
        let mut ok = Presentation::new(Field::Rational, 6, false);
        ok.add_generator("x", 1, None).unwrap();
        ok.add_generator("e", 2, None).unwrap();
        ok.set_d(0, ok.gen("e").unwrap());
        assert!(ok.validate().is_ok());

        // de = x*e has degree 3, and d²x = de ≠ 0.
        let mut bad = ok.clone();
        let xe = bad.multiply(&bad.gen("x").unwrap(), &bad.gen("e").unwrap());
        bad.set_d(1, xe);
        match bad.validate() {
            Err(GcaError::NotADifferential { generator, .. }) => assert_eq!(generator, "x"),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn degree_violating_differential_rejected() {
        let mut a = exterior(&["x", "z"]);
        a.set_d(1, a.gen("x").unwrap());
        assert!(matches!(a.validate(), Err(GcaError::InhomogeneousDifferential { .. })));
    }

    #[test]
    fn relation_ideal_must_be_stable() {
        let mut a = Presentation::new(Field::Rational, 8, false);
        a.add_generator("x", 1, None).unwrap();
        a.add_generator("e", 2, None).unwrap();
        a.set_d(0, a.gen("e").unwrap());
        a.add_relation(Monomial::power(1, 2));
        assert!(a.validate().is_ok());
        let mut b = Presentation::new(Field::Rational, 8, false);
        b.add_generator("e", 2, None).unwrap();
        b.add_generator("f", 3, None).unwrap();
        b.set_d(0, b.gen("f").unwrap());
        b.add_relation(Monomial::power(0, 2));
        // d(e²) = 2ef is not in (e²)
        assert!(matches!(b.validate(), Err(GcaError::RelationNotStable { .. })));
    }

    #[test]
    fn tensor_renames_collisions() {
        let a = exterior(&["x"]);
        let t = Presentation::tensor(&a, &a).unwrap();
        let names: Vec<&str> = t.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["x", "x_2"]);
        let unit = Presentation::tensor(&a, &Presentation::ground(Field::Rational, 8)).unwrap();
        assert_eq!(unit, a);
    }

    #[test]
    fn conjugation_swaps_partners_with_signs() {
        let mut a = Presentation::new(Field::Gaussian, 4, true);
        a.add_generator("z", 1, Some((1, 0))).unwrap();
        a.add_generator("zb", 1, Some((0, 1))).unwrap();
        a.set_conjugate(0, 1);
        let zzb = a.multiply(&a.gen("z").unwrap(), &a.gen("zb").unwrap());
        // conj(z·z̄) = z̄·z = −z·z̄
        assert_eq!(a.conjugate(&zzb), zzb.neg());
        let iz = a.gen("z").unwrap().scale(&Scalar::i());
        assert_eq!(a.conjugate(&iz), a.gen("zb").unwrap().scale(&-Scalar::i()));
    }
}
