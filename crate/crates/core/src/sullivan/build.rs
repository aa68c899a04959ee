use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{MinimalModel, SullivanError};
use crate::cohomology::{differential_matrix, DgaMorphism, GradedBasis, Homology};
use crate::exactfield::{Matrix, Scalar, Subspace};
use crate::gca::{Differential, Monomial, Polynomial, Presentation};

pub type Type = (u32, u32);

pub fn monomial_type(types: &[Type], m: &Monomial) -> Type {
    m.factors().iter().fold((0, 0), |acc, &(i, e)| (acc.0 + types[i].0 * e, acc.1 + types[i].1 * e))
}

/// The type-`t` part of degree `n` together with its neighbours and the
/// cohomology there.
pub(crate) struct Block {
    pub prev: GradedBasis,
    pub cur: GradedBasis,
    pub d_prev: Matrix,
    pub h: Homology,
}

pub(crate) fn typed_basis(a: &Presentation, types: &[Type], n: u32, t: Type) -> GradedBasis {
    GradedBasis::new(a.basis_unchecked(n).into_iter().filter(|m| monomial_type(types, m) == t).collect())
}

pub(crate) fn block(a: &Presentation, types: &[Type], n: u32, t: Type) -> Block {
    let prev = if n == 0 { GradedBasis::new(Vec::new()) } else { typed_basis(a, types, n - 1, t) };
    let cur = typed_basis(a, types, n, t);
    let next = typed_basis(a, types, n + 1, t);
    let d_prev = differential_matrix(a, Differential::D, &prev, &cur);
    let d_cur = differential_matrix(a, Differential::D, &cur, &next);
    let h = Homology::new(n as usize, d_cur.kernel(), d_prev.image());
    Block { prev, cur, d_prev, h }
}

pub(crate) fn types_in_degree(a: &Presentation, types: &[Type], n: u32) -> BTreeSet<Type> {
    a.basis_unchecked(n).iter().map(|m| monomial_type(types, m)).collect()
}

/// One Hirsch extension step of the tower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerStep {
    pub degree: u32,
    /// 0 for generators hitting new cohomology, `r ≥ 1` for the `r`-th
    /// round of generators killing the kernel in the next degree.
    pub stage: u32,
    pub generators: Vec<String>,
}

pub(crate) struct Builder<'a> {
    target: &'a Presentation,
    target_types: Vec<Type>,
    model: Presentation,
    types: Vec<Type>,
    images: Vec<Polynomial>,
    tower: Vec<TowerStep>,
    max_rounds: u32,
    rng: Option<ChaCha8Rng>,
}

struct Pending {
    degree: u32,
    d: Polynomial,
    image: Polynomial,
    ty: Type,
}

impl<'a> Builder<'a> {
    pub fn new(target: &'a Presentation, target_types: Option<&[Type]>, max_rounds: u32, seed: Option<u64>) -> Result<Self, SullivanError> {
        let target_types = match target_types {
            Some(t) => t.to_vec(),
            None => vec![(0, 0); target.ngens()],
        };
        if target_types.len() != target.ngens() {
            return Err(SullivanError::Typing("one type per generator required".into()));
        }
        for i in 0..target.ngens() {
            let t = target_types[i];
            if target.d_of(i).terms().any(|(m, _)| monomial_type(&target_types, m) != t) {
                return Err(SullivanError::Typing(format!("d does not preserve the type of {}", target.generator(i).name)));
            }
        }
        let h0 = block(target, &target_types, 0, (0, 0)).h.dim();
        if h0 != 1 {
            return Err(SullivanError::NotConnected { dim: h0 });
        }
        Ok(Builder {
            target,
            target_types,
            model: Presentation::new(target.field(), target.cutoff(), false),
            types: Vec::new(),
            images: Vec::new(),
            tower: Vec::new(),
            max_rounds,
            rng: seed.map(ChaCha8Rng::seed_from_u64),
        })
    }

    /// With a seed, replaces the echelon choice by a random change of basis
    /// of the same span.
    fn scramble(&mut self, mut vs: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
        let Some(rng) = self.rng.as_mut() else { return vs };
        for i in (1..vs.len()).rev() {
            let j = rng.gen_range(0..=i);
            vs.swap(i, j);
        }
        for i in 0..vs.len() {
            for j in 0..i {
                let c = Scalar::from_int(rng.gen_range(-3..=3));
                let add: Vec<Scalar> = vs[j].iter().map(|x| x.clone() * &c).collect();
                for (x, a) in vs[i].iter_mut().zip(add) {
                    *x += &a;
                }
            }
        }
        vs
    }

    fn phi(&self, p: &Polynomial) -> Polynomial {
        self.model.map_polynomial(p, &self.images, self.target)
    }

    fn commit(&mut self, stage: u32, pending: Vec<Pending>) {
        if pending.is_empty() {
            return;
        }
        let degree = pending[0].degree;
        let mut names = Vec::new();
        for (j, p) in pending.into_iter().enumerate() {
            let name = format!("v{degree}_{stage}_{j}");
            let i = self.model.add_generator(&name, p.degree, None).expect("fresh name");
            self.model.set_d(i, p.d);
            self.images.push(p.image);
            self.types.push(p.ty);
            names.push(name);
        }
        self.tower.push(TowerStep { degree, stage, generators: names });
    }

    /// Closed generators of degree `k` making `H^k(ℳ) → H^k(A)` onto.
    pub fn surject(&mut self, k: u32) {
        let mut pending = Vec::new();
        for t in types_in_degree(self.target, &self.target_types, k) {
            let ba = block(self.target, &self.target_types, k, t);
            if ba.h.dim() == 0 {
                continue;
            }
            let bm = block(&self.model, &self.types, k, t);
            let coords: Vec<Vec<Scalar>> = bm
                .h
                .representatives()
                .iter()
                .map(|r| {
                    let img = self.phi(&bm.cur.to_polynomial(r));
                    ba.h.class_of(&ba.cur.to_vector(&img).expect("typed image")).expect("cocycle image")
                })
                .collect();
            let image = Subspace::span(ba.h.dim(), &coords);
            let complement = Subspace::full(ba.h.dim()).quotient_basis(&image).expect("contained");
            for c in self.scramble(complement) {
                let rep = ba.cur.to_polynomial(&ba.h.lift(&c));
                pending.push(Pending { degree: k, d: Polynomial::zero(), image: rep, ty: t });
            }
        }
        self.commit(0, pending);
    }

    /// One round of degree-`k` generators killing `ker(H^{k+1}(ℳ) → H^{k+1}(A))`.
    /// Returns whether anything was added.
    pub fn kill_round(&mut self, k: u32, round: u32) -> bool {
        let pending = self.killers(k);
        let added = !pending.is_empty();
        self.commit(round, pending);
        added
    }

    fn killers(&mut self, k: u32) -> Vec<Pending> {
        let mut pending = Vec::new();
        for t in types_in_degree(&self.model, &self.types, k + 1) {
            let bm = block(&self.model, &self.types, k + 1, t);
            if bm.h.dim() == 0 {
                continue;
            }
            let ba = block(self.target, &self.target_types, k + 1, t);
            let cols: Vec<Vec<Scalar>> = bm
                .h
                .representatives()
                .iter()
                .map(|r| {
                    let img = self.phi(&bm.cur.to_polynomial(r));
                    ba.h.class_of(&ba.cur.to_vector(&img).expect("typed image")).expect("cocycle image")
                })
                .collect();
            let induced = Matrix::from_columns(ba.h.dim(), &cols);
            let kernel = induced.kernel().basis_vectors();
            for kv in self.scramble(kernel) {
                let z = bm.cur.to_polynomial(&bm.h.lift(&kv));
                let img = self.phi(&z);
                let rhs = ba.cur.to_vector(&img).expect("typed image");
                let x = ba.d_prev.solve(&rhs).expect("kernel class maps to a coboundary");
                pending.push(Pending { degree: k, d: z, image: ba.prev.to_polynomial(&x), ty: t });
            }
        }
        pending
    }

    pub fn run(&mut self, up_to: u32, degree_one_stages: Option<u32>) -> Result<bool, SullivanError> {
        let mut complete = true;
        for k in 1..=up_to {
            self.surject(k);
            let limit = match (k, degree_one_stages) {
                (1, Some(s)) => s.saturating_sub(1),
                _ => self.max_rounds,
            };
            let mut round = 1;
            loop {
                if round > limit {
                    if degree_one_stages.is_some() && k == 1 {
                        complete = self.killers(k).is_empty();
                        break;
                    }
                    return Err(SullivanError::Resource { degree: k, rounds: self.max_rounds });
                }
                if !self.kill_round(k, round) {
                    break;
                }
                round += 1;
            }
        }
        Ok(complete)
    }

    pub fn finish(self, up_to: u32, complete: bool) -> Result<MinimalModel, SullivanError> {
        let map = DgaMorphism::new(self.model.clone(), self.target.clone(), self.images)?;
        Ok(MinimalModel { model: self.model, map, types: self.types, up_to, tower: self.tower, complete })
    }
}
