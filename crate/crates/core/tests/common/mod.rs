#![allow(dead_code)]

use std::collections::BTreeMap;

use dgakit::cohomology::cohomology;
use dgakit::exactfield::{Field, Matrix, Scalar, Subspace};
use dgakit::gca::{Monomial, Polynomial, Presentation};
use dgakit::hirsch::HirschData;
use dgakit::hodge::{Conjugation, Direction, Filtration};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A mixed Hodge structure on `ℚ(i)^dim` built from a chosen splitting.
pub struct RandomMhs {
    pub dim: usize,
    pub w: Filtration,
    pub f: Filtration,
    pub conj: Conjugation,
    /// The splitting the structure was built from; for a perturbed
    /// structure, the splitting before perturbation.
    pub pieces: BTreeMap<(i32, i32), Subspace>,
}

fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..n).map(|_| (0..n).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect()).collect();
        let m = Matrix::from_rows(n, &rows);
        if m.rank() == n {
            return m;
        }
    }
}

/// Random pieces `V_{p,q}` with `0 ≤ p,q ≤ 3`, `conj V_{p,q} = V_{q,p}`,
/// moved by a random real change of basis. With `perturb`, `F` is replaced
/// by `(1 + T)F` for a random complex `T` lowering the weight, which keeps
/// every `Gr^W_n` and breaks the splitting over ℝ.
pub fn random_mhs(rng: &mut ChaCha8Rng, max_dim: usize, perturb: bool) -> RandomMhs {
    // Cells in the adapted basis: (p, q, vector index list).
    let mut cells: Vec<((i32, i32), Vec<Vec<Scalar>>)> = Vec::new();
    let mut used = 0;
    let target = rng.gen_range(1..=max_dim);
    let unit = |n: usize, i: usize| Subspace::unit(n, i);
    let mut plan: Vec<(i32, i32, usize)> = Vec::new();
    while used < target {
        let p = rng.gen_range(0..=3);
        let q = rng.gen_range(0..=3);
        let need = if p == q || used + 2 > target { 1 } else { 2 };
        let (p, q) = if need == 1 { (p, p) } else { (p, q) };
        plan.push((p.max(q), p.min(q), need));
        used += need;
    }
    let dim = used;
    let mut next = 0;
    for (p, q, need) in plan {
        if need == 1 {
            cells.push(((p, q), vec![unit(dim, next)]));
        } else {
            let mut v = unit(dim, next);
            v[next + 1] = Scalar::i();
            let mut vb = unit(dim, next);
            vb[next + 1] = -Scalar::i();
            cells.push(((p, q), vec![v]));
            cells.push(((q, p), vec![vb]));
        }
        next += need;
    }
    let g = &random_invertible(rng, dim);
    let moved: Vec<((i32, i32), Vec<Scalar>)> = cells.iter().flat_map(|(k, vs)| vs.iter().map(move |v| (*k, g.apply(v)))).collect();

    let mut pieces: BTreeMap<(i32, i32), Vec<Vec<Scalar>>> = BTreeMap::new();
    for (k, v) in &moved {
        pieces.entry(*k).or_default().push(v.clone());
    }
    let pieces: BTreeMap<(i32, i32), Subspace> = pieces.into_iter().map(|(k, vs)| (k, Subspace::span(dim, &vs))).collect();

    // Weight-lowering perturbation in the adapted basis.
    let hodge_vectors: Vec<((i32, i32), Vec<Scalar>)> = if perturb {
        let frame = Matrix::from_columns(dim, &moved.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>());
        let weights: Vec<i32> = moved.iter().map(|((p, q), _)| p + q).collect();
        let mut t = Matrix::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                if weights[i] < weights[j] {
                    t.set(i, j, Scalar::gaussian(rng.gen_range(-2..=2), rng.gen_range(-2..=2)));
                }
            }
        }
        let shift = frame.mul(&t).mul(&frame.inverse().expect("basis"));
        moved.iter().map(|(k, v)| (*k, v.iter().zip(shift.apply(v)).map(|(a, b)| a + &b).collect())).collect()
    } else {
        moved.clone()
    };

    let span_where = |vs: &[((i32, i32), Vec<Scalar>)], keep: &dyn Fn(i32, i32) -> bool| {
        let sel: Vec<Vec<Scalar>> = vs.iter().filter(|((p, q), _)| keep(*p, *q)).map(|(_, v)| v.clone()).collect();
        Subspace::span(dim, &sel)
    };
    let w = Filtration::new(Direction::Increasing, dim, (-1..=6).map(|n| (n, span_where(&moved, &|p, q| p + q <= n)))).unwrap();
    let f = Filtration::new(Direction::Decreasing, dim, (0..=4).map(|r| (r, span_where(&hodge_vectors, &|p, _| p >= r)))).unwrap();
    RandomMhs { dim, w, f, conj: Conjugation::standard(dim), pieces }
}

/// A small base algebra with `dim H ≤ 8`: an exterior algebra on at most
/// three degree-1 classes, a truncated polynomial ring times an optional odd
/// class, the Heisenberg algebra or the model `(x, y; dy = x²)` of `S²`.
pub fn random_base(rng: &mut ChaCha8Rng) -> Presentation {
    let mut a = Presentation::new(Field::Rational, 8, false);
    match rng.gen_range(0..4) {
        0 => {
            for j in 0..rng.gen_range(0..=3) {
                a.add_generator(&format!("a{j}"), 1, None).unwrap();
            }
        }
        1 => {
            a.add_generator("e", 2, None).unwrap();
            a.add_relation(Monomial::power(0, rng.gen_range(1..=4)));
            if rng.gen_bool(0.5) {
                a.add_generator("a", 1, None).unwrap();
            }
        }
        2 => {
            for j in 1..=3 {
                a.add_generator(&format!("e{j}"), 1, None).unwrap();
            }
            a.set_d(2, Polynomial::monomial(Monomial::from_pairs([(0, 1), (1, 1)])).neg());
        }
        _ => {
            a.add_generator("x", 2, None).unwrap();
            a.add_generator("y", 3, None).unwrap();
            a.set_d(1, Polynomial::monomial(Monomial::power(0, 2)));
        }
    }
    a.validate().unwrap();
    a
}

/// A random cocycle of degree `n`, possibly zero.
pub fn random_cocycle(rng: &mut ChaCha8Rng, a: &Presentation, n: usize) -> Polynomial {
    let table = cohomology(a);
    let z = table.complex().cocycles(n);
    let mut out = Polynomial::zero();
    for v in z.basis_vectors() {
        out.add_scaled(&table.basis(n).to_polynomial(&v), &Scalar::from_int(rng.gen_range(-2..=2)));
    }
    out
}

/// `V` of degree `k` with one to three generators (at most two when `k`
/// is even) over a random base. With probability 1/3 `β = 0`, otherwise
/// each `β(v)` is a random cocycle.
pub fn random_hirsch(rng: &mut ChaCha8Rng, k: u32) -> HirschData {
    let base = random_base(rng);
    let m = if k % 2 == 0 { rng.gen_range(1..=2) } else { rng.gen_range(1..=3) };
    let names: Vec<String> = (1..=m).map(|j| format!("v{j}")).collect();
    let untwisted = rng.gen_range(0..3) == 0;
    let beta = (0..m).map(|_| if untwisted { Polynomial::zero() } else { random_cocycle(rng, &base, (k + 1) as usize) }).collect();
    HirschData::new(base, k, names, beta).unwrap()
}
