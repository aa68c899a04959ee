use dgakit::corpus::{chevalley_eilenberg, hopf_basic_ring, standard_complex_structure};
use dgakit::dsl::parse_presentation;
use dgakit::exactfield::{Field, Scalar};
use dgakit::gca::{GcaError, Monomial, Polynomial, Presentation};
use dgakit::hirsch::binomial;
use proptest::prelude::*;

fn free(odd: usize, even: usize, cutoff: u32) -> Presentation {
    let mut a = Presentation::new(Field::Rational, cutoff, false);
    for i in 0..odd {
        a.add_generator(&format!("x{i}"), 1, None).unwrap();
    }
    for i in 0..even {
        a.add_generator(&format!("y{i}"), 2, None).unwrap();
    }
    a
}

/// Coefficient of `tⁿ` in `(1+t)^odd / (1−t²)^even`.
fn poincare(odd: usize, even: usize, n: usize) -> usize {
    (0..=n / 2)
        .map(|j| {
            let multisets = if even == 0 { usize::from(j == 0) } else { binomial(even + j - 1, j) };
            binomial(odd, n - 2 * j) * multisets
        })
        .sum()
}

/// `∧(w, w̄)` of the Heisenberg(5) × ℝ algebra tensored with `ℚ[e]/(e³)`.
fn sample_algebra() -> Presentation {
    let ce = chevalley_eilenberg(6, &[(1, 2, 5, 1), (3, 4, 5, 1)], Some(&standard_complex_structure(6))).unwrap();
    let t = Presentation::tensor(&ce.bigraded.unwrap(), &hopf_basic_ring(3).complexified()).unwrap();
    t.validate().unwrap();
    t
}

fn element(a: &Presentation, degree: u32, picks: &[(usize, i64, i64)]) -> Polynomial {
    let basis = a.basis(degree).unwrap();
    let mut p = Polynomial::zero();
    if basis.is_empty() {
        return p;
    }
    for &(k, re, im) in picks {
        p.add_term(basis[k % basis.len()].clone(), &Scalar::gaussian(re, im));
    }
    p
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64, i64)>> {
    proptest::collection::vec((0usize..1000, -3i64..=3, -2i64..=2), 1..4)
}

#[test]
fn free_basis_sizes_follow_the_poincare_series() {
    for odd in 0..=3 {
        for even in 0..=2 {
            let a = free(odd, even, 8);
            for n in 0..8 {
                assert_eq!(a.dimension(n).unwrap(), poincare(odd, even, n as usize), "odd {odd} even {even} degree {n}");
            }
        }
    }
}

#[test]
fn truncation_by_a_relation() {
    let mut a = free(0, 1, 10);
    a.add_relation(Monomial::power(0, 3));
    let dims: Vec<usize> = (0..10).map(|n| a.dimension(n).unwrap()).collect();
    assert_eq!(dims, vec![1, 0, 1, 0, 1, 0, 0, 0, 0, 0]);
    assert!(matches!(a.basis(11), Err(GcaError::CutoffExceeded { .. })));
}

#[test]
fn invalid_presentations_are_rejected() {
    let bad = |src: &str| parse_presentation(src).map(|f| f.presentation.validate());
    // d² ≠ 0
    let mut a = free(1, 1, 6);
    a.set_d(0, Polynomial::generator(1));
    a.set_d(1, a.multiply(&Polynomial::generator(0), &Polynomial::generator(1)));
    assert!(matches!(a.validate(), Err(GcaError::NotADifferential { .. })));
    // d of an ideal generator leaves the ideal
    let mut b = free(3, 1, 8);
    b.add_relation(Monomial::power(3, 2));
    b.set_d(3, b.product(&[Polynomial::generator(0), Polynomial::generator(1), Polynomial::generator(2)]));
    assert!(matches!(b.validate(), Err(GcaError::RelationNotStable { .. })));
    // d of a (1,0) generator may only have types (2,0) and (1,1)
    let mut c = Presentation::new(Field::Gaussian, 4, true);
    let z = c.add_generator("z", 1, Some((1, 0))).unwrap();
    let zb = c.add_generator("zb", 1, Some((0, 1))).unwrap();
    c.set_conjugate(z, zb);
    let u = c.add_generator("u", 2, Some((0, 2))).unwrap();
    let v = c.add_generator("v", 2, Some((2, 0))).unwrap();
    c.set_conjugate(u, v);
    c.set_d(z, Polynomial::generator(u));
    assert!(matches!(c.validate(), Err(GcaError::BidegreeViolation { .. })));
    assert!(bad("cutoff 4\ngen x 1\ngen y 2\nd y = x\n").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graded_commutativity(p in 1u32..4, q in 1u32..4, a in picks(), b in picks()) {
        let alg = sample_algebra();
        let (x, y) = (element(&alg, p, &a), element(&alg, q, &b));
        let sign = if p * q % 2 == 1 { Scalar::from_int(-1) } else { Scalar::from_int(1) };
        prop_assert_eq!(alg.multiply(&x, &y), alg.multiply(&y, &x).scale(&sign));
    }

    #[test]
    fn associativity(a in picks(), b in picks(), c in picks(), degs in (1u32..3, 1u32..3, 1u32..3)) {
        let alg = sample_algebra();
        let (x, y, z) = (element(&alg, degs.0, &a), element(&alg, degs.1, &b), element(&alg, degs.2, &c));
        prop_assert_eq!(alg.multiply(&alg.multiply(&x, &y), &z), alg.multiply(&x, &alg.multiply(&y, &z)));
    }

    #[test]
    fn leibniz_and_d_squared(p in 1u32..4, q in 1u32..4, a in picks(), b in picks()) {
        let alg = sample_algebra();
        let (x, y) = (element(&alg, p, &a), element(&alg, q, &b));
        let sign = if p % 2 == 1 { Scalar::from_int(-1) } else { Scalar::from_int(1) };
        let lhs = alg.d(&alg.multiply(&x, &y));
        let rhs = alg.multiply(&alg.d(&x), &y).plus(&alg.multiply(&x, &alg.d(&y)).scale(&sign));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(alg.d(&alg.d(&x)).is_zero());
    }

    #[test]
    fn conjugation_is_an_antilinear_automorphism(p in 1u32..4, q in 1u32..3, a in picks(), b in picks()) {
        let alg = sample_algebra();
        let (x, y) = (element(&alg, p, &a), element(&alg, q, &b));
        prop_assert_eq!(alg.conjugate(&alg.conjugate(&x)), x.clone());
        prop_assert_eq!(alg.conjugate(&alg.multiply(&x, &y)), alg.multiply(&alg.conjugate(&x), &alg.conjugate(&y)));
        prop_assert_eq!(alg.conjugate(&alg.d(&x)), alg.d(&alg.conjugate(&x)));
    }
}
