use dgakit::cohomology::{bigraded_cohomology, cohomology, is_quasi_isomorphism, kunneth_check, DefectKind, DgaMorphism};
use dgakit::corpus::{chevalley_eilenberg, standard_complex_structure};
use dgakit::dsl::parse_presentation;
use dgakit::exactfield::Field;
use dgakit::gca::{Differential, Polynomial, Presentation};
use proptest::prelude::*;

fn parse(src: &str) -> Presentation {
    parse_presentation(src).unwrap().presentation
}

/// `S^n`: one generator for odd `n`; `x`, `y` with `dy = x²` for even `n`.
fn sphere(n: u32, cutoff: u32) -> Presentation {
    if n % 2 == 1 {
        parse(&format!("cutoff {cutoff}\ngen x {n}\n"))
    } else {
        parse(&format!("cutoff {cutoff}\ngen x {n}\ngen y {}\nd y = x^2\n", 2 * n - 1))
    }
}

fn unit(n: usize, at: &[usize]) -> Vec<usize> {
    (0..n).map(|r| usize::from(at.contains(&r))).collect()
}

#[test]
fn spheres_and_projective_spaces() {
    for n in 1..=5 {
        assert_eq!(cohomology(&sphere(n, 12)).dims(), unit(12, &[0, n as usize]), "S^{n}");
    }
    for n in 1..=4u32 {
        let cp = parse(&format!("cutoff {}\ngen x 2\nrelation x^{}\n", 2 * n + 3, n + 1));
        let even: Vec<usize> = (0..=n as usize).map(|i| 2 * i).collect();
        assert_eq!(cohomology(&cp).dims(), unit(2 * n as usize + 3, &even), "CP^{n}");
    }
}

#[test]
fn representatives_and_exactness() {
    let a = sphere(2, 6);
    let t = cohomology(&a);
    let reps = t.representatives(2);
    assert_eq!(reps.len(), 1);
    assert_eq!(t.class_of(2, &reps[0]).unwrap().len(), 1);
    // x² = dy is exact in degree 4
    let x2 = a.multiply(&Polynomial::generator(0), &Polynomial::generator(0));
    assert!(t.is_exact(4, &x2));
}

#[test]
fn unit_map_into_a_sphere_fails_in_its_degree() {
    let ground = Presentation::ground(Field::Rational, 6);
    let s3 = sphere(3, 6);
    let f = DgaMorphism::new(ground, s3.clone(), vec![]).unwrap();
    let r = is_quasi_isomorphism(&f, 4).unwrap();
    assert!(!r.holds);
    let failure = r.failure.unwrap();
    assert_eq!((failure.degree, failure.kind), (3, DefectKind::Cokernel));
    assert_eq!(failure.witness, "x");
    assert!(is_quasi_isomorphism(&DgaMorphism::identity(&s3), 4).unwrap().holds);
}

#[test]
fn kodaira_thurston_frolicher_inequality() {
    let ce = chevalley_eilenberg(4, &[(1, 2, 3, 1)], Some(&standard_complex_structure(4))).unwrap();
    let b = ce.bigraded.unwrap();
    let hodge = bigraded_cohomology(&b, Differential::Dbar).total_dims();
    let betti = cohomology(&b).dims();
    assert!(hodge.iter().zip(&betti).all(|(h, b)| h >= b));
    assert_eq!(betti[..5], [1, 3, 4, 3, 1]);
    // degeneration at E₁ for this surface: h^{1,0} + h^{0,1} = 1 + 2 = b₁
    assert_eq!(hodge[..5], betti[..5]);
}

fn two_step(m: usize, c: usize, picks: &[(usize, i64)]) -> Vec<(usize, usize, usize, i64)> {
    let pairs: Vec<(usize, usize)> = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
    pairs.iter().zip(picks).filter(|(_, (_, v))| *v != 0).map(|(&(i, j), &(k, v))| (i, j, m + 1 + k % c, v)).collect()
}

fn ce_strategy() -> impl Strategy<Value = Presentation> {
    (2usize..=3, 1usize..=2, proptest::collection::vec((0usize..2, -1i64..=1), 3))
        .prop_map(|(m, c, picks)| chevalley_eilenberg(m + c, &two_step(m, c, &picks), None).unwrap().presentation)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Nilpotent Lie algebras are unimodular, so `b_r = b_{n−r}`; and the
    /// Euler characteristic of a nontrivial exterior algebra vanishes.
    #[test]
    fn nilpotent_duality_and_euler(a in ce_strategy()) {
        let n = a.ngens();
        let b = cohomology(&a).dims();
        for r in 0..=n {
            prop_assert_eq!(b[r], b[n - r]);
        }
        let chi: i64 = b.iter().enumerate().map(|(r, &d)| if r % 2 == 0 { d as i64 } else { -(d as i64) }).sum();
        prop_assert_eq!(chi, 0);
    }

    #[test]
    fn kunneth_on_random_pairs(a in ce_strategy(), b in ce_strategy()) {
        let cutoff = (a.ngens() + b.ngens() + 1) as u32;
        let r = kunneth_check(&a.with_cutoff(cutoff), &b.with_cutoff(cutoff)).unwrap();
        prop_assert!(r.holds, "{:?}", r);
    }

    #[test]
    fn products_of_spheres(p in 1u32..=4, q in 1u32..=4) {
        let t = Presentation::tensor(&sphere(p, 10), &sphere(q, 10)).unwrap();
        let mut want = vec![0usize; 10];
        for d in [0, p, q, p + q] {
            if (d as usize) < 10 {
                want[d as usize] += 1;
            }
        }
        prop_assert_eq!(cohomology(&t).dims(), want);
    }
}
