mod common;

use dgakit::dolbeault::TransverseKahlerModelSpec;
use dgakit::dsl::parse_presentation;
use dgakit::exactfield::{Scalar, Subspace};
use dgakit::gca::Presentation;
use dgakit::hodge::{
    bigraded_minimal_model, canonical_bigrading, diagram_filtrations, dual_lie_presentation, h1_h2_shape_check, is_fundamental,
    validate_hodge_structure, weight_count_check, Conjugation, Direction, Filtration, HodgeError, WeightBranch,
};
use dgakit::sullivan::{typed_minimal_model, Type};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spec(src: &str) -> TransverseKahlerModelSpec {
    TransverseKahlerModelSpec::from_file(&parse_presentation(src).unwrap()).unwrap()
}

fn hopf(n: u32) -> TransverseKahlerModelSpec {
    spec(&format!("field Q\ncutoff {}\nbigraded\ngen e (1,1)\nrelation e^{n}\nw x = e\nw y = 0\nwpair x y\n", 2 * n + 2))
}

const S3S3: &str = "field Q\ncutoff 8\nbigraded\ngen a (1,1)\ngen b (1,1)\nrelation a^2\nrelation b^2\nw x = a\nw y = b\nwpair x y\n";
const TORUS: &str = "field Q(i)\ncutoff 4\nbigraded\ngen a (1,0) conj ab\ngen ab (0,1)\n";
const KT: &str = "field Q(i)\ncutoff 6\nbigraded\ngen a (1,0) conj ab\ngen ab (0,1)\nw x = i*a*ab\nw y = 0\nwpair x y\n";
const HEIS5_R: &str = "field Q(i)\ncutoff 5\nbigraded\ngen a1 (1,0) conj ab1\ngen a2 (1,0) conj ab2\ngen ab1 (0,1)\ngen ab2 (0,1)\n\
                       w x = i*a1*ab1 + i*a2*ab2\nw y = 0\nwpair x y\n";

/// A singly graded file with `type` annotations, as a typed minimal model.
fn typed(src: &str, up_to: u32) -> dgakit::sullivan::MinimalModel {
    let f = parse_presentation(src).unwrap();
    let a: &Presentation = &f.presentation;
    let types: Vec<Type> = a.generators().iter().map(|g| f.types.iter().find(|(n, _)| n == &g.name).unwrap().1).collect();
    typed_minimal_model(a, &types, up_to).unwrap()
}

fn span(n: usize, vs: &[&[i64]]) -> Subspace {
    Subspace::span(n, &vs.iter().map(|v| v.iter().map(|&x| Scalar::from_int(x)).collect()).collect::<Vec<_>>())
}

#[test]
fn weight_zero_line() {
    let f = Filtration::new(Direction::Decreasing, 1, [(0, Subspace::full(1)), (1, Subspace::zero(1))]).unwrap();
    let h = validate_hodge_structure(&f, &Conjugation::standard(1), 0).unwrap();
    assert_eq!(h.pieces.keys().copied().collect::<Vec<_>>(), vec![(0, 0)]);
    assert!(h.pieces[&(0, 0)].is_full());
}

#[test]
fn pure_type_one_one_square_of_the_kahler_class() {
    // ⟨dx⟩ in basic degree 2: F^2 = 0, F^1 = everything
    let f = Filtration::new(Direction::Decreasing, 1, [(1, Subspace::full(1)), (2, Subspace::zero(1))]).unwrap();
    let h = validate_hodge_structure(&f, &Conjugation::standard(1), 2).unwrap();
    assert!(h.pieces[&(1, 1)].is_full());
    assert_eq!(h.pieces.len(), 1);
}

#[test]
fn oversized_f1_fails_at_p_one() {
    // dim F^1 = 2 in a weight-1 plane: F^1 ∩ conj F^1 = V
    let f = Filtration::new(Direction::Decreasing, 2, [(0, Subspace::full(2)), (1, Subspace::full(2))]).unwrap();
    let err = validate_hodge_structure(&f, &Conjugation::standard(2), 1).unwrap_err();
    assert_eq!(err, HodgeError::Splitting { weight: 1, p: 1, deficit: 0, overlap: 2 });
}

#[test]
fn filtrations_must_nest() {
    let bad = Filtration::new(Direction::Increasing, 2, [(0, span(2, &[&[1, 0]])), (1, span(2, &[&[0, 1]])), (2, Subspace::full(2))]);
    assert!(bad.is_err());
    assert!(Filtration::new(Direction::Increasing, 2, [(0, span(2, &[&[1, 0]]))]).is_err());
}

#[test]
fn weight_one_curve() {
    // H^1 of an elliptic curve: v = (1, i) spans H^{1,0}
    let v = vec![Scalar::from_int(1), Scalar::i()];
    let f = Filtration::new(Direction::Decreasing, 2, [(0, Subspace::full(2)), (1, Subspace::span(2, &[v]))]).unwrap();
    let conj = Conjugation::standard(2);
    let h = validate_hodge_structure(&f, &conj, 1).unwrap();
    assert_eq!(h.cells().iter().map(|c| (c.p, c.q, c.dim)).collect::<Vec<_>>(), vec![(0, 1, 1), (1, 0, 1)]);
    assert!(h.is_direct_sum());
    assert!(h.swaps_under(&conj));
}

#[test]
fn non_real_weight_filtration_is_rejected() {
    let v = vec![Scalar::from_int(1), Scalar::i()];
    let w = Filtration::new(Direction::Increasing, 2, [(0, Subspace::span(2, &[v])), (1, Subspace::full(2))]).unwrap();
    let f = Filtration::new(Direction::Decreasing, 2, [(0, Subspace::full(2))]).unwrap();
    assert_eq!(canonical_bigrading(&w, &f, &Conjugation::standard(2)).unwrap_err(), HodgeError::NotReal { level: 0 });
}

#[test]
fn graded_piece_failure_names_the_weight() {
    // weight 0 on a line but F^1 = V
    let w = Filtration::new(Direction::Increasing, 1, [(0, Subspace::full(1))]).unwrap();
    let f = Filtration::new(Direction::Decreasing, 1, [(1, Subspace::full(1))]).unwrap();
    assert!(matches!(canonical_bigrading(&w, &f, &Conjugation::standard(1)), Err(HodgeError::NotMixed { weight: 0, .. })));
}

#[test]
fn hopf_diagram_puts_h1_in_type_one_one() {
    for n in 2..=4 {
        let d = diagram_filtrations(&hopf(n)).unwrap();
        assert!(d.d0_vanishes);
        assert!(d.e1_matches);
        let h1 = d.degree(1).unwrap();
        assert_eq!(h1.slots.iter().map(|c| (c.p, c.q, c.dim)).collect::<Vec<_>>(), vec![(1, 1, 1)]);
        assert!(d.degrees.iter().all(|x| x.audit.holds()));
        let shape = h1_h2_shape_check(&d);
        assert!(shape.holds);
        assert!(shape.h2.is_empty());
    }
}

#[test]
fn e1_dimensions_for_the_hopf_surface() {
    // oracle: H = ⟨1, e⟩, dim W = 2, so E_1^{−l, n+l} = dim H^{n−l} · C(2, l)
    let d = diagram_filtrations(&hopf(2)).unwrap();
    let dim = |p: i32, q: i32| d.e1.iter().find(|e| (e.p, e.q) == (p, q)).map_or(0, |e| e.dim);
    assert_eq!(dim(0, 0), 1);
    assert_eq!(dim(0, 2), 1);
    assert_eq!(dim(-1, 2), 2);
    assert_eq!(dim(-1, 4), 2);
    assert_eq!(dim(-2, 4), 1);
    assert_eq!(dim(-2, 6), 1);
    assert_eq!(dim(-2, 7), 0);
}

#[test]
fn s3_times_s3_shapes_are_vacuous() {
    let d = diagram_filtrations(&spec(S3S3)).unwrap();
    assert_eq!(d.degree(1).unwrap().dim, 0);
    assert_eq!(d.degree(2).unwrap().dim, 0);
    let shape = h1_h2_shape_check(&d);
    assert!(shape.holds && shape.h1.is_empty() && shape.h2.is_empty());
    // H^3 = ⟨[x b], [y a]⟩-type classes of weight 4, type (2,2)
    assert_eq!(d.degree(3).unwrap().slots.iter().map(|c| (c.p, c.q, c.dim)).collect::<Vec<_>>(), vec![(2, 2, 2)]);
}

#[test]
fn torus_h1_splits_into_one_zero_and_zero_one() {
    let d = diagram_filtrations(&spec(TORUS)).unwrap();
    let slots: Vec<_> = d.degree(1).unwrap().slots.iter().map(|c| (c.p, c.q, c.dim)).collect();
    assert_eq!(slots, vec![(0, 1, 1), (1, 0, 1)]);
    let shape = h1_h2_shape_check(&d);
    assert!(shape.holds);
    assert_eq!(shape.h2.iter().map(|c| (c.p, c.q)).collect::<Vec<_>>(), vec![(1, 1)]);
}

#[test]
fn fundamentality() {
    assert!(is_fundamental(&hopf(3)).holds);
    assert!(is_fundamental(&spec(S3S3)).holds);
    // dz = 2·cb has type (2,0)
    let s = spec("field Q(i)\ncutoff 5\nbigraded\ngen c (0,2) conj cb\ngen cb (2,0)\nw x = c + cb\nw y = i*c - i*cb\nwpair x y\n");
    let f = is_fundamental(&s);
    assert!(!f.holds);
    assert_eq!(f.witness.as_ref().unwrap().0, "x");
    assert!(matches!(diagram_filtrations(&s), Err(HodgeError::NotFundamental { .. })));
}

#[test]
fn bigraded_model_of_formal_h() {
    let m = bigraded_minimal_model(&spec(TORUS), 2).unwrap();
    assert!(m.holds(), "{:?}", m.incompatible);
    let mut types = m.minimal.types.clone();
    types.sort();
    assert_eq!(types, vec![(0, 1), (1, 0)]);
}

#[test]
fn bigraded_one_minimal_hopf() {
    let m = bigraded_minimal_model(&hopf(3), 1).unwrap();
    assert!(m.holds());
    // H^1 = ⟨y⟩ of type (1,1) and nothing to kill in degree 2
    assert_eq!(m.minimal.types, vec![(1, 1)]);
    let w = weight_count_check(&m.minimal, 1, 0);
    assert_eq!(w.counts, vec![(2, 1)]);
}

#[test]
fn weight_counts_of_two_step_models() {
    let kt = bigraded_minimal_model(&spec(KT), 1).unwrap();
    assert!(kt.holds());
    let w = weight_count_check(&kt.minimal, 2, 1);
    assert_eq!(w.counts, vec![(1, 2), (2, 2)]);
    assert_eq!((w.sum, w.weighted_sum), (4, 6));
    assert_eq!(w.branch, Some(WeightBranch::TwoOfWeightTwo));
    assert!(w.holds);

    let h5 = bigraded_minimal_model(&spec(HEIS5_R), 1).unwrap();
    let w = weight_count_check(&h5.minimal, 3, 1);
    assert_eq!(w.counts, vec![(1, 4), (2, 2)]);
    assert!(w.holds);
}

#[test]
fn three_step_filiform_breaks_the_count() {
    let m = typed(
        "field Q\ncutoff 5\ngen e1 1\ngen e2 1\ngen e3 1\ngen e4 1\nd e3 = e1*e2\nd e4 = e1*e3\n\
         type e1 (1,0)\ntype e2 (0,1)\ntype e3 (1,1)\ntype e4 (2,1)\n",
        1,
    );
    let w = weight_count_check(&m, 2, 1);
    assert_eq!(w.counts, vec![(1, 2), (2, 1), (3, 1)]);
    assert_eq!((w.sum, w.weighted_sum), (4, 7));
    assert!(!w.holds);
    assert_eq!(w.branch, None);
}

#[test]
fn torus_weights_are_all_one() {
    let m = typed("field Q\ncutoff 5\ngen a 1\ngen b 1\ngen c 1\ngen e 1\ntype a (1,0)\ntype b (0,1)\ntype c (1,0)\ntype e (0,1)\n", 1);
    let w = weight_count_check(&m, 2, 0);
    assert_eq!(w.counts, vec![(1, 4)]);
    assert!(w.holds);
}

#[test]
fn dual_lie_of_abelian_heisenberg_and_a_bad_model() {
    let ab = typed("field Q\ncutoff 4\ngen a 1\ngen b 1\ntype a (1,0)\ntype b (0,1)\n", 1);
    let l = dual_lie_presentation(&ab).unwrap();
    assert!(l.brackets.is_empty());
    // the single commutator [A, B] = 0, dual to a·b
    assert_eq!(l.relations.iter().map(|r| (r.bidegree, r.count)).collect::<Vec<_>>(), vec![((-1, -1), 1)]);
    assert!(l.holds);

    let heis = typed("field Q\ncutoff 4\ngen e1 1\ngen e2 1\ngen e3 1\nd e3 = e1*e2\ntype e1 (1,0)\ntype e2 (0,1)\ntype e3 (1,1)\n", 1);
    let l = dual_lie_presentation(&heis).unwrap();
    assert_eq!(l.generators.len(), 2);
    assert_eq!(l.brackets.len(), 1);
    assert_eq!(l.brackets[0].bidegree, (-1, -1));
    // oracle: H^2 of the Heisenberg algebra is ⟨e1 e3, e2 e3⟩
    let mut rel: Vec<_> = l.relations.iter().map(|r| (r.bidegree, r.count)).collect();
    rel.sort();
    assert_eq!(rel, vec![((-2, -1), 1), ((-1, -2), 1)]);
    assert!(l.holds);

    let bad = typed("field Q\ncutoff 4\ngen a 1\ngen c 1\ntype a (1,0)\ntype c (2,1)\n", 1);
    let l = dual_lie_presentation(&bad).unwrap();
    assert!(!l.holds);
    assert!(l.offending.contains(&(-3, -1)));
}

fn check_bigrading_laws(seed: u64, perturb: bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = common::random_mhs(&mut rng, 10, perturb);
    let b = canonical_bigrading(&m.w, &m.f, &m.conj).unwrap();
    assert!(b.audit.holds(), "{:?}", b.audit);
    let total: usize = b.pieces.values().map(Subspace::dim).sum();
    assert_eq!(total, m.dim);
    if !perturb {
        for (k, s) in &m.pieces {
            assert_eq!(&b.piece(k.0, k.1), s, "V_{k:?}");
        }
        assert!(b.is_real_split(&m.conj));
    }
    // the pieces have the same dimensions as the splitting they came from
    for (k, s) in &m.pieces {
        assert_eq!(b.piece(k.0, k.1).dim(), s.dim());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn canonical_bigrading_of_split_structures(seed in any::<u64>()) {
        check_bigrading_laws(seed, false);
    }

    #[test]
    fn canonical_bigrading_of_perturbed_structures(seed in any::<u64>()) {
        check_bigrading_laws(seed, true);
    }

    #[test]
    fn pure_structures_two_characterizations_agree(seed in any::<u64>()) {
        // a single weight: F-splitting holds iff the F^p ∩ conj F^q form a direct sum
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = common::random_mhs(&mut rng, 6, false);
        for n in 0..=6 {
            let ok = validate_hodge_structure(&m.f, &m.conj, n);
            let pure = m.pieces.keys().all(|(p, q)| p + q == n);
            prop_assert_eq!(ok.is_ok(), pure);
            if let Ok(h) = ok {
                prop_assert!(h.is_direct_sum());
                prop_assert!(h.swaps_under(&m.conj));
            }
        }
    }

    #[test]
    fn fundamentality_ignores_the_basis_of_w(re in -3i64..=3, im in -3i64..=3, c in 0usize..3) {
        prop_assume!(re != 0 || im != 0);
        // z' = g·z for g = re + i·im: u' = re·u − im·Ju, Ju' = im·u + re·Ju
        let targets = [("a", "b"), ("a + b", "b"), ("a + c + cb", "b - i*c + i*cb")];
        let extra = "gen c (2,0) conj cb\ngen cb (0,2)\n";
        let src = |x: String, y: String| format!(
            "field Q(i)\ncutoff 5\nbigraded\ngen a (1,1)\ngen b (1,1)\n{extra}w x = {x}\nw y = {y}\nwpair x y\n"
        );
        let (x, y) = targets[c];
        let base = src(x.into(), y.into());
        let moved = src(format!("({re})*({x}) - ({im})*({y})"), format!("({im})*({x}) + ({re})*({y})"));
        let f0 = is_fundamental(&spec(&base));
        let f1 = is_fundamental(&spec(&moved));
        prop_assert_eq!(f0.holds, f1.holds);
        prop_assert_eq!(f0.holds, c < 2);
    }
}
