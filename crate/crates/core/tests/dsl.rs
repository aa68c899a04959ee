use dgakit::cohomology::{bigraded_cohomology, cohomology};
use dgakit::corpus::{chevalley_eilenberg, entries, hopf_model, standard_complex_structure};
use dgakit::dolbeault::{build_de_rham_model, build_dolbeault_model, TransverseKahlerModelSpec};
use dgakit::dsl::{parse_filtration, parse_presentation, write_filtration, write_presentation, DslError, LevelSpec, PresentationFile};
use dgakit::exactfield::Scalar;
use dgakit::gca::{Differential, Presentation};
use proptest::prelude::*;

#[test]
fn shipped_hopf_file_gives_the_builder_tables() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../models/hopf_n3.dga");
    let text = std::fs::read_to_string(path).unwrap();
    let from_file = TransverseKahlerModelSpec::from_file(&parse_presentation(&text).unwrap()).unwrap();
    let built = hopf_model(3);
    let betti = |s: &TransverseKahlerModelSpec| cohomology(&build_de_rham_model(s).unwrap()).dims();
    let hodge = |s: &TransverseKahlerModelSpec| bigraded_cohomology(&build_dolbeault_model(s).unwrap(), Differential::Dbar).nonzero();
    assert_eq!(betti(&from_file), betti(&built));
    assert_eq!(hodge(&from_file), hodge(&built));
}

#[test]
fn torus_file_has_the_torus_cohomology() {
    let f = parse_presentation("# the 2-torus\nfield Q\ncutoff 3\ngen x 1\ngen y 1   # trailing comment\n").unwrap();
    assert_eq!(cohomology(&f.presentation).dims(), vec![1, 2, 1]);
}

#[test]
fn linear_differential_is_rejected_with_a_position() {
    let err = parse_presentation("field Q(i)\ncutoff 4\nbigraded\ngen z (1,0) conj zb\ngen zb (0,1)\ngen x (1,0) conj xb\ngen xb (0,1)\nd z = x\n").unwrap_err();
    assert_eq!(err.pos().line, 8);
    assert!(matches!(err, DslError::Semantic { .. }), "{err}");
}

#[test]
fn diagnostics_carry_positions() {
    let cases = [
        ("cutoff 4\ngen x 1\ngen x 1\n", 3),
        ("cutoff 4\ngen x one\n", 2),
        ("cutoff 4\ngen x 1\nd y = x\n", 3),
        ("field R\n", 1),
        ("cutoff 4\ngen x 2\nrelation x^0\n", 3),
        ("cutoff 4\ngen x 1\nd x = 1/0\n", 3),
        ("cutoff 4\ngen a 2\nw u = a\nwpair u v\n", 4),
    ];
    for (src, line) in cases {
        let err = parse_presentation(src).unwrap_err();
        assert_eq!(err.pos().line, line, "{src:?}: {err}");
        assert!(err.to_string().starts_with(&format!("{line}:")), "{err}");
    }
}

#[test]
fn every_shipped_file_round_trips() {
    for e in entries() {
        let text = e.source();
        let f = parse_presentation(&text).unwrap();
        assert_eq!(write_presentation(&f), text, "{}", e.name);
    }
}

#[test]
fn filtration_files_round_trip() {
    let src = "field Q(i)\nspace 3\nW 0 = zero\nW 1 = (1, 0, 0)\nW 2 = full\nF 0 = full\nF 1 = (1, i, 0);(0, 0, 1)\nF 2 = zero\n";
    let f = parse_filtration(src).unwrap();
    assert_eq!(f.weight[1].1, LevelSpec::Span(vec![vec![Scalar::from_int(1), Scalar::from_int(0), Scalar::from_int(0)]]));
    assert_eq!(parse_filtration(&write_filtration(&f)).unwrap(), f);
}

fn random_algebra() -> impl Strategy<Value = Presentation> {
    (2usize..=3, proptest::collection::vec((-3i64..=3, 1i64..=4), 3), any::<bool>()).prop_map(|(m, coeffs, bigraded)| {
        let n = 2 * m;
        let pairs: Vec<(usize, usize)> = (1..m).map(|i| (i, i + 1)).collect();
        let consts: Vec<(usize, usize, usize, i64)> =
            pairs.iter().zip(&coeffs).filter(|(_, (c, _))| *c != 0).map(|(&(i, j), &(c, _))| (2 * i - 1, 2 * j - 1, n, c)).collect();
        let ce = chevalley_eilenberg(n, &consts, None).unwrap();
        let mut p = ce.presentation;
        for (k, &(_, den)) in coeffs.iter().enumerate().take(n) {
            let d = p.d_of(k).scale(&Scalar::from_ratio(1, den));
            if !d.is_zero() {
                p.set_d(k, d);
            }
        }
        if bigraded {
            chevalley_eilenberg(4, &[(1, 2, 3, 1)], Some(&standard_complex_structure(4))).unwrap().bigraded.unwrap()
        } else {
            p
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn write_then_parse_is_identity(a in random_algebra(), typed in any::<bool>()) {
        prop_assume!(a.validate().is_ok());
        let mut f = PresentationFile::plain(a.clone());
        if typed {
            f.types = a.generators().iter().map(|g| (g.name.clone(), (1, 0))).collect();
        }
        let text = write_presentation(&f);
        let back = parse_presentation(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(write_presentation(&back), text);
    }
}
