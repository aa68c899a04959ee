use std::collections::BTreeMap;

use dgakit::cohomology::{bigraded_cohomology, cohomology};
use dgakit::dolbeault::{
    bott_chern, build_de_rham_model, build_dolbeault_model, dc_subalgebra_chain, ddbar_check, frolicher_check, tot_compare,
    vaisman_tot_compare, DolbeaultError, TransverseKahlerModelSpec,
};
use dgakit::dsl::parse_presentation;
use dgakit::gca::{Differential, Presentation};

fn spec(src: &str) -> Result<TransverseKahlerModelSpec, DolbeaultError> {
    TransverseKahlerModelSpec::from_file(&parse_presentation(src).unwrap())
}

/// `S^1 × S^{2n−1}` with `dz = c·e`, `c = re + i·im`.
fn hopf(n: u32, re: i64, im: i64) -> TransverseKahlerModelSpec {
    spec(&format!(
        "field Q\ncutoff {}\nbigraded\ngen e (1,1)\nrelation e^{n}\nw x = {re}*e\nw y = {im}*e\nwpair x y\n",
        2 * n + 2
    ))
    .unwrap()
}

const S3S3: &str = "field Q\ncutoff 8\nbigraded\ngen a (1,1)\ngen b (1,1)\nrelation a^2\nrelation b^2\nw x = a\nw y = b\nwpair x y\n";

const KODAIRA_THURSTON: &str = "field Q(i)\ncutoff 6\nbigraded\ngen w1 (1,0) conj wb1\ngen w2 (1,0) conj wb2\ngen wb1 (0,1)\ngen wb2 (0,1)\nd w2 = (1/2*i)*w1*wb1\nd wb2 = (1/2*i)*w1*wb1\n";

fn nonzero(b: &Presentation) -> BTreeMap<(u32, u32), usize> {
    bigraded_cohomology(b, Differential::Dbar).nonzero()
}

#[test]
fn hopf_three_fold_models() {
    let s = hopf(3, 1, 0);
    let a = build_de_rham_model(&s).unwrap();
    // S^1 × S^5 by Künneth
    assert_eq!(cohomology(&a).dims(), vec![1, 1, 0, 0, 0, 1, 1, 0]);
    let b = build_dolbeault_model(&s).unwrap();
    // hand computation: ∂̄z = e, ∂̄z̄ = 0 leaves 1, z̄, e²z, e²zz̄
    let want: BTreeMap<(u32, u32), usize> = [((0, 0), 1), ((0, 1), 1), ((3, 2), 1), ((3, 3), 1)].into_iter().collect();
    assert_eq!(nonzero(&b), want);
}

#[test]
fn hopf_dims_do_not_depend_on_c() {
    let one = build_dolbeault_model(&hopf(3, 1, 0)).unwrap();
    let other = build_dolbeault_model(&hopf(3, 2, 1)).unwrap();
    assert_eq!(nonzero(&one), nonzero(&other));
    assert_eq!(cohomology(&build_de_rham_model(&hopf(3, 2, 1)).unwrap()).dims(), vec![1, 1, 0, 0, 0, 1, 1, 0]);
}

#[test]
fn s3_times_s3_dolbeault_numbers() {
    let s = spec(S3S3).unwrap();
    let a = build_de_rham_model(&s).unwrap();
    assert_eq!(cohomology(&a).dims(), vec![1, 0, 0, 2, 0, 0, 1, 0]);
    let t = bigraded_cohomology(&build_dolbeault_model(&s).unwrap(), Differential::Dbar);
    for (p, q) in [(1, 0), (2, 0), (3, 0), (0, 2), (0, 3)] {
        assert_eq!(t.dim(p, q), 0, "h^{p},{q}");
    }
    for (p, q) in [(0, 1), (2, 1), (1, 2)] {
        assert_eq!(t.dim(p, q), 1, "h^{p},{q}");
    }
}

#[test]
fn w_zero_gives_h_back() {
    let s = spec("field Q\ncutoff 6\nbigraded\ngen e (1,1)\nrelation e^3\n").unwrap();
    let a = build_de_rham_model(&s).unwrap();
    assert_eq!(cohomology(&a).dims(), vec![1, 0, 1, 0, 1, 0]);
    let b = build_dolbeault_model(&s).unwrap();
    assert!(ddbar_check(&b).holds);
    assert!(bott_chern(&b).all_iso);
}

#[test]
fn unpaired_or_complex_w_is_rejected() {
    assert!(matches!(
        spec("field Q\ncutoff 6\nbigraded\ngen e (1,1)\nw x = e\n"),
        Err(DolbeaultError::Shape(m)) if m.contains("real dimension")
    ));
    assert!(spec("field Q\ncutoff 6\nbigraded\ngen e (1,1)\nw x = e\nw y = e\nwpair x x\n").is_err());
    // dz would have a (0,2) component
    let bad = "field Q(i)\ncutoff 6\nbigraded\ngen a (1,0) conj ab\ngen ab (0,1)\ngen c (0,2) conj cb\ngen cb (2,0)\nw x = c + cb\nw y = -i*c + i*cb\nwpair x y\n";
    assert!(spec(bad).is_err());
}

#[test]
fn ddbar_on_h_passes_and_kodaira_thurston_fails_in_degree_two() {
    for src in [S3S3, "field Q\ncutoff 8\nbigraded\ngen e (1,1)\nrelation e^3\n"] {
        let h = parse_presentation(src).unwrap().presentation;
        assert!(ddbar_check(&h).holds);
    }
    let kt = parse_presentation(KODAIRA_THURSTON).unwrap().presentation;
    // oracle: w1·wb1 = d(−2i·w2) is ∂- and ∂̄-closed, while im ∂∂̄ vanishes
    // in degree 2 because A^0 = ℂ
    let r = ddbar_check(&kt);
    assert_eq!(r.first_failure, Some(2));
    let d2 = &r.degrees[2];
    assert_eq!(d2.ddbar_exact, 0);
    assert!(d2.closed_exact >= 1);
}

#[test]
fn bott_chern_on_kodaira_thurston_is_not_iso() {
    let kt = parse_presentation(KODAIRA_THURSTON).unwrap().presentation;
    let r = bott_chern(&kt);
    assert!(!r.all_iso);
    // H_BC^{1,1} contains both w1·wb1 and w2·wb2-type classes; at least the
    // exact w1·wb1 is new there
    let c11 = r.cells.iter().find(|c| (c.p, c.q) == (1, 1)).unwrap();
    assert!(c11.dim > 0);
}

#[test]
fn frolicher_inequality() {
    let kt = parse_presentation(KODAIRA_THURSTON).unwrap().presentation;
    assert!(frolicher_check(&kt).iter().all(|d| d.holds()));
    let b = build_dolbeault_model(&hopf(2, 1, 0)).unwrap();
    assert!(frolicher_check(&b).iter().all(|d| d.is_equality()));
}

#[test]
fn vaisman_comparison_on_hopf_surfaces_and_threefolds() {
    for n in 2..=4 {
        let s = spec(&format!(
            "field Q\ncutoff {}\nbigraded\ngen e (1,1)\nrelation e^{n}\nw t = 0\nw jt = e\nwpair t jt\n",
            2 * n + 2
        ))
        .unwrap();
        let r = vaisman_tot_compare(&s).unwrap();
        assert!(r.is_isomorphism, "n = {n}");
        assert!(r.totals_agree, "n = {n}");
        let (b1, formula) = r.first_betti.unwrap();
        assert_eq!(b1, formula);
        assert_eq!(b1 % 2, 1);
    }
}

#[test]
fn vaisman_shape_is_enforced() {
    let zero = spec("field Q\ncutoff 6\nbigraded\ngen e (1,1)\nrelation e^2\nw t = 0\nw jt = 0\nwpair t jt\n").unwrap();
    assert!(vaisman_tot_compare(&zero).is_err());
    let closed_jt = spec("field Q\ncutoff 6\nbigraded\ngen e (1,1)\nrelation e^2\nw t = e\nw jt = 0\nwpair t jt\n").unwrap();
    assert!(vaisman_tot_compare(&closed_jt).is_err());
    // the general comparison still applies
    assert!(tot_compare(&closed_jt).unwrap().is_isomorphism);
    let torus_like = spec("field Q\ncutoff 6\nbigraded\ngen e (1,1)\nrelation e^2\nw t = 0\nw jt = e\nwpair t jt\n").unwrap();
    let r = vaisman_tot_compare(&torus_like).unwrap();
    // S^1 × S^3
    assert_eq!(r.betti, vec![1, 1, 0, 1, 1, 0]);
}

#[test]
fn dc_chain_on_h_models() {
    let s = hopf(3, 1, 0);
    let b = build_dolbeault_model(&s).unwrap();
    let r = dc_subalgebra_chain(&b, s.h().ngens()).unwrap();
    assert!(r.holds, "{r:?}");
    let h_only = build_dolbeault_model(&spec("field Q\ncutoff 5\nbigraded\ngen e (1,1)\nrelation e^2\n").unwrap()).unwrap();
    let r = dc_subalgebra_chain(&h_only, h_only.ngens()).unwrap();
    assert!(r.holds);
    for arrow in &r.arrows {
        assert_eq!(arrow.source, arrow.target);
    }
}

#[test]
fn dc_chain_with_a_nontrivial_base() {
    // base: the ∂∂̄-square x, ∂x = u, ∂̄x = v, ∂∂̄x = w and its conjugate, all
    // products killed; tensored with one closed pair z, zb
    let gens = [("x", "(1,0)", false), ("u", "(2,0)", true), ("v", "(1,1)", true), ("w", "(2,1)", false)];
    let mut names = Vec::new();
    let mut src = String::from("field Q(i)\ncutoff 5\nbigraded\n");
    for (g, bd, _) in gens {
        src += &format!("gen {g} {bd} conj {g}b\n");
    }
    for (g, bd, _) in gens {
        let (p, q) = (&bd[1..2], &bd[3..4]);
        src += &format!("gen {g}b ({q},{p})\n");
    }
    for (g, _, even) in gens {
        names.push((g.to_string(), even));
        names.push((format!("{g}b"), even));
    }
    for i in 0..names.len() {
        for j in i..names.len() {
            if i == j && !names[i].1 {
                continue;
            }
            src += &format!("relation {}*{}\n", names[i].0, names[j].0);
        }
    }
    src += "gen z (1,0) conj zb\ngen zb (0,1)\nd x = u + v\nd u = -w\nd v = w\nd xb = ub + vb\nd ub = -wb\nd vb = wb\n";
    let b = parse_presentation(&src).unwrap().presentation;
    let base = b.prefix(8).unwrap();
    assert!(ddbar_check(&base).holds);
    let r = dc_subalgebra_chain(&b, 8).unwrap();
    assert!(r.holds, "{r:?}");
    // ker d^c is a proper subcomplex
    assert!(r.arrows[0].source.iter().zip(&r.arrows[0].target).any(|(s, t)| s < t));
}

#[test]
fn dc_chain_needs_the_ddbar_lemma() {
    let kt = parse_presentation(KODAIRA_THURSTON).unwrap().presentation;
    assert_eq!(dc_subalgebra_chain(&kt, 4).unwrap_err(), DolbeaultError::DdbarFails { degree: 2 });
}
