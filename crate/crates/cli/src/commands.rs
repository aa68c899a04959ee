use std::fs;
use std::path::Path;

use dgakit::cohomology::{bigraded_cohomology, cohomology, kunneth_check};
use dgakit::corpus::{self, CorpusModel};
use dgakit::dolbeault::{basic_hodge_numbers, build_de_rham_model, build_dolbeault_model, ddbar_check, TransverseKahlerModelSpec};
use dgakit::dsl::{parse_filtration, parse_presentation, PresentationFile};
use dgakit::exactfield::Field;
use dgakit::gca::{Differential, Presentation};
use dgakit::hirsch::{weight_spectral_sequence, HirschData};
use dgakit::hodge::{
    canonical_bigrading, diagram_filtrations, dual_lie_presentation, h1_h2_shape_check, is_fundamental, weight_count_check, Conjugation, Direction,
    Filtration, WeightBranch,
};
use dgakit::sullivan::{minimal_model, one_minimal_model, MinimalModel};

use crate::document::{InputDigest, ResultDocument, Table};
use crate::error::CliError;

/// Overrides applied to a presentation file after parsing.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub cutoff: Option<u32>,
    pub field: Option<Field>,
}

pub fn read(path: &Path, doc: &mut ResultDocument) -> Result<String, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    doc.inputs.push(InputDigest::new(&path.display().to_string(), &bytes));
    String::from_utf8(bytes).map_err(|_| CliError::input(format!("{}: not UTF-8", path.display())))
}

fn apply(mut f: PresentationFile, o: Overrides) -> Result<PresentationFile, CliError> {
    if let Some(c) = o.cutoff {
        f.presentation = f.presentation.with_cutoff(c);
    }
    match (o.field, f.presentation.field()) {
        (Some(Field::Gaussian), Field::Rational) => f.presentation = f.presentation.complexified(),
        (Some(Field::Rational), Field::Gaussian) => return Err(CliError::input("the file is over Q(i) and cannot be restricted to Q")),
        _ => {}
    }
    Ok(f)
}

pub fn load(path: &Path, o: Overrides, doc: &mut ResultDocument) -> Result<PresentationFile, CliError> {
    let src = read(path, doc)?;
    let f = parse_presentation(&src).map_err(|e| CliError::input(format!("{}:{e}", path.display())))?;
    apply(f, o)
}

fn load_model(path: &Path, o: Overrides, doc: &mut ResultDocument) -> Result<CorpusModel, CliError> {
    Ok(CorpusModel::from_file(&load(path, o, doc)?)?)
}

fn spec<'a>(m: &'a CorpusModel, what: &str) -> Result<&'a TransverseKahlerModelSpec, CliError> {
    Ok(m.spec(what)?)
}

/// The de Rham algebra of a model: the file itself or `H ⊗ ∧W`.
fn algebra(m: &CorpusModel) -> Result<Presentation, CliError> {
    Ok(match m {
        CorpusModel::Spec(s) => build_de_rham_model(s)?,
        CorpusModel::Algebra(f) => f.presentation.clone(),
    })
}

fn bigraded_table(name: &str, b: &Presentation) -> Table {
    let t = bigraded_cohomology(b, Differential::Dbar);
    Table::pairs(name, t.nonzero().into_iter().map(|((p, q), d)| (p as i64, q as i64, d)))
}

pub fn cohomology_cmd(path: &Path, o: Overrides, doc: &mut ResultDocument) -> Result<(), CliError> {
    let m = load_model(path, o, doc)?;
    if let CorpusModel::Spec(s) = &m {
        doc.table(Table::degrees("basic betti", &cohomology(&s.h().forget_bigrading()).dims()));
    }
    let a = algebra(&m)?;
    let t = cohomology(&a);
    doc.table(Table::degrees("betti", &t.dims()));
    for n in 0..t.len() {
        for (j, r) in t.representatives(n).iter().enumerate() {
            doc.witness(format!("H^{n}[{j}]"), a.format(r));
        }
    }
    doc.details(&t.dims());
    Ok(())
}

pub fn dolbeault_cmd(path: &Path, o: Overrides, doc: &mut ResultDocument) -> Result<(), CliError> {
    match load_model(path, o, doc)? {
        CorpusModel::Spec(s) => {
            let basic = basic_hodge_numbers(&s);
            doc.table(Table::pairs("basic hodge", basic.iter().filter(|c| c.dim > 0).map(|c| (c.p as i64, c.q as i64, c.dim))));
            doc.table(bigraded_table("dolbeault", &build_dolbeault_model(&s)?));
            doc.details(&basic);
        }
        CorpusModel::Algebra(f) if f.presentation.is_bigraded() => doc.table(bigraded_table("dolbeault", &f.presentation)),
        CorpusModel::Algebra(_) => return Err(CliError::input("Dolbeault cohomology needs a bigraded algebra or a foliation model")),
    }
    Ok(())
}

fn describe_model(m: &MinimalModel, target: &Presentation, doc: &mut ResultDocument) -> Result<(), CliError> {
    let counts = m.generator_counts();
    doc.table(Table::singles("generators", "degree", counts.iter().map(|c| (c.degree as i64, c.generators))));
    for (i, g) in m.model.generators().iter().enumerate() {
        doc.witness(format!("d {}", g.name), m.model.format(m.model.d_of(i)));
        doc.witness(format!("phi({})", g.name), target.format(&m.map.images()[i]));
    }
    let cert = m.certificate()?;
    let detail = match &cert.failure {
        None => format!("through degree {}", cert.up_to),
        Some(f) => format!("{:?} in degree {} at {}", f.kind, f.degree, f.witness),
    };
    doc.verdict("quasi-isomorphism", cert.holds, detail);
    if !m.complete {
        doc.note("the stage limit cut the degree-1 tower short");
    }
    doc.details(&counts);
    Ok(())
}

pub fn minimal_model_cmd(path: &Path, o: Overrides, up_to: u32, doc: &mut ResultDocument) -> Result<(), CliError> {
    let a = algebra(&load_model(path, o, doc)?)?;
    let m = minimal_model(&a, up_to)?;
    describe_model(&m, &a, doc)
}

pub fn one_minimal_cmd(path: &Path, o: Overrides, stages: u32, doc: &mut ResultDocument) -> Result<(), CliError> {
    let a = algebra(&load_model(path, o, doc)?)?;
    let m = one_minimal_model(&a, stages)?;
    describe_model(&m, &a, doc)
}

pub fn hirsch_cmd(path: &Path, o: Overrides, doc: &mut ResultDocument) -> Result<(), CliError> {
    let f = load(path, o, doc)?;
    let (degree, ext) = f.extension.clone().ok_or_else(|| CliError::input("the file has no `extend` block"))?;
    let (names, beta): (Vec<String>, Vec<_>) = ext.into_iter().unzip();
    let h = HirschData::new(f.presentation, degree, names, beta)?;
    let (report, _) = weight_spectral_sequence(&h)?;
    for (r, page) in report.pages.iter().enumerate() {
        doc.table(Table::pairs(&format!("E{r}"), page.iter().filter(|e| e.dim > 0).map(|e| (e.p as i64, e.q as i64, e.dim))));
    }
    doc.table(Table::pairs("E_inf", report.e_infinity.iter().filter(|e| e.dim > 0).map(|e| (e.p as i64, e.q as i64, e.dim))));
    doc.table(Table::degrees("betti", &report.cohomology));
    doc.verdict("E2 = H(A) x free(V)", report.e2_matches_prediction, "dimension by dimension");
    if !report.later_differentials.is_empty() {
        let degrees: Vec<String> = report.later_differentials.iter().map(u32::to_string).collect();
        doc.note(format!("higher differentials act in total degrees {}", degrees.join(", ")));
    }
    doc.details(&report);
    Ok(())
}

pub fn ddbar_cmd(path: &Path, o: Overrides, doc: &mut ResultDocument) -> Result<(), CliError> {
    let b = match load_model(path, o, doc)? {
        CorpusModel::Spec(s) => {
            doc.note("checked on the basic algebra H");
            s.h().complexified()
        }
        CorpusModel::Algebra(f) if f.presentation.is_bigraded() => f.presentation,
        CorpusModel::Algebra(_) => return Err(CliError::input("the ∂∂̄-lemma needs a bigraded algebra")),
    };
    let report = ddbar_check(&b);
    doc.table(Table::singles("closed and d-exact", "degree", report.degrees.iter().map(|d| (d.degree as i64, d.closed_exact))));
    doc.table(Table::singles("ddbar-exact", "degree", report.degrees.iter().map(|d| (d.degree as i64, d.ddbar_exact))));
    let detail = match report.first_failure {
        None => "holds in every degree".to_string(),
        Some(d) => format!("fails in degree {d}"),
    };
    doc.verdict("ddbar-lemma", report.holds, detail);
    doc.details(&report);
    Ok(())
}

fn is_filtration_file(src: &str) -> bool {
    src.lines().any(|l| l.split('#').next().unwrap_or("").split_whitespace().next() == Some("space"))
}

pub fn bigrading_cmd(path: &Path, o: Overrides, doc: &mut ResultDocument) -> Result<(), CliError> {
    let src = read(path, doc)?;
    if is_filtration_file(&src) {
        let ff = parse_filtration(&src).map_err(|e| CliError::input(format!("{}:{e}", path.display())))?;
        let w = Filtration::from_levels(Direction::Increasing, ff.space, &ff.weight)?;
        let f = Filtration::from_levels(Direction::Decreasing, ff.space, &ff.hodge)?;
        let conj = Conjugation::standard(ff.space);
        let b = canonical_bigrading(&w, &f, &conj)?;
        doc.table(Table::pairs("bigrading", b.cells().iter().map(|c| (c.p as i64, c.q as i64, c.dim))));
        doc.verdict("bigrading audit", b.audit.holds(), format!("{:?}", b.audit));
        doc.note(if b.is_real_split(&conj) { "split over R" } else { "not split over R" });
        doc.details(&b.audit);
        return Ok(());
    }
    let f = apply(parse_presentation(&src).map_err(|e| CliError::input(format!("{}:{e}", path.display())))?, o)?;
    let m = CorpusModel::from_file(&f)?;
    let report = diagram_filtrations(spec(&m, "the mixed Hodge diagram")?)?;
    let mut audit = true;
    for d in &report.degrees {
        doc.table(Table::pairs(&format!("H^{} bigrading", d.degree), d.slots.iter().map(|c| (c.p as i64, c.q as i64, c.dim))));
        audit &= d.audit.holds();
    }
    doc.verdict("bigrading audit", audit, "every degree");
    let shapes = h1_h2_shape_check(&report);
    doc.verdict("H1/H2 shapes", shapes.holds, format!("offending slots {:?}", shapes.offending));
    doc.details(&report);
    Ok(())
}

pub fn fundamental_cmd(path: &Path, o: Overrides, doc: &mut ResultDocument) -> Result<(), CliError> {
    let m = load_model(path, o, doc)?;
    let r = is_fundamental(spec(&m, "fundamentality")?);
    match &r.witness {
        None => doc.verdict("fundamental", true, "d(W) lies in H^{1,1}"),
        Some((g, off)) => {
            doc.witness(format!("off-type part of d {g}"), off.clone());
            doc.verdict("fundamental", false, format!("d {g} leaves H^{{1,1}}"));
        }
    }
    doc.details(&r);
    Ok(())
}

pub fn weight_count_cmd(path: &Path, o: Overrides, n: usize, k: usize, doc: &mut ResultDocument) -> Result<(), CliError> {
    let m = load_model(path, o, doc)?;
    let w = weight_count_check(&m.weight_model()?, n, k);
    doc.table(Table::singles("degree-1 generators", "weight", w.counts.iter().map(|&(wt, c)| (wt as i64, c))));
    let branch = match w.branch {
        Some(WeightBranch::TwoOfWeightTwo) => ", m2 = 2",
        Some(WeightBranch::OneOfWeightThree) => ", m3 = 1",
        None => "",
    };
    let detail = format!("sum {} (want {}), weighted {} (want {}){branch}", w.sum, w.expected_sum, w.weighted_sum, w.expected_weighted_sum);
    doc.verdict("weight count", w.holds, detail);
    doc.details(&w);
    Ok(())
}

pub fn dual_lie_cmd(path: &Path, o: Overrides, doc: &mut ResultDocument) -> Result<(), CliError> {
    let m = load_model(path, o, doc)?;
    let lie = dual_lie_presentation(&m.weight_model()?)?;
    for g in &lie.generators {
        doc.witness(format!("generator {}", g.name), format!("{:?}", g.bidegree));
    }
    for b in &lie.brackets {
        doc.witness(format!("bracket {} {:?}", b.target, b.bidegree), b.dual.clone());
    }
    doc.table(Table::pairs("relations", lie.relations.iter().map(|r| (r.bidegree.0 as i64, r.bidegree.1 as i64, r.count))));
    doc.verdict("allowed bidegrees", lie.holds, format!("offending {:?}", lie.offending));
    doc.details(&lie);
    Ok(())
}

pub fn kunneth_cmd(first: &Path, second: &Path, o: Overrides, doc: &mut ResultDocument) -> Result<(), CliError> {
    let plain = Overrides { cutoff: None, ..o };
    let a = algebra(&load_model(first, plain, doc)?)?;
    let b = algebra(&load_model(second, plain, doc)?)?;
    let cutoff = o.cutoff.unwrap_or(a.cutoff() + b.cutoff() - 2);
    let r = kunneth_check(&a.with_cutoff(cutoff), &b.with_cutoff(cutoff))?;
    doc.table(Table::degrees("product", &r.product));
    doc.table(Table::degrees("convolution", &r.convolution));
    doc.verdict("kunneth", r.holds, format!("degrees below {cutoff}"));
    doc.details(&r);
    Ok(())
}

pub fn corpus_cmd(dir: Option<&Path>, export: Option<&Path>, doc: &mut ResultDocument) -> Result<(), CliError> {
    if let Some(out) = export {
        let written = corpus::export(out).map_err(|e| CliError::input(format!("{}: {e}", out.display())))?;
        doc.note(format!("wrote {} files to {}", written.len(), out.display()));
    }
    let mut reports = Vec::new();
    for entry in corpus::entries() {
        let entry = match dir {
            Some(d) => {
                let path = d.join(entry.file_name());
                let f = load(&path, Overrides::default(), doc)?;
                entry.with_file(&f)?
            }
            None => entry,
        };
        let report = entry.run()?;
        let failed: Vec<String> = report.checks.iter().filter(|c| !c.pass).map(|c| format!("{}: expected {}, got {}", c.label, c.expected, c.computed)).collect();
        let detail = if failed.is_empty() { format!("{} checks", report.checks.len()) } else { failed.join("; ") };
        doc.verdict(&report.name, report.pass, detail);
        reports.push(report);
    }
    doc.details(&reports);
    Ok(())
}
