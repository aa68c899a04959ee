use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::builders::{elliptic_model, hopf_basic_ring, hopf_model, product_model, s3s3_model, vaisman_model};
use super::lie::{chevalley_eilenberg, standard_complex_structure, LieAlgebra};
use super::CorpusError;
use crate::cohomology::{bigraded_cohomology, cohomology, kunneth_check};
use crate::dolbeault::{basic_hodge_numbers, build_de_rham_model, build_dolbeault_model, ddbar_check, TransverseKahlerModelSpec};
use crate::dsl::{write_presentation, PresentationFile};
use crate::gca::{Differential, Polynomial, Presentation};
use crate::hodge::{bigraded_minimal_model, diagram_filtrations, h1_h2_shape_check, is_fundamental, weight_count_check, WeightBranch};
use crate::sullivan::{minimal_model, typed_minimal_model, MinimalModel, Type};

pub const FILE_EXTENSION: &str = "dga";

/// Where an expected number comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Stated in the literature the example is taken from.
    Reference,
    /// Immediate from the definitions.
    Elementary,
    /// Computed independently by hand (Künneth, explicit cocycles, known
    /// Betti numbers of the underlying manifold).
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// `dim H^r` of the basic ring `H`.
    BasicBetti,
    /// `dim H^{p,q}` of the basic ring `H`.
    BasicHodge,
    /// `dim H^r` of the de Rham model.
    Betti,
    /// `dim H^{p,q}_∂̄` of the Dolbeault model, or of a bigraded algebra.
    Hodge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Degree(u32),
    Bidegree(u32, u32),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Degree(r) => write!(f, "{r}"),
            Cell::Bidegree(p, q) => write!(f, "({p},{q})"),
        }
    }
}

/// Expected dimensions. Unlisted cells must vanish when `complete`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table {
    pub quantity: Quantity,
    pub origin: Origin,
    pub complete: bool,
    pub cells: Vec<(Cell, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Fundamental,
    /// The ∂∂̄-lemma: on `H` for a foliation model, on the algebra itself
    /// for a bigraded algebra.
    Ddbar,
    /// The `H¹`/`H²` slot audit of the mixed Hodge diagram.
    Shapes,
    TwoStep,
    Kunneth,
    /// The minimal model has the generator counts of the input through
    /// degree 4 and a quasi-isomorphism certificate.
    MinimalIsSelf,
    WeightCount { n: usize, k: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub verdict: Verdict,
    pub origin: Origin,
    pub value: String,
}

#[derive(Clone, Debug)]
pub enum CorpusModel {
    Spec(TransverseKahlerModelSpec),
    Algebra(PresentationFile),
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub model: CorpusModel,
    pub lie: Option<LieAlgebra>,
    pub factors: Option<(TransverseKahlerModelSpec, TransverseKahlerModelSpec)>,
    pub tables: Vec<Table>,
    pub verdicts: Vec<Expectation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub label: String,
    pub origin: Origin,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub checks: Vec<CheckOutcome>,
    pub pass: bool,
}

fn nonzero_degrees(dims: &[usize]) -> BTreeMap<Cell, usize> {
    dims.iter().enumerate().filter(|(_, &d)| d > 0).map(|(r, &d)| (Cell::Degree(r as u32), d)).collect()
}

fn nonzero_bidegrees(b: &Presentation) -> BTreeMap<Cell, usize> {
    bigraded_cohomology(b, Differential::Dbar).nonzero().into_iter().map(|((p, q), d)| (Cell::Bidegree(p, q), d)).collect()
}

fn render(cells: &BTreeMap<Cell, usize>) -> String {
    let parts: Vec<String> = cells.iter().map(|(c, d)| format!("{c}:{d}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// The `type` annotation of every generator, in generator order.
pub fn file_types(f: &PresentationFile) -> Result<Vec<Type>, CorpusError> {
    f.presentation
        .generators()
        .iter()
        .map(|g| {
            f.types.iter().find(|(n, _)| n == &g.name).map(|(_, t)| *t).ok_or_else(|| CorpusError::Shape(format!("{} has no type annotation", g.name)))
        })
        .collect()
}

impl CorpusModel {
    /// A foliation model when the file has `w` lines, otherwise the algebra.
    pub fn from_file(f: &PresentationFile) -> Result<Self, CorpusError> {
        if f.w.is_empty() {
            Ok(CorpusModel::Algebra(f.clone()))
        } else {
            Ok(CorpusModel::Spec(TransverseKahlerModelSpec::from_file(f)?))
        }
    }

    pub fn file(&self) -> PresentationFile {
        match self {
            CorpusModel::Spec(s) => s.to_file(),
            CorpusModel::Algebra(f) => f.clone(),
        }
    }

    pub fn compute(&self, quantity: Quantity) -> Result<BTreeMap<Cell, usize>, CorpusError> {
        match (self, quantity) {
            (CorpusModel::Spec(s), Quantity::BasicBetti) => Ok(nonzero_degrees(&cohomology(&s.h().forget_bigrading()).dims())),
            (CorpusModel::Spec(s), Quantity::BasicHodge) => {
                Ok(basic_hodge_numbers(s).into_iter().filter(|c| c.dim > 0).map(|c| (Cell::Bidegree(c.p, c.q), c.dim)).collect())
            }
            (CorpusModel::Spec(s), Quantity::Betti) => Ok(nonzero_degrees(&cohomology(&build_de_rham_model(s)?).dims())),
            (CorpusModel::Spec(s), Quantity::Hodge) => Ok(nonzero_bidegrees(&build_dolbeault_model(s)?)),
            (CorpusModel::Algebra(f), Quantity::Betti) => Ok(nonzero_degrees(&cohomology(&f.presentation).dims())),
            (CorpusModel::Algebra(f), Quantity::Hodge) if f.presentation.is_bigraded() => Ok(nonzero_bidegrees(&f.presentation)),
            (CorpusModel::Algebra(_), q) => Err(CorpusError::Shape(format!("{q:?} is not defined for a plain algebra"))),
        }
    }

    pub fn spec(&self, what: &str) -> Result<&TransverseKahlerModelSpec, CorpusError> {
        match self {
            CorpusModel::Spec(s) => Ok(s),
            CorpusModel::Algebra(_) => Err(CorpusError::Shape(format!("{what} needs a foliation model"))),
        }
    }

    /// The typed 1-minimal model used for weight counts and the dual Lie
    /// algebra.
    pub fn weight_model(&self) -> Result<MinimalModel, CorpusError> {
        match self {
            CorpusModel::Spec(s) => Ok(bigraded_minimal_model(s, 1)?.minimal),
            CorpusModel::Algebra(f) => Ok(typed_minimal_model(&f.presentation, &file_types(f)?, 1)?),
        }
    }
}

fn ddbar_value(b: &Presentation) -> String {
    let report = ddbar_check(b);
    match report.first_failure {
        None => "holds".into(),
        Some(d) => format!("fails in degree {d}"),
    }
}

impl CorpusEntry {
    pub fn file(&self) -> PresentationFile {
        self.model.file()
    }

    /// The DSL text shipped for this entry.
    pub fn source(&self) -> String {
        write_presentation(&self.file())
    }

    pub fn file_name(&self) -> String {
        format!("{}.{FILE_EXTENSION}", self.name)
    }

    /// The same entry with its model rebuilt from parsed file data.
    pub fn with_file(&self, f: &PresentationFile) -> Result<CorpusEntry, CorpusError> {
        let model = match self.model {
            CorpusModel::Spec(_) => CorpusModel::Spec(TransverseKahlerModelSpec::from_file(f)?),
            CorpusModel::Algebra(_) => CorpusModel::Algebra(f.clone()),
        };
        Ok(CorpusEntry { model, ..self.clone() })
    }

    pub fn verdict_value(&self, v: Verdict) -> Result<String, CorpusError> {
        Ok(match v {
            Verdict::Fundamental => is_fundamental(self.model.spec("fundamentality")?).holds.to_string(),
            Verdict::Ddbar => match &self.model {
                CorpusModel::Spec(s) => ddbar_value(&s.h().complexified()),
                CorpusModel::Algebra(f) if f.presentation.is_bigraded() => ddbar_value(&f.presentation),
                CorpusModel::Algebra(_) => return Err(CorpusError::Shape("the ∂∂̄-lemma needs a bigraded algebra".into())),
            },
            Verdict::Shapes => h1_h2_shape_check(&diagram_filtrations(self.model.spec("the shape audit")?)?).holds.to_string(),
            Verdict::TwoStep => self.lie.as_ref().ok_or_else(|| CorpusError::Shape("no Lie algebra attached".into()))?.is_two_step().to_string(),
            Verdict::Kunneth => {
                let (a, b) = self.factors.as_ref().ok_or_else(|| CorpusError::Shape("no factors attached".into()))?;
                let cutoff = a.h().cutoff() + b.h().cutoff() - 2;
                let (da, db) = (build_de_rham_model(a)?.with_cutoff(cutoff), build_de_rham_model(b)?.with_cutoff(cutoff));
                kunneth_check(&da, &db)?.holds.to_string()
            }
            Verdict::MinimalIsSelf => {
                let a = match &self.model {
                    CorpusModel::Algebra(f) => &f.presentation,
                    CorpusModel::Spec(_) => return Err(CorpusError::Shape("the identity check needs a free algebra".into())),
                };
                let m = minimal_model(a, 4)?;
                let counts = m.generator_counts();
                let same = counts.iter().all(|c| c.generators == a.generators().iter().filter(|g| g.degree == c.degree).count());
                (same && m.certificate()?.holds).to_string()
            }
            Verdict::WeightCount { n, k } => {
                let w = weight_count_check(&self.model.weight_model()?, n, k);
                match (w.holds, w.branch) {
                    (false, _) => "violated".into(),
                    (true, Some(WeightBranch::TwoOfWeightTwo)) => "m2 = 2".into(),
                    (true, Some(WeightBranch::OneOfWeightThree)) => "m3 = 1".into(),
                    (true, None) => "holds".into(),
                }
            }
        })
    }

    pub fn run(&self) -> Result<EntryReport, CorpusError> {
        let mut checks = Vec::new();
        for t in &self.tables {
            let computed = self.model.compute(t.quantity)?;
            let expected: BTreeMap<Cell, usize> = t.cells.iter().copied().collect();
            let mut pass = expected.iter().all(|(c, d)| computed.get(c).copied().unwrap_or(0) == *d);
            let shown: BTreeMap<Cell, usize> = if t.complete {
                pass &= computed.keys().all(|c| expected.contains_key(c));
                computed
            } else {
                expected.keys().map(|c| (*c, computed.get(c).copied().unwrap_or(0))).collect()
            };
            let scope = if t.complete { "" } else { " (listed cells)" };
            checks.push(CheckOutcome {
                label: format!("{:?}{scope}", t.quantity),
                origin: t.origin,
                expected: render(&expected),
                computed: render(&shown),
                pass,
            });
        }
        for e in &self.verdicts {
            let computed = self.verdict_value(e.verdict)?;
            checks.push(CheckOutcome {
                label: format!("{:?}", e.verdict),
                origin: e.origin,
                pass: computed == e.value,
                expected: e.value.clone(),
                computed,
            });
        }
        Ok(EntryReport { name: self.name.clone(), pass: checks.iter().all(|c| c.pass), checks })
    }
}

fn degrees(origin: Origin, cells: &[(u32, usize)]) -> Table {
    Table { quantity: Quantity::Betti, origin, complete: true, cells: cells.iter().map(|&(r, d)| (Cell::Degree(r), d)).collect() }
}

fn bidegrees(quantity: Quantity, origin: Origin, complete: bool, cells: &[((u32, u32), usize)]) -> Table {
    Table { quantity, origin, complete, cells: cells.iter().map(|&((p, q), d)| (Cell::Bidegree(p, q), d)).collect() }
}

fn basic_betti(origin: Origin, cells: &[(u32, usize)]) -> Table {
    Table { quantity: Quantity::BasicBetti, ..degrees(origin, cells) }
}

fn expect(verdict: Verdict, origin: Origin, value: &str) -> Expectation {
    Expectation { verdict, origin, value: value.into() }
}

fn hopf_tables(n: u32) -> Vec<Table> {
    let even: Vec<(u32, usize)> = (0..n).map(|i| (2 * i, 1)).collect();
    let diagonal: Vec<((u32, u32), usize)> = (0..n).map(|i| ((i, i), 1)).collect();
    vec![
        basic_betti(Origin::Reference, &even),
        bidegrees(Quantity::BasicHodge, Origin::Reference, true, &diagonal),
        // S¹ × S^{2n−1}
        degrees(Origin::Oracle, &[(0, 1), (1, 1), (2 * n - 1, 1), (2 * n, 1)]),
        // ∂̄z = e, ∂̄z̄ = 0 leave 1, z̄, e^{n−1}z, e^{n−1}zz̄
        bidegrees(Quantity::Hodge, Origin::Oracle, true, &[((0, 0), 1), ((0, 1), 1), ((n, n - 1), 1), ((n, n), 1)]),
    ]
}

fn foliation_verdicts() -> Vec<Expectation> {
    vec![
        expect(Verdict::Fundamental, Origin::Reference, "true"),
        expect(Verdict::Ddbar, Origin::Reference, "holds"),
        expect(Verdict::Shapes, Origin::Reference, "true"),
    ]
}

fn spec_entry(name: String, params: Vec<(String, String)>, s: TransverseKahlerModelSpec, tables: Vec<Table>, verdicts: Vec<Expectation>) -> CorpusEntry {
    CorpusEntry { name, params, model: CorpusModel::Spec(s), lie: None, factors: None, tables, verdicts }
}

const SPHERE_PRODUCT_BETTI: [(u32, usize); 9] = [(0, 1), (1, 2), (2, 1), (3, 2), (4, 4), (5, 2), (6, 1), (7, 2), (8, 1)];

fn product_entries() -> Vec<CorpusEntry> {
    let shared_basic = || {
        vec![
            basic_betti(Origin::Reference, &[(0, 1), (2, 2), (4, 1)]),
            bidegrees(Quantity::BasicHodge, Origin::Reference, true, &[((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]),
            degrees(Origin::Oracle, &SPHERE_PRODUCT_BETTI),
        ]
    };
    let mut verdicts = foliation_verdicts();
    verdicts.push(expect(Verdict::Kunneth, Origin::Oracle, "true"));

    let (h, k) = (hopf_model(2), hopf_model(2));
    let mut t = shared_basic();
    t.push(bidegrees(Quantity::Hodge, Origin::Reference, false, &[((2, 2), 4), ((1, 0), 0)]));
    // Künneth from h^{0,0} = h^{0,1} = h^{2,1} = h^{2,2} = 1 on each factor
    t.push(bidegrees(
        Quantity::Hodge,
        Origin::Oracle,
        true,
        &[((0, 0), 1), ((0, 1), 2), ((0, 2), 1), ((2, 1), 2), ((2, 2), 4), ((2, 3), 2), ((4, 2), 1), ((4, 3), 2), ((4, 4), 1)],
    ));
    let mut first = spec_entry("s13_s13".into(), vec![], product_model(&h, &k).expect("product"), t, verdicts.clone());
    first.factors = Some((h, k));

    let (e, s) = (elliptic_model(), s3s3_model());
    let mut t = shared_basic();
    t.push(bidegrees(Quantity::Hodge, Origin::Reference, false, &[((1, 0), 1)]));
    // Künneth of the elliptic curve with the S³ × S³ numbers
    t.push(bidegrees(
        Quantity::Hodge,
        Origin::Oracle,
        true,
        &[
            ((0, 0), 1),
            ((0, 1), 2),
            ((0, 2), 1),
            ((1, 0), 1),
            ((1, 1), 3),
            ((1, 2), 3),
            ((1, 3), 1),
            ((2, 1), 2),
            ((2, 2), 4),
            ((2, 3), 2),
            ((3, 1), 1),
            ((3, 2), 3),
            ((3, 3), 3),
            ((3, 4), 1),
            ((4, 2), 1),
            ((4, 3), 2),
            ((4, 4), 1),
        ],
    ));
    let mut second = spec_entry("s11_s33".into(), vec![], product_model(&e, &s).expect("product"), t, verdicts);
    second.factors = Some((e, s));
    vec![first, second]
}

fn ce_entry(name: &str, dim: usize, constants: &[(usize, usize, usize, i64)], betti: Table, verdicts: Vec<Expectation>) -> CorpusEntry {
    let ce = chevalley_eilenberg(dim, constants, None).expect("nilpotent Lie algebra");
    CorpusEntry {
        name: name.into(),
        params: vec![("dim".into(), dim.to_string())],
        model: CorpusModel::Algebra(PresentationFile::plain(ce.presentation)),
        lie: Some(ce.lie),
        factors: None,
        tables: vec![betti],
        verdicts,
    }
}

fn binomials(n: u32) -> Vec<(u32, usize)> {
    (0..=n).map(|r| (r, crate::hirsch::binomial(n as usize, r as usize))).collect()
}

const KT_CONSTANTS: [(usize, usize, usize, i64); 1] = [(1, 2, 3, 1)];
const HEIS5_R_CONSTANTS: [(usize, usize, usize, i64); 2] = [(1, 2, 5, 1), (3, 4, 5, 1)];
const KT_BETTI: [(u32, usize); 5] = [(0, 1), (1, 3), (2, 4), (3, 3), (4, 1)];

fn nilmanifold_entries() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for r in 2..=4u32 {
        out.push(ce_entry(
            &format!("abelian_{r}"),
            r as usize,
            &[],
            degrees(Origin::Elementary, &binomials(r)),
            vec![expect(Verdict::TwoStep, Origin::Elementary, "true"), expect(Verdict::MinimalIsSelf, Origin::Reference, "true")],
        ));
    }
    out.push(ce_entry(
        "heisenberg3",
        3,
        &[(1, 2, 3, 1)],
        degrees(Origin::Oracle, &[(0, 1), (1, 2), (2, 2), (3, 1)]),
        vec![expect(Verdict::TwoStep, Origin::Oracle, "true"), expect(Verdict::MinimalIsSelf, Origin::Reference, "true")],
    ));
    let mut filiform = ce_entry(
        "filiform4",
        4,
        &[(1, 2, 3, 1), (1, 3, 4, 1)],
        degrees(Origin::Oracle, &[(0, 1), (1, 2), (2, 2), (3, 2), (4, 1)]),
        vec![
            expect(Verdict::TwoStep, Origin::Oracle, "false"),
            expect(Verdict::MinimalIsSelf, Origin::Reference, "true"),
            expect(Verdict::WeightCount { n: 2, k: 1 }, Origin::Oracle, "violated"),
        ],
    );
    if let CorpusModel::Algebra(f) = &mut filiform.model {
        f.types = vec![("e1".into(), (1, 0)), ("e2".into(), (0, 1)), ("e3".into(), (1, 1)), ("e4".into(), (2, 1))];
    }
    out.push(filiform);

    let j4 = standard_complex_structure(4);
    let kt = chevalley_eilenberg(4, &KT_CONSTANTS, Some(&j4)).expect("abelian complex structure");
    out.push(CorpusEntry {
        name: "kodaira_thurston".into(),
        params: vec![("dim".into(), "4".into())],
        model: CorpusModel::Algebra(PresentationFile::plain(kt.bigraded.clone().expect("bigraded"))),
        lie: Some(kt.lie.clone()),
        factors: None,
        tables: vec![degrees(Origin::Oracle, &KT_BETTI)],
        verdicts: vec![expect(Verdict::Ddbar, Origin::Oracle, "fails in degree 2"), expect(Verdict::TwoStep, Origin::Oracle, "true")],
    });
    let tk_verdicts = |n: usize| {
        vec![
            expect(Verdict::Fundamental, Origin::Oracle, "true"),
            expect(Verdict::Shapes, Origin::Reference, "true"),
            expect(Verdict::WeightCount { n, k: 1 }, Origin::Oracle, "m2 = 2"),
        ]
    };
    out.push(CorpusEntry {
        name: "kodaira_thurston_tk".into(),
        params: vec![("dim".into(), "4".into())],
        model: CorpusModel::Spec(kt.central_foliation(&j4, &[(3, 4)]).expect("central foliation")),
        lie: Some(kt.lie),
        factors: None,
        tables: vec![basic_betti(Origin::Elementary, &[(0, 1), (1, 2), (2, 1)]), degrees(Origin::Oracle, &KT_BETTI)],
        verdicts: tk_verdicts(2),
    });
    let j6 = standard_complex_structure(6);
    let h5 = chevalley_eilenberg(6, &HEIS5_R_CONSTANTS, Some(&j6)).expect("abelian complex structure");
    out.push(CorpusEntry {
        name: "heisenberg5_r_tk".into(),
        params: vec![("dim".into(), "6".into())],
        model: CorpusModel::Spec(h5.central_foliation(&j6, &[(5, 6)]).expect("central foliation")),
        lie: Some(h5.lie),
        factors: None,
        // H(𝔥₅) = 1,4,5,5,4,1 times H(ℝ)
        tables: vec![
            basic_betti(Origin::Elementary, &binomials(4)),
            degrees(Origin::Oracle, &[(0, 1), (1, 5), (2, 9), (3, 10), (4, 9), (5, 5), (6, 1)]),
        ],
        verdicts: tk_verdicts(3),
    });
    out
}

/// Every shipped entry, in a fixed order.
pub fn entries() -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push(spec_entry(format!("hopf_n{n}"), vec![("n".into(), n.to_string())], hopf_model(n), hopf_tables(n), foliation_verdicts()));
    }
    for n in 2..=4 {
        let s = vaisman_model(&hopf_basic_ring(n), &Polynomial::generator(0)).expect("Kähler class");
        out.push(spec_entry(format!("vaisman_hopf_n{n}"), vec![("n".into(), n.to_string())], s, hopf_tables(n), foliation_verdicts()));
    }
    let s3s3_tables = vec![
        basic_betti(Origin::Reference, &[(0, 1), (2, 2), (4, 1)]),
        bidegrees(Quantity::BasicHodge, Origin::Reference, true, &[((0, 0), 1), ((1, 1), 2), ((2, 2), 1)]),
        degrees(Origin::Oracle, &[(0, 1), (3, 2), (6, 1)]),
        bidegrees(
            Quantity::Hodge,
            Origin::Reference,
            false,
            &[((1, 0), 0), ((2, 0), 0), ((3, 0), 0), ((0, 2), 0), ((0, 3), 0), ((0, 1), 1), ((2, 1), 1), ((1, 2), 1)],
        ),
        // ∂̄ = α·∂/∂z with α = a + ib: H/αH = ⟨1, β⟩ and Ann α = ⟨β, ab⟩, times ∧z̄
        bidegrees(
            Quantity::Hodge,
            Origin::Oracle,
            true,
            &[((0, 0), 1), ((0, 1), 1), ((1, 1), 1), ((1, 2), 1), ((2, 1), 1), ((2, 2), 1), ((3, 2), 1), ((3, 3), 1)],
        ),
    ];
    out.push(spec_entry("s3s3".into(), vec![], s3s3_model(), s3s3_tables, foliation_verdicts()));
    out.extend(product_entries());
    out.extend(nilmanifold_entries());
    out
}

/// Writes every entry's DSL file into `dir`.
pub fn export(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut out = Vec::new();
    for e in entries() {
        let path = dir.join(e.file_name());
        std::fs::write(&path, e.source())?;
        out.push(path);
    }
    Ok(out)
}
