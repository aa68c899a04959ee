//! `dgakit`: exact computations on presentation files.

mod commands;
mod document;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dgakit::exactfield::Field;

use commands::Overrides;
use document::ResultDocument;
use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "dgakit", version, about = "Exact computations with differential graded algebras")]
struct Cli {
    /// Print the structured result document (JSON) instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "Q" => Ok(Field::Rational),
        "Q(i)" => Ok(Field::Gaussian),
        _ => Err(format!("unknown field `{s}`, expected Q or Q(i)")),
    }
}

#[derive(Args, Debug)]
struct Input {
    /// Presentation file.
    file: PathBuf,
    /// Replace the cutoff N of the file.
    #[arg(long)]
    cutoff: Option<u32>,
    /// Ground field, Q or Q(i); Q(i) complexifies a rational file.
    #[arg(long, value_parser = parse_field)]
    field: Option<Field>,
}

impl Input {
    fn overrides(&self) -> Overrides {
        Overrides { cutoff: self.cutoff, field: self.field }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers and class representatives.
    Cohomology(Input),
    /// Dolbeault (∂̄) cohomology per bidegree.
    Dolbeault(Input),
    /// Sullivan minimal model through a degree.
    MinimalModel {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        up_to: u32,
    },
    /// 1-minimal model built in a number of stages.
    OneMinimal {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        stages: u32,
    },
    /// Spectral sequence of the Hirsch extension in the file's `extend` block.
    Hirsch(Input),
    /// The ∂∂̄-lemma.
    DdbarCheck(Input),
    /// Canonical bigrading of a filtration file, or of the mixed Hodge diagram of a foliation model.
    Bigrading(Input),
    /// Whether d(W) lies in H^{1,1}.
    FundamentalCheck(Input),
    /// Degree-1 generator counts of the bigraded 1-minimal model by weight.
    WeightCount {
        #[command(flatten)]
        input: Input,
        /// Complex dimension of the leaf space.
        #[arg(long)]
        n: usize,
        /// Complex codimension of the leaves' flat part.
        #[arg(long)]
        k: usize,
    },
    /// Bigraded presentation of the dual Lie algebra.
    DualLie(Input),
    /// Künneth check for the tensor product of two algebras.
    Kunneth {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        cutoff: Option<u32>,
        #[arg(long, value_parser = parse_field)]
        field: Option<Field>,
    },
    /// Run every corpus entry against its expected tables.
    Corpus {
        /// Rebuild each entry from `<name>.dga` in this directory.
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Write the corpus files to this directory first.
        #[arg(long)]
        export: Option<PathBuf>,
    },
}

fn run(command: &Command, doc: &mut ResultDocument) -> Result<(), CliError> {
    match command {
        Command::Cohomology(i) => commands::cohomology_cmd(&i.file, i.overrides(), doc),
        Command::Dolbeault(i) => commands::dolbeault_cmd(&i.file, i.overrides(), doc),
        Command::MinimalModel { input, up_to } => commands::minimal_model_cmd(&input.file, input.overrides(), *up_to, doc),
        Command::OneMinimal { input, stages } => commands::one_minimal_cmd(&input.file, input.overrides(), *stages, doc),
        Command::Hirsch(i) => commands::hirsch_cmd(&i.file, i.overrides(), doc),
        Command::DdbarCheck(i) => commands::ddbar_cmd(&i.file, i.overrides(), doc),
        Command::Bigrading(i) => commands::bigrading_cmd(&i.file, i.overrides(), doc),
        Command::FundamentalCheck(i) => commands::fundamental_cmd(&i.file, i.overrides(), doc),
        Command::WeightCount { input, n, k } => commands::weight_count_cmd(&input.file, input.overrides(), *n, *k, doc),
        Command::DualLie(i) => commands::dual_lie_cmd(&i.file, i.overrides(), doc),
        Command::Kunneth { first, second, cutoff, field } => commands::kunneth_cmd(first, second, Overrides { cutoff: *cutoff, field: *field }, doc),
        Command::Corpus { dir, export } => commands::corpus_cmd(dir.as_deref(), export.as_deref(), doc),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).filter(|a| a != "--json").collect();
    let mut doc = ResultDocument::new(echo);
    if let Err(e) = run(&cli.command, &mut doc) {
        eprintln!("dgakit: {e}");
        return ExitCode::from(e.exit_code());
    }
    if cli.json {
        println!("{}", doc.to_json());
    } else {
        print!("{}", doc.to_text());
    }
    if doc.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
