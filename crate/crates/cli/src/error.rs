use std::fmt;

use dgakit::cohomology::CohomologyError;
use dgakit::corpus::CorpusError;
use dgakit::dolbeault::DolbeaultError;
use dgakit::dsl::DslError;
use dgakit::gca::GcaError;
use dgakit::hirsch::HirschError;
use dgakit::hodge::HodgeError;
use dgakit::sullivan::SullivanError;

/// Failures that stop a command before it produces a document.
#[derive(Debug)]
pub enum CliError {
    /// Unreadable or invalid input, or a precondition of the command.
    Input(String),
    /// A cutoff or iteration bound was too small for the request.
    Resource(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        CliError::Input(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "input error: {m}"),
            CliError::Resource(m) => write!(f, "resource error: {m}"),
        }
    }
}

fn gca(e: &GcaError) -> bool {
    matches!(e, GcaError::CutoffExceeded { .. })
}

fn coh(e: &CohomologyError) -> bool {
    match e {
        CohomologyError::CutoffExceeded { .. } => true,
        CohomologyError::Algebra(g) => gca(g),
        _ => false,
    }
}

fn sullivan(e: &SullivanError) -> bool {
    match e {
        SullivanError::CutoffExceeded { .. } | SullivanError::Resource { .. } => true,
        SullivanError::Algebra(g) => gca(g),
        SullivanError::Cohomology(c) => coh(c),
        _ => false,
    }
}

fn dolbeault(e: &DolbeaultError) -> bool {
    match e {
        DolbeaultError::Algebra(g) => gca(g),
        DolbeaultError::Cohomology(c) => coh(c),
        _ => false,
    }
}

fn hodge(e: &HodgeError) -> bool {
    match e {
        HodgeError::Sullivan(s) => sullivan(s),
        HodgeError::Dolbeault(d) => dolbeault(d),
        HodgeError::Algebra(g) => gca(g),
        HodgeError::Cohomology(c) => coh(c),
        _ => false,
    }
}

fn hirsch(e: &HirschError) -> bool {
    match e {
        HirschError::Algebra(g) => gca(g),
        HirschError::Cohomology(c) => coh(c),
        _ => false,
    }
}

fn corpus(e: &CorpusError) -> bool {
    match e {
        CorpusError::Algebra(g) => gca(g),
        CorpusError::Dolbeault(d) => dolbeault(d),
        CorpusError::Hodge(h) => hodge(h),
        CorpusError::Sullivan(s) => sullivan(s),
        CorpusError::Cohomology(c) => coh(c),
        _ => false,
    }
}

macro_rules! classify {
    ($($ty:ty => $f:ident),* $(,)?) => {
        $(impl From<$ty> for CliError {
            fn from(e: $ty) -> Self {
                if $f(&e) { CliError::Resource(e.to_string()) } else { CliError::Input(e.to_string()) }
            }
        })*
    };
}

classify! {
    GcaError => gca,
    CohomologyError => coh,
    SullivanError => sullivan,
    DolbeaultError => dolbeault,
    HodgeError => hodge,
    HirschError => hirsch,
    CorpusError => corpus,
}

impl From<DslError> for CliError {
    fn from(e: DslError) -> Self {
        CliError::Input(e.to_string())
    }
}
