//! The line-oriented presentation language.
//!
//! ```text
//! # comments run to the end of the line
//! field Q(i)
//! cutoff 6
//! bigraded
//! gen z (1,0) conj zb
//! gen zb (0,1)
//! gen e (1,1)
//! relation e^3
//! d z = e
//! ```
//!
//! Further statements: `gen NAME DEG` in singly graded files, `type NAME
//! (s,t)` for weight/Hodge types, `extend DEG NAME = EXPR` for a Hirsch
//! extension block, and `w NAME = EXPR` / `wpair U JU` for the `W` part of a
//! transverse model. Expressions use `+ - * ∧ ^`, fractions `a/b`, the unit
//! `i` and parentheses.

mod lexer;
mod parser;
mod writer;

pub use parser::{parse_filtration, parse_presentation, FiltrationFile, LevelSpec, PresentationFile};
pub use writer::{write_filtration, write_presentation};

use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{pos}: syntax error: {message}{}", expected_suffix(.expected))]
    Syntax { pos: Pos, message: String, expected: Vec<String> },
    #[error("{pos}: {message}")]
    Semantic { pos: Pos, message: String },
}

fn expected_suffix(expected: &[String]) -> String {
    if expected.is_empty() {
        String::new()
    } else {
        format!(" (expected {})", expected.join(" or "))
    }
}

impl DslError {
    pub(crate) fn syntax(pos: Pos, message: String, expected: Vec<String>) -> Self {
        DslError::Syntax { pos, message, expected }
    }

    pub(crate) fn semantic(pos: Pos, message: impl Into<String>) -> Self {
        DslError::Semantic { pos, message: message.into() }
    }

    pub fn pos(&self) -> Pos {
        match self {
            DslError::Syntax { pos, .. } | DslError::Semantic { pos, .. } => *pos,
        }
    }
}
