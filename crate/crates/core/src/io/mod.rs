//! Line-based text formats for maps and presentations, and DOT export.
//!
//! A map document:
//!
//! ```text
//! kmap 1
//! darts 8
//! vertex 1 8
//! vertex 2 3
//! vertex 4 5
//! vertex 6 7
//! outer 2
//! label 1 a
//! ```
//!
//! Darts are numbered from 1 and paired as (2i−1, 2i). Each `vertex` line is
//! one counterclockwise rotation cycle. `label d x` reads letter `x` along
//! dart `d`; uppercase letters are inverses.

mod dot;
mod kmap;
mod pres;

use thiserror::Error;

use crate::map::MapError;
use crate::presentation::PresentationError;

pub use dot::{export_dot, DotOptions};
pub use kmap::{parse_map, serialize_map, MapDocument};
pub(crate) use kmap::paired_numbering;
pub use pres::{parse_presentation, serialize_presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("dart {0} is not covered by any vertex line")]
    DanglingDart(usize),
    #[error("dart {0} appears more than once")]
    DuplicateDart(usize),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

pub(crate) fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-empty lines with comments (`#` to end of line) stripped, numbered from 1.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}
