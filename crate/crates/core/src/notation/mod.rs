//! ASCII arrow notation for finite spaces, maps and orthogonal-class expressions.
//!
//! | glyph | ASCII |
//! |-------|-------|
//! | `x↘y` | `x->y` |
//! | `x↙y` | `x<-y` |
//! | `x↔y` | `x<->y` |
//! | identify | `x=y` |
//!
//! ```text
//! space := '{' [chain (',' chain)*] '}'      chain := label (link label)*
//! map   := space '->' space                  expr  := '(' map (',' map)* ')' step+
//! step  := '^' ('l'|'r')+ ['_{<' INT '}']    label := [A-Za-z0-9*']+
//! ```
//!
//! In a map the codomain implicitly contains every domain label and arrow, so
//! `{a}->{b}` is the map from a point into the two-point discrete space `{a,b}`.
//! A bare `{*}` codomain is the exception: `X->{*}` is the map to the point.

mod lexer;
mod parser;
mod render;

use std::fmt;

use thiserror::Error;

pub use parser::{parse_class_expr, parse_class_expr_with, parse_map, parse_map_with, parse_space, MapMode};
pub use render::{render_expr, render_map, render_space};

/// A parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, expected: impl Into<String>, found: impl Into<String>) -> Self {
        ParseError { offset, expected: expected.into(), found: found.into() }
    }

    /// The input with a caret under the offending byte.
    pub fn pointer(&self, input: &str) -> String {
        format!("{input}\n{}^", " ".repeat(input[..self.offset.min(input.len())].chars().count()))
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: expected {}, found {}", self.offset, self.expected, self.found)
    }
}
