use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    /// `C^l`: morphisms with the left lifting property against `C`.
    Left,
    /// `C^r`: morphisms with the right lifting property against `C`.
    Right,
}

impl Side {
    pub fn letter(self) -> char {
        match self {
            Side::Left => 'l',
            Side::Right => 'r',
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// One orthogonal, optionally restricted to morphisms with endpoints of size `< bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub side: Side,
    pub bound: Option<usize>,
}

impl Step {
    pub fn left() -> Self {
        Step { side: Side::Left, bound: None }
    }

    pub fn right() -> Self {
        Step { side: Side::Right, bound: None }
    }

    pub fn bounded(side: Side, bound: usize) -> Self {
        Step { side, bound: Some(bound) }
    }
}

/// `(g1, ..., gk)^{s1 s2 ...}`, steps applied left to right.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthExpr<M> {
    pub generators: Vec<M>,
    pub steps: Vec<Step>,
}

impl<M> OrthExpr<M> {
    pub fn new(generators: Vec<M>, steps: Vec<Step>) -> Self {
        OrthExpr { generators, steps }
    }

    pub fn one_step(generators: Vec<M>, side: Side) -> Self {
        OrthExpr { generators, steps: vec![Step { side, bound: None }] }
    }

    pub fn sides(&self) -> String {
        self.steps.iter().map(|s| s.side.letter()).collect()
    }
}

impl<M: fmt::Display> fmt::Display for OrthExpr<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::render_expr(self))
    }
}
