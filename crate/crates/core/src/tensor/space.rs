use std::fmt;

use serde::{Deserialize, Serialize};

/// A named finite-dimensional space used as a tensor factor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SpaceLabel {
    pub name: String,
    pub dim: usize,
}

impl SpaceLabel {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        assert!(dim >= 1, "space dimension must be positive");
        SpaceLabel {
            name: name.into(),
            dim,
        }
    }
}

impl fmt::Display for SpaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.name, self.dim)
    }
}

impl fmt::Debug for SpaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Product of the factor dimensions; the empty product (unit object) is 1.
pub fn total_dim(spaces: &[SpaceLabel]) -> usize {
    spaces.iter().map(|s| s.dim).product()
}

pub fn describe(spaces: &[SpaceLabel]) -> String {
    if spaces.is_empty() {
        return "k".into();
    }
    spaces
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join("⊗")
}

/// Splits a flat basis index into per-factor digits, leftmost factor most
/// significant.
pub fn split_index(spaces: &[SpaceLabel], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; spaces.len()];
    for (i, s) in spaces.iter().enumerate().rev() {
        out[i] = flat % s.dim;
        flat /= s.dim;
    }
    out
}

pub fn join_index(spaces: &[SpaceLabel], digits: &[usize]) -> usize {
    spaces
        .iter()
        .zip(digits)
        .fold(0, |acc, (s, &d)| acc * s.dim + d)
}
