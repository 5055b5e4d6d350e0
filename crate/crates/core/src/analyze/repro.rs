//! The two non-completely-regular members of the repetition ⊗ Hamming family
//! with explicit weight-2 vectors having different numbers of neighbors one
//! step closer to the code.

use std::fmt;
use std::str::FromStr;

use super::graph::SyndromeGraph;
use crate::construct::{kron_up_code, CodeSpec};
use crate::error::{Error, Result};
use crate::gf::Elem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Counterexample {
    /// Repetition [4,1,4]_2 ⊗ Hamming [7,4,3]_2 = [28,19,3]_2.
    Binary28,
    /// Repetition [3,1,3]_3 ⊗ Hamming [4,2,3]_3 = [12,8,3]_3.
    Ternary12,
}

impl Counterexample {
    pub const ALL: [Counterexample; 2] = [Counterexample::Binary28, Counterexample::Ternary12];

    pub fn name(&self) -> &'static str {
        match self {
            Counterexample::Binary28 => "binary28",
            Counterexample::Ternary12 => "ternary12",
        }
    }

    pub fn code(&self) -> Result<CodeSpec> {
        match self {
            Counterexample::Binary28 => kron_up_code(2, 4, 3),
            Counterexample::Ternary12 => kron_up_code(3, 3, 2),
        }
    }

    /// The two vectors, blocks of `n_b` coordinates separated by `|`.
    pub fn vectors(&self) -> (&'static str, &'static str) {
        match self {
            Counterexample::Binary28 => (
                "1000000|1000000|0000000|0000000",
                "1000000|0100000|0000000|0000000",
            ),
            Counterexample::Ternary12 => ("1000|2000|0000", "1000|0100|0000"),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Counterexample {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParam(format!("unknown counterexample `{s}`")))
    }
}

/// Parses `"1000|2000|0000"` into element codes (single digits, `|` ignored).
pub fn parse_blocks(s: &str) -> Result<Vec<Elem>> {
    s.chars()
        .filter(|&c| c != '|')
        .map(|c| {
            c.to_digit(10)
                .map(|d| d as Elem)
                .ok_or_else(|| Error::InvalidParam(format!("bad digit `{c}` in {s}")))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorCheck {
    pub vector: Vec<Elem>,
    pub distance: u32,
    /// Neighbors of the vector one step closer to the code.
    pub closer_neighbors: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub case: Counterexample,
    pub n: usize,
    pub k: usize,
    pub first: VectorCheck,
    pub second: VectorCheck,
}

impl CounterexampleReport {
    /// `(c(x1), c(x2))`.
    pub fn closer_counts(&self) -> (u64, u64) {
        (self.first.closer_neighbors, self.second.closer_neighbors)
    }
}

/// Changes each coordinate of `v` by every nonzero value and counts results
/// at distance `d(v, C) - 1`.
pub fn check_vector(graph: &SyndromeGraph, v: &[Elem]) -> Result<VectorCheck> {
    let f = graph.space().field().clone();
    let own = graph.distance(v)?;
    let mut closer = 0;
    let mut w = v.to_vec();
    for j in 0..v.len() {
        for e in f.nonzero() {
            w[j] = f.add(v[j], e);
            if own > 0 && graph.distance(&w)? == own - 1 {
                closer += 1;
            }
        }
        w[j] = v[j];
    }
    Ok(VectorCheck {
        vector: v.to_vec(),
        distance: own,
        closer_neighbors: closer,
    })
}

pub fn reproduce_counterexample(case: Counterexample, budget: u64) -> Result<CounterexampleReport> {
    let spec = case.code()?;
    let graph = SyndromeGraph::build(&spec, budget)?;
    let (x1, x2) = case.vectors();
    let (x1, x2) = (parse_blocks(x1)?, parse_blocks(x2)?);
    if x1.len() != spec.len() || x2.len() != spec.len() {
        return Err(Error::DimensionMismatch(
            "counterexample vector length".into(),
        ));
    }
    Ok(CounterexampleReport {
        case,
        n: spec.len(),
        k: spec.dimension(),
        first: check_vector(&graph, &x1)?,
        second: check_vector(&graph, &x2)?,
    })
}
