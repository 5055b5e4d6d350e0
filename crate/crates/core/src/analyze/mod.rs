//! Exhaustive verification on the syndrome space.

mod distribution;
mod dual;
mod graph;
mod packing;
mod repro;
mod space;

pub use distribution::{distribution_regularity, CosetDistributions, DistributionRegularity};
pub use dual::{
    dual_distribution, krawtchouk, macwilliams_transform, nonzero_weights, row_space_distribution,
};
pub use graph::{
    hamming_product_array, intersection_array_check, IntersectionArray, NeighborCounts, Regularity,
    SyndromeGraph, SyndromeProfile, Witness,
};
pub use packing::{packing_rows, satisfies, solve_rational, uniform_packing_check, Packing};
pub use repro::{
    check_vector, parse_blocks, reproduce_counterexample, Counterexample, CounterexampleReport,
    VectorCheck,
};
pub use space::SyndromeSpace;

use crate::construct::CodeSpec;
use crate::error::Result;

/// Default cap on the number of syndromes (and on `q^r · n` for the coset
/// distribution table).
pub const DEFAULT_BUDGET: u64 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisConfig {
    pub budget: u64,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
        }
    }
}

/// The second syndrome of a refutation, with both neighbor profiles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPair {
    pub depth: u32,
    pub first: SyndromeProfile,
    pub second: SyndromeProfile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub q: usize,
    pub n: usize,
    pub k: usize,
    /// Minimum distance; `None` for the zero code.
    pub d: Option<usize>,
    pub rho: usize,
    /// Outer distance: number of distinct nonzero dual weights.
    pub s: usize,
    /// Number of cosets of each weight 0..=ρ.
    pub depth_sizes: Vec<u64>,
    /// Neighbor-count verdict; the array is present iff completely regular.
    pub intersection_array: Option<IntersectionArray>,
    pub cr_witness: Option<WitnessPair>,
    /// Coset-distribution verdict, computed independently of the neighbor
    /// counts.
    pub distribution_regular: bool,
    pub packing: Packing,
    pub weight_distribution: Vec<u128>,
    pub dual_distribution: Vec<u128>,
    pub dual_weights: Vec<usize>,
    /// MacWilliams transform of `weight_distribution` equals
    /// `dual_distribution`.
    pub macwilliams_agrees: bool,
}

impl AnalysisReport {
    pub fn completely_regular(&self) -> bool {
        self.intersection_array.is_some()
    }

    pub fn uniformly_packed(&self) -> bool {
        self.packing.is_uniformly_packed()
    }
}

pub fn analyze(spec: &CodeSpec, config: &AnalysisConfig) -> Result<AnalysisReport> {
    let space = SyndromeSpace::new(spec, config.budget)?;
    let dists = CosetDistributions::compute(&space, config.budget)?;
    let dual = dual_distribution(&space, config.budget)?;
    let graph = SyndromeGraph::from_space(space);

    let (intersection_array, cr_witness) = match intersection_array_check(&graph) {
        Regularity::Regular(arr) => (Some(arr), None),
        Regularity::Irregular(w) => (
            None,
            Some(WitnessPair {
                depth: w.depth,
                first: graph.profile(w.first),
                second: graph.profile(w.second),
            }),
        ),
    };
    let weight_distribution = dists.code_distribution().to_vec();
    let macwilliams_agrees = macwilliams_transform(&weight_distribution, spec.q() as u64)
        .ok()
        .as_ref()
        == Some(&dual);
    let dual_weights = nonzero_weights(&dual);

    Ok(AnalysisReport {
        q: spec.q(),
        n: spec.len(),
        k: spec.dimension(),
        d: dists.minimum_distance(),
        rho: graph.covering_radius(),
        s: dual_weights.len(),
        depth_sizes: graph.depth_sizes(),
        intersection_array,
        cr_witness,
        distribution_regular: distribution_regularity(&graph, &dists).is_regular(),
        packing: uniform_packing_check(&graph, &dists),
        weight_distribution,
        dual_distribution: dual,
        dual_weights,
        macwilliams_agrees,
    })
}

/// Covering radius by BFS over the syndrome space.
pub fn covering_radius(spec: &CodeSpec, budget: u64) -> Result<usize> {
    Ok(SyndromeGraph::build(spec, budget)?.covering_radius())
}

/// Number of distinct nonzero weights in the dual code.
pub fn outer_distance(spec: &CodeSpec, budget: u64) -> Result<usize> {
    let space = SyndromeSpace::new(spec, budget)?;
    Ok(nonzero_weights(&dual_distribution(&space, budget)?).len())
}
