//! Breadth-first search over the syndrome space.
//!
//! Syndrome `s` is adjacent to `s + e·h_j`. The BFS depth of a syndrome is
//! the weight of its coset, and since the neighbors of any vector `v` have
//! syndromes `s_v + e·h_j`, the depths of a vector's neighbors are a function
//! of its syndrome. Counting them per syndrome therefore gives the
//! intersection numbers of every vector at once.

use std::collections::VecDeque;

use rayon::prelude::*;

use super::space::SyndromeSpace;
use crate::construct::{hamming_length, CodeSpec};
use crate::error::{Error, Result};
use crate::gf::Elem;

const UNSEEN: u32 = u32::MAX;

/// Neighbor depths relative to the syndrome's own depth ℓ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NeighborCounts {
    /// Neighbors at depth ℓ-1 (c_ℓ).
    pub down: u64,
    /// Neighbors at depth ℓ (a_ℓ).
    pub same: u64,
    /// Neighbors at depth ℓ+1 (b_ℓ).
    pub up: u64,
}

/// Per-syndrome summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeProfile {
    pub syndrome: Vec<Elem>,
    pub leader_weight: u32,
    pub neighbor_counts: NeighborCounts,
    /// μ_0..μ_n, when coset distributions were computed.
    pub coset_weight_distribution: Option<Vec<u128>>,
}

#[derive(Debug, Clone)]
pub struct SyndromeGraph {
    space: SyndromeSpace,
    depth: Vec<u32>,
    counts: Vec<NeighborCounts>,
    rho: u32,
}

impl SyndromeGraph {
    pub fn build(spec: &CodeSpec, budget: u64) -> Result<Self> {
        Ok(Self::from_space(SyndromeSpace::new(spec, budget)?))
    }

    pub fn from_space(space: SyndromeSpace) -> Self {
        let mut depth = vec![UNSEEN; space.size()];
        let mut queue = VecDeque::new();
        depth[0] = 0;
        queue.push_back(0usize);
        while let Some(s) = queue.pop_front() {
            let d = depth[s] + 1;
            for &t in space.shifts() {
                let u = space.add(s, t);
                if depth[u] == UNSEEN {
                    depth[u] = d;
                    queue.push_back(u);
                }
            }
        }
        // the check matrix has full row rank, so its columns span everything
        debug_assert!(depth.iter().all(|&d| d != UNSEEN));
        let rho = depth.iter().copied().max().unwrap_or(0);

        let counts = (0..space.size())
            .into_par_iter()
            .map(|s| {
                let here = depth[s];
                let mut c = NeighborCounts::default();
                for &t in space.shifts() {
                    let there = depth[space.add(s, t)];
                    if there < here {
                        c.down += 1;
                    } else if there == here {
                        c.same += 1;
                    } else {
                        c.up += 1;
                    }
                }
                c
            })
            .collect();

        Self {
            space,
            depth,
            counts,
            rho,
        }
    }

    pub fn space(&self) -> &SyndromeSpace {
        &self.space
    }

    pub fn covering_radius(&self) -> usize {
        self.rho as usize
    }

    pub fn depth(&self, syndrome: usize) -> u32 {
        self.depth[syndrome]
    }

    pub fn counts(&self, syndrome: usize) -> NeighborCounts {
        self.counts[syndrome]
    }

    /// Distance from `v` to the code.
    pub fn distance(&self, v: &[Elem]) -> Result<u32> {
        Ok(self.depth[self.space.syndrome_of(v)?])
    }

    /// Number of syndromes at each depth 0..=ρ.
    pub fn depth_sizes(&self) -> Vec<u64> {
        let mut sizes = vec![0; self.rho as usize + 1];
        for &d in &self.depth {
            sizes[d as usize] += 1;
        }
        sizes
    }

    pub fn profile(&self, syndrome: usize) -> SyndromeProfile {
        SyndromeProfile {
            syndrome: self.space.decode(syndrome),
            leader_weight: self.depth[syndrome],
            neighbor_counts: self.counts[syndrome],
            coset_weight_distribution: None,
        }
    }

    pub fn profiles(&self) -> impl Iterator<Item = SyndromeProfile> + '_ {
        (0..self.space.size()).map(|s| self.profile(s))
    }
}

/// `b_0..b_{ρ-1}`, `c_1..c_ρ`, `a_0..a_ρ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionArray {
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub a: Vec<u64>,
}

impl IntersectionArray {
    pub fn covering_radius(&self) -> usize {
        self.b.len()
    }
}

/// Two syndromes at the same depth whose profiles differ. `first < second`
/// and the pair is the lexicographically smallest such pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub depth: u32,
    pub first: usize,
    pub second: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regularity {
    Regular(IntersectionArray),
    Irregular(Witness),
}

impl Regularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, Regularity::Regular(_))
    }
}

/// Finds the smallest pair of syndromes with equal depth and different
/// `key`. Within one depth class the smallest member conflicts with anything
/// that differs from it, so only the first member of each class is a
/// candidate for `first`.
pub(crate) fn smallest_conflict<K: PartialEq>(
    depth: &[u32],
    rho: u32,
    key: impl Fn(usize) -> K,
) -> Option<Witness> {
    let mut representative: Vec<Option<usize>> = vec![None; rho as usize + 1];
    let mut found = vec![false; rho as usize + 1];
    let mut best: Option<Witness> = None;
    for (s, &d) in depth.iter().enumerate() {
        let class = d as usize;
        match representative[class] {
            None => representative[class] = Some(s),
            Some(r) if !found[class] && key(r) != key(s) => {
                found[class] = true;
                if best.is_none_or(|w| r < w.first) {
                    best = Some(Witness {
                        depth: d,
                        first: r,
                        second: s,
                    });
                }
            }
            _ => {}
        }
    }
    best
}

/// Checks that all syndromes at each depth share one `(down, same, up)`
/// triple; returns the intersection array or the smallest conflicting pair.
pub fn intersection_array_check(graph: &SyndromeGraph) -> Regularity {
    if let Some(w) = smallest_conflict(&graph.depth, graph.rho, |s| graph.counts[s]) {
        return Regularity::Irregular(w);
    }
    let rho = graph.rho as usize;
    let mut per_depth = vec![NeighborCounts::default(); rho + 1];
    let mut seen = vec![false; rho + 1];
    for (s, &d) in graph.depth.iter().enumerate() {
        if !seen[d as usize] {
            seen[d as usize] = true;
            per_depth[d as usize] = graph.counts[s];
        }
    }
    Regularity::Regular(IntersectionArray {
        b: per_depth[..rho].iter().map(|c| c.up).collect(),
        c: per_depth[1..].iter().map(|c| c.down).collect(),
        a: per_depth.iter().map(|c| c.same).collect(),
    })
}

/// Closed-form intersection array of Hamming(m_a) ⊗ Hamming(m_b):
/// with `g_ℓ = (q^ℓ - 1)/(q - 1)`,
/// `b_ℓ = (q-1)(n_a - g_ℓ)(n_b - g_ℓ)`, `c_ℓ = g_ℓ q^(ℓ-1)`,
/// `a_ℓ = (q-1) n_a n_b - b_ℓ - c_ℓ`, for `ℓ = 0..=min(m_a, m_b)`.
pub fn hamming_product_array(q: u64, m_a: usize, m_b: usize) -> Result<IntersectionArray> {
    if m_a < 2 || m_b < 2 || q < 2 {
        return Err(Error::InvalidParam(format!(
            "closed form needs q >= 2 and m_a, m_b >= 2, got ({q}, {m_a}, {m_b})"
        )));
    }
    let rho = m_a.min(m_b);
    let n_a = hamming_length(q as usize, m_a) as u64;
    let n_b = hamming_length(q as usize, m_b) as u64;
    let g = |l: usize| (q.pow(l as u32) - 1) / (q - 1);
    let b_at = |l: usize| (q - 1) * (n_a - g(l)) * (n_b - g(l));
    let c_at = |l: usize| {
        if l == 0 {
            0
        } else {
            g(l) * q.pow(l as u32 - 1)
        }
    };
    let total = (q - 1) * n_a * n_b;
    Ok(IntersectionArray {
        b: (0..rho).map(b_at).collect(),
        c: (1..=rho).map(c_at).collect(),
        a: (0..=rho).map(|l| total - b_at(l) - c_at(l)).collect(),
    })
}
