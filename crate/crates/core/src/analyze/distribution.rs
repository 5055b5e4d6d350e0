//! Coset weight distributions by dynamic programming over coordinates.
//!
//! State is `(syndrome, weight)`. Coordinate `j` either stays zero or takes a
//! nonzero value `e`, moving the syndrome by `e·h_j` and the weight by one.
//! After all `n` coordinates, cell `(s, w)` counts the vectors of weight `w`
//! and syndrome `s`: row `s` is the weight distribution of that coset.

use super::graph::{smallest_conflict, SyndromeGraph, Witness};
use super::space::{check_budget, SyndromeSpace};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct CosetDistributions {
    n: usize,
    size: usize,
    table: Vec<u128>,
}

impl CosetDistributions {
    /// Requires `q^r · n` within `budget`. Counts are exact; overflow of the
    /// 128-bit cells is reported, never wrapped.
    pub fn compute(space: &SyndromeSpace, budget: u64) -> Result<Self> {
        let n = space.len();
        let size = space.size();
        check_budget(size as u128 * n.max(1) as u128, budget)?;
        let width = n + 1;
        let q1 = space.q() - 1;
        let mut cur = vec![0u128; size * width];
        cur[0] = 1;
        let mut next = vec![0u128; size * width];
        for j in 0..n {
            next.iter_mut().for_each(|x| *x = 0);
            let moves = &space.shifts()[j * q1..(j + 1) * q1];
            for s in 0..size {
                // only weights 0..=j are reachable after j coordinates
                for w in 0..=j {
                    let count = cur[s * width + w];
                    if count == 0 {
                        continue;
                    }
                    let stay = &mut next[s * width + w];
                    *stay = stay
                        .checked_add(count)
                        .ok_or(Error::Overflow("coset distribution"))?;
                    for &t in moves {
                        let cell = &mut next[space.add(s, t) * width + w + 1];
                        *cell = cell
                            .checked_add(count)
                            .ok_or(Error::Overflow("coset distribution"))?;
                    }
                }
            }
            std::mem::swap(&mut cur, &mut next);
        }
        Ok(Self {
            n,
            size,
            table: cur,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn num_cosets(&self) -> usize {
        self.size
    }

    /// μ_0..μ_n of the coset with the given syndrome code.
    pub fn row(&self, syndrome: usize) -> &[u128] {
        &self.table[syndrome * (self.n + 1)..(syndrome + 1) * (self.n + 1)]
    }

    /// Weight distribution of the code itself.
    pub fn code_distribution(&self) -> &[u128] {
        self.row(0)
    }

    /// Minimum nonzero codeword weight; `None` for the zero code.
    pub fn minimum_distance(&self) -> Option<usize> {
        self.code_distribution()
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w)
    }

    /// Column sums: the number of vectors of each weight over all cosets.
    pub fn totals(&self) -> Vec<u128> {
        let mut t = vec![0u128; self.n + 1];
        for s in 0..self.size {
            for (acc, &x) in t.iter_mut().zip(self.row(s)) {
                *acc += x;
            }
        }
        t
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistributionRegularity {
    /// One distribution per coset weight 0..=ρ.
    Regular(Vec<Vec<u128>>),
    Irregular(Witness),
}

impl DistributionRegularity {
    pub fn is_regular(&self) -> bool {
        matches!(self, DistributionRegularity::Regular(_))
    }
}

/// Groups cosets by weight; regular iff every group shares one distribution.
pub fn distribution_regularity(
    graph: &SyndromeGraph,
    dists: &CosetDistributions,
) -> DistributionRegularity {
    let size = graph.space().size();
    let depth: Vec<u32> = (0..size).map(|s| graph.depth(s)).collect();
    let rho = graph.covering_radius();
    if let Some(w) = smallest_conflict(&depth, rho as u32, |s| dists.row(s)) {
        return DistributionRegularity::Irregular(w);
    }
    let mut per_depth: Vec<Option<Vec<u128>>> = vec![None; rho + 1];
    for (s, &d) in depth.iter().enumerate() {
        per_depth[d as usize].get_or_insert_with(|| dists.row(s).to_vec());
    }
    DistributionRegularity::Regular(per_depth.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{hamming_check, kron_cr_code, CodeSpec};
    use std::collections::HashMap;

    const BUDGET: u64 = 1 << 22;

    /// Oracle: walk all q^n vectors and bucket by (syndrome, weight).
    fn brute_force(spec: &CodeSpec) -> HashMap<usize, Vec<u128>> {
        let space = SyndromeSpace::new(spec, BUDGET).unwrap();
        let q = spec.q();
        let n = spec.len();
        let mut out: HashMap<usize, Vec<u128>> = HashMap::new();
        for x in 0..q.pow(n as u32) {
            let mut v = Vec::with_capacity(n);
            let mut t = x;
            for _ in 0..n {
                v.push((t % q) as u8);
                t /= q;
            }
            let w = v.iter().filter(|&&e| e != 0).count();
            let s = space.syndrome_of(&v).unwrap();
            out.entry(s).or_insert_with(|| vec![0; n + 1])[w] += 1;
        }
        out
    }

    #[test]
    fn hamming_7_4_cosets() {
        let spec = hamming_check(2, 3).unwrap();
        let space = SyndromeSpace::new(&spec, BUDGET).unwrap();
        let d = CosetDistributions::compute(&space, BUDGET).unwrap();
        let oracle = brute_force(&spec);
        assert_eq!(d.code_distribution(), &[1, 0, 0, 7, 7, 0, 0, 1]);
        for s in 1..8 {
            assert_eq!(d.row(s), &[0, 1, 3, 4, 4, 3, 1, 0]);
            assert_eq!(d.row(s), oracle[&s].as_slice());
        }
        assert_eq!(d.minimum_distance(), Some(3));
    }

    #[test]
    fn dp_matches_enumeration() {
        for spec in [
            kron_cr_code(2, 2, 2).unwrap(),
            crate::construct::kron_up_code(3, 3, 2).unwrap(),
        ] {
            let space = SyndromeSpace::new(&spec, BUDGET).unwrap();
            let d = CosetDistributions::compute(&space, BUDGET).unwrap();
            let oracle = brute_force(&spec);
            for s in 0..space.size() {
                assert_eq!(d.row(s), oracle[&s].as_slice());
                let sum: u128 = d.row(s).iter().sum();
                assert_eq!(sum, (spec.q() as u128).pow(spec.dimension() as u32));
            }
        }
    }

    #[test]
    fn kron_cr_classes_share_distributions() {
        let spec = kron_cr_code(2, 2, 2).unwrap();
        let graph = SyndromeGraph::build(&spec, BUDGET).unwrap();
        let d = CosetDistributions::compute(graph.space(), BUDGET).unwrap();
        assert_eq!(graph.depth_sizes(), vec![1, 9, 6]);
        let DistributionRegularity::Regular(per) = distribution_regularity(&graph, &d) else {
            panic!("kron_cr(2,2,2) is completely regular");
        };
        assert_eq!(per.len(), 3);
        assert_eq!(per[0][0], 1);
    }

    #[test]
    fn budget_applies_to_table() {
        let spec = kron_cr_code(2, 2, 2).unwrap();
        let space = SyndromeSpace::new(&spec, BUDGET).unwrap();
        assert_eq!(
            CosetDistributions::compute(&space, 100).unwrap_err(),
            Error::BudgetExceeded {
                needed: 16 * 9,
                budget: 100
            }
        );
    }
}
