//! Uniform packing in the wide sense: find rationals α_0..α_ρ with
//! `Σ_k α_k f_k(v) = 1` for every vector `v`, where `f_k(v)` is the number of
//! codewords at distance `k` from `v`. `f_k(v)` is the weight-k entry of the
//! distribution of the coset `v + C`, so one equation per distinct coset
//! profile suffices.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::distribution::CosetDistributions;
use super::graph::SyndromeGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Packing {
    UniformlyPacked(Vec<BigRational>),
    NotUniformlyPacked,
}

impl Packing {
    pub fn is_uniformly_packed(&self) -> bool {
        matches!(self, Packing::UniformlyPacked(_))
    }
}

/// Solves `A x = b` exactly. Free variables are set to zero; `None` if the
/// system is inconsistent.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(p, row);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    // a zero row with nonzero right-hand side
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = m[i][cols].clone();
    }
    Some(x)
}

/// Distinct rows `(μ_0, ..., μ_ρ)` over all cosets, in ascending order.
pub fn packing_rows(graph: &SyndromeGraph, dists: &CosetDistributions) -> Vec<Vec<u128>> {
    let rho = graph.covering_radius();
    let rows: BTreeSet<Vec<u128>> = (0..graph.space().size())
        .map(|s| dists.row(s)[..=rho.min(dists.len())].to_vec())
        .collect();
    rows.into_iter().collect()
}

pub fn uniform_packing_check(graph: &SyndromeGraph, dists: &CosetDistributions) -> Packing {
    let rows = packing_rows(graph, dists);
    let a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let b = vec![BigRational::one(); a.len()];
    match solve_rational(&a, &b) {
        Some(alpha) => Packing::UniformlyPacked(alpha),
        None => Packing::NotUniformlyPacked,
    }
}

/// Checks `Σ α_k row_k = 1` on every row.
pub fn satisfies(alpha: &[BigRational], rows: &[Vec<u128>]) -> bool {
    rows.iter().all(|r| {
        let lhs: BigRational = r
            .iter()
            .zip(alpha)
            .map(|(&x, a)| a * BigRational::from_integer(BigInt::from(x)))
            .sum();
        lhs.is_one()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyze::space::SyndromeSpace;
    use crate::construct::{hamming_check, kron_up_code};

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn solver_small_systems() {
        // x + y = 3, x - y = 1
        let a = vec![vec![r(1, 1), r(1, 1)], vec![r(1, 1), r(-1, 1)]];
        assert_eq!(
            solve_rational(&a, &[r(3, 1), r(1, 1)]),
            Some(vec![r(2, 1), r(1, 1)])
        );
        // x + y = 1, 2x + 2y = 3: inconsistent
        let a = vec![vec![r(1, 1), r(1, 1)], vec![r(2, 1), r(2, 1)]];
        assert_eq!(solve_rational(&a, &[r(1, 1), r(3, 1)]), None);
        // underdetermined: free variable set to zero
        let a = vec![vec![r(0, 1), r(3, 1)]];
        assert_eq!(solve_rational(&a, &[r(1, 1)]), Some(vec![r(0, 1), r(1, 3)]));
        // overdetermined but consistent
        let a = vec![vec![r(2, 1)], vec![r(4, 1)], vec![r(6, 1)]];
        assert_eq!(
            solve_rational(&a, &[r(1, 1), r(2, 1), r(3, 1)]),
            Some(vec![r(1, 2)])
        );
    }

    #[test]
    fn perfect_code_alpha() {
        let spec = hamming_check(3, 2).unwrap();
        let space = SyndromeSpace::new(&spec, 1 << 20).unwrap();
        let d = CosetDistributions::compute(&space, 1 << 20).unwrap();
        let g = SyndromeGraph::from_space(space);
        let Packing::UniformlyPacked(alpha) = uniform_packing_check(&g, &d) else {
            panic!("perfect codes are uniformly packed");
        };
        assert_eq!(alpha, vec![r(1, 1), r(1, 1)]);
    }

    #[test]
    fn up_family_has_alpha() {
        let spec = kron_up_code(2, 4, 3).unwrap();
        let space = SyndromeSpace::new(&spec, 1 << 20).unwrap();
        let d = CosetDistributions::compute(&space, 1 << 20).unwrap();
        let g = SyndromeGraph::from_space(space);
        let Packing::UniformlyPacked(alpha) = uniform_packing_check(&g, &d) else {
            panic!("expected uniformly packed");
        };
        assert_eq!(alpha.len(), 4);
        assert!(satisfies(&alpha, &packing_rows(&g, &d)));
    }
}
