//! Dual-code weights: direct enumeration of the row space of the check
//! matrix, and the MacWilliams transform of a weight distribution.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::space::{check_budget, SyndromeSpace};
use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::matrix::GFMatrix;

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    BigInt::from(acc)
}

/// q-ary Krawtchouk polynomial `K_i(j) = Σ_h (-1)^h (q-1)^(i-h) C(j,h) C(n-j,i-h)`.
pub fn krawtchouk(n: u64, q: u64, i: u64, j: u64) -> BigInt {
    let q1 = BigInt::from(q - 1);
    (0..=i)
        .map(|h| {
            let term = num_traits::pow(q1.clone(), (i - h) as usize)
                * binomial(j, h)
                * binomial(n - j, i - h);
            if h % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// `μ⊥_i = (1/|C|) Σ_j μ_j K_i(j)` with `|C| = Σ μ_j` and `n = mu.len() - 1`.
/// Every output must be a non-negative integer.
pub fn macwilliams_transform(mu: &[u128], q: u64) -> Result<Vec<u128>> {
    if mu.is_empty() {
        return Err(Error::InvalidParam("empty weight distribution".into()));
    }
    let n = (mu.len() - 1) as u64;
    let size: BigInt = mu.iter().map(|&x| BigInt::from(x)).sum();
    if size.is_zero() {
        return Err(Error::InvalidParam(
            "weight distribution sums to zero".into(),
        ));
    }
    (0..=n)
        .map(|i| {
            let total: BigInt = mu
                .iter()
                .enumerate()
                .filter(|(_, &m)| m != 0)
                .map(|(j, &m)| BigInt::from(m) * krawtchouk(n, q, i, j as u64))
                .sum();
            let (quot, rem) = total.div_rem(&size);
            if !rem.is_zero() || quot.is_negative() {
                return Err(Error::NonIntegerResult(i as usize));
            }
            quot.to_u128()
                .ok_or(Error::Overflow("MacWilliams transform"))
        })
        .collect()
}

/// Weight distribution of the row space of `basis` (rows assumed
/// independent), enumerating all `q^rows` combinations.
pub fn row_space_distribution(basis: &GFMatrix, budget: u64) -> Result<Vec<u128>> {
    let q = basis.q();
    let n = basis.cols();
    let total = (q as u128)
        .checked_pow(basis.rows() as u32)
        .unwrap_or(u128::MAX);
    check_budget(total, budget)?;
    let f = basis.field().clone();
    let mut dist = vec![0u128; n + 1];
    let mut stack: Vec<Vec<Elem>> = vec![vec![0; n]];

    fn walk(
        level: usize,
        basis: &GFMatrix,
        f: &crate::gf::FieldTable,
        stack: &mut Vec<Vec<Elem>>,
        dist: &mut [u128],
    ) {
        if level == basis.rows() {
            let w = stack.last().unwrap().iter().filter(|&&x| x != 0).count();
            dist[w] += 1;
            return;
        }
        let row = basis.row(level);
        for a in f.elements() {
            let next: Vec<Elem> = stack
                .last()
                .unwrap()
                .iter()
                .zip(row)
                .map(|(&x, &y)| f.add(x, f.mul(a, y)))
                .collect();
            stack.push(next);
            walk(level + 1, basis, f, stack, dist);
            stack.pop();
        }
    }

    walk(0, basis, &f, &mut stack, &mut dist);
    Ok(dist)
}

/// Weight distribution of the dual code.
pub fn dual_distribution(space: &SyndromeSpace, budget: u64) -> Result<Vec<u128>> {
    row_space_distribution(space.check_matrix(), budget)
}

/// Distinct nonzero weights with a nonzero count, ascending.
pub fn nonzero_weights(dist: &[u128]) -> Vec<usize> {
    dist.iter()
        .enumerate()
        .skip(1)
        .filter(|(_, &c)| c > 0)
        .map(|(w, _)| w)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{hamming_check, kron_cr_code, kron_up_code};

    const BUDGET: u64 = 1 << 22;

    #[test]
    fn krawtchouk_small_values() {
        // K_0 = 1, K_1(j) = (q-1)n - qj
        for j in 0..6 {
            assert_eq!(krawtchouk(5, 3, 0, j), BigInt::from(1));
            assert_eq!(krawtchouk(5, 3, 1, j), BigInt::from(2 * 5 - 3 * j as i64));
        }
    }

    #[test]
    fn full_space_dualizes_to_zero_code() {
        // binomial(n, j) (q-1)^j
        let mu: Vec<u128> = vec![1, 8, 24, 32, 16];
        assert_eq!(macwilliams_transform(&mu, 3).unwrap(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn hamming_dual_is_simplex() {
        let mu = [1, 0, 0, 7, 7, 0, 0, 1];
        assert_eq!(
            macwilliams_transform(&mu, 2).unwrap(),
            vec![1, 0, 0, 0, 7, 0, 0, 0]
        );
    }

    #[test]
    fn transform_is_an_involution_up_to_scaling() {
        let mu = [1, 0, 0, 7, 7, 0, 0, 1];
        let dual = macwilliams_transform(&mu, 2).unwrap();
        assert_eq!(macwilliams_transform(&dual, 2).unwrap(), mu.to_vec());
        // even-weight code of length 4 is self-complementary
        let even = [1, 0, 6, 0, 1];
        let d = macwilliams_transform(&even, 2).unwrap();
        assert_eq!(d, vec![1, 0, 0, 0, 1]);
        assert_eq!(macwilliams_transform(&d, 2).unwrap(), even.to_vec());
    }

    #[test]
    fn invalid_distribution_is_rejected() {
        assert!(matches!(
            macwilliams_transform(&[1, 1, 1], 2),
            Err(Error::NonIntegerResult(_))
        ));
        assert!(macwilliams_transform(&[], 2).is_err());
    }

    #[test]
    fn dual_weights_of_known_codes() {
        let s = SyndromeSpace::new(&hamming_check(3, 3).unwrap(), BUDGET).unwrap();
        assert_eq!(
            nonzero_weights(&dual_distribution(&s, BUDGET).unwrap()),
            vec![9]
        );

        let s = SyndromeSpace::new(&kron_up_code(2, 4, 3).unwrap(), BUDGET).unwrap();
        let d = dual_distribution(&s, BUDGET).unwrap();
        assert_eq!(nonzero_weights(&d), vec![8, 12, 16]);
        assert_eq!(d.iter().sum::<u128>(), 512);

        let s = SyndromeSpace::new(&kron_cr_code(2, 2, 2).unwrap(), BUDGET).unwrap();
        let d = dual_distribution(&s, BUDGET).unwrap();
        assert_eq!(nonzero_weights(&d).len(), 2);
        assert_eq!(d.iter().sum::<u128>(), 16);
    }
}
