use std::sync::Arc;

use crate::construct::CodeSpec;
use crate::error::{Error, Result};
use crate::gf::{Elem, FieldTable};
use crate::matrix::GFMatrix;

/// The syndrome space `GF(q)^r`, `r` the rank of the check matrix, with each
/// syndrome packed into an integer code.
///
/// The code of `(s_0, ..., s_{r-1})` is `Σ s_i · q^(r-1-i)`, so ordering codes
/// as integers orders syndromes lexicographically.
#[derive(Debug, Clone)]
pub struct SyndromeSpace {
    field: Arc<FieldTable>,
    check: GFMatrix,
    n: usize,
    r: usize,
    size: usize,
    /// Code of `e · h_j`, at index `j * (q - 1) + (e - 1)`.
    shifts: Vec<usize>,
    xor_add: bool,
}

/// `q^r`, or `None` on overflow.
pub(crate) fn space_size(q: usize, r: usize) -> Option<usize> {
    q.checked_pow(r as u32)
}

pub(crate) fn check_budget(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

impl SyndromeSpace {
    /// Fails with `BudgetExceeded` when `q^r` exceeds `budget`. A check
    /// matrix without full row rank is replaced by a basis of its row space.
    pub fn new(spec: &CodeSpec, budget: u64) -> Result<Self> {
        let field = spec.field().clone();
        let q = field.order();
        let h = spec.check_matrix();
        let r = spec.redundancy();
        let size = match space_size(q, r) {
            Some(s) => s,
            None => {
                return Err(Error::BudgetExceeded {
                    needed: u128::MAX,
                    budget,
                })
            }
        };
        check_budget(size as u128, budget)?;
        let check = if h.rows() == r {
            h.clone()
        } else {
            h.row_basis()
        };

        let mut space = Self {
            xor_add: q.is_power_of_two(),
            field,
            n: spec.len(),
            r,
            size,
            shifts: Vec::new(),
            check,
        };
        let f = space.field.clone();
        let mut shifts = Vec::with_capacity(space.n * (q - 1));
        for j in 0..space.n {
            let col = space.check.column(j);
            for e in f.nonzero() {
                let scaled: Vec<Elem> = col.iter().map(|&x| f.mul(e, x)).collect();
                shifts.push(space.encode(&scaled));
            }
        }
        space.shifts = shifts;
        Ok(space)
    }

    pub fn field(&self) -> &Arc<FieldTable> {
        &self.field
    }

    /// Check matrix the syndromes are taken against (full row rank).
    pub fn check_matrix(&self) -> &GFMatrix {
        &self.check
    }

    pub fn q(&self) -> usize {
        self.field.order()
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn redundancy(&self) -> usize {
        self.r
    }

    /// Number of syndromes, `q^r`.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn encode(&self, s: &[Elem]) -> usize {
        let q = self.q();
        s.iter().fold(0, |acc, &x| acc * q + x as usize)
    }

    pub fn decode(&self, mut code: usize) -> Vec<Elem> {
        let q = self.q();
        let mut s = vec![0; self.r];
        for slot in s.iter_mut().rev() {
            *slot = (code % q) as Elem;
            code /= q;
        }
        s
    }

    /// Sum of two syndromes, digit by digit in GF(q).
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        if self.xor_add {
            // digits of a GF(2^e) code are bit fields, so addition is XOR
            return a ^ b;
        }
        let q = self.q();
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.r {
            let d = self.field.add((a % q) as Elem, (b % q) as Elem) as usize;
            out += d * place;
            place *= q;
            a /= q;
            b /= q;
        }
        out
    }

    /// Codes of `e · h_j` for every coordinate `j` and nonzero `e`; the
    /// neighbors of syndrome `s` are `s + t` for `t` in this list.
    pub fn shifts(&self) -> &[usize] {
        &self.shifts
    }

    /// Code of `e · h_j`.
    pub fn shift(&self, j: usize, e: Elem) -> usize {
        debug_assert!(e != 0);
        self.shifts[j * (self.q() - 1) + e as usize - 1]
    }

    pub fn syndrome_of(&self, v: &[Elem]) -> Result<usize> {
        Ok(self.encode(&self.check.mul_vec(v)?))
    }
}
