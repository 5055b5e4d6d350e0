//! Parity-check constructions: q-ary Hamming, repetition, and their
//! Kronecker products, plus the matrix view of Kronecker-code vectors.
//!
//! A vector of length `n_a * n_b` for a code with check matrix `A ⊗ B` is
//! viewed as an `n_b x n_a` matrix whose columns are consecutive blocks of
//! `n_b` coordinates. Its syndrome, reshaped the same way, is `B · V · A^t`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldTable};
use crate::matrix::GFMatrix;

/// Which construction produced a check matrix, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hamming {
        m: usize,
    },
    Repetition {
        n: usize,
    },
    /// Hamming(m_a) ⊗ Hamming(m_b).
    KronCr {
        m_a: usize,
        m_b: usize,
    },
    /// Repetition(n_a) ⊗ Hamming(m).
    KronUp {
        n_a: usize,
        m: usize,
    },
    Custom,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Hamming { .. } => "hamming",
            Family::Repetition { .. } => "repetition",
            Family::KronCr { .. } => "kron_cr",
            Family::KronUp { .. } => "kron_up",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Hamming { m } => write!(f, "hamming(m={m})"),
            Family::Repetition { n } => write!(f, "repetition(n={n})"),
            Family::KronCr { m_a, m_b } => write!(f, "kron_cr(m_a={m_a}, m_b={m_b})"),
            Family::KronUp { n_a, m } => write!(f, "kron_up(n_a={n_a}, m={m})"),
            Family::Custom => f.write_str("custom"),
        }
    }
}

/// A linear code given by its parity-check matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    field: Arc<FieldTable>,
    h: GFMatrix,
    family: Family,
    n: usize,
    k: usize,
}

/// `(q^m - 1) / (q - 1)`, the length of the q-ary Hamming code of redundancy m.
pub fn hamming_length(q: usize, m: usize) -> usize {
    (q.pow(m as u32) - 1) / (q - 1)
}

impl CodeSpec {
    /// Wraps an arbitrary check matrix. For the Kronecker families the shape
    /// must match the family parameters.
    pub fn new(family: Family, h: GFMatrix) -> Result<Self> {
        let q = h.q();
        let expected = match family {
            Family::Hamming { m } => Some((m, hamming_length(q, m))),
            Family::Repetition { n } => Some((n.saturating_sub(1), n)),
            Family::KronCr { m_a, m_b } => {
                Some((m_a * m_b, hamming_length(q, m_a) * hamming_length(q, m_b)))
            }
            Family::KronUp { n_a, m } => Some((m * (n_a - 1), n_a * hamming_length(q, m))),
            Family::Custom => None,
        };
        if let Some((rows, cols)) = expected {
            if (h.rows(), h.cols()) != (rows, cols) {
                return Err(Error::DimensionMismatch(format!(
                    "{family} expects a {rows}x{cols} check matrix, got {}x{}",
                    h.rows(),
                    h.cols()
                )));
            }
        }
        let n = h.cols();
        let k = n - h.rank();
        Ok(Self {
            field: h.field().clone(),
            h,
            family,
            n,
            k,
        })
    }

    pub fn custom(h: GFMatrix) -> Self {
        Self::new(Family::Custom, h).expect("custom codes accept any shape")
    }

    pub fn field(&self) -> &Arc<FieldTable> {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.order()
    }

    pub fn check_matrix(&self) -> &GFMatrix {
        &self.h
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    /// Redundancy `n - k`, the rank of the check matrix.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    /// `H · v^t`.
    pub fn syndrome(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.h.mul_vec(v)
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        Ok(self.syndrome(v)?.iter().all(|&x| x == 0))
    }

    /// The factors `(A, B)` with `H = A ⊗ B`, rebuilt from the family
    /// parameters. `None` for non-Kronecker families.
    pub fn kron_factors(&self) -> Option<(GFMatrix, GFMatrix)> {
        let f = &self.field;
        match self.family {
            Family::KronCr { m_a, m_b } => {
                Some((hamming_matrix(f, m_a).ok()?, hamming_matrix(f, m_b).ok()?))
            }
            Family::KronUp { n_a, m } => {
                Some((repetition_matrix(f, n_a).ok()?, hamming_matrix(f, m).ok()?))
            }
            _ => None,
        }
    }
}

/// Puts `col` in projective normal form: first nonzero entry scaled to 1.
fn normalize(f: &FieldTable, col: &mut [Elem]) {
    if let Some(&lead) = col.iter().find(|&&x| x != 0) {
        let inv = f.inv(lead).expect("nonzero");
        for x in col.iter_mut() {
            *x = f.mul(inv, *x);
        }
    }
}

/// Integer reading of a column, top entry most significant.
fn column_value(col: &[Elem], q: usize) -> usize {
    col.iter().fold(0, |acc, &x| acc * q + x as usize)
}

/// Columns of the recursive Hamming matrix before canonical ordering:
/// `H_1 = [1]`, and `H_m` stacks a top row `0..0 | 1..1 | ... | ξ..ξ | 1`
/// over `H_{m-1} | H_{m-1} | ... | H_{m-1} | 0`, one block per field element.
fn recursive_hamming_columns(f: &FieldTable, m: usize) -> Vec<Vec<Elem>> {
    if m == 1 {
        return vec![vec![1]];
    }
    let prev = recursive_hamming_columns(f, m - 1);
    let mut cols = Vec::with_capacity(f.order() * prev.len() + 1);
    for top in f.elements() {
        for c in &prev {
            let mut col = Vec::with_capacity(m);
            col.push(top);
            col.extend_from_slice(c);
            cols.push(col);
        }
    }
    let mut last = vec![0; m];
    last[0] = 1;
    cols.push(last);
    cols
}

/// Parity-check matrix of the q-ary Hamming code with `m` check symbols.
///
/// Columns are normalized to a leading 1; the `m` weight-one columns come
/// first (the 1 moving down), then the rest in ascending integer reading.
pub fn hamming_matrix(field: &Arc<FieldTable>, m: usize) -> Result<GFMatrix> {
    if m < 1 {
        return Err(Error::InvalidParam(
            "Hamming redundancy m must be >= 1".into(),
        ));
    }
    let q = field.order();
    let mut cols = recursive_hamming_columns(field, m);
    for c in cols.iter_mut() {
        normalize(field, c);
    }
    let is_unit = |c: &Vec<Elem>| c.iter().filter(|&&x| x != 0).count() == 1;
    let (mut units, mut rest): (Vec<_>, Vec<_>) = cols.into_iter().partition(is_unit);
    units.sort_by_key(|c| c.iter().position(|&x| x != 0));
    rest.sort_by_key(|c| column_value(c, q));
    units.extend(rest);
    GFMatrix::from_columns(field.clone(), m, &units)
}

/// `[I_{n-1} | -1]`, whose null space is the repetition code of length `n`.
pub fn repetition_matrix(field: &Arc<FieldTable>, n: usize) -> Result<GFMatrix> {
    if n < 3 {
        return Err(Error::InvalidParam(format!(
            "repetition length must be >= 3, got {n}"
        )));
    }
    let minus_one = field.neg(1);
    let mut h = GFMatrix::zeros(field.clone(), n - 1, n);
    for i in 0..n - 1 {
        h.set(i, i, 1);
        h.set(i, n - 1, minus_one);
    }
    Ok(h)
}

pub fn hamming_check(q: u32, m: usize) -> Result<CodeSpec> {
    let field = Arc::new(FieldTable::new(q)?);
    CodeSpec::new(Family::Hamming { m }, hamming_matrix(&field, m)?)
}

pub fn repetition_check(q: u32, n: usize) -> Result<CodeSpec> {
    let field = Arc::new(FieldTable::new(q)?);
    CodeSpec::new(Family::Repetition { n }, repetition_matrix(&field, n)?)
}

/// Hamming(m_a) ⊗ Hamming(m_b): the completely regular family.
pub fn kron_cr_code(q: u32, m_a: usize, m_b: usize) -> Result<CodeSpec> {
    if m_a < 2 || m_b < 2 {
        return Err(Error::InvalidParam(format!(
            "kron_cr needs m_a, m_b >= 2, got ({m_a}, {m_b})"
        )));
    }
    let field = Arc::new(FieldTable::new(q)?);
    let a = hamming_matrix(&field, m_a)?;
    let b = hamming_matrix(&field, m_b)?;
    CodeSpec::new(Family::KronCr { m_a, m_b }, a.kronecker(&b)?)
}

/// Repetition(n_a) ⊗ Hamming(m): the uniformly packed family.
pub fn kron_up_code(q: u32, n_a: usize, m: usize) -> Result<CodeSpec> {
    let field = Arc::new(FieldTable::new(q)?);
    if n_a < 3 {
        return Err(Error::InvalidParam(format!(
            "kron_up needs n_a >= 3, got {n_a}"
        )));
    }
    if m < 1 {
        return Err(Error::InvalidParam("kron_up needs m >= 1".into()));
    }
    let qu = q as usize;
    let n_b = hamming_length(qu, m);
    if n_b < qu + 1 || n_b < n_a {
        return Err(Error::InvalidParam(format!(
            "kron_up needs n_b = {n_b} >= max(q + 1, n_a) = {}",
            (qu + 1).max(n_a)
        )));
    }
    let a = repetition_matrix(&field, n_a)?;
    let b = hamming_matrix(&field, m)?;
    CodeSpec::new(Family::KronUp { n_a, m }, a.kronecker(&b)?)
}

/// A length `n_b * n_a` vector seen as an `n_b x n_a` matrix, blocks of `n_b`
/// coordinates forming the columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodewordMatrixView {
    pub base: Vec<Elem>,
    pub as_matrix: GFMatrix,
}

impl CodewordMatrixView {
    pub fn new(field: &Arc<FieldTable>, base: &[Elem], n_b: usize, n_a: usize) -> Result<Self> {
        if base.len() != n_a * n_b {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} viewed as {n_b}x{n_a}",
                base.len()
            )));
        }
        let mut m = GFMatrix::zeros(field.clone(), n_b, n_a);
        for j in 0..n_a {
            for i in 0..n_b {
                m.set(i, j, base[j * n_b + i]);
            }
        }
        Ok(Self {
            base: base.to_vec(),
            as_matrix: m,
        })
    }

    /// Reads the matrix back column by column.
    pub fn flatten(&self) -> Vec<Elem> {
        let m = &self.as_matrix;
        (0..m.cols())
            .flat_map(|j| (0..m.rows()).map(move |i| m.get(i, j)))
            .collect()
    }
}

/// `M_v = B · V · A^t` for a Kronecker-family code; zero exactly on codewords
/// and constant on cosets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MainSubmatrix(pub GFMatrix);

impl MainSubmatrix {
    pub fn matrix(&self) -> &GFMatrix {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    /// Syndrome `H · v^t` as a flat vector (column-major read of `M_v`).
    pub fn to_syndrome(&self) -> Vec<Elem> {
        let m = &self.0;
        (0..m.cols())
            .flat_map(|j| (0..m.rows()).map(move |i| m.get(i, j)))
            .collect()
    }
}

fn kron_parts(spec: &CodeSpec) -> Result<(GFMatrix, GFMatrix)> {
    spec.kron_factors()
        .ok_or_else(|| Error::UnsupportedFamily(spec.family().name().into()))
}

pub fn main_submatrix(spec: &CodeSpec, v: &[Elem]) -> Result<MainSubmatrix> {
    let (a, b) = kron_parts(spec)?;
    let view = CodewordMatrixView::new(spec.field(), v, b.cols(), a.cols())?;
    Ok(MainSubmatrix(
        b.matmul(&view.as_matrix)?.matmul(&a.transpose())?,
    ))
}

/// A vector whose main submatrix is `m`: `m` is written into the top-left
/// corner of the matrix view, where both factors have identity columns.
pub fn vector_with_main_submatrix(spec: &CodeSpec, m: &GFMatrix) -> Result<Vec<Elem>> {
    let (a, b) = kron_parts(spec)?;
    if (m.rows(), m.cols()) != (b.rows(), a.rows()) {
        return Err(Error::DimensionMismatch(format!(
            "main submatrix must be {}x{}",
            b.rows(),
            a.rows()
        )));
    }
    let n_b = b.cols();
    let mut v = vec![0; spec.len()];
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            v[j * n_b + i] = m.get(i, j);
        }
    }
    Ok(v)
}

/// Distance from `v` to the code, computed as the rank of its main
/// submatrix. Only defined for Hamming ⊗ Hamming codes.
pub fn rank_distance(spec: &CodeSpec, v: &[Elem]) -> Result<usize> {
    match spec.family() {
        Family::KronCr { .. } => Ok(main_submatrix(spec, v)?.rank()),
        other => Err(Error::UnsupportedFamily(other.name().into())),
    }
}

/// True iff the minimum distance is exactly 3: no zero column, no two columns
/// proportional, and some three columns dependent. Codes of length ≤ 24 are
/// additionally checked by running through every vector of weight 1 and 2.
pub fn min_distance_is_3(spec: &CodeSpec) -> bool {
    let f = spec.field();
    let h = spec.check_matrix();
    let mut normalized: Vec<Vec<Elem>> = h.columns();
    for c in normalized.iter_mut() {
        normalize(f, c);
    }
    if normalized.iter().any(|c| c.iter().all(|&x| x == 0)) {
        return false;
    }
    let distinct: HashSet<&Vec<Elem>> = normalized.iter().collect();
    if distinct.len() != normalized.len() {
        return false;
    }
    if spec.len() <= 24 && !no_light_codewords(spec) {
        return false;
    }
    // h_i + a·h_j proportional to a third column
    for i in 0..normalized.len() {
        for j in i + 1..normalized.len() {
            for a in f.nonzero() {
                let mut s: Vec<Elem> = normalized[i]
                    .iter()
                    .zip(&normalized[j])
                    .map(|(&x, &y)| f.add(x, f.mul(a, y)))
                    .collect();
                normalize(f, &mut s);
                if distinct.contains(&s) {
                    return true;
                }
            }
        }
    }
    false
}

fn no_light_codewords(spec: &CodeSpec) -> bool {
    let f = spec.field();
    let n = spec.len();
    let mut v = vec![0; n];
    for i in 0..n {
        for a in f.nonzero() {
            v[i] = a;
            if spec.contains(&v).unwrap() {
                return false;
            }
            for j in i + 1..n {
                for b in f.nonzero() {
                    v[j] = b;
                    if spec.contains(&v).unwrap() {
                        return false;
                    }
                }
                v[j] = 0;
            }
        }
        v[i] = 0;
    }
    true
}
