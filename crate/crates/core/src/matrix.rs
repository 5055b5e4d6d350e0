//! Dense matrices over GF(q), row-major.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldTable};

#[derive(Clone, PartialEq, Eq)]
pub struct GFMatrix {
    field: Arc<FieldTable>,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for GFMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "GFMatrix over GF({}) {}x{}",
            self.q(),
            self.rows,
            self.cols
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

fn check_field(a: &FieldTable, b: &FieldTable) -> Result<()> {
    if a.order() == b.order() {
        Ok(())
    } else {
        Err(Error::FieldMismatch {
            left: a.order() as u32,
            right: b.order() as u32,
        })
    }
}

impl GFMatrix {
    pub fn new(field: Arc<FieldTable>, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| x as usize >= field.order()) {
            return Err(Error::InvalidElement {
                value: bad as u32,
                q: field.order() as u32,
            });
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: Arc<FieldTable>, rows: &[Vec<Elem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.concat();
        Self::new(field, rows.len(), cols, data)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(
        field: Arc<FieldTable>,
        height: usize,
        columns: &[Vec<Elem>],
    ) -> Result<Self> {
        if columns.iter().any(|c| c.len() != height) {
            return Err(Error::DimensionMismatch("ragged columns".into()));
        }
        let mut m = Self::zeros(field, height, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, &x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        match self
            .data
            .iter()
            .find(|&&x| x as usize >= self.field.order())
        {
            Some(&bad) => Err(Error::InvalidElement {
                value: bad as u32,
                q: self.q() as u32,
            }),
            None => Ok(()),
        }
    }

    pub fn zeros(field: Arc<FieldTable>, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Arc<FieldTable>, k: usize) -> Self {
        let mut m = Self::zeros(field, k, k);
        for i in 0..k {
            m.data[i * k + i] = 1;
        }
        m
    }

    pub fn field(&self) -> &Arc<FieldTable> {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.order()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Elem] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, x: Elem) {
        assert!(
            (x as usize) < self.q(),
            "element {x} outside GF({})",
            self.q()
        );
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Elem>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn scale(&self, k: Elem) -> Self {
        let f = &self.field;
        Self {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.mul(k, x)).collect(),
        }
    }

    /// Keeps the listed columns, in the listed order.
    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(self.field.clone(), self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.data[r * idx.len() + j] = self.get(r, c);
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let data = idx
            .iter()
            .flat_map(|&r| self.row(r).iter().copied())
            .collect();
        Self {
            field: self.field.clone(),
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn matmul(&self, other: &GFMatrix) -> Result<GFMatrix> {
        check_field(&self.field, &other.field)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// `M · v^t` for a vector of length `cols`.
    pub fn mul_vec(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    /// Kronecker product: block (r, s) of the result is `a[r][s] · other`.
    /// Column `s * other.cols + j` pairs column `s` of `self` with column `j`
    /// of `other`.
    pub fn kronecker(&self, other: &GFMatrix) -> Result<GFMatrix> {
        check_field(&self.field, &other.field)?;
        let f = &self.field;
        let (rows, cols) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(f.clone(), rows, cols);
        for r in 0..self.rows {
            for s in 0..self.cols {
                let a = self.get(r, s);
                if a == 0 {
                    continue;
                }
                for i in 0..other.rows {
                    for j in 0..other.cols {
                        out.data[(r * other.rows + i) * cols + s * other.cols + j] =
                            f.mul(a, other.get(i, j));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and pivot columns. The pivot in each column is
    /// the first row (at or below the current one) with a nonzero entry;
    /// pivot rows are scaled to a leading 1.
    pub fn rref(&self) -> (GFMatrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let idx = row * m.cols + c;
                m.data[idx] = f.mul(inv, m.data[idx]);
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == row || factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let sub = f.mul(factor, m.get(row, c));
                    let idx = r * m.cols + c;
                    m.data[idx] = f.sub(m.data[idx], sub);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : M v^t = 0}`, one vector per free
    /// column, with a 1 in that free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(r.get(i, free));
                }
                v
            })
            .collect()
    }

    /// Rows of the rref with the zero rows dropped: a basis of the row space.
    pub fn row_basis(&self) -> GFMatrix {
        let (r, pivots) = self.rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        r.select_rows(&keep)
    }
}
