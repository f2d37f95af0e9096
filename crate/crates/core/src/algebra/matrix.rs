use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
#[derive(Clone)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Builds a matrix from explicit rows; `cols` is needed for the empty case.
    pub fn from_rows(field: F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            data.extend(row);
        }
        Self::new(field, n_rows, cols, data)
    }

    /// Convenience constructor from small integers, reduced into the field.
    pub fn from_i64_rows(field: F, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Self::from_rows(field, cols, converted)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[F::Elem]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero_row(&self, r: usize) -> bool {
        self.row(r).iter().all(|v| self.field.is_zero(v))
    }

    pub fn push_row(&mut self, row: &[F::Elem]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: row.len(),
            });
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Self {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Keeps the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            for &c in cols {
                data.push(self.get(r, c).clone());
            }
        }
        Self {
            field: self.field.clone(),
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// Multiplies column `c` by `scales[c]`.
    pub fn scale_columns(&self, scales: &[F::Elem]) -> Result<Self> {
        if scales.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                actual: scales.len(),
            });
        }
        let mut out = self.clone();
        for r in 0..self.rows {
            for (c, s) in scales.iter().enumerate() {
                let idx = r * self.cols + c;
                out.data[idx] = self.field.mul(&out.data[idx], s);
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &F::Elem) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.data[idx] = self.field.mul(&self.data[idx], s);
        }
    }

    /// row[target] -= factor * row[source]
    fn eliminate(&mut self, target: usize, source: usize, factor: &F::Elem) {
        let cols = self.cols;
        let (t, s) = if target < source {
            let (lo, hi) = self.data.split_at_mut(source * cols);
            (&mut lo[target * cols..(target + 1) * cols], &hi[..cols])
        } else {
            let (lo, hi) = self.data.split_at_mut(target * cols);
            (&mut hi[..cols], &lo[source * cols..(source + 1) * cols])
        };
        for (tv, sv) in t.iter_mut().zip(s) {
            if !self.field.is_zero(sv) {
                *tv = self.field.sub_mul(tv, factor, sv);
            }
        }
    }

    /// Gauss-Jordan elimination that only takes pivots from `pivot_cols`,
    /// scanned in the given order; row operations act on every column.
    /// Pivot rows come first, in pivot order, followed by the leftover rows.
    pub fn rref_on_columns(&self, pivot_cols: &[usize]) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for &c in pivot_cols {
            if r == m.rows {
                break;
            }
            let Some(found) = (r..m.rows).find(|&i| !m.field.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(found, r);
            let inv = m.field.inv(m.get(r, c)).expect("pivot is nonzero");
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.field.is_zero(m.get(i, c)) {
                    let factor = m.get(i, c).clone();
                    m.eliminate(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Reduced row echelon form and the ascending list of pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let all: Vec<usize> = (0..self.cols).collect();
        self.rref_on_columns(&all)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Drops all-zero rows.
    pub fn without_zero_rows(&self) -> Self {
        let keep: Vec<usize> = (0..self.rows).filter(|&r| !self.is_zero_row(r)).collect();
        let mut data = Vec::with_capacity(keep.len() * self.cols);
        for r in &keep {
            data.extend_from_slice(self.row(*r));
        }
        Self {
            field: self.field.clone(),
            rows: keep.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        self.row_iter()
            .map(|row| row.iter().map(|v| self.field.render(v)).collect())
            .collect()
    }
}

impl<F: Field> PartialEq for Matrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> Eq for Matrix<F> {}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.render_rows()).finish()
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .render_rows()
            .into_iter()
            .map(|r| format!("({})", r.join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// True iff `v` is a linear combination of the rows of `basis`.
pub fn in_span<F: Field>(v: &[F::Elem], basis: &Matrix<F>) -> Result<bool> {
    if v.len() != basis.cols() {
        return Err(Error::DimensionMismatch {
            expected: basis.cols(),
            actual: v.len(),
        });
    }
    Ok(Subspace::from_rows(basis).contains(v))
}

/// A subspace of F^n held as the nonzero rows of a reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Self {
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        Self {
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Row space of `m`.
    pub fn from_rows(m: &Matrix<F>) -> Self {
        let (r, pivots) = m.rref();
        let mut basis = r;
        basis.rows = pivots.len();
        basis.data.truncate(pivots.len() * basis.cols);
        Self { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.basis.field();
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if f.is_zero(&w[p]) {
                continue;
            }
            let factor = w[p].clone();
            for (wc, bc) in w.iter_mut().zip(self.basis.row(i)) {
                if !f.is_zero(bc) {
                    *wc = f.sub_mul(wc, &factor, bc);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let f = self.basis.field();
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// True iff the unit vector e_i lies in the subspace.
    pub fn contains_unit(&self, i: usize) -> bool {
        let f = self.basis.field();
        let mut e = vec![f.zero(); self.ambient_dim()];
        e[i] = f.one();
        self.contains(&e)
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.row_iter().all(|r| other.contains(r))
    }

    /// Intersection by the Zassenhaus construction: row-reduce [[u, u], [w, 0]];
    /// the rows whose left half vanishes span the intersection.
    pub fn intersect(&self, other: &Self) -> Self {
        let n = self.ambient_dim();
        assert_eq!(n, other.ambient_dim(), "ambient dimensions differ");
        let f = self.basis.field().clone();
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(f, n);
        }
        if self.dim() == n {
            return other.clone();
        }
        if other.dim() == n {
            return self.clone();
        }
        let mut block = Matrix::zeros(f.clone(), self.dim() + other.dim(), 2 * n);
        for (i, row) in self.basis.row_iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                block.set(i, c, v.clone());
                block.set(i, n + c, v.clone());
            }
        }
        for (i, row) in other.basis.row_iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                block.set(self.dim() + i, c, v.clone());
            }
        }
        let (r, pivots) = block.rref();
        let mut rows = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            if p >= n {
                rows.push(r.row(i)[n..].to_vec());
            }
        }
        let m = Matrix::from_rows(f, n, rows).expect("consistent widths");
        Self::from_rows(&m)
    }
}
