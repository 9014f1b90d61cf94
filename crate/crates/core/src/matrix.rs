//! Dense rectangular matrices over [`RingElem`] entries.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::exactalg::{MPoly, RatFunc, RingElem};

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrix of polynomials, the input type of the determinant engines.
pub type RingMatrix = Matrix<MPoly>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from row vectors; `None` if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Option<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != m) {
            return None;
        }
        Some(Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<S: Clone>(&self, f: impl Fn(&T) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Submatrix with the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Contiguous `size x size` block starting at `(r, c)`.
    pub fn block(&self, r: usize, c: usize, size: usize) -> Self {
        Matrix::from_fn(size, size, |i, j| self[(r + i, c + j)].clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| ((k / cols, k % cols), v))
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        let cols = self.cols.max(1);
        let mut out = Vec::with_capacity(self.rows);
        let mut it = self.data.into_iter();
        for _ in 0..self.rows {
            out.push(it.by_ref().take(cols).collect());
        }
        out
    }
}

impl<T: RingElem> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul(&self, other: &Matrix<T>) -> Option<Matrix<T>> {
        if self.cols != other.rows {
            return None;
        }
        Some(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let (a, b) = (&self[(i, k)], &other[(k, j)]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add_ref(&a.mul_ref(b));
            }
            acc
        }))
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.iter().all(|((i, j), v)| i <= j || v.is_zero())
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.iter().all(|((i, j), v)| i >= j || v.is_zero())
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && self.iter().all(|((i, j), v)| *v == self[(j, i)].neg_ref())
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }
}

impl RingMatrix {
    pub fn to_ratfunc(&self) -> Matrix<RatFunc> {
        self.map(|p| RatFunc::from_poly(p.clone()))
    }

    pub fn subst(&self, bindings: &[(crate::exactalg::Var, MPoly)]) -> RingMatrix {
        self.map(|p| p.subst(bindings).expect("distinct bindings"))
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> RingMatrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| MPoly::int(v)).collect())
                .collect(),
        )
        .expect("rectangular input")
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
