use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("matrix is singular: no pivot in column {column}")]
    Singular { column: usize },
    #[error("dimension mismatch: matrix is {n}×{n}, vector has {len} entries")]
    DimensionMismatch { n: usize, len: usize },
}

/// Square matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Scalar> DenseMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix must be at least 1×1");
        DenseMatrix {
            n,
            entries: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Panics unless the rows form a square matrix.
    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let n = rows.len();
        assert!(
            n >= 1 && rows.iter().all(|r| r.len() == n),
            "rows must form a square matrix"
        );
        DenseMatrix {
            n,
            entries: rows.concat(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.entries[r * self.n + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.n..(r + 1) * self.n]
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 != r2 {
            for c in 0..self.n {
                self.entries.swap(r1 * self.n + c, r2 * self.n + c);
            }
        }
    }

    /// Same matrix with the row order reversed.
    pub fn reversed_rows(&self) -> Self {
        let rows: Vec<Vec<T>> = (0..self.n).rev().map(|r| self.row(r).to_vec()).collect();
        Self::from_rows(&rows)
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = T::zero();
                for k in 0..n {
                    let a = self.get(r, k);
                    if !a.is_zero() {
                        acc = acc + a.clone() * other.get(k, c).clone();
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }
}

/// Row index of the first nonzero entry in column `col` at or below `from`.
fn find_pivot<T: Scalar>(m: &DenseMatrix<T>, col: usize, from: usize) -> Option<usize> {
    (from..m.n).find(|&r| !m.get(r, col).is_zero())
}

/// Gaussian elimination with row exchanges. Over exact scalars any nonzero
/// pivot is as good as another, so the first one found is taken.
pub fn dense_solve<T: Scalar>(m: &DenseMatrix<T>, rhs: &[T]) -> Result<Vec<T>, OracleError> {
    let n = m.n;
    if rhs.len() != n {
        return Err(OracleError::DimensionMismatch { n, len: rhs.len() });
    }
    let mut a = m.clone();
    let mut b = rhs.to_vec();
    for col in 0..n {
        let p = find_pivot(&a, col, col).ok_or(OracleError::Singular { column: col })?;
        a.swap_rows(col, p);
        b.swap(col, p);
        let pivot = a.get(col, col).clone();
        for r in col + 1..n {
            let f = a.get(r, col).clone();
            if f.is_zero() {
                continue;
            }
            let f = f / pivot.clone();
            for c in col..n {
                let v = a.get(r, c).clone() - f.clone() * a.get(col, c).clone();
                a.set(r, c, v);
            }
            b[r] = b[r].clone() - f * b[col].clone();
        }
    }
    let mut x = vec![T::zero(); n];
    for r in (0..n).rev() {
        let mut acc = b[r].clone();
        for (c, xc) in x.iter().enumerate().skip(r + 1) {
            acc = acc - a.get(r, c).clone() * xc.clone();
        }
        x[r] = acc / a.get(r, r).clone();
    }
    Ok(x)
}

/// Determinant by elimination, tracking the sign of row exchanges.
pub fn dense_det<T: Scalar>(m: &DenseMatrix<T>) -> T {
    let n = m.n;
    let mut a = m.clone();
    let mut det = T::one();
    for col in 0..n {
        let Some(p) = find_pivot(&a, col, col) else {
            return T::zero();
        };
        if p != col {
            a.swap_rows(col, p);
            det = -det;
        }
        let pivot = a.get(col, col).clone();
        for r in col + 1..n {
            let f = a.get(r, col).clone();
            if f.is_zero() {
                continue;
            }
            let f = f / pivot.clone();
            for c in col..n {
                let v = a.get(r, c).clone() - f.clone() * a.get(col, c).clone();
                a.set(r, c, v);
            }
        }
        det = det * pivot;
    }
    det
}
