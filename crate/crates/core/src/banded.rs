//! Backward pentadiagonal systems and their row-reversed pentadiagonal form.
//!
//! A backward pentadiagonal matrix has its five bands along the
//! anti-diagonal. Row `i` (1-based) reads
//!
//! ```text
//! ... ã_i  a_i  d_i  b_i  b̃_i ...      with d_i in column n-i+1
//! ```
//!
//! and the matrix is stored as five vectors. Internal storage is 0-based;
//! the mapping to the conventional 1-based symbols is
//!
//! | field     | length | `field[0]` | last element |
//! |-----------|--------|------------|--------------|
//! | `a_tilde` | n-2    | ã₁         | ã_{n-2}      |
//! | `a`       | n-1    | a₁         | a_{n-1}      |
//! | `d`       | n      | d₁         | d_n          |
//! | `b`       | n-1    | b₂         | b_n          |
//! | `b_tilde` | n-2    | b̃₃         | b̃_n          |
//! | `y`       | n      | y₁         | y_n          |
//!
//! Reversing the row order turns the system into an ordinary pentadiagonal
//! one, `A₁ X = Y₁`, whose bands are the same vectors read backwards.

use thiserror::Error;

use crate::oracle::DenseMatrix;
use crate::scalar::Scalar;

/// Smallest supported system size.
pub const MIN_SIZE: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Band {
    ATilde,
    A,
    D,
    B,
    BTilde,
    Y,
}

impl Band {
    pub fn name(self) -> &'static str {
        match self {
            Band::ATilde => "a_tilde",
            Band::A => "a",
            Band::D => "d",
            Band::B => "b",
            Band::BTilde => "b_tilde",
            Band::Y => "y",
        }
    }

    /// Length of this vector in a system of size `n`.
    pub fn len_for(self, n: usize) -> usize {
        match self {
            Band::D | Band::Y => n,
            Band::A | Band::B => n - 1,
            Band::ATilde | Band::BTilde => n - 2,
        }
    }

    /// 1-based index of the first stored element (`b` starts at b₂).
    pub fn first_index(self) -> usize {
        match self {
            Band::B => 2,
            Band::BTilde => 3,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("vector {band} has length {actual}, expected {expected}")]
    LengthMismatch {
        band: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("system size {0} is below the minimum of 5")]
    SizeTooSmall(usize),
}

/// `A X = Y` with `A` backward pentadiagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct BackwardPentaSystem<T> {
    n: usize,
    a_tilde: Vec<T>,
    a: Vec<T>,
    d: Vec<T>,
    b: Vec<T>,
    b_tilde: Vec<T>,
    y: Vec<T>,
}

impl<T: Clone> BackwardPentaSystem<T> {
    /// Validates lengths against `n = d.len()`.
    pub fn new(
        a_tilde: Vec<T>,
        a: Vec<T>,
        d: Vec<T>,
        b: Vec<T>,
        b_tilde: Vec<T>,
        y: Vec<T>,
    ) -> Result<Self, SystemError> {
        let n = d.len();
        if n < MIN_SIZE {
            return Err(SystemError::SizeTooSmall(n));
        }
        for (band, v) in [
            (Band::ATilde, &a_tilde),
            (Band::A, &a),
            (Band::B, &b),
            (Band::BTilde, &b_tilde),
            (Band::Y, &y),
        ] {
            let expected = band.len_for(n);
            if v.len() != expected {
                return Err(SystemError::LengthMismatch {
                    band: band.name(),
                    expected,
                    actual: v.len(),
                });
            }
        }
        Ok(BackwardPentaSystem {
            n,
            a_tilde,
            a,
            d,
            b,
            b_tilde,
            y,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn a_tilde(&self) -> &[T] {
        &self.a_tilde
    }
    pub fn a(&self) -> &[T] {
        &self.a
    }
    pub fn d(&self) -> &[T] {
        &self.d
    }
    pub fn b(&self) -> &[T] {
        &self.b
    }
    pub fn b_tilde(&self) -> &[T] {
        &self.b_tilde
    }
    pub fn y(&self) -> &[T] {
        &self.y
    }

    pub fn band(&self, band: Band) -> &[T] {
        match band {
            Band::ATilde => &self.a_tilde,
            Band::A => &self.a,
            Band::D => &self.d,
            Band::B => &self.b,
            Band::BTilde => &self.b_tilde,
            Band::Y => &self.y,
        }
    }

    /// Returns a copy with the entry at the 1-based 1-based index of `band`
    /// replaced. Panics if the index is out of range.
    pub fn with_entry(&self, band: Band, index: usize, value: T) -> Self {
        let mut out = self.clone();
        let slot = index
            .checked_sub(band.first_index())
            .expect("index below the band start");
        let v = match band {
            Band::ATilde => &mut out.a_tilde,
            Band::A => &mut out.a,
            Band::D => &mut out.d,
            Band::B => &mut out.b,
            Band::BTilde => &mut out.b_tilde,
            Band::Y => &mut out.y,
        };
        v[slot] = value;
        out
    }

    /// Returns a copy with a different right-hand side.
    pub fn with_rhs(&self, y: Vec<T>) -> Result<Self, SystemError> {
        if y.len() != self.n {
            return Err(SystemError::LengthMismatch {
                band: "y",
                expected: self.n,
                actual: y.len(),
            });
        }
        Ok(BackwardPentaSystem { y, ..self.clone() })
    }

    /// Applies `f` to every stored scalar.
    pub fn map<U, F: FnMut(&T) -> U>(&self, mut f: F) -> BackwardPentaSystem<U> {
        let mut g = |v: &[T]| v.iter().map(&mut f).collect::<Vec<U>>();
        BackwardPentaSystem {
            n: self.n,
            a_tilde: g(&self.a_tilde),
            a: g(&self.a),
            d: g(&self.d),
            b: g(&self.b),
            b_tilde: g(&self.b_tilde),
            y: g(&self.y),
        }
    }

    /// The row-reversed system `A₁ X = Y₁`.
    pub fn reverse_rows(&self) -> PentaSystem<T> {
        let rev = |v: &[T]| v.iter().rev().cloned().collect::<Vec<T>>();
        PentaSystem {
            n: self.n,
            sub2: rev(&self.a_tilde),
            sub1: rev(&self.a),
            diag: rev(&self.d),
            sup1: rev(&self.b),
            sup2: rev(&self.b_tilde),
            y1: rev(&self.y),
        }
    }
}

impl<T: Scalar> BackwardPentaSystem<T> {
    /// The discrete Laplacian: `d = -4`, every other band `1`.
    pub fn laplacian(n: usize, y: Vec<T>) -> Result<Self, SystemError> {
        if n < MIN_SIZE {
            return Err(SystemError::SizeTooSmall(n));
        }
        let ones = |k: usize| vec![T::one(); k];
        Self::new(
            ones(n - 2),
            ones(n - 1),
            vec![T::from_i64(-4); n],
            ones(n - 1),
            ones(n - 2),
            y,
        )
    }

    /// Dense `A`, laid out row by row as in the backward pentadiagonal form.
    pub fn densify(&self) -> DenseMatrix<T> {
        let n = self.n;
        let mut m = DenseMatrix::zeros(n);
        for r in 0..n {
            // Row r holds d_{r+1} in column n-1-r.
            let c = n - 1 - r;
            m.set(r, c, self.d[r].clone());
            if r + 1 < n {
                m.set(r, c - 1, self.a[r].clone());
            }
            if r + 2 < n {
                m.set(r, c - 2, self.a_tilde[r].clone());
            }
            if r >= 1 {
                m.set(r, c + 1, self.b[r - 1].clone());
            }
            if r >= 2 {
                m.set(r, c + 2, self.b_tilde[r - 2].clone());
            }
        }
        m
    }

    /// Computes `A v` in O(n).
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n, "vector length must equal n");
        let n = self.n;
        (0..n)
            .map(|r| {
                let c = n - 1 - r;
                let mut acc = self.d[r].clone() * v[c].clone();
                if r + 1 < n {
                    acc = acc + self.a[r].clone() * v[c - 1].clone();
                }
                if r + 2 < n {
                    acc = acc + self.a_tilde[r].clone() * v[c - 2].clone();
                }
                if r >= 1 {
                    acc = acc + self.b[r - 1].clone() * v[c + 1].clone();
                }
                if r >= 2 {
                    acc = acc + self.b_tilde[r - 2].clone() * v[c + 2].clone();
                }
                acc
            })
            .collect()
    }
}

/// The pentadiagonal system `A₁ X = Y₁` obtained by reversing the rows of a
/// [`BackwardPentaSystem`]. Bands are indexed by the row of `A₁` they start
/// in: `sub2[k]` sits at `(k+2, k)`, `sub1[k]` at `(k+1, k)`, `diag[k]` at
/// `(k, k)`, `sup1[k]` at `(k, k+1)` and `sup2[k]` at `(k, k+2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PentaSystem<T> {
    n: usize,
    sub2: Vec<T>,
    sub1: Vec<T>,
    diag: Vec<T>,
    sup1: Vec<T>,
    sup2: Vec<T>,
    y1: Vec<T>,
}

impl<T> PentaSystem<T> {
    pub fn n(&self) -> usize {
        self.n
    }
    /// ã read backwards.
    pub fn sub2(&self) -> &[T] {
        &self.sub2
    }
    /// a read backwards.
    pub fn sub1(&self) -> &[T] {
        &self.sub1
    }
    /// d read backwards.
    pub fn diag(&self) -> &[T] {
        &self.diag
    }
    /// b read backwards.
    pub fn sup1(&self) -> &[T] {
        &self.sup1
    }
    /// b̃ read backwards.
    pub fn sup2(&self) -> &[T] {
        &self.sup2
    }
    /// `Y₁ = (y_n, ..., y₁)`.
    pub fn y1(&self) -> &[T] {
        &self.y1
    }
}

impl<T: Scalar> PentaSystem<T> {
    pub fn densify(&self) -> DenseMatrix<T> {
        let mut m = DenseMatrix::zeros(self.n);
        for k in 0..self.n {
            m.set(k, k, self.diag[k].clone());
        }
        for k in 0..self.n - 1 {
            m.set(k + 1, k, self.sub1[k].clone());
            m.set(k, k + 1, self.sup1[k].clone());
        }
        for k in 0..self.n - 2 {
            m.set(k + 2, k, self.sub2[k].clone());
            m.set(k, k + 2, self.sup2[k].clone());
        }
        m
    }
}

/// Number of nonzero entries in a dense matrix.
pub fn count_nonzeros<T: Scalar>(m: &DenseMatrix<T>) -> usize {
    m.entries().iter().filter(|v| !v.is_zero()).count()
}
