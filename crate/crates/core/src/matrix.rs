//! Dense exact matrices and coefficient column vectors.
//!
//! Entries are [`Scalar`]s. Every operator matrix the library constructs has
//! entries in `{-1, 0, 1}`, but products, anticommutators, and the
//! embedding of rational algebra elements stay exact whatever the values.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::algebra::{Algebra, AlgebraElement};
use crate::error::{Error, Result};
use crate::scalar::{self, int, Scalar};

/// Dense square matrix over exact scalars, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    data: Vec<Scalar>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix {
            n,
            data: vec![Scalar::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = int(1);
        }
        m
    }

    /// Builds from integer rows; panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix rows must be square");
            data.extend(row.iter().map(|&v| int(v)));
        }
        IntMatrix { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.data[row * self.n + col] = value;
    }

    /// Writes `column` into column `col`.
    pub fn set_column(&mut self, col: usize, column: &ColumnVec) {
        assert_eq!(column.dim(), self.n);
        for row in 0..self.n {
            self.data[row * self.n + col] = column.0[row].clone();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        IntMatrix {
            n: self.n,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out.data[c * n + r] = self.data[r * n + c].clone();
            }
        }
        out
    }

    pub fn matmul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch in matrix product");
        let n = self.n;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = &self.data[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = &other.data[k * n + c];
                    if !b.is_zero() {
                        out.data[r * n + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &ColumnVec) -> ColumnVec {
        assert_eq!(
            self.n,
            v.dim(),
            "dimension mismatch in matrix-vector product"
        );
        let n = self.n;
        let mut out = vec![Scalar::zero(); n];
        for (r, out_r) in out.iter_mut().enumerate() {
            for c in 0..n {
                let a = &self.data[r * n + c];
                if !a.is_zero() {
                    *out_r += a * &v.0[c];
                }
            }
        }
        ColumnVec(out)
    }

    pub fn commutator(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        a.matmul(b) - b.matmul(a)
    }

    pub fn anticommutator(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
        a.matmul(b) + b.matmul(a)
    }

    /// The matrix flattened row-major, for span computations.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    /// Exact rank via fraction-free elimination on the rows.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Scalar>> = (0..self.n)
            .map(|r| self.data[r * self.n..(r + 1) * self.n].to_vec())
            .collect();
        crate::rank::row_rank(&rows)
    }

    /// Integer rows, failing on any non-integer entry.
    pub fn to_int_rows(&self) -> Result<Vec<Vec<i64>>> {
        let mut rows = Vec::with_capacity(self.n);
        for r in 0..self.n {
            let mut row = Vec::with_capacity(self.n);
            for c in 0..self.n {
                match scalar::to_i64(self.get(r, c)) {
                    Some(v) => row.push(v),
                    None => return Err(Error::NonIntegerEntry { row: r, col: c }),
                }
            }
            rows.push(row);
        }
        Ok(rows)
    }

    /// First entry where the two matrices differ, if any.
    pub fn first_difference(&self, other: &IntMatrix) -> Option<(usize, usize)> {
        if self.n != other.n {
            return Some((0, 0));
        }
        for r in 0..self.n {
            for c in 0..self.n {
                if self.get(r, c) != other.get(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }
}

impl Add for IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: IntMatrix) -> IntMatrix {
        &self + &rhs
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: IntMatrix) -> IntMatrix {
        &self - &rhs
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n);
        IntMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Neg for IntMatrix {
    type Output = IntMatrix;
    fn neg(self) -> IntMatrix {
        -&self
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.matmul(rhs)
    }
}

impl Mul for IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: IntMatrix) -> IntMatrix {
        self.matmul(&rhs)
    }
}

impl fmt::Display for IntMatrix {
    /// Aligned columns, the plain-text serialization format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(scalar::display).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.n {
            for c in 0..self.n {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[r * self.n + c], width = width)?;
            }
            if r + 1 < self.n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Coefficient column vector of an algebra element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnVec(Vec<Scalar>);

impl ColumnVec {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        ColumnVec(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        ColumnVec(coeffs.iter().map(|&v| int(v)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }
}

/// Coefficient vector of an element, in unit order `(1, e_1, ...)`.
pub fn embed<T: AlgebraElement>(x: &T) -> ColumnVec {
    ColumnVec(x.coeffs().to_vec())
}

/// Inverse of [`embed`]; fails on a length mismatch.
pub fn unembed<T: AlgebraElement>(v: &ColumnVec) -> Result<T> {
    T::try_from_coeffs(v.0.clone())
}

/// Runtime-tagged variant used where the algebra is not statically known.
pub fn check_unembed_dim(v: &ColumnVec, algebra: Algebra) -> Result<()> {
    if v.dim() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            got: v.dim(),
            want: algebra.dim(),
        });
    }
    Ok(())
}
