//! Exact rank, kernel, and span computations.
//!
//! Rank runs fraction-free (Bareiss) elimination over integers: rational
//! rows are first scaled by their common denominator, which leaves the row
//! space unchanged, and every division in the elimination is exact. Rank
//! decisions therefore never involve a pivot tolerance.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;
use crate::scalar::Scalar;

/// Clears denominators of one rational row.
fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        lcm = lcm.lcm(v.denom());
    }
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

/// Rank of a list of rational rows via Bareiss elimination.
pub fn row_rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    if m.is_empty() {
        return 0;
    }
    let ncols = m[0].len();
    debug_assert!(m.iter().all(|r| r.len() == ncols));

    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..ncols {
        // Pick the smallest nonzero pivot in this column to keep the
        // intermediate minors small.
        let mut pivot_row = None;
        for r in rank..m.len() {
            if !m[r][col].is_zero() {
                match pivot_row {
                    None => pivot_row = Some(r),
                    Some(p) => {
                        if m[r][col].abs() < m[p][col].abs() {
                            pivot_row = Some(r);
                        }
                    }
                }
            }
        }
        let Some(p) = pivot_row else { continue };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in (rank + 1)..m.len() {
            for c in (col + 1)..ncols {
                // Bareiss step: entries stay minors of the input, so the
                // division by the previous pivot is exact.
                let num = &pivot * &m[r][c] - &m[r][col] * &m[rank][c];
                let (q, rem) = num.div_rem(&prev_pivot);
                debug_assert!(rem.is_zero(), "fraction-free division must be exact");
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Rank of a list of matrices viewed as vectors in `R^(n*n)`.
pub fn span_rank(mats: &[IntMatrix]) -> usize {
    let rows: Vec<Vec<Scalar>> = mats.iter().map(IntMatrix::flatten).collect();
    row_rank(&rows)
}

/// Whether `candidate` lies in the linear span of `span`.
pub fn in_span(span: &[IntMatrix], candidate: &IntMatrix) -> bool {
    let base = span_rank(span);
    let mut rows: Vec<Vec<Scalar>> = span.iter().map(IntMatrix::flatten).collect();
    rows.push(candidate.flatten());
    row_rank(&rows) == base
}

/// Whether the span of `mats` is closed under the matrix commutator:
/// adjoining every pairwise commutator leaves the rank unchanged.
pub fn commutator_closed(mats: &[IntMatrix]) -> bool {
    let base = span_rank(mats);
    let mut rows: Vec<Vec<Scalar>> = mats.iter().map(IntMatrix::flatten).collect();
    for i in 0..mats.len() {
        for j in (i + 1)..mats.len() {
            rows.push(IntMatrix::commutator(&mats[i], &mats[j]).flatten());
        }
    }
    row_rank(&rows) == base
}

/// Dimension of the null space `{ x : M x = 0 }` of the linear map whose
/// columns are `columns` (each column a stacked constraint vector).
pub fn kernel_dim(columns: &[Vec<Scalar>]) -> usize {
    if columns.is_empty() {
        return 0;
    }
    // rank(M) = rank(M^T); eliminate on the transposed rows.
    columns.len() - row_rank(columns)
}

/// Solves `sum_k x_k B_k = target` exactly over the given matrix basis.
/// Returns the coordinates, or `None` when the target is outside the span.
#[allow(clippy::needless_range_loop)] // pivot row and target row alias
pub fn expand_in_basis(basis: &[IntMatrix], target: &IntMatrix) -> Option<Vec<Scalar>> {
    let ncols = basis.len();
    let nrows = target.dim() * target.dim();
    // Augmented system [B | t] in column form, eliminated with plain
    // rational Gauss-Jordan; sizes here are tiny (16x16 at most).
    let mut a: Vec<Vec<Scalar>> = Vec::with_capacity(nrows);
    let flat_basis: Vec<Vec<Scalar>> = basis.iter().map(IntMatrix::flatten).collect();
    let flat_target = target.flatten();
    for r in 0..nrows {
        let mut row: Vec<Scalar> = Vec::with_capacity(ncols + 1);
        for fb in &flat_basis {
            row.push(fb[r].clone());
        }
        row.push(flat_target[r].clone());
        a.push(row);
    }

    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = a[rank][col].recip();
        for c in col..=ncols {
            a[rank][c] = &a[rank][c] * &inv;
        }
        for r in 0..nrows {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=ncols {
                    let t = &a[rank][c] * &f;
                    a[r][c] = &a[r][c] - &t;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    // Inconsistent system: a zero row with nonzero augment.
    for r in rank..nrows {
        if !a[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = a[row][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn empty_list_has_rank_zero() {
        assert_eq!(span_rank(&[]), 0);
        assert_eq!(row_rank(&[]), 0);
    }

    #[test]
    fn duplicates_collapse() {
        let id = IntMatrix::identity(4);
        assert_eq!(span_rank(&[id.clone(), id]), 1);
    }

    #[test]
    fn full_rank_small() {
        let rows = vec![
            vec![int(1), int(2), int(3)],
            vec![int(0), int(1), int(4)],
            vec![int(5), int(6), int(0)],
        ];
        assert_eq!(row_rank(&rows), 3);
    }

    #[test]
    fn rational_rows_are_cleared() {
        let rows = vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(3, 2), int(1)]];
        // Second row is 3x the first.
        assert_eq!(row_rank(&rows), 1);
    }

    #[test]
    fn rank_deficient_with_column_skip() {
        let rows = vec![
            vec![int(0), int(0), int(1), int(2)],
            vec![int(0), int(0), int(2), int(4)],
            vec![int(0), int(1), int(0), int(7)],
        ];
        assert_eq!(row_rank(&rows), 2);
    }

    #[test]
    fn in_span_and_kernel() {
        let a = IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]);
        let b = IntMatrix::from_rows(&[vec![0, 0], vec![0, 1]]);
        let id = IntMatrix::identity(2);
        assert!(in_span(&[a.clone(), b.clone()], &id));
        let off = IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]]);
        assert!(!in_span(&[a.clone(), b.clone()], &off));

        // Kernel of [[1,1],[1,1]] as columns (1,1) and (1,1): dimension 1.
        let cols = vec![vec![int(1), int(1)], vec![int(1), int(1)]];
        assert_eq!(kernel_dim(&cols), 1);
    }

    #[test]
    fn expansion_recovers_coordinates() {
        let a = IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]);
        let b = IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]]);
        let t = (&a.scale(&int(3))) + (&b.scale(&ratio(-1, 2)));
        let x = expand_in_basis(&[a, b], &t).unwrap();
        assert_eq!(x, vec![int(3), ratio(-1, 2)]);

        let c = IntMatrix::from_rows(&[vec![0, 0], vec![1, 0]]);
        assert!(expand_in_basis(&[c], &IntMatrix::identity(2)).is_none());
    }
}
