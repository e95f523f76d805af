//! The printed 8x8 block recipes for the octonionic operator matrices.
//!
//! Four placement patterns arrange four 2x2 blocks inside an 8x8 matrix,
//! and each of the fourteen operators `e_1..e_7`, `1|e_1..1|e_7` is a
//! specific choice of Pauli-derived blocks in one pattern. These tables are
//! golden data: they are built here verbatim and compared entry-for-entry
//! against the structure-constant construction in `ops`.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::ops::{LabeledMatrix, OpKind};

/// Real 2x2 building blocks. `sigma2` itself is imaginary, so only
/// `i sigma2` appears.
pub mod pauli {
    use crate::matrix::IntMatrix;

    pub fn one() -> IntMatrix {
        IntMatrix::identity(2)
    }

    pub fn sigma1() -> IntMatrix {
        IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]])
    }

    /// `i sigma2 = [[0, 1], [-1, 0]]`.
    pub fn i_sigma2() -> IntMatrix {
        IntMatrix::from_rows(&[vec![0, 1], vec![-1, 0]])
    }

    pub fn sigma3() -> IntMatrix {
        IntMatrix::from_rows(&[vec![1, 0], vec![0, -1]])
    }
}

/// Block-column of block-row `r` in each placement pattern.
///
/// Pattern 1 is block-diagonal; pattern 4 is block-anti-diagonal; 2 and 3
/// swap within the upper and lower halves.
fn pattern_column(pattern: u8, row: usize) -> Result<usize> {
    let cols: [usize; 4] = match pattern {
        1 => [0, 1, 2, 3],
        2 => [1, 0, 3, 2],
        3 => [2, 3, 0, 1],
        4 => [3, 2, 1, 0],
        _ => return Err(Error::InvalidPattern(pattern)),
    };
    Ok(cols[row])
}

/// Places the 2x2 blocks `a, b, c, d` into the 8x8 layout of `pattern`.
pub fn appendix_block(pattern: u8, blocks: [&IntMatrix; 4]) -> Result<IntMatrix> {
    for b in &blocks {
        assert_eq!(b.dim(), 2, "appendix blocks are 2x2");
    }
    let mut m = IntMatrix::zeros(8);
    for (row, block) in blocks.iter().enumerate() {
        let col = pattern_column(pattern, row)?;
        for r in 0..2 {
            for c in 0..2 {
                m.set(2 * row + r, 2 * col + c, block.get(r, c).clone());
            }
        }
    }
    Ok(m)
}

/// A 2x2 block named the way the table prints it.
#[derive(Debug, Clone, Copy)]
enum Block {
    One,
    NegOne,
    Sigma1,
    NegSigma1,
    ISigma2,
    NegISigma2,
    Sigma3,
    NegSigma3,
}

impl Block {
    fn matrix(self) -> IntMatrix {
        match self {
            Block::One => pauli::one(),
            Block::NegOne => -pauli::one(),
            Block::Sigma1 => pauli::sigma1(),
            Block::NegSigma1 => -pauli::sigma1(),
            Block::ISigma2 => pauli::i_sigma2(),
            Block::NegISigma2 => -pauli::i_sigma2(),
            Block::Sigma3 => pauli::sigma3(),
            Block::NegSigma3 => -pauli::sigma3(),
        }
    }
}

use Block::{ISigma2, NegISigma2, NegOne, NegSigma1, NegSigma3, One, Sigma1, Sigma3};

/// One printed table row: operator, pattern, and its four blocks.
struct Recipe {
    kind: OpKind,
    pattern: u8,
    blocks: [Block; 4],
}

fn recipes() -> [Recipe; 14] {
    // Verbatim from the printed table, left column then right column.
    [
        Recipe {
            kind: OpKind::Left(1),
            pattern: 1,
            blocks: [NegISigma2, NegISigma2, NegISigma2, ISigma2],
        },
        Recipe {
            kind: OpKind::Right(1),
            pattern: 1,
            blocks: [NegISigma2, ISigma2, ISigma2, NegISigma2],
        },
        Recipe {
            kind: OpKind::Left(2),
            pattern: 2,
            blocks: [NegSigma3, Sigma3, NegOne, One],
        },
        Recipe {
            kind: OpKind::Right(2),
            pattern: 2,
            blocks: [NegOne, One, One, NegOne],
        },
        Recipe {
            kind: OpKind::Left(3),
            pattern: 2,
            blocks: [NegSigma1, Sigma1, NegISigma2, NegISigma2],
        },
        Recipe {
            kind: OpKind::Right(3),
            pattern: 2,
            blocks: [NegISigma2, NegISigma2, ISigma2, ISigma2],
        },
        Recipe {
            kind: OpKind::Left(4),
            pattern: 3,
            blocks: [NegSigma3, One, Sigma3, NegOne],
        },
        Recipe {
            kind: OpKind::Right(4),
            pattern: 3,
            blocks: [NegOne, NegOne, One, One],
        },
        Recipe {
            kind: OpKind::Left(5),
            pattern: 3,
            blocks: [NegSigma1, ISigma2, Sigma1, ISigma2],
        },
        Recipe {
            kind: OpKind::Right(5),
            pattern: 3,
            blocks: [NegISigma2, NegISigma2, NegISigma2, NegISigma2],
        },
        Recipe {
            kind: OpKind::Left(6),
            pattern: 4,
            blocks: [NegOne, NegSigma3, Sigma3, One],
        },
        Recipe {
            kind: OpKind::Right(6),
            pattern: 4,
            blocks: [NegSigma3, Sigma3, NegSigma3, Sigma3],
        },
        Recipe {
            kind: OpKind::Left(7),
            pattern: 4,
            blocks: [NegISigma2, NegSigma1, Sigma1, NegISigma2],
        },
        Recipe {
            kind: OpKind::Right(7),
            pattern: 4,
            blocks: [NegSigma1, Sigma1, NegSigma1, Sigma1],
        },
    ]
}

/// All fourteen table matrices, built purely from the printed recipes.
pub fn appendix_tables() -> Vec<LabeledMatrix> {
    recipes()
        .into_iter()
        .map(|r| {
            let blocks = r.blocks.map(Block::matrix);
            let matrix =
                appendix_block(r.pattern, [&blocks[0], &blocks[1], &blocks[2], &blocks[3]])
                    .expect("recipe patterns are valid");
            LabeledMatrix {
                algebra: Algebra::Octonion,
                kind: r.kind,
                matrix,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{left_matrix, right_matrix};

    #[test]
    fn pattern_one_is_block_diagonal() {
        use num_traits::Zero;
        let a = pauli::sigma1();
        let m = appendix_block(1, [&a, &a, &a, &a]).unwrap();
        for r in 0..8 {
            for c in 0..8 {
                if r / 2 == c / 2 {
                    assert_eq!(m.get(r, c), a.get(r % 2, c % 2));
                } else {
                    assert!(m.get(r, c).is_zero());
                }
            }
        }
    }

    #[test]
    fn pattern_four_is_anti_diagonal() {
        use num_traits::Zero;
        let a = pauli::one();
        let b = pauli::sigma3();
        let c = pauli::sigma1();
        let d = pauli::i_sigma2();
        let m = appendix_block(4, [&a, &b, &c, &d]).unwrap();
        // a sits top-right, d bottom-left.
        assert_eq!(m.get(0, 6), a.get(0, 0));
        assert_eq!(m.get(1, 7), a.get(1, 1));
        assert_eq!(m.get(6, 1), d.get(0, 1));
        assert_eq!(m.get(7, 0), d.get(1, 0));
        assert!(m.get(0, 0).is_zero());
    }

    #[test]
    fn zero_blocks_give_zero_matrix() {
        let z = IntMatrix::zeros(2);
        let m = appendix_block(2, [&z, &z, &z, &z]).unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn invalid_pattern_rejected() {
        let a = pauli::one();
        assert_eq!(
            appendix_block(0, [&a, &a, &a, &a]),
            Err(Error::InvalidPattern(0))
        );
        assert_eq!(
            appendix_block(5, [&a, &a, &a, &a]),
            Err(Error::InvalidPattern(5))
        );
    }

    #[test]
    fn tables_match_structure_constant_construction() {
        for entry in appendix_tables() {
            let generated = match entry.kind {
                OpKind::Left(i) => left_matrix(Algebra::Octonion, i).unwrap(),
                OpKind::Right(j) => right_matrix(Algebra::Octonion, j).unwrap(),
                other => panic!("unexpected table operator {other}"),
            };
            if let Some((r, c)) = entry.matrix.first_difference(&generated) {
                panic!(
                    "table {} differs from generated matrix at ({}, {}): table {} vs generated {}",
                    entry.label(),
                    r,
                    c,
                    entry.matrix.get(r, c),
                    generated.get(r, c),
                );
            }
        }
    }

    #[test]
    fn sample_table_entries() {
        let tables = appendix_tables();
        let e1 = &tables[0];
        assert_eq!(e1.kind, OpKind::Left(1));
        let expected = appendix_block(
            1,
            [
                &-pauli::i_sigma2(),
                &-pauli::i_sigma2(),
                &-pauli::i_sigma2(),
                &pauli::i_sigma2(),
            ],
        )
        .unwrap();
        assert_eq!(e1.matrix, expected);

        let r6 = tables.iter().find(|t| t.kind == OpKind::Right(6)).unwrap();
        let expected = appendix_block(
            4,
            [
                &-pauli::sigma3(),
                &pauli::sigma3(),
                &-pauli::sigma3(),
                &pauli::sigma3(),
            ],
        )
        .unwrap();
        assert_eq!(r6.matrix, expected);
    }
}
