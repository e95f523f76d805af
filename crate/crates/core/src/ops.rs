//! Real matrix translations of the algebra actions.
//!
//! `left_matrix` and `right_matrix` are defined column by column from the
//! structure-constant product: column `j` of the left matrix of `e_i` is the
//! coefficient vector of `e_i . basis_j`. The appendix module rebuilds the
//! octonionic matrices independently from the printed Pauli-block recipes,
//! so the two construction routes cross-check each other.

use std::fmt;

use crate::algebra::{Algebra, AlgebraElement, ComplexNum, OctonionNum, QuaternionNum};
use crate::error::{Error, Result};
use crate::matrix::{embed, IntMatrix};

/// Which multiplication a matrix represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Operator provenance carried alongside each constructed matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    /// The identity operator `1`.
    Identity,
    /// Left multiplication by `e_i`.
    Left(u8),
    /// Right multiplication by `e_j`, written `1|e_j`.
    Right(u8),
    /// The two-sided quaternionic operator `e_i|e_j`.
    Mixed(u8, u8),
    /// Complex conjugation `1*`.
    ConjUnit,
    /// Twisted conjugation `e_1*`.
    ConjTwisted,
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpKind::Identity => write!(f, "1"),
            OpKind::Left(i) => write!(f, "E{}", i),
            OpKind::Right(j) => write!(f, "1|E{}", j),
            OpKind::Mixed(i, j) => write!(f, "E{}|E{}", i, j),
            OpKind::ConjUnit => write!(f, "1*"),
            OpKind::ConjTwisted => write!(f, "E1*"),
        }
    }
}

/// A matrix together with the operator it translates.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledMatrix {
    pub algebra: Algebra,
    pub kind: OpKind,
    pub matrix: IntMatrix,
}

impl LabeledMatrix {
    pub fn label(&self) -> String {
        self.kind.to_string()
    }
}

fn build_action<T, F>(action: F) -> IntMatrix
where
    T: AlgebraElement,
    F: Fn(&T) -> T,
{
    let n = T::ALGEBRA.dim();
    let mut m = IntMatrix::zeros(n);
    for col in 0..n {
        let basis = T::basis(col as u8).expect("basis index in range");
        m.set_column(col, &embed(&action(&basis)));
    }
    m
}

fn left_action<T: AlgebraElement>(i: u8) -> IntMatrix {
    let unit = T::basis(i).expect("imaginary index in range");
    build_action::<T, _>(|x| unit.mul(x))
}

fn right_action<T: AlgebraElement>(i: u8) -> IntMatrix {
    let unit = T::basis(i).expect("imaginary index in range");
    build_action::<T, _>(|x| x.mul(&unit))
}

/// The matrix `E_i` with `embed(e_i . x) = E_i embed(x)`.
pub fn left_matrix(algebra: Algebra, i: u8) -> Result<IntMatrix> {
    algebra.check_index(i)?;
    Ok(match algebra {
        Algebra::Complex => left_action::<ComplexNum>(i),
        Algebra::Quaternion => left_action::<QuaternionNum>(i),
        Algebra::Octonion => left_action::<OctonionNum>(i),
    })
}

/// The matrix `1|E_i` with `embed(x . e_i) = 1|E_i embed(x)`.
pub fn right_matrix(algebra: Algebra, i: u8) -> Result<IntMatrix> {
    algebra.check_index(i)?;
    Ok(match algebra {
        Algebra::Complex => right_action::<ComplexNum>(i),
        Algebra::Quaternion => right_action::<QuaternionNum>(i),
        Algebra::Octonion => right_action::<OctonionNum>(i),
    })
}

/// The conjugation matrix `1*` with `1* Z = Z*`; complex only.
pub fn conj_matrix(algebra: Algebra) -> Result<IntMatrix> {
    if algebra != Algebra::Complex {
        return Err(Error::WrongAlgebra("1*".into(), Algebra::Complex));
    }
    Ok(build_action::<ComplexNum, _>(|z| z.conj()))
}

/// The twisted conjugation `E_1* = E_1 . 1*` with `E_1* Z = E_1 Z*`;
/// complex only, so the only valid index is 1.
pub fn conj_twisted(algebra: Algebra, i: u8) -> Result<IntMatrix> {
    if algebra != Algebra::Complex {
        return Err(Error::WrongAlgebra("E1*".into(), Algebra::Complex));
    }
    algebra.check_index(i)?;
    Ok(left_matrix(algebra, i)?.matmul(&conj_matrix(algebra)?))
}

/// The quaternionic two-sided operator `E_i|E_j = E_i x (1|E_j)`,
/// translating `q -> e_i . q . e_j`.
pub fn mixed_matrix(i: u8, j: u8) -> Result<IntMatrix> {
    Algebra::Quaternion.check_index(i)?;
    Algebra::Quaternion.check_index(j)?;
    let left = left_matrix(Algebra::Quaternion, i)?;
    let right = right_matrix(Algebra::Quaternion, j)?;
    Ok(left.matmul(&right))
}

/// The sixteen quaternionic operators, in the order
/// `1, E1, E2, E3, 1|E1, E1|E1, E2|E1, E3|E1, 1|E2, ..., E3|E3`.
pub fn quaternion_operator_basis() -> Vec<LabeledMatrix> {
    let h = Algebra::Quaternion;
    let mut out = Vec::with_capacity(16);
    out.push(LabeledMatrix {
        algebra: h,
        kind: OpKind::Identity,
        matrix: IntMatrix::identity(4),
    });
    for i in 1..=3 {
        out.push(LabeledMatrix {
            algebra: h,
            kind: OpKind::Left(i),
            matrix: left_matrix(h, i).unwrap(),
        });
    }
    for j in 1..=3 {
        out.push(LabeledMatrix {
            algebra: h,
            kind: OpKind::Right(j),
            matrix: right_matrix(h, j).unwrap(),
        });
        for i in 1..=3 {
            out.push(LabeledMatrix {
                algebra: h,
                kind: OpKind::Mixed(i, j),
                matrix: mixed_matrix(i, j).unwrap(),
            });
        }
    }
    out
}

/// The four complex operators `1, 1*, E1, E1*`.
pub fn complex_operator_basis() -> Vec<LabeledMatrix> {
    let c = Algebra::Complex;
    vec![
        LabeledMatrix {
            algebra: c,
            kind: OpKind::Identity,
            matrix: IntMatrix::identity(2),
        },
        LabeledMatrix {
            algebra: c,
            kind: OpKind::ConjUnit,
            matrix: conj_matrix(c).unwrap(),
        },
        LabeledMatrix {
            algebra: c,
            kind: OpKind::Left(1),
            matrix: left_matrix(c, 1).unwrap(),
        },
        LabeledMatrix {
            algebra: c,
            kind: OpKind::ConjTwisted,
            matrix: conj_twisted(c, 1).unwrap(),
        },
    ]
}

/// All seven octonionic left matrices `E_1..E_7`.
pub fn octonion_left_set() -> Vec<IntMatrix> {
    (1..=7)
        .map(|i| left_matrix(Algebra::Octonion, i).unwrap())
        .collect()
}

/// All seven octonionic right matrices `1|E_1..1|E_7`.
pub fn octonion_right_set() -> Vec<IntMatrix> {
    (1..=7)
        .map(|i| right_matrix(Algebra::Octonion, i).unwrap())
        .collect()
}
