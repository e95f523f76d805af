//! Exact translation between the ring-division algebras and real matrices,
//! barred left/right octonionic operators with right-action priority, and
//! machine verification of the Clifford generator sets built from them.
//!
//! Everything is computed over arbitrary-precision rationals; every identity
//! in the verification suites is checked with exact equality.

pub mod algebra;
pub mod appendix;
pub mod clifford;
pub mod error;
pub mod identities;
pub mod matrix;
pub mod ops;
pub mod rank;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod words;

pub use algebra::{
    structure_table, Algebra, AlgebraElement, ComplexNum, OctonionNum, QuaternionNum,
    StructureTable,
};
pub use error::{Error, Result};
pub use matrix::{embed, unembed, ColumnVec, IntMatrix};
pub use rank::span_rank;
pub use scalar::Scalar;
