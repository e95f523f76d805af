//! Machine-readable reports and matrix serialization.
//!
//! Matrices serialize as JSON records with a metadata header, as bare CSV
//! (n rows of n integers), or as aligned plain text. Suite runs serialize
//! as [`RunReport`] JSON; everything is deterministic except the wall-time
//! field.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::clifford::CliffordReport;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::ops::{LabeledMatrix, OpKind};

/// Serialization format for matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MatrixFormat {
    #[default]
    Json,
    Csv,
    Plain,
}

/// One serialized matrix: metadata header plus row-major integer rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixRecord {
    pub algebra: String,
    pub side: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub indices: Option<(u8, u8)>,
    pub dimension: usize,
    pub rows: Vec<Vec<i64>>,
}

impl MatrixRecord {
    pub fn from_labeled(m: &LabeledMatrix) -> Result<MatrixRecord> {
        let (side, index, indices) = match m.kind {
            OpKind::Identity => ("identity", None, None),
            OpKind::Left(i) => ("left", Some(i), None),
            OpKind::Right(j) => ("right", Some(j), None),
            OpKind::Mixed(i, j) => ("mixed", None, Some((i, j))),
            OpKind::ConjUnit => ("conj", None, None),
            OpKind::ConjTwisted => ("conj-twisted", Some(1), None),
        };
        Ok(MatrixRecord {
            algebra: m.algebra.tag().to_string(),
            side: side.to_string(),
            index,
            indices,
            dimension: m.matrix.dim(),
            rows: m.matrix.to_int_rows()?,
        })
    }

    /// Rebuilds the matrix, validating squareness against the header.
    pub fn to_matrix(&self) -> Result<IntMatrix> {
        if self.rows.len() != self.dimension || self.rows.iter().any(|r| r.len() != self.dimension)
        {
            return Err(Error::DimensionMismatch {
                got: self.rows.len(),
                want: self.dimension,
            });
        }
        Ok(IntMatrix::from_rows(&self.rows))
    }

    pub fn algebra(&self) -> Option<Algebra> {
        Algebra::from_tag(&self.algebra)
    }
}

/// Renders one labeled matrix in the requested format.
pub fn render_matrix(m: &LabeledMatrix, format: MatrixFormat) -> Result<String> {
    Ok(match format {
        MatrixFormat::Json => {
            let record = MatrixRecord::from_labeled(m)?;
            serde_json::to_string_pretty(&record).expect("record serializes")
        }
        MatrixFormat::Csv => {
            let rows = m.matrix.to_int_rows()?;
            rows.iter()
                .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
                .collect::<Vec<_>>()
                .join("\n")
        }
        MatrixFormat::Plain => format!("{}\n{}", m.label(), m.matrix),
    })
}

/// Renders a list of labeled matrices, with an optional set name for the
/// JSON wrapper object.
pub fn render_matrices(
    set: Option<&str>,
    mats: &[LabeledMatrix],
    format: MatrixFormat,
) -> Result<String> {
    match format {
        MatrixFormat::Json => {
            let records: Vec<MatrixRecord> = mats
                .iter()
                .map(MatrixRecord::from_labeled)
                .collect::<Result<_>>()?;
            let body = match set {
                Some(name) => serde_json::json!({ "set": name, "matrices": records }),
                None => serde_json::json!({ "matrices": records }),
            };
            Ok(serde_json::to_string_pretty(&body).expect("records serialize"))
        }
        MatrixFormat::Csv | MatrixFormat::Plain => {
            let blocks: Vec<String> = mats
                .iter()
                .map(|m| render_matrix(m, format))
                .collect::<Result<_>>()?;
            Ok(blocks.join("\n\n"))
        }
    }
}

/// Result of one suite run, or the aggregate of all of them.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub suite: String,
    pub checks: u64,
    pub failures: u64,
    /// Clifford verification outcomes produced by the suite, metric
    /// included; empty for suites that verify no gamma set.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub metrics: Vec<CliffordReport>,
    /// Human-readable descriptions of failed checks.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub failure_details: Vec<String>,
    /// Informational values computed along the way (ranks, dimensions).
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub info: Vec<String>,
    /// Per-suite reports when this is the aggregate `all` run.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub suites: Vec<RunReport>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{left_matrix, mixed_matrix};

    fn labeled_left() -> LabeledMatrix {
        LabeledMatrix {
            algebra: Algebra::Octonion,
            kind: OpKind::Left(1),
            matrix: left_matrix(Algebra::Octonion, 1).unwrap(),
        }
    }

    #[test]
    fn json_round_trip() {
        let m = labeled_left();
        let text = render_matrix(&m, MatrixFormat::Json).unwrap();
        let record: MatrixRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(record.algebra, "O");
        assert_eq!(record.side, "left");
        assert_eq!(record.index, Some(1));
        assert_eq!(record.dimension, 8);
        assert_eq!(record.to_matrix().unwrap(), m.matrix);
    }

    #[test]
    fn mixed_record_uses_index_pair() {
        let m = LabeledMatrix {
            algebra: Algebra::Quaternion,
            kind: OpKind::Mixed(1, 2),
            matrix: mixed_matrix(1, 2).unwrap(),
        };
        let record = MatrixRecord::from_labeled(&m).unwrap();
        assert_eq!(record.side, "mixed");
        assert_eq!(record.indices, Some((1, 2)));
        assert_eq!(record.index, None);
        assert_eq!(record.to_matrix().unwrap(), m.matrix);
    }

    #[test]
    fn csv_is_bare_rows() {
        let m = LabeledMatrix {
            algebra: Algebra::Complex,
            kind: OpKind::Left(1),
            matrix: left_matrix(Algebra::Complex, 1).unwrap(),
        };
        assert_eq!(render_matrix(&m, MatrixFormat::Csv).unwrap(), "0,-1\n1,0");
    }

    #[test]
    fn plain_is_labeled_and_aligned() {
        let m = LabeledMatrix {
            algebra: Algebra::Complex,
            kind: OpKind::Left(1),
            matrix: left_matrix(Algebra::Complex, 1).unwrap(),
        };
        assert_eq!(
            render_matrix(&m, MatrixFormat::Plain).unwrap(),
            "E1\n 0 -1\n 1  0"
        );
    }

    #[test]
    fn record_rejects_ragged_rows() {
        let record = MatrixRecord {
            algebra: "O".into(),
            side: "left".into(),
            index: Some(1),
            indices: None,
            dimension: 2,
            rows: vec![vec![1, 0, 0], vec![0, 1, 0]],
        };
        assert!(record.to_matrix().is_err());
    }
}
