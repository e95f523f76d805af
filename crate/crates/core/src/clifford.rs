//! Clifford generator sets, their verification, and the Lie bases they
//! generate.
//!
//! A gamma set is a list of operator words. Verification walks every
//! unordered generator pair, forms the anticommutator under the selected
//! semantics, and demands off-diagonal zero and diagonal `+-2` times the
//! identity, exactly. The diagonal signs are the metric.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::ops::{left_matrix, mixed_matrix, right_matrix, LabeledMatrix, OpKind};
use crate::rank::{commutator_closed, in_span, kernel_dim, span_rank};
use crate::scalar::int;
use crate::words::{translate_with, Factor, OperatorWord, RightOrder};

/// Which multiplication side an octonionic generator family uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// How generator-pair anticommutators are evaluated.
///
/// `Priority` concatenates the two words first, so right action keeps its
/// priority across the pair boundary. `Naive` multiplies the separately
/// translated matrices, the associative evaluation the priority rule
/// replaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Semantics {
    #[default]
    Priority,
    Naive,
}

/// An ordered list of generator words with the metric they are claimed,
/// and once verified known, to satisfy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSet {
    pub name: String,
    pub algebra: Algebra,
    pub generators: Vec<OperatorWord>,
    /// Diagonal signs filled in by successful verification.
    pub metric: Option<Vec<i8>>,
}

impl GammaSet {
    pub fn new(name: impl Into<String>, algebra: Algebra, generators: Vec<OperatorWord>) -> Self {
        GammaSet {
            name: name.into(),
            algebra,
            generators,
            metric: None,
        }
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Verifies the Clifford contract and stores the metric on success.
    pub fn verify(&mut self, semantics: Semantics) -> CliffordReport {
        let report = verify_clifford(self, semantics);
        if report.pass {
            self.metric = report.metric.clone();
        }
        report
    }

    /// The sub-set keeping the first `count` generators. A subset of a
    /// Clifford set is again Clifford, with the metric prefix; which
    /// prefix corresponds to which smaller named algebra is left to the
    /// caller.
    pub fn subset(&self, count: usize) -> GammaSet {
        GammaSet {
            name: format!("{}[..{count}]", self.name),
            algebra: self.algebra,
            generators: self.generators[..count].to_vec(),
            metric: self.metric.as_ref().map(|m| m[..count].to_vec()),
        }
    }
}

/// One failing pair, lexicographically smallest, with the offending
/// anticommutator matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFailure {
    pub a: usize,
    pub b: usize,
    pub matrix_diff: Vec<Vec<i64>>,
}

/// Outcome of verifying one gamma set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliffordReport {
    pub set_name: String,
    pub generator_count: usize,
    pub pairs_checked: usize,
    pub metric: Option<Vec<i8>>,
    pub pass: bool,
    pub first_failure: Option<PairFailure>,
}

fn pair_anticommutator(
    gs: &GammaSet,
    a: usize,
    b: usize,
    semantics: Semantics,
) -> Result<IntMatrix> {
    let wa = &gs.generators[a];
    let wb = &gs.generators[b];
    let t = |w: &OperatorWord| translate_with(gs.algebra, w, RightOrder::Reading);
    match semantics {
        Semantics::Priority => {
            let ab = t(&wa.concat(wb))?;
            let ba = t(&wb.concat(wa))?;
            Ok(ab + ba)
        }
        Semantics::Naive => {
            let ma = t(wa)?;
            let mb = t(wb)?;
            Ok(ma.matmul(&mb) + mb.matmul(&ma))
        }
    }
}

/// Checks `{gamma_a, gamma_b} = 2 eta_aa delta_ab` over all pairs `a <= b`.
///
/// Pairs are scanned in lexicographic order, so the reported failure is
/// deterministic: the smallest failing `(a, b)`.
pub fn verify_clifford(gs: &GammaSet, semantics: Semantics) -> CliffordReport {
    let n = gs.len();
    let identity = IntMatrix::identity(gs.algebra.dim());
    let plus_two = identity.scale(&int(2));
    let minus_two = identity.scale(&int(-2));

    let mut metric: Vec<i8> = Vec::with_capacity(n);
    let mut pairs_checked = 0usize;
    let mut first_failure: Option<PairFailure> = None;

    'outer: for a in 0..n {
        for b in a..n {
            let anti = pair_anticommutator(gs, a, b, semantics)
                .expect("generator words validated at construction");
            pairs_checked += 1;
            let ok = if a == b {
                if anti == minus_two {
                    metric.push(-1);
                    true
                } else if anti == plus_two {
                    metric.push(1);
                    true
                } else {
                    false
                }
            } else {
                anti.is_zero()
            };
            if !ok {
                first_failure = Some(PairFailure {
                    a,
                    b,
                    matrix_diff: anti
                        .to_int_rows()
                        .expect("anticommutators of integer matrices are integer"),
                });
                break 'outer;
            }
        }
    }

    let pass = first_failure.is_none();
    CliffordReport {
        set_name: gs.name.clone(),
        generator_count: n,
        pairs_checked,
        metric: if pass { Some(metric) } else { None },
        pass,
        first_failure,
    }
}

/// A generator family with its span rank as the operative dimension.
#[derive(Debug, Clone)]
pub struct LieBasis {
    pub label: String,
    pub matrices: Vec<IntMatrix>,
    pub dimension: usize,
}

impl LieBasis {
    fn checked(
        label: impl Into<String>,
        matrices: Vec<IntMatrix>,
        expected: usize,
    ) -> Result<Self> {
        let label = label.into();
        let dimension = span_rank(&matrices);
        if dimension != expected {
            return Err(Error::RankMismatch {
                label,
                expected,
                got: dimension,
            });
        }
        Ok(LieBasis {
            label,
            matrices,
            dimension,
        })
    }

    /// Whether the span is closed under the matrix commutator.
    pub fn is_commutator_closed(&self) -> bool {
        commutator_closed(&self.matrices)
    }
}

fn word(factors: Vec<Factor>) -> OperatorWord {
    OperatorWord::new(factors)
}

/// The five quaternionic generators `e3, e2, e1|e1, e1|e2, e1|e3`,
/// verified to the metric `diag(-,-,+,+,+)`.
pub fn quaternion_gamma_set() -> GammaSet {
    let generators = vec![
        word(vec![Factor::Left(3)]),
        word(vec![Factor::Left(2)]),
        word(vec![Factor::Left(1), Factor::Right(1)]),
        word(vec![Factor::Left(1), Factor::Right(2)]),
        word(vec![Factor::Left(1), Factor::Right(3)]),
    ];
    let mut gs = GammaSet::new("quaternion-clifford", Algebra::Quaternion, generators);
    let report = gs.verify(Semantics::Priority);
    debug_assert!(report.pass);
    gs
}

/// Matrices of a verified gamma set under priority translation.
fn gamma_matrices(gs: &GammaSet) -> Vec<IntMatrix> {
    gs.generators
        .iter()
        .map(|w| translate_with(gs.algebra, w, RightOrder::Reading).expect("valid generators"))
        .collect()
}

/// The ten pairwise commutators of the quaternionic gamma set.
///
/// Validates the span rank is exactly 10 and that the set contains the ten
/// listed two-sided operators
/// `e1, 1|e1, 1|e2, 1|e3, e2|e1, e3|e1, e2|e2, e3|e2, e2|e3, e3|e3`.
pub fn spin23_basis() -> Result<LieBasis> {
    let gs = quaternion_gamma_set();
    let gammas = gamma_matrices(&gs);
    let mut commutators = Vec::with_capacity(10);
    for a in 0..gammas.len() {
        for b in (a + 1)..gammas.len() {
            commutators.push(IntMatrix::commutator(&gammas[a], &gammas[b]));
        }
    }
    let basis = LieBasis::checked("spin(2,3)", commutators, 10)?;

    let h = Algebra::Quaternion;
    let listed: Vec<(String, IntMatrix)> = vec![
        ("E1".into(), left_matrix(h, 1)?),
        ("1|E1".into(), right_matrix(h, 1)?),
        ("1|E2".into(), right_matrix(h, 2)?),
        ("1|E3".into(), right_matrix(h, 3)?),
        ("E2|E1".into(), mixed_matrix(2, 1)?),
        ("E3|E1".into(), mixed_matrix(3, 1)?),
        ("E2|E2".into(), mixed_matrix(2, 2)?),
        ("E3|E2".into(), mixed_matrix(3, 2)?),
        ("E2|E3".into(), mixed_matrix(2, 3)?),
        ("E3|E3".into(), mixed_matrix(3, 3)?),
    ];
    for (label, m) in &listed {
        if !in_span(&basis.matrices, m) {
            return Err(Error::RankMismatch {
                label: format!("spin(2,3) listed element {label}"),
                expected: basis.dimension,
                got: basis.dimension + 1,
            });
        }
    }
    Ok(basis)
}

/// Search result for a sixth quaternionic gamma.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SixthGammaReport {
    /// Dimension of the subspace of the 16-operator span anticommuting
    /// with all five gammas, from the exact null-space computation.
    pub subspace_dim: usize,
    /// Basis operators that anticommute with all five gammas and square
    /// to plus or minus the identity; empty means no extension exists.
    pub witnesses: Vec<String>,
    /// Operators that anticommute with the other four gammas but fail
    /// against themselves or a square test; gamma_5 itself lands here.
    pub near_misses: Vec<String>,
}

/// Searches the sixteen-operator basis and its full linear span for an
/// operator extending the five-gamma set.
pub fn sixth_gamma_search() -> SixthGammaReport {
    let gs = quaternion_gamma_set();
    let gammas = gamma_matrices(&gs);
    let basis = crate::ops::quaternion_operator_basis();
    let identity = IntMatrix::identity(4);
    let plus = identity.clone();
    let minus = -&identity;

    let mut witnesses = Vec::new();
    let mut near_misses = Vec::new();
    for op in &basis {
        let anti_all = gammas
            .iter()
            .all(|g| IntMatrix::anticommutator(&op.matrix, g).is_zero());
        let square = op.matrix.matmul(&op.matrix);
        let unit_square = square == plus || square == minus;
        if anti_all && unit_square {
            // Either sign works the same: both conditions are sign-blind.
            witnesses.push(op.label());
        } else if !anti_all && unit_square {
            let anti_most = gammas
                .iter()
                .filter(|g| IntMatrix::anticommutator(&op.matrix, g).is_zero())
                .count();
            if anti_most == 4 {
                near_misses.push(op.label());
            }
        }
    }

    // Null space of X -> ({X, gamma_1}, ..., {X, gamma_5}) over the span
    // of the sixteen operators: stack the five linear maps per basis
    // operator into one 80-entry column.
    let columns: Vec<Vec<crate::scalar::Scalar>> = basis
        .iter()
        .map(|op| {
            let mut col = Vec::with_capacity(5 * 16);
            for g in &gammas {
                col.extend(IntMatrix::anticommutator(&op.matrix, g).flatten());
            }
            col
        })
        .collect();
    let subspace_dim = kernel_dim(&columns);

    SixthGammaReport {
        subspace_dim,
        witnesses,
        near_misses,
    }
}

/// The seven-generator set `{e_i}` (or `{1|e_i}`), each squaring to minus
/// the identity.
pub fn cliff70_set(side: Side) -> GammaSet {
    let generators = (1..=7)
        .map(|i| match side {
            Side::Left => word(vec![Factor::Left(i)]),
            Side::Right => word(vec![Factor::Right(i)]),
        })
        .collect();
    let name = match side {
        Side::Left => "cliff70-left",
        Side::Right => "cliff70-right",
    };
    let mut gs = GammaSet::new(name, Algebra::Octonion, generators);
    let report = gs.verify(Semantics::Priority);
    debug_assert!(report.pass);
    gs
}

fn side_matrices(side: Side) -> Vec<IntMatrix> {
    match side {
        Side::Left => crate::ops::octonion_left_set(),
        Side::Right => crate::ops::octonion_right_set(),
    }
}

/// The 21 pairwise commutators of one side's matrices; span rank 21.
pub fn so7_basis(side: Side) -> Result<LieBasis> {
    let mats = side_matrices(side);
    let mut commutators = Vec::with_capacity(21);
    for i in 0..7 {
        for j in (i + 1)..7 {
            commutators.push(IntMatrix::commutator(&mats[i], &mats[j]));
        }
    }
    let label = match side {
        Side::Left => "so(7)_L",
        Side::Right => "so(7)_R",
    };
    LieBasis::checked(label, commutators, 21)
}

/// The so(7) commutators together with the seven generators; span rank 28.
pub fn so8_basis(side: Side) -> Result<LieBasis> {
    let so7 = so7_basis(side)?;
    let mut mats = side_matrices(side);
    mats.extend(so7.matrices);
    let label = match side {
        Side::Left => "so(8)_L",
        Side::Right => "so(8)_R",
    };
    LieBasis::checked(label, mats, 28)
}

/// The thirteen-generator octonionic set: `e_2..e_7` then the barred
/// `e_1(e_j` for `j = 1..7`. Generators are stored positionally. Under
/// priority semantics six square to minus and seven to plus the identity.
pub fn cliff76_set() -> GammaSet {
    let mut generators: Vec<OperatorWord> = (2..=7).map(|i| word(vec![Factor::Left(i)])).collect();
    for j in 1..=7 {
        generators.push(word(vec![Factor::Left(1), Factor::Right(j)]));
    }
    let mut gs = GammaSet::new("cliff76", Algebra::Octonion, generators);
    let report = gs.verify(Semantics::Priority);
    debug_assert!(report.pass);
    gs
}

/// Labeled generator matrices for serialization. Pure-side generators get
/// one matrix; barred generators have no faithful single matrix and are
/// emitted as their left-factor and right-factor pair.
pub fn gamma_set_matrices(gs: &GammaSet) -> Result<Vec<(String, Vec<LabeledMatrix>)>> {
    let mut out = Vec::with_capacity(gs.len());
    for (pos, w) in gs.generators.iter().enumerate() {
        let gamma = format!("gamma_{pos}");
        let factors = w.factors();
        let mats: Vec<LabeledMatrix> = if gs.algebra == Algebra::Octonion && factors.len() > 1 {
            factors
                .iter()
                .map(|f| {
                    Ok(match f {
                        Factor::Left(i) => LabeledMatrix {
                            algebra: gs.algebra,
                            kind: OpKind::Left(*i),
                            matrix: left_matrix(gs.algebra, *i)?,
                        },
                        Factor::Right(j) => LabeledMatrix {
                            algebra: gs.algebra,
                            kind: OpKind::Right(*j),
                            matrix: right_matrix(gs.algebra, *j)?,
                        },
                    })
                })
                .collect::<Result<_>>()?
        } else {
            let kind = match factors {
                [Factor::Left(i)] => OpKind::Left(*i),
                [Factor::Right(j)] => OpKind::Right(*j),
                [Factor::Left(i), Factor::Right(j)] => OpKind::Mixed(*i, *j),
                _ => OpKind::Identity,
            };
            vec![LabeledMatrix {
                algebra: gs.algebra,
                kind,
                matrix: translate_with(gs.algebra, w, RightOrder::Reading)?,
            }]
        };
        out.push((gamma, mats));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::anticommutator;

    #[test]
    fn quaternion_set_metric_signature() {
        let gs = quaternion_gamma_set();
        assert_eq!(gs.metric, Some(vec![-1, -1, 1, 1, 1]));
        let report = verify_clifford(&gs, Semantics::Priority);
        assert!(report.pass);
        assert_eq!(report.pairs_checked, 15);
    }

    #[test]
    fn quaternion_pair_samples() {
        let gs = quaternion_gamma_set();
        let id4 = IntMatrix::identity(4);
        let g = |a: usize, b: usize| pair_anticommutator(&gs, a, b, Semantics::Priority).unwrap();
        assert_eq!(g(0, 0), id4.scale(&int(-2)));
        assert_eq!(g(2, 2), id4.scale(&int(2)));
        assert!(g(0, 3).is_zero());
    }

    #[test]
    fn singleton_left_word_has_minus_metric() {
        let mut gs = GammaSet::new(
            "singleton",
            Algebra::Octonion,
            vec![word(vec![Factor::Left(1)])],
        );
        let report = gs.verify(Semantics::Priority);
        assert!(report.pass);
        assert_eq!(gs.metric, Some(vec![-1]));
    }

    #[test]
    fn spin23_contains_listed_operators() {
        let basis = spin23_basis().unwrap();
        assert_eq!(basis.dimension, 10);
        assert!(basis.is_commutator_closed());
        // [gamma_1, gamma_2] = [E3, E2] = -2 E1.
        let comm = &basis.matrices[0];
        let e1 = left_matrix(Algebra::Quaternion, 1).unwrap();
        assert_eq!(*comm, e1.scale(&int(-2)));
    }

    #[test]
    fn spin23_span_equals_listed_span() {
        // Containment holds both ways, so the commutators and the listed
        // ten operators span the same 10-dimensional space.
        let basis = spin23_basis().unwrap();
        let listed = [
            left_matrix(Algebra::Quaternion, 1).unwrap(),
            right_matrix(Algebra::Quaternion, 1).unwrap(),
            right_matrix(Algebra::Quaternion, 2).unwrap(),
            right_matrix(Algebra::Quaternion, 3).unwrap(),
            mixed_matrix(2, 1).unwrap(),
            mixed_matrix(3, 1).unwrap(),
            mixed_matrix(2, 2).unwrap(),
            mixed_matrix(3, 2).unwrap(),
            mixed_matrix(2, 3).unwrap(),
            mixed_matrix(3, 3).unwrap(),
        ];
        assert_eq!(span_rank(&listed), 10);
        for comm in &basis.matrices {
            assert!(in_span(&listed, comm));
        }
    }

    #[test]
    fn quaternion_semantics_coincide() {
        // Left and right quaternionic matrices commute, so word
        // concatenation and matrix composition give the same
        // anticommutators; both verifications agree.
        let gs = quaternion_gamma_set();
        let priority = verify_clifford(&gs, Semantics::Priority);
        let naive = verify_clifford(&gs, Semantics::Naive);
        assert!(priority.pass && naive.pass);
        assert_eq!(priority.metric, naive.metric);
    }

    #[test]
    fn sixth_gamma_is_impossible() {
        let report = sixth_gamma_search();
        assert!(report.witnesses.is_empty());
        // The anticommutant of the five gammas in the full operator span
        // is trivial: the null-space oracle reports dimension zero.
        assert_eq!(report.subspace_dim, 0);
        // gamma_5 = E1|E3 anticommutes with the other four but not itself.
        assert!(report.near_misses.contains(&"E1|E3".to_string()));
    }

    #[test]
    fn cliff70_metrics() {
        for side in [Side::Left, Side::Right] {
            let gs = cliff70_set(side);
            assert_eq!(gs.metric, Some(vec![-1; 7]));
        }
        // Spot checks from the anticommutation relations.
        let e3 = word(vec![Factor::Left(3)]);
        let id8 = IntMatrix::identity(8);
        assert_eq!(anticommutator(&e3, &e3).unwrap(), id8.scale(&int(-2)));
        let e2 = word(vec![Factor::Left(2)]);
        let e5 = word(vec![Factor::Left(5)]);
        assert!(anticommutator(&e2, &e5).unwrap().is_zero());
        let r4 = word(vec![Factor::Right(4)]);
        let r6 = word(vec![Factor::Right(6)]);
        assert!(anticommutator(&r4, &r6).unwrap().is_zero());
    }

    #[test]
    fn so7_so8_dimensions_and_closure() {
        for side in [Side::Left, Side::Right] {
            let so7 = so7_basis(side).unwrap();
            assert_eq!(so7.dimension, 21);
            assert!(so7.is_commutator_closed());
            let so8 = so8_basis(side).unwrap();
            assert_eq!(so8.dimension, 28);
            assert!(so8.is_commutator_closed());
        }
    }

    #[test]
    fn cliff76_signature() {
        let gs = cliff76_set();
        let mut expected = vec![-1; 6];
        expected.extend(vec![1; 7]);
        assert_eq!(gs.metric, Some(expected));
        let report = verify_clifford(&gs, Semantics::Priority);
        assert_eq!(report.pairs_checked, 91);
    }

    #[test]
    fn cliff76_fails_under_naive_semantics() {
        let gs = cliff76_set();
        let report = verify_clifford(&gs, Semantics::Naive);
        assert!(!report.pass);
        assert!(report.metric.is_none());
        let failure = report.first_failure.unwrap();
        // First failing pair mixes a pure-left generator with a barred
        // one: {e_2, e_1(e_1} is the smallest.
        assert_eq!((failure.a, failure.b), (0, 6));
    }

    #[test]
    fn subsets_verify_with_the_metric_prefix() {
        let gs = cliff76_set();
        // Eleven generators: six minus, five plus.
        let mut sub = gs.subset(11);
        let stored = sub.metric.clone();
        sub.metric = None;
        let report = sub.verify(Semantics::Priority);
        assert!(report.pass);
        assert_eq!(sub.metric, stored);
        let mut expected = vec![-1i8; 6];
        expected.extend(vec![1i8; 5]);
        assert_eq!(sub.metric, Some(expected));
    }

    #[test]
    fn metric_permutes_with_generators() {
        let gs = cliff76_set();
        let metric = gs.metric.clone().unwrap();
        // A fixed non-trivial permutation of the thirteen generators.
        let perm: Vec<usize> = vec![12, 3, 7, 0, 9, 1, 11, 5, 2, 8, 4, 10, 6];
        let generators = perm.iter().map(|&p| gs.generators[p].clone()).collect();
        let mut shuffled = GammaSet::new("cliff76-shuffled", gs.algebra, generators);
        let report = shuffled.verify(Semantics::Priority);
        assert!(report.pass);
        let expected: Vec<i8> = perm.iter().map(|&p| metric[p]).collect();
        assert_eq!(shuffled.metric, Some(expected));
    }

    #[test]
    fn gamma_serialization_splits_barred_generators() {
        let sets = gamma_set_matrices(&cliff76_set()).unwrap();
        assert_eq!(sets.len(), 13);
        assert_eq!(sets[0].1.len(), 1);
        assert_eq!(sets[6].1.len(), 2);
        assert_eq!(sets[6].1[0].label(), "E1");
        assert_eq!(sets[6].1[1].label(), "1|E1");
        // The quaternionic mixed generators stay single faithful matrices.
        let hsets = gamma_set_matrices(&quaternion_gamma_set()).unwrap();
        assert_eq!(hsets[2].1.len(), 1);
        assert_eq!(hsets[2].1[0].label(), "E1|E1");
    }
}
