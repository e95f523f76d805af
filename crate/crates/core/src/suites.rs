//! Named verification suites behind a common trait, registered by name.
//!
//! Each suite packages one family of checks from the construction: the
//! caller selects a suite at runtime (`verify --suite <name>`), every check
//! is an exact comparison, and the outcome is a [`RunReport`]. The `all`
//! pseudo-suite runs the whole registry in order.

use std::time::Instant;

use crate::algebra::{Algebra, AlgebraElement, ComplexNum};
use crate::appendix::appendix_tables;
use crate::clifford::{
    cliff70_set, cliff76_set, quaternion_gamma_set, sixth_gamma_search, so7_basis, so8_basis,
    spin23_basis, verify_clifford, CliffordReport, Semantics, Side,
};
use crate::identities::{
    octonion_commutator_defect, octonion_right_commutator_defect, verify_quaternion_product_rules,
};
use crate::matrix::{embed, IntMatrix};
use crate::ops::{
    complex_operator_basis, conj_matrix, conj_twisted, left_matrix, octonion_left_set,
    octonion_right_set, quaternion_operator_basis, right_matrix, OpKind,
};
use crate::rank::span_rank;
use crate::report::RunReport;
use crate::scalar::int;
use crate::words::{
    anticommutator, degrees_of_freedom_audit, naive_anticommutator, translate, Factor, OperatorWord,
};

/// Options a suite run may honour.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    pub semantics: Semantics,
}

/// Accumulates exact checks into a report.
#[derive(Debug, Default)]
pub struct Checker {
    checks: u64,
    failures: u64,
    failure_details: Vec<String>,
    info: Vec<String>,
    metrics: Vec<CliffordReport>,
}

impl Checker {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            self.failure_details.push(what());
        }
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.info.push(text.into());
    }

    /// Folds a Clifford verification in: every pair counts as one check.
    pub fn clifford(&mut self, report: CliffordReport) {
        self.checks += report.pairs_checked as u64;
        if !report.pass {
            self.failures += 1;
            if let Some(f) = &report.first_failure {
                self.failure_details.push(format!(
                    "{}: pair ({}, {}) violates the Clifford contract",
                    report.set_name, f.a, f.b
                ));
            }
        }
        self.metrics.push(report);
    }

    fn into_report(self, suite: &str, started: Instant) -> RunReport {
        RunReport {
            suite: suite.to_string(),
            checks: self.checks,
            failures: self.failures,
            metrics: self.metrics,
            failure_details: self.failure_details,
            info: self.info,
            suites: Vec::new(),
            wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }
}

/// One runnable verification suite.
pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn run(&self, opts: &SuiteOptions, out: &mut Checker);
}

struct ComplexBasis;

impl Suite for ComplexBasis {
    fn name(&self) -> &'static str {
        "complex-basis"
    }

    fn description(&self) -> &'static str {
        "complex translation matrices and the rank-4 operator basis"
    }

    fn run(&self, _opts: &SuiteOptions, out: &mut Checker) {
        let c = Algebra::Complex;
        let e1 = left_matrix(c, 1).unwrap();
        out.check(
            e1 == IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]]),
            || "E1 differs from its displayed matrix".into(),
        );
        out.check(right_matrix(c, 1).unwrap() == e1, || {
            "right action differs from left on a commutative algebra".into()
        });
        let unit = conj_matrix(c).unwrap();
        out.check(
            unit == IntMatrix::from_rows(&[vec![1, 0], vec![0, -1]]),
            || "1* differs from diag(1,-1)".into(),
        );
        let twisted = conj_twisted(c, 1).unwrap();
        out.check(
            twisted == IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]),
            || "E1* differs from its displayed matrix".into(),
        );

        let z = ComplexNum::from_ints([2, 5]);
        out.check(unit.matvec(&embed(&z)) == embed(&z.conj()), || {
            "1* Z != Z*".into()
        });
        let e1_unit = ComplexNum::basis(1).unwrap();
        out.check(
            twisted.matvec(&embed(&z)) == embed(&e1_unit.mul(&z.conj())),
            || "E1* Z != embed(e1 . z*)".into(),
        );

        let basis: Vec<IntMatrix> = complex_operator_basis()
            .into_iter()
            .map(|m| m.matrix)
            .collect();
        let rank = span_rank(&basis);
        out.note(format!("span rank of {{1, 1*, E1, E1*}}: {rank}"));
        out.check(rank == 4, || format!("complex basis rank {rank} != 4"));
    }
}

struct QuaternionRules;

impl Suite for QuaternionRules {
    fn name(&self) -> &'static str {
        "quaternion-rules"
    }

    fn description(&self) -> &'static str {
        "quaternionic operator product rules and the 16-operator basis"
    }

    fn run(&self, _opts: &SuiteOptions, out: &mut Checker) {
        let report = verify_quaternion_product_rules();
        out.checks += report.checks;
        out.failures += report.failures;
        out.failure_details.extend(report.failure_details.clone());
        let delta_rows = report.rows.iter().filter(|r| !r.printed_exact).count();
        out.note(format!(
            "{} product combinations expanded; {} carry delta terms beyond the printed form",
            report.rows.len(),
            delta_rows
        ));

        let basis: Vec<IntMatrix> = quaternion_operator_basis()
            .into_iter()
            .map(|m| m.matrix)
            .collect();
        let rank = span_rank(&basis);
        out.note(format!("span rank of the 16 operators: {rank}"));
        out.check(rank == 16, || format!("operator basis rank {rank} != 16"));
    }
}

struct QuaternionClifford;

impl Suite for QuaternionClifford {
    fn name(&self) -> &'static str {
        "quaternion-clifford"
    }

    fn description(&self) -> &'static str {
        "the five-generator set and its diag(-,-,+,+,+) metric"
    }

    fn run(&self, _opts: &SuiteOptions, out: &mut Checker) {
        let gs = quaternion_gamma_set();
        let report = verify_clifford(&gs, Semantics::Priority);
        let metric = report.metric.clone();
        out.clifford(report);
        out.check(metric == Some(vec![-1, -1, 1, 1, 1]), || {
            format!("metric {metric:?} != diag(-,-,+,+,+)")
        });

        let spin = spin23_basis();
        match spin {
            Ok(basis) => {
                out.note(format!(
                    "spin(2,3) commutator span rank: {}",
                    basis.dimension
                ));
                out.check(basis.dimension == 10, || {
                    format!("spin(2,3) dimension {} != 10", basis.dimension)
                });
                out.check(basis.is_commutator_closed(), || {
                    "spin(2,3) span not closed under commutation".into()
                });
            }
            Err(e) => out.check(false, || format!("spin(2,3) construction failed: {e}")),
        }
    }
}

struct SixthGamma;

impl Suite for SixthGamma {
    fn name(&self) -> &'static str {
        "sixth-gamma"
    }

    fn description(&self) -> &'static str {
        "impossibility of a sixth gamma over the 16-operator span"
    }

    fn run(&self, _opts: &SuiteOptions, out: &mut Checker) {
        let report = sixth_gamma_search();
        out.note(format!(
            "anticommutant subspace dimension: {}",
            report.subspace_dim
        ));
        out.note(format!("near misses: {:?}", report.near_misses));
        out.check(report.witnesses.is_empty(), || {
            format!("basis operators extend the set: {:?}", report.witnesses)
        });
        // Reference value from the exact null-space oracle: the
        // anticommutant of the five gammas is trivial.
        out.check(report.subspace_dim == 0, || {
            format!("anticommutant dimension {} != 0", report.subspace_dim)
        });
        out.check(report.near_misses.contains(&"E1|E3".to_string()), || {
            "gamma_5 = E1|E3 should anticommute with the other four only".into()
        });
    }
}

struct OctonionAnticomm;

impl Suite for OctonionAnticomm {
    fn name(&self) -> &'static str {
        "octonion-anticomm"
    }

    fn description(&self) -> &'static str {
        "anticommutation relations of the 14 octonionic actions"
    }

    fn run(&self, _opts: &SuiteOptions, out: &mut Checker) {
        let lefts = octonion_left_set();
        let rights = octonion_right_set();
        let minus_two = IntMatrix::identity(8).scale(&int(-2));
        for (family, mats) in [("E", &lefts), ("1|E", &rights)] {
            for i in 0..7 {
                for j in 0..7 {
                    let anti = IntMatrix::anticommutator(&mats[i], &mats[j]);
                    let ok = if i == j {
                        anti == minus_two
                    } else {
                        anti.is_zero()
                    };
                    out.check(ok, || {
                        format!("{{{family}{}, {family}{}}} != -2 delta", i + 1, j + 1)
                    });
                }
            }
        }

        // The same relations as verified gamma sets: both sides represent
        // seven generators squaring to minus the identity.
        for side in [Side::Left, Side::Right] {
            let gs = cliff70_set(side);
            let report = verify_clifford(&gs, Semantics::Priority);
            let metric = report.metric.clone();
            out.clifford(report);
            out.check(metric == Some(vec![-1; 7]), || {
                format!("cliff70 metric {metric:?} != (-x7)")
            });
        }

        // Weak commutation: equality on the diagonal only.
        for i in 0..7 {
            out.check(
                IntMatrix::commutator(&lefts[i], &rights[i]).is_zero(),
                || format!("[E{}, 1|E{}] != 0", i + 1, i + 1),
            );
        }
        let violating = (0..7)
            .flat_map(|i| (0..7).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && !IntMatrix::commutator(&lefts[i], &rights[j]).is_zero());
        if let Some((i, j)) = violating {
            out.note(format!(
                "non-commuting mixed pair: [E{}, 1|E{}]",
                i + 1,
                j + 1
            ));
        }
        out.check(violating.is_some(), || {
            "every mixed pair commutes; octonionic defect missing".into()
        });

        // The identity the whole barred construction rests on:
        // E_i E_j 1|E_k + E_j E_i 1|E_k = 0 for i != j, every k.
        for i in 0..7 {
            for j in 0..7 {
                if i == j {
                    continue;
                }
                let sym = lefts[i].matmul(&lefts[j]) + lefts[j].matmul(&lefts[i]);
                for (k, right) in rights.iter().enumerate() {
                    out.check(sym.matmul(right).is_zero(), || {
                        format!(
                            "E{} E{} 1|E{} + E{} E{} 1|E{} != 0",
                            i + 1,
                            j + 1,
                            k + 1,
                            j + 1,
                            i + 1,
                            k + 1
                        )
                    });
                }
            }
        }
    }
}

struct OctonionDefect;

impl Suite for OctonionDefect {
    fn name(&self) -> &'static str {
        "octonion-defect"
    }

    fn description(&self) -> &'static str {
        "commutator defect identities for left and right actions"
    }

    fn run(&self, _opts: &SuiteOptions, out: &mut Checker) {
        for i in 1..=7u8 {
            for j in 1..=7u8 {
                out.check(octonion_commutator_defect(i, j).unwrap().is_zero(), || {
                    format!("left defect ({i},{j}) nonzero")
                });
                out.check(
                    octonion_right_commutator_defect(i, j).unwrap().is_zero(),
                    || format!("right defect ({i},{j}) nonzero"),
                );
            }
        }
    }
}

struct So7So8;

impl Suite for So7So8 {
    fn name(&self) -> &'static str {
        "so7so8"
    }

    fn description(&self) -> &'static str {
        "span ranks and commutator closure of so(7) and so(8)"
    }

    fn run(&self, _opts: &SuiteOptions, out: &mut Checker) {
        for side in [Side::Left, Side::Right] {
            match so7_basis(side) {
                Ok(basis) => {
                    out.note(format!("{}: rank {}", basis.label, basis.dimension));
                    out.check(basis.dimension == 21, || {
                        format!("{} rank {} != 21", basis.label, basis.dimension)
                    });
                    out.check(basis.is_commutator_closed(), || {
                        format!("{} not closed under commutation", basis.label)
                    });
                }
                Err(e) => out.check(false, || format!("so(7) failed: {e}")),
            }
            match so8_basis(side) {
                Ok(basis) => {
                    out.note(format!("{}: rank {}", basis.label, basis.dimension));
                    out.check(basis.dimension == 28, || {
                        format!("{} rank {} != 28", basis.label, basis.dimension)
                    });
                    out.check(basis.is_commutator_closed(), || {
                        format!("{} not closed under commutation", basis.label)
                    });
                }
                Err(e) => out.check(false, || format!("so(8) failed: {e}")),
            }
        }

        // The isomorphism with the octonionic commutators is genuinely
        // lost: [E1, E2] != 2 E3.
        let o = Algebra::Octonion;
        let comm = IntMatrix::commutator(&left_matrix(o, 1).unwrap(), &left_matrix(o, 2).unwrap());
        out.check(comm != left_matrix(o, 3).unwrap().scale(&int(2)), || {
            "[E1, E2] equals 2 E3; defect term missing".into()
        });
    }
}

struct Cliff76;

impl Suite for Cliff76 {
    fn name(&self) -> &'static str {
        "cliff76"
    }

    fn description(&self) -> &'static str {
        "the thirteen-generator set under the selected semantics"
    }

    fn run(&self, opts: &SuiteOptions, out: &mut Checker) {
        let gs = cliff76_set();
        let report = verify_clifford(&gs, opts.semantics);
        let metric = report.metric.clone();
        out.clifford(report);

        if opts.semantics == Semantics::Naive {
            // Under naive semantics the verification itself is the test:
            // it fails, reproducing the associative evaluation's breakdown.
            return;
        }

        let mut expected = vec![-1i8; 6];
        expected.extend(vec![1i8; 7]);
        out.check(metric.as_deref() == Some(&expected[..]), || {
            format!("signature {metric:?} != (-x6, +x7)")
        });

        // The naive evaluation must fail, and at the first mixed pair.
        let naive = verify_clifford(&gs, Semantics::Naive);
        out.check(
            !naive.pass
                && naive
                    .first_failure
                    .as_ref()
                    .map(|f| (f.a, f.b) == (0, 6))
                    .unwrap_or(false),
            || "naive semantics unexpectedly verifies the set".into(),
        );

        // Two-sided products have two inequivalent translations.
        let w = |f: Vec<Factor>| OperatorWord::new(f);
        let forward =
            translate(&w(vec![Factor::Left(2), Factor::Left(1), Factor::Right(4)])).unwrap();
        let e2e1r4 = left_matrix(Algebra::Octonion, 2)
            .unwrap()
            .matmul(&left_matrix(Algebra::Octonion, 1).unwrap())
            .matmul(&right_matrix(Algebra::Octonion, 4).unwrap());
        out.check(forward == e2e1r4, || {
            "translate(L2.L1.R4) != E2 x E1 x 1|E4".into()
        });
        let reverse =
            translate(&w(vec![Factor::Left(1), Factor::Right(4), Factor::Left(2)])).unwrap();
        let e1e2r4 = left_matrix(Algebra::Octonion, 1)
            .unwrap()
            .matmul(&left_matrix(Algebra::Octonion, 2).unwrap())
            .matmul(&right_matrix(Algebra::Octonion, 4).unwrap());
        out.check(reverse == e1e2r4, || {
            "translate(L1.R4.L2) != E1 x E2 x 1|E4".into()
        });
        out.check(forward != reverse, || {
            "the two orderings translate identically".into()
        });

        // { e1(e2, e4 } = 0 under priority, nonzero naively.
        let barred = w(vec![Factor::Left(1), Factor::Right(2)]);
        let plain = w(vec![Factor::Left(4)]);
        out.check(anticommutator(&barred, &plain).unwrap().is_zero(), || {
            "{ e1(e2, e4 } != 0 under priority semantics".into()
        });
        let nml = w(vec![Factor::Left(1), Factor::Right(3)]);
        let e2w = w(vec![Factor::Left(2)]);
        out.check(!naive_anticommutator(&e2w, &nml).unwrap().is_zero(), || {
            "the associative anticommutator unexpectedly vanishes".into()
        });

        // Degrees-of-freedom audit behind the 128-parameter count.
        let audit = degrees_of_freedom_audit();
        out.note(format!(
            "left sector rank {}, right sector rank {}, two-sided set rank {}",
            audit.left_sector_rank, audit.right_sector_rank, audit.two_sided_rank
        ));
        out.check(audit.left_sector_rank == 64, || {
            format!("left sector rank {} != 64", audit.left_sector_rank)
        });
        out.check(audit.right_sector_rank == 64, || {
            format!("right sector rank {} != 64", audit.right_sector_rank)
        });
        out.check(audit.two_sided_rank == 63, || {
            format!(
                "two-sided rank {} != 63 (frozen oracle value)",
                audit.two_sided_rank
            )
        });
    }
}

struct Appendix;

impl Suite for Appendix {
    fn name(&self) -> &'static str {
        "appendix"
    }

    fn description(&self) -> &'static str {
        "golden comparison of the 14 printed block matrices"
    }

    fn run(&self, _opts: &SuiteOptions, out: &mut Checker) {
        for entry in appendix_tables() {
            let generated = match entry.kind {
                OpKind::Left(i) => left_matrix(Algebra::Octonion, i).unwrap(),
                OpKind::Right(j) => right_matrix(Algebra::Octonion, j).unwrap(),
                _ => unreachable!("table holds left and right actions only"),
            };
            let diff = entry.matrix.first_difference(&generated);
            out.check(diff.is_none(), || {
                let (r, c) = diff.unwrap();
                format!(
                    "table {} differs at ({r},{c}): printed {} vs generated {}",
                    entry.label(),
                    entry.matrix.get(r, c),
                    generated.get(r, c)
                )
            });
        }
    }
}

/// The registry of named suites, in presentation order.
pub struct SuiteRegistry {
    suites: Vec<Box<dyn Suite>>,
}

impl SuiteRegistry {
    pub fn builtin() -> Self {
        SuiteRegistry {
            suites: vec![
                Box::new(ComplexBasis),
                Box::new(QuaternionRules),
                Box::new(QuaternionClifford),
                Box::new(SixthGamma),
                Box::new(OctonionAnticomm),
                Box::new(OctonionDefect),
                Box::new(So7So8),
                Box::new(Cliff76),
                Box::new(Appendix),
            ],
        }
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.iter().map(|s| s.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn Suite> {
        self.suites
            .iter()
            .find(|s| s.name() == name)
            .map(Box::as_ref)
    }

    /// Runs one named suite; `None` for an unknown name.
    pub fn run(&self, name: &str, opts: &SuiteOptions) -> Option<RunReport> {
        let suite = self.get(name)?;
        let started = Instant::now();
        let mut checker = Checker::default();
        suite.run(opts, &mut checker);
        Some(checker.into_report(suite.name(), started))
    }

    /// Runs every suite in registry order and aggregates.
    pub fn run_all(&self, opts: &SuiteOptions) -> RunReport {
        let started = Instant::now();
        let mut suites = Vec::with_capacity(self.suites.len());
        let mut checks = 0;
        let mut failures = 0;
        for suite in &self.suites {
            let report = self.run(suite.name(), opts).expect("registered suite runs");
            checks += report.checks;
            failures += report.failures;
            suites.push(report);
        }
        RunReport {
            suite: "all".to_string(),
            checks,
            failures,
            metrics: Vec::new(),
            failure_details: Vec::new(),
            info: Vec::new(),
            suites,
            wall_time_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }
}
