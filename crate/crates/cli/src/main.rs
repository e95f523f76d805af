//! Command-line front-end: emit operator matrices and run the named
//! verification suites with machine-readable output.
//!
//! Reports go to standard output, progress to standard error. Exit codes:
//! 0 all checks pass, 1 verification failure, 2 usage error, 3 I/O error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ringdiv::algebra::Algebra;
use ringdiv::clifford::{
    cliff70_set, cliff76_set, gamma_set_matrices, quaternion_gamma_set, Semantics, Side,
};
use ringdiv::matrix::IntMatrix;
use ringdiv::ops::{
    complex_operator_basis, left_matrix, mixed_matrix, quaternion_operator_basis, right_matrix,
    LabeledMatrix, OpKind,
};
use ringdiv::rank::span_rank;
use ringdiv::report::{render_matrices, render_matrix, MatrixFormat, MatrixRecord};
use ringdiv::suites::{SuiteOptions, SuiteRegistry};
use ringdiv::words::{degrees_of_freedom_audit, translate, OperatorWord};

const EXIT_VERIFY_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "ringdiv",
    version,
    about = "Exact octonionic operator matrices and Clifford verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit operator matrices.
    Gen(GenArgs),
    /// Run a named verification suite and print its report as JSON.
    Verify(VerifyArgs),
    /// Compute the exact span rank of operator words or a preset.
    Rank(RankArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    #[value(name = "C", alias = "c", alias = "complex")]
    C,
    #[value(name = "H", alias = "h", alias = "quaternion")]
    H,
    #[value(name = "O", alias = "o", alias = "octonion")]
    O,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Algebra {
        match a {
            AlgebraArg::C => Algebra::Complex,
            AlgebraArg::H => Algebra::Quaternion,
            AlgebraArg::O => Algebra::Octonion,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Plain,
}

impl From<FormatArg> for MatrixFormat {
    fn from(f: FormatArg) -> MatrixFormat {
        match f {
            FormatArg::Json => MatrixFormat::Json,
            FormatArg::Csv => MatrixFormat::Csv,
            FormatArg::Plain => MatrixFormat::Plain,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GenTarget {
    /// A left-multiplication matrix E_i.
    Left,
    /// A right-multiplication matrix 1|E_i.
    Right,
    /// A quaternionic two-sided matrix E_i|E_j.
    Mixed,
    /// All fourteen printed octonionic table matrices.
    Appendix,
    /// The generator matrices of a named gamma set.
    Gamma,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaSetArg {
    Quaternion,
    Cliff70Left,
    Cliff70Right,
    Cliff76,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    target: GenTarget,

    /// Algebra tag for left/right targets.
    #[arg(long, value_enum)]
    algebra: Option<AlgebraArg>,

    /// Imaginary index for left/right targets.
    #[arg(long)]
    index: Option<u8>,

    /// First index of a mixed operator.
    #[arg(short = 'i', long)]
    i: Option<u8>,

    /// Second index of a mixed operator.
    #[arg(short = 'j', long)]
    j: Option<u8>,

    /// Gamma set for the gamma target.
    #[arg(long, value_enum)]
    set: Option<GammaSetArg>,

    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,

    /// Write to a file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    ComplexBasis,
    QuaternionRules,
    QuaternionClifford,
    SixthGamma,
    OctonionAnticomm,
    OctonionDefect,
    So7so8,
    Cliff76,
    Appendix,
    /// Every suite, in registry order.
    All,
}

impl SuiteName {
    fn as_str(self) -> &'static str {
        match self {
            SuiteName::ComplexBasis => "complex-basis",
            SuiteName::QuaternionRules => "quaternion-rules",
            SuiteName::QuaternionClifford => "quaternion-clifford",
            SuiteName::SixthGamma => "sixth-gamma",
            SuiteName::OctonionAnticomm => "octonion-anticomm",
            SuiteName::OctonionDefect => "octonion-defect",
            SuiteName::So7so8 => "so7so8",
            SuiteName::Cliff76 => "cliff76",
            SuiteName::Appendix => "appendix",
            SuiteName::All => "all",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Priority,
    Naive,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or `all` for the whole registry.
    #[arg(long, value_enum)]
    suite: SuiteName,

    /// Anticommutator evaluation: word concatenation or plain
    /// matrix composition.
    #[arg(long, value_enum, default_value = "priority")]
    semantics: SemanticsArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum RankPreset {
    /// The sixteen quaternionic operators; expected rank 16.
    #[value(name = "quaternion-16")]
    Quaternion16,
    /// The four complex operators; expected rank 4.
    #[value(name = "complex-4")]
    Complex4,
    /// Octonionic left-sector products up to length three; expected 64.
    OctonionLeft,
    /// Octonionic right-sector products up to length three; expected 64.
    OctonionRight,
    /// The 63 two-sided operators E_i, 1|E_j, E_i(1|E_j); expected 63.
    OctonionTwoSided,
}

#[derive(Args)]
struct RankArgs {
    #[arg(long, value_enum)]
    preset: Option<RankPreset>,

    /// Octonionic word literals, e.g. `L1 R4 L2.L1.R4`.
    words: Vec<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Gen(args) => cmd_gen(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Rank(args) => cmd_rank(&args),
    };
    ExitCode::from(code)
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn emit(text: &str, output: Option<&PathBuf>) -> u8 {
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_IO;
            }
            0
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            if writeln!(stdout, "{text}").is_err() {
                return EXIT_IO;
            }
            0
        }
    }
}

fn cmd_gen(args: &GenArgs) -> u8 {
    let format: MatrixFormat = args.format.into();
    let rendered = match args.target {
        GenTarget::Left | GenTarget::Right => {
            let Some(algebra) = args.algebra else {
                return usage_error("left/right targets need --algebra");
            };
            let Some(index) = args.index else {
                return usage_error("left/right targets need --index");
            };
            let algebra: Algebra = algebra.into();
            let is_left = matches!(args.target, GenTarget::Left);
            let built = if is_left {
                left_matrix(algebra, index)
            } else {
                right_matrix(algebra, index)
            };
            match built {
                Ok(matrix) => {
                    let kind = if is_left {
                        OpKind::Left(index)
                    } else {
                        OpKind::Right(index)
                    };
                    render_matrix(
                        &LabeledMatrix {
                            algebra,
                            kind,
                            matrix,
                        },
                        format,
                    )
                }
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        GenTarget::Mixed => {
            if args.algebra.map(Algebra::from) == Some(Algebra::Octonion)
                || args.algebra.map(Algebra::from) == Some(Algebra::Complex)
            {
                return usage_error("mixed matrices are quaternionic; use --algebra h");
            }
            let (Some(i), Some(j)) = (args.i, args.j) else {
                return usage_error("mixed target needs -i and -j");
            };
            match mixed_matrix(i, j) {
                Ok(matrix) => render_matrix(
                    &LabeledMatrix {
                        algebra: Algebra::Quaternion,
                        kind: OpKind::Mixed(i, j),
                        matrix,
                    },
                    format,
                ),
                Err(e) => return usage_error(&e.to_string()),
            }
        }
        GenTarget::Appendix => render_matrices(
            Some("appendix"),
            &ringdiv::appendix::appendix_tables(),
            format,
        ),
        GenTarget::Gamma => {
            let Some(set) = args.set else {
                return usage_error("gamma target needs --set");
            };
            let gs = match set {
                GammaSetArg::Quaternion => quaternion_gamma_set(),
                GammaSetArg::Cliff70Left => cliff70_set(Side::Left),
                GammaSetArg::Cliff70Right => cliff70_set(Side::Right),
                GammaSetArg::Cliff76 => cliff76_set(),
            };
            match gamma_set_matrices(&gs) {
                Ok(generators) => render_gamma_set(&gs.name, &generators, format),
                Err(e) => return usage_error(&e.to_string()),
            }
        }
    };
    match rendered {
        Ok(text) => emit(&text, args.output.as_ref()),
        Err(e) => usage_error(&e.to_string()),
    }
}

fn render_gamma_set(
    name: &str,
    generators: &[(String, Vec<LabeledMatrix>)],
    format: MatrixFormat,
) -> ringdiv::Result<String> {
    match format {
        MatrixFormat::Json => {
            let body: Vec<serde_json::Value> = generators
                .iter()
                .map(|(gamma, mats)| {
                    let records: ringdiv::Result<Vec<MatrixRecord>> =
                        mats.iter().map(MatrixRecord::from_labeled).collect();
                    Ok(serde_json::json!({
                        "generator": gamma,
                        // Barred generators carry a left/right matrix pair;
                        // they have no faithful single matrix.
                        "matrices": records?,
                    }))
                })
                .collect::<ringdiv::Result<_>>()?;
            Ok(serde_json::to_string_pretty(
                &serde_json::json!({ "set": name, "generators": body }),
            )
            .expect("gamma records serialize"))
        }
        MatrixFormat::Csv | MatrixFormat::Plain => {
            let mut blocks: Vec<String> = Vec::new();
            for (gamma, mats) in generators {
                let labels: Vec<String> = mats.iter().map(LabeledMatrix::label).collect();
                if format == MatrixFormat::Plain {
                    blocks.push(format!("{gamma} = {}", labels.join(" x ")));
                }
                for m in mats {
                    blocks.push(render_matrix(m, format)?);
                }
            }
            Ok(blocks.join("\n\n"))
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    let semantics = match args.semantics {
        SemanticsArg::Priority => Semantics::Priority,
        SemanticsArg::Naive => Semantics::Naive,
    };
    let registry = SuiteRegistry::builtin();
    let opts = SuiteOptions { semantics };

    let report = match args.suite {
        SuiteName::All => {
            eprintln!("running {} suites", registry.names().len());
            registry.run_all(&opts)
        }
        name => {
            let suite = registry
                .get(name.as_str())
                .expect("every suite name is registered");
            eprintln!("running {}: {}", suite.name(), suite.description());
            registry
                .run(name.as_str(), &opts)
                .expect("every suite name is registered")
        }
    };

    for line in summary_lines(&report) {
        eprintln!("{line}");
    }
    let code = if report.pass() {
        0
    } else {
        EXIT_VERIFY_FAILURE
    };
    let emit_code = emit(&report.to_json(), None);
    if emit_code != 0 {
        return emit_code;
    }
    code
}

fn summary_lines(report: &ringdiv::report::RunReport) -> Vec<String> {
    if report.suites.is_empty() {
        vec![format!(
            "{}: {} checks, {} failures",
            report.suite, report.checks, report.failures
        )]
    } else {
        report.suites.iter().flat_map(summary_lines).collect()
    }
}

fn cmd_rank(args: &RankArgs) -> u8 {
    if args.preset.is_some() && !args.words.is_empty() {
        return usage_error("give either --preset or word literals, not both");
    }

    let (label, count, rank, expected) = if let Some(preset) = args.preset {
        match preset {
            RankPreset::Quaternion16 => {
                let mats: Vec<IntMatrix> = quaternion_operator_basis()
                    .into_iter()
                    .map(|m| m.matrix)
                    .collect();
                (
                    "quaternion-16",
                    Some(mats.len()),
                    span_rank(&mats),
                    Some(16),
                )
            }
            RankPreset::Complex4 => {
                let mats: Vec<IntMatrix> = complex_operator_basis()
                    .into_iter()
                    .map(|m| m.matrix)
                    .collect();
                ("complex-4", Some(mats.len()), span_rank(&mats), Some(4))
            }
            RankPreset::OctonionLeft => {
                let audit = degrees_of_freedom_audit();
                ("octonion-left", None, audit.left_sector_rank, Some(64))
            }
            RankPreset::OctonionRight => {
                let audit = degrees_of_freedom_audit();
                ("octonion-right", None, audit.right_sector_rank, Some(64))
            }
            RankPreset::OctonionTwoSided => {
                let audit = degrees_of_freedom_audit();
                (
                    "octonion-two-sided",
                    Some(63),
                    audit.two_sided_rank,
                    Some(63),
                )
            }
        }
    } else {
        if args.words.is_empty() {
            return usage_error("nothing to rank: give word literals or --preset");
        }
        let mut mats = Vec::with_capacity(args.words.len());
        for text in &args.words {
            let word = match OperatorWord::parse(text) {
                Ok(w) => w,
                Err(e) => return usage_error(&e.to_string()),
            };
            mats.push(translate(&word).expect("parsed words are in range"));
        }
        return print_rank(
            &args.words.join(" "),
            Some(mats.len()),
            span_rank(&mats),
            None,
        );
    };
    print_rank(label, count, rank, expected)
}

fn print_rank(label: &str, count: Option<usize>, rank: usize, expected: Option<usize>) -> u8 {
    let body = serde_json::json!({
        "input": label,
        "matrices": count,
        "rank": rank,
        "expected": expected,
        "matches_expected": expected.map(|e| e == rank),
    });
    let code = emit(
        &serde_json::to_string_pretty(&body).expect("rank report serializes"),
        None,
    );
    if code != 0 {
        return code;
    }
    match expected {
        Some(e) if e != rank => EXIT_VERIFY_FAILURE,
        _ => 0,
    }
}
