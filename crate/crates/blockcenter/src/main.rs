//! Command-line front end for the exact block-invariant toolkit.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use blockcenter::data::DataSource;
use blockcenter::formats;
use blockcenter::report::{Item, Report};
use blockcenter::verify;

use blockcenter_core::matrix::format_rational;
use blockcenter_core::{
    check_block, contribution, elementary_divisors, enumerate_ordinary_16x3, enumerate_rows,
    enumerate_solutions, fibonacci_certificate, hypothesis_check, integer_kernel_basis,
    minimal_resolution_dims, smith_normal_form, verify_growth_hypothesis, CenterLattice,
    FinDimAlgebra, GfpMat, HypothesisVerdict, HypothesisWitness, IntMatrix, Presentation,
    ResolutionError, Side,
};

#[derive(Parser)]
#[command(
    name = "blockcenter",
    version,
    about = "Exact tools for Gram decompositions, contribution matrices, center lattices, \
             finite-dimensional algebras, and resolution growth"
)]
struct Cli {
    /// Emit the report as deterministic JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized searches (symmetrizing-form sampling).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Step cap for iterative computations such as resolutions.
    #[arg(long, global = true, default_value_t = 16)]
    steps: usize,
    /// Directory overriding the bundled data files (same file names).
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form of an integer matrix file.
    Snf { file: PathBuf },
    /// Saturated basis of the integer kernel of a matrix file.
    Kernel { file: PathBuf },
    /// Enumerate decompositions XᵀX = C up to signed row permutations and
    /// Gram automorphisms.
    SolveGram {
        /// Positive-definite Gram matrix file.
        #[arg(long)]
        gram: PathBuf,
        /// Number of rows of the unknown matrix X.
        #[arg(long)]
        rows: usize,
        /// Per-row diagonal-contribution constraints, comma separated
        /// (e.g. `11/16,11/16,3/16`); length must equal --rows.
        #[arg(long)]
        contrib: Option<String>,
    },
    /// Enumerate the 16-row decomposition of a rank-3 Gram matrix whose row
    /// contributions are all 3/16 (defaults to the bundled Cartan matrix).
    Ordinary16x3 { file: Option<PathBuf> },
    /// Contribution matrices of every subsection of a block datum file.
    Contrib { file: PathBuf },
    /// Audit every constraint of a block datum file.
    CheckBlock { file: PathBuf },
    /// Center lattice of an assembled decomposition matrix, reduced mod p.
    Center {
        /// Assembled square decomposition matrix file.
        #[arg(long)]
        q: PathBuf,
        /// Prime modulus for the reduction.
        #[arg(long, default_value_t = 2)]
        p: u64,
        /// Compare the reduction against a model presentation.
        #[arg(long = "match", value_enum)]
        match_model: Option<MatchArg>,
    },
    /// Structural reports on an algebra file.
    Algebra {
        file: PathBuf,
        #[arg(long, value_enum)]
        op: AlgebraOp,
        /// Power index for `--op tn`.
        #[arg(long, default_value_t = 1)]
        index: usize,
    },
    /// Minimal-resolution trace of the simple module over a local algebra,
    /// with the Fibonacci growth certificate.
    Resolve {
        /// Algebra file (must be local with one-dimensional top).
        #[arg(long)]
        algebra: PathBuf,
        /// Radical element x for the explicit growth-hypothesis check,
        /// e.g. `0,1,0,0`.
        #[arg(long)]
        x: Option<String>,
        /// Optional middle element y for the three-element hypothesis.
        #[arg(long)]
        y: Option<String>,
        /// Radical element z for the explicit growth-hypothesis check.
        #[arg(long)]
        z: Option<String>,
    },
    /// Recompute every bundled table and check the published displays.
    VerifyPaper {
        /// Run a single named section of the pipeline.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MatchArg {
    /// Model with two order-2 generators annihilating the socle.
    Case12,
    /// Model with one order-2 generator and six socle generators.
    Case3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraOp {
    /// Radical series and Loewy vector.
    Loewy,
    /// Left, right, and two-sided socles.
    Socle,
    /// Center subspace and its Loewy structure.
    Center,
    /// Commutator space [A, A].
    Commutator,
    /// Külshammer space T_n on A/[A,A] (see --index).
    Tn,
    /// Search for a symmetrizing linear form.
    Symform,
    /// Perpendicular spaces of the radical powers under a symmetrizing form.
    Perp,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let src = DataSource::new(cli.data_dir.clone());
    let mut report = Report::new(command_name(&cli.command));
    let outcome = run(&cli, &src, &mut report);
    if let Err(message) = outcome {
        report.error(message);
    }
    if cli.json {
        print!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::from(report.status.exit_code())
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Snf { .. } => "snf",
        Command::Kernel { .. } => "kernel",
        Command::SolveGram { .. } => "solve-gram",
        Command::Ordinary16x3 { .. } => "ordinary16x3",
        Command::Contrib { .. } => "contrib",
        Command::CheckBlock { .. } => "check-block",
        Command::Center { .. } => "center",
        Command::Algebra { .. } => "algebra",
        Command::Resolve { .. } => "resolve",
        Command::VerifyPaper { .. } => "verify-paper",
    }
}

fn run(cli: &Cli, src: &DataSource, report: &mut Report) -> Result<(), String> {
    match &cli.command {
        Command::Snf { file } => cmd_snf(file, report),
        Command::Kernel { file } => cmd_kernel(file, report),
        Command::SolveGram { gram, rows, contrib } => {
            cmd_solve_gram(gram, *rows, contrib.as_deref(), report)
        }
        Command::Ordinary16x3 { file } => cmd_ordinary(file.as_deref(), src, report),
        Command::Contrib { file } => cmd_contrib(file, report),
        Command::CheckBlock { file } => cmd_check_block(file, report),
        Command::Center { q, p, match_model } => cmd_center(q, *p, *match_model, report),
        Command::Algebra { file, op, index } => {
            cmd_algebra(file, *op, *index, cli.seed, report)
        }
        Command::Resolve { algebra, x, y, z } => cmd_resolve(
            algebra,
            x.as_deref(),
            y.as_deref(),
            z.as_deref(),
            cli.steps,
            report,
        ),
        Command::VerifyPaper { only } => {
            *report = verify::verify_paper(src, only.as_deref());
            Ok(())
        }
    }
}

// ---------------------------------------------------------------- file input

fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn matrix_from_path(path: &Path) -> Result<IntMatrix, String> {
    formats::parse_matrix(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn block_from_path(path: &Path) -> Result<blockcenter_core::BlockDatum, String> {
    formats::parse_block(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn algebra_from_path(path: &Path) -> Result<FinDimAlgebra, String> {
    formats::parse_algebra(&read_file(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

// ------------------------------------------------------------- text helpers

/// Right-aligned rows of an integer matrix for text reports.
fn int_matrix_lines(m: &IntMatrix) -> Vec<String> {
    let strings: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(BigInt::to_string).collect())
        .collect();
    aligned(&strings)
}

fn gfp_matrix_lines(m: &GfpMat) -> Vec<String> {
    let strings: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(u64::to_string).collect())
        .collect();
    aligned(&strings)
}

fn aligned(rows: &[Vec<String>]) -> Vec<String> {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .map(|(j, s)| format!("{s:>width$}", width = widths[j]))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect()
}

fn push_text(report: &mut Report, title: &str, lines: Vec<String>) {
    report.section(title).items.push(Item::Text { lines });
}

fn vec_str(v: &[u64]) -> String {
    let body: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("({})", body.join(", "))
}

/// Writes an element of an algebra as a combination of basis labels.
fn element_str(alg: &FinDimAlgebra, v: &[u64]) -> String {
    let mut terms = Vec::new();
    for (c, label) in v.iter().zip(alg.labels()) {
        match c {
            0 => {}
            1 => terms.push(label.clone()),
            c => terms.push(format!("{c}·{label}")),
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

fn subspace_lines(alg: &FinDimAlgebra, s: &blockcenter_core::Subspace) -> Vec<String> {
    if s.is_zero() {
        return vec!["(zero space)".to_string()];
    }
    s.basis_rows().map(|row| element_str(alg, row)).collect()
}

// ------------------------------------------------------------------ commands

fn cmd_snf(path: &Path, report: &mut Report) -> Result<(), String> {
    let a = matrix_from_path(path)?;
    let snf = smith_normal_form(&a);
    let divisors: Vec<String> = snf.elementary_divisors().iter().map(BigInt::to_string).collect();
    push_text(
        report,
        "smith normal form",
        vec![
            format!("matrix: {}×{}, rank {}", a.rows(), a.cols(), snf.rank),
            format!("elementary divisors: [{}]", divisors.join(", ")),
        ],
    );
    push_text(report, "diagonal", int_matrix_lines(&snf.d));
    let product = snf.u.mul_mat(&a).and_then(|ua| ua.mul_mat(&snf.v)).map_err(|e| e.to_string())?;
    report.verdict(product == snf.d, "U·A·V equals the diagonal form");
    let unimodular = |m: &IntMatrix| {
        m.det().map(|d| d == BigInt::one() || d == -BigInt::one()).unwrap_or(false)
    };
    report.verdict(unimodular(&snf.u) && unimodular(&snf.v), "U and V are unimodular");
    Ok(())
}

fn cmd_kernel(path: &Path, report: &mut Report) -> Result<(), String> {
    let a = matrix_from_path(path)?;
    let kernel = integer_kernel_basis(&a);
    push_text(
        report,
        "integer kernel",
        vec![format!("matrix: {}×{}, kernel rank {}", a.rows(), a.cols(), kernel.rows())],
    );
    if kernel.rows() > 0 {
        push_text(report, "basis rows", int_matrix_lines(&kernel));
        let image = a.mul_mat(&kernel.transpose()).map_err(|e| e.to_string())?;
        report.verdict(image.is_zero(), "A annihilates every basis vector");
        let saturated = elementary_divisors(&kernel).iter().all(|d| d.is_one());
        report.verdict(saturated, "kernel basis is saturated (elementary divisors all 1)");
    } else {
        report.verdict(true, "kernel is trivial");
    }
    Ok(())
}

fn parse_contrib_list(text: &str, rows: usize) -> Result<Vec<BigRational>, String> {
    let values: Result<Vec<BigRational>, _> =
        text.split(',').map(|s| s.trim().parse::<BigRational>()).collect();
    let values = values.map_err(|e| format!("bad contribution list: {e}"))?;
    if values.len() != rows {
        return Err(format!(
            "contribution list has {} entries but --rows is {rows}",
            values.len()
        ));
    }
    Ok(values)
}

fn cmd_solve_gram(
    gram: &Path,
    rows: usize,
    contrib: Option<&str>,
    report: &mut Report,
) -> Result<(), String> {
    let c = matrix_from_path(gram)?;
    let constraints = contrib.map(|t| parse_contrib_list(t, rows)).transpose()?;

    let candidates = enumerate_rows(&c, true).map_err(|e| e.to_string())?;
    let mut class_reps: Vec<(Vec<BigInt>, BigRational)> = Vec::new();
    for cand in &candidates {
        if c.rows() == 3 {
            let canon = verify::row_orbit_canonical(&cand.entries);
            if !class_reps.iter().any(|(r, _)| *r == canon) {
                class_reps.push((canon, cand.contribution.clone()));
            }
        } else {
            class_reps.push((cand.entries.clone(), cand.contribution.clone()));
        }
    }
    class_reps.sort();
    let row_lines: Vec<String> = class_reps
        .iter()
        .map(|(r, q)| {
            let body: Vec<String> = r.iter().map(BigInt::to_string).collect();
            format!("({})  contribution {}", body.join(", "), format_rational(q))
        })
        .collect();
    let title = if c.rows() == 3 {
        "admissible rows up to sign and permutation"
    } else {
        "admissible rows up to sign"
    };
    push_text(report, title, row_lines);

    let classes =
        enumerate_solutions(&c, rows, constraints.as_deref()).map_err(|e| e.to_string())?;
    push_text(
        report,
        "solution classes",
        vec![format!("{} class(es) of {rows}-row decompositions XᵀX = C", classes.len())],
    );
    for class in &classes {
        let divisors: Vec<String> =
            class.elementary_divisors.iter().map(BigInt::to_string).collect();
        let contribs: Vec<String> = class.contributions.iter().map(format_rational).collect();
        let mut lines = vec![
            format!("elementary divisors ({})", divisors.join(", ")),
            format!("row contributions: {}", contribs.join(", ")),
            "canonical representative:".to_string(),
        ];
        lines.extend(int_matrix_lines(&class.canonical));
        push_text(report, &format!("class {}", class.label), lines);
    }
    report.verdict(!classes.is_empty(), "at least one decomposition class exists");
    Ok(())
}

fn cmd_ordinary(
    file: Option<&Path>,
    src: &DataSource,
    report: &mut Report,
) -> Result<(), String> {
    let c = match file {
        Some(path) => matrix_from_path(path)?,
        None => src.matrix("cartan_x.mat")?,
    };
    let class = enumerate_ordinary_16x3(&c).map_err(|e| e.to_string())?;
    let mut lines = vec!["canonical 16×3 decomposition:".to_string()];
    lines.extend(int_matrix_lines(&class.canonical));
    push_text(report, "ordinary decomposition", lines);
    report.verdict(
        class.contributions.iter().all(|q| *q == BigRational::new(3.into(), 16.into())),
        "all 16 row contributions equal 3/16",
    );
    let trace: BigRational = class.contributions.iter().sum();
    report.verdict(
        trace == BigRational::from_integer(3.into()),
        format!("contribution trace is {} (expected 3)", format_rational(&trace)),
    );
    Ok(())
}

fn cmd_contrib(path: &Path, report: &mut Report) -> Result<(), String> {
    let block = block_from_path(path)?;
    for sub in &block.subsections {
        let m = contribution(sub, &block.scale).map_err(|e| e.to_string())?;
        let mut lines = vec![format!(
            "{}·M ({}×{}), projector trace {}",
            block.scale,
            m.scaled.rows(),
            m.scaled.cols(),
            format_rational(&m.rational.trace()),
        )];
        lines.extend(int_matrix_lines(&m.scaled));
        push_text(report, &format!("subsection {}", sub.label), lines);
        report.verdict(
            m.rational.trace() == BigRational::from_integer(BigInt::from(sub.q.cols() as i64)),
            format!(
                "subsection {}: projector trace equals the column count {}",
                sub.label,
                sub.q.cols()
            ),
        );
    }
    Ok(())
}

fn cmd_check_block(path: &Path, report: &mut Report) -> Result<(), String> {
    let block = block_from_path(path)?;
    let audited = check_block(&block).map_err(|e| e.to_string())?;
    report.section("block constraints");
    for check in &audited.checks {
        report.verdict(check.pass, format!("{}: {}", check.name, check.detail));
    }
    Ok(())
}

fn cmd_center(
    q_path: &Path,
    p: u64,
    match_model: Option<MatchArg>,
    report: &mut Report,
) -> Result<(), String> {
    let g = matrix_from_path(q_path)?;
    let lattice = CenterLattice::from_decomposition_matrix(&g).map_err(|e| e.to_string())?;
    let mut lines = vec![format!(
        "rank {} lattice of central diagonals (column j = basis vector j):",
        lattice.rank()
    )];
    lines.extend(int_matrix_lines(&lattice.basis_diagonals));
    push_text(report, "diagonal table", lines);

    let modular = lattice.reduce_mod_p(p).map_err(|e| e.to_string())?;
    let alg = &modular.algebra;
    let mut mod_lines =
        vec![format!("basis normalized so column 0 is the unit (labels {}):", alg.labels().join(", "))];
    mod_lines.extend(gfp_matrix_lines(&modular.basis_diagonals));
    push_text(report, &format!("diagonal table mod {p}"), mod_lines);
    let mut product_lines = Vec::new();
    for i in 0..alg.dim() {
        for j in i..alg.dim() {
            let prod = alg.basis_product(i, j);
            if prod.iter().any(|&c| c != 0) && i != alg.unit_index() && j != alg.unit_index() {
                product_lines.push(format!(
                    "{}·{} = {}",
                    alg.labels()[i],
                    alg.labels()[j],
                    element_str(alg, prod)
                ));
            }
        }
    }
    if product_lines.is_empty() {
        product_lines.push("all products of non-unit basis vectors vanish".to_string());
    }
    push_text(report, &format!("structure constants mod {p}"), product_lines);

    let loewy = alg.loewy_vector().map_err(|e| e.to_string())?;
    let loewy_strs: Vec<String> = loewy.iter().map(usize::to_string).collect();
    push_text(
        report,
        "loewy vector",
        vec![format!("({})", loewy_strs.join(", "))],
    );

    if let Some(which) = match_model {
        let presentation = match which {
            MatchArg::Case12 => Presentation::CaseOneTwo,
            MatchArg::Case3 => Presentation::CaseThree,
        };
        let matched =
            blockcenter_core::match_presentation(alg, presentation).map_err(|e| e.to_string())?;
        match matched {
            Some(found) => {
                let model = presentation.model();
                let mut witness_lines = Vec::new();
                for (label, image) in model.labels().iter().zip(&found.images) {
                    witness_lines.push(format!("{label} ↦ {}", element_str(alg, image)));
                }
                push_text(report, "witness map", witness_lines);
                report.verdict(true, format!("reduction matches presentation {presentation:?}"));
            }
            None => {
                report.verdict(
                    false,
                    format!("reduction does not match presentation {presentation:?}"),
                );
            }
        }
    }
    Ok(())
}

fn cmd_algebra(
    path: &Path,
    op: AlgebraOp,
    index: usize,
    seed: Option<u64>,
    report: &mut Report,
) -> Result<(), String> {
    let alg = algebra_from_path(path)?;
    push_text(
        report,
        "algebra",
        vec![format!(
            "dimension {} over GF({}), unit {}, {}",
            alg.dim(),
            alg.p(),
            alg.labels()[alg.unit_index()],
            if alg.is_commutative() { "commutative" } else { "noncommutative" }
        )],
    );
    let find_form = |a: &FinDimAlgebra| match seed {
        Some(s) => a.find_symmetrizing_form_seeded(s),
        None => a.find_symmetrizing_form(),
    };
    match op {
        AlgebraOp::Loewy => {
            let series = alg.radical_series().map_err(|e| e.to_string())?;
            for (i, layer) in series.iter().enumerate() {
                push_text(
                    report,
                    &format!("radical power J^{i} (dim {})", layer.dim()),
                    subspace_lines(&alg, layer),
                );
            }
            let loewy = alg.loewy_vector().map_err(|e| e.to_string())?;
            let strs: Vec<String> = loewy.iter().map(usize::to_string).collect();
            push_text(report, "loewy vector", vec![format!("({})", strs.join(", "))]);
            report.verdict(
                loewy.iter().sum::<usize>() == alg.dim(),
                "loewy layers partition the dimension",
            );
        }
        AlgebraOp::Socle => {
            for (name, side) in
                [("left socle", Side::Left), ("right socle", Side::Right), ("socle", Side::TwoSided)]
            {
                let s = alg.socle(side).map_err(|e| e.to_string())?;
                push_text(report, &format!("{name} (dim {})", s.dim()), subspace_lines(&alg, &s));
            }
            report.verdict(true, "socles computed");
        }
        AlgebraOp::Center => {
            let z = alg.center();
            push_text(report, &format!("center (dim {})", z.dim()), subspace_lines(&alg, &z));
            let za = alg.center_algebra().map_err(|e| e.to_string())?;
            let loewy = za.loewy_vector().map_err(|e| e.to_string())?;
            let strs: Vec<String> = loewy.iter().map(usize::to_string).collect();
            push_text(report, "center loewy vector", vec![format!("({})", strs.join(", "))]);
            report.verdict(true, "center computed");
        }
        AlgebraOp::Commutator => {
            let k = alg.commutator_space();
            push_text(
                report,
                &format!("commutator space (dim {})", k.dim()),
                subspace_lines(&alg, &k),
            );
            report.verdict(
                alg.is_commutative() == k.is_zero(),
                "commutator space vanishes exactly for commutative algebras",
            );
        }
        AlgebraOp::Tn => {
            for n in 0..=index {
                let t = alg.kulshammer_t(n).map_err(|e| e.to_string())?;
                push_text(
                    report,
                    &format!("T_{n} (dim {})", t.dim()),
                    subspace_lines(&alg, &t),
                );
            }
            report.verdict(true, format!("T_0 … T_{index} computed"));
        }
        AlgebraOp::Symform => match find_form(&alg) {
            Ok(form) => {
                push_text(
                    report,
                    "symmetrizing form",
                    vec![format!("values on basis: {}", vec_str(&form.coeffs))],
                );
                report.verdict(
                    alg.is_symmetrizing(&form),
                    "form is symmetric, associative, and nondegenerate",
                );
            }
            Err(e) => {
                report.verdict(false, format!("no symmetrizing form found: {e}"));
            }
        },
        AlgebraOp::Perp => {
            let form = match find_form(&alg) {
                Ok(form) => form,
                Err(e) => {
                    report.verdict(false, format!("perp spaces need a symmetrizing form: {e}"));
                    return Ok(());
                }
            };
            push_text(
                report,
                "symmetrizing form",
                vec![format!("values on basis: {}", vec_str(&form.coeffs))],
            );
            let series = alg.radical_series().map_err(|e| e.to_string())?;
            let mut all_complementary = true;
            for (i, layer) in series.iter().enumerate() {
                let perp = alg.perp_space(&form, layer).map_err(|e| e.to_string())?;
                all_complementary &= layer.dim() + perp.dim() == alg.dim();
                push_text(
                    report,
                    &format!("(J^{i})^⊥ (dim {})", perp.dim()),
                    subspace_lines(&alg, &perp),
                );
            }
            report.verdict(all_complementary, "dim U + dim U⊥ = dim A for every radical power");
            let socle = alg.socle(Side::Right).map_err(|e| e.to_string())?;
            if series.len() > 1 {
                let j_perp = alg.perp_space(&form, &series[1]).map_err(|e| e.to_string())?;
                report.verdict(
                    j_perp.basis() == socle.basis(),
                    "J^⊥ coincides with the right socle",
                );
            }
        }
    }
    Ok(())
}

fn resolution_error(e: ResolutionError) -> String {
    e.to_string()
}

fn cmd_resolve(
    algebra: &Path,
    x: Option<&str>,
    y: Option<&str>,
    z: Option<&str>,
    steps: usize,
    report: &mut Report,
) -> Result<(), String> {
    let alg = algebra_from_path(algebra)?;

    match (x, z) {
        (Some(x_text), Some(z_text)) => {
            let parse = |text: &str| {
                formats::parse_vector(text, alg.dim(), alg.p()).map_err(|e| e.to_string())
            };
            let xv = parse(x_text)?;
            let zv = parse(z_text)?;
            let yv = y.map(parse).transpose()?;
            let verdict = verify_growth_hypothesis(&alg, &xv, yv.as_deref(), &zv)
                .map_err(resolution_error)?;
            let detail = match verdict {
                HypothesisVerdict::Holds => None,
                HypothesisVerdict::NonzeroProduct(which) => {
                    Some(format!("product {which} is nonzero"))
                }
                HypothesisVerdict::DependentModuloRadicalSquare => {
                    Some("witnesses are dependent modulo J²".to_string())
                }
            };
            report.section("growth hypothesis");
            match detail {
                None => report.verdict(true, "explicit witnesses satisfy the growth hypothesis"),
                Some(reason) => report.verdict(false, reason),
            }
        }
        (None, None) => match hypothesis_check(&alg) {
            Ok(Some(witness)) => {
                let lines = match &witness {
                    HypothesisWitness::Pair { x, z } => vec![
                        format!("x = {}", element_str(&alg, x)),
                        format!("z = {}", element_str(&alg, z)),
                    ],
                    HypothesisWitness::Triple { x, y, z } => vec![
                        format!("x = {}", element_str(&alg, x)),
                        format!("y = {}", element_str(&alg, y)),
                        format!("z = {}", element_str(&alg, z)),
                    ],
                };
                push_text(report, "growth hypothesis witnesses found", lines);
            }
            Ok(None) => {
                push_text(
                    report,
                    "growth hypothesis",
                    vec!["no witnesses found by exhaustive search".to_string()],
                );
            }
            Err(ResolutionError::TooLarge) => {
                push_text(
                    report,
                    "growth hypothesis",
                    vec!["radical too large for exhaustive search; pass --x/--z".to_string()],
                );
            }
            Err(e) => return Err(resolution_error(e)),
        },
        _ => return Err("--x and --z must be given together".to_string()),
    }

    let trace = minimal_resolution_dims(&alg, steps).map_err(resolution_error)?;
    let n_strs: Vec<String> = trace.n.iter().map(usize::to_string).collect();
    push_text(
        report,
        "resolution trace",
        vec![
            format!("n  = ({})", n_strs.join(", ")),
            format!("f  = (1, {})  [f₋₁ = f₀ = 1]", {
                let rest: Vec<String> = trace.fib.iter().map(u64::to_string).collect();
                rest.join(", ")
            }),
        ],
    );
    report.section("growth certificate");
    match fibonacci_certificate(&trace) {
        Ok(()) => report.verdict(
            true,
            format!(
                "n_i ≥ f_i for all {} computed steps — growth certificate at desk scale, \
                 not a proof of infinite complexity",
                trace.n.len()
            ),
        ),
        Err(i) => {
            let terminated = trace.n.get(i).copied() == Some(0);
            let reason = if terminated {
                format!("resolution terminated at step {i}: the module has finite projective dimension")
            } else {
                format!("n_{i} = {} falls below f_{i} = {}", trace.n[i], trace.fib[i])
            };
            report.verdict(false, reason);
        }
    }
    Ok(())
}
