//! Generalized decomposition data and its consistency checks.
//!
//! A block datum consists of one `SubsectionDatum` per major subsection: the
//! block-column `Qᵘ` of the generalized decomposition matrix together with
//! the Cartan matrix `Cᵘ` of the dominated block.  The contribution matrix of
//! a subsection is `Mᵘ = Qᵘ·(Cᵘ)⁻¹·(Qᵘ)ᵀ`; scaled by the defect-group order
//! it must be integral, and the family of all contribution matrices must be a
//! complete orthogonal system of projectors summing to the identity.  The
//! star construction adds congruences `Σᵤ λ(u)·(scale·Mᵘ) ≡ 0 (mod scale)`
//! for the stable generalized characters `λ` of the defect group.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::matrix::{IntMatrix, LinalgError, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GendecError {
    Linalg(LinalgError),
    /// `QᵀQ` does not equal the declared Cartan matrix.
    GramMismatch { label: String },
    /// The declared Cartan matrix is singular.
    CartanSingular { label: String },
    /// `scale·Mᵘ` has a non-integral entry.
    NonIntegralContribution { label: String, row: usize, col: usize },
    /// Subsection shapes are inconsistent with each other or with the λ-table.
    Shape(&'static str),
    /// A basic-set transformation must be unimodular.
    NotUnimodular,
    /// Two subsection columns are not orthogonal, so the block datum cannot
    /// be assembled into a square decomposition matrix.
    OrthogonalityViolation { u: String, v: String },
}

impl fmt::Display for GendecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GendecError::Linalg(e) => write!(f, "{e}"),
            GendecError::GramMismatch { label } => {
                write!(f, "subsection {label}: QᵀQ does not match the Cartan matrix")
            }
            GendecError::CartanSingular { label } => {
                write!(f, "subsection {label}: Cartan matrix is singular")
            }
            GendecError::NonIntegralContribution { label, row, col } => write!(
                f,
                "subsection {label}: scaled contribution entry ({row},{col}) is not integral"
            ),
            GendecError::Shape(ctx) => write!(f, "inconsistent shapes: {ctx}"),
            GendecError::NotUnimodular => write!(f, "basic-set transformation is not unimodular"),
            GendecError::OrthogonalityViolation { u, v } => {
                write!(f, "subsection columns {u} and {v} are not orthogonal")
            }
        }
    }
}

impl core::error::Error for GendecError {}

impl From<LinalgError> for GendecError {
    fn from(e: LinalgError) -> Self {
        GendecError::Linalg(e)
    }
}

/// One major subsection: the block-column of the generalized decomposition
/// matrix (`k` rows, `l(bᵘ)` columns) and the Cartan matrix of `bᵘ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsectionDatum {
    pub label: String,
    pub q: IntMatrix,
    pub cartan: IntMatrix,
}

impl SubsectionDatum {
    pub fn irreducible_brauer_count(&self) -> usize {
        self.q.cols()
    }
}

/// A full block datum: the defect-group order, the subsection columns in a
/// fixed order, and optionally a table of stable generalized characters
/// (rows) evaluated at the subsection representatives (columns).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDatum {
    pub scale: BigInt,
    pub subsections: Vec<SubsectionDatum>,
    pub lambda: Option<IntMatrix>,
}

impl BlockDatum {
    /// Number of ordinary irreducible characters (rows of every `Qᵘ`).
    pub fn ordinary_count(&self) -> Result<usize, GendecError> {
        let k = self
            .subsections
            .first()
            .map(|s| s.q.rows())
            .ok_or(GendecError::Shape("block datum has no subsections"))?;
        if self.subsections.iter().any(|s| s.q.rows() != k) {
            return Err(GendecError::Shape("subsection columns disagree on k"));
        }
        if let Some(lambda) = &self.lambda {
            if lambda.cols() != self.subsections.len() {
                return Err(GendecError::Shape("λ-table width does not match subsection count"));
            }
        }
        Ok(k)
    }
}

/// The contribution matrix of one subsection, exact and scaled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContributionMatrix {
    pub label: String,
    /// `Mᵘ = Qᵘ·(Cᵘ)⁻¹·(Qᵘ)ᵀ`.
    pub rational: RatMatrix,
    /// `scale·Mᵘ`, guaranteed integral.
    pub scaled: IntMatrix,
}

/// `Q·C⁻¹·Qᵀ` without any integrality requirement.
pub fn contribution_rational(q: &IntMatrix, cartan: &IntMatrix) -> Result<RatMatrix, GendecError> {
    if cartan.rows() != cartan.cols() || q.cols() != cartan.rows() {
        return Err(GendecError::Shape("Q and Cartan shapes are incompatible"));
    }
    let inv = cartan
        .to_rational()
        .inverse()
        .map_err(|_| GendecError::CartanSingular { label: String::new() })?;
    let qr = q.to_rational();
    Ok(qr.mul_mat(&inv)?.mul_mat(&qr.transpose())?)
}

/// The contribution matrix of `sub`, requiring `QᵀQ = C` and integrality of
/// `scale·Mᵘ`.
pub fn contribution(sub: &SubsectionDatum, scale: &BigInt) -> Result<ContributionMatrix, GendecError> {
    let gram = sub.q.transpose().mul_mat(&sub.q)?;
    if gram != sub.cartan {
        return Err(GendecError::GramMismatch { label: sub.label.clone() });
    }
    let rational = contribution_rational(&sub.q, &sub.cartan).map_err(|e| match e {
        GendecError::CartanSingular { .. } => GendecError::CartanSingular { label: sub.label.clone() },
        other => other,
    })?;
    let scaled_rat = rational.scale(&BigRational::from_integer(scale.clone()));
    let scaled = scaled_rat.to_integral().map_err(|e| match e {
        LinalgError::NonIntegralEntry { row, col } => {
            GendecError::NonIntegralContribution { label: sub.label.clone(), row, col }
        }
        other => GendecError::Linalg(other),
    })?;
    Ok(ContributionMatrix { label: sub.label.clone(), rational, scaled })
}

/// Replaces the basic set of the dominated block: `Q ↦ Q·S`, `C ↦ SᵀCS` for
/// unimodular `S`.  The contribution matrix is invariant under this.
pub fn transform_basic_set(sub: &SubsectionDatum, s: &IntMatrix) -> Result<SubsectionDatum, GendecError> {
    if s.rows() != s.cols() || s.rows() != sub.q.cols() {
        return Err(GendecError::Shape("transformation size does not match Q"));
    }
    let det = s.det()?;
    if det.abs() != BigInt::one() {
        return Err(GendecError::NotUnimodular);
    }
    Ok(SubsectionDatum {
        label: sub.label.clone(),
        q: sub.q.mul_mat(s)?,
        cartan: s.transpose().mul_mat(&sub.cartan)?.mul_mat(s)?,
    })
}

/// Concatenates the subsection columns into the full generalized
/// decomposition matrix `G = (Q¹ | Qᵘ | …)`, validating that the result is
/// square with `GᵀG = blockdiag(C¹, Cᵘ, …)`: each `Qᵘ` must satisfy the Gram
/// condition and distinct columns must be orthogonal.
pub fn assemble(block: &BlockDatum) -> Result<IntMatrix, GendecError> {
    let k = block.ordinary_count()?;
    let total: usize = block.subsections.iter().map(|s| s.q.cols()).sum();
    if total != k {
        return Err(GendecError::Shape("column count does not match ordinary count"));
    }
    for sub in &block.subsections {
        if sub.q.transpose().mul_mat(&sub.q)? != sub.cartan {
            return Err(GendecError::GramMismatch { label: sub.label.clone() });
        }
    }
    for (i, a) in block.subsections.iter().enumerate() {
        for b in block.subsections.iter().skip(i + 1) {
            if !a.q.transpose().mul_mat(&b.q)?.is_zero() {
                return Err(GendecError::OrthogonalityViolation {
                    u: a.label.clone(),
                    v: b.label.clone(),
                });
            }
        }
    }
    let mut g = IntMatrix::zeros(k, k);
    let mut col = 0;
    for sub in &block.subsections {
        for j in 0..sub.q.cols() {
            for i in 0..k {
                g[(i, col)] = sub.q[(i, j)].clone();
            }
            col += 1;
        }
    }
    Ok(g)
}

/// Outcome of one named consistency check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: String) -> Self {
        CheckResult { name, pass: true, detail }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckResult { name, pass: false, detail }
    }
}

/// Contribution matrices plus the verdicts of all block-level checks.
#[derive(Debug, Clone)]
pub struct BlockReport {
    pub contributions: Vec<ContributionMatrix>,
    pub checks: Vec<CheckResult>,
}

impl BlockReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs every consistency check on a block datum.
///
/// Shape inconsistencies and singular Cartan matrices are hard errors; all
/// mathematical conditions (Gram match, integrality, odd entries, pairwise
/// orthogonality, partition of the identity, projector law, traces, star
/// congruences) are reported as named pass/fail results.
pub fn check_block(block: &BlockDatum) -> Result<BlockReport, GendecError> {
    let k = block.ordinary_count()?;
    let mut checks = Vec::new();
    let mut contributions = Vec::new();

    // Gram condition per subsection
    let mut gram_fail: Vec<&str> = Vec::new();
    for sub in &block.subsections {
        let gram = sub.q.transpose().mul_mat(&sub.q)?;
        if gram != sub.cartan {
            gram_fail.push(&sub.label);
        }
    }
    checks.push(if gram_fail.is_empty() {
        CheckResult::pass("gram", format!("QᵀQ = C for all {} subsections", block.subsections.len()))
    } else {
        CheckResult::fail("gram", format!("QᵀQ ≠ C for: {}", gram_fail.join(", ")))
    });

    // contribution matrices; integrality of scale·Mᵘ
    let mut integral_fail: Vec<String> = Vec::new();
    for sub in &block.subsections {
        let rational = contribution_rational(&sub.q, &sub.cartan).map_err(|e| match e {
            GendecError::CartanSingular { .. } => {
                GendecError::CartanSingular { label: sub.label.clone() }
            }
            other => other,
        })?;
        let scaled_rat = rational.scale(&BigRational::from_integer(block.scale.clone()));
        match scaled_rat.to_integral() {
            Ok(scaled) => contributions.push(ContributionMatrix {
                label: sub.label.clone(),
                rational,
                scaled,
            }),
            Err(LinalgError::NonIntegralEntry { row, col }) => {
                integral_fail.push(format!("{} at ({row},{col})", sub.label));
                // keep a placeholder so downstream checks can be skipped cleanly
                contributions.push(ContributionMatrix {
                    label: sub.label.clone(),
                    scaled: IntMatrix::zeros(k, k),
                    rational,
                });
            }
            Err(other) => return Err(GendecError::Linalg(other)),
        }
    }
    let integral_ok = integral_fail.is_empty();
    checks.push(if integral_ok {
        CheckResult::pass("integrality", String::from("scale·Mᵘ integral for all subsections"))
    } else {
        CheckResult::fail("integrality", format!("non-integral: {}", integral_fail.join("; ")))
    });

    // every entry of every scaled contribution matrix is odd
    let odd = contributions
        .iter()
        .all(|c| c.scaled.entries().iter().all(|e| e.is_odd()));
    checks.push(if integral_ok && odd {
        CheckResult::pass("odd-entries", String::from("all scaled contribution entries are odd"))
    } else {
        CheckResult::fail("odd-entries", String::from("an even scaled contribution entry exists"))
    });

    // pairwise column orthogonality (equivalently MᵘMᵛ = 0)
    let mut orth_fail: Vec<String> = Vec::new();
    for (i, a) in block.subsections.iter().enumerate() {
        for b in block.subsections.iter().skip(i + 1) {
            if !a.q.transpose().mul_mat(&b.q)?.is_zero() {
                orth_fail.push(format!("{}·{}", a.label, b.label));
            }
        }
    }
    checks.push(if orth_fail.is_empty() {
        CheckResult::pass("orthogonality", String::from("(Qᵘ)ᵀQᵛ = 0 for all u ≠ v"))
    } else {
        CheckResult::fail("orthogonality", format!("nonzero products: {}", orth_fail.join(", ")))
    });

    // Σᵤ Mᵘ = 1
    let mut total = RatMatrix::zeros(k, k);
    for c in &contributions {
        total = total.add_mat(&c.rational)?;
    }
    let identity = IntMatrix::identity(k).to_rational();
    checks.push(if total == identity {
        CheckResult::pass("partition-of-identity", String::from("Σᵤ Mᵘ = 1"))
    } else {
        CheckResult::fail("partition-of-identity", String::from("Σᵤ Mᵘ ≠ 1"))
    });

    // each Mᵘ is a projector of rank l(bᵘ)
    let mut proj_fail: Vec<&str> = Vec::new();
    let mut trace_fail: Vec<&str> = Vec::new();
    for (c, sub) in contributions.iter().zip(&block.subsections) {
        if c.rational.mul_mat(&c.rational)? != c.rational {
            proj_fail.push(&c.label);
        }
        let l = BigRational::from_integer(BigInt::from(sub.irreducible_brauer_count() as i64));
        if c.rational.trace() != l {
            trace_fail.push(&c.label);
        }
    }
    checks.push(if proj_fail.is_empty() {
        CheckResult::pass("projector", String::from("(Mᵘ)² = Mᵘ for all subsections"))
    } else {
        CheckResult::fail("projector", format!("not idempotent: {}", proj_fail.join(", ")))
    });
    checks.push(if trace_fail.is_empty() {
        CheckResult::pass("trace", String::from("tr Mᵘ = l(bᵘ) for all subsections"))
    } else {
        CheckResult::fail("trace", format!("wrong trace: {}", trace_fail.join(", ")))
    });

    // star congruences: Σᵤ λᵢ(u)·(scale·Mᵘ) ≡ 0 (mod scale)
    if let Some(lambda) = &block.lambda {
        let mut star_fail: Vec<String> = Vec::new();
        for i in 0..lambda.rows() {
            let mut acc = IntMatrix::zeros(k, k);
            for (u, c) in contributions.iter().enumerate() {
                acc = acc.add_mat(&c.scaled.scale(&lambda[(i, u)]))?;
            }
            if !acc.mod_reduce(&block.scale).is_zero() {
                star_fail.push(format!("row {i}"));
            }
        }
        checks.push(if integral_ok && star_fail.is_empty() {
            CheckResult::pass(
                "star-congruence",
                format!("Σᵤ λ(u)·(scale·Mᵘ) ≡ 0 (mod scale) for all {} rows", lambda.rows()),
            )
        } else {
            CheckResult::fail("star-congruence", format!("failing: {}", star_fail.join(", ")))
        });
    }

    Ok(BlockReport { contributions, checks })
}

/// Searches for a permutation `σ` with `b[i][j] = a[σ(i)][σ(j)]`, i.e. a
/// simultaneous row/column permutation carrying `a` to `b`.
///
/// Candidates are pruned by a permutation-invariant row signature (diagonal
/// entry, sorted row multiset) before backtracking.
pub fn simultaneous_permutation(a: &IntMatrix, b: &IntMatrix) -> Option<Vec<usize>> {
    if a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows() {
        return None;
    }
    let n = a.rows();
    let signature = |m: &IntMatrix, i: usize| -> (BigInt, Vec<BigInt>) {
        let mut row: Vec<BigInt> = m.row(i).to_vec();
        row.sort();
        (m[(i, i)].clone(), row)
    };
    let sig_a: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let sig_b: Vec<_> = (0..n).map(|i| signature(b, i)).collect();

    fn dfs(
        a: &IntMatrix,
        b: &IntMatrix,
        sig_a: &[(BigInt, Vec<BigInt>)],
        sig_b: &[(BigInt, Vec<BigInt>)],
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let i = sigma.len();
        if i == a.rows() {
            return true;
        }
        for p in 0..a.rows() {
            if used[p] || sig_a[p] != sig_b[i] {
                continue;
            }
            let consistent = (0..i).all(|j| {
                b[(i, j)] == a[(p, sigma[j])] && b[(j, i)] == a[(sigma[j], p)]
            }) && b[(i, i)] == a[(p, p)];
            if consistent {
                sigma.push(p);
                used[p] = true;
                if dfs(a, b, sig_a, sig_b, sigma, used) {
                    return true;
                }
                used[p] = false;
                sigma.pop();
            }
        }
        false
    }

    let mut sigma = Vec::with_capacity(n);
    let mut used = alloc::vec![false; n];
    if dfs(a, b, &sig_a, &sig_b, &mut sigma, &mut used) {
        Some(sigma)
    } else {
        None
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use num_traits::Zero;
    use proptest::prelude::*;

    /// The four subsection columns of the published case-(I) decomposition
    /// matrix, in display order 1, xy, x, y.
    pub(crate) fn case1_block() -> BlockDatum {
        block_from_matrix(&full_matrix_case1())
    }

    pub(crate) fn full_matrix_case1() -> IntMatrix {
        IntMatrix::from_i64_rows(&[
            &[3, 1, 0, 0, 1, 0, 0, -1],
            &[1, 3, 0, 0, -1, 0, 0, 1],
            &[1, -1, -2, -2, -1, 0, 0, 1],
            &[1, -1, 2, 0, 1, 0, 0, 1],
            &[1, -1, 0, 2, 1, 0, 0, 1],
            &[1, -1, 0, 0, -1, 2, 2, 1],
            &[1, -1, 0, 0, -1, -2, 0, -1],
            &[1, -1, 0, 0, -1, 0, -2, -1],
        ])
    }

    pub(crate) fn full_matrix_case2() -> IntMatrix {
        IntMatrix::from_i64_rows(&[
            &[3, 1, 0, -1, 0, 0, -1, 0],
            &[1, 3, 0, 1, 0, 0, 1, 0],
            &[1, -1, 2, 2, 1, 0, 0, 1],
            &[1, -1, -2, 0, -1, 0, 0, 1],
            &[1, -1, 0, -1, -2, 0, 1, 0],
            &[1, -1, 0, 1, 0, 0, -1, -2],
            &[1, -1, 0, 0, 1, -2, 0, -1],
            &[1, -1, 0, 0, 1, 2, 2, 1],
        ])
    }

    pub(crate) fn full_matrix_case3() -> IntMatrix {
        IntMatrix::from_i64_rows(&[
            &[3, 1, -1, -1, -1, 1, 1, 1],
            &[1, 3, 1, 1, 1, -1, -1, -1],
            &[1, -1, 2, 1, 0, 0, 1, 0],
            &[1, -1, 0, 2, 1, 0, 0, 1],
            &[1, -1, 1, 0, 2, 1, 0, 0],
            &[1, -1, -1, 0, 0, -1, 0, -2],
            &[1, -1, 0, -1, 0, -2, -1, 0],
            &[1, -1, 0, 0, -1, 0, -2, -1],
        ])
    }

    /// Splits a full 8×8 decomposition matrix (columns 1 | xy | x,x,x | y,y,y)
    /// into a block datum with the λ-table in matching column order.
    pub(crate) fn block_from_matrix(g: &IntMatrix) -> BlockDatum {
        let take = |cols: core::ops::Range<usize>| -> IntMatrix {
            let mut m = IntMatrix::zeros(8, cols.len());
            for i in 0..8 {
                for (jj, j) in cols.clone().enumerate() {
                    m[(i, jj)] = g[(i, j)].clone();
                }
            }
            m
        };
        let scale16 = IntMatrix::from_i64_rows(&[&[16]]);
        let cx = crate::plesken::rank3_cartan();
        BlockDatum {
            scale: BigInt::from(16),
            subsections: vec![
                SubsectionDatum { label: "1".to_string(), q: take(0..1), cartan: scale16.clone() },
                SubsectionDatum { label: "xy".to_string(), q: take(1..2), cartan: scale16 },
                SubsectionDatum { label: "x".to_string(), q: take(2..5), cartan: cx.clone() },
                SubsectionDatum { label: "y".to_string(), q: take(5..8), cartan: cx },
            ],
            // rows: the three stable generalized characters; columns follow
            // the subsection order above (values at 1, xy, x, y)
            lambda: Some(IntMatrix::from_i64_rows(&[
                &[4, 0, 4, 0],
                &[4, 0, 0, 4],
                &[0, 4, 4, 0],
            ])),
        }
    }

    #[test]
    fn case1_all_checks_pass() {
        let report = check_block(&case1_block()).unwrap();
        for c in &report.checks {
            assert!(c.pass, "check {} failed: {}", c.name, c.detail);
        }
        assert!(report.all_pass());
        assert_eq!(report.contributions.len(), 4);
    }

    #[test]
    fn case2_and_case3_all_checks_pass() {
        for g in [full_matrix_case2(), full_matrix_case3()] {
            let report = check_block(&block_from_matrix(&g)).unwrap();
            assert!(report.all_pass(), "{:?}", report.checks);
        }
    }

    #[test]
    fn ordinary_contribution_is_rank_one() {
        let block = case1_block();
        let c = contribution(&block.subsections[0], &block.scale).unwrap();
        // Q₁ = (3,1,...,1)ᵀ gives 16M¹ = Q₁Q₁ᵀ
        let q1 = &block.subsections[0].q;
        assert_eq!(c.scaled, q1.mul_mat(&q1.transpose()).unwrap());
        assert!(c.scaled.entries().iter().all(|e| e.is_odd()));
    }

    #[test]
    fn gram_mismatch_is_detected() {
        let mut block = case1_block();
        block.subsections[0].cartan = IntMatrix::from_i64_rows(&[&[15]]);
        assert!(matches!(
            contribution(&block.subsections[0], &block.scale),
            Err(GendecError::GramMismatch { .. })
        ));
        let report = check_block(&block).unwrap();
        assert!(report.checks.iter().any(|c| c.name == "gram" && !c.pass));
    }

    #[test]
    fn broken_orthogonality_is_detected() {
        let mut block = case1_block();
        // swap one subsection column for another: QᵀQ still matches C₁ but
        // orthogonality against the other columns breaks
        block.subsections[1].q = block.subsections[0].q.clone();
        let report = check_block(&block).unwrap();
        assert!(report.checks.iter().any(|c| c.name == "orthogonality" && !c.pass));
        assert!(report.checks.iter().any(|c| c.name == "partition-of-identity" && !c.pass));
    }

    #[test]
    fn assemble_round_trips_and_validates() {
        // splitting a valid decomposition matrix and reassembling is identity
        for g in [full_matrix_case1(), full_matrix_case2(), full_matrix_case3()] {
            assert_eq!(assemble(&block_from_matrix(&g)).unwrap(), g);
        }
        // a single subsection with Q = (2) and C = (4) assembles to itself
        let tiny = BlockDatum {
            scale: BigInt::from(4),
            subsections: vec![SubsectionDatum {
                label: "1".to_string(),
                q: IntMatrix::from_i64_rows(&[&[2]]),
                cartan: IntMatrix::from_i64_rows(&[&[4]]),
            }],
            lambda: None,
        };
        assert_eq!(assemble(&tiny).unwrap(), IntMatrix::from_i64_rows(&[&[2]]));
        // non-square input is rejected
        let mut short = case1_block();
        short.subsections.pop();
        assert!(matches!(assemble(&short), Err(GendecError::Shape(_))));
        // duplicated column: Gram still holds but orthogonality breaks
        let mut dup = case1_block();
        dup.subsections[1].q = dup.subsections[0].q.clone();
        assert!(matches!(
            assemble(&dup),
            Err(GendecError::OrthogonalityViolation { .. })
        ));
    }

    #[test]
    fn permutation_matcher_finds_known_match() {
        let a = IntMatrix::from_i64_rows(&[&[1, 2, 0], &[2, 5, 7], &[0, 7, 9]]);
        // apply σ = (0 2 1) simultaneously
        let perm = [2usize, 0, 1];
        let mut b = IntMatrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                b[(i, j)] = a[(perm[i], perm[j])].clone();
            }
        }
        let sigma = simultaneous_permutation(&a, &b).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(b[(i, j)], a[(sigma[i], sigma[j])]);
            }
        }
        // and a non-match: same multiset of entries, different structure
        let c = IntMatrix::from_i64_rows(&[&[1, 2, 7], &[2, 5, 0], &[7, 0, 9]]);
        assert!(simultaneous_permutation(&a, &c).is_none());
    }

    fn arbitrary_unimodular(l: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec((0..l, 0..l, -1i64..=1), 0..12).prop_map(move |ops| {
            let mut s = IntMatrix::identity(l);
            for (i, j, c) in ops {
                if i != j {
                    s.add_col_multiple(j, i, &BigInt::from(c));
                }
            }
            s
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        /// The contribution matrix is invariant under any change of basic set.
        #[test]
        fn contribution_invariant_under_basic_set_change(
            entries in proptest::collection::vec(-3i64..=3, 15),
            s in arbitrary_unimodular(3),
        ) {
            let mut q = IntMatrix::zeros(5, 3);
            for (idx, e) in entries.iter().enumerate() {
                q[(idx / 3, idx % 3)] = BigInt::from(*e);
            }
            let cartan = q.transpose().mul_mat(&q).unwrap();
            prop_assume!(cartan.det().unwrap() != BigInt::zero());
            let sub = SubsectionDatum { label: "t".to_string(), q, cartan };
            let moved = transform_basic_set(&sub, &s).unwrap();
            prop_assert_eq!(
                contribution_rational(&sub.q, &sub.cartan).unwrap(),
                contribution_rational(&moved.q, &moved.cartan).unwrap()
            );
            // the transformed datum still satisfies the Gram condition
            prop_assert_eq!(moved.q.transpose().mul_mat(&moved.q).unwrap(), moved.cartan);
        }
    }
}
