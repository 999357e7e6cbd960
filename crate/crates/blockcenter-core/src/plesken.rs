//! Enumeration of integral decompositions of a positive definite Gram matrix.
//!
//! Given a Cartan-like matrix `C`, the admissible rows are the integer
//! vectors `r` with `r·C⁻¹·rᵀ ≤ 1` (optionally with the defect-16 parity
//! constraint that `16·r·C⁻¹·rᵀ` is an odd integer), and the objects of
//! interest are matrices `X` with `XᵀX = C` assembled from such rows.  Two
//! decompositions are equivalent when they differ by signed row permutations
//! and by an automorphism `S` of `C` (`SᵀCS = C`) acting on the right; the
//! enumeration reports one canonical representative per orbit.
//!
//! Everything is exact: membership tests use rational arithmetic, orbits are
//! resolved by explicit minimization over the (finite) automorphism group,
//! and no bound is ever rounded optimistically.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::matrix::{Definiteness, IntMatrix, RatMatrix};
use crate::snf::elementary_divisors;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PleskenError {
    /// The Gram matrix must be symmetric positive definite.
    NotPositiveDefinite,
    /// Requested row-contribution multiset cannot sum to the required trace,
    /// or a fixed-shape search came back empty.
    NoSolution(String),
    /// Guard against enumeration requests far outside desk scale.
    UnsupportedGram(String),
}

impl fmt::Display for PleskenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PleskenError::NotPositiveDefinite => write!(f, "Gram matrix is not positive definite"),
            PleskenError::NoSolution(why) => write!(f, "no solution: {why}"),
            PleskenError::UnsupportedGram(why) => write!(f, "unsupported Gram matrix: {why}"),
        }
    }
}

impl core::error::Error for PleskenError {}

/// An admissible row `r` with `r·C⁻¹·rᵀ ≤ 1`, stored sign-normalized (first
/// nonzero entry positive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCandidate {
    pub entries: Vec<BigInt>,
    /// `r·C⁻¹·rᵀ`, exact.
    pub contribution: BigRational,
    /// Numerator of `16·r·C⁻¹·rᵀ` in lowest terms; under the parity
    /// constraint this is the odd integer `16·r·C⁻¹·rᵀ` itself.
    pub contribution_num: BigInt,
}

/// The full (finite) automorphism group `{S : SᵀCS = C}` of a positive
/// definite Gram matrix.
#[derive(Debug, Clone)]
pub struct GramAutGroup {
    elements: Vec<IntMatrix>,
}

impl GramAutGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }
}

/// One orbit of decompositions `XᵀX = C` under signed row permutations and
/// `Aut(C)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramSolutionClass {
    /// Orbit minimum: rows sign-normalized, sorted, minimized over `Aut(C)`.
    pub canonical: IntMatrix,
    /// Elementary divisors of the canonical matrix (an orbit invariant).
    pub elementary_divisors: Vec<BigInt>,
    /// Row contributions in nonincreasing order (an orbit invariant).
    pub contributions: Vec<BigRational>,
    pub label: String,
}

/// The rank-3 Cartan matrix `4·(J + 1)` of the defect-16 subsections; the
/// 16-row ordinary decomposition search is specific to it.
pub fn rank3_cartan() -> IntMatrix {
    IntMatrix::from_i64_rows(&[&[8, 4, 4], &[4, 8, 4], &[4, 4, 8]])
}

fn contribution_of(r: &[BigInt], c_inv: &RatMatrix) -> BigRational {
    let l = r.len();
    let mut q = BigRational::zero();
    for i in 0..l {
        if r[i].is_zero() {
            continue;
        }
        let ri = BigRational::from_integer(r[i].clone());
        for j in 0..l {
            if r[j].is_zero() {
                continue;
            }
            q += &ri * &c_inv[(i, j)] * BigRational::from_integer(r[j].clone());
        }
    }
    q
}

fn sign_normalize(v: &mut [BigInt]) {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                let t = core::mem::take(x);
                *x = -t;
            }
        }
    }
}

fn validate_gram(c: &IntMatrix) -> Result<(), PleskenError> {
    if !c.is_symmetric() || !c.is_positive_definite() {
        return Err(PleskenError::NotPositiveDefinite);
    }
    Ok(())
}

/// All admissible rows for `c`, one representative per global-sign pair,
/// sorted lexicographically.
///
/// With `parity_required` the defect-16 constraint is imposed: a row is kept
/// only if `16·r·C⁻¹·rᵀ` is an odd integer.  Without it every row with
/// `r·C⁻¹·rᵀ ≤ 1` is returned, including the zero row.
pub fn enumerate_rows(c: &IntMatrix, parity_required: bool) -> Result<Vec<RowCandidate>, PleskenError> {
    validate_gram(c)?;
    let l = c.rows();
    let c_inv = c.to_rational().inverse().expect("positive definite is invertible");

    // r·C⁻¹·rᵀ ≤ 1 confines rᵢ² to at most cᵢᵢ (the form's dual bound).
    let bounds: Vec<BigInt> = (0..l).map(|i| c[(i, i)].sqrt()).collect();
    let mut volume = BigInt::one();
    for b in &bounds {
        volume *= BigInt::from(2) * b + 1;
    }
    if volume > BigInt::from(10_000_000u64) {
        return Err(PleskenError::UnsupportedGram(format!(
            "candidate box of size {volume} exceeds the desk-scale guard"
        )));
    }

    let sixteen = BigRational::from_integer(BigInt::from(16));
    let mut seen: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let mut cursor: Vec<BigInt> = bounds.iter().map(|b| -b.clone()).collect();
    'outer: loop {
        let q = contribution_of(&cursor, &c_inv);
        if q <= BigRational::one() {
            let scaled = &q * &sixteen;
            let keep = if parity_required {
                scaled.is_integer() && scaled.to_integer().is_odd()
            } else {
                true
            };
            if keep {
                let mut rep = cursor.clone();
                sign_normalize(&mut rep);
                seen.insert(rep);
            }
        }
        // odometer step
        for i in (0..l).rev() {
            if cursor[i] < bounds[i] {
                cursor[i] += 1;
                for (j, x) in cursor.iter_mut().enumerate().skip(i + 1) {
                    *x = -bounds[j].clone();
                }
                continue 'outer;
            }
        }
        break;
    }

    Ok(seen
        .into_iter()
        .map(|entries| {
            let q = contribution_of(&entries, &c_inv);
            let scaled = &q * &sixteen;
            RowCandidate {
                entries,
                contribution_num: scaled.numer().clone(),
                contribution: q,
            }
        })
        .collect())
}

/// All unimodular `S` with `SᵀCS = C`, by column-wise backtracking over the
/// finitely many vectors of each required `C`-norm.
pub fn gram_automorphisms(c: &IntMatrix) -> Result<GramAutGroup, PleskenError> {
    validate_gram(c)?;
    let l = c.rows();
    let c_inv = c.to_rational().inverse().expect("positive definite is invertible");

    // Candidate columns for position j: vᵀCv = c_jj.  Over the ellipsoid
    // vᵀCv ≤ m the coordinate vᵢ² is bounded by m·(C⁻¹)ᵢᵢ.
    let mut norm_candidates: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(l);
    for j in 0..l {
        let m = &c[(j, j)];
        let mut cands = Vec::new();
        let bounds: Vec<BigInt> = (0..l)
            .map(|i| {
                let cap = BigRational::from_integer(m.clone()) * &c_inv[(i, i)];
                cap.floor().to_integer().sqrt()
            })
            .collect();
        let mut cursor: Vec<BigInt> = bounds.iter().map(|b| -b.clone()).collect();
        'outer: loop {
            // vᵀCv computed directly over Z
            let mut q = BigInt::zero();
            for a in 0..l {
                for b in 0..l {
                    q += &cursor[a] * &c[(a, b)] * &cursor[b];
                }
            }
            if &q == m {
                cands.push(cursor.clone());
            }
            for i in (0..l).rev() {
                if cursor[i] < bounds[i] {
                    cursor[i] += 1;
                    for (t, x) in cursor.iter_mut().enumerate().skip(i + 1) {
                        *x = -bounds[t].clone();
                    }
                    continue 'outer;
                }
            }
            break;
        }
        norm_candidates.push(cands);
    }

    let mut elements = Vec::new();
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    fn dfs(
        c: &IntMatrix,
        norm_candidates: &[Vec<Vec<BigInt>>],
        cols: &mut Vec<Vec<BigInt>>,
        elements: &mut Vec<IntMatrix>,
    ) {
        let l = c.rows();
        let j = cols.len();
        if j == l {
            let mut s = IntMatrix::zeros(l, l);
            for (jj, col) in cols.iter().enumerate() {
                for i in 0..l {
                    s[(i, jj)] = col[i].clone();
                }
            }
            debug_assert_eq!(&(&s.transpose() * c) * &s, *c);
            elements.push(s);
            return;
        }
        'cand: for v in &norm_candidates[j] {
            // pairwise inner products against the chosen columns
            for (jj, u) in cols.iter().enumerate() {
                let mut ip = BigInt::zero();
                for a in 0..l {
                    for b in 0..l {
                        ip += &u[a] * &c[(a, b)] * &v[b];
                    }
                }
                if ip != c[(jj, j)] {
                    continue 'cand;
                }
            }
            cols.push(v.clone());
            dfs(c, norm_candidates, cols, elements);
            cols.pop();
        }
    }
    dfs(c, &norm_candidates, &mut cols, &mut elements);

    // SᵀCS = C forces det(S)² = 1, so unimodularity is automatic; assert in
    // debug builds all the same.
    debug_assert!(elements
        .iter()
        .all(|s| s.det().map(|d| d.abs() == BigInt::one()).unwrap_or(false)));

    Ok(GramAutGroup { elements })
}

/// Rows sign-normalized and sorted — the representative of the orbit of `x`
/// under signed row permutations only.
pub fn normalize_rows(x: &IntMatrix) -> IntMatrix {
    let mut rows: Vec<Vec<BigInt>> = (0..x.rows()).map(|i| x.row(i).to_vec()).collect();
    for r in &mut rows {
        sign_normalize(r);
    }
    rows.sort();
    let mut out = IntMatrix::zeros(x.rows(), x.cols());
    for (i, r) in rows.into_iter().enumerate() {
        for (j, v) in r.into_iter().enumerate() {
            out[(i, j)] = v;
        }
    }
    out
}

/// The minimum of the orbit of `x` under signed row permutations and the
/// given automorphism group, in row-major lexicographic order.
pub fn canonical_form(x: &IntMatrix, aut: &GramAutGroup) -> IntMatrix {
    let mut best: Option<IntMatrix> = None;
    for s in &aut.elements {
        let xs = x.mul_mat(s).expect("automorphism dimension");
        let cand = normalize_rows(&xs);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.expect("automorphism group contains the identity")
}

/// Enumerates all `k`-row decompositions `XᵀX = c` up to equivalence.
///
/// `row_constraints`, if given, fixes the multiset of row contributions
/// (length `k`); its sum must equal the rank of `c` (the trace of the
/// contribution matrix), otherwise `NoSolution` is returned.  Classes come
/// back sorted by elementary divisors, then by canonical representative.
pub fn enumerate_solutions(
    c: &IntMatrix,
    k: usize,
    row_constraints: Option<&[BigRational]>,
) -> Result<Vec<GramSolutionClass>, PleskenError> {
    validate_gram(c)?;
    let l = c.rows();
    let aut = gram_automorphisms(c)?;

    let mut candidates = enumerate_rows(c, false)?;
    // nonincreasing contribution, lexicographic within a contribution level
    candidates.sort_by(|a, b| {
        b.contribution
            .cmp(&a.contribution)
            .then_with(|| a.entries.cmp(&b.entries))
    });

    // Plan the search as blocks of candidates sharing one contribution value.
    struct Block {
        indices: Vec<usize>,
        needed: usize,
    }
    let blocks: Vec<Block> = match row_constraints {
        Some(constraints) => {
            if constraints.len() != k {
                return Err(PleskenError::NoSolution(format!(
                    "expected {k} row contributions, got {}",
                    constraints.len()
                )));
            }
            let total: BigRational = constraints.iter().cloned().sum();
            if total != BigRational::from_integer(BigInt::from(l as i64)) {
                return Err(PleskenError::NoSolution(format!(
                    "row contributions sum to {total}, but the contribution matrix has trace {l}"
                )));
            }
            let mut wanted: Vec<(BigRational, usize)> = Vec::new();
            let mut sorted = constraints.to_vec();
            sorted.sort_by(|a, b| b.cmp(a));
            for q in sorted {
                match wanted.last_mut() {
                    Some((v, n)) if *v == q => *n += 1,
                    _ => wanted.push((q, 1)),
                }
            }
            wanted
                .into_iter()
                .map(|(q, needed)| Block {
                    indices: (0..candidates.len())
                        .filter(|&i| candidates[i].contribution == q)
                        .collect(),
                    needed,
                })
                .collect()
        }
        None => vec![Block { indices: (0..candidates.len()).collect(), needed: k }],
    };

    let c_rat = c.to_rational();
    let mut found: BTreeSet<IntMatrix> = BTreeSet::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(k);

    // Depth-first over nondecreasing candidate positions within each block,
    // pruning on positive semidefiniteness of the remaining Gram matrix.
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        candidates: &[RowCandidate],
        blocks: &[Block],
        block_idx: usize,
        from_pos: usize,
        left_in_block: usize,
        remaining: &RatMatrix,
        chosen: &mut Vec<usize>,
        k: usize,
        l: usize,
        aut: &GramAutGroup,
        found: &mut BTreeSet<IntMatrix>,
    ) {
        if left_in_block == 0 {
            let next = block_idx + 1;
            if next == blocks.len() {
                if chosen.len() == k && remaining.is_zero() {
                    let mut x = IntMatrix::zeros(k, l);
                    for (row, &ci) in chosen.iter().enumerate() {
                        for (col, v) in candidates[ci].entries.iter().enumerate() {
                            x[(row, col)] = v.clone();
                        }
                    }
                    found.insert(canonical_form(&x, aut));
                }
                return;
            }
            dfs(candidates, blocks, next, 0, blocks[next].needed, remaining, chosen, k, l, aut, found);
            return;
        }
        let block = &blocks[block_idx];
        // candidates may repeat: recursion below keeps `pos`, not `pos + 1`
        for pos in from_pos..block.indices.len() {
            let ci = block.indices[pos];
            let row = &candidates[ci].entries;
            // remaining Gram after subtracting rᵀr must stay PSD
            let mut next = remaining.clone();
            for a in 0..l {
                for b in 0..l {
                    let t = BigRational::from_integer(&row[a] * &row[b]);
                    next[(a, b)] -= t;
                }
            }
            if next.definiteness() != Definiteness::Indefinite {
                chosen.push(ci);
                dfs(candidates, blocks, block_idx, pos, left_in_block - 1, &next, chosen, k, l, aut, found);
                chosen.pop();
            }
        }
    }

    dfs(
        &candidates,
        &blocks,
        0,
        0,
        blocks.first().map_or(0, |b| b.needed),
        &c_rat,
        &mut chosen,
        k,
        l,
        &aut,
        &mut found,
    );

    let mut classes: Vec<GramSolutionClass> = found
        .into_iter()
        .map(|canonical| {
            let eldivs = elementary_divisors(&canonical);
            let c_inv = c.to_rational().inverse().expect("positive definite");
            let mut contributions: Vec<BigRational> = (0..canonical.rows())
                .map(|i| contribution_of(canonical.row(i), &c_inv))
                .collect();
            contributions.sort_by(|a, b| b.cmp(a));
            let label = format!(
                "eldiv({})",
                eldivs.iter().map(|d| format!("{d}")).collect::<Vec<_>>().join(",")
            );
            GramSolutionClass { canonical, elementary_divisors: eldivs, contributions, label }
        })
        .collect();
    classes.sort_by(|a, b| {
        a.elementary_divisors
            .cmp(&b.elementary_divisors)
            .then_with(|| a.canonical.cmp(&b.canonical))
    });
    Ok(classes)
}

/// The unique 16-row decomposition of the rank-3 Cartan matrix with all row
/// contributions equal to 3/16 (the ordinary decomposition shape).
pub fn enumerate_ordinary_16x3(c: &IntMatrix) -> Result<GramSolutionClass, PleskenError> {
    if *c != rank3_cartan() {
        return Err(PleskenError::UnsupportedGram(
            "the 16-row ordinary search is specific to the Cartan matrix 4(J+1) of rank 3".into(),
        ));
    }
    let q = BigRational::new(BigInt::from(3), BigInt::from(16));
    let constraints = vec![q; 16];
    let classes = enumerate_solutions(c, 16, Some(&constraints))?;
    match classes.len() {
        1 => Ok(classes.into_iter().next().expect("length checked")),
        0 => Err(PleskenError::NoSolution("no 16-row decomposition with all contributions 3/16".into())),
        n => Err(PleskenError::NoSolution(format!(
            "expected a unique class, found {n}"
        ))),
    }
}
