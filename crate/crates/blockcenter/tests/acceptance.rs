//! Acceptance suite: one test per published claim the toolkit must
//! reproduce.  Every comparison is in exact arithmetic (zero tolerance), and
//! each nontrivial claim is checked against an independent oracle
//! implemented directly in this file rather than against the library's own
//! machinery.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use blockcenter::data::DataSource;
use blockcenter::verify;
use blockcenter_core::fdalgebra::{
    fib_probe_algebra, klein_four_group_algebra, quaternion_group_algebra,
    truncated_polynomial_algebra, w_table_algebra,
};
use blockcenter_core::gendec::contribution_rational;
use blockcenter_core::matrix::format_rational;
use blockcenter_core::plesken::rank3_cartan;
use blockcenter_core::rng::SplitMix64;
use blockcenter_core::{
    elementary_divisors, enumerate_ordinary_16x3, enumerate_rows, enumerate_solutions,
    fibonacci_certificate, hypothesis_check, integer_kernel_basis, lattices_equal,
    match_presentation, minimal_resolution_dims, smith_normal_form, verify_growth_hypothesis,
    verify_isomorphism, CenterLattice, FinDimAlgebra, HypothesisVerdict, IntMatrix, Presentation,
    RatMatrix, Side, Subspace,
};

fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn run_cli(args: &[&str]) -> std::process::Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_blockcenter"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Criterion 1 — row enumeration: the admissible rows for the rank-3 Cartan
/// matrix form exactly five sign/permutation classes with the published
/// contributions, in under a second.
#[test]
fn criterion_01_row_enumeration() {
    let start = Instant::now();
    let src = DataSource::default();
    let c = src.matrix("cartan_x.mat").unwrap();
    assert_eq!(c, rank3_cartan(), "bundled Cartan matrix");

    let rows = enumerate_rows(&c, true).unwrap();
    let mut classes: BTreeMap<Vec<BigInt>, BigRational> = BTreeMap::new();
    for cand in &rows {
        let canon = verify::row_orbit_canonical(&cand.entries);
        if let Some(previous) = classes.insert(canon, cand.contribution.clone()) {
            assert_eq!(previous, cand.contribution, "contribution is an orbit invariant");
        }
    }
    let expected: BTreeMap<Vec<BigInt>, BigRational> = [
        (vec![1, 0, 0], frac(3, 16)),
        (vec![1, 1, 1], frac(3, 16)),
        (vec![0, 1, 2], frac(11, 16)),
        (vec![1, 1, -1], frac(11, 16)),
        (vec![1, 2, 2], frac(11, 16)),
    ]
    .into_iter()
    .map(|(v, q)| {
        (verify::row_orbit_canonical(&v.into_iter().map(BigInt::from).collect::<Vec<_>>()), q)
    })
    .collect();
    assert_eq!(classes, expected, "five classes with contributions 3/16 ×2, 11/16 ×3");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "runtime {elapsed:?} under 1 s");

    let out = run_cli(&["solve-gram", "--gram", "data/cartan_x.mat", "--rows", "8"]);
    assert!(out.status.success(), "solve-gram exits 0");
    println!("criterion 1 PASS — 5 row classes with published contributions in {elapsed:?}");
}

/// All integer vectors admissible as rows: 16·vᵀC⁻¹v ∈ {3, 11}.
fn oracle_admissible_rows() -> Vec<[i64; 3]> {
    let a16 = [[3i64, -1, -1], [-1, 3, -1], [-1, -1, 3]];
    let q16 = |v: &[i64; 3]| -> i64 {
        let mut s = 0;
        for a in 0..3 {
            for b in 0..3 {
                s += v[a] * a16[a][b] * v[b];
            }
        }
        s
    };
    let mut rows = Vec::new();
    for x in -3..=3i64 {
        for y in -3..=3i64 {
            for z in -3..=3i64 {
                let v = [x, y, z];
                if matches!(q16(&v), 3 | 11) {
                    rows.push(v);
                }
            }
        }
    }
    rows.sort();
    rows
}

/// All integer matrices A with Aᵀ·C·A = C for the rank-3 Cartan matrix:
/// columns are vectors of C-norm 8 (there are 12 — the form is a rescaled
/// A₃ lattice), tried in all combinations.
fn oracle_gram_automorphisms() -> Vec<[[i64; 3]; 3]> {
    let c = [[8i64, 4, 4], [4, 8, 4], [4, 4, 8]];
    let norm = |v: &[i64; 3]| -> i64 {
        let mut s = 0;
        for a in 0..3 {
            for b in 0..3 {
                s += v[a] * c[a][b] * v[b];
            }
        }
        s
    };
    let mut roots = Vec::new();
    for x in -2..=2i64 {
        for y in -2..=2i64 {
            for z in -2..=2i64 {
                if norm(&[x, y, z]) == 8 {
                    roots.push([x, y, z]);
                }
            }
        }
    }
    assert_eq!(roots.len(), 12, "twelve vectors of norm 8");
    let mut auts = Vec::new();
    for c0 in &roots {
        for c1 in &roots {
            for c2 in &roots {
                let a = [[c0[0], c1[0], c2[0]], [c0[1], c1[1], c2[1]], [c0[2], c1[2], c2[2]]];
                let mut ok = true;
                for r in 0..3 {
                    for s in 0..3 {
                        let mut e = 0;
                        for u in 0..3 {
                            for v in 0..3 {
                                e += a[u][r] * c[u][v] * a[v][s];
                            }
                        }
                        ok &= e == c[r][s];
                    }
                }
                if ok {
                    auts.push(a);
                }
            }
        }
    }
    auts
}

/// Canonicalizes an 8×3 solution under signed row permutations and Gram
/// automorphisms: minimize over automorphisms, sign-normalizing and sorting
/// the rows.
fn oracle_canonical(solution: &[[i64; 3]; 8], auts: &[[[i64; 3]; 3]]) -> Vec<[i64; 3]> {
    let mut best: Option<Vec<[i64; 3]>> = None;
    for a in auts {
        let mut rows: Vec<[i64; 3]> = solution
            .iter()
            .map(|v| {
                let mut w = [0i64; 3];
                for (j, slot) in w.iter_mut().enumerate() {
                    *slot = (0..3).map(|t| v[t] * a[t][j]).sum();
                }
                if let Some(first) = w.iter().find(|&&x| x != 0) {
                    if *first < 0 {
                        for x in &mut w {
                            *x = -*x;
                        }
                    }
                }
                w
            })
            .collect();
        rows.sort();
        if best.as_ref().is_none_or(|b| rows < *b) {
            best = Some(rows);
        }
    }
    best.expect("automorphism group is nonempty")
}

/// Criterion 2 — solution classification: exactly three orbit classes of
/// 8-row decompositions with the published contribution multiset, with
/// elementary divisors (1,2,2), (1,1,2), (1,1,1); a brute-force search
/// independent of the library's backtracking confirms there is no fourth
/// class.  Under a minute.
#[test]
fn criterion_02_solution_classification() {
    let start = Instant::now();
    let c = rank3_cartan();
    let mut constraints = vec![frac(3, 16); 5];
    constraints.extend(vec![frac(11, 16); 3]);
    let classes = enumerate_solutions(&c, 8, Some(&constraints)).unwrap();
    assert_eq!(classes.len(), 3, "three solution classes");
    let eldivs: BTreeSet<Vec<BigInt>> =
        classes.iter().map(|cl| cl.elementary_divisors.clone()).collect();
    let expected: BTreeSet<Vec<BigInt>> = [[1, 2, 2], [1, 1, 2], [1, 1, 1]]
        .iter()
        .map(|d| d.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    assert_eq!(eldivs, expected, "elementary divisor triples");

    // ---- independent brute force over nondecreasing row 8-tuples ----
    let rows = oracle_admissible_rows();
    let a16 = [[3i64, -1, -1], [-1, 3, -1], [-1, -1, 3]];
    let q16 = |v: &[i64; 3]| -> i64 {
        let mut s = 0;
        for a in 0..3 {
            for b in 0..3 {
                s += v[a] * a16[a][b] * v[b];
            }
        }
        s
    };
    let target = [[8i64, 4, 4], [4, 8, 4], [4, 4, 8]];
    // depth-first over row indices, nondecreasing so each solution appears
    // once per row multiset
    struct Search {
        rows: Vec<[i64; 3]>,
        weights: Vec<i64>,
        target: [[i64; 3]; 3],
        chosen: [[i64; 3]; 8],
        out: Vec<[[i64; 3]; 8]>,
    }
    impl Search {
        fn go(
            &mut self,
            depth: usize,
            min_index: usize,
            gram: [[i64; 3]; 3],
            light_left: i64,
            heavy_left: i64,
        ) {
            if depth == 8 {
                if gram == self.target {
                    self.out.push(self.chosen);
                }
                return;
            }
            for idx in min_index..self.rows.len() {
                let row = self.rows[idx];
                let weight = self.weights[idx];
                if weight == 3 && light_left == 0 {
                    continue;
                }
                if weight == 11 && heavy_left == 0 {
                    continue;
                }
                let mut next = gram;
                let mut feasible = true;
                for a in 0..3 {
                    for b in 0..3 {
                        next[a][b] += row[a] * row[b];
                    }
                    feasible &= next[a][a] <= self.target[a][a];
                }
                if !feasible {
                    continue;
                }
                self.chosen[depth] = row;
                self.go(
                    depth + 1,
                    idx,
                    next,
                    light_left - i64::from(weight == 3),
                    heavy_left - i64::from(weight == 11),
                );
            }
        }
    }
    let mut search = Search {
        weights: rows.iter().map(&q16).collect(),
        rows,
        target,
        chosen: [[0i64; 3]; 8],
        out: Vec::new(),
    };
    search.go(0, 0, [[0; 3]; 3], 5, 3);
    let solutions = search.out;
    assert!(!solutions.is_empty(), "brute force finds solutions");

    let auts = oracle_gram_automorphisms();
    assert_eq!(auts.len(), 48, "full automorphism group of the form (A₃ type)");
    let mut orbit_reps: BTreeSet<Vec<[i64; 3]>> = BTreeSet::new();
    for sol in &solutions {
        orbit_reps.insert(oracle_canonical(sol, &auts));
    }
    assert_eq!(orbit_reps.len(), 3, "brute force confirms no fourth class");

    // the published representatives land in three distinct oracle orbits
    // with the published elementary divisors
    let src = DataSource::default();
    let mut published_orbits = BTreeSet::new();
    let mut published_divs = BTreeSet::new();
    for case in 1..=3 {
        let m = src.matrix(&format!("solution_case{case}.mat")).unwrap();
        let mut sol = [[0i64; 3]; 8];
        for (i, row) in sol.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = i64::try_from(&m[(i, j)]).unwrap();
            }
        }
        let canon = oracle_canonical(&sol, &auts);
        assert!(orbit_reps.contains(&canon), "published case ({case}) is a brute-force orbit");
        published_orbits.insert(canon);
        published_divs.insert(elementary_divisors(&m));
    }
    assert_eq!(published_orbits.len(), 3, "published representatives hit all three orbits");
    assert_eq!(published_divs, expected, "published divisors");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "runtime {elapsed:?} under 60 s");
    println!(
        "criterion 2 PASS — 3 classes, {} brute-force solutions, no fourth class, {elapsed:?}",
        solutions.len()
    );
}

/// Criterion 3 — contribution matrices: 16·M for each solution class matches
/// the published 8×8 display up to one simultaneous row/column permutation,
/// and all 192 entries are odd.
#[test]
fn criterion_03_contribution_matrices() {
    let src = DataSource::default();
    let a16 = [[3i64, -1, -1], [-1, 3, -1], [-1, -1, 3]];
    let mut odd_total = 0usize;
    for case in 1..=3 {
        let q = src.matrix(&format!("solution_case{case}.mat")).unwrap();
        // independent computation 16M = Q·(16C⁻¹)·Qᵀ in plain integers
        let mut m = [[0i64; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let mut s = 0;
                for a in 0..3 {
                    for b in 0..3 {
                        s += i64::try_from(&q[(i, a)]).unwrap()
                            * a16[a][b]
                            * i64::try_from(&q[(j, b)]).unwrap();
                    }
                }
                m[i][j] = s;
            }
        }
        // agrees with the library's rational computation
        let lib = contribution_rational(&q, &rank3_cartan()).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(
                    &lib[(i, j)] * BigRational::from_integer(16.into()),
                    BigRational::from_integer(m[i][j].into()),
                    "case {case} entry ({i},{j})"
                );
            }
        }
        let display = src.matrix(&format!("contrib16_x_case{case}.mat")).unwrap();
        let mut d = [[0i64; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                d[i][j] = i64::try_from(&display[(i, j)]).unwrap();
            }
        }
        // brute-force simultaneous permutation search
        let mut perm = [0usize; 8];
        let mut used = [false; 8];
        fn place(
            m: &[[i64; 8]; 8],
            d: &[[i64; 8]; 8],
            perm: &mut [usize; 8],
            used: &mut [bool; 8],
            i: usize,
        ) -> bool {
            if i == 8 {
                return true;
            }
            for target in 0..8 {
                if used[target] || m[target][target] != d[i][i] {
                    continue;
                }
                let consistent =
                    (0..i).all(|k| m[target][perm[k]] == d[i][k] && m[perm[k]][target] == d[k][i]);
                if !consistent {
                    continue;
                }
                perm[i] = target;
                used[target] = true;
                if place(m, d, perm, used, i + 1) {
                    return true;
                }
                used[target] = false;
            }
            false
        }
        assert!(
            place(&m, &d, &mut perm, &mut used, 0),
            "case ({case}) display is a simultaneous permutation of the computed 16M"
        );
        odd_total += m.iter().flatten().filter(|e| *e % 2 != 0).count();
    }
    assert_eq!(odd_total, 192, "all 192 entries odd");
    println!("criterion 3 PASS — three displays matched, 192/192 odd entries");
}

/// Criterion 4 — block constraints, checked by explicit matrix arithmetic
/// (not via the library's audit): orthogonality, Gram identities, the
/// partition of identity, and the three mod-4 congruences.
#[test]
fn criterion_04_block_constraints() {
    let src = DataSource::default();
    for case in 1..=3 {
        let block = src.block(&format!("case{case}.block")).unwrap();
        assert_eq!(block.scale, BigInt::from(16));
        let subs = &block.subsections;
        assert_eq!(subs.len(), 4);
        // Qᵤᵀ·Qᵥ = 0 for u ≠ v and Qᵤᵀ·Qᵤ = Cᵤ
        for u in subs {
            assert_eq!(
                u.q.transpose().mul_mat(&u.q).unwrap(),
                u.cartan,
                "case {case} subsection {}: QᵀQ = C",
                u.label
            );
            for v in subs {
                if u.label != v.label {
                    assert!(
                        u.q.transpose().mul_mat(&v.q).unwrap().is_zero(),
                        "case {case}: Q({})ᵀ·Q({}) = 0",
                        u.label,
                        v.label
                    );
                }
            }
        }
        // Mᵘ = Qᵘ·Cᵘ⁻¹·Qᵘᵀ over the rationals, straight from the definition
        let m_of = |label: &str| -> RatMatrix {
            let sub = subs.iter().find(|s| s.label == label).unwrap();
            let q = sub.q.to_rational();
            let c_inv = sub.cartan.to_rational().inverse().unwrap();
            q.mul_mat(&c_inv).unwrap().mul_mat(&q.transpose()).unwrap()
        };
        let (m1, mx, my, mxy) = (m_of("1"), m_of("x"), m_of("y"), m_of("xy"));
        let sum = m1
            .add_mat(&mx)
            .and_then(|s| s.add_mat(&my))
            .and_then(|s| s.add_mat(&mxy))
            .unwrap();
        assert_eq!(sum, RatMatrix::identity(8), "case {case}: Σ Mᵘ = 1");
        // 16M¹+16Mˣ ≡ 16M¹+16Mʸ ≡ 16Mˣ+16Mˣʸ ≡ 0 (mod 4)
        let sixteen = BigRational::from_integer(16.into());
        let scaled = |m: &RatMatrix| m.scale(&sixteen).to_integral().unwrap();
        let four = BigInt::from(4);
        for (a, b, name) in [
            (&m1, &mx, "16M¹+16Mˣ"),
            (&m1, &my, "16M¹+16Mʸ"),
            (&mx, &mxy, "16Mˣ+16Mˣʸ"),
        ] {
            let total = scaled(a).add_mat(&scaled(b)).unwrap();
            assert!(
                total.mod_reduce(&four).is_zero(),
                "case {case}: {name} ≡ 0 (mod 4)"
            );
        }
    }
    println!("criterion 4 PASS — orthogonality, Gram, ΣM=1, and mod-4 congruences for all cases");
}

/// Criterion 5 — center lattice for case (I): the computed lattice of
/// central diagonals equals the published table, with both transition
/// matrices integral (hence unimodular).  Under ten seconds.
#[test]
fn criterion_05_center_lattice_case_one() {
    let start = Instant::now();
    let src = DataSource::default();
    let g = src.matrix("q_case1.mat").unwrap();
    let lattice = CenterLattice::from_decomposition_matrix(&g).unwrap();
    assert_eq!(lattice.rank(), 8);
    let published = src.matrix("center_diag_case1.mat").unwrap();

    // independent transition-matrix arithmetic
    let a = lattice.basis_diagonals.to_rational();
    let b = published.to_rational();
    let a_to_b = a.inverse().unwrap().mul_mat(&b).unwrap().to_integral().unwrap();
    let b_to_a = b.inverse().unwrap().mul_mat(&a).unwrap().to_integral().unwrap();
    let det_ab = a_to_b.det().unwrap();
    let det_ba = b_to_a.det().unwrap();
    assert!(det_ab.abs().is_one() && det_ba.abs().is_one(), "transitions unimodular");
    assert_eq!(
        a_to_b.mul_mat(&b_to_a).unwrap(),
        IntMatrix::identity(8),
        "transitions are mutually inverse"
    );
    assert!(lattices_equal(&lattice.basis_diagonals, &published).unwrap());

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "runtime {elapsed:?} under 10 s");
    println!("criterion 5 PASS — case (I) lattice equals the published table, {elapsed:?}");
}

/// Criterion 6 — classification: cases (I) and (II) reduce to the first
/// model presentation with verified witnesses, case (III) to the second;
/// dim J² (1 vs 3) separates the types; the matched centers have Loewy
/// length 3.
#[test]
fn criterion_06_classification() {
    let src = DataSource::default();
    let mut j2_dims = Vec::new();
    for case in 1..=3 {
        let g = src.matrix(&format!("q_case{case}.mat")).unwrap();
        let alg = CenterLattice::from_decomposition_matrix(&g)
            .unwrap()
            .reduce_mod_p(2)
            .unwrap()
            .algebra;
        let (expected, other) = if case == 3 {
            (Presentation::CaseThree, Presentation::CaseOneTwo)
        } else {
            (Presentation::CaseOneTwo, Presentation::CaseThree)
        };
        let matched = match_presentation(&alg, expected).unwrap().unwrap_or_else(|| {
            panic!("case ({case}) must match {expected:?}");
        });
        assert!(
            verify_isomorphism(&alg, &expected.model(), &matched.images),
            "case ({case}): witness map is an isomorphism"
        );
        assert!(
            match_presentation(&alg, other).unwrap().is_none(),
            "case ({case}) must not match {other:?}"
        );
        let j = alg.radical().unwrap();
        j2_dims.push(alg.product_space(&j, &j).dim());
        if case != 3 {
            assert_eq!(alg.loewy_length().unwrap(), 3, "case ({case}) center Loewy length");
        }
    }
    assert_eq!(j2_dims, [1, 1, 3], "dim J² distinguishes the isomorphism types");
    assert_eq!(Presentation::CaseOneTwo.model().loewy_length().unwrap(), 3);
    println!("criterion 6 PASS — presentations matched with witnesses, dim J² = [1, 1, 3]");
}

/// Criterion 7 — algebra engine on the 8-dimensional multiplication table:
/// radical dimension 7, socle = J² spanned by the last three basis vectors,
/// T₁ = J against an exhaustive 2⁸ oracle, and U^⊥⊥ = U on random subspaces
/// of the shipped symmetric algebras.
#[test]
fn criterion_07_w_table_and_forms() {
    let alg = w_table_algebra();
    let j = alg.radical().unwrap();
    assert_eq!(j.dim(), 7, "dim J = 7");
    let j2 = alg.product_space(&j, &j);
    let socle = alg.socle(Side::TwoSided).unwrap();
    let expected =
        Subspace::from_vectors(2, 8, &[alg.basis_vec(5), alg.basis_vec(6), alg.basis_vec(7)]);
    assert_eq!(j2, expected, "J² is the span of the last three basis vectors");
    assert_eq!(socle, expected, "socle = J²");

    // exhaustive T₁ oracle: in characteristic 2 the commutator space here is
    // zero, so T₁ is literally {a : a² = 0}, a set of 2⁸ candidates
    assert!(alg.commutator_space().is_zero());
    let t1 = alg.kulshammer_t(1).unwrap();
    let mut squares_to_zero = 0usize;
    for code in 0..1u32 << 8 {
        let a: Vec<u64> = (0..8).map(|i| u64::from(code >> i & 1)).collect();
        let square_zero = alg.mul(&a, &a).iter().all(|&c| c == 0);
        if square_zero {
            squares_to_zero += 1;
        }
        assert_eq!(square_zero, j.contains(&a), "membership agrees with J");
        assert_eq!(square_zero, t1.contains(&a), "membership agrees with T₁");
    }
    assert_eq!(squares_to_zero, 128, "T₁ has 2⁷ elements");
    assert_eq!(t1, j, "T₁ = J");

    // perp identities on the shipped symmetric algebras
    let symmetric: Vec<(&str, FinDimAlgebra)> = vec![
        ("dual numbers", truncated_polynomial_algebra(2, 2)),
        ("truncated length 4", truncated_polynomial_algebra(2, 4)),
        ("Klein four", klein_four_group_algebra()),
        ("quaternion", quaternion_group_algebra()),
    ];
    let mut rng = SplitMix64::new(0x7e5f_0a11_c0de_5eed);
    let mut checked = 0usize;
    for (name, a) in &symmetric {
        let form = a.find_symmetrizing_form().unwrap();
        assert!(a.is_symmetrizing(&form), "{name}: form is symmetrizing");
        for _ in 0..50 {
            let count = (rng.next_u64() % a.dim() as u64) as usize + 1;
            let vectors: Vec<Vec<u64>> = (0..count)
                .map(|_| (0..a.dim()).map(|_| rng.next_u64() % 2).collect())
                .collect();
            let u = Subspace::from_vectors(2, a.dim(), &vectors);
            let perp = a.perp_space(&form, &u).unwrap();
            assert_eq!(u.dim() + perp.dim(), a.dim(), "{name}: dim U + dim U⊥ = dim A");
            let double = a.perp_space(&form, &perp).unwrap();
            assert_eq!(double, u, "{name}: U^⊥⊥ = U");
            checked += 1;
        }
    }
    assert_eq!(checked, 200);
    println!("criterion 7 PASS — radical/socle/T₁ verified exhaustively, {checked} perp identities");
}

/// Criterion 8 — resolution probe: the four-dimensional probe passes the
/// growth-hypothesis check and the 12-step Fibonacci certificate
/// (f = 1,1,2,3,5,…,233 with f₋₁ = f₀ = 1 prepended); the dual numbers give
/// the constant trace and fail the certificate at step 1.  Under 30 seconds.
#[test]
fn criterion_08_resolution_probe() {
    let start = Instant::now();
    let probe = fib_probe_algebra();
    let witness = hypothesis_check(&probe).unwrap();
    assert!(witness.is_some(), "probe admits growth-hypothesis witnesses");
    let verdict = verify_growth_hypothesis(&probe, &probe.basis_vec(1), None, &probe.basis_vec(3))
        .unwrap();
    assert_eq!(verdict, HypothesisVerdict::Holds, "explicit (x, z) pair verifies");

    // 12 computed terms n₀…n₁₁ against f₀…f₁₁ (display prepends f₋₁ = 1)
    let trace = minimal_resolution_dims(&probe, 11).unwrap();
    let expected_n: Vec<usize> = (0..12).map(|i| 1usize << i).collect();
    assert_eq!(trace.n, expected_n, "syzygy ranks double");
    let expected_fib: Vec<u64> = vec![1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233];
    assert_eq!(trace.fib, expected_fib, "comparison sequence ends at 233");
    assert_eq!(fibonacci_certificate(&trace), Ok(()), "certificate passes");

    let dual = truncated_polynomial_algebra(2, 2);
    let constant = minimal_resolution_dims(&dual, 8).unwrap();
    assert_eq!(constant.n, vec![1; 9], "dual numbers give the constant trace");
    assert_eq!(fibonacci_certificate(&constant), Err(1), "certificate fails at step 1");

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "runtime {elapsed:?} under 30 s");
    println!("criterion 8 PASS — probe certified for 12 steps, constant trace rejected, {elapsed:?}");
}

/// Criterion 9 — the 16×3 decomposition matrix: unique up to the declared
/// actions, equal to the published matrix up to a row permutation, all
/// contributions 3/16, trace 3.
#[test]
fn criterion_09_ordinary_16x3() {
    let class = enumerate_ordinary_16x3(&rank3_cartan()).unwrap();
    let published = DataSource::default().matrix("ordinary_rank3.mat").unwrap();
    let sorted = |m: &IntMatrix| {
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        rows.sort();
        rows
    };
    assert_eq!(
        sorted(&class.canonical),
        sorted(&published),
        "published rows up to permutation"
    );
    assert_eq!(class.contributions.len(), 16);
    assert!(
        class.contributions.iter().all(|q| *q == frac(3, 16)),
        "all row contributions 3/16"
    );
    let trace: BigRational = class.contributions.iter().sum();
    assert_eq!(trace, BigRational::from_integer(3.into()), "trace {}", format_rational(&trace));

    let out = run_cli(&["ordinary16x3"]);
    assert!(out.status.success(), "ordinary16x3 exits 0");
    println!("criterion 9 PASS — 16×3 matrix reproduced, contributions 3/16, trace 3");
}

/// Criterion 10 — property suites at zero tolerance: SNF postconditions on
/// 1000 random matrices (dims ≤ 6), contribution-matrix invariance under 100
/// random unimodular basic-set transforms, kernel saturation on 200 random
/// systems.
#[test]
fn criterion_10_property_suites() {
    // --- SNF on 1000 random matrices ---
    let mut rng = SplitMix64::new(0x5eed_0000_0001);
    let entry = |rng: &mut SplitMix64| BigInt::from(rng.next_u64() % 19) - BigInt::from(9);
    for trial in 0..1000 {
        let rows = (rng.next_u64() % 6 + 1) as usize;
        let cols = (rng.next_u64() % 6 + 1) as usize;
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            data.push(entry(&mut rng));
        }
        let a = IntMatrix::new(rows, cols, data);
        let snf = smith_normal_form(&a);
        assert_eq!(
            snf.u.mul_mat(&a).unwrap().mul_mat(&snf.v).unwrap(),
            snf.d,
            "trial {trial}: U·A·V = D"
        );
        assert!(snf.u.det().unwrap().abs().is_one(), "trial {trial}: U unimodular");
        assert!(snf.v.det().unwrap().abs().is_one(), "trial {trial}: V unimodular");
        let divisors = snf.elementary_divisors();
        assert_eq!(divisors.len(), snf.rank, "trial {trial}: rank agreement");
        for w in divisors.windows(2) {
            assert!(
                !w[0].is_zero() && w[1].mod_floor(&w[0]).is_zero(),
                "trial {trial}: divisibility chain"
            );
        }
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    assert!(snf.d[(i, j)].is_zero(), "trial {trial}: off-diagonal zero");
                }
            }
        }
        for d in &divisors {
            assert!(d.is_positive(), "trial {trial}: divisors positive");
        }
    }

    // --- basic-set invariance of the contribution matrix, 100 transforms ---
    let src = DataSource::default();
    let cartan = rank3_cartan();
    let bases: Vec<IntMatrix> =
        (1..=3).map(|case| src.matrix(&format!("solution_case{case}.mat")).unwrap()).collect();
    let mut rng = SplitMix64::new(0x5eed_0000_0002);
    for trial in 0..100 {
        let q = &bases[trial % 3];
        let m = contribution_rational(q, &cartan).unwrap();
        // random unimodular S: a word in elementary column operations
        let mut s = IntMatrix::identity(3);
        for _ in 0..8 {
            match rng.next_u64() % 3 {
                0 => {
                    let i = (rng.next_u64() % 3) as usize;
                    let j = (rng.next_u64() % 3) as usize;
                    if i != j {
                        let c = BigInt::from(rng.next_u64() % 5) - BigInt::from(2);
                        s.add_col_multiple(i, j, &c);
                    }
                }
                1 => {
                    let i = (rng.next_u64() % 3) as usize;
                    let j = (rng.next_u64() % 3) as usize;
                    if i != j {
                        s.swap_cols(i, j);
                    }
                }
                _ => s.negate_col((rng.next_u64() % 3) as usize),
            }
        }
        assert!(s.det().unwrap().abs().is_one(), "trial {trial}: S unimodular");
        let q_new = q.mul_mat(&s).unwrap();
        let c_new = s.transpose().mul_mat(&cartan).unwrap().mul_mat(&s).unwrap();
        let m_new = contribution_rational(&q_new, &c_new).unwrap();
        assert_eq!(m_new, m, "trial {trial}: Mᵘ invariant under basic-set change");
    }

    // --- kernel saturation on 200 random systems ---
    let mut rng = SplitMix64::new(0x5eed_0000_0003);
    for trial in 0..200 {
        let rows = (rng.next_u64() % 5 + 1) as usize;
        let cols = (rng.next_u64() % 6 + 1) as usize;
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            data.push(entry(&mut rng));
        }
        let a = IntMatrix::new(rows, cols, data);
        let kernel = integer_kernel_basis(&a);
        assert_eq!(
            kernel.rows(),
            cols - smith_normal_form(&a).rank,
            "trial {trial}: kernel rank"
        );
        if kernel.rows() > 0 {
            assert!(
                a.mul_mat(&kernel.transpose()).unwrap().is_zero(),
                "trial {trial}: A·kᵀ = 0"
            );
            assert!(
                elementary_divisors(&kernel).iter().all(BigInt::is_one),
                "trial {trial}: saturated basis"
            );
        }
    }
    println!("criterion 10 PASS — 1000 SNF + 100 basic-set + 200 saturation trials, zero failures");
}
