//! The end-to-end verification pipeline: recomputes every bundled display
//! from first principles and checks the published tables against the
//! recomputation, each stage as a named report section.

use std::collections::BTreeSet;

use blockcenter_core::{
    assemble, canonical_form, check_block, contribution, enumerate_ordinary_16x3, enumerate_rows,
    enumerate_solutions, gram_automorphisms, lattices_equal, match_presentation,
    simultaneous_permutation, CenterLattice, IntMatrix, Presentation, SubsectionDatum,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::data::DataSource;
use crate::report::Report;

/// Section names in pipeline order (usable with `--only`).
pub const SECTIONS: &[&str] = &[
    "row-enumeration",
    "solution-classes",
    "contribution-matrices",
    "block-case-1",
    "block-case-2",
    "block-case-3",
    "center-lattice",
    "classification",
    "ordinary-16x3",
];

/// Runs the pipeline (or the single named section) against a data source.
pub fn verify_paper(src: &DataSource, only: Option<&str>) -> Report {
    let mut report = Report::new("verify-paper");
    if let Some(name) = only {
        if !SECTIONS.contains(&name) {
            report.section(name);
            report.error(format!(
                "unknown section `{name}`; available: {}",
                SECTIONS.join(", ")
            ));
            return report;
        }
    }
    for &name in SECTIONS {
        if only.is_some_and(|o| o != name) {
            continue;
        }
        report.section(name);
        let outcome = match name {
            "row-enumeration" => section_row_enumeration(src, &mut report),
            "solution-classes" => section_solution_classes(src, &mut report),
            "contribution-matrices" => section_contribution_matrices(src, &mut report),
            "block-case-1" => section_block_case(src, &mut report, 1),
            "block-case-2" => section_block_case(src, &mut report, 2),
            "block-case-3" => section_block_case(src, &mut report, 3),
            "center-lattice" => section_center_lattice(src, &mut report),
            "classification" => section_classification(src, &mut report),
            "ordinary-16x3" => section_ordinary(src, &mut report),
            _ => unreachable!("section list is fixed"),
        };
        if let Err(e) = outcome {
            report.error(e);
            return report;
        }
    }
    report
}

/// Canonical representative of a length-3 integer row under coordinate
/// permutations and a global sign flip.
pub fn row_orbit_canonical(row: &[BigInt]) -> Vec<BigInt> {
    const PERMS: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    assert_eq!(row.len(), 3, "orbit canonicalization is specific to rank 3");
    let mut best: Option<Vec<BigInt>> = None;
    for perm in PERMS {
        let mut v: Vec<BigInt> = perm.iter().map(|&i| row[i].clone()).collect();
        if let Some(first) = v.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in &mut v {
                    *x = -x.clone();
                }
            }
        }
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    }
    best.expect("six permutations examined")
}

/// Multiset-of-rows equality (matching up to a row permutation).
pub fn equal_up_to_row_permutation(a: &IntMatrix, b: &IntMatrix) -> bool {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return false;
    }
    let sorted = |m: &IntMatrix| {
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        rows.sort();
        rows
    };
    sorted(a) == sorted(b)
}

fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn section_row_enumeration(src: &DataSource, report: &mut Report) -> Result<(), String> {
    let c = src.matrix("cartan_x.mat")?;
    let rows = enumerate_rows(&c, true).map_err(|e| e.to_string())?;
    // group the admissible rows into orbits under permutation × sign
    let mut classes: BTreeSet<(Vec<BigInt>, BigRational)> = BTreeSet::new();
    for cand in &rows {
        classes.insert((row_orbit_canonical(&cand.entries), cand.contribution.clone()));
    }
    let expected: Vec<(Vec<BigInt>, BigRational)> = [
        (vec![1, 0, 0], frac(3, 16)),
        (vec![1, 1, 1], frac(3, 16)),
        (vec![0, 1, 2], frac(11, 16)),
        (vec![1, 1, -1], frac(11, 16)),
        (vec![1, 2, 2], frac(11, 16)),
    ]
    .into_iter()
    .map(|(v, q)| (row_orbit_canonical(&v.into_iter().map(BigInt::from).collect::<Vec<_>>()), q))
    .collect();
    report.verdict(
        classes.len() == 5,
        format!("admissible rows form {} sign/permutation classes (expected 5)", classes.len()),
    );
    let expected_set: BTreeSet<_> = expected.into_iter().collect();
    report.verdict(
        classes == expected_set,
        "class representatives and contributions match the published five-row list",
    );
    Ok(())
}

fn section_solution_classes(src: &DataSource, report: &mut Report) -> Result<(), String> {
    let c = src.matrix("cartan_x.mat")?;
    // five rows contribute 3/16 and three rows 11/16 (trace 3 in total)
    let mut constraints = vec![frac(3, 16); 5];
    constraints.extend(vec![frac(11, 16); 3]);
    let classes = enumerate_solutions(&c, 8, Some(&constraints)).map_err(|e| e.to_string())?;
    report.verdict(
        classes.len() == 3,
        format!("decompositions XᵀX = C with 8 rows form {} classes (expected 3)", classes.len()),
    );
    let eldivs: BTreeSet<Vec<BigInt>> =
        classes.iter().map(|cl| cl.elementary_divisors.clone()).collect();
    let expected_eldivs: BTreeSet<Vec<BigInt>> = [[1, 2, 2], [1, 1, 2], [1, 1, 1]]
        .iter()
        .map(|d| d.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    report.verdict(
        eldivs == expected_eldivs,
        "elementary divisor triples are exactly (1,2,2), (1,1,2), (1,1,1)",
    );
    // the bundled representative of each type must land in the matching
    // class, with the published elementary-divisor pairing
    let aut = gram_automorphisms(&c).map_err(|e| e.to_string())?;
    let pairing: [(usize, [i64; 3]); 3] =
        [(1, [1, 2, 2]), (2, [1, 1, 2]), (3, [1, 1, 1])];
    for (case, divs) in pairing {
        let published = src.matrix(&format!("solution_case{case}.mat"))?;
        let canon = canonical_form(&published, &aut);
        let hit = classes.iter().find(|cl| cl.canonical == canon);
        let expected: Vec<BigInt> = divs.iter().map(|&x| BigInt::from(x)).collect();
        report.verdict(
            hit.is_some_and(|cl| cl.elementary_divisors == expected),
            format!(
                "bundled type-({case}) representative lies in the class with divisors {divs:?}"
            ),
        );
    }
    Ok(())
}

fn section_contribution_matrices(src: &DataSource, report: &mut Report) -> Result<(), String> {
    let cartan = src.matrix("cartan_x.mat")?;
    let scale = BigInt::from(16);
    let mut odd_entries = 0usize;
    for case in 1..=3 {
        // the displays are computed from the solution-class representatives
        let sub = SubsectionDatum {
            label: format!("case{case}"),
            q: src.matrix(&format!("solution_case{case}.mat"))?,
            cartan: cartan.clone(),
        };
        let m16 = contribution(&sub, &scale).map_err(|e| e.to_string())?;
        let published = src.matrix(&format!("contrib16_x_case{case}.mat"))?;
        report.verdict(
            simultaneous_permutation(&m16.scaled, &published).is_some(),
            format!(
                "computed 16·M(x) for class ({case}) matches the published display up to a \
                 simultaneous row/column permutation"
            ),
        );
        odd_entries += m16.scaled.entries().iter().filter(|e| e.is_odd()).count();
    }
    report.verdict(
        odd_entries == 192,
        format!("all three 16·M(x) matrices have odd entries ({odd_entries}/192)"),
    );
    // the second rank-3 subsection of case (I) is also published
    let block = src.block("case1.block")?;
    let sub = block
        .subsections
        .iter()
        .find(|s| s.label == "y")
        .ok_or("case1.block has no subsection labeled y")?;
    let m16y = contribution(sub, &block.scale).map_err(|e| e.to_string())?;
    let published = src.matrix("contrib16_y_case1.mat")?;
    report.verdict(
        m16y.scaled == published,
        "computed 16·M(y) for case (I) equals the published display entrywise",
    );
    Ok(())
}

fn section_block_case(src: &DataSource, report: &mut Report, case: usize) -> Result<(), String> {
    let block = src.block(&format!("case{case}.block"))?;
    let block_report = check_block(&block).map_err(|e| e.to_string())?;
    for check in &block_report.checks {
        report.verdict(check.pass, format!("{}: {}", check.name, check.detail));
    }
    // the assembled square matrix must reproduce the bundled one
    match assemble(&block) {
        Ok(g) => {
            let bundled = src.matrix(&format!("q_case{case}.mat"))?;
            report.verdict(g == bundled, "assembled decomposition matrix equals the bundled matrix");
        }
        Err(e) => report.verdict(false, format!("assembly rejected the block datum: {e}")),
    }
    Ok(())
}

fn section_center_lattice(src: &DataSource, report: &mut Report) -> Result<(), String> {
    for case in 1..=3 {
        let g = src.matrix(&format!("q_case{case}.mat"))?;
        let lat = CenterLattice::from_decomposition_matrix(&g).map_err(|e| e.to_string())?;
        report.verdict(
            lat.rank() == 8,
            format!("case ({case}): center lattice has rank {} (expected 8)", lat.rank()),
        );
        if case == 1 {
            let published = src.matrix("center_diag_case1.mat")?;
            let equal =
                lattices_equal(&lat.basis_diagonals, &published).map_err(|e| e.to_string())?;
            report.verdict(
                equal,
                "case (I): computed lattice equals the published diagonal table \
                 (transition matrices integral both ways)",
            );
        }
    }
    Ok(())
}

fn section_classification(src: &DataSource, report: &mut Report) -> Result<(), String> {
    let mut j2_dims = Vec::new();
    for case in 1..=3 {
        let g = src.matrix(&format!("q_case{case}.mat"))?;
        let lat = CenterLattice::from_decomposition_matrix(&g).map_err(|e| e.to_string())?;
        let modular = lat.reduce_mod_p(2).map_err(|e| e.to_string())?;
        let alg = &modular.algebra;
        let expected = if case == 3 { Presentation::CaseThree } else { Presentation::CaseOneTwo };
        let other = if case == 3 { Presentation::CaseOneTwo } else { Presentation::CaseThree };
        let matched = match_presentation(alg, expected).map_err(|e| e.to_string())?;
        let cross = match_presentation(alg, other).map_err(|e| e.to_string())?;
        report.verdict(
            matched.is_some(),
            format!("case ({case}): mod-2 center matches presentation {expected:?}"),
        );
        report.verdict(
            cross.is_none(),
            format!("case ({case}): mod-2 center does not match presentation {other:?}"),
        );
        let j = alg.radical().map_err(|e| e.to_string())?;
        let j2 = alg.product_space(&j, &j);
        j2_dims.push(j2.dim());
        if case != 3 {
            report.verdict(
                alg.loewy_length().map_err(|e| e.to_string())? == 3,
                format!("case ({case}): center has Loewy length 3"),
            );
        }
    }
    report.verdict(
        j2_dims == [1, 1, 3],
        format!("dim J² over the three cases is {j2_dims:?} (expected [1, 1, 3])"),
    );
    Ok(())
}

fn section_ordinary(src: &DataSource, report: &mut Report) -> Result<(), String> {
    let c = src.matrix("cartan_x.mat")?;
    let class = enumerate_ordinary_16x3(&c).map_err(|e| e.to_string())?;
    let published = src.matrix("ordinary_rank3.mat")?;
    report.verdict(
        equal_up_to_row_permutation(&class.canonical, &published),
        "the unique 16×3 decomposition matrix matches the published rows up to permutation",
    );
    let all_three_sixteenths = class.contributions.iter().all(|q| *q == frac(3, 16));
    report.verdict(
        all_three_sixteenths && class.contributions.len() == 16,
        "all 16 row contributions are 3/16",
    );
    let trace: BigRational = class.contributions.iter().sum();
    report.verdict(
        trace == BigRational::from_integer(BigInt::from(3)),
        "contribution trace equals 3, the number of simple modules",
    );
    Ok(())
}
