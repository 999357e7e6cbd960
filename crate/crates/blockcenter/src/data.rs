//! Bundled data files and the `--data-dir` override.
//!
//! Every table the verification pipeline compares against ships embedded in
//! the binary; a directory override lets users substitute their own
//! transcriptions without rebuilding (files are looked up by the same
//! names).

use std::path::PathBuf;

use blockcenter_core::{BlockDatum, FinDimAlgebra, IntMatrix};

use crate::formats;

/// Embedded copies of everything under `data/`.
pub const EMBEDDED: &[(&str, &str)] = &[
    ("cartan_x.mat", include_str!("../data/cartan_x.mat")),
    ("q_case1.mat", include_str!("../data/q_case1.mat")),
    ("q_case2.mat", include_str!("../data/q_case2.mat")),
    ("q_case3.mat", include_str!("../data/q_case3.mat")),
    ("case1.block", include_str!("../data/case1.block")),
    ("case2.block", include_str!("../data/case2.block")),
    ("case3.block", include_str!("../data/case3.block")),
    ("contrib16_x_case1.mat", include_str!("../data/contrib16_x_case1.mat")),
    ("contrib16_x_case2.mat", include_str!("../data/contrib16_x_case2.mat")),
    ("contrib16_x_case3.mat", include_str!("../data/contrib16_x_case3.mat")),
    ("contrib16_y_case1.mat", include_str!("../data/contrib16_y_case1.mat")),
    ("solution_case1.mat", include_str!("../data/solution_case1.mat")),
    ("solution_case2.mat", include_str!("../data/solution_case2.mat")),
    ("solution_case3.mat", include_str!("../data/solution_case3.mat")),
    ("center_diag_case1.mat", include_str!("../data/center_diag_case1.mat")),
    ("ordinary_rank3.mat", include_str!("../data/ordinary_rank3.mat")),
    ("w_table.alg", include_str!("../data/w_table.alg")),
    ("growth_probe.alg", include_str!("../data/growth_probe.alg")),
    ("dual_numbers.alg", include_str!("../data/dual_numbers.alg")),
    ("poly4.alg", include_str!("../data/poly4.alg")),
    ("klein_four.alg", include_str!("../data/klein_four.alg")),
    ("quaternion.alg", include_str!("../data/quaternion.alg")),
    ("center_case12.alg", include_str!("../data/center_case12.alg")),
    ("center_case3.alg", include_str!("../data/center_case3.alg")),
];

/// Resolves named data files from an override directory or the embedded set.
#[derive(Debug, Clone, Default)]
pub struct DataSource {
    dir: Option<PathBuf>,
}

impl DataSource {
    pub fn new(dir: Option<PathBuf>) -> DataSource {
        DataSource { dir }
    }

    pub fn read(&self, name: &str) -> Result<String, String> {
        if let Some(dir) = &self.dir {
            let path = dir.join(name);
            return std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()));
        }
        EMBEDDED
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, text)| (*text).to_string())
            .ok_or_else(|| format!("no bundled data file named `{name}`"))
    }

    pub fn matrix(&self, name: &str) -> Result<IntMatrix, String> {
        formats::parse_matrix(&self.read(name)?).map_err(|e| format!("{name}: {e}"))
    }

    pub fn block(&self, name: &str) -> Result<BlockDatum, String> {
        formats::parse_block(&self.read(name)?).map_err(|e| format!("{name}: {e}"))
    }

    pub fn algebra(&self, name: &str) -> Result<FinDimAlgebra, String> {
        formats::parse_algebra(&self.read(name)?).map_err(|e| format!("{name}: {e}"))
    }
}
