//! JSON state files.
//!
//! ```json
//! { "basis": "ee,eg,ge,gg", "matrix": [[[re, im], ...], ...] }
//! ```
//!
//! Writers emit all sixteen entries. Floats use the shortest representation
//! that parses back to the same bits, so a write/read cycle is exact.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, C64};
use crate::states::{DensityMatrix4, BASIS_LABELS};

#[derive(Debug, Serialize, Deserialize)]
struct StateFile {
    basis: String,
    matrix: Vec<Vec<[f64; 2]>>,
}

fn basis_string() -> String {
    BASIS_LABELS.join(",")
}

pub fn state_to_json(rho: &DensityMatrix4) -> String {
    let file = StateFile {
        basis: basis_string(),
        matrix: rho
            .matrix()
            .to_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|z| [z.re, z.im]).collect())
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("state serializes");
    s.push('\n');
    s
}

/// Parses a state file without validating the matrix.
pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let basis: String = file.basis.chars().filter(|c| !c.is_whitespace()).collect();
    if basis != basis_string() {
        return Err(Error::Format(format!(
            "basis must be \"{}\", got \"{}\"",
            basis_string(),
            file.basis
        )));
    }
    if file.matrix.len() != 4 || file.matrix.iter().any(|r| r.len() != 4) {
        return Err(Error::Format("matrix must be 4x4".into()));
    }
    let rows: Vec<Vec<C64>> = file
        .matrix
        .iter()
        .map(|r| r.iter().map(|&[re, im]| C64::new(re, im)).collect())
        .collect();
    ComplexMatrix::from_rows(&rows)
}

/// Parses and validates a state file.
pub fn state_from_json(text: &str, tol_psd: f64) -> Result<DensityMatrix4> {
    DensityMatrix4::with_tolerance(matrix_from_json(text)?, tol_psd)
}
