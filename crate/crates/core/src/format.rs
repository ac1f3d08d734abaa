//! JSON algebra files.
//!
//! ```json
//! {
//!   "field": {"kind": "prime", "p": 5},
//!   "dim": 2,
//!   "structure_matrix": [["1", "1"], ["-1", "-1"]]
//! }
//! ```
//!
//! Entries are scalar strings (`"3"`, `"-1/4"`), never JSON numbers.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::scalar::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldJson {
    Rational,
    Prime { p: u64 },
}

impl FieldJson {
    pub fn from_field(field: FieldSpec) -> Self {
        match field.modulus() {
            Some(p) => FieldJson::Prime { p },
            None => FieldJson::Rational,
        }
    }

    pub fn to_field(&self) -> Result<FieldSpec> {
        match self {
            FieldJson::Rational => Ok(FieldSpec::rational()),
            FieldJson::Prime { p } => FieldSpec::prime(*p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub field: FieldJson,
    pub dim: usize,
    pub structure_matrix: Vec<Vec<String>>,
}

impl AlgebraFile {
    pub fn from_algebra(e: &EvolutionAlgebra) -> Self {
        Self {
            field: FieldJson::from_field(e.field()),
            dim: e.dim(),
            structure_matrix: (0..e.dim()).map(|i| vector_strings(&e.square_of_basis(i))).collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<EvolutionAlgebra> {
        let field = self.field.to_field()?;
        if self.structure_matrix.len() != self.dim {
            return Err(Error::Format(format!(
                "dim is {} but structure_matrix has {} rows",
                self.dim,
                self.structure_matrix.len()
            )));
        }
        let mut m = Matrix::zeros(field, self.dim, self.dim);
        for (r, row) in self.structure_matrix.iter().enumerate() {
            if row.len() != self.dim {
                return Err(Error::Format(format!(
                    "row {} has {} entries, expected {}",
                    r + 1,
                    row.len(),
                    self.dim
                )));
            }
            for (c, text) in row.iter().enumerate() {
                m.set(r, c, field.parse(text)?);
            }
        }
        EvolutionAlgebra::new(m)
    }
}

pub fn vector_strings(v: &Vector) -> Vec<String> {
    v.coords().iter().map(|c| c.to_string()).collect()
}

/// Canonical RREF rows.
pub fn subspace_rows(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(vector_strings).collect()
}

pub fn parse_algebra(text: &str) -> Result<EvolutionAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    file.to_algebra()
}

/// One structure-matrix row per line.
pub fn algebra_to_json(e: &EvolutionAlgebra) -> String {
    let file = AlgebraFile::from_algebra(e);
    let field = serde_json::to_string(&file.field).expect("plain data");
    let rows: Vec<String> = file
        .structure_matrix
        .iter()
        .map(|r| format!("    {}", serde_json::to_string(r).expect("plain data")))
        .collect();
    let matrix = if rows.is_empty() {
        "[]".to_string()
    } else {
        format!("[\n{}\n  ]", rows.join(",\n"))
    };
    format!("{{\n  \"field\": {field},\n  \"dim\": {},\n  \"structure_matrix\": {matrix}\n}}\n", file.dim)
}

pub fn read_algebra(path: &Path) -> Result<EvolutionAlgebra> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    parse_algebra(&text)
}
