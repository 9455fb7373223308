use serde::{Deserialize, Serialize};
use std::path::PathBuf;

/// Which field: `GF(p^s)`, optionally with an explicit modulus
/// (ascending coefficients over GF(p), monic).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub s: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    #[default]
    Pretty,
}

/// Command-specific parameters. Polynomials and matrices stay as text and
/// are parsed against the field at run time.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Task {
    MdsSearch {
        n: usize,
    },
    Enumerate {
        f: String,
    },
    Decompose {
        f: String,
    },
    Dual {
        f: String,
        g: String,
    },
    Minpoly {
        matrix: String,
    },
    Bound {
        f: String,
        g: String,
        /// The evaluation point, an element of the degree-`ext` extension.
        beta: String,
        ext: u32,
        l: u64,
        cs: Vec<u64>,
        ss: Vec<u64>,
        delta: usize,
        distance: bool,
    },
}

/// Everything a run depends on. Two runs with equal configs print the same bytes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobConfig {
    pub field: FieldSpec,
    pub theta_t: u32,
    /// Derivation parameter of the ring, as field-element text.
    pub beta: String,
    pub task: Task,
    pub format: Format,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    pub budget: u64,
}
