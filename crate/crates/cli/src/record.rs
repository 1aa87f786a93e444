use std::fmt;

use clap::ValueEnum;
use critgroup::AbelianGroup;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Formula,
    Snf,
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Snf => "snf",
            Method::Both => "both",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GraphDescriptor {
    KmCn { m: usize, n: usize },
    Complete { size: usize },
    Cycle { size: usize },
    Path { size: usize },
    File { path: String },
}

impl fmt::Display for GraphDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphDescriptor::KmCn { m, n } => write!(f, "K_{m} x C_{n}"),
            GraphDescriptor::Complete { size } => write!(f, "K_{size}"),
            GraphDescriptor::Cycle { size } => write!(f, "C_{size}"),
            GraphDescriptor::Path { size } => write!(f, "P_{size}"),
            GraphDescriptor::File { path } => write!(f, "{path}"),
        }
    }
}

/// Result of `group` and `trees`. Big integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub graph: GraphDescriptor,
    pub method: Method,
    pub invariant_factors: Vec<String>,
    pub group_display: String,
    pub tree_count: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
}

impl OutputRecord {
    pub fn new(
        graph: GraphDescriptor,
        method: Method,
        group: &AbelianGroup,
        tree_count: &BigInt,
        agreement: Option<bool>,
    ) -> Self {
        OutputRecord {
            graph,
            method,
            invariant_factors: decimal(group.invariant_factors()),
            group_display: group.to_string(),
            tree_count: tree_count.to_string(),
            agreement,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SnfRecord {
    pub rows: usize,
    pub cols: usize,
    pub diagonal: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub left: Vec<Vec<String>>,
    pub right: Vec<Vec<String>>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCell {
    pub m: usize,
    pub n: usize,
    pub agreement: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula_group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub snf_group: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula_tree_count: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix_tree_count: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub m_range: (usize, usize),
    pub n_range: (usize, usize),
    pub cells: Vec<SweepCell>,
    pub agreed: usize,
    pub total: usize,
}

pub fn decimal(xs: &[BigInt]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// Pretty JSON followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records always serialize");
    s.push('\n');
    s
}
