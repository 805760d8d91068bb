use std::error::Error;
use std::fmt::Debug;

use serde_json::Value;
use thiserror::Error;

/// Innermost variants that indicate bad input rather than a domain answer.
const MALFORMED: &[&str] = &[
    "Malformed",
    "BadRational",
    "ZeroDenominator",
    "UnknownObject",
    "UnknownMorphism",
    "UnknownBoundary",
    "InvalidDiagram",
    "DimensionMismatch",
    "SequenceTooShort",
    "InvalidBlocks",
];

#[derive(Debug, Error)]
pub enum CliError {
    #[error("malformed input: {0}")]
    Input(String),
    #[error("{kind}: {message}")]
    Library { kind: String, message: String, malformed: bool },
    /// A computed negative answer; the report still goes to standard output.
    #[error("{kind}: {message}")]
    Rejected { kind: String, message: String, report: Value },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Library { malformed: true, .. } => 2,
            CliError::Library { .. } | CliError::Rejected { .. } => 1,
        }
    }
}

/// `Algebra(BadRational("x"))` → ["Algebra", "BadRational"].
fn variant_chain(debug: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut rest = debug;
    loop {
        let end = rest.find(|c: char| !(c.is_alphanumeric() || c == '_')).unwrap_or(rest.len());
        if end == 0 {
            break;
        }
        out.push(rest[..end].to_string());
        match rest[end..].strip_prefix('(') {
            Some(r) => rest = r,
            None => break,
        }
    }
    out
}

pub fn kind_of<E: Debug>(e: &E) -> (String, bool) {
    let full = std::any::type_name::<E>();
    let ty = full.rsplit("::").next().unwrap_or(full);
    let chain = variant_chain(&format!("{e:?}"));
    let malformed = chain.last().is_some_and(|v| MALFORMED.contains(&v.as_str()));
    let mut kind = ty.to_string();
    for v in &chain {
        kind.push_str("::");
        kind.push_str(v);
    }
    (kind, malformed)
}

pub fn lib<E: Error + Debug>(e: E) -> CliError {
    let (kind, malformed) = kind_of(&e);
    CliError::Library { kind, message: e.to_string(), malformed }
}

pub fn rejected<E: Error + Debug>(e: &E, report: Value) -> CliError {
    let (kind, _) = kind_of(e);
    CliError::Rejected { kind, message: e.to_string(), report }
}
