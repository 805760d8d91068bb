//! Commutative Frobenius algebras, generating functions of two-dimensional
//! TQFTs and their classification, the (p, ι, h) relations and the
//! confluent Vandermonde systems of the m = 1 exclusion.

mod classify;
mod cob2check;
mod frobenius;
mod genfun;
mod pih;

pub use classify::{classify_genfun, witness_synthesis, ClassificationData, ClassificationSpec, PoleSpec, Reject};
pub use cob2check::{cob2_pseudochar_check, f1_pullback, Cob2CheckReport, DotAlgebra, DottedComponent, DotWitness};
pub use frobenius::{FrobeniusAlgebra, FrobeniusSpec, HandleData};
pub use genfun::generating_function;
pub use pih::{
    confluent_matrix, confluent_vandermonde_det, pih_check, pih_solve, Block, ConfluentSystem, PihReport, PihSystem, PihSystemSpec,
    Relation, Verdict,
};

use thiserror::Error;

use crate::exact::AlgebraError;
use crate::pseudochar::PseudoError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TqftError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not commutative: u{i}·u{j} ≠ u{j}·u{i}")]
    NotCommutative { i: usize, j: usize },
    #[error("not associative on (u{i}, u{j}, u{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("unit is not neutral on u{0}")]
    UnitFailure(usize),
    #[error("Gram matrix of the counit is singular")]
    NondegeneracyFailure,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("confluent Vandermonde matrix is singular")]
    SingularT,
    #[error("invalid blocks: {0}")]
    InvalidBlocks(String),
    #[error("sequence has {len} terms but {needed} are required")]
    SequenceTooShort { needed: usize, len: usize },
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Pseudo(#[from] PseudoError),
}
