//! The universal construction: evaluations of closed diagrams, state spaces
//! over ℚ and the Boolean semiring, automaton minimization and Cob₂ state
//! spaces of partition diagrams.

mod automaton;
mod boolean;
mod cob2;
mod evaluation;
mod field;

pub use automaton::{hankel_minimize, series_agree, AutomatonEvaluation, AutomatonSpec, WeightedAutomaton};
pub use boolean::{state_space_boolean, BooleanStateSpace, Dfa, LanguageEvaluation};
pub use cob2::{cob2_state_space, glue_partition_diagrams, partition_diagrams, set_partitions, Cob2Report, PartitionDiagram};
pub use evaluation::{evaluate_closed, Evaluation, TableEvaluation};
pub use field::{state_space_field, state_space_field_with, FieldStateSpace};

use thiserror::Error;

use crate::brauer::BrauerError;
use crate::exact::AlgebraError;
use crate::fincat::FincatError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniversalError {
    #[error("evaluation has no value for {0}")]
    MissingValue(String),
    #[error("sequence has {len} terms but index {needed} is required")]
    SequenceTooShort { needed: usize, len: usize },
    #[error("conflicting values for {0}")]
    ConflictingValue(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error(transparent)]
    Category(#[from] FincatError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
