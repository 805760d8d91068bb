//! Pseudocharacters: antisymmetrized closure traces, degree detection,
//! α-characteristic polynomials, table-assisted lifting, degree additivity
//! and pseudo-holonomies of finite graphs.

mod additivity;
mod boundary;
mod character;
mod charpoly;
mod degree;
mod holonomy;
mod lift;
mod trace;

pub use additivity::{degree_additivity_check, AdditivityReport, DirectSumTrace, MatrixUnit};
pub use boundary::{
    antisym_trace_boundary, antisym_trace_boundary_diagrammatic, boundary_expansion, evaluate_expansion, BoundaryTraceAlgebra,
    ExpansionTerm,
};
pub use character::{char_of_rep, PseudoCharacter, PseudoCharacterSpec, RepData};
pub use charpoly::{alpha_charpoly, substitute_matrix};
pub use degree::{degree, degree_with, multisets, DegreeReport};
pub use holonomy::{graph_pseudoholonomy, Edge, EdgeSpec, GraphHolonomy, GraphHolonomySpec, HolonomyReport, VertexSpec};
pub use lift::lift_with_table;
pub use trace::{
    antisym_trace, antisym_trace_diagrammatic, CategoryTrace, MatrixTrace, MonoidTrace, PermTable, TraceAlgebra,
};

use thiserror::Error;

use crate::brauer::BrauerError;
use crate::exact::{AlgebraError, Rational};
use crate::fincat::FincatError;
use crate::universal::UniversalError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PseudoError {
    #[error("not a pseudocharacter: {0}")]
    NotPseudo(String),
    #[error("degree {given} given but the degree is {actual}")]
    DegreeMismatch { given: usize, actual: String },
    #[error("character table is not linearly independent")]
    SingularTable,
    #[error("no nonnegative integer lift")]
    Infeasible { solution: Option<Vec<Rational>> },
    #[error("edge {0} has a singular matrix")]
    NonInvertibleEdge(String),
    #[error("representation violates the monoid table: {0}")]
    InvalidRep(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Universal(#[from] UniversalError),
    #[error(transparent)]
    Brauer(#[from] BrauerError),
    #[error(transparent)]
    Category(#[from] FincatError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
