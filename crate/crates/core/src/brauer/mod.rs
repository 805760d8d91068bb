//! Brauer envelope diagrams: decorated oriented matchings with floating
//! loops and intervals, their composition, tensor product and closures.

mod diagram;
mod enumerate;
mod perm;
mod sum;

pub use diagram::{Arc, BrauerMorphism, DiagramSpec, HalfInterval, Sign, SignedSequence};
pub use enumerate::{hom_from_unit, hom_to_unit};
pub use perm::{cycles, permutation_sign, permutations, Permutation};
pub use sum::{antisymmetrizer, FormalSum};

use thiserror::Error;

use crate::fincat::FincatError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrauerError {
    #[error("interface mismatch: {0}")]
    ObjectMismatch(String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("close-up needs an endomorphism")]
    NotEndomorphism,
    #[error(transparent)]
    Category(#[from] FincatError),
}
