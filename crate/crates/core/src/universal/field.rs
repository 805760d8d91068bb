use super::evaluation::{evaluate_closed, Evaluation};
use super::UniversalError;
use crate::brauer::{hom_from_unit, hom_to_unit, BrauerMorphism, SignedSequence};
use crate::exact::{Matrix, Rational};
use crate::fincat::Category;
use crate::Execution;

/// State space over ℚ. `gram[i][j]` pairs `spanning[i]` (from 𝟙) with
/// `dual_spanning[j]` (to 𝟙).
#[derive(Clone, Debug)]
pub struct FieldStateSpace {
    pub object: SignedSequence,
    pub spanning: Vec<BrauerMorphism>,
    pub dual_spanning: Vec<BrauerMorphism>,
    pub gram: Matrix<Rational>,
    pub dimension: usize,
    pub cap_words: usize,
    /// Rank at `cap_words - 1` (None at cap 0).
    pub previous_dimension: Option<usize>,
}

impl FieldStateSpace {
    pub fn stabilized(&self) -> bool {
        self.previous_dimension == Some(self.dimension)
    }
}

pub(crate) fn pairing_matrix<S>(
    cat: &dyn Category,
    right: &[BrauerMorphism],
    left: &[BrauerMorphism],
    alpha: &dyn Evaluation<S>,
    exec: Execution,
) -> Result<Matrix<S>, UniversalError>
where
    S: crate::exact::Semiring + Send + Sync,
{
    let cols = left.len();
    let idx: Vec<usize> = (0..right.len() * cols).collect();
    let entries = exec.try_map(&idx, |&k| {
        let closed = BrauerMorphism::compose(cat, &left[k % cols], &right[k / cols])?;
        evaluate_closed(cat, &closed, alpha)
    })?;
    Ok(Matrix::from_vec(right.len(), cols, entries)?)
}

pub fn state_space_field(
    cat: &dyn Category,
    obj: &SignedSequence,
    alpha: &dyn Evaluation<Rational>,
    cap_words: usize,
) -> Result<FieldStateSpace, UniversalError> {
    state_space_field_with(cat, obj, alpha, cap_words, Execution::default())
}

pub fn state_space_field_with(
    cat: &dyn Category,
    obj: &SignedSequence,
    alpha: &dyn Evaluation<Rational>,
    cap_words: usize,
    exec: Execution,
) -> Result<FieldStateSpace, UniversalError> {
    let rank_at = |cap: usize| -> Result<_, UniversalError> {
        let right = hom_from_unit(cat, obj, cap);
        let left = hom_to_unit(cat, obj, cap);
        let gram = pairing_matrix(cat, &right, &left, alpha, exec)?;
        Ok((right, left, gram))
    };
    let (spanning, dual_spanning, gram) = rank_at(cap_words)?;
    let dimension = gram.rank();
    let previous_dimension = match cap_words {
        0 => None,
        c => Some(rank_at(c - 1)?.2.rank()),
    };
    Ok(FieldStateSpace {
        object: obj.clone(),
        spanning,
        dual_spanning,
        gram,
        dimension,
        cap_words,
        previous_dimension,
    })
}
