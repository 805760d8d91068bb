use num_traits::{Signed, ToPrimitive};

use super::character::PseudoCharacter;
use super::PseudoError;
use crate::exact::{AlgebraError, Matrix};

/// Multiplicities nᵢ with α = Σ nᵢ·χᵢ over the supplied table.
pub fn lift_with_table(alpha: &PseudoCharacter, table: &[PseudoCharacter]) -> Result<Vec<u64>, PseudoError> {
    let rows = alpha.values().len();
    for chi in table {
        if chi.values().len() != rows {
            return Err(PseudoError::Malformed("table character has a different class count".into()));
        }
    }
    let a = Matrix::from_fn(rows, table.len(), |i, j| table[j].values()[i].clone());
    if a.rank() < table.len() {
        return Err(PseudoError::SingularTable);
    }
    let n = match a.solve(alpha.values()) {
        Ok(n) => n,
        Err(AlgebraError::Inconsistent) => return Err(PseudoError::Infeasible { solution: None }),
        Err(e) => return Err(e.into()),
    };
    let ok = n.iter().all(|v| v.is_integer() && !v.is_negative());
    if !ok {
        return Err(PseudoError::Infeasible { solution: Some(n) });
    }
    Ok(n.iter().map(|v| v.to_integer().to_u64().unwrap_or(u64::MAX)).collect())
}

