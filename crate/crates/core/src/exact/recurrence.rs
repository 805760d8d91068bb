use num_traits::{One, Zero};

use super::matrix::Matrix;
use super::poly::Polynomial;
use super::ratfun::RationalFunction;
use super::rational::Rational;
use super::AlgebraError;

/// A fitted recurrence `Σ_j c_j s_{n-j} = 0` valid for all `n >= order`.
/// `poly` has constant term 1; its degree may be below `order` when the
/// sequence only settles after a transient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    pub poly: Polynomial,
    pub order: usize,
}

/// Smallest order `d <= max_order` whose Hankel system is consistent.
pub fn fit_linear_recurrence(seq: &[Rational], max_order: usize) -> Result<Recurrence, AlgebraError> {
    if seq.len() < 2 * max_order {
        return Err(AlgebraError::SequenceTooShort { len: seq.len(), max_order });
    }
    for d in 0..=max_order {
        if d == 0 {
            if seq.iter().all(Zero::is_zero) {
                return Ok(Recurrence { poly: Polynomial::one(), order: 0 });
            }
            continue;
        }
        if seq.len() <= d {
            break;
        }
        let rows = seq.len() - d;
        let a = Matrix::from_fn(rows, d, |r, j| seq[r + d - (j + 1)].clone());
        let b: Vec<Rational> = (0..rows).map(|r| -seq[r + d].clone()).collect();
        if let Ok(c) = a.solve(&b) {
            let mut coeffs = vec![Rational::one()];
            coeffs.extend(c);
            return Ok(Recurrence { poly: Polynomial::new(coeffs), order: d });
        }
    }
    Err(AlgebraError::NoRecurrence { max_order })
}

/// `P/Q` with `P = Q * prefix mod T^len(prefix)`.
pub fn series_to_rational_function(
    prefix: &[Rational],
    recurrence: &Polynomial,
) -> Result<RationalFunction, AlgebraError> {
    let num = (recurrence * &Polynomial::new(prefix.to_vec())).truncate(prefix.len());
    RationalFunction::new(num, recurrence.clone())
}
