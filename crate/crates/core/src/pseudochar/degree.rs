use num_traits::Zero;

use super::trace::{antisym_with, PermTable, TraceAlgebra};
use super::PseudoError;
use crate::exact::{format_rational, rat, Rational};
use crate::Execution;

/// Outcome of the degree search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    /// First d-tuple (element indices, nondecreasing) with nonzero closure.
    pub witness: Vec<usize>,
    pub witness_value: Rational,
    /// Number of (d+1)-multisets verified to vanish.
    pub tuples_checked: usize,
    pub identity_trace: Rational,
}

/// Nondecreasing index tuples of length `r` over `0..n`, lexicographic.
pub fn multisets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r == 0 {
        out.push(Vec::new());
        return out;
    }
    if n == 0 {
        return out;
    }
    let mut t = vec![0; r];
    loop {
        out.push(t.clone());
        let Some(i) = (0..r).rev().find(|&i| t[i] + 1 < n) else {
            return out;
        };
        let v = t[i] + 1;
        for x in t.iter_mut().skip(i) {
            *x = v;
        }
    }
}

pub fn degree<A: TraceAlgebra>(alg: &A, elements: &[A::Elem], max_d: usize) -> Result<DegreeReport, PseudoError> {
    degree_with(alg, elements, max_d, Execution::default())
}

/// Smallest d ≤ max_d whose (d+1)-fold antisymmetrized closures all vanish,
/// cross-checked against α(identity).
pub fn degree_with<A: TraceAlgebra>(
    alg: &A,
    elements: &[A::Elem],
    max_d: usize,
    exec: Execution,
) -> Result<DegreeReport, PseudoError> {
    let mut witness: Vec<usize> = Vec::new();
    let mut witness_value = rat(1);
    for d in 0..=max_d {
        let table = PermTable::new(d + 1);
        let tuples = multisets(elements.len(), d + 1);
        let hit = exec.try_find_first(&tuples, |t| {
            let g: Vec<A::Elem> = t.iter().map(|&i| elements[i].clone()).collect();
            let v = antisym_with(alg, &table, &g)?;
            Ok::<_, PseudoError>((!v.is_zero()).then_some(v))
        })?;
        match hit {
            Some((i, v)) => {
                witness = tuples[i].clone();
                witness_value = v;
            }
            None => {
                let id = alg.identity_trace();
                if id != rat(d as i64) {
                    return Err(PseudoError::NotPseudo(format!(
                        "closures vanish at level {} but α(id) = {}",
                        d + 1,
                        format_rational(&id)
                    )));
                }
                return Ok(DegreeReport { degree: d, witness, witness_value, tuples_checked: tuples.len(), identity_trace: id });
            }
        }
    }
    let id = alg.identity_trace();
    let why = if !id.is_integer() || id < Rational::zero() {
        format!("α(id) = {} is not a nonnegative integer", format_rational(&id))
    } else {
        format!("no vanishing level up to {}", max_d + 1)
    };
    Err(PseudoError::NotPseudo(why))
}
