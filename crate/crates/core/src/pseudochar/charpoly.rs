use num_traits::Zero;

use super::degree::degree;
use super::trace::{PermTable, TraceAlgebra};
use super::PseudoError;
use crate::exact::{rat, Matrix, Polynomial, Rational};

/// Monic degree-`d` polynomial P with antisym(x,…,x,y) ∝ α(P(x)·y) for every y.
///
/// `elements` is the endomorphism set used to confirm that `d` is the degree.
pub fn alpha_charpoly<A: TraceAlgebra>(
    alg: &A,
    elements: &[A::Elem],
    x: &A::Elem,
    d: usize,
) -> Result<Polynomial, PseudoError> {
    match degree(alg, elements, d) {
        Ok(r) if r.degree == d => {}
        Ok(r) => return Err(PseudoError::DegreeMismatch { given: d, actual: r.degree.to_string() }),
        Err(e) => return Err(PseudoError::DegreeMismatch { given: d, actual: e.to_string() }),
    }
    // α(x^j) for j = 1..=d; x^0 traces to the identity value.
    let mut powers = vec![alg.identity_trace()];
    let mut p = x.clone();
    for j in 1..=d {
        if j > 1 {
            p = alg
                .mul(x, &p)
                .ok_or_else(|| PseudoError::Malformed("element is not an endomorphism".into()))?;
        }
        powers.push(alg.trace(&p)?);
    }
    // Slot d holds y; the cycle through it has length k+1 and contributes α(x^k y).
    let table = PermTable::new(d + 1);
    let mut c = vec![Rational::zero(); d + 1];
    for (sign, cyc) in &table.entries {
        let mut term = rat(*sign);
        let mut k = 0;
        for cy in cyc {
            if cy.contains(&d) {
                k = cy.len() - 1;
            } else {
                term *= &powers[cy.len()];
            }
        }
        c[k] += term;
    }
    let lead = c[d].clone();
    Ok(Polynomial::new(c.into_iter().map(|v| v / &lead).collect()))
}

/// P(M) by Horner's rule.
pub fn substitute_matrix(p: &Polynomial, m: &Matrix<Rational>) -> Result<Matrix<Rational>, PseudoError> {
    let n = m.rows();
    let mut acc = Matrix::zeros(n, n);
    for c in p.coeffs().iter().rev() {
        acc = m.mul(&acc)?.add(&Matrix::identity(n).scale(c))?;
    }
    Ok(acc)
}
