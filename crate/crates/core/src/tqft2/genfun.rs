use num_traits::One;

use super::frobenius::FrobeniusAlgebra;
use super::TqftError;
use crate::exact::{fit_linear_recurrence, format_rational, series_to_rational_function, Matrix, Polynomial, Rational, RationalFunction};

/// Z(T) = Σ_g ε(hᵍ)Tᵍ, from the recurrence of tr(M_hⁿ) and the constant ε(1).
pub fn generating_function(fa: &FrobeniusAlgebra) -> Result<RationalFunction, TqftError> {
    let hd = fa.handle_element()?;
    let n = fa.dim();
    let len = 2 * n + 2;
    let mut traces = Vec::with_capacity(len);
    let mut p = Matrix::identity(n);
    for _ in 0..len {
        traces.push(p.trace());
        p = p.mul(&hd.mult_matrix)?;
    }
    let rec = fit_linear_recurrence(&traces, n)?;
    let tail = series_to_rational_function(&traces, &rec.poly)?;
    let eps1 = fa.epsilon(fa.unit());
    let z = RationalFunction::polynomial(Polynomial::constant(eps1)).add(&tail.shift_scale(&Rational::one(), 1));
    let coeffs = z.series(len + 1);
    let mut power = fa.unit().to_vec();
    for (g, c) in coeffs.iter().enumerate() {
        let direct = fa.epsilon(&power);
        power = fa.mul(&power, &hd.handle);
        if g >= 1 && g <= len && traces[g - 1] != direct {
            return Err(TqftError::InternalInconsistency(format!(
                "ε(h^{g}) = {} but tr(M_h^{}) = {}",
                format_rational(&direct),
                g - 1,
                format_rational(&traces[g - 1])
            )));
        }
        if *c != direct {
            return Err(TqftError::InternalInconsistency(format!(
                "Taylor coefficient {g} is {} but the surface evaluates to {}",
                format_rational(c),
                format_rational(&direct)
            )));
        }
    }
    Ok(z)
}
