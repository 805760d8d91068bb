use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::frobenius::FrobeniusAlgebra;
use super::genfun::generating_function;
use super::TqftError;
use crate::exact::{format_rational, parse_rational, partial_fractions, rat, AlgebraError, Polynomial, Rational, RationalFunction};

/// Z = μ + mT + Σ mᵢλᵢ⁻¹/(1 − λᵢT), with μ = 0 stored when m = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationData {
    pub mu: Rational,
    pub m: u64,
    /// (λᵢ, mᵢ) sorted by λ.
    pub poles: Vec<(Rational, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoleSpec {
    pub lambda: String,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationSpec {
    pub mu: String,
    pub m: u64,
    pub poles: Vec<PoleSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
pub enum Reject {
    #[error("denominator does not split over the rationals")]
    NonSplitDenominator,
    #[error("pole of order > 1")]
    MultiplePole,
    #[error("multiplicity is not a positive integer")]
    NonIntegerMultiplicity,
    #[error("linear coefficient m = 1 is impossible")]
    M1Forbidden,
    #[error("polynomial part has degree above 1")]
    PolynomialDegreeTooHigh,
    #[error("m = 0 but the polynomial part does not vanish")]
    ConstantTermMismatch,
}

impl ClassificationData {
    /// Validates and sorts the poles.
    pub fn new(mu: Rational, m: u64, mut poles: Vec<(Rational, u64)>) -> Result<Self, TqftError> {
        if m == 1 {
            return Err(TqftError::Malformed("m = 1 is excluded".into()));
        }
        if m == 0 && !mu.is_zero() {
            return Err(TqftError::Malformed("μ must be 0 when m = 0".into()));
        }
        poles.sort();
        for w in poles.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(TqftError::Malformed(format!("pole {} repeated", format_rational(&w[0].0))));
            }
        }
        if poles.iter().any(|(l, k)| l.is_zero() || *k == 0) {
            return Err(TqftError::Malformed("poles need λ ≠ 0 and positive multiplicity".into()));
        }
        Ok(ClassificationData { mu, m, poles })
    }

    pub fn from_spec(spec: &ClassificationSpec) -> Result<Self, TqftError> {
        let poles = spec
            .poles
            .iter()
            .map(|p| Ok((parse_rational(&p.lambda)?, p.multiplicity)))
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        Self::new(parse_rational(&spec.mu)?, spec.m, poles)
    }

    pub fn to_spec(&self) -> ClassificationSpec {
        ClassificationSpec {
            mu: format_rational(&self.mu),
            m: self.m,
            poles: self
                .poles
                .iter()
                .map(|(l, k)| PoleSpec { lambda: format_rational(l), multiplicity: *k })
                .collect(),
        }
    }

    /// The generating function these parameters describe.
    pub fn assemble(&self) -> RationalFunction {
        let mut z = RationalFunction::polynomial(Polynomial::new(vec![self.mu.clone(), rat(self.m as i64)]));
        for (l, k) in &self.poles {
            let c = rat(*k as i64) / l;
            let term = RationalFunction::new(Polynomial::constant(c), Polynomial::one_minus(l)).expect("1 − λT");
            z = z.add(&term);
        }
        z
    }

    /// m + Σ mᵢ, the dimension of the realizing algebra.
    pub fn dimension(&self) -> u64 {
        self.m + self.poles.iter().map(|(_, k)| k).sum::<u64>()
    }
}

fn positive_integer(q: &Rational) -> Option<u64> {
    (q.is_integer() && q.is_positive()).then(|| q.to_integer().to_u64()).flatten()
}

/// Accepts exactly the generating functions of commutative Frobenius algebras with split handle spectrum.
pub fn classify_genfun(z: &RationalFunction) -> Result<ClassificationData, Reject> {
    let pf = match partial_fractions(z) {
        Ok(pf) => pf,
        Err(_) => return Err(Reject::NonSplitDenominator),
    };
    let mut poles = Vec::new();
    for p in &pf.poles {
        if p.multiplicity > 1 {
            return Err(Reject::MultiplePole);
        }
        let k = positive_integer(&(&p.coefficients[0] * &p.lambda)).ok_or(Reject::NonIntegerMultiplicity)?;
        poles.push((p.lambda.clone(), k));
    }
    let poly = &pf.polynomial_part;
    if poly.degree().is_some_and(|d| d > 1) {
        return Err(Reject::PolynomialDegreeTooHigh);
    }
    let m_coeff = poly.coeff(1);
    let m = if m_coeff.is_zero() {
        0
    } else {
        positive_integer(&m_coeff).ok_or(Reject::NonIntegerMultiplicity)?
    };
    let mu = poly.coeff(0);
    if m == 1 {
        return Err(Reject::M1Forbidden);
    }
    if m == 0 && !mu.is_zero() {
        return Err(Reject::ConstantTermMismatch);
    }
    poles.sort();
    Ok(ClassificationData { mu, m, poles })
}

/// ℚ[x]/(xᵐ) with ε(1) = μ (when m ≥ 2) times mᵢ copies of ℚ with ε(1) = λᵢ⁻¹;
/// its generating function is checked against the assembled one.
pub fn witness_synthesis(cd: &ClassificationData) -> Result<FrobeniusAlgebra, TqftError> {
    let mut fa = if cd.m >= 2 {
        FrobeniusAlgebra::truncated_polynomial(cd.m as usize, cd.mu.clone())?
    } else {
        FrobeniusAlgebra::zero()
    };
    for (l, k) in &cd.poles {
        let one = FrobeniusAlgebra::field(Rational::one() / l)?;
        for _ in 0..*k {
            fa = fa.direct_product(&one);
        }
    }
    let z = generating_function(&fa)?;
    if z != cd.assemble() {
        return Err(TqftError::InternalInconsistency(format!("witness has Z = {z}, expected {}", cd.assemble())));
    }
    Ok(fa)
}
