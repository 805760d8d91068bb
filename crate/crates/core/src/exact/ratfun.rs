use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use super::matrix::Matrix;
use super::poly::Polynomial;
use super::rational::Rational;
use super::AlgebraError;

/// `P(T)/Q(T)` with gcd(P, Q) = 1 and Q(0) = 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, den) = if g.degree().unwrap_or(0) > 0 {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        } else {
            (num, den)
        };
        let c0 = den.coeff(0);
        if c0.is_zero() {
            return Err(AlgebraError::SingularAtZero);
        }
        let inv = Rational::one() / c0;
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    /// First `n` Taylor coefficients at T = 0.
    pub fn series(&self, n: usize) -> Vec<Rational> {
        let q = self.den.coeffs();
        let mut s: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut v = self.num.coeff(k);
            for (j, qj) in q.iter().enumerate().skip(1).take_while(|(j, _)| *j <= k) {
                v -= qj * &s[k - j];
            }
            s.push(v);
        }
        s
    }

    pub fn add(&self, o: &Self) -> Self {
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        Self::new(num, &self.den * &o.den).expect("product of normalized denominators")
    }

    /// Multiplies by `c * T^k`.
    pub fn shift_scale(&self, c: &Rational, k: usize) -> Self {
        Self::new(&self.num * &Polynomial::monomial(c.clone(), k), self.den.clone())
            .expect("denominator unchanged")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// One pole block: Σ_k coefficients[k] / (1 - λT)^(k+1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleTerm {
    pub lambda: Rational,
    pub multiplicity: usize,
    pub coefficients: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub polynomial_part: Polynomial,
    pub poles: Vec<PoleTerm>,
}

impl PartialFractions {
    pub fn reassemble(&self) -> RationalFunction {
        let mut acc = RationalFunction::polynomial(self.polynomial_part.clone());
        for t in &self.poles {
            for (k, c) in t.coefficients.iter().enumerate() {
                let den = Polynomial::one_minus(&t.lambda).pow(k + 1);
                let term = RationalFunction::new(Polynomial::constant(c.clone()), den)
                    .expect("1 - λT is normalized");
                acc = acc.add(&term);
            }
        }
        acc
    }
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Rational roots with multiplicity of a polynomial with nonzero constant term,
/// plus the unfactored remainder.
fn rational_roots(p: &Polynomial) -> (Vec<(Rational, usize)>, Polynomial) {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let (a0, an) = (ints[0].clone(), ints[ints.len() - 1].clone());
    let mut cands = Vec::new();
    for num in positive_divisors(&a0) {
        for den in positive_divisors(&an) {
            cands.push(Rational::new(num.clone(), den.clone()));
            cands.push(-Rational::new(num.clone(), den));
        }
    }
    cands.sort();
    cands.dedup();
    let mut rest = p.clone();
    let mut roots = Vec::new();
    for r in cands {
        let lin = Polynomial::new(vec![-r.clone(), Rational::one()]);
        let mut k = 0;
        while rest.degree().unwrap_or(0) > 0 && rest.eval(&r).is_zero() {
            rest = rest.div_rem(&lin).0;
            k += 1;
        }
        if k > 0 {
            roots.push((r, k));
        }
    }
    (roots, rest)
}

/// Splits into a polynomial part and pole blocks, poles sorted by (numerator, denominator).
pub fn partial_fractions(rf: &RationalFunction) -> Result<PartialFractions, AlgebraError> {
    let (poly, rem) = rf.num.div_rem(&rf.den);
    let deg = rf.den.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(PartialFractions { polynomial_part: poly, poles: Vec::new() });
    }
    let (mut roots, rest) = rational_roots(&rf.den.reversed(deg));
    if rest.degree().unwrap_or(0) > 0 {
        return Err(AlgebraError::NonSplitDenominator);
    }
    roots.sort_by(|a, b| (a.0.numer(), a.0.denom()).cmp(&(b.0.numer(), b.0.denom())));
    let mut columns = Vec::new();
    for (lambda, mult) in &roots {
        let base = Polynomial::one_minus(lambda);
        for k in 0..*mult {
            let (q, r) = rf.den.div_rem(&base.pow(k + 1));
            debug_assert!(r.is_zero());
            columns.push(q);
        }
    }
    let a = Matrix::from_fn(deg, deg, |i, j| columns[j].coeff(i));
    let rhs: Vec<Rational> = (0..deg).map(|i| rem.coeff(i)).collect();
    let sol = a.solve_unique(&rhs)?;
    let mut it = sol.into_iter();
    let poles = roots
        .into_iter()
        .map(|(lambda, multiplicity)| PoleTerm {
            lambda,
            multiplicity,
            coefficients: it.by_ref().take(multiplicity).collect(),
        })
        .collect();
    Ok(PartialFractions { polynomial_part: poly, poles })
}
