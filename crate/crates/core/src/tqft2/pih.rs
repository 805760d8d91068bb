use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::TqftError;
use crate::exact::{format_rational, parse_rational, rat, AlgebraError, Matrix, Rational};

/// A covector p, an endomorphism h and a vector ι of one space V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PihSystem {
    pub p: Vec<Rational>,
    pub h: Matrix<Rational>,
    pub iota: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PihSystemSpec {
    pub p: Vec<String>,
    pub h: Vec<Vec<String>>,
    pub iota: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    /// p hⁿ ι = αₙ
    Interval,
    /// tr(hⁿ) = α_{n+1}
    Circle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PihReport {
    /// Largest n for which both relations were checked.
    pub horizon: usize,
    pub first_violation: Option<(usize, Relation)>,
    pub note: String,
}

impl PihReport {
    pub fn ok(&self) -> bool {
        self.first_violation.is_none()
    }
}

impl PihSystem {
    pub fn new(p: Vec<Rational>, h: Matrix<Rational>, iota: Vec<Rational>) -> Result<Self, TqftError> {
        let n = p.len();
        if iota.len() != n || h.rows() != n || h.cols() != n {
            return Err(TqftError::DimensionMismatch(format!(
                "p has length {n}, ι has length {}, h is {}x{}",
                iota.len(),
                h.rows(),
                h.cols()
            )));
        }
        Ok(PihSystem { p, h, iota })
    }

    pub fn from_spec(spec: &PihSystemSpec) -> Result<Self, TqftError> {
        let v = |xs: &[String]| xs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>();
        Self::new(v(&spec.p)?, Matrix::parse_rows(&spec.h)?, v(&spec.iota)?)
    }

    pub fn dim(&self) -> usize {
        self.p.len()
    }
}

/// Checks p hⁿ ι = αₙ and tr(hⁿ) = α_{n+1} for n = 0 ..= 2·dim + 1.
pub fn pih_check(s: &PihSystem, alpha: &[Rational]) -> Result<PihReport, TqftError> {
    let d = s.dim();
    let horizon = 2 * d + 1;
    if alpha.len() < horizon + 2 {
        return Err(TqftError::SequenceTooShort { needed: horizon + 2, len: alpha.len() });
    }
    let note = format!(
        "both sides satisfy the order-{d} recurrence of the characteristic polynomial of h, \
         so agreement for n ≤ {horizon} implies agreement for all n"
    );
    let mut v = s.iota.clone();
    let mut hn = Matrix::identity(d);
    for n in 0..=horizon {
        let interval: Rational = s.p.iter().zip(&v).map(|(a, b)| a * b).sum();
        if interval != alpha[n] {
            return Ok(PihReport { horizon, first_violation: Some((n, Relation::Interval)), note });
        }
        if hn.trace() != alpha[n + 1] {
            return Ok(PihReport { horizon, first_violation: Some((n, Relation::Circle)), note });
        }
        v = s.h.mul_vec(&v)?;
        hn = hn.mul(&s.h)?;
    }
    Ok(PihReport { horizon, first_violation: None, note })
}

/// A Jordan block of size `n` for eigenvalue `lambda` plus `m − n` simple ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub lambda: Rational,
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Consistent,
    Inconsistent,
}

/// TΓ = R together with the α₁ comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluentSystem {
    pub blocks: Vec<Block>,
    pub t: Matrix<Rational>,
    pub r: Vec<Rational>,
    pub gamma: Vec<Rational>,
    /// Σ λᵢγ_{i,0}, the value p h ι forced by the solution.
    pub alpha1_forced: Rational,
    /// dim V = 1 + Σ Mᵢ.
    pub alpha1_required: Rational,
    pub verdict: Verdict,
}

fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut b = Rational::one();
    for i in 0..k {
        b = b * rat((n - i) as i64) / rat((i + 1) as i64);
    }
    b
}

fn check_blocks(blocks: &[Block]) -> Result<usize, TqftError> {
    if blocks.is_empty() {
        return Err(TqftError::InvalidBlocks("no blocks".into()));
    }
    for (i, b) in blocks.iter().enumerate() {
        if b.lambda.is_zero() || b.n == 0 || b.m < b.n {
            return Err(TqftError::InvalidBlocks(format!("block {i} needs λ ≠ 0 and 1 ≤ N ≤ M")));
        }
        if blocks[..i].iter().any(|o| o.lambda == b.lambda) {
            return Err(TqftError::InvalidBlocks(format!("eigenvalue {} repeated", format_rational(&b.lambda))));
        }
    }
    Ok(blocks.iter().map(|b| b.n).sum())
}

/// Row r is exponent r + 2; column j of block i is C(r+2, j)·λᵢ^{r+2−j}.
pub fn confluent_matrix(blocks: &[Block]) -> Result<Matrix<Rational>, TqftError> {
    let n = check_blocks(blocks)?;
    let mut cols: Vec<(Rational, usize)> = Vec::new();
    for b in blocks {
        for j in 0..b.n {
            cols.push((b.lambda.clone(), j));
        }
    }
    Ok(Matrix::from_fn(n, n, |r, c| {
        let (l, j) = &cols[c];
        let e = r + 2;
        if *j > e {
            Rational::zero()
        } else {
            binomial(e, *j) * pow(l, e - j)
        }
    }))
}

fn pow(l: &Rational, k: usize) -> Rational {
    let mut p = Rational::one();
    for _ in 0..k {
        p *= l;
    }
    p
}

/// Assembles and solves TΓ = R with Rₙ = Σ Mᵢλᵢⁿ, n = 1..N.
pub fn pih_solve(blocks: &[Block]) -> Result<ConfluentSystem, TqftError> {
    let t = confluent_matrix(blocks)?;
    let n = t.rows();
    let r: Vec<Rational> = (1..=n)
        .map(|e| blocks.iter().map(|b| rat(b.m as i64) * pow(&b.lambda, e)).sum())
        .collect();
    let gamma = match t.solve_unique(&r) {
        Ok(g) => g,
        Err(AlgebraError::Singular) => return Err(TqftError::SingularT),
        Err(e) => return Err(e.into()),
    };
    let mut k = 0;
    let mut alpha1_forced = Rational::zero();
    for b in blocks {
        for j in 0..b.n {
            let want = if j == 0 { rat(b.m as i64) / &b.lambda } else { Rational::zero() };
            if gamma[k] != want {
                return Err(TqftError::InternalInconsistency(format!(
                    "γ for eigenvalue {} index {j} is {}, expected {}",
                    format_rational(&b.lambda),
                    format_rational(&gamma[k]),
                    format_rational(&want)
                )));
            }
            if j == 0 {
                alpha1_forced += &b.lambda * &gamma[k];
            }
            k += 1;
        }
    }
    let alpha1_required = rat(1 + blocks.iter().map(|b| b.m as i64).sum::<i64>());
    let verdict = if alpha1_forced == alpha1_required { Verdict::Consistent } else { Verdict::Inconsistent };
    Ok(ConfluentSystem { blocks: blocks.to_vec(), t, r, gamma, alpha1_forced, alpha1_required, verdict })
}

/// det T and u = det T / (Π λᵢ^{2Nᵢ} · Π_{i<j} (λᵢ − λⱼ)^{NᵢNⱼ}).
pub fn confluent_vandermonde_det(blocks: &[Block]) -> Result<(Rational, Rational), TqftError> {
    let t = confluent_matrix(blocks)?;
    let det = t.det()?;
    let mut closed = Rational::one();
    for (i, b) in blocks.iter().enumerate() {
        closed *= pow(&b.lambda, 2 * b.n);
        for c in &blocks[i + 1..] {
            closed *= pow(&(&b.lambda - &c.lambda), b.n * c.n);
        }
    }
    if det.is_zero() {
        return Err(TqftError::SingularT);
    }
    let u = &det / &closed;
    Ok((det, u))
}
