use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::classify::{classify_genfun, ClassificationData, Reject};
use super::TqftError;
use crate::exact::{fit_linear_recurrence, series_to_rational_function, Rational};
use crate::pseudochar::{boundary_expansion, evaluate_expansion, multisets, BoundaryTraceAlgebra, PseudoError, TraceAlgebra};
use crate::universal::UniversalError;
use crate::Execution;

/// A closed component of a dotted 1D diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DottedComponent {
    Circle(usize),
    Interval(usize),
}

fn term(alpha: &[Rational], i: usize) -> Result<Rational, TqftError> {
    alpha.get(i).cloned().ok_or(TqftError::SequenceTooShort { needed: i + 1, len: alpha.len() })
}

/// A circle with n dots gives α_{n+1}, an interval with n dots gives αₙ.
pub fn f1_pullback(alpha: &[Rational], diagram: &[DottedComponent]) -> Result<Rational, TqftError> {
    let mut v = Rational::one();
    for c in diagram {
        v *= match *c {
            DottedComponent::Circle(n) => term(alpha, n + 1)?,
            DottedComponent::Interval(n) => term(alpha, n)?,
        };
    }
    Ok(v)
}

/// Dotted strands on one object: elements are dot counts.
pub struct DotAlgebra<'a> {
    pub alpha: &'a [Rational],
}

impl DotAlgebra<'_> {
    fn at(&self, i: usize) -> Result<Rational, PseudoError> {
        self.alpha
            .get(i)
            .cloned()
            .ok_or_else(|| UniversalError::SequenceTooShort { needed: i, len: self.alpha.len() }.into())
    }
}

impl TraceAlgebra for DotAlgebra<'_> {
    type Elem = usize;

    fn mul(&self, after: &usize, before: &usize) -> Option<usize> {
        Some(after + before)
    }

    fn trace(&self, e: &usize) -> Result<Rational, PseudoError> {
        self.at(e + 1)
    }

    fn identity_trace(&self) -> Rational {
        self.alpha.get(1).cloned().unwrap_or_else(Rational::zero)
    }
}

impl BoundaryTraceAlgebra for DotAlgebra<'_> {
    type Gl = usize;
    type Gr = usize;

    fn interval(&self, z: &usize, mid: Option<&usize>, y: &usize) -> Result<Rational, PseudoError> {
        self.at(z + mid.copied().unwrap_or(0) + y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DotWitness {
    /// Dot counts on the strands.
    pub arcs: Vec<usize>,
    /// Dot counts on the half-interval pairs.
    pub pairs: Vec<usize>,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cob2CheckReport {
    pub d: usize,
    pub cap: usize,
    pub configurations_checked: usize,
    pub witness: Option<DotWitness>,
    /// Classification of the generating function fitted to the sequence; `None` when no recurrence fits.
    pub classification: Option<Result<ClassificationData, Reject>>,
    /// Whether the witness search agrees with the classification of Z.
    pub consistent: bool,
}

/// Antisymmetrized closures at level d+1 over strands and half-interval
/// pairs carrying up to `cap` dots each.
pub fn cob2_pseudochar_check(
    alpha: &[Rational],
    d: usize,
    cap: usize,
    exec: Execution,
) -> Result<Cob2CheckReport, TqftError> {
    let needed = (d + 1) * (cap + 1) + 1;
    if alpha.len() < needed {
        return Err(TqftError::SequenceTooShort { needed, len: alpha.len() });
    }
    let alg = DotAlgebra { alpha };
    let mut configs = Vec::new();
    for m in 0..=d + 1 {
        let pair_sets = multisets(cap + 1, m);
        for arcs in multisets(cap + 1, d + 1 - m) {
            for pairs in &pair_sets {
                configs.push((arcs.clone(), pairs.clone(), m));
            }
        }
    }
    let expansions: Vec<_> = (0..=d + 1).map(|m| boundary_expansion(d + 1 - m, m)).collect();
    let hit = exec.try_find_first(&configs, |(arcs, pairs, m)| {
        let pairs: Vec<(usize, usize)> = pairs.iter().map(|&b| (b, 0)).collect();
        let v = evaluate_expansion(&alg, &expansions[*m], arcs, &pairs)?;
        Ok::<_, PseudoError>((!v.is_zero()).then_some(v))
    })?;
    let witness = hit.map(|(i, value)| DotWitness { arcs: configs[i].0.clone(), pairs: configs[i].1.clone(), value });

    let classification = fit_linear_recurrence(alpha, alpha.len() / 2)
        .ok()
        .and_then(|rec| series_to_rational_function(alpha, &rec.poly).ok())
        .map(|z| classify_genfun(&z));
    let consistent = match (&witness, &classification) {
        (None, Some(Ok(c))) => c.dimension() <= d as u64,
        (Some(_), Some(Ok(c))) => c.dimension() > d as u64,
        (Some(_), _) => true,
        (None, _) => false,
    };
    Ok(Cob2CheckReport { d, cap, configurations_checked: configs.len(), witness, classification, consistent })
}
