use num_traits::Zero;
use serde::Serialize;

use super::degree::{degree_with, DegreeReport};
use super::trace::{CategoryTrace, TraceAlgebra};
use super::PseudoError;
use crate::exact::{format_rational, Rational};
use crate::fincat::{Category, Label, ObjId};
use crate::universal::{Evaluation, UniversalError};
use crate::Execution;

/// A matrix unit over the pair (X₁, X₂): entry `(row, col)` holding `f: X_col → X_row`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixUnit {
    pub row: usize,
    pub col: usize,
    pub entry: Label,
}

/// End(X₁ ⊕ X₂) spanned by matrix units, traced along the diagonal.
pub struct DirectSumTrace<'a> {
    cat: &'a dyn Category,
    alpha: &'a dyn Evaluation<Rational>,
    objects: [ObjId; 2],
    identity_value: Rational,
}

impl TraceAlgebra for DirectSumTrace<'_> {
    type Elem = MatrixUnit;

    fn mul(&self, after: &MatrixUnit, before: &MatrixUnit) -> Option<MatrixUnit> {
        if after.col != before.row {
            return None;
        }
        let entry = self.cat.compose(&after.entry, &before.entry).ok()?;
        Some(MatrixUnit { row: after.row, col: before.col, entry })
    }

    fn trace(&self, e: &MatrixUnit) -> Result<Rational, PseudoError> {
        if e.row != e.col {
            return Ok(Rational::zero());
        }
        let l = self.cat.canonical_loop(self.objects[e.row], &e.entry);
        self.alpha
            .loop_value(self.cat, &l)
            .ok_or_else(|| UniversalError::MissingValue(format!("loop {}", self.cat.loop_key(&l))).into())
    }

    fn identity_trace(&self) -> Rational {
        self.identity_value.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdditivityReport {
    pub degrees: [usize; 2],
    pub sum_degree: usize,
    pub additive: bool,
    /// Nonvanishing witness on the direct sum, as `row,col:name` units.
    pub sum_witness: Vec<String>,
    pub sum_witness_value: String,
    pub tuples_checked: usize,
}

/// Degrees on X₁, X₂ and on their adjoined direct sum.
pub fn degree_additivity_check(
    cat: &dyn Category,
    alpha: &dyn Evaluation<Rational>,
    x1: ObjId,
    x2: ObjId,
    max_d: usize,
    cap: usize,
    exec: Execution,
) -> Result<AdditivityReport, PseudoError> {
    let objects = [x1, x2];
    let mut degrees = [0; 2];
    let mut ids = Vec::new();
    for (i, &x) in objects.iter().enumerate() {
        let t = CategoryTrace::at_object(cat, alpha, x)?;
        let ends = cat.hom(x, x, cap);
        degrees[i] = degree_with(&t, &ends, max_d, exec)?.degree;
        ids.push(t.identity_trace());
    }
    let mut units = Vec::new();
    for row in 0..2 {
        for col in 0..2 {
            for f in cat.hom(objects[col], objects[row], cap) {
                units.push(MatrixUnit { row, col, entry: f });
            }
        }
    }
    let sum = DirectSumTrace { cat, alpha, objects, identity_value: &ids[0] + &ids[1] };
    let r: DegreeReport = degree_with(&sum, &units, max_d, exec)?;
    Ok(AdditivityReport {
        degrees,
        sum_degree: r.degree,
        additive: r.degree == degrees[0] + degrees[1],
        sum_witness: r
            .witness
            .iter()
            .map(|&i| format!("{},{}:{}", units[i].row + 1, units[i].col + 1, cat.label_name(&units[i].entry)))
            .collect(),
        sum_witness_value: format_rational(&r.witness_value),
        tuples_checked: r.tuples_checked,
    })
}
