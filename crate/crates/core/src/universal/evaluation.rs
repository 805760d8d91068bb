use std::collections::BTreeMap;

use super::UniversalError;
use crate::brauer::BrauerMorphism;
use crate::exact::Semiring;
use crate::fincat::{Category, IntervalClass, Loop};

/// Values on loop classes and floating-interval classes.
pub trait Evaluation<S>: Sync {
    fn loop_value(&self, cat: &dyn Category, l: &Loop) -> Option<S>;
    fn interval_value(&self, cat: &dyn Category, i: &IntervalClass) -> Option<S>;
}

/// Product of the values of all floating components; the empty diagram gives 1.
pub fn evaluate_closed<S: Semiring>(
    cat: &dyn Category,
    d: &BrauerMorphism,
    alpha: &dyn Evaluation<S>,
) -> Result<S, UniversalError> {
    if !d.is_closed() {
        return Err(UniversalError::Malformed("diagram has boundary endpoints".into()));
    }
    let mut acc = S::unit();
    for l in &d.loops {
        let v = alpha
            .loop_value(cat, l)
            .ok_or_else(|| UniversalError::MissingValue(format!("loop {}", cat.loop_key(l))))?;
        acc = acc.times(&v);
    }
    for i in &d.intervals {
        let v = alpha
            .interval_value(cat, i)
            .ok_or_else(|| UniversalError::MissingValue(format!("interval {}", cat.interval_key(i))))?;
        acc = acc.times(&v);
    }
    Ok(acc)
}

/// Finite value table with an optional default for unlisted classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEvaluation<S> {
    pub loops: BTreeMap<Loop, S>,
    pub intervals: BTreeMap<IntervalClass, S>,
    pub default: Option<S>,
}

impl<S: Clone + PartialEq> TableEvaluation<S> {
    pub fn new(default: Option<S>) -> Self {
        TableEvaluation { loops: BTreeMap::new(), intervals: BTreeMap::new(), default }
    }

    /// Builds from text keys written with any representative of each class.
    pub fn from_keys(
        cat: &dyn Category,
        loops: &BTreeMap<String, S>,
        intervals: &BTreeMap<String, S>,
        default: Option<S>,
    ) -> Result<Self, UniversalError> {
        let mut t = Self::new(default);
        for (k, v) in loops {
            let l = cat.parse_loop_key(k)?;
            if t.loops.insert(l, v.clone()).is_some_and(|old| old != *v) {
                return Err(UniversalError::ConflictingValue(k.clone()));
            }
        }
        for (k, v) in intervals {
            let i = cat.parse_interval_key(k)?;
            if t.intervals.insert(i, v.clone()).is_some_and(|old| old != *v) {
                return Err(UniversalError::ConflictingValue(k.clone()));
            }
        }
        Ok(t)
    }

    pub fn set_loop(&mut self, l: Loop, v: S) {
        self.loops.insert(l, v);
    }

    pub fn set_interval(&mut self, i: IntervalClass, v: S) {
        self.intervals.insert(i, v);
    }
}

impl<S: Clone + Send + Sync> Evaluation<S> for TableEvaluation<S> {
    fn loop_value(&self, _cat: &dyn Category, l: &Loop) -> Option<S> {
        self.loops.get(l).cloned().or_else(|| self.default.clone())
    }

    fn interval_value(&self, _cat: &dyn Category, i: &IntervalClass) -> Option<S> {
        self.intervals.get(i).cloned().or_else(|| self.default.clone())
    }
}
