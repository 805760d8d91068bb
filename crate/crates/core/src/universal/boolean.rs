use serde::{Deserialize, Serialize};

use super::evaluation::Evaluation;
use super::field::pairing_matrix;
use super::UniversalError;
use crate::brauer::{hom_from_unit, hom_to_unit, BrauerMorphism, SignedSequence};
use crate::exact::{distinct_rows, join_irreducible_rows, Boolean, Matrix};
use crate::fincat::{Category, IntervalClass, Loop};
use crate::Execution;

/// Complete deterministic automaton over letter indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dfa {
    pub states: usize,
    pub start: usize,
    pub accepting: Vec<usize>,
    /// `delta[state][letter]`
    pub delta: Vec<Vec<usize>>,
}

impl Dfa {
    pub fn validate(&self, letters: usize) -> Result<(), UniversalError> {
        let ok = self.start < self.states
            && self.delta.len() == self.states
            && self.delta.iter().all(|r| r.len() == letters && r.iter().all(|&s| s < self.states))
            && self.accepting.iter().all(|&s| s < self.states);
        if ok {
            Ok(())
        } else {
            Err(UniversalError::Malformed("DFA tables inconsistent with the alphabet".into()))
        }
    }

    pub fn accepts(&self, w: &[u32]) -> bool {
        let s = w.iter().fold(self.start, |s, &a| self.delta[s][a as usize]);
        self.accepting.contains(&s)
    }

    /// All words over `letters` letters.
    pub fn universal(letters: usize) -> Self {
        Dfa { states: 1, start: 0, accepting: vec![0], delta: vec![vec![0; letters]] }
    }

    pub fn empty(letters: usize) -> Self {
        Dfa { states: 1, start: 0, accepting: vec![], delta: vec![vec![0; letters]] }
    }
}

/// Boolean evaluation on a free monoid: an interval is 1 iff its traversal
/// word lies in L_I, a loop iff some rotation lies in L_∘ (empty when absent).
pub struct LanguageEvaluation {
    pub intervals: Dfa,
    pub loops: Option<Dfa>,
}

impl Evaluation<Boolean> for LanguageEvaluation {
    fn loop_value(&self, _cat: &dyn Category, l: &Loop) -> Option<Boolean> {
        let w = &l.cycle.0;
        let hit = self.loops.as_ref().is_some_and(|d| {
            (0..w.len().max(1)).any(|k| {
                let k = k.min(w.len());
                let rot: Vec<u32> = w[k..].iter().chain(&w[..k]).copied().collect();
                d.accepts(&rot)
            })
        });
        Some(Boolean(hit))
    }

    fn interval_value(&self, _cat: &dyn Category, i: &IntervalClass) -> Option<Boolean> {
        let mut w = i.gr.0.clone();
        w.extend_from_slice(&i.gl.0);
        Some(Boolean(self.intervals.accepts(&w)))
    }
}

#[derive(Clone, Debug)]
pub struct BooleanStateSpace {
    pub object: SignedSequence,
    pub spanning: Vec<BrauerMorphism>,
    pub dual_spanning: Vec<BrauerMorphism>,
    pub gram: Matrix<Boolean>,
    pub states: Vec<Vec<Boolean>>,
    pub join_irreducible: usize,
    pub cap_words: usize,
    pub previous_states: Option<usize>,
}

impl BooleanStateSpace {
    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn stabilized(&self) -> bool {
        self.previous_states == Some(self.states.len())
    }
}

pub fn state_space_boolean(
    cat: &dyn Category,
    obj: &SignedSequence,
    alpha: &dyn Evaluation<Boolean>,
    cap_words: usize,
) -> Result<BooleanStateSpace, UniversalError> {
    let exec = Execution::default();
    let at = |cap: usize| -> Result<_, UniversalError> {
        let right = hom_from_unit(cat, obj, cap);
        let left = hom_to_unit(cat, obj, cap);
        let gram = pairing_matrix(cat, &right, &left, alpha, exec)?;
        Ok((right, left, gram))
    };
    let (spanning, dual_spanning, gram) = at(cap_words)?;
    let states = distinct_rows(&gram);
    let join_irreducible = join_irreducible_rows(&gram).len();
    let previous_states = match cap_words {
        0 => None,
        c => Some(distinct_rows(&at(c - 1)?.2).len()),
    };
    Ok(BooleanStateSpace { object: obj.clone(), spanning, dual_spanning, gram, states, join_irreducible, cap_words, previous_states })
}
