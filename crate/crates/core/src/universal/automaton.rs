use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::evaluation::Evaluation;
use super::UniversalError;
use crate::exact::{format_rational, parse_rational, Matrix, Rational};
use crate::fincat::{Category, IntervalClass, Label, Loop};

/// Rational weighted automaton: the value of `w = a₁…aₙ` is
/// `initial · M_{a₁} ⋯ M_{aₙ} · final`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedAutomaton {
    pub initial: Vec<Rational>,
    pub transitions: Vec<Matrix<Rational>>,
    pub final_weights: Vec<Rational>,
}

/// JSON form with rationals as strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AutomatonSpec {
    pub initial: Vec<String>,
    pub transitions: Vec<Vec<Vec<String>>>,
    #[serde(rename = "final")]
    pub final_weights: Vec<String>,
}

impl WeightedAutomaton {
    pub fn new(
        initial: Vec<Rational>,
        transitions: Vec<Matrix<Rational>>,
        final_weights: Vec<Rational>,
    ) -> Result<Self, UniversalError> {
        let n = initial.len();
        if final_weights.len() != n || transitions.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(UniversalError::Malformed("automaton dimensions disagree".into()));
        }
        Ok(WeightedAutomaton { initial, transitions, final_weights })
    }

    pub fn from_spec(spec: &AutomatonSpec) -> Result<Self, UniversalError> {
        let vec = |v: &[String]| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>();
        let mats = spec
            .transitions
            .iter()
            .map(|m| {
                let rows = m.iter().map(|r| vec(r)).collect::<Result<Vec<_>, _>>()?;
                Matrix::from_rows(rows)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vec(&spec.initial)?, mats, vec(&spec.final_weights)?)
    }

    pub fn to_spec(&self) -> AutomatonSpec {
        let vec = |v: &[Rational]| v.iter().map(format_rational).collect::<Vec<_>>();
        AutomatonSpec {
            initial: vec(&self.initial),
            transitions: self.transitions.iter().map(|m| m.to_rows().iter().map(|r| vec(r)).collect()).collect(),
            final_weights: vec(&self.final_weights),
        }
    }

    pub fn dimension(&self) -> usize {
        self.initial.len()
    }

    pub fn alphabet_size(&self) -> usize {
        self.transitions.len()
    }

    pub fn word_matrix(&self, w: &[u32]) -> Matrix<Rational> {
        w.iter().fold(Matrix::identity(self.dimension()), |acc, &a| {
            acc.mul(&self.transitions[a as usize]).expect("square")
        })
    }

    pub fn value(&self, w: &[u32]) -> Rational {
        let mut v = self.initial.clone();
        for &a in w {
            v = self.transitions[a as usize].vec_mul(&v).expect("square");
        }
        v.iter().zip(&self.final_weights).map(|(a, b)| a * b).sum()
    }

    /// `tr(M_w)`, invariant under rotation of `w`.
    pub fn trace_value(&self, w: &[u32]) -> Rational {
        self.word_matrix(w).trace()
    }
}

/// All words of length ≤ n over `k` letters, shortlex.
fn words(k: usize, n: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<u32>| {
                (0..k as u32).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Agreement on every word of length ≤ n.
pub fn series_agree(a: &WeightedAutomaton, b: &WeightedAutomaton, n: usize) -> bool {
    a.alphabet_size() == b.alphabet_size()
        && words(a.alphabet_size(), n).iter().all(|w| a.value(w) == b.value(w))
}

/// Rows spanning the closure of `start` under right multiplication by the
/// generators, kept in reduced echelon form.
fn reachable_basis(start: &[Rational], gens: &[Matrix<Rational>]) -> Vec<Vec<Rational>> {
    let n = start.len();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut queue = vec![start.to_vec()];
    while let Some(v) = queue.pop() {
        let mut rows = basis.clone();
        rows.push(v.clone());
        let m = Matrix::from_rows(rows).expect("equal lengths");
        if n == 0 || m.rank() == basis.len() {
            continue;
        }
        basis.push(v.clone());
        for g in gens.iter().rev() {
            queue.insert(0, g.vec_mul(&v).expect("square"));
        }
    }
    basis
}

fn coords(basis_rows: &Matrix<Rational>, v: &[Rational]) -> Vec<Rational> {
    basis_rows.transpose().solve(v).expect("vector lies in the span")
}

fn forward_reduce(a: &WeightedAutomaton) -> WeightedAutomaton {
    if a.initial.iter().all(Zero::is_zero) {
        return WeightedAutomaton { initial: vec![], transitions: a.transitions.iter().map(|_| Matrix::zeros(0, 0)).collect(), final_weights: vec![] };
    }
    let basis = reachable_basis(&a.initial, &a.transitions);
    let b = Matrix::from_rows(basis.clone()).expect("rows");
    let k = basis.len();
    let transitions = a
        .transitions
        .iter()
        .map(|m| {
            let rows: Vec<Vec<Rational>> = basis.iter().map(|v| coords(&b, &m.vec_mul(v).expect("square"))).collect();
            Matrix::from_rows(rows).unwrap_or_else(|_| Matrix::zeros(k, k))
        })
        .collect();
    WeightedAutomaton {
        initial: coords(&b, &a.initial),
        transitions,
        final_weights: b.mul_vec(&a.final_weights).expect("shape"),
    }
}

fn reverse(a: &WeightedAutomaton) -> WeightedAutomaton {
    WeightedAutomaton {
        initial: a.final_weights.clone(),
        transitions: a.transitions.iter().map(Matrix::transpose).collect(),
        final_weights: a.initial.clone(),
    }
}

/// Minimal automaton computing the same series: reachable then co-reachable reduction.
pub fn hankel_minimize(a: &WeightedAutomaton) -> WeightedAutomaton {
    reverse(&forward_reduce(&reverse(&forward_reduce(a))))
}

/// Evaluation on a free monoid: intervals by the series, loops by traces.
pub struct AutomatonEvaluation<'a> {
    pub automaton: &'a WeightedAutomaton,
}

impl Evaluation<Rational> for AutomatonEvaluation<'_> {
    fn loop_value(&self, _cat: &dyn Category, l: &Loop) -> Option<Rational> {
        Some(self.automaton.trace_value(&l.cycle.0))
    }

    fn interval_value(&self, _cat: &dyn Category, i: &IntervalClass) -> Option<Rational> {
        let Label(gr) = &i.gr;
        let mut w = gr.clone();
        w.extend_from_slice(&i.gl.0);
        Some(self.automaton.value(&w))
    }
}
