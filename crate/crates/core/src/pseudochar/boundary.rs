use num_traits::Zero;

use super::trace::{cycle_product, CategoryTrace, MatrixTrace, TraceAlgebra};
use super::PseudoError;
use crate::brauer::{cycles, permutation_sign, permutations, Arc, BrauerMorphism, HalfInterval, Sign, SignedSequence};
use crate::exact::{rat, Matrix, Rational};
use crate::fincat::{Category, Label, ObjId};
use crate::universal::{evaluate_closed, Evaluation, UniversalError};

/// A trace algebra that also has boundary elements: `Gr` starts a strand,
/// `Gl` ends one.
pub trait BoundaryTraceAlgebra: TraceAlgebra {
    type Gl: Clone + Send + Sync;
    type Gr: Clone + Send + Sync;

    /// α of the interval `z ∘ mid ∘ y`; zero when the pieces do not compose.
    fn interval(&self, z: &Self::Gl, mid: Option<&Self::Elem>, y: &Self::Gr) -> Result<Rational, PseudoError>;
}

/// One signed product in the expansion of a boundary closure with `k` arc
/// slots followed by `m` pair slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTerm {
    pub sign: i64,
    /// Closed cycles of arc slots as `[i, σ(i), …]`.
    pub loops: Vec<Vec<usize>>,
    /// `(q, via, p)`: the strand leaves `y_p`, passes the arc slots in `via` and ends at `z_q`.
    pub intervals: Vec<(usize, Vec<usize>, usize)>,
}

impl ExpansionTerm {
    /// Factors in composition order, e.g. `α(x1x2)` or `α(z1x2y1)`; indices are 1-based.
    pub fn factors(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in &self.loops {
            let mut s = format!("x{}", c[0] + 1);
            for &i in c[1..].iter().rev() {
                s.push_str(&format!("x{}", i + 1));
            }
            out.push(format!("α({s})"));
        }
        for (q, via, p) in &self.intervals {
            let mut s = format!("z{}", q + 1);
            for &i in via.iter().rev() {
                s.push_str(&format!("x{}", i + 1));
            }
            s.push_str(&format!("y{}", p + 1));
            out.push(format!("α({s})"));
        }
        out
    }

    pub fn render(&self) -> String {
        let sign = if self.sign < 0 { "-" } else { "+" };
        format!("{sign} {}", self.factors().concat())
    }
}

/// All terms of the expansion, in lexicographic permutation order.
pub fn boundary_expansion(k: usize, m: usize) -> Vec<ExpansionTerm> {
    permutations(k + m)
        .into_iter()
        .map(|sigma| {
            let mut loops = Vec::new();
            for c in cycles(&sigma) {
                if c.iter().all(|&i| i < k) {
                    loops.push(c);
                }
            }
            let mut intervals = Vec::new();
            for p in 0..m {
                let mut via = Vec::new();
                let mut j = sigma[k + p];
                while j < k {
                    via.push(j);
                    j = sigma[j];
                }
                intervals.push((j - k, via, p));
            }
            ExpansionTerm { sign: permutation_sign(&sigma), loops, intervals }
        })
        .collect()
}

/// Closure value of the antisymmetrizer against arcs `xs` and boundary pairs `(y, z)`.
pub fn antisym_trace_boundary<A: BoundaryTraceAlgebra>(
    alg: &A,
    xs: &[A::Elem],
    pairs: &[(A::Gr, A::Gl)],
) -> Result<Rational, PseudoError> {
    evaluate_expansion(alg, &boundary_expansion(xs.len(), pairs.len()), xs, pairs)
}

/// Sums precomputed expansion terms against arcs and pairs of matching sizes.
pub fn evaluate_expansion<A: BoundaryTraceAlgebra>(
    alg: &A,
    terms: &[ExpansionTerm],
    xs: &[A::Elem],
    pairs: &[(A::Gr, A::Gl)],
) -> Result<Rational, PseudoError> {
    let mut total = Rational::zero();
    'term: for t in terms {
        let mut v = rat(t.sign);
        for c in &t.loops {
            let Some(p) = cycle_product(alg, c, xs) else { continue 'term };
            v *= alg.trace(&p)?;
        }
        for (q, via, p) in &t.intervals {
            let mut mid: Option<A::Elem> = None;
            for &i in via {
                mid = match mid {
                    None => Some(xs[i].clone()),
                    Some(acc) => match alg.mul(&xs[i], &acc) {
                        Some(r) => Some(r),
                        None => continue 'term,
                    },
                };
            }
            v *= alg.interval(&pairs[*q].1, mid.as_ref(), &pairs[*p].0)?;
        }
        total += v;
    }
    Ok(total)
}

/// The same value by composing diagrams, closing up and evaluating.
pub fn antisym_trace_boundary_diagrammatic(
    cat: &dyn Category,
    alpha: &dyn Evaluation<Rational>,
    x: ObjId,
    xs: &[Label],
    pairs: &[(Label, Label)],
) -> Result<Rational, PseudoError> {
    let one = SignedSequence::repeat(x, Sign::Plus, 1);
    let mut h = BrauerMorphism::empty();
    for l in xs {
        h = h.tensor(&BrauerMorphism::permutation(cat, x, &[0], std::slice::from_ref(l)));
    }
    for (y, z) in pairs {
        let piece = BrauerMorphism::new(
            one.clone(),
            one.clone(),
            Vec::<Arc>::new(),
            vec![HalfInterval { end: 0, elem: z.clone() }, HalfInterval { end: 1, elem: y.clone() }],
        );
        h = h.tensor(&piece);
    }
    let n = xs.len() + pairs.len();
    let id = cat.identity(x);
    let ids = vec![id; n];
    let mut total = Rational::zero();
    for sigma in permutations(n) {
        let p = BrauerMorphism::permutation(cat, x, &sigma, &ids);
        let closed = BrauerMorphism::close_up(cat, &BrauerMorphism::compose(cat, &h, &p)?)?;
        total += rat(permutation_sign(&sigma)) * evaluate_closed(cat, &closed, alpha)?;
    }
    Ok(total)
}

impl BoundaryTraceAlgebra for CategoryTrace<'_> {
    type Gl = Label;
    type Gr = Label;

    fn interval(&self, z: &Label, mid: Option<&Label>, y: &Label) -> Result<Rational, PseudoError> {
        let y = match mid {
            None => y.clone(),
            Some(m) => match self.cat.act_right(m, y) {
                Ok(r) => r,
                Err(_) => return Ok(Rational::zero()),
            },
        };
        let Ok(i) = self.cat.canonical_interval(self.object, z, &y) else {
            return Ok(Rational::zero());
        };
        self.alpha
            .interval_value(self.cat, &i)
            .ok_or_else(|| UniversalError::MissingValue(format!("interval {}", self.cat.interval_key(&i))).into())
    }
}

/// Covectors end strands and vectors start them.
impl BoundaryTraceAlgebra for MatrixTrace {
    type Gl = Vec<Rational>;
    type Gr = Vec<Rational>;

    fn interval(&self, z: &Vec<Rational>, mid: Option<&Matrix<Rational>>, y: &Vec<Rational>) -> Result<Rational, PseudoError> {
        let v = match mid {
            None => y.clone(),
            Some(m) => m.mul_vec(y)?,
        };
        if z.len() != v.len() {
            return Err(PseudoError::Malformed(format!("covector of length {} against vector of length {}", z.len(), v.len())));
        }
        Ok(z.iter().zip(&v).map(|(a, b)| a * b).sum())
    }
}
