use num_traits::Zero;

use super::character::PseudoCharacter;
use super::PseudoError;
use crate::brauer::{cycles, permutation_sign, permutations, BrauerMorphism, FormalSum};
use crate::exact::{rat, Matrix, Rational};
use crate::fincat::{Category, FiniteMonoid, Label, ObjId};
use crate::universal::{evaluate_closed, Evaluation, UniversalError};

/// Elements that can be composed and traced; a failed composition closes to 0.
pub trait TraceAlgebra: Sync {
    type Elem: Clone + Send + Sync;

    /// `after ∘ before`, `None` when not composable.
    fn mul(&self, after: &Self::Elem, before: &Self::Elem) -> Option<Self::Elem>;
    fn trace(&self, e: &Self::Elem) -> Result<Rational, PseudoError>;
    /// Value on the identity of the object under study.
    fn identity_trace(&self) -> Rational;
}

/// Permutations of `0..n` with signs and cycles, lexicographic order.
pub struct PermTable {
    pub n: usize,
    pub entries: Vec<(i64, Vec<Vec<usize>>)>,
    pub perms: Vec<Vec<usize>>,
}

impl PermTable {
    pub fn new(n: usize) -> Self {
        let perms = permutations(n);
        let entries = perms.iter().map(|p| (permutation_sign(p), cycles(p))).collect();
        PermTable { n, entries, perms }
    }
}

/// Product along a cycle `[i, σ(i), …]`: g_{σ(i)} first, g_i last.
pub(crate) fn cycle_product<A: TraceAlgebra>(alg: &A, cyc: &[usize], g: &[A::Elem]) -> Option<A::Elem> {
    let k = cyc.len();
    let mut acc = g[cyc[1 % k]].clone();
    for step in 2..=k {
        acc = alg.mul(&g[cyc[step % k]], &acc)?;
    }
    Some(acc)
}

pub(crate) fn antisym_with<A: TraceAlgebra>(alg: &A, table: &PermTable, g: &[A::Elem]) -> Result<Rational, PseudoError> {
    let mut total = Rational::zero();
    'perm: for (sign, cyc) in &table.entries {
        let mut term = rat(*sign);
        for c in cyc {
            let Some(p) = cycle_product(alg, c, g) else { continue 'perm };
            term *= alg.trace(&p)?;
            if term.is_zero() {
                continue 'perm;
            }
        }
        total += term;
    }
    Ok(total)
}

/// Σ_σ sign(σ) Π_{cycles c} α(product of g along c).
pub fn antisym_trace<A: TraceAlgebra>(alg: &A, g: &[A::Elem]) -> Result<Rational, PseudoError> {
    antisym_with(alg, &PermTable::new(g.len()), g)
}

/// The same quantity through diagrams: close up Σ sign(σ)·(g₁⊗…⊗gₙ)∘σ and evaluate.
pub fn antisym_trace_diagrammatic(
    cat: &dyn Category,
    alpha: &dyn Evaluation<Rational>,
    x: ObjId,
    g: &[Label],
) -> Result<Rational, PseudoError> {
    let mut sum = FormalSum::zero();
    for p in permutations(g.len()) {
        sum.add_term(BrauerMorphism::permutation(cat, x, &p, g), rat(permutation_sign(&p)));
    }
    let closed = FormalSum::close_up(cat, &sum)?;
    let mut total = Rational::zero();
    for (d, c) in closed.terms() {
        total += c * evaluate_closed(cat, d, alpha)?;
    }
    Ok(total)
}

/// A finite monoid with a class function.
pub struct MonoidTrace<'a> {
    pub monoid: &'a FiniteMonoid,
    pub alpha: &'a PseudoCharacter,
}

impl TraceAlgebra for MonoidTrace<'_> {
    type Elem = usize;

    fn mul(&self, after: &usize, before: &usize) -> Option<usize> {
        Some(self.monoid.mul(*after, *before))
    }

    fn trace(&self, e: &usize) -> Result<Rational, PseudoError> {
        Ok(self.alpha.value(*e).clone())
    }

    fn identity_trace(&self) -> Rational {
        self.alpha.value(self.monoid.identity()).clone()
    }
}

/// Morphisms of a category evaluated on loop classes.
pub struct CategoryTrace<'a> {
    pub cat: &'a dyn Category,
    pub alpha: &'a dyn Evaluation<Rational>,
    pub object: ObjId,
    pub identity_value: Rational,
}

impl<'a> CategoryTrace<'a> {
    /// Identity value α(id_x).
    pub fn at_object(cat: &'a dyn Category, alpha: &'a dyn Evaluation<Rational>, x: ObjId) -> Result<Self, PseudoError> {
        let id = cat.identity(x);
        let l = cat.canonical_loop(x, &id);
        let identity_value = alpha
            .loop_value(cat, &l)
            .ok_or_else(|| UniversalError::MissingValue(format!("loop {}", cat.loop_key(&l))))?;
        Ok(CategoryTrace { cat, alpha, object: x, identity_value })
    }
}

impl TraceAlgebra for CategoryTrace<'_> {
    type Elem = Label;

    fn mul(&self, after: &Label, before: &Label) -> Option<Label> {
        self.cat.compose(after, before).ok()
    }

    fn trace(&self, e: &Label) -> Result<Rational, PseudoError> {
        let x = self.cat.source(e);
        if self.cat.target(e) != x {
            return Ok(Rational::zero());
        }
        let l = self.cat.canonical_loop(x, e);
        self.alpha
            .loop_value(self.cat, &l)
            .ok_or_else(|| UniversalError::MissingValue(format!("loop {}", self.cat.loop_key(&l))).into())
    }

    fn identity_trace(&self) -> Rational {
        self.identity_value.clone()
    }
}

/// Square rational matrices with the ordinary trace.
pub struct MatrixTrace {
    pub dimension: usize,
}

impl TraceAlgebra for MatrixTrace {
    type Elem = Matrix<Rational>;

    fn mul(&self, after: &Matrix<Rational>, before: &Matrix<Rational>) -> Option<Matrix<Rational>> {
        after.mul(before).ok()
    }

    fn trace(&self, e: &Matrix<Rational>) -> Result<Rational, PseudoError> {
        Ok(e.trace())
    }

    fn identity_trace(&self) -> Rational {
        rat(self.dimension as i64)
    }
}
