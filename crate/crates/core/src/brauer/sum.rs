use num_traits::Zero;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::perm::{permutation_sign, permutations};
use super::{BrauerError, BrauerMorphism};
use crate::exact::{rat, Rational};
use crate::fincat::{Category, ObjId};

/// Finite ℚ-linear combination of diagrams with a common source and target.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalSum {
    terms: BTreeMap<BrauerMorphism, Rational>,
}

impl FormalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(d: BrauerMorphism) -> Self {
        let mut s = Self::zero();
        s.add_term(d, rat(1));
        s
    }

    pub fn add_term(&mut self, d: BrauerMorphism, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerMorphism, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &BrauerMorphism) -> Rational {
        self.terms.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (d, v) in &self.terms {
            out.add_term(d.clone(), v * c);
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (d, v) in &o.terms {
            out.add_term(d.clone(), v.clone());
        }
        out
    }

    /// Bilinear extension of composition.
    pub fn compose(cat: &dyn Category, after: &Self, before: &Self) -> Result<Self, BrauerError> {
        let mut out = Self::zero();
        for (a, ca) in &after.terms {
            for (b, cb) in &before.terms {
                out.add_term(BrauerMorphism::compose(cat, a, b)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// Linear extension of the trace closure.
    pub fn close_up(cat: &dyn Category, s: &Self) -> Result<Self, BrauerError> {
        let mut out = Self::zero();
        for (d, c) in &s.terms {
            out.add_term(BrauerMorphism::close_up(cat, d)?, c.clone());
        }
        Ok(out)
    }
}

/// Σ_σ sign(σ) σ on n copies of (x,+), identity-labelled strands.
pub fn antisymmetrizer(cat: &dyn Category, x: ObjId, n: usize) -> FormalSum {
    let mut s = FormalSum::zero();
    for p in permutations(n) {
        s.add_term(BrauerMorphism::permutation(cat, x, &p, &[]), rat(permutation_sign(&p)));
    }
    s
}
