use serde::{Deserialize, Serialize};

use super::PseudoError;
use crate::exact::{format_rational, parse_rational, rat, Matrix, Rational};
use crate::fincat::{conjugacy_classes, Category, FinCategory, FiniteMonoid, Label};
use crate::universal::TableEvaluation;

/// Class function on a finite monoid, one value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoCharacter {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    values: Vec<Rational>,
}

/// JSON form: `classes` lists one representative element name per class.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PseudoCharacterSpec {
    pub classes: Vec<String>,
    pub values: Vec<String>,
}

impl PseudoCharacter {
    /// Values listed in the order of [`conjugacy_classes`].
    pub fn from_class_values(m: &FiniteMonoid, values: Vec<Rational>) -> Result<Self, PseudoError> {
        let classes = conjugacy_classes(m);
        if classes.len() != values.len() {
            return Err(PseudoError::Malformed(format!(
                "{} values for {} conjugacy classes",
                values.len(),
                classes.len()
            )));
        }
        let mut class_of = vec![0; m.size()];
        for (i, c) in classes.iter().enumerate() {
            for &g in c {
                class_of[g] = i;
            }
        }
        Ok(PseudoCharacter { classes, class_of, values })
    }

    /// Builds from per-element values, rejecting functions not constant on classes.
    pub fn from_element_values(m: &FiniteMonoid, values: &[Rational]) -> Result<Self, PseudoError> {
        let classes = conjugacy_classes(m);
        let mut per_class = Vec::new();
        for c in &classes {
            if c.iter().any(|&g| values[g] != values[c[0]]) {
                return Err(PseudoError::Malformed(format!("not a class function on the class of {}", m.name(c[0]))));
            }
            per_class.push(values[c[0]].clone());
        }
        Self::from_class_values(m, per_class)
    }

    pub fn from_spec(m: &FiniteMonoid, spec: &PseudoCharacterSpec) -> Result<Self, PseudoError> {
        if spec.classes.len() != spec.values.len() {
            return Err(PseudoError::Malformed("classes and values differ in length".into()));
        }
        let classes = conjugacy_classes(m);
        let mut vals: Vec<Option<Rational>> = vec![None; classes.len()];
        for (name, v) in spec.classes.iter().zip(&spec.values) {
            let g = m.element(name)?;
            let c = classes.iter().position(|c| c.contains(&g)).expect("partition");
            if vals[c].is_some() {
                return Err(PseudoError::Malformed(format!("class of {name} listed twice")));
            }
            vals[c] = Some(parse_rational(v)?);
        }
        let values = vals
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| PseudoError::Malformed(format!("no value for the class of {}", m.name(classes[i][0])))))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_class_values(m, values)
    }

    pub fn to_spec(&self, m: &FiniteMonoid) -> PseudoCharacterSpec {
        PseudoCharacterSpec {
            classes: self.classes.iter().map(|c| m.name(c[0]).to_string()).collect(),
            values: self.values.iter().map(format_rational).collect(),
        }
    }

    pub fn value(&self, g: usize) -> &Rational {
        &self.values[self.class_of[g]]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Loop table on the one-object category of the monoid.
    pub fn to_evaluation(&self, cat: &FinCategory) -> TableEvaluation<Rational> {
        let mut t = TableEvaluation::new(None);
        for (g, c) in self.class_of.iter().enumerate() {
            let l = cat.canonical_loop(0, &Label::single(g));
            t.set_loop(l, self.values[*c].clone());
        }
        t
    }
}

/// Matrices indexed by monoid element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepData {
    pub dimension: usize,
    pub matrices: Vec<Matrix<Rational>>,
}

impl RepData {
    pub fn new(m: &FiniteMonoid, dimension: usize, matrices: Vec<Matrix<Rational>>) -> Result<Self, PseudoError> {
        if matrices.len() != m.size() {
            return Err(PseudoError::InvalidRep("one matrix per element expected".into()));
        }
        if matrices.iter().any(|a| a.rows() != dimension || a.cols() != dimension) {
            return Err(PseudoError::InvalidRep("matrix of the wrong size".into()));
        }
        if matrices[m.identity()] != Matrix::identity(dimension) {
            return Err(PseudoError::InvalidRep("identity element is not the identity matrix".into()));
        }
        for g in 0..m.size() {
            for h in 0..m.size() {
                if matrices[g].mul(&matrices[h])? != matrices[m.mul(g, h)] {
                    return Err(PseudoError::InvalidRep(format!("ρ({})ρ({}) ≠ ρ({}·{})", m.name(g), m.name(h), m.name(g), m.name(h))));
                }
            }
        }
        Ok(RepData { dimension, matrices })
    }

    pub fn trivial(m: &FiniteMonoid) -> Self {
        RepData { dimension: 1, matrices: vec![Matrix::identity(1); m.size()] }
    }

    /// Left regular representation of a group by permutation matrices.
    pub fn regular(m: &FiniteMonoid) -> Result<Self, PseudoError> {
        let n = m.size();
        let matrices = (0..n)
            .map(|g| Matrix::from_fn(n, n, |i, j| if m.mul(g, j) == i { rat(1) } else { rat(0) }))
            .collect();
        Self::new(m, n, matrices)
    }

    /// Direct sum of two representations of the same monoid.
    pub fn direct_sum(&self, o: &Self) -> Self {
        RepData {
            dimension: self.dimension + o.dimension,
            matrices: self.matrices.iter().zip(&o.matrices).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }
}

/// Character of a representation: traces, constant on classes.
pub fn char_of_rep(m: &FiniteMonoid, r: &RepData) -> Result<PseudoCharacter, PseudoError> {
    let traces: Vec<Rational> = r.matrices.iter().map(Matrix::trace).collect();
    PseudoCharacter::from_element_values(m, &traces)
}
