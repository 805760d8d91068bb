use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::degree::{degree_with, DegreeReport};
use super::trace::MatrixTrace;
use super::PseudoError;
use crate::exact::{Matrix, Rational};
use crate::fincat::rotate_least;
use crate::Execution;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexSpec {
    pub name: String,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub name: String,
    pub from: String,
    pub to: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphHolonomySpec {
    pub vertices: Vec<VertexSpec>,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub name: String,
    pub from: usize,
    pub to: usize,
    pub matrix: Matrix<Rational>,
}

/// A directed graph with an invertible matrix on every edge.
#[derive(Clone, Debug)]
pub struct GraphHolonomy {
    names: Vec<String>,
    dims: Vec<usize>,
    edges: Vec<Edge>,
}

impl GraphHolonomy {
    pub fn new(names: Vec<String>, dims: Vec<usize>, edges: Vec<Edge>) -> Result<Self, PseudoError> {
        if names.len() != dims.len() {
            return Err(PseudoError::Malformed("vertex names and dimensions differ in length".into()));
        }
        for e in &edges {
            if e.from >= dims.len() || e.to >= dims.len() {
                return Err(PseudoError::Malformed(format!("edge {} has an unknown endpoint", e.name)));
            }
            let (r, c) = (e.matrix.rows(), e.matrix.cols());
            if r != dims[e.to] || c != dims[e.from] || r != c {
                return Err(PseudoError::Malformed(format!("edge {} has a {r}x{c} matrix", e.name)));
            }
            if e.matrix.det()?.is_zero() {
                return Err(PseudoError::NonInvertibleEdge(e.name.clone()));
            }
        }
        Ok(GraphHolonomy { names, dims, edges })
    }

    pub fn from_spec(spec: &GraphHolonomySpec) -> Result<Self, PseudoError> {
        let names: Vec<String> = spec.vertices.iter().map(|v| v.name.clone()).collect();
        let vertex = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| PseudoError::Malformed(format!("unknown vertex {s}")))
        };
        let mut edges = Vec::new();
        for e in &spec.edges {
            edges.push(Edge {
                name: e.name.clone(),
                from: vertex(&e.from)?,
                to: vertex(&e.to)?,
                matrix: Matrix::parse_rows(&e.matrix)?,
            });
        }
        Self::new(names.clone(), spec.vertices.iter().map(|v| v.dim).collect(), edges)
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Closed walks from `base` of length `1..=max_len`, as edge index lists in traversal order.
    pub fn closed_walks(&self, base: usize, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut stack = vec![(base, Vec::new())];
        while let Some((v, w)) = stack.pop() {
            if !w.is_empty() && v == base {
                out.push(w.clone());
            }
            if w.len() == max_len {
                continue;
            }
            for (i, e) in self.edges.iter().enumerate().rev() {
                if e.from == v {
                    let mut w2 = w.clone();
                    w2.push(i);
                    stack.push((e.to, w2));
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// Ordered product: the first edge of the walk acts first.
    pub fn holonomy(&self, walk: &[usize]) -> Result<Matrix<Rational>, PseudoError> {
        let Some(&first) = walk.first() else {
            return Err(PseudoError::Malformed("empty walk".into()));
        };
        let mut m = self.edges[first].matrix.clone();
        for &e in &walk[1..] {
            m = self.edges[e].matrix.mul(&m)?;
        }
        Ok(m)
    }

    pub fn walk_name(&self, walk: &[usize]) -> String {
        walk.iter().map(|&e| self.edges[e].name.as_str()).collect::<Vec<_>>().join(".")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HolonomyReport {
    /// Canonical cyclic walk (least rotation of edge indices) to its value.
    pub table: BTreeMap<String, Rational>,
    pub degree: DegreeReport,
    pub witness_walks: Vec<String>,
}

/// Traces of all closed walks up to `max_len` plus the degree at `base`.
pub fn graph_pseudoholonomy(
    gh: &GraphHolonomy,
    base: usize,
    max_len: usize,
    max_d: usize,
    exec: Execution,
) -> Result<HolonomyReport, PseudoError> {
    let mut table = BTreeMap::new();
    for v in 0..gh.dims.len() {
        for w in gh.closed_walks(v, max_len) {
            let key = gh.walk_name(&rotate_least(&w));
            if let std::collections::btree_map::Entry::Vacant(e) = table.entry(key) {
                e.insert(gh.holonomy(&w)?.trace());
            }
        }
    }
    let mut walks = vec![Vec::new()];
    walks.extend(gh.closed_walks(base, max_len));
    let mut mats: Vec<Matrix<Rational>> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    for w in &walks {
        let m = if w.is_empty() { Matrix::identity(gh.dims[base]) } else { gh.holonomy(w)? };
        if !mats.contains(&m) {
            mats.push(m);
            names.push(if w.is_empty() { gh.names[base].clone() } else { gh.walk_name(w) });
        }
    }
    let alg = MatrixTrace { dimension: gh.dims[base] };
    let degree = degree_with(&alg, &mats, max_d, exec)?;
    let witness_walks = degree.witness.iter().map(|&i| names[i].clone()).collect();
    Ok(HolonomyReport { table, degree, witness_walks })
}

