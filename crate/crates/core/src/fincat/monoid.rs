use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::category::{CategorySpec, MorphismSpec};
use super::{FinCategory, FincatError, UnionFind};

/// JSON form: `{ "size": n, "identity": i, "table": [[...]] }`, optional element names.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MonoidSpec {
    pub size: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

/// A finite monoid by Cayley table; `table[g][h] = g·h` (apply h first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    identity: usize,
    table: Vec<Vec<usize>>,
    names: Vec<String>,
}

impl FiniteMonoid {
    pub fn new(identity: usize, table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self, FincatError> {
        let n = table.len();
        if n == 0 || identity >= n {
            return Err(FincatError::Malformed("empty monoid or identity out of range".into()));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(FincatError::Malformed("table is not n×n over 0..n".into()));
        }
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(_) => return Err(FincatError::Malformed("names length differs from size".into())),
            None => (0..n).map(|i| if i == identity { "e".to_string() } else { format!("g{i}") }).collect(),
        };
        for g in 0..n {
            if table[identity][g] != g || table[g][identity] != g {
                return Err(FincatError::AxiomViolation(format!("identity not neutral on {}", names[g])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(FincatError::AxiomViolation(format!(
                            "associativity fails on ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteMonoid { identity, table, names })
    }

    pub fn from_spec(spec: &MonoidSpec) -> Result<Self, FincatError> {
        if spec.table.len() != spec.size {
            return Err(FincatError::Malformed("table size differs from size".into()));
        }
        Self::new(spec.identity, spec.table.clone(), spec.names.clone())
    }

    pub fn to_spec(&self) -> MonoidSpec {
        MonoidSpec {
            size: self.size(),
            identity: self.identity,
            table: self.table.clone(),
            names: Some(self.names.clone()),
        }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Z/n with element k the residue k.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n).map(|k| if k == 0 { "e".into() } else { format!("r{k}") }).collect();
        Self::new(0, table, Some(names)).expect("cyclic group")
    }

    /// The group of the given permutations (one-line, 0-based), closed under
    /// composition by the caller; element 0 must be the identity.
    pub fn from_permutations(perms: &[Vec<usize>]) -> Result<Self, FincatError> {
        let index: BTreeMap<&Vec<usize>, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut table = Vec::new();
        for g in perms {
            let mut row = Vec::new();
            for h in perms {
                let gh: Vec<usize> = h.iter().map(|&i| g[i]).collect();
                row.push(*index.get(&gh).ok_or_else(|| FincatError::Malformed("not closed".into()))?);
            }
            table.push(row);
        }
        let names = perms
            .iter()
            .map(|p| p.iter().map(|i| (i + 1).to_string()).collect::<String>())
            .collect();
        Self::new(0, table, Some(names))
    }

    /// S₃ with elements in lexicographic one-line order.
    pub fn symmetric3() -> Self {
        let perms = vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        Self::from_permutations(&perms).expect("S3")
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(g, acc))
    }

    pub fn inverse(&self, g: usize) -> Option<usize> {
        (0..self.size()).find(|&h| self.mul(g, h) == self.identity && self.mul(h, g) == self.identity)
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element(&self, name: &str) -> Result<usize, FincatError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| FincatError::UnknownMorphism(name.to_string()))
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// One-object category with this endomorphism monoid.
    pub fn to_category(&self) -> FinCategory {
        let n = self.size();
        let spec = CategorySpec {
            objects: vec!["X".into()],
            morphisms: self
                .names
                .iter()
                .map(|s| MorphismSpec { name: s.clone(), source: "X".into(), target: "X".into() })
                .collect(),
            identities: [("X".to_string(), self.names[self.identity].clone())].into(),
            compose: (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .map(|(a, b)| [self.names[a].clone(), self.names[b].clone(), self.names[self.table[a][b]].clone()])
                .collect(),
            boundary: None,
        };
        FinCategory::from_spec(&spec).expect("validated monoid")
    }
}

/// Finest partition closed under gh ~ hg, classes ordered by least element.
pub fn conjugacy_classes(m: &FiniteMonoid) -> Vec<Vec<usize>> {
    let n = m.size();
    let mut uf = UnionFind::new(n);
    for g in 0..n {
        for h in 0..n {
            uf.union(m.mul(g, h), m.mul(h, g));
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for g in 0..n {
        classes.entry(uf.find(g)).or_default().push(g);
    }
    classes.into_values().collect()
}
