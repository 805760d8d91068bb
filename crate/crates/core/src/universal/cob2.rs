use super::UniversalError;
use crate::exact::{Matrix, Rational};
use crate::fincat::UnionFind;
use crate::Execution;

/// A cobordism from ∅ to `m` circles: a partition of the circles into
/// connected components, each with a genus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionDiagram {
    pub m: usize,
    /// Blocks of `0..m`, each sorted, ordered by least element.
    pub blocks: Vec<Vec<usize>>,
    pub genus: Vec<usize>,
}

impl PartitionDiagram {
    pub fn new(m: usize, mut blocks: Vec<Vec<usize>>, genus: Vec<usize>) -> Result<Self, UniversalError> {
        let mut seen = vec![false; m];
        for b in &blocks {
            for &c in b {
                if c >= m || seen[c] {
                    return Err(UniversalError::Malformed("blocks must partition the circles".into()));
                }
                seen[c] = true;
            }
        }
        if seen.iter().any(|s| !s) || blocks.iter().any(Vec::is_empty) || genus.len() != blocks.len() {
            return Err(UniversalError::Malformed("blocks must partition the circles".into()));
        }
        let mut pairs: Vec<(Vec<usize>, usize)> = blocks
            .drain(..)
            .map(|mut b| {
                b.sort();
                b
            })
            .zip(genus)
            .collect();
        pairs.sort();
        let (blocks, genus) = pairs.into_iter().unzip();
        Ok(PartitionDiagram { m, blocks, genus })
    }

    fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.m];
        for (i, b) in self.blocks.iter().enumerate() {
            for &c in b {
                out[c] = i;
            }
        }
        out
    }
}

/// Set partitions of `0..m` via restricted growth strings.
pub fn set_partitions(m: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, m: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == m {
            let k = rgs.iter().max().map_or(0, |x| x + 1);
            let mut blocks = vec![Vec::new(); k];
            for (c, &b) in rgs.iter().enumerate() {
                blocks[b].push(c);
            }
            out.push(blocks);
            return;
        }
        let k = rgs.iter().max().map_or(0, |x| x + 1);
        for b in 0..=k {
            rgs.push(b);
            rec(i + 1, m, rgs, out);
            rgs.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, &mut Vec::new(), &mut out);
    out
}

/// All diagrams on `m` circles with per-block genus ≤ `genus_cap`.
pub fn partition_diagrams(m: usize, genus_cap: usize) -> Vec<PartitionDiagram> {
    let mut out = Vec::new();
    for blocks in set_partitions(m) {
        let k = blocks.len();
        let total = (genus_cap + 1).pow(k as u32);
        for code in 0..total {
            let mut c = code;
            let genus = (0..k)
                .map(|_| {
                    let g = c % (genus_cap + 1);
                    c /= genus_cap + 1;
                    g
                })
                .collect();
            out.push(PartitionDiagram { m, blocks: blocks.clone(), genus });
        }
    }
    out
}

/// Closed surface obtained by gluing along the m circles, evaluated as the
/// product of α over its components.
pub fn glue_partition_diagrams(
    d1: &PartitionDiagram,
    d2: &PartitionDiagram,
    alpha: &[Rational],
) -> Result<Rational, UniversalError> {
    if d1.m != d2.m {
        return Err(UniversalError::Malformed("diagrams have different circle counts".into()));
    }
    let (b1, b2) = (d1.blocks.len(), d2.blocks.len());
    let mut uf = UnionFind::new(b1 + b2);
    let (o1, o2) = (d1.block_of(), d2.block_of());
    for c in 0..d1.m {
        uf.union(o1[c], b1 + o2[c]);
    }
    let mut vertices = vec![0usize; b1 + b2];
    let mut edges = vec![0usize; b1 + b2];
    let mut genus = vec![0usize; b1 + b2];
    for v in 0..b1 + b2 {
        let r = uf.find(v);
        vertices[r] += 1;
        genus[r] += if v < b1 { d1.genus[v] } else { d2.genus[v - b1] };
    }
    for c in 0..d1.m {
        edges[uf.find(o1[c])] += 1;
    }
    let mut acc = Rational::from_integer(1.into());
    for r in 0..b1 + b2 {
        if vertices[r] == 0 {
            continue;
        }
        let g = genus[r] + edges[r] + 1 - vertices[r];
        let v = alpha.get(g).ok_or(UniversalError::SequenceTooShort { needed: g, len: alpha.len() })?;
        acc *= v;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cob2Report {
    pub m: usize,
    pub genus_cap: usize,
    pub spanning_size: usize,
    pub dimension: usize,
    pub previous_dimension: Option<usize>,
    pub gram: Matrix<Rational>,
}

impl Cob2Report {
    pub fn stabilized(&self) -> bool {
        self.previous_dimension == Some(self.dimension)
    }
}

fn cob2_rank(m: usize, alpha: &[Rational], cap: usize, exec: Execution) -> Result<(usize, Matrix<Rational>), UniversalError> {
    let span = partition_diagrams(m, cap);
    let n = span.len();
    let entries = exec.try_map(&(0..n * n).collect::<Vec<_>>(), |&k| glue_partition_diagrams(&span[k / n], &span[k % n], alpha))?;
    let gram = Matrix::from_vec(n, n, entries)?;
    Ok((n, gram))
}

/// Rank of the gluing pairing on diagrams with genus ≤ `genus_cap`.
pub fn cob2_state_space(m: usize, alpha: &[Rational], genus_cap: usize) -> Result<Cob2Report, UniversalError> {
    let exec = Execution::default();
    let (spanning_size, gram) = cob2_rank(m, alpha, genus_cap, exec)?;
    let dimension = gram.rank();
    let previous_dimension = match genus_cap {
        0 => None,
        c => Some(cob2_rank(m, alpha, c - 1, exec)?.1.rank()),
    };
    Ok(Cob2Report { m, genus_cap, spanning_size, dimension, previous_dimension, gram })
}
