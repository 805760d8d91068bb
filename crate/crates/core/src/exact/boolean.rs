use std::collections::BTreeSet;
use std::fmt;

use super::matrix::{Matrix, Semiring};

/// Element of the Boolean semiring, where 1 + 1 = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Boolean(pub bool);

impl Semiring for Boolean {
    fn nil() -> Self {
        Boolean(false)
    }
    fn unit() -> Self {
        Boolean(true)
    }
    fn plus(&self, o: &Self) -> Self {
        Boolean(self.0 || o.0)
    }
    fn times(&self, o: &Self) -> Self {
        Boolean(self.0 && o.0)
    }
}

impl fmt::Display for Boolean {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

/// Pairwise distinct rows in lexicographic order (0 < 1).
pub fn distinct_rows(m: &Matrix<Boolean>) -> Vec<Vec<Boolean>> {
    (0..m.rows())
        .map(|i| m.row(i).to_vec())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Distinct nonzero rows that are not the join of the rows strictly below them.
pub fn join_irreducible_rows(m: &Matrix<Boolean>) -> Vec<Vec<Boolean>> {
    let rows = distinct_rows(m);
    let below = |s: &[Boolean], r: &[Boolean]| s != r && s.iter().zip(r).all(|(a, b)| !a.0 || b.0);
    rows.iter()
        .filter(|r| r.iter().any(|b| b.0))
        .filter(|r| {
            let mut join = vec![Boolean(false); r.len()];
            for s in rows.iter().filter(|s| below(s, r)) {
                for (j, b) in join.iter_mut().zip(s) {
                    *j = j.plus(b);
                }
            }
            join != **r
        })
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bm(rows: &[&[u8]]) -> Matrix<Boolean> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&b| Boolean(b == 1)).collect()).collect())
            .unwrap()
    }

    fn bits(rows: Vec<Vec<Boolean>>) -> Vec<Vec<u8>> {
        rows.into_iter().map(|r| r.into_iter().map(|b| b.0 as u8).collect()).collect()
    }

    #[test]
    fn idempotent_addition() {
        assert_eq!(Boolean(true).plus(&Boolean(true)), Boolean(true));
    }

    #[test]
    fn distinct_row_examples() {
        assert_eq!(bits(distinct_rows(&bm(&[&[1, 0], &[0, 1]]))), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(bits(distinct_rows(&bm(&[&[0, 0], &[0, 0], &[0, 0]]))), vec![vec![0, 0]]);
        assert_eq!(
            bits(distinct_rows(&bm(&[&[1, 1], &[1, 1], &[0, 1]]))),
            vec![vec![0, 1], vec![1, 1]]
        );
    }

    #[test]
    fn join_irreducibles() {
        let m = bm(&[&[1, 0], &[0, 1], &[1, 1], &[0, 0]]);
        assert_eq!(bits(join_irreducible_rows(&m)), vec![vec![0, 1], vec![1, 0]]);
        let chain = bm(&[&[0, 1], &[1, 1]]);
        assert_eq!(join_irreducible_rows(&chain).len(), 2);
    }
}
