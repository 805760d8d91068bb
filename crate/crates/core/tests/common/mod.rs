#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::Zero;

use pseudotqft::brauer::{permutation_sign, Arc, BrauerMorphism, HalfInterval, Sign, SignedSequence};
use pseudotqft::exact::{rat, ratio, Matrix, Polynomial, Rational};
use pseudotqft::fincat::{Category, CategorySpec, FinCategory, FiniteMonoid, IntervalClass, Label, Loop, MorphismSpec};
use pseudotqft::pseudochar::RepData;
use pseudotqft::tqft2::{Block, ClassificationData, FrobeniusAlgebra};
use pseudotqft::universal::{Dfa, Evaluation, PartitionDiagram, TableEvaluation};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn q(n: i64) -> Rational {
    rat(n)
}

pub fn qq(n: i64, d: i64) -> Rational {
    ratio(n, d)
}

pub fn mat(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
}

pub fn random_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    ratio(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn random_seq<R: Rng>(rng: &mut R, len: usize) -> SignedSequence {
    SignedSequence(
        (0..len)
            .map(|_| (0, if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }))
            .collect(),
    )
}

/// Random matching between given sequences of a one-object category; leftover
/// endpoints become half-intervals (the category must then carry a boundary).
pub fn random_diagram<R: Rng>(
    rng: &mut R,
    cat: &dyn Category,
    source: &SignedSequence,
    target: &SignedSequence,
    cap: usize,
) -> BrauerMorphism {
    let shell = BrauerMorphism::new(source.clone(), target.clone(), vec![], vec![]);
    let n = shell.endpoint_count();
    let mut tails: Vec<usize> = (0..n).filter(|&e| shell.is_tail(e)).collect();
    let mut heads: Vec<usize> = (0..n).filter(|&e| !shell.is_tail(e)).collect();
    tails.shuffle(rng);
    heads.shuffle(rng);
    let k = if cat.has_boundary() {
        rng.gen_range(0..=tails.len().min(heads.len()))
    } else {
        tails.len().min(heads.len())
    };
    let words = cat.hom(0, 0, cap);
    let mut arcs = Vec::new();
    for i in 0..k {
        arcs.push(Arc { tail: tails[i], head: heads[i], label: words.choose(rng).unwrap().clone() });
    }
    let mut halves = Vec::new();
    for &t in &tails[k..] {
        halves.push(HalfInterval { end: t, elem: cat.gl_elements(0, cap).choose(rng).unwrap().clone() });
    }
    for &h in &heads[k..] {
        halves.push(HalfInterval { end: h, elem: cat.gr_elements(0, cap).choose(rng).unwrap().clone() });
    }
    BrauerMorphism::new(source.clone(), target.clone(), arcs, halves)
}

/// Random sequence pair with equal numbers of tails and heads overall.
pub fn balanced_pair<R: Rng>(rng: &mut R, a: usize, b: usize) -> (SignedSequence, SignedSequence) {
    loop {
        let s = random_seq(rng, a);
        let t = random_seq(rng, b);
        let d = BrauerMorphism::new(s.clone(), t.clone(), vec![], vec![]);
        let tails = (0..d.endpoint_count()).filter(|&e| d.is_tail(e)).count();
        if 2 * tails == d.endpoint_count() {
            return (s, t);
        }
    }
}

pub const S3_PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

pub fn s3_permutation_rep(m: &FiniteMonoid) -> RepData {
    let mats = S3_PERMS
        .iter()
        .map(|p| Matrix::from_fn(3, 3, |i, j| if p[j] == i { rat(1) } else { rat(0) }))
        .collect();
    RepData::new(m, 3, mats).unwrap()
}

pub fn s3_sign_rep(m: &FiniteMonoid) -> RepData {
    let mats = S3_PERMS.iter().map(|p| Matrix::identity(1).scale(&rat(permutation_sign(p)))).collect();
    RepData::new(m, 1, mats).unwrap()
}

/// Sum-zero subspace in the basis e1−e2, e2−e3: (a, b, c) = a·v1 − c·v2.
pub fn s3_standard_rep(m: &FiniteMonoid) -> RepData {
    let basis = [[1i64, -1, 0], [0, 1, -1]];
    let mats = S3_PERMS
        .iter()
        .map(|p| {
            let mut cols = Vec::new();
            for v in &basis {
                let mut w = [0i64; 3];
                for j in 0..3 {
                    w[p[j]] += v[j];
                }
                cols.push([w[0], -w[2]]);
            }
            Matrix::from_fn(2, 2, |i, j| rat(cols[j][i]))
        })
        .collect();
    RepData::new(m, 2, mats).unwrap()
}

pub fn z2_sign_rep(m: &FiniteMonoid) -> RepData {
    RepData::new(m, 1, vec![mat(&[&[1]]), mat(&[&[-1]])]).unwrap()
}

/// Z/3 acting on the plane by the rational rotation of order 3.
pub fn z3_standard_rep(m: &FiniteMonoid) -> RepData {
    let r = mat(&[&[0, -1], &[1, -1]]);
    let mats = (0..3).map(|k| r.pow(k).unwrap()).collect();
    RepData::new(m, 2, mats).unwrap()
}

/// Evaluation by text keys; missing keys have no value.
#[derive(Default)]
pub struct KeyedEvaluation {
    pub loops: BTreeMap<String, Rational>,
    pub intervals: BTreeMap<String, Rational>,
}

impl Evaluation<Rational> for KeyedEvaluation {
    fn loop_value(&self, cat: &dyn Category, l: &Loop) -> Option<Rational> {
        self.loops.get(&cat.loop_key(l)).cloned()
    }
    fn interval_value(&self, cat: &dyn Category, i: &IntervalClass) -> Option<Rational> {
        self.intervals.get(&cat.interval_key(i)).cloned()
    }
}

/// Random values on every loop and interval class of words up to `len`.
pub fn random_keyed<R: Rng>(rng: &mut R, cat: &dyn Category, len: usize) -> KeyedEvaluation {
    let mut e = KeyedEvaluation::default();
    for w in cat.hom(0, 0, len) {
        let l = cat.canonical_loop(0, &w);
        let v = random_rational(rng, 9, 5);
        e.loops.entry(cat.loop_key(&l)).or_insert(v);
        if cat.has_boundary() {
            let i = cat.canonical_interval(0, &Label(Vec::new()), &w).unwrap();
            let v = random_rational(rng, 9, 5);
            e.intervals.entry(cat.interval_key(&i)).or_insert(v);
        }
    }
    e
}

/// ⊗ᵢ ℚ[xᵢ]/(xᵢ^{kᵢ}) on the monomial basis, counit left at zero.
pub fn monomial_algebra(shape: &[usize]) -> (Vec<Vec<Vec<Rational>>>, Vec<Rational>) {
    let mut exps: Vec<Vec<usize>> = vec![vec![]];
    for &k in shape {
        exps = exps.into_iter().flat_map(|e| (0..k).map(move |a| [e.clone(), vec![a]].concat())).collect();
    }
    let n = exps.len();
    let index = |e: &[usize]| exps.iter().position(|x| x == e);
    let structure = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut v = vec![q(0); n];
                    let sum: Vec<usize> = exps[i].iter().zip(&exps[j]).map(|(a, b)| a + b).collect();
                    if sum.iter().zip(shape).all(|(a, k)| a < k) {
                        v[index(&sum).unwrap()] = q(1);
                    }
                    v
                })
                .collect()
        })
        .collect();
    let mut unit = vec![q(0); n];
    unit[0] = q(1);
    (structure, unit)
}

fn block_product(blocks: &[(Vec<Vec<Vec<Rational>>>, Vec<Rational>)]) -> (Vec<Vec<Vec<Rational>>>, Vec<Rational>) {
    let n: usize = blocks.iter().map(|b| b.1.len()).sum();
    let mut structure = vec![vec![vec![q(0); n]; n]; n];
    let mut unit = Vec::new();
    let mut off = 0;
    for (c, u) in blocks {
        let k = u.len();
        for i in 0..k {
            for j in 0..k {
                structure[off + i][off + j][off..off + k].clone_from_slice(&c[i][j]);
            }
        }
        unit.extend_from_slice(u);
        off += k;
    }
    (structure, unit)
}

/// Rewrites an algebra in the basis given by the columns of `p`.
pub fn change_basis(fa: &FrobeniusAlgebra, p: &Matrix<Rational>) -> FrobeniusAlgebra {
    let n = fa.dim();
    let pinv = p.inverse().unwrap();
    let col = |j: usize| (0..n).map(|i| p.get(i, j).clone()).collect::<Vec<_>>();
    let structure = (0..n)
        .map(|i| (0..n).map(|j| pinv.mul_vec(&fa.mul(&col(i), &col(j))).unwrap()).collect())
        .collect();
    let unit = pinv.mul_vec(fa.unit()).unwrap();
    let counit = (0..n).map(|j| fa.epsilon(&col(j))).collect();
    FrobeniusAlgebra::new(structure, unit, counit).unwrap()
}

pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix<Rational> {
    loop {
        let entries = (0..n * n).map(|_| ratio(rng.gen_range(-2..=2), 1)).collect();
        let m = Matrix::from_vec(n, n, entries).unwrap();
        if n == 0 || !m.det().unwrap().is_zero() {
            return m;
        }
    }
}

/// Random product of fields and monomial algebras with a random
/// nondegenerate counit, in the block basis.
pub fn random_block_frobenius<R: Rng>(rng: &mut R, max_dim: usize) -> FrobeniusAlgebra {
    loop {
        let mut blocks = Vec::new();
        let mut dim = 0;
        let target = rng.gen_range(1..=max_dim);
        while dim < target {
            let shape: Vec<usize> = match rng.gen_range(0..4) {
                0 | 1 => vec![1],
                2 => vec![rng.gen_range(2..=3)],
                _ => vec![2, 2],
            };
            let k: usize = shape.iter().product();
            if dim + k > target {
                continue;
            }
            dim += k;
            blocks.push(monomial_algebra(&shape));
        }
        let (structure, unit) = block_product(&blocks);
        let counit = (0..dim).map(|_| random_rational(rng, 3, 3)).collect();
        let fa = FrobeniusAlgebra::new_unchecked(structure, unit, counit);
        if fa.validate().is_ok() {
            return fa;
        }
    }
}

/// A random valid algebra of dimension ≤ `max_dim` in a scrambled basis.
pub fn random_frobenius<R: Rng>(rng: &mut R, max_dim: usize) -> FrobeniusAlgebra {
    let fa = random_block_frobenius(rng, max_dim);
    let p = random_invertible(rng, fa.dim());
    change_basis(&fa, &p)
}

/// m ∈ {0, 2, 3, 4}, at most three distinct nonzero rational poles.
pub fn random_classification<R: Rng>(rng: &mut R) -> ClassificationData {
    let m = [0u64, 2, 3, 4][rng.gen_range(0..4)];
    let mu = if m == 0 { q(0) } else { random_rational(rng, 9, 4) };
    let mut poles: Vec<(Rational, u64)> = Vec::new();
    for _ in 0..rng.gen_range(0..=3) {
        let l = loop {
            let l = random_rational(rng, 4, 3);
            if !l.is_zero() {
                break l;
            }
        };
        if poles.iter().all(|(x, _)| *x != l) {
            poles.push((l, rng.gen_range(1..=3)));
        }
    }
    ClassificationData::new(mu, m, poles).unwrap()
}

/// Nondeterministic automaton; `delta[state][letter]` lists successors.
pub struct Nfa {
    pub states: usize,
    pub start: Vec<usize>,
    pub accepting: Vec<usize>,
    pub delta: Vec<Vec<Vec<usize>>>,
}

/// Subset construction over reachable subsets, the empty subset included when reached.
pub fn determinize(nfa: &Nfa, letters: usize) -> Dfa {
    let norm = |mut v: Vec<usize>| {
        v.sort();
        v.dedup();
        v
    };
    let mut subsets = vec![norm(nfa.start.clone())];
    let mut delta = Vec::new();
    let mut i = 0;
    while i < subsets.len() {
        let mut row = Vec::new();
        for a in 0..letters {
            let next = norm(subsets[i].iter().flat_map(|&s| nfa.delta[s][a].iter().copied()).collect());
            let j = match subsets.iter().position(|s| *s == next) {
                Some(j) => j,
                None => {
                    subsets.push(next);
                    subsets.len() - 1
                }
            };
            row.push(j);
        }
        delta.push(row);
        i += 1;
    }
    let accepting = (0..subsets.len()).filter(|&k| subsets[k].iter().any(|s| nfa.accepting.contains(s))).collect();
    Dfa { states: subsets.len(), start: 0, accepting, delta }
}

/// Size of the minimal complete DFA: reachable part, then Moore refinement.
pub fn minimal_state_count(dfa: &Dfa) -> usize {
    let mut reach = vec![dfa.start];
    let mut i = 0;
    while i < reach.len() {
        for &t in &dfa.delta[reach[i]] {
            if !reach.contains(&t) {
                reach.push(t);
            }
        }
        i += 1;
    }
    let mut class: Vec<usize> = (0..dfa.states).map(|s| dfa.accepting.contains(&s) as usize).collect();
    loop {
        let sig: Vec<(usize, Vec<usize>)> =
            (0..dfa.states).map(|s| (class[s], dfa.delta[s].iter().map(|&t| class[t]).collect())).collect();
        let mut keys: Vec<&(usize, Vec<usize>)> = reach.iter().map(|&s| &sig[s]).collect();
        keys.sort();
        keys.dedup();
        let next: Vec<usize> = (0..dfa.states).map(|s| keys.iter().position(|k| **k == sig[s]).unwrap_or(usize::MAX)).collect();
        let count = |c: &[usize]| {
            let mut v: Vec<usize> = reach.iter().map(|&s| c[s]).collect();
            v.sort();
            v.dedup();
            v.len()
        };
        if count(&next) == count(&class) {
            return count(&next);
        }
        class = next;
    }
}

/// Δ applied to the last tensor factor: a ↦ Σᵢ a·uᵢ ⊗ vᵢ.
fn comultiply_last(fa: &FrobeniusAlgebra, t: &BTreeMap<Vec<usize>, Rational>, duals: &[Vec<Rational>]) -> BTreeMap<Vec<usize>, Rational> {
    let n = fa.dim();
    let basis = |i: usize| (0..n).map(|k| if k == i { q(1) } else { q(0) }).collect::<Vec<_>>();
    let mut out: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for (idx, c) in t {
        let (last, head) = idx.split_last().unwrap();
        for (i, v) in duals.iter().enumerate() {
            let au = fa.mul(&basis(*last), &basis(i));
            for (p, x) in au.iter().enumerate() {
                for (r, y) in v.iter().enumerate() {
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    let mut key = head.to_vec();
                    key.push(p);
                    key.push(r);
                    *out.entry(key).or_insert_with(|| q(0)) += c * x * y;
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The element of B^{⊗m} a partition diagram defines: per block, hᵍ comultiplied onto its circles.
pub fn diagram_tensor(fa: &FrobeniusAlgebra, d: &PartitionDiagram) -> BTreeMap<Vec<usize>, Rational> {
    let hd = fa.handle_element().unwrap();
    let mut full: BTreeMap<Vec<usize>, Rational> = BTreeMap::from([(vec![usize::MAX; d.m], q(1))]);
    for (block, &g) in d.blocks.iter().zip(&d.genus) {
        let mut a = fa.unit().to_vec();
        for _ in 0..g {
            a = fa.mul(&a, &hd.handle);
        }
        let mut t: BTreeMap<Vec<usize>, Rational> =
            a.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (vec![i], c.clone())).collect();
        for _ in 1..block.len() {
            t = comultiply_last(fa, &t, &hd.dual_basis);
        }
        let mut next = BTreeMap::new();
        for (idx, c) in &full {
            for (bidx, bc) in &t {
                let mut key = idx.clone();
                for (pos, &circle) in block.iter().enumerate() {
                    key[circle] = bidx[pos];
                }
                *next.entry(key).or_insert_with(|| q(0)) += c * bc;
            }
        }
        full = next;
    }
    full
}

/// Pairs two diagram tensors through ε(uᵢuⱼ) on every circle.
pub fn tensor_glue(fa: &FrobeniusAlgebra, d1: &PartitionDiagram, d2: &PartitionDiagram) -> Rational {
    let g = fa.gram();
    let (t1, t2) = (diagram_tensor(fa, d1), diagram_tensor(fa, d2));
    let mut total = q(0);
    for (i, a) in &t1 {
        for (j, b) in &t2 {
            let mut v = a * b;
            for (x, y) in i.iter().zip(j) {
                v *= g.get(*x, *y);
            }
            total += v;
        }
    }
    total
}

pub fn leibniz_det(m: &Matrix<Rational>) -> Rational {
    let n = m.rows();
    if n == 0 {
        return q(1);
    }
    let mut total = q(0);
    for j in 0..n {
        if m.get(0, j).is_zero() {
            continue;
        }
        let minor = Matrix::from_fn(n - 1, n - 1, |r, c| m.get(r + 1, if c < j { c } else { c + 1 }).clone());
        let term = m.get(0, j) * leibniz_det(&minor);
        total += if j % 2 == 0 { term } else { -term };
    }
    total
}

/// Column j of block i: (1/j!) dʲ/dλʲ of (λ², …, λ^{N+1}) at λᵢ.
pub fn derivative_matrix(blocks: &[Block]) -> Matrix<Rational> {
    let n: usize = blocks.iter().map(|b| b.n).sum();
    let mut cols = Vec::new();
    for b in blocks {
        for j in 0..b.n {
            let col: Vec<Rational> = (0..n)
                .map(|r| {
                    let mut p = Polynomial::monomial(q(1), r + 2);
                    let mut fact = q(1);
                    for k in 0..j {
                        p = p.derivative();
                        fact *= q(k as i64 + 1);
                    }
                    p.eval(&b.lambda) / fact
                })
                .collect();
            cols.push(col);
        }
    }
    Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
}

/// Two objects whose hom-sets are copies of one group; without `cross`
/// only the endomorphisms exist. Morphism X_s → X_t for g is named `ts_g`.
pub fn two_object_category(group: &FiniteMonoid, cross: bool) -> FinCategory {
    let n = group.size();
    let mut morphisms = Vec::new();
    let mut ids = BTreeMap::new();
    let objs = ["X1".to_string(), "X2".to_string()];
    let name = |t: usize, s: usize, g: usize| format!("{}{}_{}", t + 1, s + 1, group.name(g));
    for t in 0..2 {
        for s in 0..2 {
            if t != s && !cross {
                continue;
            }
            for g in 0..n {
                morphisms.push(MorphismSpec { name: name(t, s, g), source: objs[s].clone(), target: objs[t].clone() });
            }
        }
    }
    for t in 0..2 {
        ids.insert(objs[t].clone(), name(t, t, group.identity()));
    }
    let mut compose = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                if !cross && (a != b || b != c) {
                    continue;
                }
                for g in 0..n {
                    for h in 0..n {
                        compose.push([name(a, b, g), name(b, c, h), name(a, c, group.mul(g, h))]);
                    }
                }
            }
        }
    }
    let spec = CategorySpec { objects: objs.to_vec(), morphisms, identities: ids, compose, boundary: None };
    FinCategory::from_spec(&spec).unwrap()
}

pub fn fin_loop_table(cat: &FinCategory, f: impl Fn(&str) -> Rational) -> TableEvaluation<Rational> {
    let mut t = TableEvaluation::new(None);
    for x in 0..2 {
        for m in cat.hom(x, x, 0) {
            let l = cat.canonical_loop(x, &m);
            t.set_loop(l, f(&cat.label_name(&m)));
        }
    }
    t
}
