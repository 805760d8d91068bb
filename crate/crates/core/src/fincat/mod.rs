//! Small categories given by finite data: finite monoids, multi-object finite
//! categories and length-capped free monoids, with their loop sets.

mod category;
mod free;
mod monoid;

pub use category::{FinCategory, FiniteBoundary};
pub use free::FreeMonoidCategory;
pub use monoid::{conjugacy_classes, FiniteMonoid, MonoidSpec};
pub use category::{BoundarySpec, CategorySpec, MorphismSpec};

use std::fmt;
use thiserror::Error;

pub type ObjId = usize;

/// A morphism (or boundary element). Finite categories use a single index,
/// free monoids the letters of a word in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Label(pub Vec<u32>);

impl Label {
    pub fn single(i: usize) -> Self {
        Label(vec![i as u32])
    }

    pub fn index(&self) -> usize {
        self.0[0] as usize
    }
}

/// A class in L(C), stored by its canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Loop {
    pub base: ObjId,
    pub cycle: Label,
}

/// A class of closed intervals `(gl, gr)` at an object, canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalClass {
    pub base: ObjId,
    pub gl: Label,
    pub gr: Label,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FincatError {
    #[error("cannot compose {after} after {before}")]
    NotComposable { after: String, before: String },
    #[error("chain does not close up at its base object")]
    NotClosed,
    #[error("{0} is not an endomorphism")]
    NotEndomorphism(String),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism {0:?}")]
    UnknownMorphism(String),
    #[error("unknown boundary element {0:?}")]
    UnknownBoundary(String),
    #[error("category has no boundary datum")]
    NoBoundary,
    #[error("axiom violated: {0}")]
    AxiomViolation(String),
    #[error("malformed presentation: {0}")]
    Malformed(String),
}

/// Common interface of the finite presentations.
///
/// `compose(after, before)` is `after ∘ before`. Boundary elements of G_r(X)
/// are acted on by `act_right(β, g)` (into G_r(Y) for β: X → Y) and elements of
/// G_l(Y) by `act_left(g, β)` (into G_l(X)).
pub trait Category: Send + Sync {
    fn object_count(&self) -> usize;
    fn object_name(&self, x: ObjId) -> &str;
    fn object_index(&self, name: &str) -> Result<ObjId, FincatError>;
    fn source(&self, m: &Label) -> ObjId;
    fn target(&self, m: &Label) -> ObjId;
    fn identity(&self, x: ObjId) -> Label;
    fn compose(&self, after: &Label, before: &Label) -> Result<Label, FincatError>;
    /// Hom(x, y); `cap` bounds word length where hom sets are infinite.
    fn hom(&self, x: ObjId, y: ObjId, cap: usize) -> Vec<Label>;
    fn label_name(&self, m: &Label) -> String;
    fn parse_label(&self, s: &str) -> Result<Label, FincatError>;
    /// Canonical representative of the loop class of an endomorphism of `x`.
    fn canonical_loop(&self, x: ObjId, m: &Label) -> Loop;

    fn has_boundary(&self) -> bool {
        false
    }
    fn gr_elements(&self, _x: ObjId, _cap: usize) -> Vec<Label> {
        Vec::new()
    }
    fn gl_elements(&self, _x: ObjId, _cap: usize) -> Vec<Label> {
        Vec::new()
    }
    fn act_right(&self, _m: &Label, _g: &Label) -> Result<Label, FincatError> {
        Err(FincatError::NoBoundary)
    }
    fn act_left(&self, _g: &Label, _m: &Label) -> Result<Label, FincatError> {
        Err(FincatError::NoBoundary)
    }
    fn canonical_interval(
        &self,
        _x: ObjId,
        _gl: &Label,
        _gr: &Label,
    ) -> Result<IntervalClass, FincatError> {
        Err(FincatError::NoBoundary)
    }
    fn gr_name(&self, g: &Label) -> String {
        format!("{:?}", g.0)
    }
    fn gl_name(&self, g: &Label) -> String {
        format!("{:?}", g.0)
    }
    fn parse_gr(&self, _x: ObjId, s: &str) -> Result<Label, FincatError> {
        Err(FincatError::UnknownBoundary(s.to_string()))
    }
    fn parse_gl(&self, _x: ObjId, s: &str) -> Result<Label, FincatError> {
        Err(FincatError::UnknownBoundary(s.to_string()))
    }

    /// Text key of a canonical loop, used by evaluation tables.
    fn loop_key(&self, l: &Loop) -> String {
        self.label_name(&l.cycle)
    }

    /// Text key of a canonical interval class.
    fn interval_key(&self, i: &IntervalClass) -> String {
        format!("{}|{}", self.gl_name(&i.gl), self.gr_name(&i.gr))
    }

    /// Parses a loop key written with any representative.
    fn parse_loop_key(&self, s: &str) -> Result<Loop, FincatError> {
        let m = self.parse_label(s)?;
        let x = self.source(&m);
        if self.target(&m) != x {
            return Err(FincatError::NotEndomorphism(s.to_string()));
        }
        Ok(self.canonical_loop(x, &m))
    }

    /// Parses an interval key `gl|gr` written with any representative.
    fn parse_interval_key(&self, s: &str) -> Result<IntervalClass, FincatError> {
        let (l, r) = s
            .split_once('|')
            .ok_or_else(|| FincatError::UnknownBoundary(s.to_string()))?;
        for x in 0..self.object_count() {
            if let (Ok(gl), Ok(gr)) = (self.parse_gl(x, l), self.parse_gr(x, r)) {
                return self.canonical_interval(x, &gl, &gr);
            }
        }
        Err(FincatError::UnknownBoundary(s.to_string()))
    }
}

/// Composite of a path of morphisms listed in order of application.
pub fn compose_path(cat: &dyn Category, x: ObjId, path: &[Label]) -> Result<Label, FincatError> {
    let mut acc = cat.identity(x);
    for m in path {
        acc = cat.compose(m, &acc)?;
    }
    Ok(acc)
}

/// Loop class of a closed chain based at `base`.
pub fn loop_normalize(cat: &dyn Category, base: ObjId, chain: &[Label]) -> Result<Loop, FincatError> {
    let m = compose_path(cat, base, chain)?;
    if cat.target(&m) != base {
        return Err(FincatError::NotClosed);
    }
    Ok(cat.canonical_loop(base, &m))
}

/// Start index of the lexicographically least rotation (Booth).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: isize| &s[i as usize % n];
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k: isize = 0;
    for j in 1..(2 * n) as isize {
        let sj = at(j);
        let mut i = f[(j - k - 1) as usize];
        while i != -1 && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = f[i as usize];
        }
        if sj != at(k + i + 1) {
            if sj < at(k) {
                k = j;
            }
            f[(j - k) as usize] = -1;
        } else {
            f[(j - k) as usize] = i + 1;
        }
    }
    k as usize % n
}

pub fn rotate_least<T: Ord + Clone>(s: &[T]) -> Vec<T> {
    let k = least_rotation(s);
    s[k..].iter().chain(&s[..k]).cloned().collect()
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Disjoint-set forest with union towards the smaller root.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
