use serde::{Deserialize, Serialize};
use std::fmt;

use super::BrauerError;
use crate::fincat::{Category, IntervalClass, Label, Loop, ObjId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// An object of the envelope: a word in signed objects.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedSequence(pub Vec<(ObjId, Sign)>);

impl SignedSequence {
    pub fn unit() -> Self {
        SignedSequence(Vec::new())
    }

    pub fn repeat(x: ObjId, sign: Sign, n: usize) -> Self {
        SignedSequence(vec![(x, sign); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Self) -> Self {
        SignedSequence(self.0.iter().chain(&o.0).copied().collect())
    }

    /// Reversed sequence with flipped signs.
    pub fn dual(&self) -> Self {
        SignedSequence(self.0.iter().rev().map(|&(x, s)| (x, s.flip())).collect())
    }

    pub fn display(&self, cat: &dyn Category) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(x, s)| format!("{}{}", cat.object_name(x), if s == Sign::Plus { "+" } else { "-" }))
            .collect();
        format!("({})", parts.join(","))
    }
}

/// Strand from a tail endpoint to a head endpoint labelled by a morphism
/// obj(tail) → obj(head).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub label: Label,
}

/// Strand between an endpoint and an inner endpoint. At a head endpoint the
/// element lies in G_r, at a tail endpoint in G_l.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInterval {
    pub end: usize,
    pub elem: Label,
}

/// A morphism of the Brauer envelope. Endpoints are numbered source first.
/// Source `+` and target `-` endpoints are tails; the others are heads.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerMorphism {
    pub source: SignedSequence,
    pub target: SignedSequence,
    pub arcs: Vec<Arc>,
    pub halves: Vec<HalfInterval>,
    pub loops: Vec<Loop>,
    pub intervals: Vec<IntervalClass>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Loc {
    Ext(usize),
    Iface(usize),
    Inner,
}

#[derive(Clone, Debug)]
enum Kind {
    Arc(Label),
    HalfR(Label),
    HalfL(Label),
}

#[derive(Clone, Debug)]
struct Piece {
    start: Loc,
    end: Loc,
    kind: Kind,
}

enum Acc {
    Mor { from: usize, m: Label },
    Gr(Label),
}

impl BrauerMorphism {
    pub fn new(
        source: SignedSequence,
        target: SignedSequence,
        arcs: Vec<Arc>,
        halves: Vec<HalfInterval>,
    ) -> Self {
        let mut d = BrauerMorphism { source, target, arcs, halves, loops: Vec::new(), intervals: Vec::new() };
        d.normalize();
        d
    }

    /// The identity of 𝟙.
    pub fn empty() -> Self {
        Self::new(SignedSequence::unit(), SignedSequence::unit(), Vec::new(), Vec::new())
    }

    /// A closed diagram made of the given floating components.
    pub fn closed(loops: Vec<Loop>, intervals: Vec<IntervalClass>) -> Self {
        let mut d = Self::empty();
        d.loops = loops;
        d.intervals = intervals;
        d.normalize();
        d
    }

    pub fn identity(cat: &dyn Category, seq: &SignedSequence) -> Self {
        let n = seq.len();
        let arcs = seq
            .0
            .iter()
            .enumerate()
            .map(|(i, &(x, s))| {
                let (tail, head) = if s == Sign::Plus { (i, n + i) } else { (n + i, i) };
                Arc { tail, head, label: cat.identity(x) }
            })
            .collect();
        Self::new(seq.clone(), seq.clone(), arcs, Vec::new())
    }

    /// (x,+)^n → (x,+)^n sending source i to target σ(i), the strand ending at
    /// target slot j labelled `labels[j]` (all identities when `labels` is empty).
    pub fn permutation(cat: &dyn Category, x: ObjId, sigma: &[usize], labels: &[Label]) -> Self {
        let n = sigma.len();
        let seq = SignedSequence::repeat(x, Sign::Plus, n);
        let arcs = (0..n)
            .map(|i| Arc {
                tail: i,
                head: n + sigma[i],
                label: labels.get(sigma[i]).cloned().unwrap_or_else(|| cat.identity(x)),
            })
            .collect();
        Self::new(seq.clone(), seq, arcs, Vec::new())
    }

    /// 𝟙 → seq ⊗ seq* with endpoint i joined to its mirror 2n-1-i.
    pub fn nested_cup(cat: &dyn Category, seq: &SignedSequence) -> Self {
        let n = seq.len();
        let arcs = seq
            .0
            .iter()
            .enumerate()
            .map(|(i, &(x, s))| {
                let j = 2 * n - 1 - i;
                let (tail, head) = if s == Sign::Plus { (j, i) } else { (i, j) };
                Arc { tail, head, label: cat.identity(x) }
            })
            .collect();
        Self::new(SignedSequence::unit(), seq.concat(&seq.dual()), arcs, Vec::new())
    }

    /// seq ⊗ seq* → 𝟙, mirror of [`BrauerMorphism::nested_cup`].
    pub fn nested_cap(cat: &dyn Category, seq: &SignedSequence) -> Self {
        let n = seq.len();
        let arcs = seq
            .0
            .iter()
            .enumerate()
            .map(|(i, &(x, s))| {
                let j = 2 * n - 1 - i;
                let (tail, head) = if s == Sign::Plus { (i, j) } else { (j, i) };
                Arc { tail, head, label: cat.identity(x) }
            })
            .collect();
        Self::new(seq.concat(&seq.dual()), SignedSequence::unit(), arcs, Vec::new())
    }

    pub fn endpoint_count(&self) -> usize {
        self.source.len() + self.target.len()
    }

    pub fn is_closed(&self) -> bool {
        self.source.is_empty() && self.target.is_empty()
    }

    pub fn endpoint(&self, e: usize) -> (ObjId, Sign) {
        if e < self.source.len() {
            self.source.0[e]
        } else {
            self.target.0[e - self.source.len()]
        }
    }

    pub fn is_tail(&self, e: usize) -> bool {
        let (_, s) = self.endpoint(e);
        (e < self.source.len()) == (s == Sign::Plus)
    }

    pub fn normalize(&mut self) {
        self.arcs.sort();
        self.halves.sort();
        self.loops.sort();
        self.intervals.sort();
    }

    /// Checks the matching covers each endpoint once and labels are well typed.
    pub fn validate(&self, cat: &dyn Category) -> Result<(), BrauerError> {
        let n = self.endpoint_count();
        let mut used = vec![false; n];
        let bad = |s: String| Err(BrauerError::InvalidDiagram(s));
        let mut mark = |e: usize| -> Result<(), BrauerError> {
            if e >= n || used[e] {
                return Err(BrauerError::InvalidDiagram(format!("endpoint {e} reused or out of range")));
            }
            used[e] = true;
            Ok(())
        };
        for a in &self.arcs {
            mark(a.tail)?;
            mark(a.head)?;
            if !self.is_tail(a.tail) || self.is_tail(a.head) {
                return bad(format!("arc {}→{} is not tail→head", a.tail, a.head));
            }
            let (xt, _) = self.endpoint(a.tail);
            let (xh, _) = self.endpoint(a.head);
            if cat.source(&a.label) != xt || cat.target(&a.label) != xh {
                return bad(format!("label {} has the wrong type", cat.label_name(&a.label)));
            }
        }
        for h in &self.halves {
            mark(h.end)?;
            if !cat.has_boundary() {
                return bad("half-interval without boundary datum".into());
            }
        }
        if used.iter().any(|u| !u) {
            return bad("endpoint left unmatched".into());
        }
        Ok(())
    }

    /// Shifted copy placed beside `self`.
    pub fn tensor(&self, o: &Self) -> Self {
        let (s1, t1) = (self.source.len(), self.target.len());
        let s2 = o.source.len();
        let m1 = |e: usize| if e < s1 { e } else { s1 + s2 + (e - s1) };
        let m2 = |e: usize| if e < s2 { s1 + e } else { s1 + s2 + t1 + (e - s2) };
        let mut arcs: Vec<Arc> =
            self.arcs.iter().map(|a| Arc { tail: m1(a.tail), head: m1(a.head), label: a.label.clone() }).collect();
        arcs.extend(o.arcs.iter().map(|a| Arc { tail: m2(a.tail), head: m2(a.head), label: a.label.clone() }));
        let mut halves: Vec<HalfInterval> =
            self.halves.iter().map(|h| HalfInterval { end: m1(h.end), elem: h.elem.clone() }).collect();
        halves.extend(o.halves.iter().map(|h| HalfInterval { end: m2(h.end), elem: h.elem.clone() }));
        let mut d = BrauerMorphism {
            source: self.source.concat(&o.source),
            target: self.target.concat(&o.target),
            arcs,
            halves,
            loops: self.loops.iter().chain(&o.loops).cloned().collect(),
            intervals: self.intervals.iter().chain(&o.intervals).cloned().collect(),
        };
        d.normalize();
        d
    }

    /// `after ∘ before`.
    pub fn compose(cat: &dyn Category, after: &Self, before: &Self) -> Result<Self, BrauerError> {
        if after.source != before.target {
            return Err(BrauerError::ObjectMismatch(format!(
                "{} vs {}",
                before.target.display(cat),
                after.source.display(cat)
            )));
        }
        let n1s = before.source.len();
        let n = before.target.len();
        let loc1 = |e: usize| if e < n1s { Loc::Ext(e) } else { Loc::Iface(e - n1s) };
        let loc2 = |e: usize| if e < n { Loc::Iface(e) } else { Loc::Ext(n1s + e - n) };
        let mut pieces = Vec::new();
        for (d, loc) in [(before, &loc1 as &dyn Fn(usize) -> Loc), (after, &loc2)] {
            for a in &d.arcs {
                pieces.push(Piece { start: loc(a.tail), end: loc(a.head), kind: Kind::Arc(a.label.clone()) });
            }
            for h in &d.halves {
                if d.is_tail(h.end) {
                    pieces.push(Piece { start: loc(h.end), end: Loc::Inner, kind: Kind::HalfL(h.elem.clone()) });
                } else {
                    pieces.push(Piece { start: Loc::Inner, end: loc(h.end), kind: Kind::HalfR(h.elem.clone()) });
                }
            }
        }
        let mut start_at = vec![usize::MAX; n];
        for (i, p) in pieces.iter().enumerate() {
            if let Loc::Iface(k) = p.start {
                start_at[k] = i;
            }
        }
        if start_at.contains(&usize::MAX) {
            return Err(BrauerError::InvalidDiagram("interface endpoint without outgoing strand".into()));
        }
        let iface_obj = |k: usize| before.target.0[k].0;
        let mut visited = vec![false; pieces.len()];
        let mut arcs = Vec::new();
        let mut halves = Vec::new();
        let mut loops: Vec<Loop> = before.loops.iter().chain(&after.loops).cloned().collect();
        let mut intervals: Vec<IntervalClass> = before.intervals.iter().chain(&after.intervals).cloned().collect();

        for p in 0..pieces.len() {
            let from = match pieces[p].start {
                Loc::Iface(_) => continue,
                Loc::Ext(e) => e,
                Loc::Inner => usize::MAX,
            };
            visited[p] = true;
            let mut acc = match &pieces[p].kind {
                Kind::Arc(l) => Acc::Mor { from, m: l.clone() },
                Kind::HalfR(g) => Acc::Gr(g.clone()),
                Kind::HalfL(g) => {
                    halves.push(HalfInterval { end: from, elem: g.clone() });
                    continue;
                }
            };
            let mut cur = p;
            loop {
                match pieces[cur].end {
                    Loc::Ext(h) => {
                        match acc {
                            Acc::Mor { from, m } => arcs.push(Arc { tail: from, head: h, label: m }),
                            Acc::Gr(g) => halves.push(HalfInterval { end: h, elem: g }),
                        }
                        break;
                    }
                    Loc::Inner => unreachable!("inner ends are consumed at the interface"),
                    Loc::Iface(k) => {
                        let next = start_at[k];
                        visited[next] = true;
                        match (&pieces[next].kind, acc) {
                            (Kind::Arc(l), Acc::Mor { from, m }) => acc = Acc::Mor { from, m: cat.compose(l, &m)? },
                            (Kind::Arc(l), Acc::Gr(g)) => acc = Acc::Gr(cat.act_right(l, &g)?),
                            (Kind::HalfL(gl), Acc::Mor { from, m }) => {
                                halves.push(HalfInterval { end: from, elem: cat.act_left(gl, &m)? });
                                break;
                            }
                            (Kind::HalfL(gl), Acc::Gr(gr)) => {
                                intervals.push(cat.canonical_interval(iface_obj(k), gl, &gr)?);
                                break;
                            }
                            (Kind::HalfR(_), _) => unreachable!("half-intervals at heads start inside"),
                        }
                        cur = next;
                    }
                }
            }
        }
        for p in 0..pieces.len() {
            if visited[p] {
                continue;
            }
            visited[p] = true;
            let Kind::Arc(l) = &pieces[p].kind else {
                return Err(BrauerError::InvalidDiagram("dangling half-interval".into()));
            };
            let mut m = l.clone();
            let mut cur = p;
            loop {
                let Loc::Iface(k) = pieces[cur].end else {
                    return Err(BrauerError::InvalidDiagram("broken cycle".into()));
                };
                let next = start_at[k];
                if next == p {
                    break;
                }
                visited[next] = true;
                let Kind::Arc(l) = &pieces[next].kind else {
                    return Err(BrauerError::InvalidDiagram("broken cycle".into()));
                };
                m = cat.compose(l, &m)?;
                cur = next;
            }
            loops.push(cat.canonical_loop(cat.source(&m), &m));
        }
        let mut d = BrauerMorphism { source: before.source.clone(), target: after.target.clone(), arcs, halves, loops, intervals };
        d.normalize();
        Ok(d)
    }

    /// Trace closure of an endomorphism: caps ∘ (d ⊗ id) ∘ cups.
    pub fn close_up(cat: &dyn Category, d: &Self) -> Result<Self, BrauerError> {
        if d.source != d.target {
            return Err(BrauerError::NotEndomorphism);
        }
        let cup = Self::nested_cup(cat, &d.source);
        let mid = d.tensor(&Self::identity(cat, &d.source.dual()));
        let cap = Self::nested_cap(cat, &d.source);
        Self::compose(cat, &cap, &Self::compose(cat, &mid, &cup)?)
    }

    pub fn display(&self, cat: &dyn Category) -> String {
        let mut parts = Vec::new();
        for a in &self.arcs {
            parts.push(format!("{}→{}:{}", a.tail, a.head, cat.label_name(&a.label)));
        }
        for h in &self.halves {
            let name = if self.is_tail(h.end) { cat.gl_name(&h.elem) } else { cat.gr_name(&h.elem) };
            parts.push(format!("{}:[{}]", h.end, name));
        }
        for l in &self.loops {
            parts.push(format!("loop({})", cat.loop_key(l)));
        }
        for i in &self.intervals {
            parts.push(format!("interval({})", cat.interval_key(i)));
        }
        format!("{} → {} {{{}}}", self.source.display(cat), self.target.display(cat), parts.join(", "))
    }

    pub fn to_spec(&self, cat: &dyn Category) -> DiagramSpec {
        let seq = |s: &SignedSequence| s.0.iter().map(|&(x, g)| (cat.object_name(x).to_string(), g)).collect();
        DiagramSpec {
            source: seq(&self.source),
            target: seq(&self.target),
            arcs: self.arcs.iter().map(|a| (a.tail, a.head, cat.label_name(&a.label))).collect(),
            halves: self
                .halves
                .iter()
                .map(|h| (h.end, if self.is_tail(h.end) { cat.gl_name(&h.elem) } else { cat.gr_name(&h.elem) }))
                .collect(),
            loops: self.loops.iter().map(|l| cat.loop_key(l)).collect(),
            intervals: self.intervals.iter().map(|i| cat.interval_key(i)).collect(),
        }
    }

    pub fn from_spec(cat: &dyn Category, spec: &DiagramSpec) -> Result<Self, BrauerError> {
        let seq = |v: &[(String, Sign)]| -> Result<SignedSequence, BrauerError> {
            Ok(SignedSequence(v.iter().map(|(o, s)| Ok((cat.object_index(o)?, *s))).collect::<Result<_, BrauerError>>()?))
        };
        let source = seq(&spec.source)?;
        let target = seq(&spec.target)?;
        let arcs = spec
            .arcs
            .iter()
            .map(|(t, h, l)| Ok(Arc { tail: *t, head: *h, label: cat.parse_label(l)? }))
            .collect::<Result<Vec<_>, BrauerError>>()?;
        let mut d = BrauerMorphism::new(source, target, arcs, Vec::new());
        let n = d.endpoint_count();
        for (e, name) in &spec.halves {
            if *e >= n {
                return Err(BrauerError::InvalidDiagram(format!("endpoint {e} out of range")));
            }
            let (x, _) = d.endpoint(*e);
            let elem = if d.is_tail(*e) { cat.parse_gl(x, name)? } else { cat.parse_gr(x, name)? };
            d.halves.push(HalfInterval { end: *e, elem });
        }
        d.loops = spec.loops.iter().map(|k| cat.parse_loop_key(k)).collect::<Result<_, _>>()?;
        d.intervals = spec.intervals.iter().map(|k| cat.parse_interval_key(k)).collect::<Result<_, _>>()?;
        d.normalize();
        d.validate(cat)?;
        Ok(d)
    }
}

/// JSON diagram form: arcs as `[tail, head, "morphism"]`, half-intervals as
/// `[endpoint, "element"]`, floating parts by canonical key.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramSpec {
    pub source: Vec<(String, Sign)>,
    pub target: Vec<(String, Sign)>,
    #[serde(default)]
    pub arcs: Vec<(usize, usize, String)>,
    #[serde(default)]
    pub halves: Vec<(usize, String)>,
    #[serde(default)]
    pub loops: Vec<String>,
    #[serde(default)]
    pub intervals: Vec<String>,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if *self == Sign::Plus { "+" } else { "-" })
    }
}
