use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

use super::{Category, FincatError, IntervalClass, Label, Loop, ObjId, UnionFind};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// Finite presheaf endpoint data: sets per object and action triples.
/// `act_right` entries are `[β, g, β·g]`, `act_left` entries `[g, β, g·β]`.
/// Identity actions may be omitted.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct BoundarySpec {
    #[serde(default)]
    pub right: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub left: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub act_right: Vec<[String; 3]>,
    #[serde(default)]
    pub act_left: Vec<[String; 3]>,
}

/// JSON form of a finite category. Compositions with identities may be omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CategorySpec {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismSpec>,
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
    #[serde(default)]
    pub boundary: Option<BoundarySpec>,
}

#[derive(Clone, Debug)]
struct Morphism {
    name: String,
    source: ObjId,
    target: ObjId,
}

/// Validated finite boundary datum with interval classes precomputed.
#[derive(Clone, Debug)]
pub struct FiniteBoundary {
    gr: Vec<(ObjId, String)>,
    gl: Vec<(ObjId, String)>,
    act_r: HashMap<(usize, usize), usize>,
    act_l: HashMap<(usize, usize), usize>,
    interval_rep: HashMap<(usize, usize), (usize, usize)>,
}

/// A small category with finitely many objects and morphisms.
#[derive(Clone, Debug)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    comp: Vec<Option<usize>>,
    homs: Vec<Vec<usize>>,
    loop_rep: Vec<usize>,
    boundary: Option<FiniteBoundary>,
}

fn lookup(names: &HashMap<&str, usize>, s: &str, err: impl Fn(String) -> FincatError) -> Result<usize, FincatError> {
    names.get(s).copied().ok_or_else(|| err(s.to_string()))
}

impl FinCategory {
    pub fn from_spec(spec: &CategorySpec) -> Result<Self, FincatError> {
        let obj_ix: HashMap<&str, usize> =
            spec.objects.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        if obj_ix.len() != spec.objects.len() {
            return Err(FincatError::Malformed("duplicate object name".into()));
        }
        let mut morphisms = Vec::new();
        for m in &spec.morphisms {
            morphisms.push(Morphism {
                name: m.name.clone(),
                source: lookup(&obj_ix, &m.source, FincatError::UnknownObject)?,
                target: lookup(&obj_ix, &m.target, FincatError::UnknownObject)?,
            });
        }
        let mor_ix: HashMap<&str, usize> =
            spec.morphisms.iter().enumerate().map(|(i, m)| (m.name.as_str(), i)).collect();
        if mor_ix.len() != morphisms.len() {
            return Err(FincatError::Malformed("duplicate morphism name".into()));
        }
        let mut identities = vec![usize::MAX; spec.objects.len()];
        for (o, m) in &spec.identities {
            let x = lookup(&obj_ix, o, FincatError::UnknownObject)?;
            let i = lookup(&mor_ix, m, FincatError::UnknownMorphism)?;
            if morphisms[i].source != x || morphisms[i].target != x {
                return Err(FincatError::AxiomViolation(format!("identity {m} is not an endomorphism of {o}")));
            }
            identities[x] = i;
        }
        if let Some(x) = identities.iter().position(|&i| i == usize::MAX) {
            return Err(FincatError::Malformed(format!("no identity for {}", spec.objects[x])));
        }
        let n = morphisms.len();
        let mut comp = vec![None; n * n];
        let is_id = |i: usize| identities.contains(&i);
        for [a, b, r] in &spec.compose {
            let (a, b, r) = (
                lookup(&mor_ix, a, FincatError::UnknownMorphism)?,
                lookup(&mor_ix, b, FincatError::UnknownMorphism)?,
                lookup(&mor_ix, r, FincatError::UnknownMorphism)?,
            );
            if morphisms[a].source != morphisms[b].target {
                return Err(FincatError::NotComposable {
                    after: morphisms[a].name.clone(),
                    before: morphisms[b].name.clone(),
                });
            }
            if morphisms[r].source != morphisms[b].source || morphisms[r].target != morphisms[a].target {
                return Err(FincatError::AxiomViolation(format!(
                    "{}∘{} = {} has the wrong type",
                    morphisms[a].name, morphisms[b].name, morphisms[r].name
                )));
            }
            if comp[a * n + b].is_some_and(|old| old != r) {
                return Err(FincatError::AxiomViolation(format!(
                    "conflicting entries for {}∘{}",
                    morphisms[a].name, morphisms[b].name
                )));
            }
            comp[a * n + b] = Some(r);
        }
        for a in 0..n {
            for b in 0..n {
                if morphisms[a].source != morphisms[b].target {
                    continue;
                }
                let implied = if is_id(a) { Some(b) } else if is_id(b) { Some(a) } else { None };
                match (comp[a * n + b], implied) {
                    (None, Some(r)) => comp[a * n + b] = Some(r),
                    (None, None) => {
                        return Err(FincatError::Malformed(format!(
                            "missing composite {}∘{}",
                            morphisms[a].name, morphisms[b].name
                        )))
                    }
                    (Some(r), Some(i)) if r != i => {
                        return Err(FincatError::AxiomViolation(format!(
                            "identity not neutral in {}∘{}",
                            morphisms[a].name, morphisms[b].name
                        )))
                    }
                    _ => {}
                }
            }
        }
        let no = spec.objects.len();
        let mut homs = vec![Vec::new(); no * no];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.source * no + m.target].push(i);
        }
        let mut cat = FinCategory {
            objects: spec.objects.clone(),
            morphisms,
            identities,
            comp,
            homs,
            loop_rep: Vec::new(),
            boundary: None,
        };
        cat.check_associativity()?;
        cat.loop_rep = cat.compute_loop_classes();
        if let Some(b) = &spec.boundary {
            cat.boundary = Some(cat.build_boundary(b, &obj_ix, &mor_ix)?);
        }
        Ok(cat)
    }

    fn c(&self, a: usize, b: usize) -> Option<usize> {
        self.comp[a * self.morphisms.len() + b]
    }

    fn check_associativity(&self) -> Result<(), FincatError> {
        let n = self.morphisms.len();
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.c(a, b) else { continue };
                for c in 0..n {
                    let Some(bc) = self.c(b, c) else { continue };
                    if self.c(ab, c) != self.c(a, bc) {
                        return Err(FincatError::AxiomViolation(format!(
                            "associativity fails on ({}, {}, {})",
                            self.morphisms[a].name, self.morphisms[b].name, self.morphisms[c].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Classes of endomorphisms under (X, γβ) ~ (Y, βγ); rep is the least index.
    fn compute_loop_classes(&self) -> Vec<usize> {
        let n = self.morphisms.len();
        let mut uf = UnionFind::new(n);
        for b in 0..n {
            for g in 0..n {
                if let (Some(gb), Some(bg)) = (self.c(g, b), self.c(b, g)) {
                    uf.union(gb, bg);
                }
            }
        }
        (0..n).map(|i| uf.find(i)).collect()
    }

    fn build_boundary(
        &self,
        spec: &BoundarySpec,
        obj_ix: &HashMap<&str, usize>,
        mor_ix: &HashMap<&str, usize>,
    ) -> Result<FiniteBoundary, FincatError> {
        let collect = |side: &BTreeMap<String, Vec<String>>| -> Result<Vec<(ObjId, String)>, FincatError> {
            let mut v = Vec::new();
            for (o, elems) in side {
                let x = lookup(obj_ix, o, FincatError::UnknownObject)?;
                v.extend(elems.iter().map(|e| (x, e.clone())));
            }
            v.sort();
            let mut names: Vec<&String> = v.iter().map(|(_, e)| e).collect();
            names.sort();
            names.dedup();
            if names.len() != v.len() {
                return Err(FincatError::Malformed("duplicate boundary element name".into()));
            }
            Ok(v)
        };
        let gr = collect(&spec.right)?;
        let gl = collect(&spec.left)?;
        let gr_ix: HashMap<&str, usize> = gr.iter().enumerate().map(|(i, (_, s))| (s.as_str(), i)).collect();
        let gl_ix: HashMap<&str, usize> = gl.iter().enumerate().map(|(i, (_, s))| (s.as_str(), i)).collect();
        let mut act_r = HashMap::new();
        for [m, g, r] in &spec.act_right {
            let m = lookup(mor_ix, m, FincatError::UnknownMorphism)?;
            let g = lookup(&gr_ix, g, FincatError::UnknownBoundary)?;
            let r = lookup(&gr_ix, r, FincatError::UnknownBoundary)?;
            if gr[g].0 != self.morphisms[m].source || gr[r].0 != self.morphisms[m].target {
                return Err(FincatError::AxiomViolation("right action has the wrong type".into()));
            }
            act_r.insert((m, g), r);
        }
        let mut act_l = HashMap::new();
        for [g, m, r] in &spec.act_left {
            let m = lookup(mor_ix, m, FincatError::UnknownMorphism)?;
            let g = lookup(&gl_ix, g, FincatError::UnknownBoundary)?;
            let r = lookup(&gl_ix, r, FincatError::UnknownBoundary)?;
            if gl[g].0 != self.morphisms[m].target || gl[r].0 != self.morphisms[m].source {
                return Err(FincatError::AxiomViolation("left action has the wrong type".into()));
            }
            act_l.insert((g, m), r);
        }
        for (g, (x, _)) in gr.iter().enumerate() {
            act_r.entry((self.identities[*x], g)).or_insert(g);
        }
        for (g, (x, _)) in gl.iter().enumerate() {
            act_l.entry((g, self.identities[*x])).or_insert(g);
        }
        let n = self.morphisms.len();
        for m in 0..n {
            let (s, t) = (self.morphisms[m].source, self.morphisms[m].target);
            for (g, _) in gr.iter().enumerate().filter(|(_, (x, _))| *x == s) {
                if !act_r.contains_key(&(m, g)) {
                    return Err(FincatError::Malformed(format!(
                        "right action of {} on {} missing",
                        self.morphisms[m].name, gr[g].1
                    )));
                }
            }
            for (g, _) in gl.iter().enumerate().filter(|(_, (x, _))| *x == t) {
                if !act_l.contains_key(&(g, m)) {
                    return Err(FincatError::Malformed(format!(
                        "left action of {} on {} missing",
                        self.morphisms[m].name, gl[g].1
                    )));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.c(a, b) else { continue };
                for g in 0..gr.len() {
                    if let Some(&bg) = act_r.get(&(b, g)) {
                        if act_r.get(&(ab, g)) != act_r.get(&(a, bg)) {
                            return Err(FincatError::AxiomViolation("right action is not functorial".into()));
                        }
                    }
                }
                for g in 0..gl.len() {
                    if let Some(&ga) = act_l.get(&(g, a)) {
                        if act_l.get(&(g, ab)) != act_l.get(&(ga, b)) {
                            return Err(FincatError::AxiomViolation("left action is not functorial".into()));
                        }
                    }
                }
            }
        }
        for (g, (x, _)) in gr.iter().enumerate() {
            if act_r[&(self.identities[*x], g)] != g {
                return Err(FincatError::AxiomViolation("identity acts nontrivially".into()));
            }
        }
        for (g, (x, _)) in gl.iter().enumerate() {
            if act_l[&(g, self.identities[*x])] != g {
                return Err(FincatError::AxiomViolation("identity acts nontrivially".into()));
            }
        }
        // interval classes: (gl·β, gr) ~ (gl, β·gr)
        let ngr = gr.len();
        let pair = |l: usize, r: usize| l * ngr + r;
        let mut uf = UnionFind::new(gl.len() * ngr);
        for (&(g, m), &lb) in &act_l {
            for (r, _) in gr.iter().enumerate().filter(|(_, (x, _))| *x == self.morphisms[m].source) {
                uf.union(pair(lb, r), pair(g, act_r[&(m, r)]));
            }
        }
        let mut interval_rep = HashMap::new();
        for (l, (xl, _)) in gl.iter().enumerate() {
            for (r, (xr, _)) in gr.iter().enumerate() {
                if xl == xr {
                    let rep = uf.find(pair(l, r));
                    interval_rep.insert((l, r), (rep / ngr, rep % ngr));
                }
            }
        }
        Ok(FiniteBoundary { gr, gl, act_r, act_l, interval_rep })
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphism(&self, name: &str) -> Result<Label, FincatError> {
        self.parse_label(name)
    }

    /// All morphisms, by index order.
    pub fn all_morphisms(&self) -> Vec<Label> {
        (0..self.morphisms.len()).map(Label::single).collect()
    }

    pub fn boundary(&self) -> Option<&FiniteBoundary> {
        self.boundary.as_ref()
    }

    /// Loop classes as lists of endomorphism indices, ordered by representative.
    pub fn loop_classes(&self) -> Vec<Vec<usize>> {
        let mut by_rep: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, m) in self.morphisms.iter().enumerate() {
            if m.source == m.target {
                by_rep.entry(self.loop_rep[i]).or_default().push(i);
            }
        }
        by_rep.into_values().collect()
    }
}

impl Category for FinCategory {
    fn object_count(&self) -> usize {
        self.objects.len()
    }

    fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x]
    }

    fn object_index(&self, name: &str) -> Result<ObjId, FincatError> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| FincatError::UnknownObject(name.to_string()))
    }

    fn source(&self, m: &Label) -> ObjId {
        self.morphisms[m.index()].source
    }

    fn target(&self, m: &Label) -> ObjId {
        self.morphisms[m.index()].target
    }

    fn identity(&self, x: ObjId) -> Label {
        Label::single(self.identities[x])
    }

    fn compose(&self, after: &Label, before: &Label) -> Result<Label, FincatError> {
        self.c(after.index(), before.index())
            .map(Label::single)
            .ok_or_else(|| FincatError::NotComposable {
                after: self.label_name(after),
                before: self.label_name(before),
            })
    }

    fn hom(&self, x: ObjId, y: ObjId, _cap: usize) -> Vec<Label> {
        self.homs[x * self.objects.len() + y].iter().map(|&i| Label::single(i)).collect()
    }

    fn label_name(&self, m: &Label) -> String {
        self.morphisms[m.index()].name.clone()
    }

    fn parse_label(&self, s: &str) -> Result<Label, FincatError> {
        self.morphisms
            .iter()
            .position(|m| m.name == s)
            .map(Label::single)
            .ok_or_else(|| FincatError::UnknownMorphism(s.to_string()))
    }

    fn canonical_loop(&self, x: ObjId, m: &Label) -> Loop {
        let rep = self.loop_rep[m.index()];
        debug_assert_eq!(self.morphisms[m.index()].source, x);
        Loop { base: self.morphisms[rep].source, cycle: Label::single(rep) }
    }

    fn has_boundary(&self) -> bool {
        self.boundary.is_some()
    }

    fn gr_elements(&self, x: ObjId, _cap: usize) -> Vec<Label> {
        self.boundary.as_ref().map_or_else(Vec::new, |b| {
            b.gr.iter().enumerate().filter(|(_, (o, _))| *o == x).map(|(i, _)| Label::single(i)).collect()
        })
    }

    fn gl_elements(&self, x: ObjId, _cap: usize) -> Vec<Label> {
        self.boundary.as_ref().map_or_else(Vec::new, |b| {
            b.gl.iter().enumerate().filter(|(_, (o, _))| *o == x).map(|(i, _)| Label::single(i)).collect()
        })
    }

    fn act_right(&self, m: &Label, g: &Label) -> Result<Label, FincatError> {
        let b = self.boundary.as_ref().ok_or(FincatError::NoBoundary)?;
        b.act_r
            .get(&(m.index(), g.index()))
            .map(|&r| Label::single(r))
            .ok_or_else(|| FincatError::NotComposable { after: self.label_name(m), before: b.gr[g.index()].1.clone() })
    }

    fn act_left(&self, g: &Label, m: &Label) -> Result<Label, FincatError> {
        let b = self.boundary.as_ref().ok_or(FincatError::NoBoundary)?;
        b.act_l
            .get(&(g.index(), m.index()))
            .map(|&r| Label::single(r))
            .ok_or_else(|| FincatError::NotComposable { after: b.gl[g.index()].1.clone(), before: self.label_name(m) })
    }

    fn canonical_interval(&self, _x: ObjId, gl: &Label, gr: &Label) -> Result<IntervalClass, FincatError> {
        let b = self.boundary.as_ref().ok_or(FincatError::NoBoundary)?;
        let &(l, r) = b.interval_rep.get(&(gl.index(), gr.index())).ok_or_else(|| {
            FincatError::NotComposable { after: b.gl[gl.index()].1.clone(), before: b.gr[gr.index()].1.clone() }
        })?;
        Ok(IntervalClass { base: b.gr[r].0, gl: Label::single(l), gr: Label::single(r) })
    }

    fn gr_name(&self, g: &Label) -> String {
        self.boundary.as_ref().map(|b| b.gr[g.index()].1.clone()).unwrap_or_default()
    }

    fn gl_name(&self, g: &Label) -> String {
        self.boundary.as_ref().map(|b| b.gl[g.index()].1.clone()).unwrap_or_default()
    }

    fn parse_gr(&self, x: ObjId, s: &str) -> Result<Label, FincatError> {
        let b = self.boundary.as_ref().ok_or(FincatError::NoBoundary)?;
        b.gr.iter()
            .position(|(o, n)| *o == x && n == s)
            .map(Label::single)
            .ok_or_else(|| FincatError::UnknownBoundary(s.to_string()))
    }

    fn parse_gl(&self, x: ObjId, s: &str) -> Result<Label, FincatError> {
        let b = self.boundary.as_ref().ok_or(FincatError::NoBoundary)?;
        b.gl.iter()
            .position(|(o, n)| *o == x && n == s)
            .map(Label::single)
            .ok_or_else(|| FincatError::UnknownBoundary(s.to_string()))
    }
}
