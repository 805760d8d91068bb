use super::{Arc, BrauerMorphism, HalfInterval, SignedSequence};
use crate::fincat::Category;

/// Hom(𝟙, seq) without floating components; words capped at `cap`.
pub fn hom_from_unit(cat: &dyn Category, seq: &SignedSequence, cap: usize) -> Vec<BrauerMorphism> {
    let shell = BrauerMorphism::new(SignedSequence::unit(), seq.clone(), Vec::new(), Vec::new());
    enumerate(cat, shell, cap)
}

/// Hom(seq, 𝟙) without floating components; words capped at `cap`.
pub fn hom_to_unit(cat: &dyn Category, seq: &SignedSequence, cap: usize) -> Vec<BrauerMorphism> {
    let shell = BrauerMorphism::new(seq.clone(), SignedSequence::unit(), Vec::new(), Vec::new());
    enumerate(cat, shell, cap)
}

fn enumerate(cat: &dyn Category, shell: BrauerMorphism, cap: usize) -> Vec<BrauerMorphism> {
    let n = shell.endpoint_count();
    let mut out = Vec::new();
    let mut used = vec![false; n];
    extend(cat, &shell, cap, &mut used, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

fn extend(
    cat: &dyn Category,
    shell: &BrauerMorphism,
    cap: usize,
    used: &mut Vec<bool>,
    arcs: &mut Vec<Arc>,
    halves: &mut Vec<HalfInterval>,
    out: &mut Vec<BrauerMorphism>,
) {
    let Some(e) = used.iter().position(|u| !u) else {
        let mut d = shell.clone();
        d.arcs = arcs.clone();
        d.halves = halves.clone();
        d.normalize();
        out.push(d);
        return;
    };
    used[e] = true;
    let (xe, _) = shell.endpoint(e);
    let e_tail = shell.is_tail(e);
    for f in e + 1..used.len() {
        if used[f] || shell.is_tail(f) == e_tail {
            continue;
        }
        let (xf, _) = shell.endpoint(f);
        let (tail, head, xt, xh) = if e_tail { (e, f, xe, xf) } else { (f, e, xf, xe) };
        used[f] = true;
        for label in cat.hom(xt, xh, cap) {
            arcs.push(Arc { tail, head, label });
            extend(cat, shell, cap, used, arcs, halves, out);
            arcs.pop();
        }
        used[f] = false;
    }
    if cat.has_boundary() {
        let elems = if e_tail { cat.gl_elements(xe, cap) } else { cat.gr_elements(xe, cap) };
        for elem in elems {
            halves.push(HalfInterval { end: e, elem });
            extend(cat, shell, cap, used, arcs, halves, out);
            halves.pop();
        }
    }
    used[e] = false;
}
