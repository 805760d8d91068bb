use super::{least_rotation, Category, FincatError, IntervalClass, Label, Loop, ObjId};

/// One-object category whose endomorphisms are words over an alphabet of
/// single characters. With inner endpoints, G_r = G_l = words, acted on by
/// concatenation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeMonoidCategory {
    alphabet: Vec<char>,
    inner_endpoints: bool,
}

impl FreeMonoidCategory {
    pub fn new(alphabet: Vec<char>, inner_endpoints: bool) -> Result<Self, FincatError> {
        let mut sorted = alphabet.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != alphabet.len() || alphabet.iter().any(|c| !c.is_alphabetic()) {
            return Err(FincatError::Malformed("alphabet letters must be distinct alphabetic characters".into()));
        }
        Ok(FreeMonoidCategory { alphabet, inner_endpoints })
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    /// All words of length <= cap, shortlex order.
    pub fn words(&self, cap: usize) -> Vec<Label> {
        let k = self.alphabet.len() as u32;
        let mut out = vec![Label(Vec::new())];
        let mut layer = vec![Vec::new()];
        for _ in 0..cap {
            let next: Vec<Vec<u32>> = layer
                .iter()
                .flat_map(|w: &Vec<u32>| {
                    (0..k).map(move |a| {
                        let mut v = w.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
            out.extend(next.iter().cloned().map(Label));
            layer = next;
        }
        out
    }

    pub fn word(&self, s: &str) -> Result<Label, FincatError> {
        self.parse_label(s)
    }
}

impl Category for FreeMonoidCategory {
    fn object_count(&self) -> usize {
        1
    }

    fn object_name(&self, _x: ObjId) -> &str {
        "X"
    }

    fn object_index(&self, name: &str) -> Result<ObjId, FincatError> {
        if name == "X" {
            Ok(0)
        } else {
            Err(FincatError::UnknownObject(name.to_string()))
        }
    }

    fn source(&self, _m: &Label) -> ObjId {
        0
    }

    fn target(&self, _m: &Label) -> ObjId {
        0
    }

    fn identity(&self, _x: ObjId) -> Label {
        Label(Vec::new())
    }

    fn compose(&self, after: &Label, before: &Label) -> Result<Label, FincatError> {
        let mut v = before.0.clone();
        v.extend_from_slice(&after.0);
        Ok(Label(v))
    }

    fn hom(&self, _x: ObjId, _y: ObjId, cap: usize) -> Vec<Label> {
        self.words(cap)
    }

    fn label_name(&self, m: &Label) -> String {
        if m.0.is_empty() {
            "1".to_string()
        } else {
            m.0.iter().map(|&i| self.alphabet[i as usize]).collect()
        }
    }

    fn parse_label(&self, s: &str) -> Result<Label, FincatError> {
        if s == "1" || s.is_empty() {
            return Ok(Label(Vec::new()));
        }
        s.chars()
            .map(|c| {
                self.alphabet
                    .iter()
                    .position(|&a| a == c)
                    .map(|i| i as u32)
                    .ok_or_else(|| FincatError::UnknownMorphism(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Label)
    }

    fn canonical_loop(&self, _x: ObjId, m: &Label) -> Loop {
        let k = least_rotation(&m.0);
        let cycle = m.0[k..].iter().chain(&m.0[..k]).copied().collect();
        Loop { base: 0, cycle: Label(cycle) }
    }

    fn has_boundary(&self) -> bool {
        self.inner_endpoints
    }

    fn gr_elements(&self, _x: ObjId, cap: usize) -> Vec<Label> {
        if self.inner_endpoints {
            self.words(cap)
        } else {
            Vec::new()
        }
    }

    fn gl_elements(&self, x: ObjId, cap: usize) -> Vec<Label> {
        self.gr_elements(x, cap)
    }

    fn act_right(&self, m: &Label, g: &Label) -> Result<Label, FincatError> {
        if !self.inner_endpoints {
            return Err(FincatError::NoBoundary);
        }
        self.compose(m, g)
    }

    fn act_left(&self, g: &Label, m: &Label) -> Result<Label, FincatError> {
        if !self.inner_endpoints {
            return Err(FincatError::NoBoundary);
        }
        self.compose(g, m)
    }

    fn canonical_interval(&self, _x: ObjId, gl: &Label, gr: &Label) -> Result<IntervalClass, FincatError> {
        if !self.inner_endpoints {
            return Err(FincatError::NoBoundary);
        }
        Ok(IntervalClass { base: 0, gl: Label(Vec::new()), gr: self.compose(gl, gr)? })
    }

    fn gr_name(&self, g: &Label) -> String {
        self.label_name(g)
    }

    fn gl_name(&self, g: &Label) -> String {
        self.label_name(g)
    }

    fn parse_gr(&self, _x: ObjId, s: &str) -> Result<Label, FincatError> {
        self.parse_label(s)
    }

    fn parse_gl(&self, _x: ObjId, s: &str) -> Result<Label, FincatError> {
        self.parse_label(s)
    }

    /// The traversal word of the whole interval.
    fn interval_key(&self, i: &IntervalClass) -> String {
        self.label_name(&i.gr)
    }

    fn parse_interval_key(&self, s: &str) -> Result<IntervalClass, FincatError> {
        let w = self.parse_label(s)?;
        self.canonical_interval(0, &Label(Vec::new()), &w)
    }
}
