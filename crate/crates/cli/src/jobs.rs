use std::collections::BTreeMap;

use pseudotqft::brauer::{Sign, SignedSequence};
use pseudotqft::exact::{format_rational, parse_rational, Matrix, Polynomial, Rational, RationalFunction};
use pseudotqft::fincat::{CategorySpec, FinCategory, FiniteMonoid, FreeMonoidCategory, MonoidSpec, Category};
use pseudotqft::pseudochar::{
    alpha_charpoly, char_of_rep, degree, graph_pseudoholonomy, lift_with_table, substitute_matrix, GraphHolonomy,
    GraphHolonomySpec, MonoidTrace, PseudoCharacter, PseudoCharacterSpec, PseudoError, RepData,
};
use pseudotqft::tqft2::{
    classify_genfun, cob2_pseudochar_check, confluent_vandermonde_det, generating_function, pih_check, pih_solve,
    witness_synthesis, Block, ClassificationData, ClassificationSpec, FrobeniusAlgebra, FrobeniusSpec, PihSystem,
    PihSystemSpec,
};
use pseudotqft::universal::{
    cob2_state_space, hankel_minimize, series_agree, state_space_boolean, state_space_field, AutomatonEvaluation,
    AutomatonSpec, Dfa, Evaluation, LanguageEvaluation, TableEvaluation, WeightedAutomaton,
};
use pseudotqft::Execution;
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{lib, rejected, CliError};
use crate::{Caps, Command};

pub fn run(command: Command, input: &str, caps: &Caps) -> Result<Value, CliError> {
    let body = match command {
        Command::Statespace => statespace(parse(input)?, caps),
        Command::BooleanStatespace => boolean_statespace(parse(input)?, caps),
        Command::AutomatonMinimize => automaton_minimize(parse(input)?),
        Command::PseudocharDegree => pseudochar_degree(parse(input)?, caps),
        Command::PseudocharCharpoly => pseudochar_charpoly(parse(input)?, caps),
        Command::PseudocharLift => pseudochar_lift(parse(input)?),
        Command::Holonomy => holonomy(parse(input)?, caps),
        Command::FrobeniusValidate => frobenius_validate(parse(input)?),
        Command::Genfun => genfun(parse(input)?),
        Command::Classify => classify(parse(input)?),
        Command::Witness => witness(parse(input)?),
        Command::PihSolve => pih_solve_job(parse(input)?),
        Command::PihCheck => pih_check_job(parse(input)?),
        Command::Cob2Dim => cob2_dim(parse(input)?, caps),
        Command::Cob2Pseudo => cob2_pseudo(parse(input)?, caps),
    };
    match body {
        Ok(b) => Ok(finish(command, caps, b)),
        Err(CliError::Rejected { kind, message, report }) => {
            Err(CliError::Rejected { kind, message, report: finish(command, caps, report) })
        }
        Err(e) => Err(e),
    }
}

fn finish(command: Command, caps: &Caps, mut body: Value) -> Value {
    body["command"] = json!(command.name());
    body["caps"] = json!({
        "cap_words": caps.cap_words,
        "cap_genus": caps.cap_genus,
        "max_degree": caps.max_degree,
    });
    body
}

fn parse<T: DeserializeOwned>(input: &str) -> Result<T, CliError> {
    serde_json::from_str(input).map_err(|e| CliError::Input(e.to_string()))
}

fn r(x: &Rational) -> String {
    format_rational(x)
}

fn rs(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(format_rational).collect()
}

fn rats(xs: &[String]) -> Result<Vec<Rational>, CliError> {
    xs.iter().map(|s| parse_rational(s).map_err(lib)).collect()
}

fn poly_json(p: &Polynomial) -> Value {
    json!(rs(p.coeffs()))
}

fn ratfun_json(z: &RationalFunction) -> Value {
    json!({
        "function": z.to_string(),
        "numerator": poly_json(z.numerator()),
        "denominator": poly_json(z.denominator()),
    })
}

fn classification_json(cd: &ClassificationData) -> Value {
    serde_json::to_value(cd.to_spec()).expect("spec serializes")
}

// ---- categories and evaluations

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FreeSpec {
    alphabet: String,
    #[serde(default)]
    inner_endpoints: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StatespaceInput {
    monoid: Option<MonoidSpec>,
    category: Option<CategorySpec>,
    free: Option<FreeSpec>,
    object: Vec<(String, Sign)>,
    #[serde(default)]
    loops: BTreeMap<String, String>,
    #[serde(default)]
    intervals: BTreeMap<String, String>,
    default: Option<String>,
    character: Option<PseudoCharacterSpec>,
    automaton: Option<AutomatonSpec>,
}

enum Cat {
    Fin(Box<FinCategory>, Option<FiniteMonoid>),
    Free(FreeMonoidCategory),
}

impl Cat {
    fn get(&self) -> &dyn Category {
        match self {
            Cat::Fin(c, _) => c.as_ref(),
            Cat::Free(c) => c,
        }
    }
}

fn object(cat: &dyn Category, obj: &[(String, Sign)]) -> Result<SignedSequence, CliError> {
    Ok(SignedSequence(
        obj.iter().map(|(n, s)| Ok((cat.object_index(n).map_err(lib)?, *s))).collect::<Result<_, CliError>>()?,
    ))
}

fn statespace(inp: StatespaceInput, caps: &Caps) -> Result<Value, CliError> {
    let cat = match (inp.monoid, inp.category, inp.free) {
        (Some(m), None, None) => {
            let m = FiniteMonoid::from_spec(&m).map_err(lib)?;
            Cat::Fin(Box::new(m.to_category()), Some(m))
        }
        (None, Some(c), None) => Cat::Fin(Box::new(FinCategory::from_spec(&c).map_err(lib)?), None),
        (None, None, Some(f)) => Cat::Free(FreeMonoidCategory::new(f.alphabet.chars().collect(), f.inner_endpoints).map_err(lib)?),
        _ => return Err(CliError::Input("exactly one of monoid, category, free is required".into())),
    };
    let c = cat.get();
    let obj = object(c, &inp.object)?;
    let automaton;
    let table;
    let alpha: &dyn Evaluation<Rational> = match (inp.character, inp.automaton, &cat) {
        (Some(spec), None, Cat::Fin(fc, Some(m))) => {
            table = PseudoCharacter::from_spec(m, &spec).map_err(lib)?.to_evaluation(fc);
            &table
        }
        (None, Some(spec), Cat::Free(_)) => {
            automaton = WeightedAutomaton::from_spec(&spec).map_err(lib)?;
            if automaton.alphabet_size() != c.hom(0, 0, 1).len() - 1 {
                return Err(CliError::Input("automaton alphabet differs from the category".into()));
            }
            return field_report(c, &obj, &AutomatonEvaluation { automaton: &automaton }, caps);
        }
        (None, None, _) => {
            let loops = inp.loops.iter().map(|(k, v)| Ok((k.clone(), parse_rational(v).map_err(lib)?))).collect::<Result<_, CliError>>()?;
            let intervals =
                inp.intervals.iter().map(|(k, v)| Ok((k.clone(), parse_rational(v).map_err(lib)?))).collect::<Result<_, CliError>>()?;
            let default = inp.default.as_deref().map(parse_rational).transpose().map_err(lib)?;
            table = TableEvaluation::from_keys(c, &loops, &intervals, default).map_err(lib)?;
            &table
        }
        _ => return Err(CliError::Input("character needs a monoid, automaton needs a free category".into())),
    };
    field_report(c, &obj, alpha, caps)
}

fn field_report(c: &dyn Category, obj: &SignedSequence, alpha: &dyn Evaluation<Rational>, caps: &Caps) -> Result<Value, CliError> {
    let s = state_space_field(c, obj, alpha, caps.cap_words).map_err(lib)?;
    Ok(json!({
        "spanning_size": s.spanning.len(),
        "dual_spanning_size": s.dual_spanning.len(),
        "gram_rows": s.gram.rows(),
        "gram_cols": s.gram.cols(),
        "rank": s.dimension,
        "previous_rank": s.previous_dimension,
        "stabilized": s.stabilized(),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BooleanInput {
    alphabet: String,
    object: Vec<(String, Sign)>,
    intervals: Dfa,
    loops: Option<Dfa>,
}

fn boolean_statespace(inp: BooleanInput, caps: &Caps) -> Result<Value, CliError> {
    let letters = inp.alphabet.chars().count();
    inp.intervals.validate(letters).map_err(lib)?;
    if let Some(d) = &inp.loops {
        d.validate(letters).map_err(lib)?;
    }
    let cat = FreeMonoidCategory::new(inp.alphabet.chars().collect(), true).map_err(lib)?;
    let obj = object(&cat, &inp.object)?;
    let lang = LanguageEvaluation { intervals: inp.intervals, loops: inp.loops };
    let s = state_space_boolean(&cat, &obj, &lang, caps.cap_words).map_err(lib)?;
    Ok(json!({
        "spanning_size": s.spanning.len(),
        "dual_spanning_size": s.dual_spanning.len(),
        "states": s.state_count(),
        "join_irreducible": s.join_irreducible,
        "previous_states": s.previous_states,
        "stabilized": s.stabilized(),
    }))
}

fn automaton_minimize(spec: AutomatonSpec) -> Result<Value, CliError> {
    let a = WeightedAutomaton::from_spec(&spec).map_err(lib)?;
    let m = hankel_minimize(&a);
    let horizon = 2 * a.dimension().max(1);
    Ok(json!({
        "input_dimension": a.dimension(),
        "minimal_dimension": m.dimension(),
        "minimized": serde_json::to_value(m.to_spec()).expect("spec serializes"),
        "agreement_checked_to_length": horizon,
        "agrees": series_agree(&a, &m, horizon),
    }))
}

// ---- pseudocharacters

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepSpec {
    dimension: usize,
    matrices: Vec<Vec<Vec<String>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CharacterInput {
    monoid: MonoidSpec,
    character: Option<PseudoCharacterSpec>,
    rep: Option<RepSpec>,
    element: Option<String>,
    degree: Option<usize>,
    #[serde(default)]
    table: Vec<PseudoCharacterSpec>,
}

fn load_character(inp: &CharacterInput) -> Result<(FiniteMonoid, PseudoCharacter, Option<RepData>), CliError> {
    let m = FiniteMonoid::from_spec(&inp.monoid).map_err(lib)?;
    match (&inp.character, &inp.rep) {
        (Some(c), None) => {
            let alpha = PseudoCharacter::from_spec(&m, c).map_err(lib)?;
            Ok((m, alpha, None))
        }
        (None, Some(r)) => {
            let mats = r.matrices.iter().map(|x| Matrix::parse_rows(x).map_err(lib)).collect::<Result<_, _>>()?;
            let rep = RepData::new(&m, r.dimension, mats).map_err(lib)?;
            let alpha = char_of_rep(&m, &rep).map_err(lib)?;
            Ok((m, alpha, Some(rep)))
        }
        _ => Err(CliError::Input("exactly one of character, rep is required".into())),
    }
}

fn pseudochar_degree(inp: CharacterInput, caps: &Caps) -> Result<Value, CliError> {
    let (m, alpha, _) = load_character(&inp)?;
    let alg = MonoidTrace { monoid: &m, alpha: &alpha };
    let elems: Vec<usize> = (0..m.size()).collect();
    let d = degree(&alg, &elems, caps.max_degree).map_err(|e| match e {
        PseudoError::NotPseudo(_) => {
            let report = json!({ "verdict": "not a pseudocharacter within max_degree" });
            rejected(&e, report)
        }
        e => lib(e),
    })?;
    Ok(json!({
        "degree": d.degree,
        "witness": d.witness.iter().map(|&g| m.name(g).to_string()).collect::<Vec<_>>(),
        "witness_value": r(&d.witness_value),
        "tuples_checked": d.tuples_checked,
        "identity_trace": r(&d.identity_trace),
    }))
}

fn pseudochar_charpoly(inp: CharacterInput, caps: &Caps) -> Result<Value, CliError> {
    let (m, alpha, rep) = load_character(&inp)?;
    let name = inp.element.as_deref().ok_or_else(|| CliError::Input("element is required".into()))?;
    let x = m.element(name).map_err(lib)?;
    let alg = MonoidTrace { monoid: &m, alpha: &alpha };
    let elems: Vec<usize> = (0..m.size()).collect();
    let d = match inp.degree {
        Some(d) => d,
        None => degree(&alg, &elems, caps.max_degree).map_err(lib)?.degree,
    };
    let p = alpha_charpoly(&alg, &elems, &x, d).map_err(lib)?;
    let mut out = json!({
        "degree": d,
        "element": name,
        "coefficients": poly_json(&p),
        "polynomial": p.display_in("x"),
    });
    if let Some(rep) = rep {
        let v = substitute_matrix(&p, &rep.matrices[x]).map_err(lib)?;
        out["vanishes_on_rep"] = json!(v.is_zero_matrix());
    }
    Ok(out)
}

fn pseudochar_lift(inp: CharacterInput) -> Result<Value, CliError> {
    let (m, alpha, _) = load_character(&inp)?;
    let table = inp.table.iter().map(|c| PseudoCharacter::from_spec(&m, c).map_err(lib)).collect::<Result<Vec<_>, _>>()?;
    match lift_with_table(&alpha, &table) {
        Ok(n) => Ok(json!({ "multiplicities": n })),
        Err(e @ PseudoError::Infeasible { .. }) => {
            let sol = match &e {
                PseudoError::Infeasible { solution: Some(s) } => json!(rs(s)),
                _ => Value::Null,
            };
            Err(rejected(&e, json!({ "verdict": "no nonnegative integer lift", "rational_solution": sol })))
        }
        Err(e) => Err(lib(e)),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct HolonomyInput {
    graph: GraphHolonomySpec,
    base: String,
}

fn holonomy(inp: HolonomyInput, caps: &Caps) -> Result<Value, CliError> {
    let gh = GraphHolonomy::from_spec(&inp.graph).map_err(lib)?;
    let base = gh.vertex(&inp.base).ok_or_else(|| CliError::Input(format!("unknown vertex {}", inp.base)))?;
    let rep = graph_pseudoholonomy(&gh, base, caps.cap_words, caps.max_degree, Execution::default()).map_err(lib)?;
    let table: BTreeMap<&String, String> = rep.table.iter().map(|(k, v)| (k, r(v))).collect();
    Ok(json!({
        "walk_traces": table,
        "degree": rep.degree.degree,
        "witness_walks": rep.witness_walks,
        "witness_value": r(&rep.degree.witness_value),
        "tuples_checked": rep.degree.tuples_checked,
    }))
}

// ---- two-dimensional TQFTs

fn frobenius_validate(spec: FrobeniusSpec) -> Result<Value, CliError> {
    let fa = FrobeniusAlgebra::parse_spec(&spec).map_err(lib)?;
    if let Err(e) = fa.validate() {
        let (kind, _) = crate::error::kind_of(&e);
        return Err(rejected(&e, json!({ "valid": false, "failure": kind, "reason": e.to_string() })));
    }
    let hd = fa.handle_element().map_err(lib)?;
    let surfaces = (0..4).map(|g| fa.surface_eval(g).map(|v| r(&v)).map_err(lib)).collect::<Result<Vec<_>, _>>()?;
    Ok(json!({
        "valid": true,
        "dim": fa.dim(),
        "handle": rs(&hd.handle),
        "surfaces_genus_0_to_3": surfaces,
    }))
}

fn genfun(spec: FrobeniusSpec) -> Result<Value, CliError> {
    let fa = FrobeniusAlgebra::from_spec(&spec).map_err(lib)?;
    let z = generating_function(&fa).map_err(lib)?;
    let mut out = ratfun_json(&z);
    out["dim"] = json!(fa.dim());
    Ok(out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RatFunInput {
    numerator: Vec<String>,
    #[serde(default)]
    denominator: Option<Vec<String>>,
}

fn classify(inp: RatFunInput) -> Result<Value, CliError> {
    let num = Polynomial::new(rats(&inp.numerator)?);
    let den = match &inp.denominator {
        Some(d) => Polynomial::new(rats(d)?),
        None => Polynomial::one(),
    };
    let z = RationalFunction::new(num, den).map_err(lib)?;
    match classify_genfun(&z) {
        Ok(cd) => Ok(json!({ "verdict": "accept", "input": z.to_string(), "classification": classification_json(&cd) })),
        Err(e) => {
            let (kind, _) = crate::error::kind_of(&e);
            let reason = kind.rsplit("::").next().unwrap_or(&kind).to_string();
            Err(rejected(&e, json!({ "verdict": "reject", "input": z.to_string(), "reason": reason })))
        }
    }
}

fn witness(spec: ClassificationSpec) -> Result<Value, CliError> {
    let cd = ClassificationData::from_spec(&spec).map_err(lib)?;
    let fa = witness_synthesis(&cd).map_err(lib)?;
    let z = generating_function(&fa).map_err(lib)?;
    Ok(json!({
        "algebra": serde_json::to_value(fa.to_spec()).expect("spec serializes"),
        "generating_function": ratfun_json(&z),
        "round_trip": classify_genfun(&z).as_ref() == Ok(&cd),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockSpec {
    lambda: String,
    n: usize,
    m: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PihSolveInput {
    blocks: Vec<BlockSpec>,
}

fn pih_solve_job(inp: PihSolveInput) -> Result<Value, CliError> {
    let blocks = inp
        .blocks
        .iter()
        .map(|b| Ok(Block { lambda: parse_rational(&b.lambda).map_err(lib)?, n: b.n, m: b.m }))
        .collect::<Result<Vec<_>, CliError>>()?;
    let sys = pih_solve(&blocks).map_err(lib)?;
    let (det, u) = confluent_vandermonde_det(&blocks).map_err(lib)?;
    Ok(json!({
        "t": sys.t.format_rows(),
        "r": rs(&sys.r),
        "gamma": rs(&sys.gamma),
        "alpha1_forced": r(&sys.alpha1_forced),
        "alpha1_required": r(&sys.alpha1_required),
        "verdict": format!("{:?}", sys.verdict),
        "det_t": r(&det),
        "u": r(&u),
    }))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PihCheckInput {
    system: PihSystemSpec,
    alpha: Vec<String>,
}

fn pih_check_job(inp: PihCheckInput) -> Result<Value, CliError> {
    let sys = PihSystem::from_spec(&inp.system).map_err(lib)?;
    let alpha = rats(&inp.alpha)?;
    let rep = pih_check(&sys, &alpha).map_err(lib)?;
    let out = json!({
        "dim": sys.dim(),
        "horizon": rep.horizon,
        "ok": rep.ok(),
        "first_violation": rep.first_violation.map(|(n, rel)| json!({ "n": n, "relation": format!("{rel:?}") })),
        "note": rep.note,
    });
    match rep.first_violation {
        None => Ok(out),
        Some((n, rel)) => Err(CliError::Rejected {
            kind: "PihReport::Violation".into(),
            message: format!("{rel:?} relation fails at n = {n}"),
            report: out,
        }),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SequenceInput {
    alpha: Option<Vec<String>>,
    frobenius: Option<FrobeniusSpec>,
    m: Option<usize>,
    d: Option<usize>,
}

fn sequence(inp: &SequenceInput, len: usize) -> Result<Vec<Rational>, CliError> {
    match (&inp.alpha, &inp.frobenius) {
        (Some(a), None) => rats(a),
        (None, Some(spec)) => {
            let fa = FrobeniusAlgebra::from_spec(spec).map_err(lib)?;
            (0..len).map(|g| fa.surface_eval(g).map_err(lib)).collect()
        }
        _ => Err(CliError::Input("exactly one of alpha, frobenius is required".into())),
    }
}

fn cob2_dim(inp: SequenceInput, caps: &Caps) -> Result<Value, CliError> {
    let m = inp.m.ok_or_else(|| CliError::Input("m is required".into()))?;
    let alpha = sequence(&inp, 2 * caps.cap_genus * m.max(1) + m + 1)?;
    let rep = cob2_state_space(m, &alpha, caps.cap_genus).map_err(lib)?;
    Ok(json!({
        "m": m,
        "spanning_size": rep.spanning_size,
        "dimension": rep.dimension,
        "previous_dimension": rep.previous_dimension,
        "stabilized": rep.stabilized(),
    }))
}

fn cob2_pseudo(inp: SequenceInput, caps: &Caps) -> Result<Value, CliError> {
    let d = inp.d.ok_or_else(|| CliError::Input("d is required".into()))?;
    let alpha = sequence(&inp, (d + 1) * (caps.cap_genus + 1) + 1)?;
    let rep = cob2_pseudochar_check(&alpha, d, caps.cap_genus, Execution::default()).map_err(lib)?;
    let classification = match &rep.classification {
        None => Value::Null,
        Some(Ok(cd)) => json!({ "verdict": "accept", "data": classification_json(cd) }),
        Some(Err(e)) => {
            let (kind, _) = crate::error::kind_of(e);
            json!({ "verdict": "reject", "reason": kind.rsplit("::").next().unwrap_or(&kind) })
        }
    };
    Ok(json!({
        "d": rep.d,
        "dot_cap": rep.cap,
        "configurations_checked": rep.configurations_checked,
        "pseudocharacter": rep.witness.is_none(),
        "witness": rep.witness.as_ref().map(|w| json!({ "arcs": w.arcs, "pairs": w.pairs, "value": r(&w.value) })),
        "classification": classification,
        "consistent": rep.consistent,
    }))
}
