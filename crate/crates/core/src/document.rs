//! Versioned JSON documents for algebras, data, witnesses, quadruples, flag
//! chains and reports.
//!
//! Every file is an envelope `{"schema_version": "1", "kind": …, "payload": …}`.
//! Rationals are strings `p` or `p/q` in lowest terms, matrices are arrays of
//! rows and tensors are nested arrays indexed `[k][i][j]`. Output is
//! pretty-printed with a trailing newline, so equal values render to equal
//! bytes.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{LieAlgebra, RBLieAlgebra};
use crate::classify::EquivalenceWitness;
use crate::error::{Error, Result};
use crate::exactla::{format_rational, parse_rational, Matrix, Rational, Tensor3, Vector};
use crate::extending::ExtendingDatum;
use crate::flag::ExtendedDerivation;
use crate::report::{ConditionReport, Failure};

pub const SCHEMA_VERSION: &str = "1";

/// One quadruple of a flag chain, without its base (the base of step `i` is
/// the algebra produced by the steps before it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub character: Vector,
    pub derivation: Matrix,
    pub anchor: Vector,
    pub operator_scalar: Rational,
}

/// A decoded document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Lie(LieAlgebra),
    /// `unverified` marks products written even though they failed a check.
    RbLie { algebra: RBLieAlgebra, unverified: bool },
    Datum(ExtendingDatum),
    Witness(EquivalenceWitness),
    Exder(ExtendedDerivation),
    Chain { base: RBLieAlgebra, steps: Vec<ChainStep> },
    Report(ConditionReport),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Lie(_) => "lie",
            Document::RbLie { .. } => "rb_lie",
            Document::Datum(_) => "datum",
            Document::Witness(_) => "witness",
            Document::Exder(_) => "exder",
            Document::Chain { .. } => "chain",
            Document::Report(_) => "report",
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    schema_version: String,
    kind: String,
    payload: Value,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LieDoc {
    dim: usize,
    bracket: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RbLieDoc {
    lie: LieDoc,
    weight: String,
    operator: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "is_false")]
    unverified: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DatumDoc {
    base: RbLieDoc,
    vdim: usize,
    tril: Vec<Vec<Vec<String>>>,
    trir: Vec<Vec<Vec<String>>>,
    f: Vec<Vec<Vec<String>>>,
    braces: Vec<Vec<Vec<String>>>,
    p1: Vec<Vec<String>>,
    p2: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessDoc {
    r: Vec<Vec<String>>,
    v: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepDoc {
    epsilon: Vec<String>,
    d: Vec<Vec<String>>,
    g0: Vec<String>,
    k0: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ExderDoc {
    base: RbLieDoc,
    epsilon: Vec<String>,
    d: Vec<Vec<String>>,
    g0: Vec<String>,
    k0: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainDoc {
    base: RbLieDoc,
    steps: Vec<StepDoc>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FailureDoc {
    condition: String,
    indices: Vec<usize>,
    lhs: Vec<String>,
    rhs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReportDoc {
    verdict: String,
    failures: Vec<FailureDoc>,
}

fn format_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Format(msg.into()))
}

fn q(s: &str, what: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| Error::Format(format!("{what}: {s:?} is not a rational")))
}

fn enc_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn dec_vec(v: &[String], len: usize, what: &str) -> Result<Vector> {
    if v.len() != len {
        return format_err(format!("{what}: expected {len} entries, found {}", v.len()));
    }
    v.iter().map(|s| q(s, what)).collect()
}

fn enc_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| enc_vec(r)).collect()
}

fn dec_matrix(rows: &[Vec<String>], r: usize, c: usize, what: &str) -> Result<Matrix> {
    if rows.len() != r {
        return format_err(format!("{what}: expected {r} rows, found {}", rows.len()));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, row)| dec_vec(row, c, &format!("{what} row {}", i + 1)))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows, c).map_err(|e| Error::Format(format!("{what}: {e}")))
}

fn enc_tensor(t: &Tensor3) -> Vec<Vec<Vec<String>>> {
    t.to_nested().iter().map(|s| s.iter().map(|r| enc_vec(r)).collect()).collect()
}

fn dec_tensor(t: &[Vec<Vec<String>>], shape: (usize, usize, usize), what: &str) -> Result<Tensor3> {
    let (o, l, r) = shape;
    if t.len() != o {
        return format_err(format!("{what}: expected {o} slices, found {}", t.len()));
    }
    let mut nested = Vec::with_capacity(o);
    for (k, slice) in t.iter().enumerate() {
        if slice.len() != l {
            return format_err(format!("{what} slice {}: expected {l} rows, found {}", k + 1, slice.len()));
        }
        let rows = slice
            .iter()
            .enumerate()
            .map(|(i, row)| dec_vec(row, r, &format!("{what} [{}][{}]", k + 1, i + 1)))
            .collect::<Result<Vec<_>>>()?;
        nested.push(rows);
    }
    Tensor3::from_nested(nested, o, l, r).map_err(|e| Error::Format(format!("{what}: {e}")))
}

fn enc_lie(lie: &LieAlgebra) -> LieDoc {
    LieDoc {
        dim: lie.dim(),
        bracket: enc_tensor(lie.structure_constants()),
        labels: lie.labels().map(|l| l.to_vec()),
    }
}

fn dec_lie(doc: &LieDoc) -> Result<LieAlgebra> {
    let n = doc.dim;
    let bracket = dec_tensor(&doc.bracket, (n, n, n), "bracket")?;
    if let Some(labels) = &doc.labels {
        if labels.len() != n {
            return format_err(format!("{} labels for dimension {n}", labels.len()));
        }
    }
    LieAlgebra::from_structure_constants_unchecked(bracket, doc.labels.clone())
        .map_err(|e| Error::Format(e.to_string()))
}

fn enc_rb(rb: &RBLieAlgebra, unverified: bool) -> RbLieDoc {
    RbLieDoc {
        lie: enc_lie(&rb.algebra),
        weight: format_rational(&rb.weight),
        operator: enc_matrix(&rb.operator),
        unverified,
    }
}

fn dec_rb(doc: &RbLieDoc) -> Result<RBLieAlgebra> {
    let algebra = dec_lie(&doc.lie)?;
    let n = algebra.dim();
    Ok(RBLieAlgebra {
        algebra,
        weight: q(&doc.weight, "weight")?,
        operator: dec_matrix(&doc.operator, n, n, "operator")?,
    })
}

fn enc_datum(d: &ExtendingDatum) -> DatumDoc {
    DatumDoc {
        base: enc_rb(&d.base, false),
        vdim: d.complement_dim,
        tril: enc_tensor(&d.right_action),
        trir: enc_tensor(&d.left_action),
        f: enc_tensor(&d.cocycle),
        braces: enc_tensor(&d.complement_bracket),
        p1: enc_matrix(&d.mixed_operator),
        p2: enc_matrix(&d.complement_operator),
    }
}

fn dec_datum(doc: &DatumDoc) -> Result<ExtendingDatum> {
    let base = dec_rb(&doc.base)?;
    let (n, m) = (base.dim(), doc.vdim);
    Ok(ExtendingDatum {
        right_action: dec_tensor(&doc.tril, (m, m, n), "tril")?,
        left_action: dec_tensor(&doc.trir, (n, m, n), "trir")?,
        cocycle: dec_tensor(&doc.f, (n, m, m), "f")?,
        complement_bracket: dec_tensor(&doc.braces, (m, m, m), "braces")?,
        mixed_operator: dec_matrix(&doc.p1, n, m, "p1")?,
        complement_operator: dec_matrix(&doc.p2, m, m, "p2")?,
        base,
        complement_dim: m,
    })
}

fn enc_step(character: &[Rational], derivation: &Matrix, anchor: &[Rational], k0: &Rational) -> StepDoc {
    StepDoc { epsilon: enc_vec(character), d: enc_matrix(derivation), g0: enc_vec(anchor), k0: format_rational(k0) }
}

fn dec_step(doc: &StepDoc, n: usize, what: &str) -> Result<ChainStep> {
    Ok(ChainStep {
        character: dec_vec(&doc.epsilon, n, &format!("{what}epsilon"))?,
        derivation: dec_matrix(&doc.d, n, n, &format!("{what}d"))?,
        anchor: dec_vec(&doc.g0, n, &format!("{what}g0"))?,
        operator_scalar: q(&doc.k0, &format!("{what}k0"))?,
    })
}

fn dec_witness(doc: &WitnessDoc) -> Result<EquivalenceWitness> {
    let m = doc.v.len();
    let n = doc.r.len();
    let shift = dec_matrix(&doc.r, n, m, "r")?;
    let automorphism = dec_matrix(&doc.v, m, m, "v")?;
    Ok(EquivalenceWitness { shift, automorphism })
}

fn enc_report(r: &ConditionReport) -> ReportDoc {
    ReportDoc {
        verdict: if r.passed() { "pass" } else { "fail" }.into(),
        failures: r
            .failures()
            .iter()
            .map(|f| FailureDoc {
                condition: f.condition.clone(),
                indices: f.indices.clone(),
                lhs: enc_vec(&f.lhs),
                rhs: enc_vec(&f.rhs),
            })
            .collect(),
    }
}

fn dec_report(doc: &ReportDoc) -> Result<ConditionReport> {
    let mut failures = Vec::with_capacity(doc.failures.len());
    for f in &doc.failures {
        let lhs: Vector = f.lhs.iter().map(|s| q(s, "lhs")).collect::<Result<_>>()?;
        let rhs: Vector = f.rhs.iter().map(|s| q(s, "rhs")).collect::<Result<_>>()?;
        failures.push(Failure { condition: f.condition.clone(), indices: f.indices.clone(), lhs, rhs });
    }
    match (doc.verdict.as_str(), failures.is_empty()) {
        ("pass", true) | ("fail", false) => Ok(ConditionReport::from_failures(failures)),
        _ => format_err("verdict does not agree with the failure list"),
    }
}

fn payload_of<T: Serialize>(body: &T) -> Value {
    serde_json::to_value(body).expect("document bodies serialize")
}

fn body<T: for<'de> Deserialize<'de>>(payload: Value, kind: &str) -> Result<T> {
    serde_json::from_value(payload).map_err(|e| Error::Format(format!("{kind} payload: {e}")))
}

/// Renders a document as pretty JSON with a trailing newline.
pub fn render(doc: &Document) -> String {
    let payload = match doc {
        Document::Lie(l) => payload_of(&enc_lie(l)),
        Document::RbLie { algebra, unverified } => payload_of(&enc_rb(algebra, *unverified)),
        Document::Datum(d) => payload_of(&enc_datum(d)),
        Document::Witness(w) => payload_of(&WitnessDoc { r: enc_matrix(&w.shift), v: enc_matrix(&w.automorphism) }),
        Document::Exder(x) => {
            let s = enc_step(&x.character, &x.derivation, &x.anchor, &x.operator_scalar);
            payload_of(&ExderDoc { base: enc_rb(&x.base, false), epsilon: s.epsilon, d: s.d, g0: s.g0, k0: s.k0 })
        }
        Document::Chain { base, steps } => payload_of(&ChainDoc {
            base: enc_rb(base, false),
            steps: steps
                .iter()
                .map(|s| enc_step(&s.character, &s.derivation, &s.anchor, &s.operator_scalar))
                .collect(),
        }),
        Document::Report(r) => payload_of(&enc_report(r)),
    };
    let env = Envelope { schema_version: SCHEMA_VERSION.into(), kind: doc.kind().into(), payload };
    let mut text = serde_json::to_string_pretty(&env).expect("envelopes serialize");
    text.push('\n');
    text
}

/// Parses and shape-checks a document. Every defect is an [`Error::Format`];
/// algebraic validity is not checked here.
pub fn parse(text: &str) -> Result<Document> {
    let env: Envelope = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if env.schema_version != SCHEMA_VERSION {
        return format_err(format!("unsupported schema version {:?}", env.schema_version));
    }
    let kind = env.kind.as_str();
    match kind {
        "lie" => Ok(Document::Lie(dec_lie(&body(env.payload, kind)?)?)),
        "rb_lie" => {
            let doc: RbLieDoc = body(env.payload, kind)?;
            Ok(Document::RbLie { algebra: dec_rb(&doc)?, unverified: doc.unverified })
        }
        "datum" => Ok(Document::Datum(dec_datum(&body(env.payload, kind)?)?)),
        "witness" => Ok(Document::Witness(dec_witness(&body(env.payload, kind)?)?)),
        "exder" => {
            let doc: ExderDoc = body(env.payload, kind)?;
            let base = dec_rb(&doc.base)?;
            let step = StepDoc { epsilon: doc.epsilon, d: doc.d, g0: doc.g0, k0: doc.k0 };
            let s = dec_step(&step, base.dim(), "")?;
            Ok(Document::Exder(ExtendedDerivation {
                base,
                character: s.character,
                derivation: s.derivation,
                anchor: s.anchor,
                operator_scalar: s.operator_scalar,
            }))
        }
        "chain" => {
            let doc: ChainDoc = body(env.payload, kind)?;
            let base = dec_rb(&doc.base)?;
            let mut steps = Vec::with_capacity(doc.steps.len());
            for (i, s) in doc.steps.iter().enumerate() {
                steps.push(dec_step(s, base.dim() + i, &format!("step {i} "))?);
            }
            Ok(Document::Chain { base, steps })
        }
        "report" => Ok(Document::Report(dec_report(&body(env.payload, kind)?)?)),
        other => format_err(format!("unknown kind {other:?}")),
    }
}
