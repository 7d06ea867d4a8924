use std::fmt;
use std::fs;
use std::path::Path;

use rbla_core::algebra::{check_lie_with, check_rb_with};
use rbla_core::document::{self, ChainStep, Document};
use rbla_core::exactla::int;
use rbla_core::extending::{check_unified_axioms_with, validate_datum_with};
use rbla_core::flag::check_extended_derivation_with;
use rbla_core::{
    check_rb_morphism, decide_exder_equiv, decompose as decompose_datum, fixtures, flag_extend, partition_exders,
    unified_product, ConditionReport, DecompositionContext, EquivalenceWitness, Error as CoreError,
    ExtendedDerivation, ExtendingDatum, FlagChain, Matrix, RBLieAlgebra, ReportMode,
};

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub exhaustive: bool,
    pub human: bool,
}

impl Options {
    fn mode(self) -> ReportMode {
        if self.exhaustive {
            ReportMode::Exhaustive
        } else {
            ReportMode::FirstPerCondition
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success = 0,
    Failure = 1,
}

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input.
    Input(String),
    /// The input is well formed but algebraically unusable.
    Algebra(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Algebra(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) | CliError::Algebra(msg) => f.write_str(msg),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::Format(_) | CoreError::Shape(_) => CliError::Input(err.to_string()),
            _ => CliError::Algebra(err.to_string()),
        }
    }
}

type CliResult = Result<Outcome, CliError>;

fn read(path: &Path) -> Result<Document, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    document::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, doc: &Document) -> Result<(), CliError> {
    fs::write(path, document::render(doc)).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn expect_kind(path: &Path, doc: &Document, kind: &str) -> Result<(), CliError> {
    if doc.kind() == kind {
        Ok(())
    } else {
        Err(CliError::Input(format!("{}: expected a {kind} document, found {}", path.display(), doc.kind())))
    }
}

fn emit(report: &ConditionReport, opts: Options) -> Outcome {
    if opts.human {
        println!("{report}");
    } else {
        print!("{}", document::render(&Document::Report(report.clone())));
    }
    if report.passed() {
        Outcome::Success
    } else {
        Outcome::Failure
    }
}

/// Lie axioms first; the Rota-Baxter identity only on a Lie algebra.
fn rb_report(rb: &RBLieAlgebra, mode: ReportMode) -> Result<ConditionReport, CliError> {
    let lie = check_lie_with(&rb.algebra, mode);
    if !lie.passed() {
        return Ok(lie);
    }
    Ok(check_rb_with(rb, mode)?)
}

/// Validity of the base, then of the structure built on it.
fn with_valid_base(
    base: &RBLieAlgebra,
    mode: ReportMode,
    then: impl FnOnce() -> Result<ConditionReport, CoreError>,
) -> Result<ConditionReport, CliError> {
    let report = rb_report(base, mode)?;
    if !report.passed() {
        return Ok(report.prefixed("base."));
    }
    Ok(then()?)
}

fn chain_report(base: &RBLieAlgebra, steps: &[ChainStep], mode: ReportMode) -> Result<(ConditionReport, Option<FlagChain>), CliError> {
    let report = rb_report(base, mode)?;
    if !report.passed() {
        return Ok((report.prefixed("base."), None));
    }
    let mut chain = FlagChain::new(base.clone())?;
    for (i, s) in steps.iter().enumerate() {
        let x = ExtendedDerivation::new(
            chain.top().clone(),
            s.character.clone(),
            s.derivation.clone(),
            s.anchor.clone(),
            s.operator_scalar.clone(),
        )?;
        let report = check_extended_derivation_with(&x, mode)?;
        if !report.passed() {
            return Ok((report.prefixed(&format!("step{i}.")), None));
        }
        chain.push(x)?;
    }
    Ok((ConditionReport::new(mode), Some(chain)))
}

pub fn check(path: &Path, opts: Options) -> CliResult {
    let mode = opts.mode();
    let report = match read(path)? {
        Document::Lie(lie) => check_lie_with(&lie, mode),
        Document::RbLie { algebra, .. } => rb_report(&algebra, mode)?,
        Document::Datum(d) => with_valid_base(&d.base, mode, || validate_datum_with(&d, mode))?,
        Document::Exder(x) => with_valid_base(&x.base, mode, || check_extended_derivation_with(&x, mode))?,
        Document::Chain { base, steps } => chain_report(&base, &steps, mode)?.0,
        other => {
            return Err(CliError::Input(format!(
                "{}: {} documents cannot be checked on their own",
                path.display(),
                other.kind()
            )))
        }
    };
    Ok(emit(&report, opts))
}

pub fn unify(datum: &Path, output: &Path, opts: Options) -> CliResult {
    let doc = read(datum)?;
    expect_kind(datum, &doc, "datum")?;
    let Document::Datum(d) = doc else { unreachable!() };
    let product = unified_product(&d)?;
    let report = check_unified_axioms_with(&product, opts.mode());
    write(output, &Document::RbLie { algebra: product.product, unverified: !report.passed() })?;
    Ok(emit(&report, opts))
}

pub fn decompose(ambient: &Path, sub: &[usize], output: &Path, opts: Options) -> CliResult {
    let doc = read(ambient)?;
    expect_kind(ambient, &doc, "rb_lie")?;
    let Document::RbLie { algebra, .. } = doc else { unreachable!() };
    if let Some(bad) = sub.iter().find(|&&i| i >= algebra.dim()) {
        return Err(CliError::Input(format!("--sub index {bad} out of range for dimension {}", algebra.dim())));
    }
    let ctx = DecompositionContext::coordinate(algebra, sub).map_err(|e| CliError::Input(e.to_string()))?;
    let datum = decompose_datum(&ctx)?;
    write(output, &Document::Datum(datum.clone()))?;
    let mode = opts.mode();
    let mut report = with_valid_base(&ctx.ambient().clone(), mode, || validate_datum_with(&datum, mode))?;
    if report.passed() {
        let product = unified_product(&datum)?.product;
        let morphism = check_rb_morphism(&product, ctx.ambient(), ctx.recombination())?;
        report.merge(morphism.prefixed("recombination."));
    }
    Ok(emit(&report, opts))
}

fn read_exder(path: &Path) -> Result<ExtendedDerivation, CliError> {
    let doc = read(path)?;
    expect_kind(path, &doc, "exder")?;
    let Document::Exder(x) = doc else { unreachable!() };
    Ok(x)
}

pub fn equiv(first: &Path, second: &Path) -> CliResult {
    let (x, y) = (read_exder(first)?, read_exder(second)?);
    match decide_exder_equiv(&x, &y)? {
        Some(w) => print!("{}", document::render(&Document::Witness(w.to_equivalence_witness()))),
        None => println!("not-equivalent"),
    }
    Ok(Outcome::Success)
}

pub fn partition(files: &[std::path::PathBuf]) -> CliResult {
    let list = files.iter().map(|f| read_exder(f)).collect::<Result<Vec<_>, _>>()?;
    let classes = partition_exders(&list)?;
    println!("{}", serde_json::to_string(&classes).expect("index lists serialize"));
    Ok(Outcome::Success)
}

pub fn extend(path: &Path, output: &Path, opts: Options) -> CliResult {
    let mode = opts.mode();
    let (report, algebra) = match read(path)? {
        Document::Exder(x) => {
            let report = with_valid_base(&x.base, mode, || check_extended_derivation_with(&x, mode))?;
            let algebra = if report.passed() { Some(flag_extend(&x)?) } else { None };
            (report, algebra)
        }
        Document::Chain { base, steps } => {
            let (report, chain) = chain_report(&base, &steps, mode)?;
            (report, chain.map(|c| c.top().clone()))
        }
        other => {
            return Err(CliError::Input(format!(
                "{}: expected an exder or chain document, found {}",
                path.display(),
                other.kind()
            )))
        }
    };
    if let Some(algebra) = algebra {
        write(output, &Document::RbLie { algebra, unverified: false })?;
    }
    Ok(emit(&report, opts))
}

pub fn demo(dir: &Path) -> CliResult {
    fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let mut docs: Vec<(String, Document)> = Vec::new();
    for (name, algebra) in fixtures::demo_algebras() {
        docs.push((format!("{name}.rb_lie.json"), Document::RbLie { algebra, unverified: false }));
    }
    docs.push(("sl2.lie.json".into(), Document::Lie(rbla_core::LieAlgebra::sl2())));
    let aff1 = fixtures::aff1_zero();
    docs.push(("direct-sum.datum.json".into(), Document::Datum(ExtendingDatum::trivial(aff1.clone(), 1))));
    docs.push(("line-extension.datum.json".into(), Document::Datum(fixtures::line_extension_datum())));
    let mut bad = ExtendingDatum::trivial(aff1.clone(), 2);
    bad.complement_bracket.set(0, 0, 1, int(1));
    docs.push(("non-alternating.datum.json".into(), Document::Datum(bad)));
    docs.push((
        "matched-pair.datum.json".into(),
        Document::Datum(fixtures::character_matched_pair([1, 0]).to_datum()?),
    ));
    docs.push(("zero.exder.json".into(), Document::Exder(ExtendedDerivation::zero(aff1.clone()))));
    docs.push(("line-extension.exder.json".into(), Document::Exder(fixtures::line_extension_exder())));
    docs.push(("inner.exder.json".into(), Document::Exder(fixtures::inner_exder(int(0)))));
    docs.push(("anchored.exder.json".into(), Document::Exder(fixtures::anchored_exder(int(1)))));
    let zero_step = |n: usize| ChainStep {
        character: vec![int(0); n],
        derivation: Matrix::zeros(n, n),
        anchor: vec![int(0); n],
        operator_scalar: int(0),
    };
    docs.push(("two-lines.chain.json".into(), Document::Chain { base: aff1, steps: vec![zero_step(2), zero_step(3)] }));
    docs.push((
        "shift-e1.witness.json".into(),
        Document::Witness(EquivalenceWitness::shift_only(Matrix::from_i64(&[&[1], &[0]]))),
    ));
    for (name, doc) in &docs {
        write(&dir.join(name), doc)?;
    }
    Ok(Outcome::Success)
}
