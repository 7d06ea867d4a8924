//! Structured pass/fail reports shared by every checker.

use crate::exactla::{vector, Rational, Vector};

/// Whether a report keeps every violation or only the first per condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReportMode {
    #[default]
    FirstPerCondition,
    Exhaustive,
}

/// One violated identity: the condition id, the basis indices it was
/// evaluated at (1-based, each index relative to its own basis), and the two
/// sides of the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub condition: String,
    pub indices: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConditionReport {
    mode: ReportMode,
    failures: Vec<Failure>,
}

impl ConditionReport {
    pub fn new(mode: ReportMode) -> Self {
        Self { mode, failures: Vec::new() }
    }

    /// A report holding exactly `failures`, in default mode.
    pub fn from_failures(failures: Vec<Failure>) -> Self {
        Self { mode: ReportMode::default(), failures }
    }

    pub fn mode(&self) -> ReportMode {
        self.mode
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn into_failures(self) -> Vec<Failure> {
        self.failures
    }

    /// Ids of the failing conditions, in first-failure order, deduplicated.
    pub fn failed_conditions(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = Vec::new();
        for f in &self.failures {
            if !ids.contains(&f.condition.as_str()) {
                ids.push(&f.condition);
            }
        }
        ids
    }

    pub fn has_failure(&self, condition: &str) -> bool {
        self.failures.iter().any(|f| f.condition == condition)
    }

    /// True when a further failure of `condition` would be dropped anyway,
    /// so callers can skip evaluating it.
    pub fn saturated(&self, condition: &str) -> bool {
        self.mode == ReportMode::FirstPerCondition && self.has_failure(condition)
    }

    /// Records a failure when `lhs != rhs`.
    pub fn check(&mut self, condition: &str, indices: &[usize], lhs: Vector, rhs: Vector) {
        if lhs != rhs && !self.saturated(condition) {
            self.failures.push(Failure {
                condition: condition.to_string(),
                indices: indices.iter().map(|i| i + 1).collect(),
                lhs,
                rhs,
            });
        }
    }

    /// Records a failure when the expression is nonzero (identity `expr = 0`).
    pub fn check_zero(&mut self, condition: &str, indices: &[usize], expr: Vector) {
        if !vector::is_zero(&expr) {
            let zero = vector::zeros(expr.len());
            self.check(condition, indices, expr, zero);
        }
    }

    pub fn check_scalar(&mut self, condition: &str, indices: &[usize], lhs: Rational, rhs: Rational) {
        self.check(condition, indices, vec![lhs], vec![rhs]);
    }

    /// Appends another report's failures, honouring this report's mode.
    pub fn merge(&mut self, other: ConditionReport) {
        for f in other.failures {
            if !self.saturated(&f.condition) {
                self.failures.push(f);
            }
        }
    }

    /// Stable sort of the failures by condition id, so reports produced by
    /// different loop orders can be compared failure for failure.
    pub fn sorted_by_condition(mut self) -> Self {
        self.failures.sort_by(|a, b| a.condition.cmp(&b.condition));
        self
    }

    /// Prefixes every condition id, used when nesting reports.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for f in &mut self.failures {
            f.condition = format!("{prefix}{}", f.condition);
        }
        self
    }
}

impl std::fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.passed() {
            return write!(f, "pass");
        }
        writeln!(f, "fail ({} violation(s))", self.failures.len())?;
        for fail in &self.failures {
            let render = |v: &Vector| {
                v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
            };
            writeln!(
                f,
                "  [{}] at {:?}: ({}) != ({})",
                fail.condition,
                fail.indices,
                render(&fail.lhs),
                render(&fail.rhs)
            )?;
        }
        Ok(())
    }
}
