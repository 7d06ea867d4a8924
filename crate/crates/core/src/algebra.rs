//! Lie algebras given by structure constants, Rota-Baxter operators of weight
//! λ, their morphisms, and (Rota-Baxter) modules, with exhaustive basis-level
//! axiom checkers.

use num_traits::Zero;

use crate::error::{shape_err, Error, Result};
use crate::exactla::{int, vector, Matrix, Rational, Tensor3, Vector};
use crate::report::{ConditionReport, ReportMode};

/// Lie algebra on `k^dim` with bracket `[e_i, e_j] = sum_k c[k][i][j] e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    bracket: Tensor3,
    labels: Option<Vec<String>>,
}

impl LieAlgebra {
    /// Validates shape and antisymmetry. Jacobi is left to [`check_lie`].
    pub fn new(bracket: Tensor3, labels: Option<Vec<String>>) -> Result<Self> {
        let lie = Self::from_structure_constants_unchecked(bracket, labels)?;
        let n = lie.dim();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if *lie.bracket.get(k, i, j) != -lie.bracket.get(k, j, i) {
                        return Err(Error::InvalidInput(format!(
                            "structure constants not antisymmetric at ({}, {})",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(lie)
    }

    /// Only checks that the tensor is `dim x dim x dim` and the labels fit.
    /// Used for products that may fail antisymmetry and for negative tests.
    pub fn from_structure_constants_unchecked(
        bracket: Tensor3,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let (o, l, r) = bracket.shape();
        if o != l || l != r {
            return shape_err(format!("bracket tensor has shape {o}x{l}x{r}"));
        }
        if let Some(labels) = &labels {
            if labels.len() != o {
                return shape_err(format!("{} labels for dimension {o}", labels.len()));
            }
        }
        Ok(Self { bracket, labels })
    }

    pub fn abelian(n: usize) -> Self {
        Self { bracket: Tensor3::zeros(n, n, n), labels: Some(default_labels("e", n)) }
    }

    /// Two-dimensional non-abelian algebra, `[e1, e2] = e2`.
    pub fn aff1() -> Self {
        let mut c = Tensor3::zeros(2, 2, 2);
        c.set(1, 0, 1, int(1));
        c.set(1, 1, 0, int(-1));
        Self { bracket: c, labels: Some(default_labels("e", 2)) }
    }

    /// `[e1, e2] = e3`, everything else zero.
    pub fn heisenberg3() -> Self {
        let mut c = Tensor3::zeros(3, 3, 3);
        c.set(2, 0, 1, int(1));
        c.set(2, 1, 0, int(-1));
        Self { bracket: c, labels: Some(default_labels("e", 3)) }
    }

    /// Basis `(h, e, f)` with `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let mut c = Tensor3::zeros(3, 3, 3);
        for (k, i, j, v) in [(1, 0, 1, 2), (2, 0, 2, -2), (0, 1, 2, 1)] {
            c.set(k, i, j, int(v));
            c.set(k, j, i, int(-v));
        }
        Self { bracket: c, labels: Some(vec!["h".into(), "e".into(), "f".into()]) }
    }

    /// Built-in fixtures by name: `abelian:n`, `aff1`, `heisenberg3`, `sl2`.
    pub fn fixture(name: &str) -> Result<Self> {
        match name {
            "aff1" => Ok(Self::aff1()),
            "heisenberg3" => Ok(Self::heisenberg3()),
            "sl2" => Ok(Self::sl2()),
            _ => name
                .strip_prefix("abelian:")
                .and_then(|n| n.parse::<usize>().ok())
                .map(Self::abelian)
                .ok_or_else(|| Error::InvalidInput(format!("unknown fixture algebra {name:?}"))),
        }
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim_out()
    }

    pub fn structure_constants(&self) -> &Tensor3 {
        &self.bracket
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        if labels.as_ref().is_some_and(|l| l.len() != self.dim()) {
            return shape_err("label count does not match dimension");
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vector {
        self.bracket.apply_unchecked(u, v)
    }

    /// `[e_i, e_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        self.bracket.pair(i, j)
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }

    /// Matrix of `ad_u = [u, -]`.
    pub fn ad(&self, u: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(u, &vector::unit(n, j))).collect();
        Matrix::from_columns(&cols, n).expect("ad columns have length dim")
    }

    /// The adjoint action of the algebra on itself, as a left action.
    pub fn adjoint_action(&self) -> LinearAction {
        LinearAction { side: ActionSide::Left, algebra_dim: self.dim(), module_dim: self.dim(), tensor: self.bracket.clone() }
    }
}

pub(crate) fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Antisymmetry (`c[k][i][j] = -c[k][j][i]`) and Jacobi on every basis triple.
pub fn check_lie(lie: &LieAlgebra) -> ConditionReport {
    check_lie_with(lie, ReportMode::default())
}

pub fn check_lie_with(lie: &LieAlgebra, mode: ReportMode) -> ConditionReport {
    let n = lie.dim();
    let mut report = ConditionReport::new(mode);
    let brackets: Vec<Vec<Vector>> =
        (0..n).map(|i| (0..n).map(|j| lie.basis_bracket(i, j)).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            report.check("antisymmetry", &[i, j], brackets[i][j].clone(), vector::neg(&brackets[j][i]));
        }
    }
    // [[e_i, e_j], e_l] expanded through the basis brackets.
    let outer = |u: &Vector, l: usize| -> Vector {
        let mut acc = vector::zeros(n);
        for (k, c) in u.iter().enumerate() {
            if !c.is_zero() {
                vector::add_assign(&mut acc, &vector::scale(c, &brackets[k][l]));
            }
        }
        acc
    };
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                if report.saturated("jacobi") {
                    return report;
                }
                let jac = vector::sum(
                    n,
                    [&outer(&brackets[i][j], l), &outer(&brackets[j][l], i), &outer(&brackets[l][i], j)],
                );
                report.check_zero("jacobi", &[i, j, l], jac);
            }
        }
    }
    report
}

/// A Lie algebra with a Rota-Baxter operator of weight `weight`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RBLieAlgebra {
    pub algebra: LieAlgebra,
    pub weight: Rational,
    pub operator: Matrix,
}

impl RBLieAlgebra {
    pub fn new(algebra: LieAlgebra, weight: Rational, operator: Matrix) -> Result<Self> {
        let n = algebra.dim();
        if operator.rows() != n || operator.cols() != n {
            return shape_err(format!(
                "operator is {}x{} on a {n}-dimensional algebra",
                operator.rows(),
                operator.cols()
            ));
        }
        Ok(Self { algebra, weight, operator })
    }

    /// The zero operator, a Rota-Baxter operator of every weight.
    pub fn with_zero_operator(algebra: LieAlgebra, weight: Rational) -> Self {
        let n = algebra.dim();
        Self { algebra, weight, operator: Matrix::zeros(n, n) }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vector {
        self.algebra.bracket(u, v)
    }

    pub fn op(&self, u: &[Rational]) -> Vector {
        self.operator.apply_unchecked(u)
    }
}

/// The weighted identity `[Pg, Ph] = P([Pg, h] + [g, Ph] + λ[g, h])` on every
/// basis pair. Errors when the underlying bracket is not a Lie bracket.
pub fn check_rb(rb: &RBLieAlgebra) -> Result<ConditionReport> {
    check_rb_with(rb, ReportMode::default())
}

pub fn check_rb_with(rb: &RBLieAlgebra, mode: ReportMode) -> Result<ConditionReport> {
    let lie = check_lie(&rb.algebra);
    if !lie.passed() {
        return Err(Error::InvalidInput(format!(
            "underlying bracket is not a Lie bracket (fails {})",
            lie.failed_conditions().join(", ")
        )));
    }
    Ok(rb_identity_report(rb, mode))
}

pub(crate) fn rb_identity_report(rb: &RBLieAlgebra, mode: ReportMode) -> ConditionReport {
    let n = rb.dim();
    let mut report = ConditionReport::new(mode);
    let images: Vec<Vector> = (0..n).map(|i| rb.operator.column(i)).collect();
    for i in 0..n {
        let ei = vector::unit(n, i);
        for j in 0..n {
            if report.saturated("rota-baxter") {
                return report;
            }
            let ej = vector::unit(n, j);
            let lhs = rb.bracket(&images[i], &images[j]);
            let inner = vector::sum(
                n,
                [
                    &rb.bracket(&images[i], &ej),
                    &rb.bracket(&ei, &images[j]),
                    &vector::scale(&rb.weight, &rb.algebra.basis_bracket(i, j)),
                ],
            );
            report.check("rota-baxter", &[i, j], lhs, rb.op(&inner));
        }
    }
    report
}

/// `F[e_i, e_j] = [F e_i, F e_j]` on every basis pair and `F P = P' F`.
pub fn check_rb_morphism(src: &RBLieAlgebra, dst: &RBLieAlgebra, map: &Matrix) -> Result<ConditionReport> {
    check_rb_morphism_with(src, dst, map, ReportMode::default())
}

pub fn check_rb_morphism_with(
    src: &RBLieAlgebra,
    dst: &RBLieAlgebra,
    map: &Matrix,
    mode: ReportMode,
) -> Result<ConditionReport> {
    if src.weight != dst.weight {
        return Err(Error::InvalidInput(format!(
            "weights differ: {} vs {}",
            src.weight, dst.weight
        )));
    }
    if map.rows() != dst.dim() || map.cols() != src.dim() {
        return shape_err(format!(
            "map is {}x{}, expected {}x{}",
            map.rows(),
            map.cols(),
            dst.dim(),
            src.dim()
        ));
    }
    let n = src.dim();
    let mut report = ConditionReport::new(mode);
    let images: Vec<Vector> = (0..n).map(|i| map.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            if report.saturated("bracket") {
                break;
            }
            let lhs = map.apply_unchecked(&src.algebra.basis_bracket(i, j));
            report.check("bracket", &[i, j], lhs, dst.bracket(&images[i], &images[j]));
        }
    }
    for i in 0..n {
        let lhs = map.apply_unchecked(&src.operator.column(i));
        report.check("operator", &[i], lhs, dst.op(&images[i]));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ActionSide {
    /// `g ⊗ V -> V`, tensor shape `(dim V, dim g, dim V)`.
    Left,
    /// `V ⊗ g -> V`, tensor shape `(dim V, dim V, dim g)`.
    Right,
}

/// A bilinear action of a Lie algebra on a vector space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearAction {
    side: ActionSide,
    algebra_dim: usize,
    module_dim: usize,
    tensor: Tensor3,
}

impl LinearAction {
    pub fn new(side: ActionSide, algebra_dim: usize, module_dim: usize, tensor: Tensor3) -> Result<Self> {
        let expected = match side {
            ActionSide::Left => (module_dim, algebra_dim, module_dim),
            ActionSide::Right => (module_dim, module_dim, algebra_dim),
        };
        if tensor.shape() != expected {
            return shape_err(format!("{side:?} action tensor has shape {:?}, expected {expected:?}", tensor.shape()));
        }
        Ok(Self { side, algebra_dim, module_dim, tensor })
    }

    pub fn side(&self) -> ActionSide {
        self.side
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.tensor
    }

    /// `g` acting on `v`: `g ▷ v` for a left action, `v ◁ g` for a right one.
    pub fn act(&self, g: &[Rational], v: &[Rational]) -> Vector {
        match self.side {
            ActionSide::Left => self.tensor.apply_unchecked(g, v),
            ActionSide::Right => self.tensor.apply_unchecked(v, g),
        }
    }

    /// Same action on the other side via `g ▷ x = -x ◁ g`.
    pub fn switch_side(&self) -> LinearAction {
        let (o, l, r) = self.tensor.shape();
        let mut t = Tensor3::zeros(o, r, l);
        for k in 0..o {
            for i in 0..l {
                for j in 0..r {
                    t.set(k, j, i, -self.tensor.get(k, i, j));
                }
            }
        }
        let side = match self.side {
            ActionSide::Left => ActionSide::Right,
            ActionSide::Right => ActionSide::Left,
        };
        LinearAction { side, algebra_dim: self.algebra_dim, module_dim: self.module_dim, tensor: t }
    }

    pub fn to_left(&self) -> LinearAction {
        match self.side {
            ActionSide::Left => self.clone(),
            ActionSide::Right => self.switch_side(),
        }
    }
}

/// Module law on every basis triple: `[g,h] ▷ v = g ▷ (h ▷ v) - h ▷ (g ▷ v)`
/// for left actions, `v ◁ [g,h] = (v ◁ g) ◁ h - (v ◁ h) ◁ g` for right ones.
pub fn check_module(lie: &LieAlgebra, action: &LinearAction) -> Result<ConditionReport> {
    check_module_with(lie, action, ReportMode::default())
}

pub fn check_module_with(lie: &LieAlgebra, action: &LinearAction, mode: ReportMode) -> Result<ConditionReport> {
    if lie.dim() != action.algebra_dim {
        return shape_err(format!(
            "action of a {}-dimensional algebra checked against a {}-dimensional one",
            action.algebra_dim,
            lie.dim()
        ));
    }
    let (n, m) = (lie.dim(), action.module_dim);
    let mut report = ConditionReport::new(mode);
    for i in 0..n {
        let g = vector::unit(n, i);
        for j in 0..n {
            let h = vector::unit(n, j);
            let gh = lie.basis_bracket(i, j);
            for l in 0..m {
                if report.saturated("module") {
                    return Ok(report);
                }
                let v = vector::unit(m, l);
                let lhs = action.act(&gh, &v);
                let rhs = match action.side {
                    ActionSide::Left => vector::sub(
                        &action.act(&g, &action.act(&h, &v)),
                        &action.act(&h, &action.act(&g, &v)),
                    ),
                    ActionSide::Right => vector::sub(
                        &action.act(&h, &action.act(&g, &v)),
                        &action.act(&g, &action.act(&h, &v)),
                    ),
                };
                report.check("module", &[i, j, l], lhs, rhs);
            }
        }
    }
    Ok(report)
}

/// A (left or right) module over a Rota-Baxter Lie algebra together with a
/// linear map `T` on the module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RBModule {
    pub base: RBLieAlgebra,
    pub action: LinearAction,
    pub operator: Matrix,
}

impl RBModule {
    pub fn new(base: RBLieAlgebra, action: LinearAction, operator: Matrix) -> Result<Self> {
        let m = action.module_dim;
        if action.algebra_dim != base.dim() {
            return shape_err("action does not match the base algebra dimension");
        }
        if operator.rows() != m || operator.cols() != m {
            return shape_err("module operator is not square on the module");
        }
        Ok(Self { base, action, operator })
    }

    pub fn space_dim(&self) -> usize {
        self.action.module_dim
    }

    /// The adjoint module of `(g, P)` with `T = P`.
    pub fn adjoint(base: &RBLieAlgebra) -> Self {
        Self { action: base.algebra.adjoint_action(), operator: base.operator.clone(), base: base.clone() }
    }
}

/// Module law plus, on every basis pair,
/// left: `P(g) ▷ T(v) = T(P(g) ▷ v + g ▷ T(v) + λ g ▷ v)`;
/// right: `T(v) ◁ P(g) = T(v ◁ P(g) + T(v) ◁ g + λ v ◁ g)`.
pub fn check_rb_module(module: &RBModule) -> Result<ConditionReport> {
    check_rb_module_with(module, ReportMode::default())
}

pub fn check_rb_module_with(module: &RBModule, mode: ReportMode) -> Result<ConditionReport> {
    let base_report = check_rb(&module.base)?;
    if !base_report.passed() {
        return Err(Error::InvalidInput("base operator is not a Rota-Baxter operator".into()));
    }
    let mut report = check_module_with(&module.base.algebra, &module.action, mode)?;
    let (n, m) = (module.base.dim(), module.space_dim());
    let act = |g: &Vector, v: &Vector| module.action.act(g, v);
    let t = |v: &Vector| module.operator.apply_unchecked(v);
    for i in 0..n {
        let g = vector::unit(n, i);
        let pg = module.base.op(&g);
        for l in 0..m {
            if report.saturated("rb-module") {
                return Ok(report);
            }
            let v = vector::unit(m, l);
            let tv = t(&v);
            let lhs = act(&pg, &tv);
            let inner = vector::sum(
                m,
                [&act(&pg, &v), &act(&g, &tv), &vector::scale(&module.base.weight, &act(&g, &v))],
            );
            report.check("rb-module", &[i, l], lhs, t(&inner));
        }
    }
    Ok(report)
}
