use super::datum::require_valid_base;
use super::{unified_product, ExtendingDatum, UnifiedProduct};
use crate::algebra::{check_rb_module_with, ActionSide, LieAlgebra, LinearAction, RBLieAlgebra, RBModule};
use crate::error::{shape_err, Error, Result};
use crate::exactla::{vector, Matrix, Rational, Tensor3, Vector};
use crate::report::{ConditionReport, ReportMode};
use crate::split::Split;

/// Two Rota-Baxter Lie algebras with mutual actions: `▷: V × g → g` makes `g`
/// a left `V`-module and `◁: V × g → V` makes `V` a right `g`-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedPair {
    pub left: RBLieAlgebra,
    pub right: RBLieAlgebra,
    /// `◁`, shape `(m, m, n)`.
    pub right_action: Tensor3,
    /// `▷`, shape `(n, m, n)`.
    pub left_action: Tensor3,
}

impl MatchedPair {
    pub fn trivial(left: RBLieAlgebra, right: RBLieAlgebra) -> Self {
        let (n, m) = (left.dim(), right.dim());
        Self { left, right, right_action: Tensor3::zeros(m, m, n), left_action: Tensor3::zeros(n, m, n) }
    }

    fn check_shapes(&self) -> Result<()> {
        let (n, m) = (self.left.dim(), self.right.dim());
        if self.right_action.shape() != (m, m, n) || self.left_action.shape() != (n, m, n) {
            return shape_err("matched pair actions do not match the algebra dimensions");
        }
        if self.left.weight != self.right.weight {
            return Err(Error::InvalidInput("the two algebras have different weights".into()));
        }
        Ok(())
    }

    /// The extending datum with `f = 0`, `P₁ = 0`.
    pub fn to_datum(&self) -> Result<ExtendingDatum> {
        self.check_shapes()?;
        let (n, m) = (self.left.dim(), self.right.dim());
        ExtendingDatum::new(
            self.left.clone(),
            m,
            self.right_action.clone(),
            self.left_action.clone(),
            Tensor3::zeros(n, m, m),
            self.right.algebra.structure_constants().clone(),
            Matrix::zeros(n, m),
            self.right.operator.clone(),
        )
    }
}

/// Checks, with condition ids:
/// * `left-module`, `left-rb-module`: `(g, P)` is a left Rota-Baxter module
///   of `(V, P₂)` under `▷`;
/// * `right-module`, `right-rb-module`: `(V, P₂)` is a right Rota-Baxter
///   module of `(g, P)` under `◁`;
/// * `compat-bracket`: `x▷[g,h] = [x▷g,h] + [g,x▷h] + (x◁g)▷h − (x◁h)▷g`;
/// * `compat-braces`: `{x,y}◁g = {x,y◁g} + {x◁g,y} + x◁(y▷g) − y◁(x▷g)`.
pub fn check_matched_pair(pair: &MatchedPair) -> Result<ConditionReport> {
    check_matched_pair_with(pair, ReportMode::default())
}

pub fn check_matched_pair_with(pair: &MatchedPair, mode: ReportMode) -> Result<ConditionReport> {
    pair.check_shapes()?;
    require_valid_base(&pair.left, "left")?;
    require_valid_base(&pair.right, "right")?;
    let (n, m) = (pair.left.dim(), pair.right.dim());

    let on_g = LinearAction::new(ActionSide::Left, m, n, pair.left_action.clone())?;
    let on_v = LinearAction::new(ActionSide::Right, n, m, pair.right_action.clone())?;
    let mut report = ConditionReport::new(mode);
    let left_module = RBModule::new(pair.right.clone(), on_g.clone(), pair.left.operator.clone())?;
    let right_module = RBModule::new(pair.left.clone(), on_v.clone(), pair.right.operator.clone())?;
    // check_rb_module includes the plain module law under the id "module".
    let rename = |r: ConditionReport, side: &str| {
        let mut out = ConditionReport::new(mode);
        for f in r.into_failures() {
            let id = if f.condition == "module" { format!("{side}-module") } else { format!("{side}-{}", f.condition) };
            out.check(&id, &f.indices.iter().map(|i| i - 1).collect::<Vec<_>>(), f.lhs, f.rhs);
        }
        out
    };
    report.merge(rename(check_rb_module_with(&left_module, mode)?, "left"));
    report.merge(rename(check_rb_module_with(&right_module, mode)?, "right"));

    let gb: Vec<Vector> = (0..n).map(|i| vector::unit(n, i)).collect();
    let vb: Vec<Vector> = (0..m).map(|a| vector::unit(m, a)).collect();
    let tri = |x: &Vector, g: &Vector| pair.left_action.apply_unchecked(x, g);
    let tle = |x: &Vector, g: &Vector| pair.right_action.apply_unchecked(x, g);
    for a in 0..m {
        for i in 0..n {
            for j in 0..n {
                let (x, g, h) = (&vb[a], &gb[i], &gb[j]);
                let rhs = vector::sum(
                    n,
                    [
                        &pair.left.bracket(&tri(x, g), h),
                        &pair.left.bracket(g, &tri(x, h)),
                        &tri(&tle(x, g), h),
                        &vector::neg(&tri(&tle(x, h), g)),
                    ],
                );
                report.check("compat-bracket", &[a, i, j], tri(x, &pair.left.bracket(g, h)), rhs);
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for i in 0..n {
                let (x, y, g) = (&vb[a], &vb[b], &gb[i]);
                let br = |u: &Vector, v: &Vector| pair.right.bracket(u, v);
                let rhs = vector::sum(
                    m,
                    [&br(x, &tle(y, g)), &br(&tle(x, g), y), &tle(x, &tri(y, g)), &vector::neg(&tle(y, &tri(x, g)))],
                );
                report.check("compat-braces", &[a, b, i], tle(&br(x, y), g), rhs);
            }
        }
    }
    Ok(report)
}

/// Unified product of the induced datum (`f = 0`, `P₁ = 0`).
pub fn bicrossed_product(pair: &MatchedPair) -> Result<UnifiedProduct> {
    let report = check_matched_pair(pair)?;
    if !report.passed() {
        return Err(Error::InvalidInput(format!(
            "not a matched pair: fails {}",
            report.failed_conditions().join(", ")
        )));
    }
    unified_product(&pair.to_datum()?)
}

/// Splits `ambient = g ⊕ h` along two complementary Rota-Baxter subalgebras
/// and recovers the matched pair: for `x ∈ h`, `x ▷ g = p_g([x, g])` and
/// `x ◁ g = p_h([x, g])`. Coordinates of the factors are taken with respect
/// to the given bases.
pub fn factorize(ambient: &RBLieAlgebra, g_basis: &[Vector], h_basis: &[Vector]) -> Result<MatchedPair> {
    let split = Split::new(ambient.dim(), g_basis, h_basis)?;
    let (n, m) = (g_basis.len(), h_basis.len());
    let left = restrict(ambient, &split, 0..n, "first factor")?;
    let right = restrict(ambient, &split, n..n + m, "second factor")?;
    let mut right_action = Tensor3::zeros(m, m, n);
    let mut left_action = Tensor3::zeros(n, m, n);
    for a in 0..m {
        for i in 0..n {
            let (gc, vc) = split.coords(&ambient.bracket(&split.second(a), &split.first(i)));
            left_action.set_pair(a, i, &gc);
            right_action.set_pair(a, i, &vc);
        }
    }
    Ok(MatchedPair { left, right, right_action, left_action })
}

/// Restriction of the ambient structure to the span of the split-basis
/// vectors in `range`, which must be closed under bracket and operator.
pub(crate) fn restrict(
    ambient: &RBLieAlgebra,
    split: &Split,
    range: std::ops::Range<usize>,
    what: &str,
) -> Result<RBLieAlgebra> {
    let d = range.len();
    let coords_in_range = |y: &Vector, ctx: &str| -> Result<Vector> {
        let (a, b) = split.coords(y);
        let full: Vec<Rational> = a.into_iter().chain(b).collect();
        for (k, c) in full.iter().enumerate() {
            if !range.contains(&k) && !num_traits::Zero::is_zero(c) {
                return Err(Error::Closure(format!("{what}: {ctx} leaves the span")));
            }
        }
        Ok(full[range.clone()].to_vec())
    };
    let vecs: Vec<Vector> = range.clone().map(|k| split.basis.column(k)).collect();
    let mut bracket = Tensor3::zeros(d, d, d);
    for i in 0..d {
        for j in 0..d {
            let c = coords_in_range(&ambient.bracket(&vecs[i], &vecs[j]), &format!("bracket of basis vectors {} and {}", i + 1, j + 1))?;
            bracket.set_pair(i, j, &c);
        }
    }
    let columns = (0..d)
        .map(|i| coords_in_range(&ambient.op(&vecs[i]), &format!("operator image of basis vector {}", i + 1)))
        .collect::<Result<Vec<_>>>()?;
    let algebra = LieAlgebra::from_structure_constants_unchecked(bracket, None)?;
    RBLieAlgebra::new(algebra, ambient.weight.clone(), Matrix::from_columns(&columns, d)?)
}
