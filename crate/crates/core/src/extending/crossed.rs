use super::datum::require_valid_base;
use super::{unified_product, ExtendingDatum, UnifiedProduct};
use crate::algebra::RBLieAlgebra;
use crate::error::{shape_err, Error, Result};
use crate::exactla::{vector, Matrix, Tensor3, Vector};
use crate::report::{ConditionReport, ReportMode};

/// Two Rota-Baxter Lie algebras `(g, P)`, `(V, {-,-}, P₂)` with
/// `▷: V × g → g`, `f: V × V → g` and `P₁: V → g`; the right action is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedSystem {
    pub base: RBLieAlgebra,
    pub complement: RBLieAlgebra,
    pub left_action: Tensor3,
    pub cocycle: Tensor3,
    pub mixed_operator: Matrix,
}

impl CrossedSystem {
    pub fn direct_sum(base: RBLieAlgebra, complement: RBLieAlgebra) -> Self {
        let (n, m) = (base.dim(), complement.dim());
        Self {
            base,
            complement,
            left_action: Tensor3::zeros(n, m, n),
            cocycle: Tensor3::zeros(n, m, m),
            mixed_operator: Matrix::zeros(n, m),
        }
    }

    /// The extending datum with `◁ = 0`.
    pub fn to_datum(&self) -> Result<ExtendingDatum> {
        let (n, m) = (self.base.dim(), self.complement.dim());
        ExtendingDatum::new(
            self.base.clone(),
            m,
            Tensor3::zeros(m, m, n),
            self.left_action.clone(),
            self.cocycle.clone(),
            self.complement.algebra.structure_constants().clone(),
            self.mixed_operator.clone(),
            self.complement.operator.clone(),
        )
    }

    /// Reads a datum with zero right action as a crossed system.
    pub fn from_datum(datum: &ExtendingDatum) -> Result<Self> {
        if !datum.right_action.is_zero() {
            return Err(Error::InvalidInput("right action is not trivial".into()));
        }
        let algebra = crate::algebra::LieAlgebra::from_structure_constants_unchecked(
            datum.complement_bracket.clone(),
            None,
        )?;
        Ok(Self {
            base: datum.base.clone(),
            complement: RBLieAlgebra::new(algebra, datum.base.weight.clone(), datum.complement_operator.clone())?,
            left_action: datum.left_action.clone(),
            cocycle: datum.cocycle.clone(),
            mixed_operator: datum.mixed_operator.clone(),
        })
    }
}

/// The crossed-system conditions, with the same condition ids as
/// [`super::validate_datum`] (`b`, `d` and `i` are vacuous without a right
/// action and never fail).
pub fn check_crossed_system(system: &CrossedSystem) -> Result<ConditionReport> {
    check_crossed_system_with(system, ReportMode::default())
}

pub fn check_crossed_system_with(s: &CrossedSystem, mode: ReportMode) -> Result<ConditionReport> {
    let (n, m) = (s.base.dim(), s.complement.dim());
    if s.base.weight != s.complement.weight {
        return Err(Error::InvalidInput("the two algebras have different weights".into()));
    }
    if s.left_action.shape() != (n, m, n) || s.cocycle.shape() != (n, m, m) {
        return shape_err("crossed system tensors do not match the algebra dimensions");
    }
    if s.mixed_operator.rows() != n || s.mixed_operator.cols() != m {
        return shape_err("mixed operator does not match the algebra dimensions");
    }
    require_valid_base(&s.base, "base")?;
    require_valid_base(&s.complement, "complement")?;

    let lambda = &s.base.weight;
    let gb: Vec<Vector> = (0..n).map(|i| vector::unit(n, i)).collect();
    let vb: Vec<Vector> = (0..m).map(|a| vector::unit(m, a)).collect();
    let br = |g: &Vector, h: &Vector| s.base.bracket(g, h);
    let pg = |g: &Vector| s.base.op(g);
    let act = |x: &Vector, g: &Vector| s.left_action.apply_unchecked(x, g);
    let f = |x: &Vector, y: &Vector| s.cocycle.apply_unchecked(x, y);
    let braces = |x: &Vector, y: &Vector| s.complement.bracket(x, y);
    let p1 = |x: &Vector| s.mixed_operator.apply_unchecked(x);
    let p2 = |x: &Vector| s.complement.op(x);
    let mut r = ConditionReport::new(mode);

    for a in 0..m {
        for b in 0..m {
            let (x, y) = (&vb[a], &vb[b]);
            r.check(
                "a",
                &[a, b],
                vector::concat(&f(x, y), &braces(x, y)),
                vector::concat(&vector::neg(&f(y, x)), &vector::neg(&braces(y, x))),
            );
        }
    }
    // x ▷ [g, h] = [x ▷ g, h] + [g, x ▷ h]
    for a in 0..m {
        for i in 0..n {
            for j in 0..n {
                let (x, g, h) = (&vb[a], &gb[i], &gb[j]);
                let rhs = vector::add(&br(&act(x, g), h), &br(g, &act(x, h)));
                r.check("c", &[a, i, j], act(x, &br(g, h)), rhs);
            }
        }
    }
    // {x, y} ▷ g = x ▷ (y ▷ g) − y ▷ (x ▷ g) + [g, f(x, y)]
    for a in 0..m {
        for b in 0..m {
            for i in 0..n {
                let (x, y, g) = (&vb[a], &vb[b], &gb[i]);
                let rhs = vector::sum(
                    n,
                    [&act(x, &act(y, g)), &vector::neg(&act(y, &act(x, g))), &br(g, &f(x, y))],
                );
                r.check("e", &[a, b, i], act(&braces(x, y), g), rhs);
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let (x, y, z) = (&vb[a], &vb[b], &vb[c]);
                let cyclic = [(x, y, z), (y, z, x), (z, x, y)];
                let mut cocycle_id = vector::zeros(n);
                let mut jacobi = vector::zeros(m);
                for (p, q, t) in cyclic {
                    vector::add_assign(&mut cocycle_id, &f(p, &braces(q, t)));
                    vector::add_assign(&mut cocycle_id, &act(p, &f(q, t)));
                    vector::add_assign(&mut jacobi, &braces(p, &braces(q, t)));
                }
                r.check_zero("f", &[a, b, c], cocycle_id);
                r.check_zero("g", &[a, b, c], jacobi);
            }
        }
    }
    for i in 0..n {
        for b in 0..m {
            let (g, y) = (&gb[i], &vb[b]);
            let pgv = pg(g);
            let p2y = p2(y);
            let expr = vector::sum(
                n,
                [
                    &br(&pgv, &p1(y)),
                    &vector::neg(&act(&p2y, &pgv)),
                    &pg(&act(y, &pgv)),
                    &vector::neg(&pg(&br(g, &p1(y)))),
                    &pg(&act(&p2y, g)),
                    &vector::scale(lambda, &pg(&act(y, g))),
                ],
            );
            r.check_zero("h", &[i, b], expr);
        }
    }
    for a in 0..m {
        for b in 0..m {
            let (x, y) = (&vb[a], &vb[b]);
            let (p1x, p2x, p1y, p2y) = (p1(x), p2(x), p1(y), p2(y));
            let expr = vector::sum(
                n,
                [
                    &br(&p1x, &p1y),
                    &act(&p2x, &p1y),
                    &vector::neg(&act(&p2y, &p1x)),
                    &f(&p2x, &p2y),
                    &pg(&act(y, &p1x)),
                    &vector::neg(&pg(&f(&p2x, y))),
                    &vector::neg(&p1(&braces(&p2x, y))),
                    &vector::neg(&pg(&act(x, &p1y))),
                    &vector::neg(&pg(&f(x, &p2y))),
                    &vector::neg(&p1(&braces(x, &p2y))),
                    &vector::neg(&vector::scale(lambda, &pg(&f(x, y)))),
                    &vector::neg(&vector::scale(lambda, &p1(&braces(x, y)))),
                ],
            );
            r.check_zero("j", &[a, b], expr);
            let expr = vector::sum(
                m,
                [
                    &braces(&p2x, &p2y),
                    &vector::neg(&p2(&braces(&p2x, y))),
                    &vector::neg(&p2(&braces(x, &p2y))),
                    &vector::neg(&vector::scale(lambda, &p2(&braces(x, y)))),
                ],
            );
            r.check_zero("k", &[a, b], expr);
        }
    }
    Ok(r.sorted_by_condition())
}

/// Unified product of the crossed system; `g` is an ideal of the result.
pub fn crossed_product(system: &CrossedSystem) -> Result<UnifiedProduct> {
    let report = check_crossed_system(system)?;
    if !report.passed() {
        return Err(Error::InvalidInput(format!(
            "crossed system fails condition(s) {}",
            report.failed_conditions().join(", ")
        )));
    }
    unified_product(&system.to_datum()?)
}
