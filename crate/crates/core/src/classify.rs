//! Decomposition of an ambient Rota-Baxter Lie algebra along a subalgebra into
//! an extending datum, the `(r, v)` morphism calculus between unified
//! products, and the equivalence / cohomologous transformations of data.

use crate::algebra::RBLieAlgebra;
use crate::error::{shape_err, Error, Result};
use crate::exactla::{solve_affine, vector, Matrix, Tensor3, Vector};
use crate::extending::{restrict, ExtendingDatum};
use crate::report::{ConditionReport, ReportMode};
use crate::split::Split;

/// An ambient algebra `E`, a basis of a subalgebra `g`, a basis of a
/// complement `V`, and the retraction `p: E → g` with kernel `V`
/// (`projection` is `n × dim E`, returning coordinates in `sub_basis`).
#[derive(Debug, Clone)]
pub struct DecompositionContext {
    ambient: RBLieAlgebra,
    sub_basis: Vec<Vector>,
    complement_basis: Vec<Vector>,
    projection: Matrix,
    sub_labels: Option<Vec<String>>,
    split: Split,
}

impl DecompositionContext {
    /// Uses the projection killing `complement_basis`.
    pub fn new(ambient: RBLieAlgebra, sub_basis: Vec<Vector>, complement_basis: Vec<Vector>) -> Result<Self> {
        let split = Split::new(ambient.dim(), &sub_basis, &complement_basis)?;
        let n = sub_basis.len();
        let projection = split.inverse.slice(0..n, 0..ambient.dim());
        Ok(Self { ambient, sub_basis, complement_basis, projection, sub_labels: None, split })
    }

    /// `g` spanned by the standard basis vectors at `sub_indices` (0-based),
    /// `V` by the remaining ones in increasing order. Labels are inherited.
    pub fn coordinate(ambient: RBLieAlgebra, sub_indices: &[usize]) -> Result<Self> {
        let dim = ambient.dim();
        if let Some(&bad) = sub_indices.iter().find(|&&i| i >= dim) {
            return Err(Error::Decomposition(format!("index {bad} out of range for dimension {dim}")));
        }
        let mut seen = vec![false; dim];
        for &i in sub_indices {
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Decomposition(format!("index {i} listed twice")));
            }
        }
        let sub: Vec<Vector> = sub_indices.iter().map(|&i| vector::unit(dim, i)).collect();
        let comp: Vec<Vector> = (0..dim).filter(|i| !seen[*i]).map(|i| vector::unit(dim, i)).collect();
        let labels = ambient
            .algebra
            .labels()
            .map(|l| sub_indices.iter().map(|&i| l[i].clone()).collect());
        let mut ctx = Self::new(ambient, sub, comp)?;
        ctx.sub_labels = labels;
        Ok(ctx)
    }

    /// `g` = first `n` coordinates, `V` = the rest.
    pub fn canonical(ambient: RBLieAlgebra, n: usize) -> Result<Self> {
        let indices: Vec<usize> = (0..n).collect();
        Self::coordinate(ambient, &indices)
    }

    /// Uses a caller-supplied retraction; `V` is taken as its kernel.
    pub fn with_projection(ambient: RBLieAlgebra, sub_basis: Vec<Vector>, projection: Matrix) -> Result<Self> {
        let (n, dim) = (sub_basis.len(), ambient.dim());
        if projection.rows() != n || projection.cols() != dim {
            return shape_err(format!("projection must be {n}x{dim}"));
        }
        for (i, s) in sub_basis.iter().enumerate() {
            if projection.apply(s)? != vector::unit(n, i) {
                return Err(Error::InvalidProjection(format!("p does not fix sub-basis vector {}", i + 1)));
            }
        }
        let kernel = solve_affine(&projection, &vector::zeros(n))?.nullspace_basis;
        let mut ctx = Self::new(ambient, sub_basis, kernel)?;
        ctx.projection = projection;
        Ok(ctx)
    }

    pub fn ambient(&self) -> &RBLieAlgebra {
        &self.ambient
    }

    pub fn sub_basis(&self) -> &[Vector] {
        &self.sub_basis
    }

    pub fn complement_basis(&self) -> &[Vector] {
        &self.complement_basis
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// Coordinates of `y` along `V` (the canonical projection `π: E → V`).
    pub fn complement_coords(&self, y: &[crate::Rational]) -> Vector {
        self.split.coords(y).1
    }

    /// Basis-change matrix `φ(g, x) = g + x` from `g × V` to `E`.
    pub fn recombination(&self) -> &Matrix {
        &self.split.basis
    }

    /// The subalgebra `(g, P_E|g)`; errors if `g` is not closed under the
    /// bracket and the operator.
    pub fn subalgebra(&self) -> Result<RBLieAlgebra> {
        let mut sub = restrict(&self.ambient, &self.split, 0..self.sub_basis.len(), "subalgebra")?;
        if let Some(labels) = &self.sub_labels {
            sub.algebra = sub.algebra.with_labels(Some(labels.clone()))?;
        }
        Ok(sub)
    }
}

/// The extending datum of `E` relative to `g` and `p`:
/// `x▷g = p[x,g]`, `x◁g = [x,g] − p[x,g]`, `f(x,y) = p[x,y]`,
/// `{x,y} = [x,y] − p[x,y]`, `P₁ = p∘P_E`, `P₂ = P_E − p∘P_E` on `V`.
pub fn decompose(ctx: &DecompositionContext) -> Result<ExtendingDatum> {
    let base = ctx.subalgebra()?;
    let (n, m) = (ctx.sub_basis.len(), ctx.complement_basis.len());
    let e = &ctx.ambient;
    let split = &ctx.split;
    let mut right_action = Tensor3::zeros(m, m, n);
    let mut left_action = Tensor3::zeros(n, m, n);
    let mut cocycle = Tensor3::zeros(n, m, m);
    let mut braces = Tensor3::zeros(m, m, m);
    for a in 0..m {
        let x = split.second(a);
        for i in 0..n {
            let (gc, vc) = split.coords(&e.bracket(&x, &split.first(i)));
            left_action.set_pair(a, i, &gc);
            right_action.set_pair(a, i, &vc);
        }
        for b in 0..m {
            let (gc, vc) = split.coords(&e.bracket(&x, &split.second(b)));
            cocycle.set_pair(a, b, &gc);
            braces.set_pair(a, b, &vc);
        }
    }
    let (p1_cols, p2_cols): (Vec<Vector>, Vec<Vector>) =
        (0..m).map(|a| split.coords(&e.op(&split.second(a)))).unzip();
    ExtendingDatum::new(
        base,
        m,
        right_action,
        left_action,
        cocycle,
        braces,
        Matrix::from_columns(&p1_cols, n)?,
        Matrix::from_columns(&p2_cols, m)?,
    )
}

fn require_commutes(phi: &Matrix, from: &DecompositionContext, to: &DecompositionContext) -> Result<()> {
    let (src, dst) = (from.ambient.dim(), to.ambient.dim());
    if phi.rows() != dst || phi.cols() != src {
        return shape_err(format!("map must be {dst}x{src}"));
    }
    if from.sub_basis.len() != to.sub_basis.len() {
        return Err(Error::InvalidInput("the two subalgebras have different dimensions".into()));
    }
    if phi.mul(&from.ambient.operator)? != to.ambient.operator.mul(phi)? {
        return Err(Error::InvalidInput("map does not intertwine the ambient operators".into()));
    }
    Ok(())
}

/// `φ ∘ i = i`: the endomorphism `φ` fixes every vector of the subalgebra
/// basis.
pub fn check_stabilizes(phi: &Matrix, ctx: &DecompositionContext) -> Result<bool> {
    check_stabilizes_between(phi, ctx, ctx)
}

/// `π ∘ φ = π` for the projection `π: E → V` along `g`.
pub fn check_costabilizes(phi: &Matrix, ctx: &DecompositionContext) -> Result<bool> {
    check_costabilizes_between(phi, ctx, ctx)
}

/// `φ ∘ i = i'` for a map `φ: E → E'` between two extensions of the same
/// subalgebra; `φ` must satisfy `φ ∘ P_E = P_E' ∘ φ`.
pub fn check_stabilizes_between(phi: &Matrix, from: &DecompositionContext, to: &DecompositionContext) -> Result<bool> {
    require_commutes(phi, from, to)?;
    Ok(from.sub_basis.iter().zip(&to.sub_basis).all(|(s, t)| phi.apply_unchecked(s) == *t))
}

/// `π' ∘ φ = π` for a map `φ: E → E'` between two extensions of the same
/// subalgebra by spaces of equal dimension.
pub fn check_costabilizes_between(phi: &Matrix, from: &DecompositionContext, to: &DecompositionContext) -> Result<bool> {
    require_commutes(phi, from, to)?;
    let dim = from.ambient.dim();
    Ok((0..dim).all(|i| {
        let e = vector::unit(dim, i);
        to.complement_coords(&phi.apply_unchecked(&e)) == from.complement_coords(&e)
    }))
}

/// A pair `(r: V → g, v: V → V)`, defining `ψ(g, x) = (g + r(x), v(x))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceWitness {
    /// `r`, an `n × m` matrix.
    pub shift: Matrix,
    /// `v`, an `m × m` matrix.
    pub automorphism: Matrix,
}

impl EquivalenceWitness {
    pub fn new(shift: Matrix, automorphism: Matrix) -> Result<Self> {
        if !automorphism.is_square() || shift.cols() != automorphism.rows() {
            return shape_err("witness maps have inconsistent shapes");
        }
        Ok(Self { shift, automorphism })
    }

    pub fn identity(n: usize, m: usize) -> Self {
        Self { shift: Matrix::zeros(n, m), automorphism: Matrix::identity(m) }
    }

    /// Cohomologous witness `(r, id)`.
    pub fn shift_only(shift: Matrix) -> Self {
        let m = shift.cols();
        Self { shift, automorphism: Matrix::identity(m) }
    }

    /// The witness of `ψ(then) ∘ ψ(self)`: `(r₁ + r₂ v₁, v₂ v₁)`.
    pub fn then(&self, then: &EquivalenceWitness) -> Result<EquivalenceWitness> {
        let shift = self.shift.add(&then.shift.mul(&self.automorphism)?)?;
        Ok(Self { shift, automorphism: then.automorphism.mul(&self.automorphism)? })
    }

    /// `(−r v⁻¹, v⁻¹)`, the witness of `ψ⁻¹`.
    pub fn inverse(&self) -> Result<EquivalenceWitness> {
        let inv = self
            .automorphism
            .inverse()
            .ok_or_else(|| Error::InvalidWitness("v is not invertible".into()))?;
        let shift = self.shift.mul(&inv)?.scale(&crate::exactla::int(-1));
        Ok(Self { shift, automorphism: inv })
    }

    fn check_shapes(&self, datum: &ExtendingDatum) -> Result<()> {
        let (n, m) = (datum.base_dim(), datum.complement_dim);
        if self.shift.rows() != n || self.shift.cols() != m || self.automorphism.rows() != m || self.automorphism.cols() != m {
            return shape_err(format!("witness must be ({n}x{m}, {m}x{m})"));
        }
        Ok(())
    }
}

/// The block matrix `[[I, r], [0, v]]` of `ψ(g, x) = (g + r(x), v(x))`.
pub fn psi_from_witness(datum: &ExtendingDatum, w: &EquivalenceWitness) -> Result<Matrix> {
    w.check_shapes(datum)?;
    let n = datum.base_dim();
    Matrix::block(&Matrix::identity(n), &w.shift, &Matrix::zeros(w.automorphism.rows(), n), &w.automorphism)
}

/// The six conditions `L1`–`L6` under which `ψ_(r,v)` is a Rota-Baxter Lie
/// morphism from the unified product of `from` to that of `to`:
///
/// * `L1`: `v(x) ◁' g = v(x ◁ g)`
/// * `L2`: `r(x ◁ g) = [r(x), g] − x ▷ g + v(x) ▷' g`
/// * `L3`: `v{x,y} = {v(x),v(y)}' + v(x) ◁' r(y) − v(y) ◁' r(x)`
/// * `L4`: `r{x,y} = [r(x),r(y)] + v(x) ▷' r(y) − v(y) ▷' r(x) + f'(v(x),v(y)) − f(x,y)`
/// * `L5`: `P₁(x) = P(r(x)) + P₁'(v(x)) − r(P₂(x))`
/// * `L6`: `v(P₂(x)) = P₂'(v(x))`
pub fn check_witness_conditions(
    from: &ExtendingDatum,
    to: &ExtendingDatum,
    w: &EquivalenceWitness,
) -> Result<ConditionReport> {
    check_witness_conditions_with(from, to, w, ReportMode::default())
}

pub fn check_witness_conditions_with(
    from: &ExtendingDatum,
    to: &ExtendingDatum,
    w: &EquivalenceWitness,
    mode: ReportMode,
) -> Result<ConditionReport> {
    from.check_shapes()?;
    to.check_shapes()?;
    if from.base != to.base || from.complement_dim != to.complement_dim {
        return Err(Error::InvalidInput("the two data do not share base and complement".into()));
    }
    w.check_shapes(from)?;
    let (n, m) = (from.base_dim(), from.complement_dim);
    let base = &from.base;
    let r = |x: &Vector| w.shift.apply_unchecked(x);
    let v = |x: &Vector| w.automorphism.apply_unchecked(x);
    let gb: Vec<Vector> = (0..n).map(|i| vector::unit(n, i)).collect();
    let vb: Vec<Vector> = (0..m).map(|a| vector::unit(m, a)).collect();
    let mut rep = ConditionReport::new(mode);
    for a in 0..m {
        let x = &vb[a];
        for i in 0..n {
            let g = &gb[i];
            rep.check("L1", &[a, i], to.right_act(&v(x), g), v(&from.right_act(x, g)));
            let rhs = vector::sum(
                n,
                [&base.bracket(&r(x), g), &vector::neg(&from.left_act(x, g)), &to.left_act(&v(x), g)],
            );
            rep.check("L2", &[a, i], r(&from.right_act(x, g)), rhs);
        }
    }
    for a in 0..m {
        for b in 0..m {
            let (x, y) = (&vb[a], &vb[b]);
            let (rx, ry, vx, vy) = (r(x), r(y), v(x), v(y));
            let rhs = vector::sum(
                m,
                [&to.braces(&vx, &vy), &to.right_act(&vx, &ry), &vector::neg(&to.right_act(&vy, &rx))],
            );
            rep.check("L3", &[a, b], v(&from.braces(x, y)), rhs);
            let rhs = vector::sum(
                n,
                [
                    &base.bracket(&rx, &ry),
                    &to.left_act(&vx, &ry),
                    &vector::neg(&to.left_act(&vy, &rx)),
                    &to.cocycle_at(&vx, &vy),
                    &vector::neg(&from.cocycle_at(x, y)),
                ],
            );
            rep.check("L4", &[a, b], r(&from.braces(x, y)), rhs);
        }
    }
    for a in 0..m {
        let x = &vb[a];
        let rhs = vector::sum(
            n,
            [&base.op(&r(x)), &to.p1(&v(x)), &vector::neg(&r(&from.p2(x)))],
        );
        rep.check("L5", &[a], from.p1(x), rhs);
        rep.check("L6", &[a], v(&from.p2(x)), to.p2(&v(x)));
    }
    Ok(rep.sorted_by_condition())
}

/// The datum `Ω'` for which `ψ_(r,v)` is an isomorphism from the unified
/// product of `Ω` to that of `Ω'`. Writing `u = v⁻¹(x)`, `w = v⁻¹(y)`:
///
/// * `x ◁' g = v(u ◁ g)`
/// * `x ▷' g = r(u ◁ g) + u ▷ g + [g, r(u)]`
/// * `f'(x,y) = f(u,w) + r{u,w} + [r(u),r(w)] − r(u ◁ r(w)) − u ▷ r(w) + r(w ◁ r(u)) + w ▷ r(u)`
/// * `{x,y}' = v({u,w} − u ◁ r(w) + w ◁ r(u))`
/// * `P₁'(x) = P₁(u) − P(r(u)) + r(P₂(u))`
/// * `P₂'(x) = v(P₂(u))`
pub fn transform_datum(datum: &ExtendingDatum, w: &EquivalenceWitness) -> Result<ExtendingDatum> {
    datum.check_shapes()?;
    w.check_shapes(datum)?;
    let vinv = w
        .automorphism
        .inverse()
        .ok_or_else(|| Error::InvalidWitness("v is not invertible".into()))?;
    let (n, m) = (datum.base_dim(), datum.complement_dim);
    let d = datum;
    let r = |x: &Vector| w.shift.apply_unchecked(x);
    let v = |x: &Vector| w.automorphism.apply_unchecked(x);
    let pre: Vec<Vector> = (0..m).map(|a| vinv.column(a)).collect();
    let gb: Vec<Vector> = (0..n).map(|i| vector::unit(n, i)).collect();

    let mut out = ExtendingDatum::trivial(d.base.clone(), m);
    for a in 0..m {
        let u = &pre[a];
        let ru = r(u);
        for i in 0..n {
            let g = &gb[i];
            let ug = d.right_act(u, g);
            out.right_action.set_pair(a, i, &v(&ug));
            let shifted = vector::sum(n, [&r(&ug), &d.left_act(u, g), &d.base.bracket(g, &ru)]);
            out.left_action.set_pair(a, i, &shifted);
        }
        for b in 0..m {
            let wv = &pre[b];
            let rw = r(wv);
            let f = vector::sum(
                n,
                [
                    &d.cocycle_at(u, wv),
                    &r(&d.braces(u, wv)),
                    &d.base.bracket(&ru, &rw),
                    &vector::neg(&r(&d.right_act(u, &rw))),
                    &vector::neg(&d.left_act(u, &rw)),
                    &r(&d.right_act(wv, &ru)),
                    &d.left_act(wv, &ru),
                ],
            );
            out.cocycle.set_pair(a, b, &f);
            let inner = vector::sum(
                m,
                [&d.braces(u, wv), &vector::neg(&d.right_act(u, &rw)), &d.right_act(wv, &ru)],
            );
            out.complement_bracket.set_pair(a, b, &v(&inner));
        }
        let p1 = vector::sum(n, [&d.p1(u), &vector::neg(&d.base.op(&ru)), &r(&d.p2(u))]);
        let p2 = v(&d.p2(u));
        for k in 0..n {
            out.mixed_operator[(k, a)] = p1[k].clone();
        }
        for k in 0..m {
            out.complement_operator[(k, a)] = p2[k].clone();
        }
    }
    Ok(out)
}

/// Cohomologous datum for a shift `r: V → g` (the case `v = id`): `◁` and
/// `P₂` unchanged and
///
/// * `x ▷' g = x ▷ g + r(x ◁ g) − [r(x), g]`
/// * `f'(x,y) = f(x,y) + r{x,y} + [r(x),r(y)] + y ▷ r(x) − x ▷ r(y) + r(y ◁ r(x)) − r(x ◁ r(y))`
/// * `{x,y}' = {x,y} − x ◁ r(y) + y ◁ r(x)`
/// * `P₁'(x) = P₁(x) − P(r(x)) + r(P₂(x))`
pub fn cohomologous_transform(datum: &ExtendingDatum, shift: &Matrix) -> Result<ExtendingDatum> {
    datum.check_shapes()?;
    let (n, m) = (datum.base_dim(), datum.complement_dim);
    if shift.rows() != n || shift.cols() != m {
        return shape_err(format!("shift must be {n}x{m}"));
    }
    let d = datum;
    let r = |x: &Vector| shift.apply_unchecked(x);
    let gb: Vec<Vector> = (0..n).map(|i| vector::unit(n, i)).collect();
    let vb: Vec<Vector> = (0..m).map(|a| vector::unit(m, a)).collect();
    let mut out = d.clone();
    for a in 0..m {
        let x = &vb[a];
        let rx = r(x);
        for i in 0..n {
            let g = &gb[i];
            let val = vector::sum(
                n,
                [&d.left_act(x, g), &r(&d.right_act(x, g)), &vector::neg(&d.base.bracket(&rx, g))],
            );
            out.left_action.set_pair(a, i, &val);
        }
        for b in 0..m {
            let y = &vb[b];
            let ry = r(y);
            let f = vector::sum(
                n,
                [
                    &d.cocycle_at(x, y),
                    &r(&d.braces(x, y)),
                    &d.base.bracket(&rx, &ry),
                    &d.left_act(y, &rx),
                    &vector::neg(&d.left_act(x, &ry)),
                    &r(&d.right_act(y, &rx)),
                    &vector::neg(&r(&d.right_act(x, &ry))),
                ],
            );
            out.cocycle.set_pair(a, b, &f);
            let br = vector::sum(m, [&d.braces(x, y), &vector::neg(&d.right_act(x, &ry)), &d.right_act(y, &rx)]);
            out.complement_bracket.set_pair(a, b, &br);
        }
        let p1 = vector::sum(n, [&d.p1(x), &vector::neg(&d.base.op(&rx)), &r(&d.p2(x))]);
        for k in 0..n {
            out.mixed_operator[(k, a)] = p1[k].clone();
        }
    }
    Ok(out)
}

/// True iff `v` is invertible and the conditions `L1`–`L6` hold.
pub fn is_equivalence(from: &ExtendingDatum, to: &ExtendingDatum, w: &EquivalenceWitness) -> Result<bool> {
    if w.automorphism.inverse().is_none() {
        return Ok(false);
    }
    Ok(check_witness_conditions(from, to, w)?.passed())
}
