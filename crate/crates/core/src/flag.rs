//! Codimension-one extensions: twisted and extended derivations, their
//! correspondence with extending data on a line, the equivalence decision
//! between them, and iterated flag chains.

use num_traits::{One, Zero};

use crate::algebra::{check_rb, check_rb_morphism, LieAlgebra, RBLieAlgebra};
use crate::classify::EquivalenceWitness;
use crate::error::{shape_err, Error, Result};
use crate::exactla::{solve_affine, vector, Matrix, Rational, Tensor3, Vector};
use crate::extending::{require_valid_base, unified_product, ExtendingDatum};
use crate::report::{ConditionReport, ReportMode};

/// A quadruple `(ε, D, g₀, k₀)` over a Rota-Baxter Lie algebra `(g, P, λ)`.
///
/// It describes the extension of `g` by a line `k·x` with `x ◁ g = ε(g) x`,
/// `x ▷ g = D(g)`, `P̃(x) = g₀ + k₀ x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedDerivation {
    pub base: RBLieAlgebra,
    /// `ε`, a linear form on `g` given by its values on the basis.
    pub character: Vector,
    /// `D: g → g`.
    pub derivation: Matrix,
    /// `g₀`, the `g`-part of the operator on the new direction.
    pub anchor: Vector,
    /// `k₀`, the line part of the operator on the new direction.
    pub operator_scalar: Rational,
}

impl ExtendedDerivation {
    pub fn new(
        base: RBLieAlgebra,
        character: Vector,
        derivation: Matrix,
        anchor: Vector,
        operator_scalar: Rational,
    ) -> Result<Self> {
        let x = Self { base, character, derivation, anchor, operator_scalar };
        x.check_shapes()?;
        Ok(x)
    }

    pub fn zero(base: RBLieAlgebra) -> Self {
        let n = base.dim();
        Self {
            base,
            character: vector::zeros(n),
            derivation: Matrix::zeros(n, n),
            anchor: vector::zeros(n),
            operator_scalar: Rational::zero(),
        }
    }

    pub fn check_shapes(&self) -> Result<()> {
        let n = self.base.dim();
        if self.character.len() != n {
            return shape_err(format!("character has length {}, expected {n}", self.character.len()));
        }
        if self.derivation.rows() != n || self.derivation.cols() != n {
            return shape_err(format!("derivation must be {n}x{n}"));
        }
        if self.anchor.len() != n {
            return shape_err(format!("anchor has length {}, expected {n}", self.anchor.len()));
        }
        Ok(())
    }

    /// `ε(g)`.
    pub fn eval_character(&self, g: &[Rational]) -> Rational {
        vector::dot(&self.character, g)
    }
}

/// Checks `ε([g,h]) = 0` (id `character`) and
/// `D[g,h] = [Dg,h] + [g,Dh] + ε(g)Dh − ε(h)Dg` (id `twisted-leibniz`) on
/// basis pairs.
pub fn check_twisted_derivation(lie: &LieAlgebra, character: &[Rational], derivation: &Matrix) -> Result<ConditionReport> {
    check_twisted_derivation_with(lie, character, derivation, ReportMode::default())
}

pub fn check_twisted_derivation_with(
    lie: &LieAlgebra,
    character: &[Rational],
    derivation: &Matrix,
    mode: ReportMode,
) -> Result<ConditionReport> {
    let n = lie.dim();
    if character.len() != n || derivation.rows() != n || derivation.cols() != n {
        return shape_err(format!("character and derivation must act on a {n}-dimensional algebra"));
    }
    let mut rep = ConditionReport::new(mode);
    let d = |v: &Vector| derivation.apply_unchecked(v);
    for i in 0..n {
        for j in 0..n {
            let gh = lie.basis_bracket(i, j);
            rep.check_scalar("character", &[i, j], vector::dot(character, &gh), Rational::zero());
        }
    }
    for i in 0..n {
        for j in 0..n {
            let (g, h) = (vector::unit(n, i), vector::unit(n, j));
            let (dg, dh) = (derivation.column(i), derivation.column(j));
            let rhs = vector::sum(
                n,
                [
                    &lie.bracket(&dg, &h),
                    &lie.bracket(&g, &dh),
                    &vector::scale(&character[i], &dh),
                    &vector::neg(&vector::scale(&character[j], &dg)),
                ],
            );
            rep.check("twisted-leibniz", &[i, j], d(&lie.basis_bracket(i, j)), rhs);
        }
    }
    Ok(rep)
}

/// Checks that `X` is an extended derivation: the twisted-derivation
/// conditions, then for every basis vector `g` (id `operator-identity`)
///
/// `[Pg, g₀] − k₀D(Pg) + P(D(Pg)) + ε(Pg)g₀ − P([g, g₀]) + k₀P(Dg) + k₀ε(g)g₀ + λP(Dg) + λε(g)g₀ = 0`
///
/// and (id `scalar`) `(k₀² + λk₀)·ε(g) = 0`.
pub fn check_extended_derivation(x: &ExtendedDerivation) -> Result<ConditionReport> {
    check_extended_derivation_with(x, ReportMode::default())
}

pub fn check_extended_derivation_with(x: &ExtendedDerivation, mode: ReportMode) -> Result<ConditionReport> {
    x.check_shapes()?;
    require_valid_base(&x.base, "base")?;
    let b = &x.base;
    let n = b.dim();
    let lambda = &b.weight;
    let k0 = &x.operator_scalar;
    let g0 = &x.anchor;
    let d = |v: &Vector| x.derivation.apply_unchecked(v);
    let mut rep = check_twisted_derivation_with(&b.algebra, &x.character, &x.derivation, mode)?;
    for i in 0..n {
        let g = vector::unit(n, i);
        let pg = b.op(&g);
        let dpg = d(&pg);
        let dg = d(&g);
        let eps_pg = x.eval_character(&pg);
        let eps_g = &x.character[i];
        let expr = vector::sum(
            n,
            [
                &b.bracket(&pg, g0),
                &vector::neg(&vector::scale(k0, &dpg)),
                &b.op(&dpg),
                &vector::scale(&eps_pg, g0),
                &vector::neg(&b.op(&b.bracket(&g, g0))),
                &vector::scale(k0, &b.op(&dg)),
                &vector::scale(&(k0 * eps_g), g0),
                &vector::scale(lambda, &b.op(&dg)),
                &vector::scale(&(lambda * eps_g), g0),
            ],
        );
        rep.check_zero("operator-identity", &[i], expr);
    }
    let factor = k0 * k0 + lambda * k0;
    for i in 0..n {
        rep.check_scalar("scalar", &[i], &factor * &x.character[i], Rational::zero());
    }
    Ok(rep)
}

/// The extending datum on a line `V = k·x` with `x ◁ g = ε(g)x`,
/// `x ▷ g = D(g)`, `f = 0`, `{-,-} = 0`, `P₁(x) = g₀`, `P₂(x) = k₀x`.
pub fn datum_from_exder(x: &ExtendedDerivation) -> Result<ExtendingDatum> {
    x.check_shapes()?;
    let n = x.base.dim();
    let mut right_action = Tensor3::zeros(1, 1, n);
    let mut left_action = Tensor3::zeros(n, 1, n);
    for i in 0..n {
        right_action.set(0, 0, i, x.character[i].clone());
        left_action.set_pair(0, i, &x.derivation.column(i));
    }
    ExtendingDatum::new(
        x.base.clone(),
        1,
        right_action,
        left_action,
        Tensor3::zeros(n, 1, 1),
        Tensor3::zeros(1, 1, 1),
        Matrix::from_columns(&[x.anchor.clone()], n)?,
        Matrix::scalar(1, &x.operator_scalar),
    )
}

/// Inverse of [`datum_from_exder`]; the datum must live on a line and have
/// zero `f` and `{-,-}`.
pub fn exder_from_datum(datum: &ExtendingDatum) -> Result<ExtendedDerivation> {
    datum.check_shapes()?;
    if datum.complement_dim != 1 {
        return Err(Error::InvalidInput(format!(
            "complement has dimension {}, expected 1",
            datum.complement_dim
        )));
    }
    if !datum.cocycle.is_zero() || !datum.complement_bracket.is_zero() {
        return Err(Error::InvalidInput("cocycle and complement bracket must vanish on a line".into()));
    }
    let n = datum.base_dim();
    let character = (0..n).map(|i| datum.right_action.get(0, 0, i).clone()).collect();
    let columns: Vec<Vector> = (0..n).map(|i| datum.left_action.pair(0, i)).collect();
    ExtendedDerivation::new(
        datum.base.clone(),
        character,
        Matrix::from_columns(&columns, n)?,
        datum.mixed_operator.column(0),
        datum.complement_operator[(0, 0)].clone(),
    )
}

/// `(g₁, k₁)` with `k₁ ≠ 0` relating two extended derivations; it induces
/// the isomorphism `(g, x) ↦ (g + g₁, k₁x)` of the line extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExderWitness {
    pub shift: Vector,
    pub scale: Rational,
}

impl ExderWitness {
    pub fn to_equivalence_witness(&self) -> EquivalenceWitness {
        let n = self.shift.len();
        EquivalenceWitness {
            shift: Matrix::from_columns(&[self.shift.clone()], n).expect("column has length n"),
            automorphism: Matrix::scalar(1, &self.scale),
        }
    }
}

/// Whether `w` relates `x` to `y`: `k₁ ≠ 0`, `ε = ε'`, `k₀ = k₀'` and
///
/// * `D(g) = k₁D'(g) + [g₁, g] − ε(g)g₁` for every basis vector `g`,
/// * `g₀ = P(g₁) + k₁g₀' − k₀g₁`.
pub fn verify_exder_witness(x: &ExtendedDerivation, y: &ExtendedDerivation, w: &ExderWitness) -> bool {
    let n = x.base.dim();
    if w.scale.is_zero() || w.shift.len() != n || x.character != y.character || x.operator_scalar != y.operator_scalar {
        return false;
    }
    let g1 = &w.shift;
    let derivations_match = (0..n).all(|i| {
        let g = vector::unit(n, i);
        let rhs = vector::sum(
            n,
            [
                &vector::scale(&w.scale, &y.derivation.column(i)),
                &x.base.bracket(g1, &g),
                &vector::neg(&vector::scale(&x.character[i], g1)),
            ],
        );
        x.derivation.column(i) == rhs
    });
    let rhs = vector::sum(
        n,
        [&x.base.op(g1), &vector::scale(&w.scale, &y.anchor), &vector::neg(&vector::scale(&x.operator_scalar, g1))],
    );
    derivations_match && x.anchor == rhs
}

/// Decides whether `x` and `y` are equivalent. The two defining equations
/// are linear in `(g₁, k₁)`; the solution set is computed exactly and a
/// point with `k₁ ≠ 0` is returned if one exists (`k₁ = 1` when possible).
pub fn decide_exder_equiv(x: &ExtendedDerivation, y: &ExtendedDerivation) -> Result<Option<ExderWitness>> {
    x.check_shapes()?;
    y.check_shapes()?;
    if x.base != y.base {
        return Err(Error::InvalidInput("the two quadruples have different bases".into()));
    }
    if x.character != y.character || x.operator_scalar != y.operator_scalar {
        return Ok(None);
    }
    let n = x.base.dim();
    let lie = &x.base.algebra;
    // Unknowns (g₁ coordinates, k₁); rows: n·n derivation equations, then n anchor equations.
    let mut a = Matrix::zeros(n * n + n, n + 1);
    let mut b = vector::zeros(n * n + n);
    for i in 0..n {
        for k in 0..n {
            let row = i * n + k;
            for j in 0..n {
                let mut c = lie.structure_constants().get(k, j, i).clone();
                if j == k {
                    c -= &x.character[i];
                }
                a[(row, j)] = c;
            }
            a[(row, n)] = y.derivation[(k, i)].clone();
            b[row] = x.derivation[(k, i)].clone();
        }
    }
    for k in 0..n {
        let row = n * n + k;
        for j in 0..n {
            let mut c = x.base.operator[(k, j)].clone();
            if j == k {
                c -= &x.operator_scalar;
            }
            a[(row, j)] = c;
        }
        a[(row, n)] = y.anchor[k].clone();
        b[row] = x.anchor[k].clone();
    }
    let solutions = solve_affine(&a, &b)?;
    let Some(mut point) = solutions.particular else {
        return Ok(None);
    };
    if point[n] != Rational::one() {
        if let Some(dir) = solutions.nullspace_basis.iter().find(|v| !v[n].is_zero()) {
            let t = (Rational::one() - &point[n]) / &dir[n];
            vector::add_assign(&mut point, &vector::scale(&t, dir));
        } else if point[n].is_zero() {
            return Ok(None);
        }
    }
    let scale = point.pop().expect("k1 coordinate");
    let witness = ExderWitness { shift: point, scale };
    if !verify_exder_witness(x, y, &witness) {
        return Err(Error::InvalidWitness("computed equivalence witness failed verification".into()));
    }
    Ok(Some(witness))
}

/// The `(dim g + 1)`-dimensional Rota-Baxter Lie algebra obtained by
/// extending the base of `x` along `x`.
pub fn flag_extend(x: &ExtendedDerivation) -> Result<RBLieAlgebra> {
    let report = check_extended_derivation(x)?;
    if !report.passed() {
        return Err(Error::InvalidInput(format!(
            "not an extended derivation: failed {}",
            report.failed_conditions().join(", ")
        )));
    }
    Ok(unified_product(&datum_from_exder(x)?)?.product)
}

/// A chain `E₀ ⊂ E₁ ⊂ … ⊂ E_m` of Rota-Baxter Lie algebras, each of
/// codimension one in the next, with the extended derivations producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagChain {
    steps: Vec<ExtendedDerivation>,
    algebras: Vec<RBLieAlgebra>,
}

impl FlagChain {
    pub fn new(base: RBLieAlgebra) -> Result<Self> {
        require_valid_base(&base, "base")?;
        Ok(Self { steps: Vec::new(), algebras: vec![base] })
    }

    pub fn steps(&self) -> &[ExtendedDerivation] {
        &self.steps
    }

    pub fn algebras(&self) -> &[RBLieAlgebra] {
        &self.algebras
    }

    /// The largest algebra of the chain.
    pub fn top(&self) -> &RBLieAlgebra {
        self.algebras.last().expect("a chain always holds its base")
    }

    /// Extends the chain by one step; `step.base` must be the current top.
    pub fn push(&mut self, step: ExtendedDerivation) -> Result<()> {
        let index = self.steps.len();
        if &step.base != self.top() {
            return Err(Error::InvalidInput(format!("step {index}: base is not the current top of the chain")));
        }
        let next = flag_extend(&step).map_err(|e| Error::InvalidInput(format!("step {index}: {e}")))?;
        let n = step.base.dim();
        let embedding = Matrix::block(
            &Matrix::identity(n),
            &Matrix::zeros(n, 0),
            &Matrix::zeros(1, n),
            &Matrix::zeros(1, 0),
        )?;
        let valid = check_rb(&next).map(|r| r.passed()).unwrap_or(false);
        if !valid || !check_rb_morphism(self.top(), &next, &embedding)?.passed() {
            return Err(Error::InvalidInput(format!("step {index}: base does not embed as a subalgebra")));
        }
        self.steps.push(step);
        self.algebras.push(next);
        Ok(())
    }

    /// Extends the chain by the quadruple `(ε, D, g₀, k₀)` over the current top.
    pub fn push_parts(
        &mut self,
        character: Vector,
        derivation: Matrix,
        anchor: Vector,
        operator_scalar: Rational,
    ) -> Result<()> {
        let index = self.steps.len();
        let step = ExtendedDerivation::new(self.top().clone(), character, derivation, anchor, operator_scalar)
            .map_err(|e| Error::Shape(format!("step {index}: {e}")))?;
        self.push(step)
    }
}

/// Builds the chain `base ⊂ E₁ ⊂ …`, re-validating every step against the
/// algebra it extends.
pub fn build_flag_chain(base: RBLieAlgebra, steps: Vec<ExtendedDerivation>) -> Result<FlagChain> {
    let mut chain = FlagChain::new(base)?;
    for step in steps {
        chain.push(step)?;
    }
    Ok(chain)
}

/// Groups the quadruples into equivalence classes. Classes are listed by
/// their smallest index, each in increasing order.
pub fn partition_exders(list: &[ExtendedDerivation]) -> Result<Vec<Vec<usize>>> {
    if let Some(first) = list.first() {
        if let Some(bad) = list.iter().position(|x| x.base != first.base) {
            return Err(Error::InvalidInput(format!("quadruple {bad} has a different base")));
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (i, x) in list.iter().enumerate() {
        let mut home = None;
        for (c, class) in classes.iter().enumerate() {
            if decide_exder_equiv(&list[class[0]], x)?.is_some() {
                home = Some(c);
                break;
            }
        }
        match home {
            Some(c) => classes[c].push(i),
            None => classes.push(vec![i]),
        }
    }
    Ok(classes)
}
