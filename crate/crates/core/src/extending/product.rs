use super::ExtendingDatum;
use crate::algebra::{check_lie_with, rb_identity_report, LieAlgebra, RBLieAlgebra};
use crate::error::Result;
use crate::exactla::{vector, Matrix, Rational, Tensor3, Vector};
use crate::report::{ConditionReport, ReportMode};

/// The bracket and operator built from an extending datum on `g × V`, in the
/// ordered basis `(e_1, …, e_n, x_1, …, x_m)`. Whether `product` is actually
/// a Rota-Baxter Lie algebra is decided by [`check_unified_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnifiedProduct {
    pub product: RBLieAlgebra,
    /// `g → g × V`, `g ↦ (g, 0)`.
    pub embedding: Matrix,
    /// `g × V → V`, `(g, x) ↦ x`.
    pub projection: Matrix,
    pub source: ExtendingDatum,
}

impl UnifiedProduct {
    pub fn dim(&self) -> usize {
        self.product.dim()
    }
}

/// `[(g, x), (h, y)] = ([g,h] + x▷h − y▷g + f(x,y), {x,y} + x◁h − y◁g)`.
pub fn product_bracket(
    datum: &ExtendingDatum,
    (g, x): (&[Rational], &[Rational]),
    (h, y): (&[Rational], &[Rational]),
) -> (Vector, Vector) {
    let n = datum.base_dim();
    let m = datum.complement_dim;
    let g_part = vector::sum(
        n,
        [
            &datum.base.bracket(g, h),
            &datum.left_act(x, h),
            &vector::neg(&datum.left_act(y, g)),
            &datum.cocycle_at(x, y),
        ],
    );
    let v_part = vector::sum(
        m,
        [&datum.braces(x, y), &datum.right_act(x, h), &vector::neg(&datum.right_act(y, g))],
    );
    (g_part, v_part)
}

/// `P̃(g, x) = (P(g) + P₁(x), P₂(x))`.
pub fn product_operator(datum: &ExtendingDatum, (g, x): (&[Rational], &[Rational])) -> (Vector, Vector) {
    (vector::add(&datum.base.op(g), &datum.p1(x)), datum.p2(x))
}

/// Labels for the product basis: the base labels followed by fresh `x<k>`.
fn product_labels(base: &LieAlgebra, m: usize) -> Option<Vec<String>> {
    let mut labels = base.labels()?.to_vec();
    let mut k = 1;
    for _ in 0..m {
        while labels.iter().any(|l| *l == format!("x{k}")) {
            k += 1;
        }
        labels.push(format!("x{k}"));
    }
    Some(labels)
}

pub fn unified_product(datum: &ExtendingDatum) -> Result<UnifiedProduct> {
    datum.check_shapes()?;
    let (n, m) = (datum.base_dim(), datum.complement_dim);
    let dim = n + m;
    let split = |u: &Vector| -> (Vector, Vector) { (u[..n].to_vec(), u[n..].to_vec()) };
    let basis: Vec<(Vector, Vector)> = (0..dim).map(|a| split(&vector::unit(dim, a))).collect();

    let mut bracket = Tensor3::zeros(dim, dim, dim);
    for (a, (g, x)) in basis.iter().enumerate() {
        for (b, (h, y)) in basis.iter().enumerate() {
            let (gp, vp) = product_bracket(datum, (g, x), (h, y));
            bracket.set_pair(a, b, &vector::concat(&gp, &vp));
        }
    }
    let columns: Vec<Vector> = basis
        .iter()
        .map(|(g, x)| {
            let (gp, vp) = product_operator(datum, (g, x));
            vector::concat(&gp, &vp)
        })
        .collect();
    let operator = Matrix::from_columns(&columns, dim)?;
    let labels = product_labels(&datum.base.algebra, m);
    let algebra = LieAlgebra::from_structure_constants_unchecked(bracket, labels)?;
    let product = RBLieAlgebra::new(algebra, datum.base.weight.clone(), operator)?;
    let embedding = Matrix::block(
        &Matrix::identity(n),
        &Matrix::zeros(n, 0),
        &Matrix::zeros(m, n),
        &Matrix::zeros(m, 0),
    )?;
    let projection = Matrix::block(
        &Matrix::zeros(m, n),
        &Matrix::identity(m),
        &Matrix::zeros(0, n),
        &Matrix::zeros(0, m),
    )?;
    Ok(UnifiedProduct { product, embedding, projection, source: datum.clone() })
}

/// The brute-force route: Lie axioms and the Rota-Baxter identity checked
/// directly on the constructed product.
pub fn check_unified_axioms(product: &UnifiedProduct) -> ConditionReport {
    check_unified_axioms_with(product, ReportMode::default())
}

pub fn check_unified_axioms_with(product: &UnifiedProduct, mode: ReportMode) -> ConditionReport {
    let mut report = check_lie_with(&product.product.algebra, mode);
    if report.passed() {
        report.merge(rb_identity_report(&product.product, mode));
    }
    report
}
