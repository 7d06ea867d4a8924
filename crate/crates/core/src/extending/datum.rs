use crate::algebra::{check_rb, RBLieAlgebra};
use crate::error::{shape_err, Error, Result};
use crate::exactla::{vector, Matrix, Rational, Tensor3, Vector};
use crate::report::{ConditionReport, ReportMode};

/// The six maps coupling a Rota-Baxter Lie algebra `(g, P)` to a vector space
/// `V` of dimension `complement_dim`.
///
/// | field                 | map                 | tensor / matrix shape |
/// |-----------------------|---------------------|-----------------------|
/// | `right_action`  (◁)   | `V × g → V`         | `(m, m, n)`           |
/// | `left_action`   (▷)   | `V × g → g`         | `(n, m, n)`           |
/// | `cocycle`       (f)   | `V × V → g`         | `(n, m, m)`           |
/// | `complement_bracket`  | `V × V → V`         | `(m, m, m)`           |
/// | `mixed_operator` (P₁) | `V → g`             | `n × m`               |
/// | `complement_operator` (P₂) | `V → V`        | `m × m`               |
///
/// Only shapes are invariants; the algebraic conditions are what
/// [`validate_datum`] decides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendingDatum {
    pub base: RBLieAlgebra,
    pub complement_dim: usize,
    pub right_action: Tensor3,
    pub left_action: Tensor3,
    pub cocycle: Tensor3,
    pub complement_bracket: Tensor3,
    pub mixed_operator: Matrix,
    pub complement_operator: Matrix,
}

impl ExtendingDatum {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        base: RBLieAlgebra,
        complement_dim: usize,
        right_action: Tensor3,
        left_action: Tensor3,
        cocycle: Tensor3,
        complement_bracket: Tensor3,
        mixed_operator: Matrix,
        complement_operator: Matrix,
    ) -> Result<Self> {
        let datum = Self {
            base,
            complement_dim,
            right_action,
            left_action,
            cocycle,
            complement_bracket,
            mixed_operator,
            complement_operator,
        };
        datum.check_shapes()?;
        Ok(datum)
    }

    /// All six maps zero: the unified product is the direct sum `g ⊕ V` with
    /// abelian `V` and operator extended by zero.
    pub fn trivial(base: RBLieAlgebra, complement_dim: usize) -> Self {
        let (n, m) = (base.dim(), complement_dim);
        Self {
            base,
            complement_dim: m,
            right_action: Tensor3::zeros(m, m, n),
            left_action: Tensor3::zeros(n, m, n),
            cocycle: Tensor3::zeros(n, m, m),
            complement_bracket: Tensor3::zeros(m, m, m),
            mixed_operator: Matrix::zeros(n, m),
            complement_operator: Matrix::zeros(m, m),
        }
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn check_shapes(&self) -> Result<()> {
        let (n, m) = (self.base.dim(), self.complement_dim);
        let tensors = [
            ("right action", &self.right_action, (m, m, n)),
            ("left action", &self.left_action, (n, m, n)),
            ("cocycle", &self.cocycle, (n, m, m)),
            ("complement bracket", &self.complement_bracket, (m, m, m)),
        ];
        for (name, t, expected) in tensors {
            if t.shape() != expected {
                return shape_err(format!("{name} has shape {:?}, expected {expected:?}", t.shape()));
            }
        }
        for (name, mat, (r, c)) in
            [("mixed operator", &self.mixed_operator, (n, m)), ("complement operator", &self.complement_operator, (m, m))]
        {
            if mat.rows() != r || mat.cols() != c {
                return shape_err(format!("{name} is {}x{}, expected {r}x{c}", mat.rows(), mat.cols()));
            }
        }
        Ok(())
    }

    /// `x ◁ g ∈ V`.
    pub fn right_act(&self, x: &[Rational], g: &[Rational]) -> Vector {
        self.right_action.apply_unchecked(x, g)
    }

    /// `x ▷ g ∈ g`.
    pub fn left_act(&self, x: &[Rational], g: &[Rational]) -> Vector {
        self.left_action.apply_unchecked(x, g)
    }

    pub fn cocycle_at(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.cocycle.apply_unchecked(x, y)
    }

    pub fn braces(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.complement_bracket.apply_unchecked(x, y)
    }

    pub fn p1(&self, x: &[Rational]) -> Vector {
        self.mixed_operator.apply_unchecked(x)
    }

    pub fn p2(&self, x: &[Rational]) -> Vector {
        self.complement_operator.apply_unchecked(x)
    }
}

/// Ensures the base is a Rota-Baxter Lie algebra; shared precondition of the
/// datum-level checkers.
pub(crate) fn require_valid_base(base: &RBLieAlgebra, what: &str) -> Result<()> {
    let report = check_rb(base)?;
    if !report.passed() {
        return Err(Error::InvalidInput(format!("{what} operator is not a Rota-Baxter operator")));
    }
    Ok(())
}

/// Decides whether the unified product of `datum` is a Rota-Baxter Lie
/// algebra, by checking the eleven compatibility conditions `a`–`k` on every
/// tuple of basis vectors:
///
/// * `a`: `f` and `{-,-}` alternating;
/// * `b`: `(V, ◁)` is a right `g`-module;
/// * `c`–`g`: the mixed Jacobi identities;
/// * `h`, `i`: the operator identity on pairs `(g, y)`;
/// * `j`, `k`: the operator identity on pairs `(x, y)`.
///
/// In `h` the bracket term is `P([g, P₁(y)])` for the same `g` that appears
/// in the other terms.
pub fn validate_datum(datum: &ExtendingDatum) -> Result<ConditionReport> {
    validate_datum_with(datum, ReportMode::default())
}

pub fn validate_datum_with(datum: &ExtendingDatum, mode: ReportMode) -> Result<ConditionReport> {
    datum.check_shapes()?;
    require_valid_base(&datum.base, "base")?;
    let (n, m) = (datum.base.dim(), datum.complement_dim);
    let lambda = &datum.base.weight;
    let d = datum;
    let gb: Vec<Vector> = (0..n).map(|i| vector::unit(n, i)).collect();
    let vb: Vec<Vector> = (0..m).map(|a| vector::unit(m, a)).collect();
    let br = |g: &Vector, h: &Vector| d.base.bracket(g, h);
    let pg = |g: &Vector| d.base.op(g);
    let mut r = ConditionReport::new(mode);

    // a
    for a in 0..m {
        for b in 0..m {
            let (x, y) = (&vb[a], &vb[b]);
            r.check(
                "a",
                &[a, b],
                vector::concat(&d.cocycle_at(x, y), &d.braces(x, y)),
                vector::concat(&vector::neg(&d.cocycle_at(y, x)), &vector::neg(&d.braces(y, x))),
            );
        }
    }

    for a in 0..m {
        let x = &vb[a];
        for i in 0..n {
            for j in 0..n {
                let (g, h) = (&gb[i], &gb[j]);
                let gh = br(g, h);
                let (xg, xh) = (d.right_act(x, g), d.right_act(x, h));
                // b
                if !r.saturated("b") {
                    let rhs = vector::sub(&d.right_act(&xg, h), &d.right_act(&xh, g));
                    r.check("b", &[a, i, j], d.right_act(x, &gh), rhs);
                }
                // c
                if !r.saturated("c") {
                    let rhs = vector::sum(
                        n,
                        [
                            &br(&d.left_act(x, g), h),
                            &br(g, &d.left_act(x, h)),
                            &d.left_act(&xg, h),
                            &vector::neg(&d.left_act(&xh, g)),
                        ],
                    );
                    r.check("c", &[a, i, j], d.left_act(x, &gh), rhs);
                }
            }
        }
    }

    for a in 0..m {
        for b in 0..m {
            let (x, y) = (&vb[a], &vb[b]);
            let xy = d.braces(x, y);
            let fxy = d.cocycle_at(x, y);
            for i in 0..n {
                let g = &gb[i];
                let (xg, yg) = (d.right_act(x, g), d.right_act(y, g));
                let (xtg, ytg) = (d.left_act(x, g), d.left_act(y, g));
                // d
                if !r.saturated("d") {
                    let rhs = vector::sum(
                        m,
                        [
                            &d.braces(x, &yg),
                            &d.braces(&xg, y),
                            &d.right_act(x, &ytg),
                            &vector::neg(&d.right_act(y, &xtg)),
                        ],
                    );
                    r.check("d", &[a, b, i], d.right_act(&xy, g), rhs);
                }
                // e
                if !r.saturated("e") {
                    let rhs = vector::sum(
                        n,
                        [
                            &d.left_act(x, &ytg),
                            &vector::neg(&d.left_act(y, &xtg)),
                            &br(g, &fxy),
                            &d.cocycle_at(x, &yg),
                            &d.cocycle_at(&xg, y),
                        ],
                    );
                    r.check("e", &[a, b, i], d.left_act(&xy, g), rhs);
                }
            }
        }
    }

    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let (x, y, z) = (&vb[a], &vb[b], &vb[c]);
                let cyclic = [(x, y, z), (y, z, x), (z, x, y)];
                // f
                if !r.saturated("f") {
                    let mut acc = vector::zeros(n);
                    for (p, q, s) in cyclic {
                        vector::add_assign(&mut acc, &d.cocycle_at(p, &d.braces(q, s)));
                        vector::add_assign(&mut acc, &d.left_act(p, &d.cocycle_at(q, s)));
                    }
                    r.check_zero("f", &[a, b, c], acc);
                }
                // g
                if !r.saturated("g") {
                    let mut acc = vector::zeros(m);
                    for (p, q, s) in cyclic {
                        vector::add_assign(&mut acc, &d.braces(p, &d.braces(q, s)));
                        vector::add_assign(&mut acc, &d.right_act(p, &d.cocycle_at(q, s)));
                    }
                    r.check_zero("g", &[a, b, c], acc);
                }
            }
        }
    }

    for i in 0..n {
        let g = &gb[i];
        let pgv = pg(g);
        for b in 0..m {
            let y = &vb[b];
            let (p1y, p2y) = (d.p1(y), d.p2(y));
            let y_pg = d.right_act(y, &pgv);
            let p2y_g = d.right_act(&p2y, g);
            let y_g = d.right_act(y, g);
            // h
            if !r.saturated("h") {
                let expr = vector::sum(
                    n,
                    [
                        &br(&pgv, &p1y),
                        &vector::neg(&d.left_act(&p2y, &pgv)),
                        &pg(&d.left_act(y, &pgv)),
                        &d.p1(&y_pg),
                        &vector::neg(&pg(&br(g, &p1y))),
                        &pg(&d.left_act(&p2y, g)),
                        &d.p1(&p2y_g),
                        &vector::scale(lambda, &pg(&d.left_act(y, g))),
                        &vector::scale(lambda, &d.p1(&y_g)),
                    ],
                );
                r.check_zero("h", &[i, b], expr);
            }
            // i
            if !r.saturated("i") {
                let expr = vector::sum(
                    m,
                    [
                        &d.right_act(&p2y, &pgv),
                        &vector::neg(&d.p2(&y_pg)),
                        &vector::neg(&d.p2(&p2y_g)),
                        &vector::neg(&vector::scale(lambda, &d.p2(&y_g))),
                    ],
                );
                r.check_zero("i", &[i, b], expr);
            }
        }
    }

    for a in 0..m {
        for b in 0..m {
            let (x, y) = (&vb[a], &vb[b]);
            let (p1x, p2x, p1y, p2y) = (d.p1(x), d.p2(x), d.p1(y), d.p2(y));
            // j
            if !r.saturated("j") {
                let expr = vector::sum(
                    n,
                    [
                        &br(&p1x, &p1y),
                        &d.left_act(&p2x, &p1y),
                        &vector::neg(&d.left_act(&p2y, &p1x)),
                        &d.cocycle_at(&p2x, &p2y),
                        &pg(&d.left_act(y, &p1x)),
                        &vector::neg(&pg(&d.cocycle_at(&p2x, y))),
                        &vector::neg(&d.p1(&d.braces(&p2x, y))),
                        &d.p1(&d.right_act(y, &p1x)),
                        &vector::neg(&pg(&d.left_act(x, &p1y))),
                        &vector::neg(&pg(&d.cocycle_at(x, &p2y))),
                        &vector::neg(&d.p1(&d.braces(x, &p2y))),
                        &vector::neg(&d.p1(&d.right_act(x, &p1y))),
                        &vector::neg(&vector::scale(lambda, &pg(&d.cocycle_at(x, y)))),
                        &vector::neg(&vector::scale(lambda, &d.p1(&d.braces(x, y)))),
                    ],
                );
                r.check_zero("j", &[a, b], expr);
            }
            // k
            if !r.saturated("k") {
                let expr = vector::sum(
                    m,
                    [
                        &d.braces(&p2x, &p2y),
                        &d.right_act(&p2x, &p1y),
                        &vector::neg(&d.right_act(&p2y, &p1x)),
                        &vector::neg(&d.p2(&d.braces(&p2x, y))),
                        &d.p2(&d.right_act(y, &p1x)),
                        &vector::neg(&d.p2(&d.braces(x, &p2y))),
                        &vector::neg(&d.p2(&d.right_act(x, &p1y))),
                        &vector::neg(&vector::scale(lambda, &d.p2(&d.braces(x, y)))),
                    ],
                );
                r.check_zero("k", &[a, b], expr);
            }
        }
    }

    Ok(r)
}

impl ExtendingDatum {
    /// Fails with `InvalidInput` unless the datum passes every condition.
    pub fn require_valid(&self) -> Result<()> {
        let report = validate_datum(self)?;
        if !report.passed() {
            return Err(Error::InvalidInput(format!(
                "extending datum fails condition(s) {}",
                report.failed_conditions().join(", ")
            )));
        }
        Ok(())
    }
}
