//! Named Rota-Baxter Lie algebras, extending data and quadruples used by the
//! examples, the command line `demo` and the test suites.

use crate::algebra::{check_rb, LieAlgebra, RBLieAlgebra};
use crate::exactla::{int, vector, Matrix, Rational, Tensor3};
use crate::extending::{ExtendingDatum, MatchedPair};
use crate::flag::ExtendedDerivation;

/// Names accepted by [`LieAlgebra::fixture`] that the suites sweep over.
pub const ALGEBRA_NAMES: [&str; 4] = ["abelian:2", "aff1", "heisenberg3", "sl2"];

/// Weights the suites sweep over.
pub fn weights() -> Vec<Rational> {
    vec![int(0), int(1), int(-1)]
}

/// Rota-Baxter operators of the given weight on `lie`: zero, `−λ·id`, and
/// every diagonal matrix with entries in `{0, 1, −1, −λ}` passing the
/// Rota-Baxter identity. Duplicates are removed; order is deterministic.
pub fn rb_operators(lie: &LieAlgebra, weight: &Rational) -> Vec<Matrix> {
    let n = lie.dim();
    let mut ops = vec![Matrix::zeros(n, n), Matrix::scalar(n, &-weight)];
    let mut values = vec![int(0), int(1), int(-1), -weight];
    values.dedup();
    values.sort();
    values.dedup();
    let total = values.len().pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let diag: Vec<Rational> = (0..n)
            .map(|_| {
                let v = values[c % values.len()].clone();
                c /= values.len();
                v
            })
            .collect();
        let op = Matrix::diagonal(&diag);
        if ops.contains(&op) {
            continue;
        }
        let rb = RBLieAlgebra { algebra: lie.clone(), weight: weight.clone(), operator: op.clone() };
        if check_rb(&rb).is_ok_and(|r| r.passed()) {
            ops.push(op);
        }
    }
    ops
}

/// Every fixture algebra with every operator of [`rb_operators`] for every
/// weight of [`weights`].
pub fn rb_bases() -> Vec<RBLieAlgebra> {
    let mut out = Vec::new();
    for name in ALGEBRA_NAMES {
        let lie = LieAlgebra::fixture(name).expect("built-in fixture");
        for w in weights() {
            for op in rb_operators(&lie, &w) {
                out.push(RBLieAlgebra { algebra: lie.clone(), weight: w.clone(), operator: op });
            }
        }
    }
    out
}

/// `(aff(1), P = 0, λ = 0)`.
pub fn aff1_zero() -> RBLieAlgebra {
    RBLieAlgebra::with_zero_operator(LieAlgebra::aff1(), int(0))
}

/// `(aff(1), P = id, λ = 0)`, which is not a Rota-Baxter operator.
pub fn aff1_identity() -> RBLieAlgebra {
    RBLieAlgebra { algebra: LieAlgebra::aff1(), weight: int(0), operator: Matrix::identity(2) }
}

/// The line extension of `(aff(1), P = 0, λ = 0)` with `x ▷ e1 = e2`,
/// `P₁(x) = e1` and everything else zero.
pub fn line_extension_datum() -> ExtendingDatum {
    let mut d = ExtendingDatum::trivial(aff1_zero(), 1);
    d.left_action.set(1, 0, 0, int(1));
    d.mixed_operator[(0, 0)] = int(1);
    d
}

/// The quadruple `(0, D, e1, 0)` with `D(e1) = e2`, `D(e2) = 0` over
/// `(aff(1), P = 0, λ = 0)`; its datum is [`line_extension_datum`].
pub fn line_extension_exder() -> ExtendedDerivation {
    let base = aff1_zero();
    ExtendedDerivation {
        base,
        character: vector::zeros(2),
        derivation: Matrix::from_i64(&[&[0, 0], &[1, 0]]),
        anchor: vector::unit(2, 0),
        operator_scalar: int(0),
    }
}

/// The inner quadruple `(0, ad_{e1}, c·e2, 0)` over `(aff(1), P = 0, λ = 0)`.
pub fn inner_exder(c: Rational) -> ExtendedDerivation {
    ExtendedDerivation {
        base: aff1_zero(),
        character: vector::zeros(2),
        derivation: Matrix::from_i64(&[&[0, 0], &[0, 1]]),
        anchor: vector::scale(&c, &vector::unit(2, 1)),
        operator_scalar: int(0),
    }
}

/// `(0, 0, c·e2, 0)` over `(aff(1), P = 0, λ = 0)`.
pub fn anchored_exder(c: Rational) -> ExtendedDerivation {
    ExtendedDerivation {
        anchor: vector::scale(&c, &vector::unit(2, 1)),
        ..ExtendedDerivation::zero(aff1_zero())
    }
}

/// `(aff(1), P = 0, λ = 0)` paired with an abelian line, `▷ = 0` and
/// `x ◁ g = ε(g)x`.
pub fn character_matched_pair(character: [i64; 2]) -> MatchedPair {
    let line = RBLieAlgebra::with_zero_operator(LieAlgebra::abelian(1), int(0));
    let mut pair = MatchedPair::trivial(aff1_zero(), line);
    let mut t = Tensor3::zeros(1, 1, 2);
    for (i, c) in character.iter().enumerate() {
        t.set(0, 0, i, int(*c));
    }
    pair.right_action = t;
    pair
}

/// Fixtures written by the command line `demo`, as `(file stem, algebra)`.
pub fn demo_algebras() -> Vec<(String, RBLieAlgebra)> {
    let mut out: Vec<(String, RBLieAlgebra)> = ["abelian:2", "aff1", "heisenberg3", "sl2"]
        .iter()
        .map(|name| {
            let lie = LieAlgebra::fixture(name).expect("built-in fixture");
            (name.replace(':', ""), RBLieAlgebra::with_zero_operator(lie, int(0)))
        })
        .collect();
    out.push((
        "aff1-diag".into(),
        RBLieAlgebra {
            algebra: LieAlgebra::aff1(),
            weight: int(0),
            operator: Matrix::diagonal(&[int(1), int(0)]),
        },
    ));
    out.push(("aff1-identity".into(), aff1_identity()));
    out
}
