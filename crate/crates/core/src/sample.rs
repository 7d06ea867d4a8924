//! Random generators for property tests and benchmarks: unconstrained data
//! and quadruples, valid quadruples from exact nullspaces, invertible
//! witnesses, and a family of data valid by construction.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{LieAlgebra, RBLieAlgebra};
use crate::classify::{decompose, transform_datum, DecompositionContext, EquivalenceWitness};
use crate::exactla::{int, solve_affine, vector, Matrix, Rational, Tensor3, Vector};
use crate::extending::{factorize, unified_product, CrossedSystem, ExtendingDatum};
use crate::fixtures;
use crate::flag::{datum_from_exder, flag_extend, ExtendedDerivation};

/// Integer entries in `{−2, …, 2}`.
pub fn small_entry<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    int(rng.gen_range(-2..=2))
}

fn sparse_entry<R: Rng + ?Sized>(rng: &mut R, density: f64) -> Rational {
    if rng.gen_bool(density) {
        small_entry(rng)
    } else {
        Rational::zero()
    }
}

fn random_tensor<R: Rng + ?Sized>(rng: &mut R, shape: (usize, usize, usize), density: f64) -> Tensor3 {
    let (o, l, r) = shape;
    let mut t = Tensor3::zeros(o, l, r);
    for k in 0..o {
        for i in 0..l {
            for j in 0..r {
                t.set(k, i, j, sparse_entry(rng, density));
            }
        }
    }
    t
}

fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, density: f64) -> Matrix {
    let entries = (0..rows * cols).map(|_| sparse_entry(rng, density)).collect();
    Matrix::new(rows, cols, entries).expect("entry count matches")
}

/// A vector with entries in `{−2, …, 2}`.
pub fn random_vector<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vector {
    (0..n).map(|_| small_entry(rng)).collect()
}

/// A random fixture base from [`fixtures::rb_bases`].
pub fn random_base<R: Rng + ?Sized>(rng: &mut R, bases: &[RBLieAlgebra]) -> RBLieAlgebra {
    bases.choose(rng).expect("non-empty base list").clone()
}

/// A datum whose six maps are independently random. Each map is zero with
/// probability ¼; the remaining entries are nonzero with probability
/// `density`.
pub fn random_datum<R: Rng + ?Sized>(rng: &mut R, base: &RBLieAlgebra, m: usize, density: f64) -> ExtendingDatum {
    let n = base.dim();
    let mut d = ExtendingDatum::trivial(base.clone(), m);
    let pick = |rng: &mut R| if rng.gen_bool(0.25) { 0.0 } else { density };
    let p = pick(rng);
    d.right_action = random_tensor(rng, (m, m, n), p);
    let p = pick(rng);
    d.left_action = random_tensor(rng, (n, m, n), p);
    let p = pick(rng);
    d.cocycle = random_tensor(rng, (n, m, m), p);
    let p = pick(rng);
    d.complement_bracket = random_tensor(rng, (m, m, m), p);
    let p = pick(rng);
    d.mixed_operator = random_matrix(rng, n, m, p);
    let p = pick(rng);
    d.complement_operator = random_matrix(rng, m, m, p);
    d
}

/// Changes one random entry of one of the six maps to a random small value.
pub fn perturb_datum<R: Rng + ?Sized>(rng: &mut R, datum: &ExtendingDatum) -> ExtendingDatum {
    let mut d = datum.clone();
    let value = small_entry(rng);
    let tensor_at = |rng: &mut R, t: &mut Tensor3, value: Rational| {
        let (o, l, r) = t.shape();
        if o * l * r > 0 {
            t.set(rng.gen_range(0..o), rng.gen_range(0..l), rng.gen_range(0..r), value);
        }
    };
    let matrix_at = |rng: &mut R, mat: &mut Matrix, value: Rational| {
        if mat.rows() * mat.cols() > 0 {
            let (i, j) = (rng.gen_range(0..mat.rows()), rng.gen_range(0..mat.cols()));
            mat[(i, j)] = value;
        }
    };
    match rng.gen_range(0..6) {
        0 => tensor_at(rng, &mut d.right_action, value),
        1 => tensor_at(rng, &mut d.left_action, value),
        2 => tensor_at(rng, &mut d.cocycle, value),
        3 => tensor_at(rng, &mut d.complement_bracket, value),
        4 => matrix_at(rng, &mut d.mixed_operator, value),
        _ => matrix_at(rng, &mut d.complement_operator, value),
    }
    d
}

/// A quadruple with independent random entries (mostly not an extended
/// derivation).
pub fn random_exder<R: Rng + ?Sized>(rng: &mut R, base: &RBLieAlgebra, density: f64) -> ExtendedDerivation {
    let n = base.dim();
    ExtendedDerivation {
        base: base.clone(),
        character: (0..n).map(|_| sparse_entry(rng, density)).collect(),
        derivation: random_matrix(rng, n, n, density),
        anchor: (0..n).map(|_| sparse_entry(rng, density)).collect(),
        operator_scalar: sparse_entry(rng, density),
    }
}

fn random_combination<R: Rng + ?Sized>(rng: &mut R, len: usize, basis: &[Vector]) -> Vector {
    let mut out = vector::zeros(len);
    for b in basis {
        let c = int(rng.gen_range(-1..=2));
        vector::add_assign(&mut out, &vector::scale(&c, b));
    }
    out
}

/// The linear conditions on `(D, g₀)` for fixed `(ε, k₀)`, evaluated on the
/// given pair: twisted Leibniz residuals followed by the operator identity.
fn exder_residual(base: &RBLieAlgebra, eps: &[Rational], k0: &Rational, d: &Matrix, g0: &[Rational]) -> Vector {
    let n = base.dim();
    let lambda = &base.weight;
    let mut out = Vec::with_capacity(n * n * n + n * n);
    for i in 0..n {
        for j in 0..n {
            let (dg, dh) = (d.column(i), d.column(j));
            let lhs = d.apply_unchecked(&base.algebra.basis_bracket(i, j));
            let rhs = vector::sum(
                n,
                [
                    &base.bracket(&dg, &vector::unit(n, j)),
                    &base.bracket(&vector::unit(n, i), &dh),
                    &vector::scale(&eps[i], &dh),
                    &vector::neg(&vector::scale(&eps[j], &dg)),
                ],
            );
            out.extend(vector::sub(&lhs, &rhs));
        }
    }
    for i in 0..n {
        let g = vector::unit(n, i);
        let pg = base.op(&g);
        let dpg = d.apply_unchecked(&pg);
        let dg = d.column(i);
        let eps_pg = vector::dot(eps, &pg);
        out.extend(vector::sum(
            n,
            [
                &base.bracket(&pg, g0),
                &vector::neg(&vector::scale(k0, &dpg)),
                &base.op(&dpg),
                &vector::scale(&eps_pg, g0),
                &vector::neg(&base.op(&base.bracket(&g, g0))),
                &vector::scale(k0, &base.op(&dg)),
                &vector::scale(&(k0 * &eps[i]), g0),
                &vector::scale(lambda, &base.op(&dg)),
                &vector::scale(&(lambda * &eps[i]), g0),
            ],
        ));
    }
    out
}

/// A random extended derivation: `ε` from the forms vanishing on `[g, g]`,
/// `k₀` compatible with `ε`, then `(D, g₀)` a random point of the linear
/// solution space of the remaining conditions.
pub fn random_valid_exder<R: Rng + ?Sized>(rng: &mut R, base: &RBLieAlgebra) -> ExtendedDerivation {
    let n = base.dim();
    let brackets: Vec<Vector> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| base.algebra.basis_bracket(i, j))
        .collect();
    let forms = if n == 0 {
        Vec::new()
    } else {
        let a = Matrix::from_rows(brackets, n).expect("rows have length n");
        solve_affine(&a, &vector::zeros(n * n)).expect("consistent shapes").nullspace_basis
    };
    let eps = if rng.gen_bool(0.5) { random_combination(rng, n, &forms) } else { vector::zeros(n) };
    let k0 = if vector::is_zero(&eps) {
        small_entry(rng)
    } else if rng.gen_bool(0.5) {
        Rational::zero()
    } else {
        -&base.weight
    };
    let unknowns = n * n + n;
    let columns: Vec<Vector> = (0..unknowns)
        .map(|t| {
            let mut d = Matrix::zeros(n, n);
            let mut g0 = vector::zeros(n);
            if t < n * n {
                d[(t / n, t % n)] = int(1);
            } else {
                g0[t - n * n] = int(1);
            }
            exder_residual(base, &eps, &k0, &d, &g0)
        })
        .collect();
    let rows = n * n * n + n * n;
    let system = Matrix::from_columns(&columns, rows).expect("columns have equal length");
    let kernel = solve_affine(&system, &vector::zeros(rows)).expect("consistent shapes").nullspace_basis;
    let point = random_combination(rng, unknowns, &kernel);
    let entries = point[..n * n].to_vec();
    ExtendedDerivation {
        base: base.clone(),
        character: eps,
        derivation: Matrix::new(n, n, entries).expect("n*n entries"),
        anchor: point[n * n..].to_vec(),
        operator_scalar: k0,
    }
}

/// An invertible square matrix with small integer entries.
pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Matrix {
    loop {
        let v = random_matrix(rng, m, m, 0.7);
        if v.inverse().is_some() {
            return v;
        }
    }
}

/// `(r, v)` with `r` arbitrary and `v` invertible.
pub fn random_witness<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize) -> EquivalenceWitness {
    EquivalenceWitness { shift: random_matrix(rng, n, m, 0.6), automorphism: random_invertible(rng, m) }
}

/// A small ambient line extension of `base` by a valid random quadruple.
fn random_line_extension<R: Rng + ?Sized>(rng: &mut R, base: &RBLieAlgebra) -> RBLieAlgebra {
    flag_extend(&random_valid_exder(rng, base)).expect("generated quadruple is valid")
}

/// Data valid by construction, at least `count` of them: trivial data,
/// data of random extended derivations, two-step flag decompositions
/// (complement of dimension 2), crossed direct sums, factorized matched
/// pairs, and random transforms of all of these.
pub fn constructed_valid_data<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<ExtendingDatum> {
    let bases = fixtures::rb_bases();
    let mut out = vec![fixtures::line_extension_datum()];
    if let Ok(pair) = factorize(
        &unified_product(&fixtures::character_matched_pair([1, 0]).to_datum().expect("shapes"))
            .expect("shapes")
            .product,
        &[vector::unit(3, 0), vector::unit(3, 1)],
        &[vector::unit(3, 2)],
    ) {
        out.push(pair.to_datum().expect("shapes"));
    }
    while out.len() < count {
        let base = random_base(rng, &bases);
        let n = base.dim();
        let datum = match out.len() % 6 {
            0 => ExtendingDatum::trivial(base, rng.gen_range(1..=2)),
            1 | 2 => datum_from_exder(&random_valid_exder(rng, &base)).expect("shapes"),
            3 => {
                let middle = random_line_extension(rng, &base);
                let top = random_line_extension(rng, &middle);
                let ctx = DecompositionContext::canonical(top, n).expect("canonical split");
                decompose(&ctx).expect("the base is a subalgebra")
            }
            4 => {
                let other = random_base(rng, &bases);
                let complement = RBLieAlgebra {
                    algebra: LieAlgebra::abelian(1),
                    weight: base.weight.clone(),
                    operator: Matrix::scalar(1, &if rng.gen_bool(0.5) { Rational::zero() } else { -&base.weight }),
                };
                let complement = if other.weight == base.weight && other.dim() <= 2 { other } else { complement };
                CrossedSystem::direct_sum(base, complement).to_datum().expect("shapes")
            }
            _ => {
                let source = out[rng.gen_range(0..out.len())].clone();
                let w = random_witness(rng, source.base_dim(), source.complement_dim);
                transform_datum(&source, &w).expect("invertible witness")
            }
        };
        out.push(datum);
    }
    out
}
