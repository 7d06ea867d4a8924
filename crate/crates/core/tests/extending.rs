use rand::rngs::StdRng;
use rand::SeedableRng;
use rbla_core::exactla::{int, vector};
use rbla_core::extending::check_crossed_system;
use rbla_core::{
    bicrossed_product, check_lie, check_matched_pair, check_rb, check_rb_morphism, check_unified_axioms,
    crossed_product, factorize, fixtures, sample, unified_product, validate_datum, CrossedSystem, Error,
    ExtendingDatum, LieAlgebra, Matrix, RBLieAlgebra, Tensor3,
};

fn sl2_zero() -> RBLieAlgebra {
    RBLieAlgebra::with_zero_operator(LieAlgebra::sl2(), int(0))
}

#[test]
fn trivial_datum_passes_over_every_base() {
    for base in fixtures::rb_bases() {
        for m in 1..=2 {
            let d = ExtendingDatum::trivial(base.clone(), m);
            assert!(validate_datum(&d).unwrap().passed());
            assert!(check_unified_axioms(&unified_product(&d).unwrap()).passed());
        }
    }
}

#[test]
fn non_alternating_braces_fail_a() {
    let mut d = ExtendingDatum::trivial(fixtures::aff1_zero(), 2);
    d.complement_bracket.set(0, 0, 1, int(1));
    let report = validate_datum(&d).unwrap();
    assert!(report.has_failure("a"));
    assert!(!check_unified_axioms(&unified_product(&d).unwrap()).passed());
}

#[test]
fn line_extension_fixture_passes_and_has_expected_product() {
    let d = fixtures::line_extension_datum();
    assert!(validate_datum(&d).unwrap().passed());
    let u = unified_product(&d).unwrap();
    assert!(check_lie(&u.product.algebra).passed());
    assert!(check_rb(&u.product).unwrap().passed());
    let e = |i| vector::unit(3, i);
    assert_eq!(u.product.bracket(&e(0), &e(1)), e(1));
    assert_eq!(u.product.bracket(&e(0), &e(2)), vector::neg(&e(1)));
    assert_eq!(u.product.bracket(&e(1), &e(2)), vector::zeros(3));
    assert_eq!(u.product.op(&e(0)), vector::zeros(3));
    assert_eq!(u.product.op(&e(1)), vector::zeros(3));
    assert_eq!(u.product.op(&e(2)), e(0));
    assert_eq!(u.product.algebra.labels().unwrap(), ["e1", "e2", "x1"]);
}

#[test]
fn direct_sum_product() {
    let u = unified_product(&ExtendingDatum::trivial(fixtures::aff1_zero(), 1)).unwrap();
    let e = |i| vector::unit(3, i);
    assert_eq!(u.product.bracket(&e(0), &e(1)), e(1));
    assert_eq!(u.product.bracket(&e(0), &e(2)), vector::zeros(3));
    assert!(u.product.operator.is_zero());
}

#[test]
fn non_derivation_action_on_sl2_breaks_jacobi() {
    let mut d = ExtendingDatum::trivial(sl2_zero(), 1);
    let mut t = Tensor3::zeros(3, 1, 3);
    for (k, i, v) in [(0, 0, 1), (1, 2, -2), (2, 1, 1), (0, 1, 2)] {
        t.set(k, 0, i, int(v));
    }
    d.left_action = t;
    let report = validate_datum(&d).unwrap();
    assert!(report.has_failure("c"));
    let axioms = check_unified_axioms(&unified_product(&d).unwrap());
    assert!(axioms.has_failure("jacobi"));
}

#[test]
fn embedded_base_is_reproduced() {
    let mut rng = StdRng::seed_from_u64(7);
    let bases = fixtures::rb_bases();
    for _ in 0..100 {
        let base = sample::random_base(&mut rng, &bases);
        let d = sample::random_datum(&mut rng, &base, 2, 0.5);
        let u = unified_product(&d).unwrap();
        let n = base.dim();
        for i in 0..n {
            for j in 0..n {
                let mut expected = base.algebra.basis_bracket(i, j);
                expected.extend(vector::zeros(2));
                assert_eq!(u.product.algebra.basis_bracket(i, j), expected);
            }
            let mut expected = base.operator.column(i);
            expected.extend(vector::zeros(2));
            assert_eq!(u.product.operator.column(i), expected);
        }
    }
}

#[test]
fn validity_agrees_with_product_axioms() {
    let mut rng = StdRng::seed_from_u64(11);
    let bases = fixtures::rb_bases();
    let mut passing = 0;
    for trial in 0..300 {
        let base = sample::random_base(&mut rng, &bases);
        let d = if trial % 3 == 0 {
            let valid = sample::constructed_valid_data(&mut rng, 1).pop().unwrap();
            sample::perturb_datum(&mut rng, &valid)
        } else {
            sample::random_datum(&mut rng, &base, 1 + trial % 2, 0.3)
        };
        let direct = validate_datum(&d).unwrap().passed();
        let oracle = check_unified_axioms(&unified_product(&d).unwrap()).passed();
        assert_eq!(direct, oracle, "disagreement on {d:?}");
        passing += direct as usize;
    }
    assert!(passing > 0);
    for d in sample::constructed_valid_data(&mut rng, 30) {
        assert!(validate_datum(&d).unwrap().passed(), "constructed datum fails: {d:?}");
        assert!(check_unified_axioms(&unified_product(&d).unwrap()).passed());
    }
}

#[test]
fn invalid_base_is_an_input_error() {
    let d = ExtendingDatum::trivial(fixtures::aff1_identity(), 1);
    assert!(matches!(validate_datum(&d), Err(Error::InvalidInput(_))));
}

#[test]
fn shape_errors() {
    let mut d = ExtendingDatum::trivial(fixtures::aff1_zero(), 1);
    d.cocycle = Tensor3::zeros(2, 2, 1);
    assert!(matches!(validate_datum(&d), Err(Error::Shape(_))));
    assert!(matches!(unified_product(&d), Err(Error::Shape(_))));
}

fn crossed_examples() -> Vec<CrossedSystem> {
    let line = RBLieAlgebra::with_zero_operator(LieAlgebra::abelian(1), int(0));
    let mut out = vec![CrossedSystem::direct_sum(fixtures::aff1_zero(), line.clone())];
    out.push(CrossedSystem::from_datum(&fixtures::line_extension_datum()).unwrap());
    let mut bad = CrossedSystem::direct_sum(fixtures::aff1_zero(), RBLieAlgebra::with_zero_operator(LieAlgebra::abelian(2), int(0)));
    bad.cocycle.set(0, 0, 1, int(1));
    out.push(bad);
    out
}

#[test]
fn crossed_system_examples() {
    let verdicts: Vec<bool> = crossed_examples().iter().map(|s| check_crossed_system(s).unwrap().passed()).collect();
    assert_eq!(verdicts, [true, true, false]);
    assert_eq!(check_crossed_system(&crossed_examples()[2]).unwrap().failed_conditions()[0], "a");
    let u = crossed_product(&crossed_examples()[1]).unwrap();
    assert_eq!(u, unified_product(&fixtures::line_extension_datum()).unwrap());
    assert!(matches!(crossed_product(&crossed_examples()[2]), Err(Error::InvalidInput(_))));
}

#[test]
fn crossed_check_matches_datum_check_failure_for_failure() {
    let mut rng = StdRng::seed_from_u64(3);
    let bases = fixtures::rb_bases();
    let mut compared = 0;
    while compared < 150 {
        let base = sample::random_base(&mut rng, &bases);
        let mut d = sample::random_datum(&mut rng, &base, 2, 0.3);
        d.right_action = Tensor3::zeros(2, 2, base.dim());
        let system = CrossedSystem::from_datum(&d).unwrap();
        if check_rb(&system.complement).map(|r| r.passed()) != Ok(true) {
            continue;
        }
        let crossed = check_crossed_system(&system).unwrap();
        let direct = validate_datum(&d).unwrap();
        assert_eq!(crossed.failures(), direct.failures(), "{d:?}");
        compared += 1;
    }
}

#[test]
fn crossed_product_has_base_as_ideal() {
    let mut rng = StdRng::seed_from_u64(5);
    for d in sample::constructed_valid_data(&mut rng, 40) {
        if !d.right_action.is_zero() {
            continue;
        }
        let Ok(u) = crossed_product(&CrossedSystem::from_datum(&d).unwrap()) else { continue };
        let (n, dim) = (d.base_dim(), u.dim());
        for i in 0..n {
            for b in 0..dim {
                assert!(vector::is_zero(&u.product.algebra.basis_bracket(i, b)[n..]));
            }
        }
    }
}

#[test]
fn matched_pair_examples() {
    let line = RBLieAlgebra::with_zero_operator(LieAlgebra::abelian(1), int(0));
    assert!(check_matched_pair(&rbla_core::MatchedPair::trivial(sl2_zero(), line)).unwrap().passed());

    let good = fixtures::character_matched_pair([1, 0]);
    assert!(check_matched_pair(&good).unwrap().passed());
    let u = bicrossed_product(&good).unwrap();
    assert!(check_unified_axioms(&u).passed());

    let bad = fixtures::character_matched_pair([0, 1]);
    assert!(check_matched_pair(&bad).unwrap().has_failure("right-module"));
    assert!(matches!(bicrossed_product(&bad), Err(Error::InvalidInput(_))));
}

#[test]
fn factorization_examples() {
    let sum = unified_product(&ExtendingDatum::trivial(fixtures::aff1_zero(), 1)).unwrap().product;
    let pair = factorize(&sum, &[vector::unit(3, 0), vector::unit(3, 1)], &[vector::unit(3, 2)]).unwrap();
    assert!(pair.left_action.is_zero() && pair.right_action.is_zero());

    let good = fixtures::character_matched_pair([1, 0]);
    let ambient = bicrossed_product(&good).unwrap().product;
    let pair = factorize(&ambient, &[vector::unit(3, 0), vector::unit(3, 1)], &[vector::unit(3, 2)]).unwrap();
    assert_eq!(pair.right_action, good.right_action);
    assert!(pair.left_action.is_zero());

    let aff = fixtures::aff1_zero();
    let pair = factorize(&aff, &[vector::unit(2, 1)], &[vector::unit(2, 0)]).unwrap();
    assert_eq!(*pair.left_action.get(0, 0, 0), int(1));
    assert!(pair.right_action.is_zero());
    assert!(check_matched_pair(&pair).unwrap().passed());
}

#[test]
fn factorization_errors() {
    let aff = fixtures::aff1_zero();
    assert!(matches!(
        factorize(&aff, &[vector::unit(2, 1)], &[vector::unit(2, 1)]),
        Err(Error::Decomposition(_))
    ));
    let sl2 = sl2_zero();
    let e = |i| vector::unit(3, i);
    assert!(matches!(factorize(&sl2, &[e(1), e(2)], &[e(0)]), Err(Error::Closure(_))));
}

#[test]
fn bicrossed_of_factorization_is_isomorphic_to_ambient() {
    let mut ambients = vec![bicrossed_product(&fixtures::character_matched_pair([1, 0])).unwrap().product];
    for base in fixtures::rb_bases().into_iter().take(12) {
        let other = RBLieAlgebra {
            algebra: LieAlgebra::aff1(),
            weight: base.weight.clone(),
            operator: Matrix::zeros(2, 2),
        };
        let sum = CrossedSystem::direct_sum(base, other);
        ambients.push(crossed_product(&sum).unwrap().product);
    }
    for ambient in ambients {
        let dim = ambient.dim();
        let n = dim - if dim == 3 { 1 } else { 2 };
        let g: Vec<_> = (0..n).map(|i| vector::unit(dim, i)).collect();
        let h: Vec<_> = (n..dim).map(|i| vector::unit(dim, i)).collect();
        let pair = factorize(&ambient, &g, &h).unwrap();
        assert!(check_matched_pair(&pair).unwrap().passed());
        let u = bicrossed_product(&pair).unwrap();
        let phi = Matrix::identity(dim);
        assert!(check_rb_morphism(&u.product, &ambient, &phi).unwrap().passed());
    }
}

#[test]
fn skew_factorization_recombines() {
    // aff(1) ⊕ line with the line spanned by e1 + x: recombination φ is not the identity.
    let ambient = crossed_product(&CrossedSystem::direct_sum(
        fixtures::aff1_zero(),
        RBLieAlgebra::with_zero_operator(LieAlgebra::abelian(1), int(0)),
    ))
    .unwrap()
    .product;
    let g = [vector::unit(3, 0), vector::unit(3, 1)];
    let h = [vec![int(1), int(0), int(1)]];
    let pair = factorize(&ambient, &g, &h).unwrap();
    assert!(check_matched_pair(&pair).unwrap().passed());
    let u = bicrossed_product(&pair).unwrap();
    let phi = Matrix::from_columns(&[g[0].clone(), g[1].clone(), h[0].clone()], 3).unwrap();
    assert!(check_rb_morphism(&u.product, &ambient, &phi).unwrap().passed());
}
