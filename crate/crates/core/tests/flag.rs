use rand::rngs::StdRng;
use rand::SeedableRng;
use rbla_core::classify::DecompositionContext;
use rbla_core::exactla::{int, vector};
use rbla_core::flag::verify_exder_witness;
use rbla_core::{
    build_flag_chain, check_extended_derivation, check_rb, check_rb_morphism, check_stabilizes_between,
    check_twisted_derivation, datum_from_exder, decide_exder_equiv, exder_from_datum, fixtures, flag_extend,
    partition_exders, psi_from_witness, sample, transform_datum, unified_product, validate_datum, Error,
    ExtendedDerivation, ExtendingDatum, FlagChain, LieAlgebra, Matrix, RBLieAlgebra,
};

#[test]
fn twisted_derivation_examples() {
    let aff = LieAlgebra::aff1();
    let zero = vector::zeros(2);
    assert!(check_twisted_derivation(&aff, &zero, &Matrix::zeros(2, 2)).unwrap().passed());
    for (beta, delta) in [(1, 0), (-2, 3), (0, 5)] {
        let d = Matrix::from_i64(&[&[0, 0], &[beta, delta]]);
        assert!(check_twisted_derivation(&aff, &zero, &d).unwrap().passed());
    }
    for d in [Matrix::from_i64(&[&[1, 0], &[0, 0]]), Matrix::from_i64(&[&[0, 1], &[0, 0]])] {
        assert!(check_twisted_derivation(&aff, &zero, &d).unwrap().has_failure("twisted-leibniz"));
    }
    let report = check_twisted_derivation(&aff, &[int(0), int(1)], &Matrix::zeros(2, 2)).unwrap();
    assert_eq!(report.failed_conditions(), ["character"]);
    assert!(matches!(check_twisted_derivation(&aff, &zero, &Matrix::zeros(3, 3)), Err(Error::Shape(_))));
}

#[test]
fn extended_derivation_examples() {
    for base in fixtures::rb_bases() {
        assert!(check_extended_derivation(&ExtendedDerivation::zero(base)).unwrap().passed());
    }
    assert!(check_extended_derivation(&fixtures::line_extension_exder()).unwrap().passed());
    let x = ExtendedDerivation {
        character: vec![int(1), int(0)],
        operator_scalar: int(1),
        ..ExtendedDerivation::zero(fixtures::aff1_zero())
    };
    assert_eq!(check_extended_derivation(&x).unwrap().failed_conditions(), ["scalar"]);
    let bad_base = ExtendedDerivation::zero(fixtures::aff1_identity());
    assert!(matches!(check_extended_derivation(&bad_base), Err(Error::InvalidInput(_))));
}

#[test]
fn datum_examples() {
    let base = fixtures::aff1_zero();
    assert_eq!(datum_from_exder(&ExtendedDerivation::zero(base.clone())).unwrap(), ExtendingDatum::trivial(base.clone(), 1));
    assert_eq!(datum_from_exder(&fixtures::line_extension_exder()).unwrap(), fixtures::line_extension_datum());
    let seven = ExtendedDerivation { operator_scalar: int(7), ..ExtendedDerivation::zero(base.clone()) };
    let d = datum_from_exder(&seven).unwrap();
    assert_eq!(d.complement_operator, Matrix::scalar(1, &int(7)));
    assert!(d.right_action.is_zero() && d.left_action.is_zero() && d.mixed_operator.is_zero());

    for x in [ExtendedDerivation::zero(base.clone()), fixtures::line_extension_exder(), seven] {
        assert_eq!(exder_from_datum(&datum_from_exder(&x).unwrap()).unwrap(), x);
    }
    assert!(matches!(exder_from_datum(&ExtendingDatum::trivial(base.clone(), 2)), Err(Error::InvalidInput(_))));
    let mut with_cocycle = ExtendingDatum::trivial(base, 1);
    with_cocycle.cocycle.set(0, 0, 0, int(1));
    assert!(matches!(exder_from_datum(&with_cocycle), Err(Error::InvalidInput(_))));
}

#[test]
fn validity_transfers_both_ways() {
    let mut rng = StdRng::seed_from_u64(13);
    let mut counts = [0usize; 2];
    for base in fixtures::rb_bases() {
        for t in 0..30 {
            let x = if t % 2 == 0 {
                sample::random_valid_exder(&mut rng, &base)
            } else {
                sample::random_exder(&mut rng, &base, 0.3)
            };
            let quad = check_extended_derivation(&x).unwrap().passed();
            let datum = datum_from_exder(&x).unwrap();
            assert_eq!(quad, validate_datum(&datum).unwrap().passed(), "{x:?}");
            assert_eq!(exder_from_datum(&datum).unwrap(), x);
            counts[quad as usize] += 1;
            if t % 2 == 0 {
                assert!(quad, "generated quadruple invalid: {x:?}");
            }
        }
    }
    assert!(counts[0] > 0 && counts[1] > 0);
}

#[test]
fn decision_examples() {
    let base = fixtures::aff1_zero();
    let zero = ExtendedDerivation::zero(base.clone());
    let w = decide_exder_equiv(&zero, &zero).unwrap().unwrap();
    assert_eq!((w.shift, w.scale), (vector::zeros(2), int(1)));

    let anchored = fixtures::anchored_exder(int(1));
    assert_eq!(decide_exder_equiv(&zero, &anchored).unwrap(), None);

    for c in [0, 1, -3] {
        let inner = fixtures::inner_exder(int(c));
        let plain = fixtures::anchored_exder(int(c));
        let w = decide_exder_equiv(&inner, &plain).unwrap().unwrap();
        assert_eq!((w.shift, w.scale), (vector::unit(2, 0), int(1)));
    }

    let other_base = ExtendedDerivation::zero(fixtures::rb_bases()[0].clone());
    assert!(matches!(decide_exder_equiv(&zero, &other_base), Err(Error::InvalidInput(_))));
    let other_scalar = ExtendedDerivation { operator_scalar: int(2), ..zero.clone() };
    assert_eq!(decide_exder_equiv(&zero, &other_scalar).unwrap(), None);
}

#[test]
fn decision_properties() {
    let mut rng = StdRng::seed_from_u64(17);
    let bases = fixtures::rb_bases();
    for t in 0..150 {
        let base = sample::random_base(&mut rng, &bases);
        let x = sample::random_valid_exder(&mut rng, &base);
        let w = decide_exder_equiv(&x, &x).unwrap().expect("reflexive");
        assert!(verify_exder_witness(&x, &x, &w));

        // A transformed copy is equivalent to the original.
        let n = base.dim();
        let scale = int([1, -1, 2, 3][t % 4]);
        let shift = sample::random_vector(&mut rng, n);
        let g = ExtendingDatum::clone(&datum_from_exder(&x).unwrap());
        let wit = rbla_core::EquivalenceWitness {
            shift: Matrix::from_columns(&[shift], n).unwrap(),
            automorphism: Matrix::scalar(1, &scale),
        };
        let y = exder_from_datum(&transform_datum(&g, &wit).unwrap()).unwrap();
        assert!(check_extended_derivation(&y).unwrap().passed());
        let forward = decide_exder_equiv(&x, &y).unwrap().expect("transformed copy is equivalent");
        let backward = decide_exder_equiv(&y, &x).unwrap().expect("symmetry");
        for (a, b, w) in [(&x, &y, &forward), (&y, &x, &backward)] {
            assert!(verify_exder_witness(a, b, w));
            let ew = w.to_equivalence_witness();
            let (da, db) = (datum_from_exder(a).unwrap(), datum_from_exder(b).unwrap());
            let psi = psi_from_witness(&da, &ew).unwrap();
            let (ua, ub) = (unified_product(&da).unwrap().product, unified_product(&db).unwrap().product);
            assert!(check_rb_morphism(&ua, &ub, &psi).unwrap().passed());
            let from = DecompositionContext::canonical(ua, n).unwrap();
            let to = DecompositionContext::canonical(ub, n).unwrap();
            assert!(check_stabilizes_between(&psi, &from, &to).unwrap());
        }

        // Unrelated pairs: whatever the answer, it is consistent both ways.
        let z = sample::random_valid_exder(&mut rng, &base);
        let there = decide_exder_equiv(&x, &z).unwrap();
        let back = decide_exder_equiv(&z, &x).unwrap();
        assert_eq!(there.is_some(), back.is_some());
        if let Some(w) = there {
            assert!(verify_exder_witness(&x, &z, &w));
        }
    }
}

#[test]
fn partition_example() {
    let list = [
        ExtendedDerivation::zero(fixtures::aff1_zero()),
        fixtures::inner_exder(int(0)),
        fixtures::anchored_exder(int(1)),
    ];
    assert_eq!(partition_exders(&list).unwrap(), vec![vec![0, 1], vec![2]]);
    assert_eq!(partition_exders(&[]).unwrap(), Vec::<Vec<usize>>::new());
    let mixed = [list[0].clone(), ExtendedDerivation::zero(fixtures::rb_bases()[0].clone())];
    assert!(matches!(partition_exders(&mixed), Err(Error::InvalidInput(_))));
}

#[test]
fn flag_extend_examples() {
    let base = fixtures::aff1_zero();
    let e = flag_extend(&ExtendedDerivation::zero(base.clone())).unwrap();
    assert_eq!(e, unified_product(&ExtendingDatum::trivial(base.clone(), 1)).unwrap().product);
    let e = flag_extend(&fixtures::line_extension_exder()).unwrap();
    assert_eq!(e, unified_product(&fixtures::line_extension_datum()).unwrap().product);
    assert_eq!(e.op(&vector::unit(3, 2)), vector::unit(3, 0));
    let bad = ExtendedDerivation { character: vec![int(0), int(1)], ..ExtendedDerivation::zero(base) };
    assert!(matches!(flag_extend(&bad), Err(Error::InvalidInput(_))));
}

#[test]
fn chains() {
    let base = fixtures::aff1_zero();
    let mut chain = FlagChain::new(base.clone()).unwrap();
    chain.push(ExtendedDerivation::zero(base.clone())).unwrap();
    chain.push(ExtendedDerivation::zero(chain.top().clone())).unwrap();
    assert_eq!(chain.top().dim(), 4);
    assert!(check_rb(chain.top()).unwrap().passed());
    assert_eq!(chain.algebras().len(), 3);

    let mut rng = StdRng::seed_from_u64(19);
    for start in fixtures::rb_bases().into_iter().step_by(3) {
        let mut steps = Vec::new();
        let mut current = start.clone();
        for _ in 0..2 {
            let x = sample::random_valid_exder(&mut rng, &current);
            current = flag_extend(&x).unwrap();
            steps.push(x);
        }
        let chain = build_flag_chain(start.clone(), steps).unwrap();
        for (k, pair) in chain.algebras().windows(2).enumerate() {
            assert_eq!(pair[1].dim(), pair[0].dim() + 1, "step {k}");
            let n = pair[0].dim();
            let mut restricted = RBLieAlgebra::clone(&pair[1]);
            let ctx = DecompositionContext::canonical(restricted.clone(), n).unwrap();
            restricted = ctx.subalgebra().unwrap();
            assert_eq!(restricted, pair[0]);
        }
    }

    let stale = vec![ExtendedDerivation::zero(base.clone()), ExtendedDerivation::zero(base.clone())];
    let err = build_flag_chain(base.clone(), stale).unwrap_err();
    assert!(err.to_string().contains("step 1"), "{err}");
    let mut chain = FlagChain::new(base).unwrap();
    let err = chain
        .push_parts(vec![int(0), int(1)], Matrix::zeros(2, 2), vector::zeros(2), int(0))
        .unwrap_err();
    assert!(err.to_string().contains("step 0") && err.to_string().contains("character"), "{err}");
}
