use valdist_core::algebra::{AffineMap, DiffPoly, OperatorFamily, OperatorSpec, UniPoly};
use valdist_core::check::gen::{self, GeneratorConfig, OperatorKind};
use valdist_core::check::{
    check_clunie_m, check_clunie_n, check_degree_identity, check_lld_entire, check_lld_mero,
    check_malmquist_consequence, check_mokhonko, generate_clunie_instance, CheckOptions, ClunieInstance, DegreeReading,
    ValenceReport, Verdict, WindowPolicy,
};
use valdist_core::scalar::int;
use valdist_core::{Error, Ladder, Poly, Prime, RatFunc};

fn p5() -> Prime {
    Prime::new(5).unwrap()
}

fn cfg(seed: u64, trials: u64, kind: OperatorKind) -> GeneratorConfig {
    let mut c = GeneratorConfig::new(seed, trials, p5());
    c.operator = kind;
    c
}

fn clunie_stream(c: &GeneratorConfig) -> Vec<Verdict> {
    (0..c.trials)
        .flat_map(|t| {
            let inst = generate_clunie_instance(c, t).unwrap();
            let ladder = c.ladder.clear_of(&inst.window_floor());
            check_clunie_m(t, &inst, &ladder, &CheckOptions::default())
                .unwrap()
                .verdicts
        })
        .collect()
}

#[test]
fn generated_clunie_instances_solve_their_equations() {
    for kind in [OperatorKind::Shift, OperatorKind::Delta] {
        let c = cfg(11, 15, kind);
        for t in 0..c.trials {
            let inst = generate_clunie_instance(&c, t).unwrap();
            assert!(inst.residual().unwrap().is_zero());
            assert!(inst.require_degree_hypothesis(DegreeReading::Total).is_ok());
        }
    }
}

#[test]
fn clunie_proximity_holds_for_both_families() {
    for kind in [OperatorKind::Shift, OperatorKind::Delta] {
        let v = clunie_stream(&cfg(12, 15, kind));
        assert_eq!(v.len(), 75);
        assert!(v.iter().all(|v| v.holds));
    }
}

#[test]
fn same_seed_same_stream() {
    let c = cfg(13, 6, OperatorKind::Delta);
    assert_eq!(clunie_stream(&c), clunie_stream(&c));
    let mut other = c.clone();
    other.seed = 14;
    assert_ne!(clunie_stream(&c), clunie_stream(&other));
}

#[test]
fn trials_do_not_depend_on_order() {
    let c = cfg(15, 6, OperatorKind::Shift);
    let forward: Vec<_> = (0..6).map(|t| generate_clunie_instance(&c, t).unwrap()).collect();
    let backward: Vec<_> = (0..6).rev().map(|t| generate_clunie_instance(&c, t).unwrap()).collect();
    assert!(forward.iter().eq(backward.iter().rev()));
}

#[test]
fn derivative_operators_are_rejected_by_clunie() {
    let c = cfg(1, 1, OperatorKind::Derivative);
    assert_eq!(
        generate_clunie_instance(&c, 0),
        Err(Error::UnsupportedOperator("derivative"))
    );
}

#[test]
fn valence_regimes() {
    let mut c = cfg(16, 10, OperatorKind::Shift);
    c.phi_in_x0 = true;
    c.constant_b = true;
    for t in 0..c.trials {
        let inst = generate_clunie_instance(&c, t).unwrap();
        let ladder = c.ladder.clear_of(&inst.window_floor());
        match check_clunie_n(t, &inst, &ladder, None, &CheckOptions::default()).unwrap() {
            ValenceReport::Asserted(checked) => assert!(checked.all_hold()),
            other => panic!("constant B must be asserted: {other:?}"),
        }
    }
    c.constant_b = false;
    for t in 0..c.trials {
        let inst = generate_clunie_instance(&c, t).unwrap();
        let ladder = c.ladder.clear_of(&inst.window_floor());
        match check_clunie_n(t, &inst, &ladder, None, &CheckOptions::default()).unwrap() {
            ValenceReport::Measured { k_star, rows, .. } => {
                assert!(k_star.is_some());
                assert_eq!(rows.len(), 5);
            }
            other => panic!("nonconstant B must be measured: {other:?}"),
        }
    }
}

/// `f = 1 + (z − 25)/(z − 30)`, `B = X − 1`, `Ω = X_1` with `X_1 = f(z + 5)`.
/// The pole of `f(z + 5)` at `25` cancels against the zero of `B(f)` there,
/// so `Φ = d_0` has no pole at `25` while `Ω` does.
#[test]
fn valence_bound_fails_when_shifted_pole_meets_zero_of_b() {
    let p = p5();
    let one = RatFunc::one();
    let f = &one + &RatFunc::new(Poly::from_ints(&[-25, 1]), Poly::from_ints(&[-30, 1])).unwrap();
    let family = OperatorFamily::new(vec![OperatorSpec::shift(AffineMap::translation(int(5)))], p).unwrap();
    let b = UniPoly::new(vec![RatFunc::constant(int(-1)), one]);
    let inst = ClunieInstance::complete(p, f, family, b, DiffPoly::var(2, 1), DiffPoly::zero(2)).unwrap();
    let d0 = RatFunc::new(Poly::from_ints(&[-45, 2]), Poly::from_ints(&[-30, 1])).unwrap();
    assert_eq!(inst.phi, DiffPoly::constant(2, d0));

    let ladder: Ladder = "0:1:1".parse().unwrap();
    let ValenceReport::Asserted(checked) = check_clunie_n(0, &inst, &ladder, None, &CheckOptions::default()).unwrap()
    else {
        panic!("constant B is the strict regime");
    };
    let v = &checked.verdicts[0];
    assert_eq!((v.lhs.clone(), v.rhs.clone()), (int(2), int(1)));
    assert!(!v.holds);

    // The proximity bound is unaffected.
    assert!(check_clunie_m(0, &inst, &ladder, &CheckOptions::default())
        .unwrap()
        .all_hold());
    // The excess is a constant offset at every larger radius, and with
    // constant B no multiple of Σ N̂(1/b_j) = 0 absorbs it.
    let far: Ladder = "3:1:3".parse().unwrap();
    let k = valdist_core::scalar::rat(1, 1);
    let ValenceReport::Asserted(c) = check_clunie_n(0, &inst, &far, Some(&k), &CheckOptions::default()).unwrap() else {
        panic!();
    };
    assert!(c.verdicts.iter().all(|v| v.lhs > v.rhs));
}

#[test]
fn malmquist_steps_hold_on_generated_instances() {
    let mut c = cfg(17, 10, OperatorKind::Delta);
    c.phi_in_x0 = true;
    for t in 0..c.trials {
        let inst = generate_clunie_instance(&c, t).unwrap();
        let ladder = c.ladder.clear_of(&inst.window_floor());
        let r = check_malmquist_consequence(t, &inst, &ladder, &CheckOptions::default()).unwrap();
        assert!(r.rearranged.all_hold());
        assert!(r.phi2.degree().is_none_or(|d| d < r.q));
        assert_eq!(r.growth.len(), 5);
    }
}

#[test]
fn mokhonko_chain_for_every_operator_kind() {
    for kind in [OperatorKind::Shift, OperatorKind::Delta, OperatorKind::Derivative] {
        let c = cfg(18, 12, kind);
        for t in 0..c.trials {
            let inst = gen::generate_mokhonko_instance(&c, t).unwrap();
            let ladder = c.ladder.clear_of(&inst.window_floor());
            let r = check_mokhonko(t, &inst, &ladder, &CheckOptions::default()).unwrap();
            assert!(r.checked.all_hold());
            assert_eq!(r.advisory.rows.len(), 5);
            let opts = CheckOptions::default();
            assert_eq!(
                check_mokhonko(t, &gen::corrupt_solution(&inst), &ladder, &opts).unwrap_err(),
                Error::NotASolution
            );
            assert_eq!(
                check_mokhonko(t, &gen::corrupt_target(&inst), &ladder, &opts).unwrap_err(),
                Error::TargetIsSolution
            );
        }
    }
}

#[test]
fn degree_identity_on_generated_instances() {
    let c = cfg(19, 40, OperatorKind::Shift);
    for t in 0..c.trials {
        let inst = gen::generate_degree_instance(&c, t).unwrap();
        let r = check_degree_identity(t, &inst).unwrap();
        assert!(r.verdicts.iter().all(|v| v.holds));
        assert_eq!(r.slope_composed, int((r.d * r.deg_f) as i64));
    }
}

#[test]
fn lipschitz_suites() {
    let c = cfg(20, 60, OperatorKind::Shift);
    for t in 0..c.trials {
        let e = gen::generate_lld_entire(&c, t);
        let r = check_lld_entire(t, c.prime, &e.f, &e.map, e.order, &e.ladder, WindowPolicy::Strict).unwrap();
        assert!(r.all_hold());
        let m = gen::generate_lld_mero(&c, t);
        let r = check_lld_mero(t, c.prime, &m.f, &m.map, m.order, &m.ladder, WindowPolicy::Strict).unwrap();
        assert!(r.all_hold());
    }
}

#[test]
fn skipped_points_are_counted_not_judged() {
    let c = cfg(21, 5, OperatorKind::Shift);
    let low: Ladder = "-4:1:6".parse().unwrap();
    for t in 0..c.trials {
        let inst = generate_clunie_instance(&c, t).unwrap();
        let strict = check_clunie_m(t, &inst, &low, &CheckOptions::default());
        let skipping = check_clunie_m(t, &inst, &low, &CheckOptions::skipping()).unwrap();
        if skipping.skipped.is_empty() {
            assert!(strict.is_ok());
        } else {
            assert!(matches!(strict, Err(Error::PreconditionWindow { .. })));
        }
        assert_eq!(skipping.verdicts.len() + skipping.skipped.len(), 6);
        assert!(skipping.all_hold());
    }
}
