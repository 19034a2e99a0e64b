use resloc::engine::{
    candidate_configs, check_rank, direct_invariant, FitError, InvariantEngine, SurfaceTopology,
};
use resloc::hilb::DEFAULT_SEED;
use resloc::toric::{euler_characteristic, h2_vanishes};

/// Evaluation through the fitted polynomials agrees with localization on
/// every connected configuration of the sweep with `h^2(L) = 0`.
#[test]
fn fitted_evaluation_reproduces_direct_values() {
    let engine = InvariantEngine::new(DEFAULT_SEED, None);
    let mut checked = 0;
    for b in candidate_configs().iter().filter(|b| b.surface().components().len() == 1 && h2_vanishes(b)).take(60) {
        let chi = euler_characteristic(b);
        let topo = SurfaceTopology::of_bundle(b);
        for n in 0..=2u32 {
            for k in 0..=(2 - n.min(2)) as i64 {
                let m = chi - 1 - k;
                let direct = direct_invariant(b.surface(), b, n, m, DEFAULT_SEED).unwrap();
                assert_eq!(engine.evaluate_theorem1(&topo, n, m).unwrap(), direct, "{} n={n} m={m}", b.describe());
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn connected_training_sets_are_rank_deficient_at_degree_two() {
    let connected: Vec<_> = candidate_configs().into_iter().filter(|b| b.surface().components().len() == 1).collect();
    check_rank(1, &connected).unwrap_err();
    match check_rank(2, &connected) {
        Err(FitError::RankDeficient { rank, required, kernel }) => {
            assert_eq!(required, 15);
            assert!(rank < 15);
            assert!(!kernel.is_empty());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn specialization_seed_does_not_change_values() {
    for b in candidate_configs().iter().step_by(7).take(12) {
        let chi = euler_characteristic(b);
        let a = direct_invariant(b.surface(), b, 2, chi - 1, 1).unwrap();
        let c = direct_invariant(b.surface(), b, 2, chi - 1, 123_456).unwrap();
        assert_eq!(a, c, "{}", b.describe());
    }
}
