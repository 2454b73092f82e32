use degchrom_core::theorem::{all_pair_bounds, predicted_tail};
use degchrom_core::*;
use num_bigint::BigUint;

#[test]
fn tail_formula_holds_for_every_tree_up_to_five_vertices() {
    for n in 3..=5 {
        for t in all_labeled_trees(n) {
            for m in 2..n {
                let report = verify_tree_theorem(&t, m).unwrap();
                assert!(report.pass, "{report:?}");
                assert_eq!(report.coefficients.len(), n + 1);
            }
        }
    }
}

#[test]
fn hypothesis_range_is_decoupled_from_counting() {
    let t = certify_tree(Graph::path(5)).unwrap();
    for m in [5, 6, 9] {
        assert!(matches!(
            predicted_tail(&t, m),
            Err(TheoremError::HypothesisViolation { .. })
        ));
        assert!(matches!(
            verify_tree_theorem(&t, m),
            Err(TheoremError::HypothesisViolation { .. })
        ));
        for k in 0..6u32 {
            let count = tree_dp_count(&t, &ConstraintParams::new(m, k).unwrap());
            assert_eq!(count.value, BigUint::from(k).pow(5));
        }
    }
}

#[test]
fn second_coefficient_is_nonpositive_and_vanishes_iff_degrees_below_m() {
    for seed in 0..40 {
        let t = random_tree(20, seed).unwrap();
        for m in 2..6 {
            let tail = predicted_tail(&t, m).unwrap();
            assert!(tail.second <= 0.into());
            assert_eq!(tail.second == 0.into(), t.max_degree() < m);
        }
    }
}

#[test]
fn pairwise_bounds_hold_for_every_tree_up_to_five_vertices() {
    for n in 2..=5 {
        for t in all_labeled_trees(n) {
            for m in [2, 3] {
                for k in 1..=4 {
                    let p = ConstraintParams::new(m, k).unwrap();
                    for r in all_pair_bounds(&t, &p, OracleBudget::default()).unwrap() {
                        assert!(r.pass, "{r:?}");
                        assert_eq!(
                            r.strict_required,
                            r.case == BoundCase::Adjacent && r.a_v1 > BigUint::from(0u8)
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn campaign_scale_tree_verifies() {
    let t = random_tree(120, 77).unwrap();
    for m in [2, 3, 5] {
        assert!(verify_tree_theorem(&t, m).unwrap().pass);
    }
}
