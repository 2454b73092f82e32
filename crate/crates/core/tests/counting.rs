mod common;

use common::{all_graphs, friend_histograms, naive_count, naive_count_permuted};
use degchrom_core::counting::{brute_force_profile, count_av_by_enumeration, tree_dp_count_rooted};
use degchrom_core::*;
use num_bigint::{BigInt, BigUint};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params(m: usize, k: u32) -> ConstraintParams {
    ConstraintParams::new(m, k).unwrap()
}

fn oracle(g: &Graph, m: usize, k: u32) -> u64 {
    u64::try_from(brute_force_count(g, &params(m, k)).unwrap().value).unwrap()
}

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Graph::new(n, edges).unwrap()
}

#[test]
fn oracle_matches_naive_enumeration_on_all_small_graphs() {
    for n in 0..=4 {
        for g in all_graphs(n) {
            for m in 1..=n.max(1) {
                for k in 0..=3 {
                    assert_eq!(oracle(&g, m, k), naive_count(&g, m, k), "{g:?} m={m} k={k}");
                }
            }
        }
    }
}

#[test]
fn counts_are_invariant_under_color_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(n, &mut rng);
        let k = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=n);
        let mut perm: Vec<u32> = (0..k).collect();
        perm.shuffle(&mut rng);
        assert_eq!(oracle(&g, m, k), naive_count_permuted(&g, m, k, &perm));
    }
}

#[test]
fn tree_dp_matches_oracle_for_small_trees() {
    for n in 1..=5 {
        for t in all_labeled_trees(n) {
            let profiles: Vec<_> = (0..=n as u32 + 1)
                .map(|k| brute_force_profile(&t, k, OracleBudget::default()).unwrap())
                .collect();
            for m in 1..=n {
                for (k, profile) in profiles.iter().enumerate() {
                    let dp = tree_dp_count(&t, &params(m, k as u32));
                    assert_eq!(dp.method, CountMethod::TreeDp);
                    assert_eq!(dp.value, BigUint::from(profile.admissible(m)), "{t:?} m={m} k={k}");
                }
            }
        }
    }
}

#[test]
fn tree_dp_is_root_invariant() {
    for seed in 0..20 {
        let t = random_tree(12, seed).unwrap();
        for m in 1..=4 {
            let p = params(m, 5);
            let base = tree_dp_count(&t, &p).value;
            for root in 0..12 {
                assert_eq!(tree_dp_count_rooted(&t, &p, root).value, base);
            }
        }
    }
}

fn check_polynomial_consistency(g: &Graph) {
    let n = g.n();
    for m in 1..=n.max(1) {
        let poly = degree_chromatic_polynomial(g, m, Method::Auto, OracleBudget::default()).unwrap();
        assert_eq!(poly.degree(), Some(n), "{g:?} m={m}");
        for k in 0..=n as u32 + 2 {
            let expected = BigInt::from(oracle(g, m, k));
            assert_eq!(poly.evaluate(&k.into()).to_integer(), expected, "{g:?} m={m} k={k}");
            assert!(poly.evaluate(&k.into()).is_integer());
        }
    }
}

#[test]
fn polynomial_reproduces_oracle_beyond_nodes_exhaustive_up_to_five() {
    for n in 0..=5 {
        for g in all_graphs(n) {
            check_polynomial_consistency(&g);
        }
    }
}

#[test]
fn polynomial_reproduces_oracle_beyond_nodes_sampled_six() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..60 {
        check_polynomial_consistency(&random_graph(6, &mut rng));
    }
}

#[test]
fn monotone_and_saturating_in_m() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..30 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(n, &mut rng);
        for k in 0..=4u32 {
            let all = u64::from(k).pow(n as u32);
            let counts: Vec<u64> = (1..=n + 1).map(|m| oracle(&g, m, k)).collect();
            assert!(counts.windows(2).all(|w| w[0] <= w[1]));
            assert!(counts.iter().all(|&c| c <= all));
            for m in g.max_degree() + 1..=n + 1 {
                assert_eq!(oracle(&g, m, k), all);
            }
        }
    }
}

#[test]
fn zero_and_one_color() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..30 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(n, &mut rng);
        for m in 1..=n {
            assert_eq!(oracle(&g, m, 0), 0);
            assert_eq!(oracle(&g, m, 1), u64::from(g.max_degree() < m));
            let poly = degree_chromatic_polynomial(&g, m, Method::Oracle, OracleBudget::default()).unwrap();
            assert!(poly.coefficient(0) == num_rational::BigRational::from_integer(0.into()));
        }
    }
}

#[test]
fn count_av_matches_naive_histograms() {
    for n in 1..=5 {
        for t in all_labeled_trees(n) {
            for k in 0..=5u32 {
                let hist = friend_histograms(&t, k);
                for (v, row) in hist.iter().enumerate() {
                    for m in 1..=n {
                        let expected: u64 = row.iter().skip(m).sum();
                        let closed = count_av(&t, v, &params(m, k)).unwrap();
                        assert_eq!(closed.value, BigUint::from(expected), "{t:?} v={v} m={m} k={k}");
                    }
                }
            }
        }
    }
}

#[test]
fn count_av_enumeration_matches_closed_form_on_larger_trees() {
    for seed in 0..5 {
        let t = random_tree(8, seed).unwrap();
        for v in 0..8 {
            for m in 1..=3 {
                let p = params(m, 3);
                assert_eq!(
                    count_av(&t, v, &p).unwrap().value,
                    count_av_by_enumeration(&t, v, &p, OracleBudget::default())
                        .unwrap()
                        .value
                );
            }
        }
    }
}

#[test]
fn pairwise_intersection_is_symmetric_and_below_singles() {
    let t = random_tree(7, 9).unwrap();
    for v1 in 0..7 {
        for v2 in 0..7 {
            if v1 == v2 {
                continue;
            }
            let p = params(2, 3);
            let both = count_pairwise_intersection(&t, v1, v2, &p).unwrap().value;
            assert_eq!(both, count_pairwise_intersection(&t, v2, v1, &p).unwrap().value);
            assert!(both <= count_av(&t, v1, &p).unwrap().value);
        }
    }
}
