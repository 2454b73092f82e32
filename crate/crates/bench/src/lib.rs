//! Inputs shared by the benchmarks.

use num_bigint::BigInt;

use degchrom_core::{random_tree, EvaluationPoint, Graph, LabeledTree};

/// Fixed-seed random tree, so runs compare like with like.
pub fn tree(n: usize) -> LabeledTree {
    random_tree(n, n as u64).expect("n >= 2")
}

pub fn caterpillar(spine: usize, legs: usize) -> Graph {
    let n = spine * (legs + 1);
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    for s in 0..spine {
        for l in 0..legs {
            edges.push((s, spine + s * legs + l));
        }
    }
    Graph::new(n, edges).expect("valid caterpillar")
}

/// Values of a dense degree-`n` polynomial at k = 0..=n.
pub fn dense_points(n: usize) -> Vec<EvaluationPoint> {
    (0..=n)
        .map(|k| {
            let k = BigInt::from(k);
            let y = (0..=n).fold(BigInt::from(0), |acc, i| acc * &k + (i as i64 % 7 - 3));
            EvaluationPoint::new(k, y)
        })
        .collect()
}
