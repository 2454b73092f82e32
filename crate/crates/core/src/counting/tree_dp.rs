//! Counting admissible colorings of a tree in `O(n * m)` big-integer
//! operations.
//!
//! Rooted at `r`, each vertex `v` carries two counts over colorings of its
//! subtree with `v`'s color fixed and every descendant admissible:
//!
//! * `a(v)`: `v` has at most `m - 1` same-colored children,
//! * `b(v)`: `v` has at most `m - 2` same-colored children, leaving room
//!   for a same-colored parent.
//!
//! A child `c` either shares `v`'s color (contributing `b(c)` and one
//! friend) or takes one of the other `k - 1` colors (contributing
//! `a(c)`). Multiplying `b(c) x + (k - 1) a(c)` over the children, with
//! `x` marking friends and truncated above `x^(m-1)`, gives `a(v)` and
//! `b(v)` as prefix sums of coefficients.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{ConstraintParams, CountMethod, CountResult};
use crate::graph::LabeledTree;

/// Admissible colorings of `t`, rooted at vertex 0.
pub fn tree_dp_count(t: &LabeledTree, params: &ConstraintParams) -> CountResult {
    tree_dp_count_rooted(t, params, 0)
}

/// Same count with an explicit root; the result does not depend on it.
pub fn tree_dp_count_rooted(t: &LabeledTree, params: &ConstraintParams, root: usize) -> CountResult {
    assert!(root < t.n(), "root {root} out of range");
    let result = |value| CountResult {
        value,
        method: CountMethod::TreeDp,
    };
    if params.k() == 0 {
        return result(BigUint::zero());
    }
    let m = params.m();
    let k = BigUint::from(params.k());
    let others = &k - BigUint::one();

    let order = t.bfs_order(root);
    let mut a = vec![BigUint::zero(); t.n()];
    let mut b = vec![BigUint::zero(); t.n()];
    let mut markers: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]; t.n()];

    for &(v, parent) in order.iter().rev() {
        let poly = std::mem::take(&mut markers[v]);
        a[v] = poly.iter().sum();
        b[v] = poly.iter().take(m - 1).sum();
        if let Some(p) = parent {
            let different = &others * &a[v];
            let acc = &mut markers[p];
            if acc.len() < m {
                acc.push(BigUint::zero());
            }
            for j in (0..acc.len()).rev() {
                let mut next = &acc[j] * &different;
                if j > 0 {
                    next += &acc[j - 1] * &b[v];
                }
                acc[j] = next;
            }
        }
    }
    result(k * &a[root])
}
