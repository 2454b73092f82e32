//! Counting colorings in which no vertex has `m` or more same-colored
//! neighbors ("friends").
//!
//! Two independent engines compute the same number: an exhaustive
//! enumeration over all `k^n` colorings ([`brute_force_count`]) and a
//! polynomial-time dynamic program for trees ([`tree_dp_count`]). The
//! friend-set counters [`count_av`] and [`count_pairwise_intersection`]
//! count colorings where one or two given vertices reach the threshold.

mod oracle;
mod tree_dp;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{certify_tree, Graph, GraphError, LabeledTree};
use crate::poly::{interpolate, BigPolynomial, EvaluationPoint, PolyError};

pub use oracle::{
    brute_force_count, brute_force_count_with_budget, brute_force_profile, count_av_by_enumeration,
    count_pairwise_intersection, count_pairwise_intersection_with_budget, friend_set_table, FriendProfile,
    FriendSetTable, OracleBudget,
};
pub use tree_dp::{tree_dp_count, tree_dp_count_rooted};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("friend threshold m must be at least 1")]
    InvalidThreshold,
    #[error("enumerating {colorings} colorings exceeds the budget of {budget}")]
    BudgetExceeded { colorings: String, budget: u64 },
    #[error("coloring has {actual} entries but the graph has {expected} vertices")]
    InvalidColoring { expected: usize, actual: usize },
    #[error("color {color} at vertex {vertex} is not below k = {k}")]
    ColorOutOfRange { vertex: usize, color: u32, k: u32 },
    #[error("vertex pair must be distinct, got {0} twice")]
    SameVertex(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The friend threshold `m` and the number of colors `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ConstraintParams {
    m: usize,
    k: u32,
}

impl ConstraintParams {
    pub fn new(m: usize, k: u32) -> Result<Self, CountError> {
        if m == 0 {
            return Err(CountError::InvalidThreshold);
        }
        Ok(ConstraintParams { m, k })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn with_k(self, k: u32) -> Self {
        ConstraintParams { k, ..self }
    }
}

/// An assignment of one of `k` colors to every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, k: u32) -> Result<Self, CountError> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(CountError::ColorOutOfRange { vertex, color, k });
        }
        Ok(Coloring { colors })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }
}

/// Number of neighbors of `v` sharing its color.
pub fn friend_count(g: &Graph, c: &Coloring, v: usize) -> Result<usize, CountError> {
    if c.colors.len() != g.n() {
        return Err(CountError::InvalidColoring {
            expected: g.n(),
            actual: c.colors.len(),
        });
    }
    g.check_vertex(v)?;
    Ok(g.neighbors(v).iter().filter(|&&w| c.colors[w] == c.colors[v]).count())
}

/// Which engine produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMethod {
    Oracle,
    TreeDp,
    ClosedForm,
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Oracle => "oracle",
            CountMethod::TreeDp => "tree-dp",
            CountMethod::ClosedForm => "closed-form",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigUint,
    pub method: CountMethod,
}

/// Engine selection for [`degree_chromatic_polynomial`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// Tree DP when the graph is a tree, otherwise the oracle.
    #[default]
    Auto,
    Oracle,
    TreeDp,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Method::Auto),
            "oracle" => Ok(Method::Oracle),
            "tree-dp" => Ok(Method::TreeDp),
            other => Err(format!("unknown method `{other}` (expected auto, oracle or tree-dp)")),
        }
    }
}

/// Resolves [`Method::Auto`] against the input graph.
pub fn resolve_method(g: &Graph, method: Method) -> CountMethod {
    match method {
        Method::Oracle => CountMethod::Oracle,
        Method::TreeDp => CountMethod::TreeDp,
        Method::Auto => {
            if certify_tree(g.clone()).is_ok() {
                CountMethod::TreeDp
            } else {
                CountMethod::Oracle
            }
        }
    }
}

/// `P_m(g, k)` as a polynomial in `k`, reconstructed from exact counts at
/// `k = 0, 1, ..., n` and checked for integral coefficients.
pub fn degree_chromatic_polynomial(
    g: &Graph,
    m: usize,
    method: Method,
    budget: OracleBudget,
) -> Result<BigPolynomial, CountError> {
    let base = ConstraintParams::new(m, 0)?;
    let n = g.n();
    let node_count = u32::try_from(n).expect("vertex count fits in u32");
    let values: Vec<BigUint> = match resolve_method(g, method) {
        CountMethod::TreeDp => {
            let tree = certify_tree(g.clone())?;
            (0..=node_count)
                .map(|k| tree_dp_count(&tree, &base.with_k(k)).value)
                .collect()
        }
        _ => {
            budget.check(n, node_count)?;
            (0..=node_count)
                .map(|k| brute_force_count_with_budget(g, &base.with_k(k), budget).map(|r| r.value))
                .collect::<Result<_, _>>()?
        }
    };
    let points: Vec<EvaluationPoint> = values
        .into_iter()
        .enumerate()
        .map(|(k, y)| EvaluationPoint::new(k, BigInt::from(y)))
        .collect();
    let poly = interpolate(&points)?;
    poly.assert_integral()?;
    Ok(poly)
}

/// `|A_v|`: colorings in which `v` has at least `m` friends, by the direct
/// count `k^(n-1-d) * k * sum_{l=m}^{d} C(d, l) (k-1)^(d-l)` with
/// `d = deg(v)`.
pub fn count_av(t: &LabeledTree, v: usize, params: &ConstraintParams) -> Result<CountResult, CountError> {
    let d = t.degree(v)?;
    let n = t.n();
    let m = params.m();
    let k = BigUint::from(params.k());
    let value = if d < m || k.is_zero() {
        BigUint::zero()
    } else {
        let others = &k - BigUint::one();
        let d_big = BigUint::from(d);
        let inner = (m..=d).fold(BigUint::zero(), |acc, l| {
            acc + binomial(d_big.clone(), BigUint::from(l)) * others.pow((d - l) as u32)
        });
        k.pow((n - d) as u32) * inner
    };
    Ok(CountResult {
        value,
        method: CountMethod::ClosedForm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::certify_tree;

    fn tree(g: Graph) -> LabeledTree {
        certify_tree(g).unwrap()
    }

    fn params(m: usize, k: u32) -> ConstraintParams {
        ConstraintParams::new(m, k).unwrap()
    }

    #[test]
    fn rejects_zero_threshold() {
        assert_eq!(ConstraintParams::new(0, 3), Err(CountError::InvalidThreshold));
    }

    #[test]
    fn friend_counts() {
        let p4 = Graph::path(4);
        let same = Coloring::new(vec![0; 4], 1).unwrap();
        assert_eq!(friend_count(&p4, &same, 1).unwrap(), 2);
        let proper = Coloring::new(vec![0, 1, 0, 1], 2).unwrap();
        for v in 0..4 {
            assert_eq!(friend_count(&p4, &proper, v).unwrap(), 0);
        }
        let star = Graph::star(3);
        let c = Coloring::new(vec![0, 0, 0, 1], 2).unwrap();
        assert_eq!(friend_count(&star, &c, 0).unwrap(), 2);
    }

    #[test]
    fn friend_count_errors() {
        let p4 = Graph::path(4);
        let short = Coloring::new(vec![0; 3], 1).unwrap();
        assert_eq!(
            friend_count(&p4, &short, 0),
            Err(CountError::InvalidColoring { expected: 4, actual: 3 })
        );
        assert!(Coloring::new(vec![0, 2], 2).is_err());
    }

    #[test]
    fn count_av_examples() {
        let star = tree(Graph::star(3));
        assert_eq!(count_av(&star, 0, &params(2, 2)).unwrap().value, 8u32.into());
        let p5 = tree(Graph::path(5));
        for k in 0..6 {
            assert!(count_av(&p5, 0, &params(2, k)).unwrap().value.is_zero());
        }
        assert!(count_av(&p5, 9, &params(2, 2)).is_err());
    }

    #[test]
    fn named_polynomials() {
        let budget = OracleBudget::default();
        let p4 = Graph::path(4);
        let star = Graph::star(3);
        let cases = [
            (&p4, 2, vec![0, 1, -2, 0, 1]),
            (&star, 2, vec![0, 2, -3, 0, 1]),
            (&p4, 1, vec![0, -1, 3, -3, 1]),
            (&star, 5, vec![0, 0, 0, 0, 1]),
        ];
        for (g, m, expected) in cases {
            let expected = BigPolynomial::from_integers(expected);
            for method in [Method::Auto, Method::Oracle, Method::TreeDp] {
                assert_eq!(degree_chromatic_polynomial(g, m, method, budget).unwrap(), expected);
            }
        }
    }

    #[test]
    fn polynomial_of_non_tree_uses_oracle() {
        let c3 = Graph::cycle(3);
        assert_eq!(resolve_method(&c3, Method::Auto), CountMethod::Oracle);
        assert!(matches!(
            degree_chromatic_polynomial(&c3, 2, Method::TreeDp, OracleBudget::default()),
            Err(CountError::Graph(GraphError::NotATree(_)))
        ));
        // m = 1 on a triangle is the ordinary chromatic polynomial k(k-1)(k-2).
        assert_eq!(
            degree_chromatic_polynomial(&c3, 1, Method::Auto, OracleBudget::default()).unwrap(),
            BigPolynomial::from_integers([0, 2, -3, 1])
        );
    }

    #[test]
    fn trivial_graphs() {
        let budget = OracleBudget::default();
        assert_eq!(
            degree_chromatic_polynomial(&Graph::empty(0), 1, Method::Auto, budget).unwrap(),
            BigPolynomial::from_integers([1])
        );
        assert_eq!(
            degree_chromatic_polynomial(&Graph::empty(1), 3, Method::Auto, budget).unwrap(),
            BigPolynomial::from_integers([0, 1])
        );
    }

    #[test]
    fn oracle_polynomial_respects_budget() {
        let budget = OracleBudget::new(1000);
        assert!(matches!(
            degree_chromatic_polynomial(&Graph::path(6), 2, Method::Oracle, budget),
            Err(CountError::BudgetExceeded { .. })
        ));
        // 6^6 > 1000 would also be enumerated by auto if it were not a tree.
        assert!(degree_chromatic_polynomial(&Graph::path(6), 2, Method::Auto, budget).is_ok());
    }
}
