//! Checks of the leading-term formula for trees,
//!
//! ```text
//! P_m(T, k) = k^n - sum_v C(deg v, m) k^(n-m) + (terms of degree below n - m),
//! ```
//!
//! valid for `1 < m < n`, together with the two pairwise-intersection
//! bounds that make `|A_v1 ∩ A_v2|` negligible against `k^(n-m)`.
//!
//! Coefficients below `k^(n-m)` are reported but never checked.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::counting::{
    count_av, count_pairwise_intersection_with_budget, degree_chromatic_polynomial, friend_set_table, ConstraintParams,
    CountError, Method, OracleBudget,
};
use crate::graph::LabeledTree;
use crate::poly::BigPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("the tail formula needs 1 < m < n, got m = {m}, n = {n}")]
    HypothesisViolation { m: usize, n: usize },
    #[error("vertices {v1} and {v2} are adjacent; use the adjacent-pair bound")]
    AdjacentPair { v1: usize, v2: usize },
    #[error("vertices {v1} and {v2} are not adjacent; use the non-adjacent-pair bound")]
    NotAdjacent { v1: usize, v2: usize },
    #[error("the adjacent-pair bound needs m >= 2, got m = {0}")]
    ThresholdTooSmall(usize),
    #[error("bound checks need at least one color")]
    NoColors,
    #[error(transparent)]
    Count(#[from] CountError),
}

impl From<crate::graph::GraphError> for TheoremError {
    fn from(e: crate::graph::GraphError) -> Self {
        TheoremError::Count(e.into())
    }
}

/// The top of `P_m(T, k)` as the formula predicts it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedTail {
    pub n: usize,
    pub m: usize,
    /// Coefficient of `k^n`; always 1.
    pub top: BigInt,
    /// Powers `n-1, ..., n-m+1`, all expected to vanish.
    pub zeros: Vec<usize>,
    /// Coefficient of `k^(n-m)`: `-sum_v C(deg v, m)`.
    pub second: BigInt,
}

pub fn predicted_tail(t: &LabeledTree, m: usize) -> Result<PredictedTail, TheoremError> {
    let n = t.n();
    if m <= 1 || m >= n {
        return Err(TheoremError::HypothesisViolation { m, n });
    }
    let m_big = BigInt::from(m);
    let sum: BigInt = t
        .degrees()
        .into_iter()
        .filter(|&d| d >= m)
        .map(|d| binomial(BigInt::from(d), m_big.clone()))
        .sum();
    Ok(PredictedTail {
        n,
        m,
        top: BigInt::one(),
        zeros: (n - m + 1..n).rev().collect(),
        second: -sum,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TailChecks {
    /// Degree is exactly `n` with leading coefficient 1.
    pub monic: bool,
    /// Coefficients of `k^(n-1)` down to `k^(n-m+1)` are zero.
    pub zero_band: bool,
    /// Coefficient of `k^(n-m)` matches the prediction.
    pub second_coefficient: bool,
}

impl TailChecks {
    pub fn all(&self) -> bool {
        self.monic && self.zero_band && self.second_coefficient
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    /// Free-form description of the tree; defaults to its edge list.
    pub tree: String,
    pub n: usize,
    pub m: usize,
    pub coefficients: Vec<BigInt>,
    pub expected: PredictedTail,
    pub second_actual: BigInt,
    pub checks: TailChecks,
    pub elapsed: Duration,
    pub pass: bool,
}

impl VerificationReport {
    pub fn polynomial(&self) -> BigPolynomial {
        BigPolynomial::from_integers(self.coefficients.iter().cloned())
    }
}

/// Compares the tail of the exact polynomial (tree DP plus interpolation)
/// against [`predicted_tail`].
pub fn verify_tree_theorem(t: &LabeledTree, m: usize) -> Result<VerificationReport, TheoremError> {
    let start = Instant::now();
    let expected = predicted_tail(t, m)?;
    let n = t.n();
    let poly = degree_chromatic_polynomial(t.graph(), m, Method::TreeDp, OracleBudget::default())?;
    let coefficients = poly.assert_integral().map_err(CountError::from)?;
    let coeff = |p: usize| coefficients.get(p).cloned().unwrap_or_else(BigInt::zero);

    let second_actual = coeff(n - m);
    let checks = TailChecks {
        monic: poly.degree() == Some(n) && coeff(n) == expected.top,
        zero_band: expected.zeros.iter().all(|&p| coeff(p).is_zero()),
        second_coefficient: second_actual == expected.second,
    };
    let tree = t
        .edges()
        .iter()
        .map(|(u, v)| format!("{u}-{v}"))
        .collect::<Vec<_>>()
        .join(" ");
    Ok(VerificationReport {
        tree,
        n,
        m,
        coefficients,
        expected,
        second_actual,
        pass: checks.all(),
        checks,
        elapsed: start.elapsed(),
    })
}

/// Which inequality a [`BoundReport`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundCase {
    /// `v1`, `v2` not adjacent: `|A_v1 ∩ A_v2| <= (|A_v1| / k) * floor(deg v2 / m)`.
    NonAdjacent,
    /// `v1`, `v2` adjacent: `|A_v1 ∩ A_v2| <= |A_v1| * 2^|W| / k`, where `W` is
    /// the neighbors of `v2` other than `v1`; strict when `A_v1` is nonempty.
    Adjacent,
}

impl BoundCase {
    pub fn tag(&self) -> &'static str {
        match self {
            BoundCase::NonAdjacent => "case1",
            BoundCase::Adjacent => "case2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub v1: usize,
    pub v2: usize,
    pub case: BoundCase,
    pub m: usize,
    pub k: u32,
    /// `|W| = deg(v2) - 1`, recorded for adjacent pairs.
    pub w_size: Option<usize>,
    /// `|A_v1 ∩ A_v2|`.
    pub measured: BigUint,
    /// `|A_v1|`.
    pub a_v1: BigUint,
    pub bound: BigRational,
    /// `bound - measured`.
    pub slack: BigRational,
    pub strict_required: bool,
    pub strict_holds: bool,
    pub pass: bool,
}

fn bound_report(
    t: &LabeledTree,
    v1: usize,
    v2: usize,
    params: &ConstraintParams,
    a_v1: BigUint,
    measured: BigUint,
) -> BoundReport {
    let k = BigInt::from(params.k());
    let d2 = t.neighbors(v2).len();
    let (case, w_size, factor) = if t.is_adjacent(v1, v2) {
        let w = d2 - 1;
        (BoundCase::Adjacent, Some(w), BigInt::one() << w)
    } else {
        (BoundCase::NonAdjacent, None, BigInt::from(d2 / params.m()))
    };
    let bound = BigRational::new(BigInt::from(a_v1.clone()) * factor, k);
    let measured_q = BigRational::from_integer(BigInt::from(measured.clone()));
    let slack = &bound - &measured_q;
    let strict_required = case == BoundCase::Adjacent && !a_v1.is_zero();
    let strict_holds = slack > BigRational::zero();
    let pass = slack >= BigRational::zero() && (!strict_required || strict_holds);
    BoundReport {
        v1,
        v2,
        case,
        m: params.m(),
        k: params.k(),
        w_size,
        measured,
        a_v1,
        bound,
        slack,
        strict_required,
        strict_holds,
        pass,
    }
}

fn check_pair(t: &LabeledTree, v1: usize, v2: usize, params: &ConstraintParams) -> Result<(), TheoremError> {
    t.check_vertex(v1)?;
    t.check_vertex(v2)?;
    if v1 == v2 {
        return Err(CountError::SameVertex(v1).into());
    }
    if params.k() == 0 {
        return Err(TheoremError::NoColors);
    }
    Ok(())
}

/// Non-adjacent pair bound, with `|A_v1 ∩ A_v2|` counted by enumeration.
pub fn case1_bound_check(
    t: &LabeledTree,
    v1: usize,
    v2: usize,
    params: &ConstraintParams,
    budget: OracleBudget,
) -> Result<BoundReport, TheoremError> {
    check_pair(t, v1, v2, params)?;
    if t.is_adjacent(v1, v2) {
        return Err(TheoremError::AdjacentPair { v1, v2 });
    }
    let measured = count_pairwise_intersection_with_budget(t, v1, v2, params, budget)?.value;
    let a_v1 = count_av(t, v1, params)?.value;
    Ok(bound_report(t, v1, v2, params, a_v1, measured))
}

/// Adjacent pair bound, with `|A_v1 ∩ A_v2|` counted by enumeration.
pub fn case2_bound_check(
    t: &LabeledTree,
    v1: usize,
    v2: usize,
    params: &ConstraintParams,
    budget: OracleBudget,
) -> Result<BoundReport, TheoremError> {
    check_pair(t, v1, v2, params)?;
    if !t.is_adjacent(v1, v2) {
        return Err(TheoremError::NotAdjacent { v1, v2 });
    }
    if params.m() < 2 {
        return Err(TheoremError::ThresholdTooSmall(params.m()));
    }
    let measured = count_pairwise_intersection_with_budget(t, v1, v2, params, budget)?.value;
    let a_v1 = count_av(t, v1, params)?.value;
    Ok(bound_report(t, v1, v2, params, a_v1, measured))
}

/// The applicable bound for every ordered pair of distinct vertices, from
/// one enumeration of all colorings. Ordered by `(v1, v2)`.
pub fn all_pair_bounds(
    t: &LabeledTree,
    params: &ConstraintParams,
    budget: OracleBudget,
) -> Result<Vec<BoundReport>, TheoremError> {
    if params.k() == 0 {
        return Err(TheoremError::NoColors);
    }
    if params.m() < 2 {
        return Err(TheoremError::ThresholdTooSmall(params.m()));
    }
    let table = friend_set_table(t.graph(), params, budget)?;
    let n = t.n();
    let mut reports = Vec::with_capacity(n * n.saturating_sub(1));
    for v1 in 0..n {
        let a_v1 = count_av(t, v1, params)?.value;
        for v2 in (0..n).filter(|&v2| v2 != v1) {
            reports.push(bound_report(t, v1, v2, params, a_v1.clone(), table.pair(v1, v2)));
        }
    }
    Ok(reports)
}
