//! Exhaustive enumeration of all `k^n` colorings.
//!
//! Colorings are walked in mixed-radix order with vertex 0 as the fastest
//! digit, keeping every vertex's friend count up to date as single digits
//! change. The color of the last vertex splits the walk into `k` disjoint
//! ranges that run on the rayon pool; all accumulators are merged with an
//! associative sum, so results do not depend on the worker count.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::{ConstraintParams, CountError, CountMethod, CountResult};
use crate::graph::{Graph, LabeledTree};

/// Upper bound on the number of colorings the oracle will enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    max_colorings: u64,
}

impl OracleBudget {
    pub const DEFAULT_MAX_COLORINGS: u64 = 1 << 30;

    pub fn new(max_colorings: u64) -> Self {
        OracleBudget { max_colorings }
    }

    pub fn unlimited() -> Self {
        OracleBudget {
            max_colorings: u64::MAX,
        }
    }

    pub fn max_colorings(&self) -> u64 {
        self.max_colorings
    }

    /// Fails if `k^n` colorings exceed the budget.
    pub fn check(&self, n: usize, k: u32) -> Result<u64, CountError> {
        let total = u32::try_from(n).ok().and_then(|n| u128::from(k).checked_pow(n));
        match total {
            Some(t) if t <= u128::from(self.max_colorings) => Ok(t as u64),
            Some(t) => Err(CountError::BudgetExceeded {
                colorings: t.to_string(),
                budget: self.max_colorings,
            }),
            None => Err(CountError::BudgetExceeded {
                colorings: format!("{k}^{n}"),
                budget: self.max_colorings,
            }),
        }
    }
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget::new(Self::DEFAULT_MAX_COLORINGS)
    }
}

/// Mixed-radix walk over colorings with incrementally maintained friend
/// counts.
struct Walker<'g> {
    g: &'g Graph,
    k: u32,
    colors: Vec<u32>,
    friends: Vec<u32>,
}

impl<'g> Walker<'g> {
    fn new(g: &'g Graph, k: u32, last_color: u32) -> Self {
        let n = g.n();
        let mut colors = vec![0; n];
        colors[n - 1] = last_color;
        let friends = (0..n)
            .map(|v| g.neighbors(v).iter().filter(|&&w| colors[w] == colors[v]).count() as u32)
            .collect();
        Walker { g, k, colors, friends }
    }

    fn recolor(&mut self, u: usize, to: u32) {
        let from = self.colors[u];
        if from == to {
            return;
        }
        for &w in self.g.neighbors(u) {
            let cw = self.colors[w];
            if cw == from {
                self.friends[w] -= 1;
                self.friends[u] -= 1;
            } else if cw == to {
                self.friends[w] += 1;
                self.friends[u] += 1;
            }
        }
        self.colors[u] = to;
    }

    /// Moves to the next coloring with the same last-vertex color; false
    /// once the range is exhausted.
    fn advance(&mut self) -> bool {
        let last = self.colors.len() - 1;
        for u in 0..last {
            let c = self.colors[u] + 1;
            if c < self.k {
                self.recolor(u, c);
                return true;
            }
            self.recolor(u, 0);
        }
        false
    }
}

/// Folds `visit(acc, colors, friends)` over every coloring of `g` with `k`
/// colors.
fn fold_colorings<A, I, V, M>(
    g: &Graph,
    k: u32,
    budget: OracleBudget,
    init: I,
    visit: V,
    merge: M,
) -> Result<A, CountError>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[u32], &[u32]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    budget.check(g.n(), k)?;
    if g.n() == 0 {
        let mut acc = init();
        visit(&mut acc, &[], &[]);
        return Ok(acc);
    }
    Ok((0..k)
        .into_par_iter()
        .map(|last_color| {
            let mut acc = init();
            let mut walker = Walker::new(g, k, last_color);
            loop {
                visit(&mut acc, &walker.colors, &walker.friends);
                if !walker.advance() {
                    break;
                }
            }
            acc
        })
        .reduce(&init, merge))
}

/// Histogram of colorings by their largest friend count. A coloring is
/// admissible for threshold `m` exactly when its largest friend count is
/// below `m`, so one enumeration answers every `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriendProfile {
    by_max_friends: Vec<u64>,
}

impl FriendProfile {
    /// Colorings in which every vertex has fewer than `m` friends.
    pub fn admissible(&self, m: usize) -> u64 {
        self.by_max_friends.iter().take(m).sum()
    }

    /// Number of colorings whose largest friend count equals `j`.
    pub fn with_max_friends(&self, j: usize) -> u64 {
        self.by_max_friends.get(j).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.by_max_friends.iter().sum()
    }
}

/// Enumerates all colorings once and buckets them by largest friend count.
pub fn brute_force_profile(g: &Graph, k: u32, budget: OracleBudget) -> Result<FriendProfile, CountError> {
    let buckets = g.max_degree() + 1;
    let by_max_friends = fold_colorings(
        g,
        k,
        budget,
        || vec![0u64; buckets],
        |hist, _, friends| {
            let max = friends.iter().copied().max().unwrap_or(0) as usize;
            hist[max] += 1;
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )?;
    Ok(FriendProfile { by_max_friends })
}

/// Exact number of colorings in which every vertex has fewer than `m`
/// friends, by enumeration under the default budget.
pub fn brute_force_count(g: &Graph, params: &ConstraintParams) -> Result<CountResult, CountError> {
    brute_force_count_with_budget(g, params, OracleBudget::default())
}

pub fn brute_force_count_with_budget(
    g: &Graph,
    params: &ConstraintParams,
    budget: OracleBudget,
) -> Result<CountResult, CountError> {
    let profile = brute_force_profile(g, params.k(), budget)?;
    Ok(CountResult {
        value: profile.admissible(params.m()).into(),
        method: CountMethod::Oracle,
    })
}

/// `|A_v|` by enumeration: colorings where `v` has at least `m` friends.
pub fn count_av_by_enumeration(
    g: &Graph,
    v: usize,
    params: &ConstraintParams,
    budget: OracleBudget,
) -> Result<CountResult, CountError> {
    g.check_vertex(v)?;
    let m = params.m() as u32;
    let value = fold_colorings(
        g,
        params.k(),
        budget,
        || 0u64,
        |acc, _, friends| *acc += u64::from(friends[v] >= m),
        |a, b| a + b,
    )?;
    Ok(CountResult {
        value: value.into(),
        method: CountMethod::Oracle,
    })
}

/// `|A_{v1} ∩ A_{v2}|` by enumeration under the default budget.
pub fn count_pairwise_intersection(
    t: &LabeledTree,
    v1: usize,
    v2: usize,
    params: &ConstraintParams,
) -> Result<CountResult, CountError> {
    count_pairwise_intersection_with_budget(t, v1, v2, params, OracleBudget::default())
}

pub fn count_pairwise_intersection_with_budget(
    t: &LabeledTree,
    v1: usize,
    v2: usize,
    params: &ConstraintParams,
    budget: OracleBudget,
) -> Result<CountResult, CountError> {
    t.check_vertex(v1)?;
    t.check_vertex(v2)?;
    if v1 == v2 {
        return Err(CountError::SameVertex(v1));
    }
    let m = params.m() as u32;
    let value = fold_colorings(
        t.graph(),
        params.k(),
        budget,
        || 0u64,
        |acc, _, friends| *acc += u64::from(friends[v1] >= m && friends[v2] >= m),
        |a, b| a + b,
    )?;
    Ok(CountResult {
        value: value.into(),
        method: CountMethod::Oracle,
    })
}

/// `|A_v|` for every vertex and `|A_v ∩ A_w|` for every pair, from a single
/// enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FriendSetTable {
    n: usize,
    single: Vec<u64>,
    pairs: Vec<u64>,
}

impl FriendSetTable {
    pub fn single(&self, v: usize) -> BigUint {
        self.single[v].into()
    }

    /// Symmetric in its arguments; `pair(v, v)` equals `single(v)`.
    pub fn pair(&self, v: usize, w: usize) -> BigUint {
        self.pairs[v * self.n + w].into()
    }
}

pub fn friend_set_table(
    g: &Graph,
    params: &ConstraintParams,
    budget: OracleBudget,
) -> Result<FriendSetTable, CountError> {
    let n = g.n();
    let m = params.m() as u32;
    let (single, pairs) = fold_colorings(
        g,
        params.k(),
        budget,
        || (vec![0u64; n], vec![0u64; n * n]),
        |(single, pairs), _, friends| {
            let hit: Vec<usize> = (0..n).filter(|&v| friends[v] >= m).collect();
            for &v in &hit {
                single[v] += 1;
                for &w in &hit {
                    pairs[v * n + w] += 1;
                }
            }
        },
        |(mut s1, mut p1), (s2, p2)| {
            s1.iter_mut().zip(s2).for_each(|(a, b)| *a += b);
            p1.iter_mut().zip(p2).for_each(|(a, b)| *a += b);
            (s1, p1)
        },
    )?;
    Ok(FriendSetTable { n, single, pairs })
}
