//! Exact computation of degree chromatic polynomials `P_m(G, k)`: the
//! number of `k`-colorings of `G` in which no vertex has `m` or more
//! neighbors of its own color.
//!
//! * [`graph`]: graphs, trees and the edge-list format.
//! * [`prufer`]: labeled-tree enumeration and sampling.
//! * [`poly`]: exact rational polynomials and interpolation.
//! * [`counting`]: the enumeration oracle, the tree DP and friend-set counts.
//! * [`theorem`]: leading-term checks for trees and pairwise bounds.

pub mod counting;
pub mod graph;
pub mod poly;
pub mod prufer;
pub mod theorem;

pub use counting::{
    brute_force_count, count_av, count_pairwise_intersection, degree_chromatic_polynomial, friend_count, tree_dp_count,
    Coloring, ConstraintParams, CountError, CountMethod, CountResult, Method, OracleBudget,
};
pub use graph::{certify_tree, parse_edge_list, Graph, GraphError, LabeledTree, TreeDefect};
pub use poly::{interpolate, BigPolynomial, EvaluationPoint, PolyError};
pub use prufer::{all_labeled_trees, prufer_code, random_tree, tree_from_prufer, PruferSequence};
pub use theorem::{
    case1_bound_check, case2_bound_check, predicted_tail, verify_tree_theorem, BoundCase, BoundReport, PredictedTail,
    TheoremError, VerificationReport,
};
