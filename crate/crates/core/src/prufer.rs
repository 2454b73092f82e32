//! Prüfer codes: decoding, encoding, exhaustive enumeration and uniform
//! sampling of labeled trees.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{certify_tree, Graph, GraphError, LabeledTree};

/// A Prüfer code for a labeled tree on `n >= 2` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PruferSequence {
    n: usize,
    entries: Vec<usize>,
}

impl PruferSequence {
    pub fn new(n: usize, entries: Vec<usize>) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::TooFewVertices { n, min: 2 });
        }
        if entries.len() != n - 2 {
            return Err(GraphError::Prufer(format!(
                "length {} does not match n - 2 = {}",
                entries.len(),
                n - 2
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&e| e >= n) {
            return Err(GraphError::Prufer(format!("entry {bad} out of range for n = {n}")));
        }
        Ok(PruferSequence { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Decodes into the tree this sequence names.
    pub fn decode(&self) -> LabeledTree {
        let n = self.n;
        let mut remaining = vec![1usize; n];
        for &e in &self.entries {
            remaining[e] += 1;
        }
        let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &e in &self.entries {
            let Reverse(leaf) = leaves.pop().expect("a leaf always exists");
            edges.push((leaf, e));
            remaining[e] -= 1;
            if remaining[e] == 1 {
                leaves.push(Reverse(e));
            }
        }
        let Reverse(a) = leaves.pop().expect("two leaves remain");
        let Reverse(b) = leaves.pop().expect("two leaves remain");
        edges.push((a, b));
        let graph = Graph::new(n, edges).expect("decoded edges are simple");
        certify_tree(graph).expect("Prüfer decoding yields a tree")
    }
}

/// Decodes a raw sequence for a tree on `n` vertices.
pub fn tree_from_prufer(entries: &[usize], n: usize) -> Result<LabeledTree, GraphError> {
    Ok(PruferSequence::new(n, entries.to_vec())?.decode())
}

/// Encodes a tree on at least two vertices.
pub fn prufer_code(tree: &LabeledTree) -> Result<PruferSequence, GraphError> {
    let n = tree.n();
    if n < 2 {
        return Err(GraphError::TooFewVertices { n, min: 2 });
    }
    let mut degree = tree.degrees();
    let mut removed = vec![false; n];
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut entries = Vec::with_capacity(n - 2);
    while entries.len() < n - 2 {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        removed[leaf] = true;
        let parent = *tree
            .neighbors(leaf)
            .iter()
            .find(|&&w| !removed[w])
            .expect("leaf has one live neighbor");
        entries.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.push(Reverse(parent));
        }
    }
    PruferSequence::new(n, entries)
}

/// Uniformly random labeled tree on `n` vertices; a pure function of
/// `(n, seed)`.
pub fn random_tree(n: usize, seed: u64) -> Result<LabeledTree, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices { n, min: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(PruferSequence::new(n, entries)?.decode())
}

/// Iterates over all `n^(n-2)` labeled trees on `n` vertices in
/// lexicographic order of their Prüfer codes. For `n = 1` yields the single
/// vertex; for `n = 0` yields nothing.
pub fn all_labeled_trees(n: usize) -> AllLabeledTrees {
    AllLabeledTrees {
        n,
        next: match n {
            0 => None,
            1 => Some(Vec::new()),
            _ => Some(vec![0; n - 2]),
        },
    }
}

pub struct AllLabeledTrees {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Iterator for AllLabeledTrees {
    type Item = LabeledTree;

    fn next(&mut self) -> Option<LabeledTree> {
        let current = self.next.take()?;
        if self.n == 1 {
            return Some(certify_tree(Graph::empty(1)).expect("single vertex is a tree"));
        }
        let mut succ = current.clone();
        let mut advanced = false;
        for digit in succ.iter_mut() {
            *digit += 1;
            if *digit < self.n {
                advanced = true;
                break;
            }
            *digit = 0;
        }
        if advanced {
            self.next = Some(succ);
        }
        Some(
            PruferSequence::new(self.n, current)
                .expect("odometer stays in range")
                .decode(),
        )
    }
}
