//! Undirected simple graphs on dense vertex labels `0..n`, the edge-list
//! text format, and tree certification.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Deref;

use thiserror::Error;

/// Why a graph failed to certify as a tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeDefect {
    Disconnected,
    CycleFound,
    Empty,
}

impl fmt::Display for TreeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeDefect::Disconnected => f.write_str("disconnected"),
            TreeDefect::CycleFound => f.write_str("cycle found"),
            TreeDefect::Empty => f.write_str("graph has no vertices"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("not a tree: {0}")]
    NotATree(TreeDefect),
    #[error("invalid Prüfer sequence: {0}")]
    Prufer(String),
    #[error("need at least {min} vertices, got {n}")]
    TooFewVertices { n: usize, min: usize },
}

/// An undirected simple graph. Edges are stored normalized (`u < v`) and
/// sorted; adjacency lists are sorted as well.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge { u: e.0, v: e.1 });
            }
        }
        let edges: Vec<_> = seen.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adjacency })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
        }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    /// The star `K_{1,leaves}` centered at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Number of neighbors of `v`.
    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Serializes to the edge-list format with edges sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses the edge-list text format:
///
/// ```text
/// # optional comments
/// n 4
/// 0 1
/// 1 2
/// ```
///
/// Blank lines and lines whose first non-blank character is `#` are
/// ignored. Line numbers in errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let err = |message: String| GraphError::Parse { line, message };

        let Some(count) = n else {
            if tokens.len() != 2 || tokens[0] != "n" {
                return Err(err(format!("expected header `n <count>`, found `{trimmed}`")));
            }
            let count = tokens[1]
                .parse::<usize>()
                .map_err(|_| err(format!("vertex count `{}` is not a non-negative integer", tokens[1])))?;
            n = Some(count);
            continue;
        };

        if tokens.len() != 2 {
            return Err(err(format!("expected `<u> <v>`, found `{trimmed}`")));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok
                .parse::<usize>()
                .map_err(|_| err(format!("endpoint `{tok}` is not a non-negative integer")))?;
            if *slot >= count {
                return Err(err(format!("endpoint {slot} out of range for n = {count}")));
            }
        }
        let [u, v] = ends;
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(format!("duplicate edge {{{}, {}}}", u.min(v), u.max(v))));
        }
        edges.push((u, v));
    }

    let n = n.ok_or(GraphError::Parse {
        line: text.lines().count().max(1),
        message: "missing header `n <count>`".into(),
    })?;
    Graph::new(n, edges)
}

/// A graph certified connected and acyclic, with at least one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    graph: Graph,
}

impl LabeledTree {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Vertex order of a breadth-first traversal from `root`, paired with
    /// each vertex's parent (`None` for the root).
    pub fn bfs_order(&self, root: usize) -> Vec<(usize, Option<usize>)> {
        let mut order = Vec::with_capacity(self.graph.n);
        let mut visited = vec![false; self.graph.n];
        let mut queue = VecDeque::from([(root, None)]);
        visited[root] = true;
        while let Some((v, parent)) = queue.pop_front() {
            order.push((v, parent));
            for &w in self.graph.neighbors(v) {
                if !visited[w] {
                    visited[w] = true;
                    queue.push_back((w, Some(v)));
                }
            }
        }
        order
    }
}

impl Deref for LabeledTree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

impl TryFrom<Graph> for LabeledTree {
    type Error = GraphError;

    fn try_from(graph: Graph) -> Result<Self, GraphError> {
        certify_tree(graph)
    }
}

/// Certifies `g` as a tree, naming the failed property otherwise.
pub fn certify_tree(g: Graph) -> Result<LabeledTree, GraphError> {
    if g.n == 0 {
        return Err(GraphError::NotATree(TreeDefect::Empty));
    }
    // Union-find catches cycles edge by edge.
    let mut parent: Vec<usize> = (0..g.n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = g.n;
    for &(u, v) in &g.edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return Err(GraphError::NotATree(TreeDefect::CycleFound));
        }
        parent[ru] = rv;
        components -= 1;
    }
    if components != 1 {
        return Err(GraphError::NotATree(TreeDefect::Disconnected));
    }
    Ok(LabeledTree { graph: g })
}
