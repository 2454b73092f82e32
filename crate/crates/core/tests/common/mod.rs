//! Reference enumerators that share no code with the library's oracle:
//! every coloring is decoded from its index and friend counts are
//! recomputed from the edge list.

#![allow(dead_code)]

use degchrom_core::Graph;

/// Calls `visit(colors)` for every coloring of `n` vertices with `k`
/// colors, applying `perm` to every color.
pub fn for_each_coloring(n: usize, k: u32, perm: &[u32], mut visit: impl FnMut(&[u32])) {
    if n > 0 && k == 0 {
        return;
    }
    let total = (k as u64).pow(n as u32);
    let mut colors = vec![0u32; n];
    for mut index in 0..total {
        for c in colors.iter_mut() {
            *c = perm[(index % k as u64) as usize];
            index /= k as u64;
        }
        visit(&colors);
    }
}

pub fn friend_counts(g: &Graph, colors: &[u32]) -> Vec<usize> {
    let mut friends = vec![0; g.n()];
    for &(u, v) in g.edges() {
        if colors[u] == colors[v] {
            friends[u] += 1;
            friends[v] += 1;
        }
    }
    friends
}

/// Colorings in which every vertex has fewer than `m` friends.
pub fn naive_count(g: &Graph, m: usize, k: u32) -> u64 {
    naive_count_permuted(g, m, k, &(0..k).collect::<Vec<_>>())
}

pub fn naive_count_permuted(g: &Graph, m: usize, k: u32, perm: &[u32]) -> u64 {
    let mut count = 0;
    for_each_coloring(g.n(), k, perm, |colors| {
        if friend_counts(g, colors).iter().all(|&f| f < m) {
            count += 1;
        }
    });
    count
}

/// `hist[v][f]`: colorings in which `v` has exactly `f` friends.
pub fn friend_histograms(g: &Graph, k: u32) -> Vec<Vec<u64>> {
    let mut hist = vec![vec![0u64; g.n().max(1)]; g.n()];
    let perm: Vec<u32> = (0..k).collect();
    for_each_coloring(g.n(), k, &perm, |colors| {
        for (v, f) in friend_counts(g, colors).into_iter().enumerate() {
            hist[v][f] += 1;
        }
    });
    hist
}

/// Every simple graph on `n` vertices, one per subset of the possible edges.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}
