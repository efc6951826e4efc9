#![allow(dead_code)]

use minrho::Graph;
use proptest::prelude::*;

/// A tree on `n` vertices from a parent vector: vertex `i > 0` hangs off `parent[i] < i`.
pub fn tree_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let parents: Vec<BoxedStrategy<usize>> = (1..n).map(|i| (0..i).boxed()).collect();
        parents.prop_map(move |ps| {
            let edges: Vec<(usize, usize)> =
                ps.iter().enumerate().map(|(k, &p)| (k + 1, p)).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// A connected graph: a random spanning tree plus a random set of extra edges.
pub fn connected_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    tree_strategy(min_n, max_n).prop_flat_map(|t| {
        let n = t.n();
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |extra| {
            let mut edges = t.edges();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] && !t.has_edge(u, v) {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

pub fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
