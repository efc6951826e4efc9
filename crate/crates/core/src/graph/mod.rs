//! Simple undirected graphs and everything structural built on them.

mod build;
mod graph6;
mod iso;
pub mod named_trees;
mod ops;
mod predicates;

pub use build::{
    build_complete, build_corona, build_cycle, build_path, build_s10, build_star, build_starlike,
    build_t, build_wn, CaterpillarSpec,
};
pub use graph6::{from_graph6, to_graph6};
pub use iso::{are_isomorphic, canonical_tree_relabel, tree_canonical_form, BRUTE_FORCE_ISO_LIMIT};
pub use ops::{
    attach_path, contract_vertex, delete_edge, delete_vertices, relabel, subdivide_edge, Relabeling,
};
pub use predicates::{
    branching_vertices, degree_sequence, diameter, distances_from, internal_path_edges,
    is_caterpillar, is_connected, is_tree, leaf_multiplicity, leaves, max_degree, min_degree,
    support_vertices,
};

use crate::error::{invalid, Result};
use std::fmt;

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted and duplicate-free; the value is immutable
/// once constructed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return invalid(format!("edge ({u},{v}) out of range for n = {n}"));
            }
            if u == v {
                return invalid(format!("self-loop at vertex {u}"));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before {
                return invalid("duplicate edge");
            }
        }
        Ok(Graph {
            adj,
            edge_count: edges.len(),
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let mut a = vec![vec![0; n]; n];
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                a[u][v] = 1;
            }
        }
        a
    }

    /// Closed neighbourhoods as bitmasks. Only valid for `n <= 64`.
    pub fn closed_neighborhood_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adj
            .iter()
            .enumerate()
            .map(|(v, list)| list.iter().fold(1u64 << v, |m, &u| m | (1u64 << u)))
            .collect()
    }

    /// Checks the representation invariants; used by tests and debug builds.
    pub fn check_invariants(&self) -> bool {
        let n = self.n();
        let mut total = 0;
        for (v, list) in self.adj.iter().enumerate() {
            total += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &u in list {
                if u >= n || u == v || self.adj[u].binary_search(&v).is_err() {
                    return false;
                }
            }
        }
        total == 2 * self.edge_count
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// A tree together with a root-directed parent array (root 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeWitness {
    graph: Graph,
    parent: Vec<Option<usize>>,
    order: Vec<usize>,
}

impl TreeWitness {
    pub fn new(graph: Graph) -> Result<Self> {
        let n = graph.n();
        if n == 0 {
            return invalid("empty graph is not a tree");
        }
        if graph.edge_count() != n - 1 {
            return invalid(format!(
                "not a tree: {} edges on {} vertices",
                graph.edge_count(),
                n
            ));
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        seen[0] = true;
        order.push(0);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in graph.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    parent[u] = Some(v);
                    order.push(u);
                }
            }
        }
        if order.len() != n {
            return invalid("not a tree: disconnected");
        }
        Ok(TreeWitness {
            graph,
            parent,
            order,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn parent(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Vertices in BFS order from the root; parents precede children.
    pub fn bfs_order(&self) -> &[usize] {
        &self.order
    }

    pub fn children(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let p = self.parent[v];
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| Some(u) != p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn tree_witness_parent_array_rebuilds_edges() {
        let g = build_t(&CaterpillarSpec::new(6, 2, 1).unwrap());
        let t = TreeWitness::new(g.clone()).unwrap();
        let mut edges: Vec<_> = t
            .parent()
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (v.min(p), v.max(p))))
            .collect();
        edges.sort_unstable();
        assert_eq!(edges, g.edges());
        assert_eq!(t.parent()[0], None);
    }

    #[test]
    fn tree_witness_rejects_cycles() {
        assert!(TreeWitness::new(build_cycle(5).unwrap()).is_err());
        let forest = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(TreeWitness::new(forest).is_err());
    }
}
