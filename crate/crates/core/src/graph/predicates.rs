use super::Graph;
use crate::error::{domain, Result};
use std::collections::{BTreeSet, VecDeque};

/// BFS distances from `src`; `None` marks unreachable vertices.
pub fn distances_from(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap_or(0);
        for &u in g.neighbors(v) {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    dist
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || distances_from(g, 0).iter().all(Option::is_some)
}

pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.edge_count() + 1 == g.n() && is_connected(g)
}

/// Largest shortest-path distance; fails on disconnected input.
pub fn diameter(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return domain("diameter of the empty graph");
    }
    let mut best = 0;
    for v in 0..g.n() {
        for d in distances_from(g, v) {
            match d {
                Some(d) => best = best.max(d),
                None => return domain("diameter of a disconnected graph"),
            }
        }
    }
    Ok(best)
}

pub fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0)
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0)
}

/// Degrees in non-increasing order.
pub fn degree_sequence(g: &Graph) -> Vec<usize> {
    let mut d: Vec<_> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

pub fn leaves(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}

/// Vertices adjacent to at least one leaf.
pub fn support_vertices(g: &Graph) -> BTreeSet<usize> {
    leaves(g)
        .into_iter()
        .flat_map(|l| g.neighbors(l).iter().copied())
        .collect()
}

/// `l_G(v)`: number of degree-one neighbours of `v`.
pub fn leaf_multiplicity(g: &Graph, v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&u| g.degree(u) == 1).count()
}

/// Vertices of degree at least three.
pub fn branching_vertices(g: &Graph) -> BTreeSet<usize> {
    (0..g.n()).filter(|&v| g.degree(v) >= 3).collect()
}

/// A tree is a caterpillar when removing its leaves leaves a path (or nothing).
pub fn is_caterpillar(g: &Graph) -> bool {
    if !is_tree(g) {
        return false;
    }
    if g.n() <= 2 {
        return true;
    }
    // the non-leaf vertices induce a subtree; it is a path iff every one has
    // at most two non-leaf neighbours
    (0..g.n())
        .filter(|&v| g.degree(v) > 1)
        .all(|v| g.neighbors(v).iter().filter(|&&u| g.degree(u) > 1).count() <= 2)
}

/// Edges lying on an internal path: a walk through degree-two vertices whose
/// two ends (possibly the same vertex) have degree at least three.
pub fn internal_path_edges(g: &Graph) -> Vec<(usize, usize)> {
    let end_of_chain = |from: usize, start: usize| -> Option<usize> {
        let (mut prev, mut cur) = (from, start);
        for _ in 0..=g.n() {
            if g.degree(cur) != 2 {
                return Some(cur);
            }
            let next = g.neighbors(cur).iter().copied().find(|&w| w != prev)?;
            prev = cur;
            cur = next;
        }
        None
    };
    g.edges()
        .into_iter()
        .filter(|&(u, v)| {
            let a = end_of_chain(v, u);
            let b = end_of_chain(u, v);
            matches!((a, b), (Some(a), Some(b)) if g.degree(a) >= 3 && g.degree(b) >= 3)
        })
        .collect()
}
