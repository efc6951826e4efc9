use crate::error::{resource, Result};
use crate::graph::Graph;

/// Largest order accepted by the labelled enumerators.
pub const LABELED_LIMIT: usize = 8;

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn check(n: usize) -> Result<()> {
    if n > LABELED_LIMIT {
        return resource(format!(
            "labelled enumeration limited to n <= {LABELED_LIMIT}, got {n}"
        ));
    }
    Ok(())
}

fn connected_mask(n: usize, adj: &[u8]) -> bool {
    if n == 0 {
        return true;
    }
    let full = if n == 8 { u8::MAX } else { (1u8 << n) - 1 };
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == full
}

fn graph_from(n: usize, pairs: &[(usize, usize)], chosen: u32) -> Graph {
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| chosen >> k & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges).expect("distinct vertex pairs")
}

/// Every labelled connected simple graph on vertices `0..n`.
pub fn connected_graphs_labeled(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check(n)?;
    let pairs = vertex_pairs(n);
    let subsets = 1u32 << pairs.len();
    Ok((0..subsets).filter_map(move |chosen| {
        let mut adj = [0u8; 8];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if chosen >> k & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        connected_mask(n, &adj[..n.max(1)]).then(|| graph_from(n, &pairs, chosen))
    }))
}

/// Labelled connected graphs on `n` vertices with `γ >= k`.
///
/// Adding an edge never raises `γ`, so the edge sets with `γ >= k` form a
/// down-set; a depth-first walk that adds edges in increasing index order
/// visits each member once and stops at the first edge set with `γ < k`.
pub fn connected_graphs_with_min_gamma(n: usize, k: usize) -> Result<Vec<Graph>> {
    check(n)?;
    let pairs = vertex_pairs(n);
    // all vertex subsets of size below k: gamma >= k iff none of them dominates
    let small: Vec<u8> = (0..(1u16 << n))
        .map(|s| s as u8)
        .filter(|s| (s.count_ones() as usize) < k)
        .collect();
    let mut out = Vec::new();
    let mut adj = [0u8; 8];
    walk(n, &pairs, &small, 0, 0, &mut adj, &mut out);
    Ok(out)
}

fn gamma_at_least(n: usize, adj: &[u8; 8], small: &[u8]) -> bool {
    let full = if n == 8 {
        u8::MAX
    } else {
        ((1u16 << n) - 1) as u8
    };
    small.iter().all(|&s| {
        let mut cover = s;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cover |= adj[v];
        }
        cover != full
    })
}

fn walk(
    n: usize,
    pairs: &[(usize, usize)],
    small: &[u8],
    start: usize,
    chosen: u32,
    adj: &mut [u8; 8],
    out: &mut Vec<Graph>,
) {
    if !gamma_at_least(n, adj, small) {
        return;
    }
    if connected_mask(n, &adj[..n.max(1)]) {
        out.push(graph_from(n, pairs, chosen));
    }
    for k in start..pairs.len() {
        let (u, v) = pairs[k];
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        walk(n, pairs, small, k + 1, chosen | 1 << k, adj, out);
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }
}
