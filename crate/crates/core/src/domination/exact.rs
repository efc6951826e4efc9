use super::{DominationCertificate, Method};
use crate::error::{resource, Result};
use crate::graph::Graph;

/// Largest order accepted by [`gamma_exact`].
pub const DEFAULT_EXACT_LIMIT: usize = 24;

struct Search {
    closed: Vec<u32>,
    best: u32,
    best_len: usize,
}

impl Search {
    fn run(&mut self, undominated: u32, picked: u32) {
        if undominated == 0 {
            if (picked.count_ones() as usize) < self.best_len {
                self.best = picked;
                self.best_len = picked.count_ones() as usize;
            }
            return;
        }
        let depth = picked.count_ones() as usize;
        let reach = self
            .closed
            .iter()
            .map(|m| (m & undominated).count_ones())
            .max()
            .unwrap_or(1)
            .max(1);
        let lower = (undominated.count_ones()).div_ceil(reach) as usize;
        if depth + lower >= self.best_len {
            return;
        }
        // branch on the undominated vertex of largest degree: one of its
        // closed neighbours must join the set
        let u = (0..self.closed.len())
            .filter(|&v| undominated >> v & 1 == 1)
            .max_by_key(|&v| (self.closed[v].count_ones(), std::cmp::Reverse(v)))
            .expect("nonempty");
        let mut options: Vec<usize> = (0..self.closed.len())
            .filter(|&w| self.closed[u] >> w & 1 == 1)
            .collect();
        options.sort_by_key(|&w| {
            (
                std::cmp::Reverse((self.closed[w] & undominated).count_ones()),
                w,
            )
        });
        for w in options {
            self.run(undominated & !self.closed[w], picked | 1 << w);
        }
    }
}

fn closed_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &u| m | 1 << u))
        .collect()
}

fn greedy(closed: &[u32], all: u32) -> u32 {
    let mut undominated = all;
    let mut picked = 0u32;
    while undominated != 0 {
        let w = (0..closed.len())
            .max_by_key(|&w| ((closed[w] & undominated).count_ones(), std::cmp::Reverse(w)))
            .expect("nonempty");
        picked |= 1 << w;
        undominated &= !closed[w];
    }
    picked
}

/// Exact `γ(G)` by branch and bound, for graphs up to `limit` vertices.
pub fn gamma_exact_with_limit(g: &Graph, limit: usize) -> Result<DominationCertificate> {
    let n = g.n();
    if n > limit.min(32) {
        return resource(format!("exact domination limited to n <= {limit}, got {n}"));
    }
    let closed = closed_masks(g);
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let start = greedy(&closed, all);
    let mut s = Search {
        closed,
        best: start,
        best_len: start.count_ones() as usize,
    };
    s.run(all, 0);
    let set: Vec<usize> = (0..n).filter(|&v| s.best >> v & 1 == 1).collect();
    Ok(DominationCertificate {
        gamma: set.len(),
        set,
        method: Method::Exhaustive,
        supports_included: false,
    })
}

/// Exact `γ(G)` with the default size limit.
pub fn gamma_exact(g: &Graph) -> Result<DominationCertificate> {
    gamma_exact_with_limit(g, DEFAULT_EXACT_LIMIT)
}

/// Every minimum dominating set, each sorted, in lexicographic order.
pub fn all_minimum_dominating_sets(g: &Graph) -> Result<Vec<Vec<usize>>> {
    let gamma = gamma_exact(g)?.gamma;
    let closed = closed_masks(g);
    let n = g.n();
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(gamma);
    collect(&closed, all, gamma, 0, 0, &mut current, &mut out);
    Ok(out)
}

fn collect(
    closed: &[u32],
    all: u32,
    k: usize,
    start: usize,
    covered: u32,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == k {
        if covered == all {
            out.push(current.clone());
        }
        return;
    }
    for v in start..closed.len() {
        if closed.len() - v < k - current.len() {
            break;
        }
        current.push(v);
        collect(closed, all, k, v + 1, covered | closed[v], current, out);
        current.pop();
    }
}
