use super::Graph;
use crate::error::{invalid, Result};
use serde::{Deserialize, Serialize};

pub fn build_path(n: usize) -> Result<Graph> {
    if n == 0 {
        return invalid("path needs at least one vertex");
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn build_complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return invalid("complete graph needs at least one vertex");
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn build_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return invalid("cycle needs at least three vertices");
    }
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges)
}

/// K_{1,leaves} with the centre labeled 0.
pub fn build_star(leaves: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

/// `G ∘ K1`: vertex `v` of `g` receives the pendant `n + v`.
pub fn build_corona(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n == 0 {
        return invalid("corona of the empty graph");
    }
    let mut edges = g.edges();
    edges.extend((0..n).map(|v| (v, n + v)));
    Graph::from_edges(2 * n, &edges)
}

/// Parameters of the caterpillar `T^{d+1}_{i,j}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CaterpillarSpec {
    spine_len: usize,
    i: usize,
    j: usize,
}

impl CaterpillarSpec {
    /// `spine_len = d + 1`; requires `0 <= j <= i <= spine_len`.
    pub fn new(spine_len: usize, i: usize, j: usize) -> Result<Self> {
        if spine_len == 0 {
            return invalid("caterpillar spine must have at least one vertex");
        }
        if !(j <= i && i <= spine_len) {
            return invalid(format!(
                "caterpillar parameters need 0 <= j <= i <= spine length, got spine {spine_len}, i {i}, j {j}"
            ));
        }
        Ok(CaterpillarSpec { spine_len, i, j })
    }

    /// The odd-order family `T^{(n+3)/2}_{i,(n-3)/2-i}`.
    pub fn odd_family(n: usize, i: usize) -> Result<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return invalid(format!("odd family needs odd n >= 3, got {n}"));
        }
        let total = (n - 3) / 2;
        if i > total {
            return invalid(format!("i = {i} exceeds (n-3)/2 = {total}"));
        }
        Self::new((n + 3) / 2, i, total - i)
    }

    /// `T^{(n+3)/2}_{⌈(n-3)/4⌉,⌊(n-3)/4⌋}`, the minimizer for odd `n`.
    pub fn odd_minimizer(n: usize) -> Result<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return invalid(format!("odd minimizer needs odd n >= 3, got {n}"));
        }
        Self::odd_family(n, (n - 3).div_ceil(4))
    }

    /// `T^{(n+3)/2}_{(n-3)/2,0}`, the older conjectured minimizer.
    pub fn conjectured_minimizer(n: usize) -> Result<Self> {
        if n < 3 || n.is_multiple_of(2) {
            return invalid(format!("conjectured minimizer needs odd n >= 3, got {n}"));
        }
        Self::odd_family(n, (n - 3) / 2)
    }

    /// `T^{n/2}_{n/2,0} = P_{n/2} ∘ K1` for even `n`.
    pub fn even_minimizer(n: usize) -> Result<Self> {
        if n < 2 || n % 2 == 1 {
            return invalid(format!("even minimizer needs even n >= 2, got {n}"));
        }
        Self::new(n / 2, n / 2, 0)
    }

    pub fn spine_len(&self) -> usize {
        self.spine_len
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn vertex_count(&self) -> usize {
        self.spine_len + self.i + self.j
    }
}

/// Builds `T^{d+1}_{i,j}`. Spine vertices are `0..=d`; pendants follow in
/// order of their spine position, leading pendants before trailing ones.
pub fn build_t(spec: &CaterpillarSpec) -> Graph {
    let len = spec.spine_len;
    let mut edges: Vec<_> = (1..len).map(|v| (v - 1, v)).collect();
    let mut next = len;
    for k in 0..spec.i {
        edges.push((k, next));
        next += 1;
    }
    for k in len - spec.j..len {
        edges.push((k, next));
        next += 1;
    }
    Graph::from_edges(next, &edges).expect("caterpillar construction is simple")
}

/// Spider whose centre (vertex 0) is joined to one end of each leg
/// `P_{3a+2}`, `P_{3b+1}`, `P_{3c}` in that order.
pub fn build_starlike(a: &[usize], b: &[usize], c: &[usize]) -> Result<Graph> {
    if a.is_empty() && b.is_empty() && c.is_empty() {
        return invalid("starlike tree needs at least one leg");
    }
    if c.contains(&0) {
        return invalid("legs of type P_{3c} need c >= 1");
    }
    let legs = a
        .iter()
        .map(|&x| 3 * x + 2)
        .chain(b.iter().map(|&x| 3 * x + 1))
        .chain(c.iter().map(|&x| 3 * x));
    let mut edges = Vec::new();
    let mut next = 1;
    for len in legs {
        edges.push((0, next));
        for k in 1..len {
            edges.push((next + k - 1, next + k));
        }
        next += len;
    }
    Graph::from_edges(next, &edges)
}

/// `W_n`: a path on `n - 4` vertices with two pendants at each end vertex.
pub fn build_wn(n: usize) -> Result<Graph> {
    if n < 6 {
        return invalid(format!("W_n needs n >= 6, got {n}"));
    }
    let len = n - 4;
    let mut edges: Vec<_> = (1..len).map(|v| (v - 1, v)).collect();
    edges.extend([
        (0, len),
        (0, len + 1),
        (len - 1, len + 2),
        (len - 1, len + 3),
    ]);
    Graph::from_edges(n, &edges)
}

/// `S10`: centre of degree 5 with four legs of two vertices and one of one.
pub fn build_s10() -> Graph {
    build_spider(&[2, 2, 2, 2, 1])
}

pub(crate) fn build_spider(legs: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        edges.push((0, next));
        for k in 1..len {
            edges.push((next + k - 1, next + k));
        }
        next += len;
    }
    Graph::from_edges(next, &edges).expect("spider construction is simple")
}
