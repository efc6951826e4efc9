use super::Graph;
use crate::error::{invalid, Result};
use std::collections::BTreeSet;

/// Old-to-new vertex map produced by a deletion. Deleted vertices map to `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabeling {
    pub old_to_new: Vec<Option<usize>>,
}

impl Relabeling {
    pub fn get(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }
}

/// Hangs a new path with `len` vertices off `v`; new vertices are labeled
/// `n, n+1, ...` moving away from `v`.
pub fn attach_path(g: &Graph, v: usize, len: usize) -> Result<Graph> {
    if v >= g.n() {
        return invalid(format!("vertex {v} out of range"));
    }
    let n = g.n();
    let mut edges = g.edges();
    let mut prev = v;
    for k in 0..len {
        edges.push((prev, n + k));
        prev = n + k;
    }
    Graph::from_edges(n + len, &edges)
}

/// Replaces the edge `uv` by a path with `times` new interior vertices.
/// New vertices are labeled `n, n+1, ...` in order from `u` towards `v`.
pub fn subdivide_edge(g: &Graph, u: usize, v: usize, times: usize) -> Result<Graph> {
    if times == 0 {
        return invalid("subdivision count must be positive");
    }
    if !g.has_edge(u, v) {
        return invalid(format!("({u},{v}) is not an edge"));
    }
    let n = g.n();
    let mut edges: Vec<_> = g
        .edges()
        .into_iter()
        .filter(|&e| e != (u.min(v), u.max(v)))
        .collect();
    let mut prev = u;
    for k in 0..times {
        edges.push((prev, n + k));
        prev = n + k;
    }
    edges.push((prev, v));
    Graph::from_edges(n + times, &edges)
}

/// Removes the vertices in `removed` and relabels the survivors densely,
/// preserving their relative order.
pub fn delete_vertices(g: &Graph, removed: &BTreeSet<usize>) -> Result<(Graph, Relabeling)> {
    if let Some(&bad) = removed.iter().find(|&&v| v >= g.n()) {
        return invalid(format!("vertex {bad} out of range"));
    }
    let mut old_to_new = vec![None; g.n()];
    let mut next = 0;
    for (v, slot) in old_to_new.iter_mut().enumerate() {
        if !removed.contains(&v) {
            *slot = Some(next);
            next += 1;
        }
    }
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .filter_map(|(a, b)| Some((old_to_new[a]?, old_to_new[b]?)))
        .collect();
    Ok((Graph::from_edges(next, &edges)?, Relabeling { old_to_new }))
}

pub fn delete_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return invalid(format!("({u},{v}) is not an edge"));
    }
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .filter(|&e| e != (u.min(v), u.max(v)))
        .collect();
    Graph::from_edges(g.n(), &edges)
}

/// Suppresses a degree-two vertex `w`: removes it and joins its two
/// neighbours. Inverse of a single subdivision.
pub fn contract_vertex(g: &Graph, w: usize) -> Result<(Graph, Relabeling)> {
    if w >= g.n() || g.degree(w) != 2 {
        return invalid(format!("vertex {w} does not have degree two"));
    }
    let (a, b) = (g.neighbors(w)[0], g.neighbors(w)[1]);
    if g.has_edge(a, b) {
        return invalid("contraction would create a multi-edge");
    }
    let (h, map) = delete_vertices(g, &BTreeSet::from([w]))?;
    let mut edges = h.edges();
    edges.push((map.get(a).unwrap_or(0), map.get(b).unwrap_or(0)));
    Ok((Graph::from_edges(h.n(), &edges)?, map))
}

/// Applies `perm` (old label -> new label) to every vertex.
pub fn relabel(g: &Graph, perm: &[usize]) -> Result<Graph> {
    let n = g.n();
    let mut seen = vec![false; n];
    if perm.len() != n
        || perm
            .iter()
            .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
    {
        return invalid("relabeling is not a permutation");
    }
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, build_path, build_t, is_connected, CaterpillarSpec};

    #[test]
    fn subdivide_path() {
        let p2 = build_path(2).unwrap();
        let p3 = subdivide_edge(&p2, 0, 1, 1).unwrap();
        assert!(are_isomorphic(&p3, &build_path(3).unwrap()).unwrap());
        assert!(subdivide_edge(&p2, 0, 0, 1).is_err());
        assert!(subdivide_edge(&p3, 0, 1, 1).is_err());
        let p5 = subdivide_edge(&p2, 0, 1, 3).unwrap();
        assert!(are_isomorphic(&p5, &build_path(5).unwrap()).unwrap());
    }

    #[test]
    fn delete_middle_of_p5() {
        let (h, map) = delete_vertices(&build_path(5).unwrap(), &BTreeSet::from([2])).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edges(), vec![(0, 1), (2, 3)]);
        assert!(!is_connected(&h));
        assert_eq!(map.get(2), None);
        assert_eq!(map.get(4), Some(3));
    }

    #[test]
    fn subdivide_then_drop_pendant() {
        // T^6_{3,0}: spine 0..5, pendants 6,7,8 on spine 0,1,2.
        let t = build_t(&CaterpillarSpec::new(6, 3, 0).unwrap());
        // subdivide spine edge 1-2, then delete the pendant of spine vertex 2
        let s = subdivide_edge(&t, 1, 2, 1).unwrap();
        let (h, _) = delete_vertices(&s, &BTreeSet::from([8])).unwrap();
        assert_eq!(h.n(), 9);
        let expected = build_t(&CaterpillarSpec::new(7, 2, 0).unwrap());
        assert!(are_isomorphic(&h, &expected).unwrap());
    }

    #[test]
    fn contraction_inverts_subdivision() {
        let t = build_t(&CaterpillarSpec::new(5, 2, 1).unwrap());
        for (u, v) in t.edges() {
            let s = subdivide_edge(&t, u, v, 1).unwrap();
            let (back, _) = contract_vertex(&s, t.n()).unwrap();
            assert!(are_isomorphic(&back, &t).unwrap());
        }
    }

    #[test]
    fn relabel_checks_permutation() {
        let p = build_path(3).unwrap();
        assert!(relabel(&p, &[0, 0, 1]).is_err());
        let q = relabel(&p, &[2, 0, 1]).unwrap();
        assert_eq!(q.edges(), vec![(0, 1), (0, 2)]);
    }
}
