use super::{is_tree, Graph};
use crate::error::{resource, Result};

/// Largest order for which general (non-tree) isomorphism is decided by
/// permutation search.
pub const BRUTE_FORCE_ISO_LIMIT: usize = 10;

/// Canonical encoding of a tree: the AHU parenthesis string of the tree
/// rooted at its centroid (the smaller string when there are two centroids).
/// Two trees are isomorphic iff their encodings are equal.
///
/// Returns `None` for non-trees.
pub fn tree_canonical_form(g: &Graph) -> Option<Vec<u8>> {
    if !is_tree(g) {
        return None;
    }
    let centroids = centroids(g);
    centroids.iter().map(|&c| rooted_encoding(g, c)).min()
}

/// Relabels a tree so that isomorphic trees become identical graphs:
/// preorder numbering from the canonical centroid, children visited in
/// increasing encoding order.
///
/// Returns `None` for non-trees.
pub fn canonical_tree_relabel(g: &Graph) -> Option<Graph> {
    if !is_tree(g) {
        return None;
    }
    let (root, enc, parent) = centroids(g)
        .into_iter()
        .map(|c| {
            let (parent, order) = bfs_tree(g, c);
            let enc = subtree_encodings(g, &parent, &order);
            (c, enc, parent)
        })
        .min_by(|a, b| a.1[a.0].cmp(&b.1[b.0]))
        .expect("a tree has a centroid");
    let mut label = vec![usize::MAX; g.n()];
    let mut edges = Vec::with_capacity(g.n().saturating_sub(1));
    let mut stack = vec![root];
    let mut next = 0;
    while let Some(v) = stack.pop() {
        label[v] = next;
        next += 1;
        if let Some(p) = parent[v] {
            edges.push((label[p], label[v]));
        }
        let mut kids: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| parent[u] == Some(v))
            .collect();
        kids.sort_by(|&a, &b| enc[a].cmp(&enc[b]));
        stack.extend(kids.into_iter().rev());
    }
    Some(Graph::from_edges(g.n(), &edges).expect("relabelled tree is simple"))
}

fn subtree_encodings(g: &Graph, parent: &[Option<usize>], order: &[usize]) -> Vec<Vec<u8>> {
    let mut enc: Vec<Vec<u8>> = vec![Vec::new(); g.n()];
    for &v in order.iter().rev() {
        let mut kids: Vec<&Vec<u8>> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| parent[u] == Some(v))
            .map(|&u| &enc[u])
            .collect();
        kids.sort_unstable();
        let mut s = Vec::with_capacity(2 + kids.iter().map(|k| k.len()).sum::<usize>());
        s.push(b'(');
        for k in kids {
            s.extend_from_slice(k);
        }
        s.push(b')');
        enc[v] = s;
    }
    enc
}

fn centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 1 {
        return vec![0];
    }
    let (parent, order) = bfs_tree(g, 0);
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if let Some(p) = parent[v] {
            size[p] += size[v];
        }
    }
    let mut best = usize::MAX;
    let mut out = Vec::new();
    for v in 0..n {
        let mut heaviest = n - size[v];
        for &u in g.neighbors(v) {
            if parent[u] == Some(v) {
                heaviest = heaviest.max(size[u]);
            }
        }
        match heaviest.cmp(&best) {
            std::cmp::Ordering::Less => {
                best = heaviest;
                out = vec![v];
            }
            std::cmp::Ordering::Equal => out.push(v),
            std::cmp::Ordering::Greater => {}
        }
    }
    out
}

fn bfs_tree(g: &Graph, root: usize) -> (Vec<Option<usize>>, Vec<usize>) {
    let n = g.n();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = vec![root];
    seen[root] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(v);
                order.push(u);
            }
        }
    }
    (parent, order)
}

fn rooted_encoding(g: &Graph, root: usize) -> Vec<u8> {
    let (parent, order) = bfs_tree(g, root);
    let mut enc = subtree_encodings(g, &parent, &order);
    std::mem::take(&mut enc[root])
}

/// Isomorphism test: canonical forms for trees, permutation search for
/// other graphs up to [`BRUTE_FORCE_ISO_LIMIT`] vertices.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let (dg, dh) = (super::degree_sequence(g), super::degree_sequence(h));
    if dg != dh {
        return Ok(false);
    }
    if let (Some(a), Some(b)) = (tree_canonical_form(g), tree_canonical_form(h)) {
        return Ok(a == b);
    }
    if is_tree(g) != is_tree(h) {
        return Ok(false);
    }
    if g.n() > BRUTE_FORCE_ISO_LIMIT {
        return resource(format!(
            "general isomorphism limited to n <= {BRUTE_FORCE_ISO_LIMIT}"
        ));
    }
    let n = g.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_mapping(g, h, 0, &mut map, &mut used))
}

fn extend_mapping(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if v == g.n() {
        return true;
    }
    for w in 0..h.n() {
        if used[w] || g.degree(v) != h.degree(w) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_mapping(g, h, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_cycle, build_path, build_star, relabel};

    #[test]
    fn tree_forms_distinguish_p4_and_star() {
        let p = tree_canonical_form(&build_path(4).unwrap()).unwrap();
        let s = tree_canonical_form(&build_star(3).unwrap()).unwrap();
        assert_ne!(p, s);
        assert!(tree_canonical_form(&build_cycle(4).unwrap()).is_none());
    }

    #[test]
    fn relabeled_trees_share_form() {
        let p = build_path(6).unwrap();
        let q = relabel(&p, &[3, 0, 5, 1, 4, 2]).unwrap();
        assert_eq!(tree_canonical_form(&p), tree_canonical_form(&q));
    }

    #[test]
    fn canonical_relabel_identifies_isomorphic_trees() {
        let p = build_path(7).unwrap();
        let q = relabel(&p, &[6, 2, 0, 5, 1, 4, 3]).unwrap();
        let a = canonical_tree_relabel(&p).unwrap();
        assert_eq!(a, canonical_tree_relabel(&q).unwrap());
        assert!(are_isomorphic(&a, &p).unwrap());
        let s = build_star(4).unwrap();
        assert_ne!(
            canonical_tree_relabel(&s).unwrap(),
            canonical_tree_relabel(&build_path(5).unwrap()).unwrap()
        );
        assert!(canonical_tree_relabel(&build_cycle(4).unwrap()).is_none());
    }

    #[test]
    fn general_graph_iso() {
        let c6 = build_cycle(6).unwrap();
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles).unwrap());
        let c6b = relabel(&c6, &[5, 3, 1, 0, 2, 4]).unwrap();
        assert!(are_isomorphic(&c6, &c6b).unwrap());
        assert!(are_isomorphic(&build_complete(4).unwrap(), &build_complete(4).unwrap()).unwrap());
    }

    #[test]
    fn general_iso_has_a_size_limit() {
        let c = build_cycle(11).unwrap();
        assert!(matches!(
            are_isomorphic(&c, &c),
            Err(crate::Error::Resource(_))
        ));
    }
}
