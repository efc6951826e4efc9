use crate::error::{invalid, resource, Result};
use crate::graph::{Graph, TreeWitness};
use serde::{Deserialize, Serialize};

/// Largest order accepted by [`free_trees`].
pub const DEFAULT_TREE_LIMIT: usize = 18;

/// Resumable position in a [`FreeTrees`] stream: the level sequence of the
/// last tree emitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCheckpoint {
    pub n: usize,
    pub emitted: u64,
    pub last: Option<Vec<usize>>,
}

/// One representative per isomorphism class of free trees on `n` vertices,
/// generated as canonical level sequences in constant amortised time.
#[derive(Clone, Debug)]
pub struct FreeTrees {
    n: usize,
    next: Option<Vec<usize>>,
    last: Option<Vec<usize>>,
    emitted: u64,
    single: bool,
}

/// Free trees on `n` vertices with the default limit.
pub fn free_trees(n: usize) -> Result<FreeTrees> {
    free_trees_with_limit(n, DEFAULT_TREE_LIMIT)
}

pub fn free_trees_with_limit(n: usize, limit: usize) -> Result<FreeTrees> {
    if n == 0 {
        return invalid("trees need at least one vertex");
    }
    if n > limit {
        return resource(format!("tree enumeration limited to n <= {limit}, got {n}"));
    }
    let first = if n == 1 {
        None
    } else {
        let mut layout: Vec<usize> = (0..=n / 2).collect();
        layout.extend(1..n.div_ceil(2));
        Some(layout)
    };
    Ok(FreeTrees {
        n,
        next: first,
        last: None,
        emitted: 0,
        single: n == 1,
    })
}

impl FreeTrees {
    /// Continues a stream right after the tree recorded in `cp`.
    pub fn resume(cp: &TreeCheckpoint, limit: usize) -> Result<Self> {
        let mut it = free_trees_with_limit(cp.n, limit)?;
        if let Some(last) = &cp.last {
            if last.len() != cp.n || last.first() != Some(&0) {
                return invalid("checkpoint level sequence does not match its order");
            }
            if cp.n == 1 {
                it.single = false;
            } else {
                it.next = next_rooted_tree(last, None);
            }
            it.last = Some(last.clone());
        }
        it.emitted = cp.emitted;
        Ok(it)
    }

    pub fn checkpoint(&self) -> TreeCheckpoint {
        TreeCheckpoint {
            n: self.n,
            emitted: self.emitted,
            last: self.last.clone(),
        }
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    fn emit(&mut self, layout: Vec<usize>) -> TreeWitness {
        let g = layout_to_graph(&layout);
        self.last = Some(layout);
        self.emitted += 1;
        TreeWitness::new(g).expect("level sequences describe trees")
    }
}

impl Iterator for FreeTrees {
    type Item = TreeWitness;

    fn next(&mut self) -> Option<TreeWitness> {
        if self.single {
            self.single = false;
            return Some(self.emit(vec![0]));
        }
        let candidate = self.next.take()?;
        let layout = next_tree(candidate)?;
        self.next = next_rooted_tree(&layout, None);
        Some(self.emit(layout))
    }
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] + 1 != pred[p] {
        q -= 1;
    }
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a centre-rooted level sequence into its first root subtree
/// (levels shifted down by one) and the remainder.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let mut rest = vec![0];
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut fresh = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&fresh);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = fresh.len();
        for (k, slot) in fresh[len - (h + 1)..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
    Some(fresh)
}

/// Tree whose vertex `i` sits at depth `layout[i]` below the most recent
/// vertex of smaller depth.
pub fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(layout.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                edges.push((j, i));
                break;
            }
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), &edges).expect("level sequence yields a simple tree")
}
