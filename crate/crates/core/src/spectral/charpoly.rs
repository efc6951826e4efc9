use super::IntPolynomial;
use crate::error::{invalid, Result};
use crate::graph::{delete_vertices, tree_canonical_form, Graph, TreeWitness};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeSet, HashMap};
use std::sync::RwLock;

/// `det(xI - A(g))` by the Faddeev-LeVerrier recurrence. All divisions are
/// exact over the integers; arithmetic runs in `i128` and falls back to
/// big integers on overflow.
pub fn char_poly(g: &Graph) -> IntPolynomial {
    match faddeev_leverrier_i128(g) {
        Some(c) => IntPolynomial::new(c.into_iter().map(BigInt::from).collect()),
        None => IntPolynomial::new(faddeev_leverrier_big(g)),
    }
}

fn faddeev_leverrier_i128(g: &Graph) -> Option<Vec<i128>> {
    let n = g.n();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for &u in g.neighbors(i) {
                for (cell, &val) in row.iter_mut().zip(&m[u]) {
                    *cell = cell.checked_add(val)?;
                }
            }
            row[i] = row[i].checked_add(coeffs[n - k + 1])?;
        }
        m = next;
        // c_{n-k} = -tr(A M_k) / k
        let mut trace = 0i128;
        for i in 0..n {
            for &u in g.neighbors(i) {
                trace = trace.checked_add(m[u][i])?;
            }
        }
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[n - k] = -(trace / k as i128);
    }
    Some(coeffs)
}

fn faddeev_leverrier_big(g: &Graph) -> Vec<BigInt> {
    let n = g.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for &u in g.neighbors(i) {
                for (cell, val) in row.iter_mut().zip(&m[u]) {
                    *cell += val;
                }
            }
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for &u in g.neighbors(i) {
                trace += &m[u][i];
            }
        }
        coeffs[n - k] = -(trace / BigInt::from(k));
    }
    coeffs
}

/// Memo table for tree characteristic polynomials keyed by canonical tree
/// encoding. Safe to share between threads; racing inserts store the same
/// value.
#[derive(Default)]
pub struct TreePolyCache {
    table: RwLock<HashMap<Vec<u8>, IntPolynomial>>,
}

impl TreePolyCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.read().map(|t| t.len()).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, key: &[u8]) -> Option<IntPolynomial> {
        self.table.read().ok()?.get(key).cloned()
    }

    fn insert(&self, key: Vec<u8>, value: IntPolynomial) {
        if let Ok(mut t) = self.table.write() {
            t.entry(key).or_insert(value);
        }
    }
}

/// Characteristic polynomial of a tree via the edge-deletion recurrence
/// `f(T) = f(T - uv) - f(T - u - v)` applied at a pendant edge, so that
/// `f(T - uv) = x f(T - u)`. Independent of the determinant route.
pub fn char_poly_tree(t: &TreeWitness) -> IntPolynomial {
    char_poly_tree_cached(t, &TreePolyCache::new())
}

pub fn char_poly_tree_cached(t: &TreeWitness, cache: &TreePolyCache) -> IntPolynomial {
    tree_poly(t.graph(), cache)
}

/// Same as [`char_poly_tree`] for a bare graph, rejecting non-trees.
pub fn char_poly_tree_graph(g: &Graph) -> Result<IntPolynomial> {
    match TreeWitness::new(g.clone()) {
        Ok(t) => Ok(char_poly_tree(&t)),
        Err(_) => invalid("edge-deletion recurrence needs a tree"),
    }
}

fn tree_poly(g: &Graph, cache: &TreePolyCache) -> IntPolynomial {
    match g.n() {
        0 => return IntPolynomial::one(),
        1 => return IntPolynomial::x(),
        _ => {}
    }
    let key = tree_canonical_form(g).expect("recurrence only visits trees");
    if let Some(p) = cache.get(&key) {
        return p;
    }
    let leaf = (0..g.n())
        .find(|&v| g.degree(v) == 1)
        .expect("trees have leaves");
    let support = g.neighbors(leaf)[0];
    let (without_leaf, _) = delete_vertices(g, &BTreeSet::from([leaf])).expect("vertex in range");
    let (forest, _) =
        delete_vertices(g, &BTreeSet::from([leaf, support])).expect("vertices in range");
    let rest = components(&forest)
        .iter()
        .fold(IntPolynomial::one(), |acc, c| &acc * &tree_poly(c, cache));
    let p = &(&IntPolynomial::x() * &tree_poly(&without_leaf, cache)) - &rest;
    cache.insert(key, p.clone());
    p
}

/// Connected components as standalone graphs.
pub(crate) fn components(g: &Graph) -> Vec<Graph> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut members = vec![s];
        comp[s] = id;
        let mut head = 0;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for &u in g.neighbors(v) {
                if comp[u] == usize::MAX {
                    comp[u] = id;
                    members.push(u);
                }
            }
        }
        members.sort_unstable();
        let keep: BTreeSet<usize> = (0..n).filter(|v| comp[*v] != id).collect();
        let (h, _) = delete_vertices(g, &keep).expect("vertices in range");
        out.push(h);
    }
    out
}
