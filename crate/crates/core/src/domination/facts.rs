use super::{gamma_exact, is_dominating_set, tree_domination_number};
use crate::error::{domain, invalid, Result};
use crate::graph::{is_tree, min_degree, Graph, TreeWitness};

/// `(n, s, t, h)` of the spider built by `build_starlike(a, b, c)`.
pub fn starlike_parameters(a: &[usize], b: &[usize], c: &[usize]) -> (usize, usize, usize, usize) {
    let n = 1
        + a.iter().map(|x| 3 * x + 2).sum::<usize>()
        + b.iter().map(|x| 3 * x + 1).sum::<usize>()
        + c.iter().map(|x| 3 * x).sum::<usize>();
    (n, a.len(), b.len(), c.len())
}

/// Closed-form `γ` of a spider with `s` legs `P_{3a+2}`, `t` legs `P_{3b+1}`
/// and `h` legs `P_{3c}` (c >= 1) on `n` vertices:
/// `(n+s-t+2)/3` when `t >= 1`, otherwise `(n+s-1)/3`.
///
/// Parameters that no spider realises are rejected. The formula is returned
/// as stated even when `s = t = 0`, where it undercounts by one because the
/// centre is left undominated.
pub fn gamma_starlike_formula(n: usize, s: usize, t: usize, h: usize) -> Result<usize> {
    if s + t + h == 0 {
        return invalid("a spider needs at least one leg");
    }
    let fixed = 1 + 2 * s + t + 3 * h;
    if n < fixed || !(n - fixed).is_multiple_of(3) {
        return invalid(format!(
            "no spider with s={s}, t={t}, h={h} has {n} vertices"
        ));
    }
    let numerator = if t >= 1 { n + s + 2 - t } else { n + s - 1 };
    if numerator % 3 != 0 {
        return invalid(format!("formula is not integral for n={n}, s={s}, t={t}"));
    }
    Ok(numerator / 3)
}

/// Checks `γ(G) <= n/2` on a graph without isolated vertices.
pub fn ore_bound_check(g: &Graph) -> Result<bool> {
    if g.n() == 0 || min_degree(g) == 0 {
        return domain("the bound needs a graph without isolated vertices");
    }
    let gamma = if is_tree(g) {
        tree_domination_number(&TreeWitness::new(g.clone())?)
    } else {
        gamma_exact(g)?.gamma
    };
    Ok(gamma <= g.n() / 2)
}

/// Whether `V \ d` dominates, for a minimum dominating set `d` of a tree
/// with `γ = n/2`.
pub fn complement_dominates(t: &TreeWitness, d: &[usize]) -> Result<bool> {
    let n = t.n();
    if !n.is_multiple_of(2) {
        return domain(format!("tree order {n} is odd"));
    }
    let gamma = tree_domination_number(t);
    if gamma * 2 != n {
        return domain(format!("gamma = {gamma} differs from n/2 = {}", n / 2));
    }
    let mut set = d.to_vec();
    set.sort_unstable();
    set.dedup();
    if !is_dominating_set(t.graph(), &set)? || set.len() != gamma {
        return domain("the given set is not a minimum dominating set");
    }
    let complement: Vec<usize> = (0..n).filter(|v| set.binary_search(v).is_err()).collect();
    is_dominating_set(t.graph(), &complement)
}

/// Maximum matching of a tree: leaves are matched to their parents bottom-up.
pub fn tree_maximum_matching(t: &TreeWitness) -> Vec<(usize, usize)> {
    let mut matched = vec![false; t.n()];
    let mut out = Vec::new();
    for &v in t.bfs_order().iter().rev() {
        if let Some(p) = t.parent()[v] {
            if !matched[v] && !matched[p] {
                matched[v] = true;
                matched[p] = true;
                out.push((v.min(p), v.max(p)));
            }
        }
    }
    out.sort_unstable();
    out
}
