use super::{DominationCertificate, Method};
use crate::error::{invalid, Result};
use crate::graph::{support_vertices, TreeWitness};

const INF: usize = usize::MAX / 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pin {
    Free,
    In,
    Out,
}

/// Per-vertex optimal subtree costs for the three states:
/// in the set, dominated by a child, or waiting for the parent.
#[derive(Clone, Copy, Debug)]
struct Costs {
    inside: usize,
    by_child: usize,
    waiting: usize,
}

fn add(a: usize, b: usize) -> usize {
    a.saturating_add(b).min(INF)
}

fn solve(t: &TreeWitness, pins: &[Pin]) -> Vec<Costs> {
    let n = t.n();
    let mut costs = vec![
        Costs {
            inside: INF,
            by_child: INF,
            waiting: INF,
        };
        n
    ];
    for &v in t.bfs_order().iter().rev() {
        let mut inside = 1;
        let mut waiting = 0;
        let mut by_child = 0;
        let mut best_switch = INF;
        for c in t.children(v) {
            let cc = costs[c];
            inside = add(inside, cc.inside.min(cc.by_child).min(cc.waiting));
            waiting = add(waiting, cc.by_child);
            let settled = cc.inside.min(cc.by_child);
            by_child = add(by_child, settled);
            best_switch = best_switch.min(cc.inside - settled);
        }
        let by_child = add(by_child, best_switch);
        let mut c = Costs {
            inside,
            by_child,
            waiting,
        };
        match pins[v] {
            Pin::Free => {}
            Pin::In => {
                c.by_child = INF;
                c.waiting = INF;
            }
            Pin::Out => c.inside = INF,
        }
        costs[v] = c;
    }
    costs
}

fn optimum(t: &TreeWitness, pins: &[Pin]) -> usize {
    let root = solve(t, pins)[0];
    root.inside.min(root.by_child)
}

/// `γ(T)` by the linear-time rooted DP, without a certificate.
pub fn tree_domination_number(t: &TreeWitness) -> usize {
    optimum(t, &vec![Pin::Free; t.n()])
}

/// Lexicographically smallest optimal set under the given pins: each vertex
/// in increasing order is pinned in whenever that keeps the optimum.
fn lex_smallest(t: &TreeWitness, mut pins: Vec<Pin>) -> (usize, Vec<usize>) {
    let target = optimum(t, &pins);
    for v in 0..t.n() {
        if pins[v] != Pin::Free {
            continue;
        }
        pins[v] = Pin::In;
        if optimum(t, &pins) != target {
            pins[v] = Pin::Out;
        }
    }
    let set: Vec<usize> = (0..t.n()).filter(|&v| pins[v] == Pin::In).collect();
    debug_assert_eq!(set.len(), target);
    (target, set)
}

/// Exact `γ(T)` with a certificate (ties broken toward the lexicographically
/// smallest vertex set).
pub fn gamma_tree(t: &TreeWitness) -> DominationCertificate {
    let (gamma, set) = lex_smallest(t, vec![Pin::Free; t.n()]);
    DominationCertificate {
        gamma,
        set,
        method: Method::TreeDp,
        supports_included: false,
    }
}

/// A smallest dominating set that contains every support vertex.
pub fn dominating_set_with_supports(t: &TreeWitness) -> Result<DominationCertificate> {
    if t.n() < 2 {
        return invalid("support vertices need a tree on at least two vertices");
    }
    let mut pins = vec![Pin::Free; t.n()];
    for s in support_vertices(t.graph()) {
        pins[s] = Pin::In;
    }
    let (gamma, set) = lex_smallest(t, pins);
    Ok(DominationCertificate {
        gamma,
        set,
        method: Method::TreeDp,
        supports_included: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_dominating_set;
    use crate::graph::{build_corona, build_path, build_star, build_t, CaterpillarSpec, Graph};

    fn tw(g: Graph) -> TreeWitness {
        TreeWitness::new(g).unwrap()
    }

    #[test]
    fn paths() {
        assert_eq!(gamma_tree(&tw(build_path(9).unwrap())).gamma, 3);
        for n in 1..=60 {
            assert_eq!(
                tree_domination_number(&tw(build_path(n).unwrap())),
                n.div_ceil(3),
                "P{n}"
            );
        }
    }

    #[test]
    fn named_trees() {
        let t = tw(build_t(&CaterpillarSpec::new(8, 3, 2).unwrap()));
        let c = gamma_tree(&t);
        assert_eq!(c.gamma, 6);
        assert!(is_dominating_set(t.graph(), &c.set).unwrap());
        let corona = tw(build_corona(&build_path(4).unwrap()).unwrap());
        assert_eq!(gamma_tree(&corona).gamma, 4);
        assert_eq!(gamma_tree(&tw(build_star(5).unwrap())).set, vec![0]);
        assert_eq!(gamma_tree(&tw(build_path(1).unwrap())).gamma, 1);
    }

    #[test]
    fn lexicographic_tie_break() {
        // P4 = 0-1-2-3: minimum sets {0,2},{0,3},{1,2},{1,3},{0,... } -> smallest is {0,2}
        assert_eq!(gamma_tree(&tw(build_path(4).unwrap())).set, vec![0, 2]);
    }

    #[test]
    fn supports_variant() {
        let p4 = tw(build_path(4).unwrap());
        let c = dominating_set_with_supports(&p4).unwrap();
        assert_eq!(c.set, vec![1, 2]);
        assert!(c.supports_included);
        let corona = tw(build_corona(&build_path(3).unwrap()).unwrap());
        assert_eq!(
            dominating_set_with_supports(&corona).unwrap().set,
            vec![0, 1, 2]
        );
        assert!(dominating_set_with_supports(&tw(build_path(1).unwrap())).is_err());
    }
}
