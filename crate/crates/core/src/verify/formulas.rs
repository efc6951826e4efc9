use super::report::{VerificationReport, Witness};
use super::tight_tol;
use crate::domination::{
    all_minimum_dominating_sets, complement_dominates, dominating_set_with_supports,
    gamma_starlike_formula, gamma_tree, is_dominating_set, ore_bound_check, starlike_parameters,
    tree_domination_number, tree_maximum_matching,
};
use crate::enumerate::{connected_graphs_labeled, free_trees};
use crate::error::Result;
use crate::graph::{
    attach_path, build_corona, build_path, build_starlike, build_wn, delete_edge, delete_vertices,
    internal_path_edges, is_connected, max_degree, subdivide_edge, support_vertices,
    tree_canonical_form, Graph, TreeWitness,
};
use crate::spectral::{
    char_poly, char_poly_tree, compare_rho, corona_radius, spectral_radius, sturm_count,
    IntPolynomial,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::collections::BTreeSet;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random connected graph: a random recursive tree plus each remaining pair
/// with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let tree: BTreeSet<(usize, usize)> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("distinct pairs")
}

pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    random_connected_graph(rng, n, 0.0)
}

/// `ρ(G ∘ K1) = (ρ(G) + sqrt(ρ(G)² + 4)) / 2` on random connected graphs:
/// the formula's enclosure must meet the directly computed one.
pub fn verify_corona_formula(samples: usize) -> Result<VerificationReport> {
    let mut rng = rng(0x0c07);
    let mut r = VerificationReport::new("corona-radius", (1..=10).collect());
    let mut agree = 0;
    for _ in 0..samples {
        let n = rng.gen_range(1..=10);
        let g = random_connected_graph(&mut rng, n, 0.3);
        let formula = corona_radius(&spectral_radius(&g, &tight_tol())?);
        let direct = spectral_radius(&build_corona(&g)?, &tight_tol())?;
        if formula.lo <= direct.hi && direct.lo <= formula.hi {
            agree += 1;
        } else {
            r.fail(
                Witness::new("corona")
                    .graph(&g)
                    .rho(direct)
                    .detail(format!("formula ~ {}", formula.decimal(9))),
            );
        }
    }
    r.witness(Witness::new("samples").detail(format!("{agree}/{samples} agree")));
    Ok(r)
}

/// Closed-form `γ` of spiders against the tree DP. Spiders are drawn from
/// the formula's full hypothesis: three to five legs of any residue class.
pub fn verify_starlike_formula(samples: usize) -> Result<VerificationReport> {
    let mut rng = rng(0x5717);
    let mut r = VerificationReport::new("starlike-domination", vec![]);
    let mut agree = 0;
    let mut orders = BTreeSet::new();
    for _ in 0..samples {
        let legs = rng.gen_range(3..=5);
        let (mut a, mut b, mut c) = (Vec::new(), Vec::new(), Vec::new());
        for _ in 0..legs {
            match rng.gen_range(0..3) {
                0 => a.push(rng.gen_range(0..=3)),
                1 => b.push(rng.gen_range(0..=3)),
                _ => c.push(rng.gen_range(1..=3)),
            }
        }
        let (n, s, t, h) = starlike_parameters(&a, &b, &c);
        orders.insert(n);
        let tree = TreeWitness::new(build_starlike(&a, &b, &c)?)?;
        let dp = tree_domination_number(&tree);
        let formula = gamma_starlike_formula(n, s, t, h)?;
        if formula == dp {
            agree += 1;
        } else {
            r.fail(Witness::new("spider").graph(tree.graph()).detail(format!(
                "a={a:?} b={b:?} c={c:?} n={n} s={s} t={t} h={h}: formula {formula}, dp {dp}"
            )));
        }
    }
    r.n_range = orders.into_iter().collect();
    r.witness(Witness::new("samples").detail(format!("{agree}/{samples} agree")));
    Ok(r)
}

/// `γ(P_n) = ⌈n/3⌉`.
pub fn verify_path_domination(max_n: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("path-domination", (1..=max_n).collect());
    for n in 1..=max_n {
        let t = TreeWitness::new(build_path(n)?)?;
        let c = gamma_tree(&t);
        if c.gamma != n.div_ceil(3) || !is_dominating_set(t.graph(), &c.set)? {
            r.fail(Witness::new(format!("P{n}")).detail(format!("gamma {}", c.gamma)));
        }
    }
    r.witness(Witness::new("paths").detail(format!("n = 1..={max_n}")));
    Ok(r)
}

/// `γ(G) <= n/2` for every labelled connected graph on `2..=max_n` vertices.
pub fn verify_ore_bound(max_n: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("ore-bound", (2..=max_n).collect());
    for n in 2..=max_n {
        let mut count = 0usize;
        for g in connected_graphs_labeled(n)? {
            count += 1;
            if !ore_bound_check(&g)? {
                r.fail(Witness::new("graph").graph(&g));
            }
        }
        r.witness(
            Witness::new(format!("n={n}")).detail(format!("{count} labelled connected graphs")),
        );
    }
    Ok(r)
}

/// `f(T) = f(T - uv) - f(T - u - v)` at every edge of every tree up to
/// `max_n`, all three terms from the determinant route, and the memoised
/// pendant-edge recursion against the determinant.
pub fn verify_edge_deletion(max_n: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("edge-deletion-recurrence", (1..=max_n).collect());
    let mut equalities = 0usize;
    for n in 1..=max_n {
        for t in free_trees(n)? {
            let g = t.graph();
            let direct = char_poly(g);
            equalities += 1;
            if char_poly_tree(&t) != direct {
                r.fail(Witness::new("recursion differs from determinant").graph(g));
            }
            for (u, v) in g.edges() {
                let without_edge = char_poly(&delete_edge(g, u, v)?);
                let (without_both, _) = delete_vertices(g, &BTreeSet::from([u, v]))?;
                let rhs = &without_edge - &char_poly(&without_both);
                equalities += 1;
                if rhs != direct {
                    r.fail(
                        Witness::new("edge")
                            .graph(g)
                            .detail(format!("edge ({u},{v})")),
                    );
                }
            }
        }
    }
    r.witness(Witness::new("identities").detail(format!("{equalities} polynomial equalities")));
    Ok(r)
}

/// Every tree on `3..=max_n` vertices has a minimum dominating set that
/// contains all support vertices. `P2` is the lone exception: both of its
/// vertices are supports.
pub fn verify_supports(max_n: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("supports-in-dominating-set", (3..=max_n).collect());
    let p2 = TreeWitness::new(build_path(2)?)?;
    r.witness(Witness::new("P2 excluded").detail(format!(
        "supports force {} vertices, gamma is {}",
        dominating_set_with_supports(&p2)?.gamma,
        tree_domination_number(&p2)
    )));
    let mut count = 0usize;
    for n in 3..=max_n {
        for t in free_trees(n)? {
            count += 1;
            let c = dominating_set_with_supports(&t)?;
            let supports = support_vertices(t.graph());
            let ok = c.gamma == tree_domination_number(&t)
                && is_dominating_set(t.graph(), &c.set)?
                && supports.iter().all(|s| c.set.binary_search(s).is_ok());
            if !ok {
                r.fail(
                    Witness::new("tree")
                        .graph(t.graph())
                        .detail(format!("{:?}", c.set)),
                );
            }
        }
    }
    r.witness(Witness::new("trees").detail(format!("{count} trees")));
    Ok(r)
}

/// For trees on even `n` with `γ = n/2`: a perfect matching exists, and the
/// complement of a minimum dominating set dominates. Both the universal
/// reading (every minimum set) and the existential one are reported.
pub fn verify_complement(orders: &[usize]) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("complement-dominating-set", orders.to_vec());
    for &n in orders {
        let (mut trees, mut sets, mut some) = (0usize, 0usize, 0usize);
        for t in free_trees(n)? {
            if tree_domination_number(&t) * 2 != n {
                continue;
            }
            trees += 1;
            if tree_maximum_matching(&t).len() * 2 != n {
                r.fail(Witness::new("no perfect matching").graph(t.graph()));
            }
            let mut any = false;
            for d in all_minimum_dominating_sets(t.graph())? {
                sets += 1;
                if complement_dominates(&t, &d)? {
                    any = true;
                } else {
                    r.fail(
                        Witness::new("complement not dominating")
                            .graph(t.graph())
                            .detail(format!("{d:?}")),
                    );
                }
            }
            some += usize::from(any);
        }
        r.witness(Witness::new(format!("n={n}")).detail(format!(
            "{trees} trees, {sets} minimum sets; universal reading holds iff no counterexample; existential holds for {some}/{trees}"
        )));
    }
    Ok(r)
}

/// A connected proper subgraph has strictly smaller spectral radius.
pub fn verify_subgraph_monotonicity(samples: usize) -> Result<VerificationReport> {
    let mut rng = rng(0x5b9);
    let mut r = VerificationReport::new("subgraph-monotonicity", vec![]);
    let mut orders = BTreeSet::new();
    for _ in 0..samples {
        let n = rng.gen_range(3..=9);
        orders.insert(n);
        let g = random_connected_graph(&mut rng, n, 0.35);
        let h = random_proper_subgraph(&mut rng, &g)?;
        let ord = compare_rho(&h, &g)?;
        if ord != Ordering::Less {
            r.fail(Witness::new("pair").graph(&g).detail(format!(
                "subgraph {} gives {ord:?}",
                crate::graph::to_graph6(&h)
            )));
        }
    }
    r.n_range = orders.into_iter().collect();
    r.witness(Witness::new("samples").detail(format!("{samples} pairs")));
    Ok(r)
}

/// Deletes a random edge when that keeps the graph connected, otherwise a
/// random leaf.
fn random_proper_subgraph<R: Rng>(rng: &mut R, g: &Graph) -> Result<Graph> {
    let mut edges = g.edges();
    edges.shuffle(rng);
    if rng.gen_bool(0.7) {
        for (u, v) in &edges {
            let h = delete_edge(g, *u, *v)?;
            if is_connected(&h) {
                return Ok(h);
            }
        }
    }
    let removable: Vec<usize> = (0..g.n())
        .filter(|&v| {
            let (h, _) = delete_vertices(g, &BTreeSet::from([v])).expect("in range");
            is_connected(&h)
        })
        .collect();
    let v = *removable
        .choose(rng)
        .expect("every connected graph has a non-cut vertex");
    Ok(delete_vertices(g, &BTreeSet::from([v]))?.0)
}

/// Moving one vertex from the shorter of two pendant paths at a vertex to
/// the longer one strictly lowers the spectral radius.
pub fn verify_path_relocation(samples: usize) -> Result<VerificationReport> {
    let mut rng = rng(0x11fe);
    let mut r = VerificationReport::new("path-relocation", vec![]);
    let mut orders = BTreeSet::new();
    for _ in 0..samples {
        let base_n = rng.gen_range(2..=6);
        let base = random_connected_graph(&mut rng, base_n, 0.3);
        let v = rng.gen_range(0..base_n);
        let m = rng.gen_range(1..=3);
        let k = rng.gen_range(m..=4);
        let before = attach_path(&attach_path(&base, v, k)?, v, m)?;
        let after = attach_path(&attach_path(&base, v, k + 1)?, v, m - 1)?;
        orders.insert(before.n());
        let ord = compare_rho(&after, &before)?;
        if ord != Ordering::Less {
            r.fail(
                Witness::new("relocation")
                    .graph(&before)
                    .detail(format!("v={v} k={k} m={m}: {ord:?}")),
            );
        }
    }
    r.n_range = orders.into_iter().collect();
    r.witness(Witness::new("samples").detail(format!("{samples} relocations")));
    Ok(r)
}

fn radius_above_two(g: &Graph) -> Result<bool> {
    let p: IntPolynomial = char_poly(g);
    let two = BigRational::from_integer(BigInt::from(2));
    let top = BigRational::from_integer(BigInt::from(max_degree(g) as i64 + 1));
    Ok(sturm_count(&p, &two, &top)? > 0)
}

/// Subdividing an edge on an internal path of a tree with `ρ > 2` strictly
/// lowers `ρ`; on `W_n` it stays exactly 2.
pub fn verify_internal_subdivision(samples: usize) -> Result<VerificationReport> {
    let mut rng = rng(0x4055);
    let mut r = VerificationReport::new("internal-path-subdivision", vec![]);
    let mut orders = BTreeSet::new();
    let mut done = 0;
    while done < samples {
        let n = rng.gen_range(6..=16);
        let g = random_tree(&mut rng, n);
        let edges = internal_path_edges(&g);
        if edges.is_empty() || !radius_above_two(&g)? {
            continue;
        }
        if tree_canonical_form(&g) == tree_canonical_form(&build_wn(n)?) {
            continue;
        }
        let &(u, v) = edges.choose(&mut rng).expect("nonempty");
        let h = subdivide_edge(&g, u, v, 1)?;
        let ord = compare_rho(&h, &g)?;
        if ord != Ordering::Less {
            r.fail(
                Witness::new("subdivision")
                    .graph(&g)
                    .detail(format!("edge ({u},{v}): {ord:?}")),
            );
        }
        orders.insert(n);
        done += 1;
    }
    for n in 6..=12 {
        let w = build_wn(n)?;
        let (u, v) = internal_path_edges(&w)[0];
        let h = subdivide_edge(&w, u, v, 1)?;
        let ord = compare_rho(&h, &w)?;
        r.check(
            ord == Ordering::Equal,
            Witness::new(format!("W{n}"))
                .graph(&w)
                .detail(format!("subdivided: {ord:?}")),
        );
    }
    r.n_range = orders.into_iter().collect();
    r.witness(Witness::new("samples").detail(format!("{samples} subdivisions")));
    Ok(r)
}
