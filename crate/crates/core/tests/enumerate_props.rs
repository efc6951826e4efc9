use minrho::domination::{gamma_exact_with_limit, is_dominating_set, tree_domination_number};
use minrho::enumerate::{
    filter_class, find_minimizer, find_minimizer_parallel, free_trees, TreeClassFilter,
};
use minrho::graph::{tree_canonical_form, Graph};
use proptest::prelude::*;
use std::collections::BTreeSet;

/// Decode a Prüfer sequence into the edge list of a labelled tree.
fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, &edges).unwrap()
}

/// Unlabelled tree count from all Prüfer sequences, deduplicated by canonical form.
fn prufer_count(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let len = n - 2;
    let mut seen = BTreeSet::new();
    let mut seq = vec![0; len];
    loop {
        seen.insert(tree_canonical_form(&prufer_tree(&seq)));
        let mut k = 0;
        while k < len && seq[k] == n - 1 {
            seq[k] = 0;
            k += 1;
        }
        if k == len {
            return seen.len();
        }
        seq[k] += 1;
    }
}

/// Unlabelled tree count by attaching a leaf to every vertex of every smaller tree.
fn growth_counts(max_n: usize) -> Vec<usize> {
    let mut layer: Vec<Graph> = vec![Graph::from_edges(1, &[]).unwrap()];
    let mut counts = vec![1];
    for n in 2..=max_n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &layer {
            for v in 0..t.n() {
                let mut edges = t.edges();
                edges.push((v, n - 1));
                let g = Graph::from_edges(n, &edges).unwrap();
                if seen.insert(tree_canonical_form(&g)) {
                    next.push(g);
                }
            }
        }
        counts.push(next.len());
        layer = next;
    }
    counts
}

#[test]
fn no_isomorphic_duplicates() {
    for n in 1..=10 {
        let forms: Vec<_> = free_trees(n)
            .unwrap()
            .map(|t| tree_canonical_form(t.graph()))
            .collect();
        let distinct: BTreeSet<_> = forms.iter().collect();
        assert_eq!(distinct.len(), forms.len(), "n = {n}");
    }
}

#[test]
fn counts_match_prufer_oracle() {
    for n in 1..=8 {
        assert_eq!(free_trees(n).unwrap().count(), prufer_count(n), "n = {n}");
    }
}

#[test]
fn counts_match_leaf_growth_oracle() {
    for (k, want) in growth_counts(10).into_iter().enumerate() {
        assert_eq!(free_trees(k + 1).unwrap().count(), want, "n = {}", k + 1);
    }
}

#[test]
fn half_gamma_classes_are_certified() {
    for n in 2..=12 {
        let f = TreeClassFilter {
            gamma_eq: Some(n / 2),
            ..Default::default()
        };
        for t in filter_class(free_trees(n).unwrap(), f, tree_domination_number) {
            let c = gamma_exact_with_limit(t.graph(), 12).unwrap();
            assert_eq!(c.gamma, n / 2);
            assert!(is_dominating_set(t.graph(), &c.set).unwrap());
            // nothing smaller dominates
            let smaller = (0u32..1 << n)
                .filter(|s| s.count_ones() as usize == n / 2 - 1)
                .any(|s| {
                    let set: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
                    is_dominating_set(t.graph(), &set).unwrap()
                });
            assert!(!smaller);
        }
    }
}

fn class(n: usize) -> Vec<Graph> {
    let f = TreeClassFilter {
        gamma_eq: Some((n - 1) / 2),
        ..Default::default()
    };
    filter_class(free_trees(n).unwrap(), f, tree_domination_number)
        .map(|t| t.into_graph())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn minimizer_ignores_stream_order(order in Just((0..class(11).len()).collect::<Vec<_>>()).prop_shuffle()) {
        let base = class(11);
        let shuffled: Vec<Graph> = order.iter().map(|&k| base[k].clone()).collect();
        let a = find_minimizer(base).unwrap();
        let b = find_minimizer(shuffled).unwrap();
        prop_assert_eq!(a.minimizers, b.minimizers);
        prop_assert_eq!(a.rho, b.rho);
    }

    #[test]
    fn parallel_scan_equals_sequential(chunk in 1usize..40, n in prop::sample::select(vec![7usize, 9, 11, 13])) {
        let seq = find_minimizer(class(n)).unwrap();
        let par = find_minimizer_parallel(class(n), chunk).unwrap();
        prop_assert_eq!(seq.minimizers, par.minimizers);
        prop_assert_eq!(seq.class_size, par.class_size);
    }
}
