mod common;

use common::{connected_strategy, permutation, tree_strategy};
use minrho::enumerate::free_trees;
use minrho::graph::named_trees::h_tree;
use minrho::graph::{max_degree, relabel, Graph};
use minrho::spectral::{char_poly, char_poly_tree, compare_rho, spectral_radius, sturm_count};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use std::cmp::Ordering;

fn tol() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000))
}

/// Largest adjacency eigenvalue by power iteration on `A + I`.
fn power_iteration(g: &Graph) -> f64 {
    let n = g.n();
    let mut x = vec![1.0; n];
    let mut lambda = 0.0;
    for _ in 0..20_000 {
        let y: Vec<f64> = (0..n)
            .map(|v| x[v] + g.neighbors(v).iter().map(|&u| x[u]).sum::<f64>())
            .collect();
        let norm = y.iter().map(|a| a * a).sum::<f64>().sqrt();
        let next = y.iter().zip(&x).map(|(a, b)| a * b).sum::<f64>()
            / x.iter().map(|a| a * a).sum::<f64>();
        x = y.iter().map(|a| a / norm).collect();
        if (next - lambda).abs() < 1e-13 {
            lambda = next;
            break;
        }
        lambda = next;
    }
    lambda - 1.0
}

#[test]
fn tree_recurrence_matches_determinant_up_to_14() {
    for n in 1..=14 {
        for t in free_trees(n).unwrap() {
            assert_eq!(char_poly_tree(&t), char_poly(t.graph()));
        }
    }
}

#[test]
fn compare_is_consistent_with_enclosures_on_named_trees() {
    let hs: Vec<Graph> = (1..=25).map(|k| h_tree(k).unwrap()).collect();
    let rs: Vec<_> = hs
        .iter()
        .map(|g| spectral_radius(g, &tol()).unwrap())
        .collect();
    for a in 0..hs.len() {
        for b in 0..hs.len() {
            let ord = compare_rho(&hs[a], &hs[b]).unwrap();
            match ord {
                Ordering::Less => assert!(rs[a].lo <= rs[b].hi),
                Ordering::Greater => assert!(rs[a].hi >= rs[b].lo),
                Ordering::Equal => assert!(rs[a].lo <= rs[b].hi && rs[b].lo <= rs[a].hi),
            }
            if rs[a].hi < rs[b].lo {
                assert_eq!(ord, Ordering::Less);
            }
            assert_eq!(compare_rho(&hs[b], &hs[a]).unwrap(), ord.reverse());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn char_poly_ignores_labels(
        (g, perm) in connected_strategy(1, 9).prop_flat_map(|g| { let n = g.n(); (Just(g), permutation(n)) }),
    ) {
        prop_assert_eq!(char_poly(&g), char_poly(&relabel(&g, &perm).unwrap()));
    }

    #[test]
    fn low_order_coefficients(g in connected_strategy(2, 10)) {
        let p = char_poly(&g);
        let n = g.n();
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.coeff(n - 1), BigInt::from(0));
        prop_assert_eq!(p.coeff(n - 2), -BigInt::from(g.edge_count()));
    }

    #[test]
    fn enclosure_is_sound(g in connected_strategy(2, 10)) {
        let e = spectral_radius(&g, &tol()).unwrap();
        let p = char_poly(&g);
        let top = BigRational::from_integer(BigInt::from(max_degree(&g) + 1));
        prop_assert_eq!(sturm_count(&p, &e.hi, &top).unwrap(), 0);
        if !e.is_exact() {
            prop_assert_eq!(sturm_count(&p.square_free_part(), &e.lo, &e.hi).unwrap(), 1);
        }
        let approx = power_iteration(&g);
        let lo = e.lo.to_f64().unwrap();
        let hi = e.hi.to_f64().unwrap();
        prop_assert!(lo - 1e-6 <= approx && approx <= hi + 1e-6, "{} not in [{}, {}]", approx, lo, hi);
    }

    #[test]
    fn removing_a_leaf_lowers_the_radius(t in tree_strategy(3, 14)) {
        let leaf = (0..t.n()).rev().find(|&v| t.degree(v) == 1).unwrap();
        let keep: Vec<(usize, usize)> = t.edges().into_iter().filter(|&(u, v)| u != leaf && v != leaf).collect();
        let map = |v: usize| if v > leaf { v - 1 } else { v };
        let edges: Vec<(usize, usize)> = keep.iter().map(|&(u, v)| (map(u), map(v))).collect();
        let smaller = Graph::from_edges(t.n() - 1, &edges).unwrap();
        prop_assert_eq!(compare_rho(&smaller, &t).unwrap(), Ordering::Less);
    }
}
