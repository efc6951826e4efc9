use super::report::{VerificationReport, Witness};
use super::{enclosure, tight_tol};
use crate::domination::tree_domination_number;
use crate::enumerate::{filter_class, free_trees, TreeClassFilter};
use crate::error::Result;
use crate::graph::named_trees::{diameter_bound_tree, h_tree, H_PRINTED_RADII, T3_PRINTED_RADIUS};
use crate::graph::{build_t, tree_canonical_form, CaterpillarSpec, Graph};
use crate::spectral::{compare_rho, parse_rational, RadiusEnclosure};
use num_rational::BigRational;
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Printed four-decimal radius of the odd-order minimizer on 13 vertices.
pub const MINIMIZER_13_PRINTED_RADIUS: &str = "2.1358";

/// Half a unit in the fourth decimal place.
pub fn printed_tolerance() -> BigRational {
    parse_rational("0.00005").expect("literal")
}

/// Whether the whole enclosure lies within half a unit of the printed
/// four-decimal value.
pub fn matches_printed(rho: &RadiusEnclosure, printed: &str) -> bool {
    let target = parse_rational(printed).expect("printed radii are decimals");
    rho.within(&target, &printed_tolerance())
}

fn leafy_class(n: usize) -> Result<Vec<Graph>> {
    let f = TreeClassFilter {
        gamma_eq: Some((n - 1) / 2),
        leaf_mult_le: Some(1),
        ..Default::default()
    };
    Ok(filter_class(free_trees(n)?, f, tree_domination_number)
        .map(|t| t.into_graph())
        .collect())
}

/// The two smallest odd classes (`γ = (n-1)/2`, leaf multiplicities at most
/// one) have 7 and 18 members, they are exactly `H1..H25`, and every radius
/// matches its printed value.
pub fn verify_small_classes() -> Result<VerificationReport> {
    let mut r = VerificationReport::new("small-classes", vec![9, 11]);
    let mut members: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
    for (n, want) in [(9, 7), (11, 18)] {
        let class = leafy_class(n)?;
        r.check(
            class.len() == want,
            Witness::new(format!("class size n={n}"))
                .detail(format!("{} trees, expected {want}", class.len())),
        );
        for g in &class {
            members.insert(tree_canonical_form(g).expect("tree"), 0);
        }
    }
    let mut shared: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (k, printed) in H_PRINTED_RADII.iter().enumerate().map(|(i, p)| (i + 1, *p)) {
        let h = h_tree(k)?;
        shared.entry(printed).or_default().push(k);
        match members.get_mut(&tree_canonical_form(&h).expect("tree")) {
            Some(hits) => *hits += 1,
            None => r.fail(Witness::new(format!("H{k} not in its class")).graph(&h)),
        }
        let rho = enclosure(&h, &tight_tol())?;
        let ok = matches_printed(&rho, printed);
        let detail = format!("printed {printed}, computed {}", rho.decimal(6));
        r.check(
            ok,
            Witness::new(format!("H{k}"))
                .graph(&h)
                .rho(rho)
                .detail(detail),
        );
    }
    if let Some((_, hits)) = members.iter().find(|(_, &hits)| hits != 1) {
        r.fail(
            Witness::new("class member not drawn exactly once").detail(format!("{hits} drawings")),
        );
    }
    for (printed, ks) in shared.into_iter().filter(|(_, ks)| ks.len() > 1) {
        let names: Vec<String> = ks.iter().map(|k| format!("H{k}")).collect();
        r.witness(Witness::new("shared printed radius").detail(format!(
            "{} all print {printed}; matched by drawing",
            names.join(", ")
        )));
    }
    Ok(r)
}

/// The class on 13 vertices with diameter at most 6, `Δ = 3`, leaf
/// multiplicities at most one and `γ = 6` is `{T3}`; on 15 vertices it is
/// empty; `T3` loses to the 13-vertex minimizer.
pub fn verify_short_diameter_class() -> Result<VerificationReport> {
    let mut r = VerificationReport::new("short-diameter-class", vec![13, 15]);
    let filter = |gamma| TreeClassFilter {
        gamma_eq: Some(gamma),
        max_degree_eq: Some(3),
        leaf_mult_le: Some(1),
        diameter_le: Some(6),
        ..Default::default()
    };
    let t3 = diameter_bound_tree(3)?;
    let c13: Vec<Graph> = filter_class(free_trees(13)?, filter(6), tree_domination_number)
        .map(|t| t.into_graph())
        .collect();
    let is_t3 = c13.len() == 1 && tree_canonical_form(&c13[0]) == tree_canonical_form(&t3);
    r.check(
        is_t3,
        Witness::new("n=13 class is {T3}").detail(format!("{} trees", c13.len())),
    );
    let c15 = filter_class(free_trees(15)?, filter(7), tree_domination_number).count();
    r.check(
        c15 == 0,
        Witness::new("n=15 class is empty").detail(format!("{c15} trees")),
    );

    let rho_t3 = enclosure(&t3, &tight_tol())?;
    let ok = matches_printed(&rho_t3, T3_PRINTED_RADIUS);
    r.check(
        ok,
        Witness::new("T3")
            .graph(&t3)
            .rho(rho_t3)
            .detail(format!("printed {T3_PRINTED_RADIUS}")),
    );
    let best = build_t(&CaterpillarSpec::odd_minimizer(13)?);
    let rho_best = enclosure(&best, &tight_tol())?;
    let ok = matches_printed(&rho_best, MINIMIZER_13_PRINTED_RADIUS);
    r.check(
        ok,
        Witness::new("T^8_{3,2}")
            .graph(&best)
            .rho(rho_best)
            .detail(format!("printed {MINIMIZER_13_PRINTED_RADIUS}")),
    );
    let ord = compare_rho(&best, &t3)?;
    r.check(
        ord == Ordering::Less,
        Witness::new("compare(T^8_{3,2}, T3)").detail(format!("{ord:?}")),
    );
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_matching() {
        let g = crate::graph::build_path(2).unwrap();
        let rho = enclosure(&g, &tight_tol()).unwrap();
        assert!(matches_printed(&rho, "1.0000"));
        assert!(matches_printed(&rho, "1.00004"));
        assert!(!matches_printed(&rho, "1.0001"));
    }

    #[test]
    fn short_diameter_class() {
        let r = verify_short_diameter_class().unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn small_classes_fail_only_on_h23() {
        let r = verify_small_classes().unwrap();
        let bad: Vec<&str> = r.counterexamples.iter().map(|w| w.label.as_str()).collect();
        assert_eq!(bad, vec!["H23"]);
    }
}
