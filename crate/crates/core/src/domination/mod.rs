//! Domination numbers with certificates.

mod exact;
mod facts;
mod tree_dp;

pub use exact::{
    all_minimum_dominating_sets, gamma_exact, gamma_exact_with_limit, DEFAULT_EXACT_LIMIT,
};
pub use facts::{
    complement_dominates, gamma_starlike_formula, ore_bound_check, starlike_parameters,
    tree_maximum_matching,
};
pub use tree_dp::{dominating_set_with_supports, gamma_tree, tree_domination_number};

use crate::error::{invalid, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// How optimality of a certificate was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    TreeDp,
    Exhaustive,
}

/// A minimum dominating set together with the method that proved it minimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationCertificate {
    pub gamma: usize,
    pub set: Vec<usize>,
    pub method: Method,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub supports_included: bool,
}

/// True iff the closed neighbourhoods of `d` cover every vertex.
pub fn is_dominating_set(g: &Graph, d: &[usize]) -> Result<bool> {
    let n = g.n();
    if let Some(&bad) = d.iter().find(|&&v| v >= n) {
        return invalid(format!("vertex {bad} out of range for n = {n}"));
    }
    let mut covered = vec![false; n];
    for &v in d {
        covered[v] = true;
        for &u in g.neighbors(v) {
            covered[u] = true;
        }
    }
    Ok(covered.into_iter().all(|c| c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_corona, build_path};

    #[test]
    fn dominating_examples() {
        let p3 = build_path(3).unwrap();
        assert!(is_dominating_set(&p3, &[1]).unwrap());
        assert!(!is_dominating_set(&p3, &[0]).unwrap());
        assert!(is_dominating_set(&build_corona(&p3).unwrap(), &[0, 1, 2]).unwrap());
        assert!(is_dominating_set(&p3, &[3]).is_err());
    }

    #[test]
    fn certificate_json() {
        let c = DominationCertificate {
            gamma: 2,
            set: vec![1, 4],
            method: Method::TreeDp,
            supports_included: false,
        };
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"gamma":2,"set":[1,4],"method":"tree-dp"}"#
        );
    }
}
