use crate::graph::{diameter, is_caterpillar, leaf_multiplicity, max_degree, TreeWitness};
use serde::{Deserialize, Serialize};

/// Conjunction of structural constraints on a tree class. Unset fields do
/// not constrain.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeClassFilter {
    pub gamma_eq: Option<usize>,
    pub max_degree_le: Option<usize>,
    pub max_degree_eq: Option<usize>,
    pub leaf_mult_le: Option<usize>,
    pub diameter_eq: Option<usize>,
    pub diameter_le: Option<usize>,
    #[serde(default)]
    pub caterpillar_only: bool,
}

impl TreeClassFilter {
    /// Everything except `γ`, cheapest first.
    pub fn matches_structure(&self, t: &TreeWitness) -> bool {
        let g = t.graph();
        if self.max_degree_le.is_some() || self.max_degree_eq.is_some() {
            let d = max_degree(g);
            if self.max_degree_le.is_some_and(|m| d > m)
                || self.max_degree_eq.is_some_and(|m| d != m)
            {
                return false;
            }
        }
        if let Some(m) = self.leaf_mult_le {
            if (0..g.n()).any(|v| leaf_multiplicity(g, v) > m) {
                return false;
            }
        }
        if self.caterpillar_only && !is_caterpillar(g) {
            return false;
        }
        if self.diameter_eq.is_some() || self.diameter_le.is_some() {
            let d = diameter(g).expect("trees are connected");
            if self.diameter_eq.is_some_and(|m| d != m) || self.diameter_le.is_some_and(|m| d > m) {
                return false;
            }
        }
        true
    }

    pub fn matches<G: Fn(&TreeWitness) -> usize>(&self, t: &TreeWitness, gamma: &G) -> bool {
        self.matches_structure(t) && self.gamma_eq.is_none_or(|k| gamma(t) == k)
    }
}

/// Lazily keeps the trees that satisfy `f`, evaluating `γ` last.
pub fn filter_class<I, G>(src: I, f: TreeClassFilter, gamma: G) -> impl Iterator<Item = TreeWitness>
where
    I: Iterator<Item = TreeWitness>,
    G: Fn(&TreeWitness) -> usize,
{
    src.filter(move |t| f.matches(t, &gamma))
}
