//! Small named trees: `H1..H25` (the two smallest odd-order classes) with their printed
//! spectral radii, and `T1..T3` from the diameter-bound argument.

use super::Graph;
use crate::error::{invalid, Result};

/// Printed four-decimal spectral radii of `H1..H25`.
pub const H_PRINTED_RADII: [&str; 25] = [
    "2.2361", "2.2059", "2.1358", "2.1120", "2.0743", "2.0421", "2", "2.4495", "2.4236", "2.3213",
    "2.3073", "2.2966", "2.2920", "2.2552", "2.2470", "2.2143", "2.2216", "2.2143", "2.1978",
    "2.1566", "2.1358", "2.1224", "2.1606", "2.0922", "2.0529",
];

/// Printed spectral radius of `T3`.
pub const T3_PRINTED_RADIUS: &str = "2.2882";

/// `H_k` for `k` in `1..=25`; `H1..H7` have 9 vertices, the rest 11.
pub fn h_tree(k: usize) -> Result<Graph> {
    if !(1..=25).contains(&k) {
        return invalid(format!("H_k is defined for 1 <= k <= 25, got {k}"));
    }
    let (n, edges) = H_TREES[k - 1];
    Graph::from_edges(n, edges)
}

/// `T_k` for `k` in `1..=3`.
pub fn diameter_bound_tree(k: usize) -> Result<Graph> {
    if !(1..=3).contains(&k) {
        return invalid(format!("T_k is defined for 1 <= k <= 3, got {k}"));
    }
    let (n, edges) = T_TREES[k - 1];
    Graph::from_edges(n, edges)
}

const H_TREES: [(usize, &[(usize, usize)]); 25] = [
    (
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 5),
            (2, 6),
            (3, 4),
            (5, 7),
            (6, 8),
        ],
    ),
    (
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 6),
            (2, 7),
            (3, 4),
            (4, 5),
            (7, 8),
        ],
    ),
    (
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 6),
            (3, 4),
            (3, 7),
            (4, 5),
            (7, 8),
        ],
    ),
    (
        9,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (1, 7),
            (2, 3),
            (2, 8),
            (3, 4),
            (4, 5),
        ],
    ),
    (
        9,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (1, 7),
            (2, 3),
            (3, 4),
            (3, 8),
            (4, 5),
        ],
    ),
    (
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 6),
            (3, 4),
            (4, 5),
            (5, 7),
            (6, 8),
        ],
    ),
    (
        9,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (1, 7),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 8),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 5),
            (2, 6),
            (2, 7),
            (3, 4),
            (5, 8),
            (6, 9),
            (7, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 6),
            (2, 7),
            (2, 8),
            (3, 4),
            (4, 5),
            (6, 9),
            (7, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 6),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 5),
            (6, 9),
            (7, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 6),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 5),
            (7, 9),
            (8, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (2, 3),
            (2, 7),
            (2, 8),
            (3, 4),
            (3, 9),
            (4, 5),
            (8, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 8),
            (3, 9),
            (4, 5),
            (8, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (2, 3),
            (3, 4),
            (3, 7),
            (3, 8),
            (4, 5),
            (7, 9),
            (8, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (1, 7),
            (2, 3),
            (3, 4),
            (3, 8),
            (3, 9),
            (4, 5),
            (8, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (4, 7),
            (4, 8),
            (5, 9),
            (8, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (1, 7),
            (2, 3),
            (2, 8),
            (3, 4),
            (3, 9),
            (4, 5),
            (8, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (1, 7),
            (2, 3),
            (2, 8),
            (3, 4),
            (3, 9),
            (4, 5),
            (9, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 5),
            (4, 9),
            (5, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (1, 7),
            (2, 3),
            (2, 8),
            (3, 4),
            (4, 5),
            (5, 9),
            (8, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (1, 7),
            (2, 3),
            (3, 4),
            (3, 8),
            (4, 5),
            (7, 9),
            (8, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 7),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (4, 8),
            (5, 6),
            (5, 9),
            (6, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (1, 7),
            (2, 3),
            (2, 8),
            (3, 4),
            (4, 5),
            (4, 9),
            (5, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 6),
            (1, 2),
            (1, 7),
            (2, 3),
            (3, 4),
            (4, 5),
            (4, 8),
            (5, 9),
            (8, 10),
        ],
    ),
    (
        11,
        &[
            (0, 1),
            (0, 7),
            (1, 2),
            (1, 8),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (5, 9),
            (6, 10),
        ],
    ),
];
const T_TREES: [(usize, &[(usize, usize)]); 3] = [
    (
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 6),
            (3, 4),
            (3, 7),
            (4, 5),
            (6, 8),
            (7, 9),
        ],
    ),
    (
        16,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 5),
            (4, 9),
            (5, 6),
            (7, 10),
            (8, 11),
            (8, 12),
            (9, 13),
            (11, 14),
            (12, 15),
        ],
    ),
    (
        13,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 5),
            (4, 9),
            (5, 6),
            (8, 10),
            (8, 11),
            (11, 12),
        ],
    ),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{diameter, is_tree, max_degree};

    #[test]
    fn all_named_graphs_are_trees() {
        for k in 1..=25 {
            let h = h_tree(k).unwrap();
            assert!(is_tree(&h), "H{k}");
            assert_eq!(h.n(), if k <= 7 { 9 } else { 11 });
        }
        for k in 1..=3 {
            assert!(is_tree(&diameter_bound_tree(k).unwrap()));
        }
        assert!(h_tree(0).is_err());
        assert!(h_tree(26).is_err());
        assert!(diameter_bound_tree(4).is_err());
    }

    #[test]
    fn diameter_bound_tree_sizes() {
        let sizes: Vec<_> = (1..=3)
            .map(|k| diameter_bound_tree(k).unwrap().n())
            .collect();
        assert_eq!(sizes, vec![10, 16, 13]);
        assert_eq!(diameter(&diameter_bound_tree(1).unwrap()).unwrap(), 5);
        assert_eq!(diameter(&diameter_bound_tree(2).unwrap()).unwrap(), 6);
        let t3 = diameter_bound_tree(3).unwrap();
        assert_eq!(diameter(&t3).unwrap(), 6);
        assert_eq!(max_degree(&t3), 3);
    }
}
