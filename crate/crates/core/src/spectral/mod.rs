//! Exact spectral machinery: characteristic polynomials, Sturm root
//! counting, certified spectral-radius enclosures and exact comparison.

mod charpoly;
mod poly;
mod radius;
mod shift;
mod sturm;

pub use charpoly::{
    char_poly, char_poly_tree, char_poly_tree_cached, char_poly_tree_graph, TreePolyCache,
};
pub use poly::IntPolynomial;
pub use radius::{
    compare_rho, corona_radius, default_tol, one_plus_sqrt2, parse_rational, radius_isolator,
    rational_string, spectral_radius, RadiusEnclosure, RootIsolator,
};
pub use shift::{shift_difference, shift_difference_reduced};
pub use sturm::{sturm_count, SturmChain};
