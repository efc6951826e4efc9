//! The caterpillar shift identity: moving one pendant from the short end of
//! `T^{d+1}_{i,j}` to the long end changes the characteristic polynomial by
//! a power of `x` times the difference of two much shorter caterpillars.

use super::{char_poly_tree, IntPolynomial};
use crate::error::{invalid, Result};
use crate::graph::{build_t, CaterpillarSpec, TreeWitness};

fn tree_poly(spec: CaterpillarSpec) -> IntPolynomial {
    let t = TreeWitness::new(build_t(&spec)).expect("caterpillars are trees");
    char_poly_tree(&t)
}

fn check_admissible(spine_len: usize, i: usize, j: usize) -> Result<()> {
    if j == 0 || i < j || i + 1 > spine_len || i + j > spine_len {
        return invalid(format!(
            "shift identity needs 1 <= j <= i, i + 1 <= d + 1 and i + j <= d + 1; got d + 1 = {spine_len}, i = {i}, j = {j}"
        ));
    }
    Ok(())
}

/// `f(T^{d+1}_{i,j}) - f(T^{d+1}_{i+1,j-1})`, computed directly.
pub fn shift_difference(spine_len: usize, i: usize, j: usize) -> Result<IntPolynomial> {
    check_admissible(spine_len, i, j)?;
    let a = tree_poly(CaterpillarSpec::new(spine_len, i, j)?);
    let b = tree_poly(CaterpillarSpec::new(spine_len, i + 1, j - 1)?);
    Ok(&a - &b)
}

/// `[f(T^{d+1-(2j-2)}_{i-j+1,1}) - f(T^{d+1-(2j-2)}_{i-j+2,0})] · x^{2j-2}`.
pub fn shift_difference_reduced(spine_len: usize, i: usize, j: usize) -> Result<IntPolynomial> {
    check_admissible(spine_len, i, j)?;
    let short = spine_len - (2 * j - 2);
    let a = tree_poly(CaterpillarSpec::new(short, i - j + 1, 1)?);
    let b = tree_poly(CaterpillarSpec::new(short, i - j + 2, 0)?);
    Ok((&a - &b).shift(2 * j - 2))
}
