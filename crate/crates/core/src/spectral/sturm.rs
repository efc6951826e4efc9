use super::IntPolynomial;
use crate::error::{invalid, Result};
use num_rational::BigRational;
use std::cmp::Ordering;

/// Sturm chain of the square-free part of a polynomial. Every member is
/// kept primitive; only positive rescalings are applied, so sign-variation
/// counts are exact.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Result<Self> {
        if p.is_zero() {
            return invalid("Sturm chain of the zero polynomial");
        }
        let base = p.square_free_part();
        let mut chain = vec![base.clone()];
        let mut prev = base.clone();
        let mut cur = base.derivative().primitive_part();
        while !cur.is_zero() {
            let rem = prev.positive_pseudo_rem(&cur);
            chain.push(cur.clone());
            prev = cur;
            cur = (-&rem).primitive_part_keep_sign();
        }
        Ok(SturmChain { chain })
    }

    /// The square-free polynomial the chain was built from.
    pub fn base(&self) -> &IntPolynomial {
        &self.chain[0]
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = Ordering::Equal;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at_rational(x);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        if lo >= hi {
            return 0;
        }
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

impl IntPolynomial {
    /// Divides by the (positive) content without touching the sign.
    pub(crate) fn primitive_part_keep_sign(&self) -> IntPolynomial {
        let g = self.content();
        if g <= num_bigint::BigInt::from(1) {
            return self.clone();
        }
        IntPolynomial::new(self.coeffs().iter().map(|c| c / &g).collect())
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if lo >= hi {
        return invalid("sturm_count needs lo < hi");
    }
    Ok(SturmChain::new(p)?.count(lo, hi))
}
