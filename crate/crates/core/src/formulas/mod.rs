//! Exact evaluation of the closed-form state-complexity formulas.
//!
//! Every value is a [`Nat`] (arbitrary-precision, no floating point) and
//! every comparison between an estimate and an exact value goes through
//! [`Ratio`], so "< 4" and "= 4" are decided exactly.

mod catenation;
mod combined;
mod ratio;

pub use catenation::{
    approx_cat_k, cat_k_terms, claim_upper_cat_k, sc_cat2, sc_cat4, sc_cat_k, CatTerms, SizeVector,
};
pub use combined::{
    neu_bound, nsc_basic, quotient_bounds, sc_star_catenation, sc_star_intersection, sc_star_reversal,
    sc_star_union, BasicOp, NeuInner, NeuSpec, QuotientBounds, StarCombination,
};
pub use ratio::{ratio, Ratio};

/// Arbitrary-precision nonnegative integer.
pub type Nat = num_bigint::BigUint;

/// `2^e`.
pub fn pow2(e: u64) -> Nat {
    Nat::from(1u8) << e
}

pub(crate) fn at_least_two(name: &str, v: u64) -> crate::Result<()> {
    if v < 2 {
        Err(crate::error::invalid(format!("{name} must be at least 2 (got {v})")))
    } else {
        Ok(())
    }
}
