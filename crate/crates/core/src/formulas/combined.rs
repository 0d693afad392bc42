//! Star-of-X formulas, nondeterministic state complexities and NEU bounds,
//! plus the bounds for the two quotient/star combinations.

use std::fmt;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::{at_least_two, pow2, Nat};
use crate::error::{invalid, Result};

/// `sc((L(A) ∪ L(B))*) = 2^(m+n-1) - 2^(m-1) - 2^(n-1) + 1`.
pub fn sc_star_union(m: u64, n: u64) -> Result<Nat> {
    at_least_two("m", m)?;
    at_least_two("n", n)?;
    Ok(pow2(m + n - 1) + 1u8 - pow2(m - 1) - pow2(n - 1))
}

/// `sc((L(A) ∩ L(B))*) = 3/4 · 2^(mn)`, evaluated as `3 · 2^(mn-2)`.
pub fn sc_star_intersection(m: u64, n: u64) -> Result<Nat> {
    at_least_two("m", m)?;
    at_least_two("n", n)?;
    Ok(Nat::from(3u8) * pow2(m * n - 2))
}

/// `sc((L(A)L(B))*) = 2^(m+n-1) + 2^(m+n-4) - 2^(m-1) - 2^(n-1) + m + 1`.
pub fn sc_star_catenation(m: u64, n: u64) -> Result<Nat> {
    at_least_two("m", m)?;
    at_least_two("n", n)?;
    Ok(pow2(m + n - 1) + pow2(m + n - 4) + Nat::from(m + 1) - pow2(m - 1) - pow2(n - 1))
}

/// `sc((L(B)^R)*) = 2^n`.
pub fn sc_star_reversal(n: u64) -> Result<Nat> {
    at_least_two("n", n)?;
    Ok(pow2(n))
}

/// The individual operations whose nondeterministic state complexity feeds
/// the NEU bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasicOp {
    Union,
    Intersection,
    Catenation,
    Star,
    Reversal,
}

impl BasicOp {
    pub fn arity(self) -> usize {
        match self {
            BasicOp::Union | BasicOp::Intersection | BasicOp::Catenation => 2,
            BasicOp::Star | BasicOp::Reversal => 1,
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "union" => BasicOp::Union,
            "intersection" | "inter" => BasicOp::Intersection,
            "catenation" | "cat" => BasicOp::Catenation,
            "star" => BasicOp::Star,
            "reversal" | "rev" => BasicOp::Reversal,
            _ => return None,
        })
    }
}

impl fmt::Display for BasicOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasicOp::Union => "union",
            BasicOp::Intersection => "intersection",
            BasicOp::Catenation => "catenation",
            BasicOp::Star => "star",
            BasicOp::Reversal => "reversal",
        })
    }
}

/// Nondeterministic state complexity of an individual operation:
/// union `m+n+1`, intersection `mn`, catenation `m+n`, star `n+1`,
/// reversal `n+1`.
pub fn nsc_basic(op: BasicOp, sizes: &[Nat]) -> Result<Nat> {
    if sizes.len() != op.arity() {
        return Err(invalid(format!(
            "{op} takes {} size(s), got {}",
            op.arity(),
            sizes.len()
        )));
    }
    if sizes.iter().any(|s| *s < Nat::from(1u8)) {
        return Err(invalid("sizes must be at least 1"));
    }
    Ok(match op {
        BasicOp::Union => &sizes[0] + &sizes[1] + 1u8,
        BasicOp::Intersection => &sizes[0] * &sizes[1],
        BasicOp::Catenation => &sizes[0] + &sizes[1],
        BasicOp::Star | BasicOp::Reversal => &sizes[0] + 1u8,
    })
}

/// One inner operation `g₂ⁱ` and the DFA sizes of its arguments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeuInner {
    pub op: BasicOp,
    pub sizes: Vec<u64>,
}

/// A combined operation `g₁(g₂¹, …, g₂ᵏ)` for the NEU bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NeuSpec {
    pub outer: BasicOp,
    pub inner: Vec<NeuInner>,
}

impl NeuSpec {
    /// `star(op(sizes))`.
    pub fn star_of(op: BasicOp, sizes: &[u64]) -> Self {
        NeuSpec {
            outer: BasicOp::Star,
            inner: vec![NeuInner {
                op,
                sizes: sizes.to_vec(),
            }],
        }
    }

    /// The composed nondeterministic state complexity.
    pub fn composed_nsc(&self) -> Result<Nat> {
        let inner = self
            .inner
            .iter()
            .map(|g| {
                let sizes: Vec<Nat> = g.sizes.iter().map(|&s| Nat::from(s)).collect();
                nsc_basic(g.op, &sizes)
            })
            .collect::<Result<Vec<_>>>()?;
        nsc_basic(self.outer, &inner)
    }
}

/// `2^(nsc(g₁)(nsc(g₂¹)(…), …))`.
pub fn neu_bound(spec: &NeuSpec) -> Result<Nat> {
    let e = spec
        .composed_nsc()?
        .to_u64()
        .ok_or_else(|| invalid("NEU exponent does not fit in 64 bits"))?;
    Ok(pow2(e))
}

/// The four star combinations of the basic comparison table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StarCombination {
    StarUnion,
    StarIntersection,
    StarCatenation,
    StarReversal,
}

impl StarCombination {
    pub const ALL: [StarCombination; 4] = [
        StarCombination::StarUnion,
        StarCombination::StarIntersection,
        StarCombination::StarCatenation,
        StarCombination::StarReversal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StarCombination::StarUnion => "star-union",
            StarCombination::StarIntersection => "star-intersection",
            StarCombination::StarCatenation => "star-catenation",
            StarCombination::StarReversal => "star-reversal",
        }
    }

    pub fn inner(self) -> BasicOp {
        match self {
            StarCombination::StarUnion => BasicOp::Union,
            StarCombination::StarIntersection => BasicOp::Intersection,
            StarCombination::StarCatenation => BasicOp::Catenation,
            StarCombination::StarReversal => BasicOp::Reversal,
        }
    }

    /// Reversal only has the one argument `n`; `m` is ignored for it.
    pub fn sizes(self, m: u64, n: u64) -> Vec<u64> {
        match self {
            StarCombination::StarReversal => vec![n],
            _ => vec![m, n],
        }
    }

    pub fn sc(self, m: u64, n: u64) -> Result<Nat> {
        match self {
            StarCombination::StarUnion => sc_star_union(m, n),
            StarCombination::StarIntersection => sc_star_intersection(m, n),
            StarCombination::StarCatenation => sc_star_catenation(m, n),
            StarCombination::StarReversal => sc_star_reversal(n),
        }
    }

    pub fn neu_spec(self, m: u64, n: u64) -> NeuSpec {
        NeuSpec::star_of(self.inner(), &self.sizes(m, n))
    }

    /// The NEU bound as a closed form, independent of the nsc composition.
    pub fn neu_closed_form(self, m: u64, n: u64) -> Nat {
        pow2(match self {
            StarCombination::StarUnion => m + n + 2,
            StarCombination::StarIntersection => m * n + 1,
            StarCombination::StarCatenation => m + n + 1,
            StarCombination::StarReversal => n + 2,
        })
    }

    pub fn sc_formula(self) -> &'static str {
        match self {
            StarCombination::StarUnion => "2^(m+n-1) - 2^(m-1) - 2^(n-1) + 1",
            StarCombination::StarIntersection => "3/4 * 2^(mn)",
            StarCombination::StarCatenation => "2^(m+n-1) + 2^(m+n-4) - 2^(m-1) - 2^(n-1) + m + 1",
            StarCombination::StarReversal => "2^n",
        }
    }

    pub fn neu_formula(self) -> &'static str {
        match self {
            StarCombination::StarUnion => "2^(m+n+2)",
            StarCombination::StarIntersection => "2^(mn+1)",
            StarCombination::StarCatenation => "2^(m+n+1)",
            StarCombination::StarReversal => "2^(n+2)",
        }
    }
}

/// Upper and lower bounds for the quotient/star combinations of an
/// `n`-state DFA.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientBounds {
    /// `2^n`, states of the star-of-left-quotient construction.
    #[serde(serialize_with = "super::catenation::nat_str")]
    pub star_lq_upper: Nat,
    /// `2^(n-1) + 2^(n-2)`, met by the star witness with `L = {ε}`.
    #[serde(serialize_with = "super::catenation::nat_str")]
    pub star_lq_lower: Nat,
    /// `2^(n+1) - 1`, states of the left-quotient-of-star construction.
    #[serde(serialize_with = "super::catenation::nat_str")]
    pub lq_star_upper: Nat,
    /// `2^(n+1)`, the chosen approximation for left quotient of star.
    #[serde(serialize_with = "super::catenation::nat_str")]
    pub lq_star_approx: Nat,
}

pub fn quotient_bounds(n: u64) -> Result<QuotientBounds> {
    at_least_two("n", n)?;
    Ok(QuotientBounds {
        star_lq_upper: pow2(n),
        star_lq_lower: pow2(n - 1) + pow2(n - 2),
        lq_star_upper: pow2(n + 1) - 1u8,
        lq_star_approx: pow2(n + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn star_formulas_at_table_points() {
        assert_eq!(sc_star_union(2, 2).unwrap(), nat(5));
        assert_eq!(sc_star_union(3, 3).unwrap(), nat(25));
        assert_eq!(sc_star_union(2, 3).unwrap(), nat(11));
        assert_eq!(sc_star_intersection(2, 2).unwrap(), nat(12));
        assert_eq!(sc_star_intersection(2, 3).unwrap(), nat(48));
        assert_eq!(sc_star_intersection(3, 3).unwrap(), nat(384));
        assert_eq!(sc_star_catenation(2, 2).unwrap(), nat(8));
        assert_eq!(sc_star_catenation(3, 3).unwrap(), nat(32));
        assert_eq!(sc_star_catenation(3, 5).unwrap(), nat(128));
        assert_eq!(sc_star_reversal(2).unwrap(), nat(4));
        assert_eq!(sc_star_reversal(3).unwrap(), nat(8));
        assert_eq!(sc_star_reversal(10).unwrap(), nat(1024));
    }

    #[test]
    fn small_sizes_rejected() {
        assert!(sc_star_union(1, 3).is_err());
        assert!(sc_star_intersection(2, 1).is_err());
        assert!(sc_star_catenation(0, 2).is_err());
        assert!(sc_star_reversal(1).is_err());
        assert!(quotient_bounds(1).is_err());
    }

    #[test]
    fn nsc_values() {
        let star_of_union = nsc_basic(BasicOp::Star, &[nsc_basic(BasicOp::Union, &[nat(3), nat(3)]).unwrap()]);
        assert_eq!(star_of_union.unwrap(), nat(8));
        assert_eq!(nsc_basic(BasicOp::Intersection, &[nat(2), nat(2)]).unwrap(), nat(4));
        let rev = nsc_basic(BasicOp::Reversal, &[nat(5)]).unwrap();
        assert_eq!(rev, nat(6));
        assert_eq!(nsc_basic(BasicOp::Star, &[rev]).unwrap(), nat(7));
        assert!(nsc_basic(BasicOp::Union, &[nat(2)]).is_err());
    }

    #[test]
    fn neu_examples() {
        let b = |c: StarCombination, m, n| neu_bound(&c.neu_spec(m, n)).unwrap();
        assert_eq!(b(StarCombination::StarUnion, 3, 3), nat(256));
        assert_eq!(b(StarCombination::StarIntersection, 2, 2), nat(32));
        assert_eq!(b(StarCombination::StarReversal, 0, 4), nat(64));
        for c in StarCombination::ALL {
            for m in 2..6 {
                for n in 2..6 {
                    assert_eq!(b(c, m, n), c.neu_closed_form(m, n), "{} {m} {n}", c.name());
                }
            }
        }
    }

    #[test]
    fn quotient_bound_values() {
        let q = |n| {
            let b = quotient_bounds(n).unwrap();
            [b.star_lq_upper, b.star_lq_lower, b.lq_star_upper, b.lq_star_approx]
        };
        assert_eq!(q(3), [nat(8), nat(6), nat(15), nat(16)]);
        assert_eq!(q(2), [nat(4), nat(3), nat(7), nat(8)]);
        assert_eq!(q(10), [nat(1024), nat(768), nat(2047), nat(2048)]);
    }
}
