use std::fmt;

use num_rational::Ratio as BigRatio;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::Nat;
use crate::error::{invalid, Result};

/// An exact nonnegative rational, always stored reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ratio(BigRatio<Nat>);

impl Ratio {
    pub fn new(numer: Nat, denom: Nat) -> Result<Self> {
        if denom.is_zero() {
            return Err(invalid("ratio with zero denominator"));
        }
        Ok(Ratio(BigRatio::new(numer, denom)))
    }

    pub fn integer(v: impl Into<Nat>) -> Self {
        Ratio(BigRatio::from_integer(v.into()))
    }

    pub fn numer(&self) -> &Nat {
        self.0.numer()
    }

    pub fn denom(&self) -> &Nat {
        self.0.denom()
    }

    /// Shorthand for small literal ratios in checks, e.g. `Ratio::of(8, 3)`.
    pub fn of(numer: u64, denom: u64) -> Self {
        Ratio::new(Nat::from(numer), Nat::from(denom)).expect("nonzero denominator")
    }

    /// Lossy decimal view, for display only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        // Scale down both sides so huge values still convert.
        let bits = self.numer().bits().max(self.denom().bits());
        let shift = bits.saturating_sub(60);
        let n = (self.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (self.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The approximation ratio `max(a/b, b/a)`, reduced and at least 1.
pub fn ratio(a: &Nat, b: &Nat) -> Result<Ratio> {
    if a.is_zero() || b.is_zero() {
        return Err(invalid("ratio arguments must be positive"));
    }
    if a >= b {
        Ratio::new(a.clone(), b.clone())
    } else {
        Ratio::new(b.clone(), a.clone())
    }
}
