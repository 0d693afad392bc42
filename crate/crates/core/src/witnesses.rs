//! Worst-case witness automata.
//!
//! * [`witness_odd_a`]: words over `{a, b}` with an odd number of `a`s.
//! * [`witness_star`]: the `n`-state DFA whose star needs
//!   `2^(n-1) + 2^(n-2)` states.
//! * [`witness_cat_k`]: the k DFAs over `{a1, …, a(2k-1)}` whose catenation
//!   needs exactly [`sc_cat_k`](crate::formulas::sc_cat_k) states.

use std::fmt;
use std::sync::OnceLock;

use crate::automata::{state_complexity, Alphabet, Dfa};
use crate::error::{invalid, Error, Result};
use crate::formulas::SizeVector;
use crate::regops::op_star;

/// A witness family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessId {
    OddA,
    Star(u64),
    CatK(SizeVector),
}

impl WitnessId {
    pub fn generate(&self) -> Result<Vec<Dfa>> {
        match self {
            WitnessId::OddA => Ok(vec![witness_odd_a()]),
            WitnessId::Star(n) => Ok(vec![witness_star(*n)?]),
            WitnessId::CatK(sv) => witness_cat_k(sv),
        }
    }
}

impl fmt::Display for WitnessId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessId::OddA => f.write_str("odd_a"),
            WitnessId::Star(n) => write!(f, "star_witness(n={n})"),
            WitnessId::CatK(sv) => write!(f, "cat_k_family{sv}"),
        }
    }
}

/// `R = { w ∈ {a,b}* | #_a(w) is odd }`.
pub fn witness_odd_a() -> Dfa {
    Dfa::from_rows(Alphabet::ab(), 0, [1], &[[1, 0], [0, 1]]).expect("static witness")
}

fn star_witness_unchecked(n: u64) -> Dfa {
    let n = n as usize;
    let rows: Vec<[usize; 2]> = (0..n)
        .map(|i| {
            let a = (i + 1) % n;
            let b = if i == 0 { 0 } else { (i + 1) % n };
            [a, b]
        })
        .collect();
    Dfa::from_rows(Alphabet::ab(), 0, [n - 1], &rows).expect("witness rows are in range")
}

/// Confirms once per process that the generator really produces the star
/// witness: `sc(L(M)*)` must be 6 at n=3 and 12 at n=4.
fn star_witness_self_check() -> Result<()> {
    static CHECK: OnceLock<std::result::Result<(), String>> = OnceLock::new();
    CHECK
        .get_or_init(|| {
            for (n, expect) in [(3, 6), (4, 12)] {
                let got = state_complexity(&op_star(&star_witness_unchecked(n))).value();
                if got != expect {
                    return Err(format!("star of witness({n}) has {got} states, expected {expect}"));
                }
            }
            Ok(())
        })
        .clone()
        .map_err(Error::SelfCheck)
}

/// The star witness `M = (Q, {a,b}, δ, 0, {n-1})` for `n ≥ 3`:
/// `a` cycles every state, `b` fixes 0 and cycles `1 … n-1` through 0.
///
/// `δ(0, b) = 0` is the choice under which the star needs
/// `2^(n-1) + 2^(n-2)` states. The generator checks that property at
/// n = 3, 4 before returning anything.
pub fn witness_star(n: u64) -> Result<Dfa> {
    if n < 3 {
        return Err(invalid(format!("star witness needs n >= 3 (got {n}); use witness_odd_a for n = 2")));
    }
    if n > 63 {
        return Err(invalid("star witness size capped at 63 states"));
    }
    star_witness_self_check()?;
    Ok(star_witness_unchecked(n))
}

/// The k-catenation witness family over `Σ = {a1, …, a(2k-1)}`.
///
/// `A₁`: `a1` increments mod `n₁`, `a(2k-2)` resets to 0, every other symbol
/// is the identity. `A_i` for `i ≥ 2`: `a(2i-2)` increments mod `n_i`,
/// `a(2i-1)` sends every state to 1, every other symbol is the identity.
/// Each automaton has the single final state `n_i - 1`.
pub fn witness_cat_k(sv: &SizeVector) -> Result<Vec<Dfa>> {
    if sv.fs().iter().any(|&f| f != 1) {
        return Err(invalid("the catenation witnesses have exactly one final state each"));
    }
    let k = sv.k();
    let sigma = Alphabet::numbered(2 * k - 1)?;
    // symbol a_j has index j - 1
    let sym = |j: usize| j - 1;
    let mut out = Vec::with_capacity(k);
    for (i, &n) in (1..=k).zip(sv.ns()) {
        let n = n as usize;
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|t| {
                (0..sigma.len())
                    .map(|c| {
                        if i == 1 {
                            if c == sym(1) {
                                (t + 1) % n
                            } else if c == sym(2 * k - 2) {
                                0
                            } else {
                                t
                            }
                        } else if c == sym(2 * i - 2) {
                            (t + 1) % n
                        } else if c == sym(2 * i - 1) {
                            1
                        } else {
                            t
                        }
                    })
                    .collect()
            })
            .collect();
        out.push(Dfa::from_rows(sigma.clone(), 0, [n - 1], &rows)?);
    }
    Ok(out)
}
