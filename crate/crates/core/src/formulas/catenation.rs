//! State complexity of the catenation of k regular languages.

use serde::{Serialize, Serializer};

use super::{at_least_two, pow2, Nat};
use crate::error::{invalid, Result};

pub(crate) fn nat_str<S: Serializer>(v: &Nat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn opt_nat_str<S: Serializer>(v: &Option<Nat>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

/// DFA sizes `n₁…n_k` and final-state counts `f₁…f_k` of the catenation
/// arguments.
///
/// Counting formulas assume the initial state of every `A_i`, `i ≥ 2`, is
/// not final; that holds for the witness family and for any DFA whose
/// initial state is 0 and final states are the top `f_i` ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SizeVector {
    ns: Vec<u64>,
    fs: Vec<u64>,
}

impl SizeVector {
    /// Sizes with one final state per automaton.
    pub fn new(ns: impl Into<Vec<u64>>) -> Result<Self> {
        let ns = ns.into();
        let fs = vec![1; ns.len()];
        SizeVector::with_finals(ns, fs)
    }

    pub fn with_finals(ns: impl Into<Vec<u64>>, fs: impl Into<Vec<u64>>) -> Result<Self> {
        let (ns, fs) = (ns.into(), fs.into());
        if ns.len() < 2 {
            return Err(invalid(format!("catenation needs k >= 2 sizes (got {})", ns.len())));
        }
        if fs.len() != ns.len() {
            return Err(invalid("one final-state count per automaton"));
        }
        for (i, (&n, &f)) in ns.iter().zip(&fs).enumerate() {
            at_least_two(&format!("n{}", i + 1), n)?;
            if f == 0 || f >= n {
                return Err(invalid(format!("f{} must satisfy 0 < f < n (got f={f}, n={n})", i + 1)));
            }
        }
        Ok(SizeVector { ns, fs })
    }

    pub fn k(&self) -> usize {
        self.ns.len()
    }

    pub fn ns(&self) -> &[u64] {
        &self.ns
    }

    pub fn fs(&self) -> &[u64] {
        &self.fs
    }

    /// `n_i + … + n_k` for a 1-based `i`.
    fn tail_sum(&self, i: usize) -> u64 {
        self.ns[i - 1..].iter().sum()
    }

    /// Every vector with `k` entries in `[lo, hi]` and one final state each,
    /// in lexicographic order.
    pub fn grid(k: usize, lo: u64, hi: u64) -> Vec<SizeVector> {
        let mut out = Vec::new();
        let mut cur = vec![lo; k];
        if k == 0 || lo > hi {
            return out;
        }
        loop {
            out.push(SizeVector::new(cur.clone()).expect("grid entries are valid"));
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi {
                    cur[i] += 1;
                    break;
                }
                cur[i] = lo;
            }
        }
    }
}

impl std::fmt::Display for SizeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({})", join(&self.ns))?;
        if self.fs.iter().any(|&x| x != 1) {
            write!(f, " f=({})", join(&self.fs))?;
        }
        Ok(())
    }
}

/// `n₁2^n₂ - 2^(n₂-1)` for `n₁ ≥ 1`, `n₂ ≥ 2`.
pub fn sc_cat2(n1: u64, n2: u64) -> Result<Nat> {
    if n1 == 0 {
        return Err(invalid("n1 must be at least 1"));
    }
    at_least_two("n2", n2)?;
    Ok(Nat::from(n1) * pow2(n2) - pow2(n2 - 1))
}

/// The exact state complexity of catenating four languages:
/// `9(2m-1)2^(n+p+q-5) - 3(m-1)2^(p+q-2) - (2m-1)2^(n+q-2) + (m-1)2^q + (2m-1)2^(n-2)`.
pub fn sc_cat4(m: u64, n: u64, p: u64, q: u64) -> Result<Nat> {
    for (name, v) in [("m", m), ("n", n), ("p", p), ("q", q)] {
        at_least_two(name, v)?;
    }
    let two_m1 = Nat::from(2 * m - 1);
    let m1 = Nat::from(m - 1);
    let plus = Nat::from(9u8) * &two_m1 * pow2(n + p + q - 5) + &m1 * pow2(q) + &two_m1 * pow2(n - 2);
    let minus = Nat::from(3u8) * &m1 * pow2(p + q - 2) + &two_m1 * pow2(n + q - 2);
    Ok(plus - minus)
}

/// The older upper estimate
/// `n₁2^(n₂+…+n_k) - 2^(n₂+…+n_k-1) - 2^(n₃+…+n_k-1) - … - 2^(n_k-1)`.
pub fn claim_upper_cat_k(sv: &SizeVector) -> Nat {
    let k = sv.k();
    let lead = Nat::from(sv.ns[0]) * pow2(sv.tail_sum(2));
    let minus: Nat = (2..=k).map(|i| pow2(sv.tail_sum(i) - 1)).sum();
    lead - minus
}

/// `n₁2^(n₂+…+n_k)`.
pub fn approx_cat_k(sv: &SizeVector) -> Nat {
    Nat::from(sv.ns[0]) * pow2(sv.tail_sum(2))
}

/// Exact count of valid tuples `⟨u₁, u₂, …, u_k⟩`, `u₁ ∈ Q₁`, `u_i ⊆ Q_i`,
/// that satisfy
///
/// * `u_i = ∅ ⇒ u_{i+1} = ∅` for `2 ≤ i < k`,
/// * `u₁ ∈ F₁ ⇒ 0 ∈ u₂`,
/// * `u_i ∩ F_i ≠ ∅ ⇒ 0 ∈ u_{i+1}` for `2 ≤ i < k`.
///
/// The count runs left to right over the components, tracking whether the
/// previous component was empty and whether it hit a final state.
pub fn sc_cat_k(sv: &SizeVector) -> Nat {
    // (empty, nonempty without final, nonempty with final)
    let mut empty = Nat::from(0u8);
    let mut clear = Nat::from(sv.ns[0] - sv.fs[0]);
    let mut hit = Nat::from(sv.fs[0]);
    for (&n, &f) in sv.ns.iter().zip(&sv.fs).skip(1) {
        // subsets of Q_i split by (contains 0, meets F_i); 0 ∉ F_i
        let free = pow2(n - f - 1);
        let finals = pow2(f) - 1u8;
        let with0_clear = free.clone();
        let with0_hit = &finals * &free;
        let without0_clear_nonempty = &free - 1u8;
        let without0_hit = &finals * &free;

        let next_empty = &empty + &clear;
        let next_clear = &clear * (&with0_clear + &without0_clear_nonempty) + &hit * &with0_clear;
        let next_hit = &clear * (&with0_hit + &without0_hit) + &hit * &with0_hit;
        empty = next_empty;
        clear = next_clear;
        hit = next_hit;
    }
    empty + clear + hit
}

/// The closed-form subtraction terms `D`, `E₁` and (for `k ≥ 3`) `E₂`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatTerms {
    #[serde(serialize_with = "nat_str")]
    pub d: Nat,
    #[serde(serialize_with = "nat_str")]
    pub e1: Nat,
    #[serde(serialize_with = "opt_nat_str")]
    pub e2: Option<Nat>,
}

impl CatTerms {
    /// `n₁2^(n₂+…+n_k) - D - E₁ - E₂`; only the complete count for `k ≤ 3`.
    pub fn assemble(&self, sv: &SizeVector) -> Nat {
        let mut v = approx_cat_k(sv) - &self.d - &self.e1;
        if let Some(e2) = &self.e2 {
            v -= e2;
        }
        v
    }
}

/// Evaluates `D`, `E₁` and `E₂` with the general final-state counts.
///
/// The nested chains are `B(j) = 1 + (2^n_j - 1)·B(j+1)` with
/// `B(k) = 2^n_k`, `B(k+1) = 1`, and `C(j) = 1 + (2^(n_j - 1) - 1)·B(j+1)`.
pub fn cat_k_terms(sv: &SizeVector) -> CatTerms {
    let k = sv.k();
    let n = |i: usize| sv.ns[i - 1];
    let f = |i: usize| sv.fs[i - 1];

    let b = |j: usize| -> Nat {
        if j > k {
            return Nat::from(1u8);
        }
        let mut acc = pow2(n(k));
        for i in (j..k).rev() {
            acc = (pow2(n(i)) - 1u8) * acc + 1u8;
        }
        acc
    };
    let c = |j: usize| -> Nat { (pow2(n(j) - 1) - 1u8) * b(j + 1) + 1u8 };

    // D = Σ_{t=2}^{k-1} n₁ · Π_{j=2}^{t-1}(2^n_j - 1) · (2^(n_{t+1}+…+n_k) - 1)
    let mut d = Nat::from(0u8);
    for t in 2..k {
        let mut term = Nat::from(n(1));
        for j in 2..t {
            term *= pow2(n(j)) - 1u8;
        }
        term *= pow2(sv.tail_sum(t + 1)) - 1u8;
        d += term;
    }

    let e1 = Nat::from(f(1)) * c(2);

    let e2 = (k >= 3).then(|| {
        let hit2 = pow2(f(2)) - 1u8;
        let first = Nat::from(n(1) - f(1)) * &hit2 * pow2(n(2) - f(2));
        let second = Nat::from(f(1)) * &hit2 * pow2(n(2) - f(2) - 1);
        (first + second) * c(3)
    });

    CatTerms { d, e1, e2 }
}
