//! Regular-language operations as automaton constructions.
//!
//! The individual operations produce the textbook automata (product DFAs
//! for the Boolean operations, ε-NFAs for catenation, star and reversal).
//! The combined operations follow their upper-bound constructions step by
//! step, so the size of what they return is the size the bound talks
//! about.

mod catenation;
mod expr;
mod quotient;

use crate::automata::{product, Dfa, Nfa, Recognizer};
use crate::error::Result;

pub use catenation::{catenation_k, catenation_k_tuples, CatTuple, CatenationK};
pub use expr::{eval, OpExpr, OpKind};
pub use quotient::{
    entry_states, left_quotient, left_quotient_of_star, star_of_left_quotient, EntryStateSet,
};

/// `L(a) ∪ L(b)` as a reachable product DFA.
pub fn op_union(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    product(a, b, |x, y| x || y)
}

/// `L(a) ∩ L(b)` as a reachable product DFA.
pub fn op_intersection(a: &Dfa, b: &Dfa) -> Result<Dfa> {
    product(a, b, |x, y| x && y)
}

/// `L(a)L(b)`: the disjoint union of both machines with ε-links from the
/// finals of `a` to the initial states of `b`. Initial states are those of
/// `a`, final states those of `b`.
pub fn op_catenation<A, B>(a: &A, b: &B) -> Result<Nfa>
where
    A: Recognizer + ?Sized,
    B: Recognizer + ?Sized,
{
    a.alphabet().ensure_same(b.alphabet())?;
    let mut n = a.to_nfa();
    let right = b.to_nfa();
    let left_finals: Vec<usize> = n.finals().collect();
    for &f in &left_finals {
        n.set_final(f, false);
    }
    let offset = n.embed(&right);
    for f in right.finals() {
        n.set_final(f + offset, true);
    }
    for &f in &left_finals {
        for &s in right.starts() {
            n.add_epsilon(f, s + offset);
        }
    }
    Ok(n)
}

/// `L(a)*`: a fresh state `s'` that is both initial and final, with
/// `ε`-moves from `s'` to the old initial states and from every final
/// state back to `s'`. The fresh state gets the last id.
pub fn op_star<A: Recognizer + ?Sized>(a: &A) -> Nfa {
    let mut n = a.to_nfa();
    let old_starts = n.starts().to_vec();
    let finals: Vec<usize> = n.finals().collect();
    let s = n.add_state();
    n.set_final(s, true);
    for q in old_starts {
        n.add_epsilon(s, q);
    }
    for f in finals {
        n.add_epsilon(f, s);
    }
    n.set_starts([s]);
    n
}

/// `L(a)^R`.
pub fn op_reversal<A: Recognizer + ?Sized>(a: &A) -> Nfa {
    a.to_nfa().reverse()
}
