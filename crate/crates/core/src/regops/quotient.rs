use std::collections::{HashSet, VecDeque};

use super::op_star;
use crate::automata::{determinize, Dfa, Nfa, StateSet};
use crate::error::Result;

/// The states `q` of a machine such that some word of `L` leads from the
/// initial states to `q`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EntryStateSet {
    states: Vec<usize>,
}

impl EntryStateSet {
    pub fn states(&self) -> &[usize] {
        &self.states
    }

    pub fn contains(&self, q: usize) -> bool {
        self.states.binary_search(&q).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }
}

/// Breadth-first search over the reachable pairs `(q, p)` of `n × l`,
/// collecting `q` whenever `p` is final in `l`. ε-moves of `n` are followed
/// with every step.
fn nfa_entry_states(n: &Nfa, l: &Dfa) -> EntryStateSet {
    let k = l.alphabet().len();
    let closures: Vec<Vec<usize>> = (0..n.state_count())
        .map(|q| {
            let mut s = StateSet::from_iter_with_capacity(n.state_count(), [q]);
            n.close(&mut s);
            s.iter().collect()
        })
        .collect();

    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    for q in n.initial_set().iter() {
        if seen.insert((q, l.start())) {
            queue.push_back((q, l.start()));
        }
    }
    let mut entry = StateSet::with_capacity(n.state_count());
    while let Some((q, p)) = queue.pop_front() {
        if l.is_final(p) {
            entry.insert(q);
        }
        for c in 0..k {
            let p2 = l.next(p, c);
            for &t in n.targets(q, c) {
                for &q2 in &closures[t] {
                    if seen.insert((q2, p2)) {
                        queue.push_back((q2, p2));
                    }
                }
            }
        }
    }
    EntryStateSet {
        states: entry.iter().collect(),
    }
}

/// `S = { q | some w ∈ L(l) drives m from its start to q }`.
pub fn entry_states(m: &Dfa, l: &Dfa) -> Result<EntryStateSet> {
    m.alphabet().ensure_same(l.alphabet())?;
    Ok(nfa_entry_states(&m.to_nfa(), l))
}

/// `L(l) \ L(r) = { y | xy ∈ L(r), x ∈ L(l) }`: the machine `r` restarted
/// from every entry state.
pub fn left_quotient(l: &Dfa, r: &Dfa) -> Result<Nfa> {
    let s = entry_states(r, l)?;
    let mut n = r.to_nfa();
    n.set_starts(s.states().iter().copied());
    Ok(n)
}

/// `(L(l) \ L(m))*` by the `2^n` construction.
///
/// `m` restarted from the entry set `S`, with ε-moves from every final
/// state back to all of `S`, recognizes `(L\R)+`. Its subset automaton never
/// reaches ∅ because `m` is complete. A fresh initial state, final and
/// copying the transitions of the subset automaton's start, adds `ε`.
///
/// The fresh state is state 0 and the subset automaton follows it in its
/// own breadth-first order; the result is not minimized. When `S` is empty
/// the language is `{ε}` and its minimal two-state DFA is returned.
pub fn star_of_left_quotient(l: &Dfa, m: &Dfa) -> Result<Dfa> {
    let s = entry_states(m, l)?;
    let sigma = m.alphabet().clone();
    if s.is_empty() {
        return Ok(Dfa::epsilon(sigma));
    }
    let mut plus = m.to_nfa();
    plus.set_starts(s.states().iter().copied());
    let finals: Vec<usize> = plus.finals().collect();
    for f in finals {
        for &q in s.states() {
            plus.add_epsilon(f, q);
        }
    }
    let a = determinize(&plus);

    let k = sigma.len();
    let mut delta = Vec::with_capacity((a.state_count() + 1) * k);
    delta.extend((0..k).map(|c| a.next(a.start(), c) + 1));
    for q in 0..a.state_count() {
        delta.extend((0..k).map(|c| a.next(q, c) + 1));
    }
    let finals = std::iter::once(0).chain(a.finals().map(|q| q + 1));
    Dfa::new(sigma, a.state_count() + 1, 0, finals, delta)
}

/// `L(l) \ L(m)*` by the `2^(n+1) - 1` construction.
///
/// Builds the star NFA of `m` (with its fresh state `s'`), computes the
/// entry set over that NFA, restarts it from the entry set and runs the
/// subset construction.
pub fn left_quotient_of_star(l: &Dfa, m: &Dfa) -> Result<Dfa> {
    m.alphabet().ensure_same(l.alphabet())?;
    let mut star = op_star(m);
    let s = nfa_entry_states(&star, l);
    star.set_starts(s.states().iter().copied());
    Ok(determinize(&star))
}
