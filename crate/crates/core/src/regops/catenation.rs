use std::collections::{HashMap, VecDeque};

use crate::automata::{Alphabet, Dfa, StateSet};
use crate::error::{invalid, Result};

/// A state `⟨u1, u2, …, uk⟩` of the k-catenation automaton: a state of the
/// first machine followed by subsets of the others.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CatTuple {
    pub first: usize,
    pub rest: Vec<StateSet>,
}

impl CatTuple {
    /// Component `i` (1-based, `i ≥ 2`) as a set.
    pub fn component(&self, i: usize) -> &StateSet {
        &self.rest[i - 2]
    }
}

/// The k-catenation DFA together with the tuple behind each of its states.
#[derive(Debug, Clone)]
pub struct CatenationK {
    pub dfa: Dfa,
    /// `tuples[q]` is the tuple of DFA state `q`.
    pub tuples: Vec<CatTuple>,
}

/// Adds the start of machine `i+1` to every component whose predecessor has
/// just hit a final state. `hit` says whether component `i` is final-hitting.
fn cascade(machines: &[Dfa], first_final: bool, rest: &mut [StateSet]) {
    let mut hit = first_final;
    for (m, u) in machines[1..].iter().zip(rest.iter_mut()) {
        if hit {
            u.insert(m.start());
        }
        hit = u.iter().any(|q| m.is_final(q));
    }
}

fn check_inputs(machines: &[Dfa]) -> Result<&Alphabet> {
    if machines.len() < 2 {
        return Err(invalid("k-catenation needs at least two machines"));
    }
    let sigma = machines[0].alphabet();
    for m in &machines[1..] {
        sigma.ensure_same(m.alphabet())?;
    }
    Ok(sigma)
}

/// Builds the reachable part of the tuple automaton for
/// `L(A1)L(A2)⋯L(Ak)`, keeping the tuple of every state.
///
/// The initial tuple starts as `⟨s1, ∅, …, ∅⟩` and picks up the start of
/// `A(i+1)` whenever component `i` contains a final state. On a symbol every
/// component moves in its own machine and the same cascade is applied left
/// to right. A tuple is final when its last component meets `Fk`.
pub fn catenation_k_tuples(machines: &[Dfa]) -> Result<CatenationK> {
    let sigma = check_inputs(machines)?.clone();
    let k = sigma.len();
    let last = machines.len() - 1;

    let mut rest: Vec<StateSet> = machines[1..]
        .iter()
        .map(|m| StateSet::with_capacity(m.state_count()))
        .collect();
    let first = machines[0].start();
    cascade(machines, machines[0].is_final(first), &mut rest);
    let q0 = CatTuple { first, rest };

    let mut index: HashMap<CatTuple, usize> = HashMap::new();
    let mut tuples = vec![q0.clone()];
    index.insert(q0, 0);
    let mut delta = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(q) = queue.pop_front() {
        for c in 0..k {
            let t = &tuples[q];
            let first = machines[0].next(t.first, c);
            let mut rest: Vec<StateSet> = machines[1..]
                .iter()
                .zip(&t.rest)
                .map(|(m, u)| {
                    StateSet::from_iter_with_capacity(m.state_count(), u.iter().map(|p| m.next(p, c)))
                })
                .collect();
            cascade(machines, machines[0].is_final(first), &mut rest);
            let next = CatTuple { first, rest };
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = tuples.len();
                    tuples.push(next.clone());
                    index.insert(next, id);
                    queue.push_back(id);
                    id
                }
            };
            debug_assert_eq!(delta.len(), q * k + c);
            delta.push(id);
        }
    }
    let finals = tuples
        .iter()
        .enumerate()
        .filter(|(_, t)| t.rest[last - 1].iter().any(|p| machines[last].is_final(p)))
        .map(|(q, _)| q);
    let dfa = Dfa::new(sigma, tuples.len(), 0, finals, delta)?;
    Ok(CatenationK { dfa, tuples })
}

/// `L(A1)L(A2)⋯L(Ak)` as the reachable tuple DFA, not minimized.
pub fn catenation_k(machines: &[Dfa]) -> Result<Dfa> {
    Ok(catenation_k_tuples(machines)?.dfa)
}
