use super::{determinize, Alphabet, Dfa, Recognizer, StateSet};
use crate::error::{invalid, Result};

/// A nondeterministic automaton with a set of initial states and
/// ε-transitions.
///
/// The mutators (`add_transition`, `add_start`, …) panic on out-of-range
/// state ids; use [`Nfa::from_parts`] for untrusted input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    starts: Vec<usize>,
    finals: Vec<bool>,
    /// `delta[q * |Σ| + c]`, sorted and deduplicated.
    delta: Vec<Vec<usize>>,
    epsilon: Vec<Vec<usize>>,
}

impl Nfa {
    /// An NFA with `states` states, no initial or final states and no
    /// transitions.
    pub fn new(alphabet: Alphabet, states: usize) -> Self {
        let k = alphabet.len();
        Nfa {
            alphabet,
            starts: Vec::new(),
            finals: vec![false; states],
            delta: vec![Vec::new(); states * k],
            epsilon: vec![Vec::new(); states],
        }
    }

    pub fn from_parts(
        alphabet: Alphabet,
        states: usize,
        starts: impl IntoIterator<Item = usize>,
        finals: impl IntoIterator<Item = usize>,
        transitions: impl IntoIterator<Item = (usize, usize, usize)>,
        epsilon: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let check = |q: usize, what: &str| {
            if q < states {
                Ok(q)
            } else {
                Err(invalid(format!("{what} state {q} out of range (states: {states})")))
            }
        };
        let k = alphabet.len();
        let mut n = Nfa::new(alphabet, states);
        for s in starts {
            n.add_start(check(s, "initial")?);
        }
        for f in finals {
            n.set_final(check(f, "final")?, true);
        }
        for (p, c, q) in transitions {
            if c >= k {
                return Err(invalid(format!("symbol index {c} out of range")));
            }
            n.add_transition(check(p, "source")?, c, check(q, "target")?);
        }
        for (p, q) in epsilon {
            n.add_epsilon(check(p, "source")?, check(q, "target")?);
        }
        Ok(n)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    /// Appends a state and returns its id.
    pub fn add_state(&mut self) -> usize {
        let id = self.finals.len();
        self.finals.push(false);
        self.delta.extend(std::iter::repeat_n(Vec::new(), self.alphabet.len()));
        self.epsilon.push(Vec::new());
        id
    }

    pub fn add_start(&mut self, q: usize) {
        assert!(q < self.state_count(), "state {q} out of range");
        insert_sorted(&mut self.starts, q);
    }

    pub fn set_starts(&mut self, starts: impl IntoIterator<Item = usize>) {
        self.starts.clear();
        for q in starts {
            self.add_start(q);
        }
    }

    pub fn set_final(&mut self, q: usize, is_final: bool) {
        self.finals[q] = is_final;
    }

    pub fn add_transition(&mut self, from: usize, symbol: usize, to: usize) {
        assert!(to < self.state_count(), "state {to} out of range");
        let k = self.alphabet.len();
        insert_sorted(&mut self.delta[from * k + symbol], to);
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) {
        assert!(to < self.state_count(), "state {to} out of range");
        insert_sorted(&mut self.epsilon[from], to);
    }

    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals.iter().enumerate().filter(|(_, &f)| f).map(|(q, _)| q)
    }

    pub fn targets(&self, q: usize, symbol: usize) -> &[usize] {
        &self.delta[q * self.alphabet.len() + symbol]
    }

    pub fn epsilon_targets(&self, q: usize) -> &[usize] {
        &self.epsilon[q]
    }

    pub fn has_epsilon(&self) -> bool {
        self.epsilon.iter().any(|e| !e.is_empty())
    }

    /// Every labelled transition as `(from, symbol, to)`, in order.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let k = self.alphabet.len();
        self.delta
            .iter()
            .enumerate()
            .flat_map(move |(i, ts)| ts.iter().map(move |&t| (i / k, i % k, t)))
    }

    pub fn epsilon_transitions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.epsilon
            .iter()
            .enumerate()
            .flat_map(|(p, ts)| ts.iter().map(move |&q| (p, q)))
    }

    /// Extends `set` with everything reachable through ε-transitions.
    pub fn close(&self, set: &mut StateSet) {
        let mut stack: Vec<usize> = set.iter().collect();
        while let Some(q) = stack.pop() {
            for &t in &self.epsilon[q] {
                if set.insert(t) {
                    stack.push(t);
                }
            }
        }
    }

    /// The ε-closure of the initial states.
    pub fn initial_set(&self) -> StateSet {
        let mut set = StateSet::from_iter_with_capacity(self.state_count(), self.starts.iter().copied());
        self.close(&mut set);
        set
    }

    /// The ε-closed successor set of `set` on `symbol`.
    pub fn step(&self, set: &StateSet, symbol: usize) -> StateSet {
        let mut next = StateSet::with_capacity(self.state_count());
        for q in set.iter() {
            for &t in self.targets(q, symbol) {
                next.insert(t);
            }
        }
        self.close(&mut next);
        next
    }

    pub fn contains_final(&self, set: &StateSet) -> bool {
        set.iter().any(|q| self.finals[q])
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        let end = word.iter().fold(self.initial_set(), |s, &c| self.step(&s, c));
        self.contains_final(&end)
    }

    /// The reversed automaton: every transition flipped, initial and final
    /// states swapped.
    pub fn reverse(&self) -> Nfa {
        let mut r = Nfa::new(self.alphabet.clone(), self.state_count());
        for (p, c, q) in self.transitions() {
            r.add_transition(q, c, p);
        }
        for (p, q) in self.epsilon_transitions() {
            r.add_epsilon(q, p);
        }
        for f in self.finals() {
            r.add_start(f);
        }
        for &s in &self.starts {
            r.set_final(s, true);
        }
        r
    }

    /// Copies `other` into `self` as a disjoint block and returns the id
    /// offset of the copied states. Initial and final markings of `other`
    /// are not carried over.
    pub(crate) fn embed(&mut self, other: &Nfa) -> usize {
        let offset = self.state_count();
        for _ in 0..other.state_count() {
            self.add_state();
        }
        for (p, c, q) in other.transitions() {
            self.add_transition(p + offset, c, q + offset);
        }
        for (p, q) in other.epsilon_transitions() {
            self.add_epsilon(p + offset, q + offset);
        }
        offset
    }
}

fn insert_sorted(v: &mut Vec<usize>, x: usize) {
    if let Err(i) = v.binary_search(&x) {
        v.insert(i, x);
    }
}

impl Recognizer for Nfa {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn state_count(&self) -> usize {
        self.finals.len()
    }

    fn to_nfa(&self) -> Nfa {
        self.clone()
    }

    fn to_dfa(&self) -> Dfa {
        determinize(self)
    }

    fn accepts_indices(&self, word: &[usize]) -> bool {
        Nfa::accepts_indices(self, word)
    }
}
