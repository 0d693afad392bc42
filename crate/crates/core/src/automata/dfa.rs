use std::collections::{HashMap, VecDeque};

use super::{Alphabet, Nfa, Recognizer};
use crate::error::{invalid, Result};

/// A complete deterministic finite automaton.
///
/// The transition function is stored as a flat table indexed by
/// `state * |Σ| + symbol`, and every entry is present, so a `Dfa` is complete
/// by construction. Partial machines go through [`PartialDfa`] and
/// [`complete`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    start: usize,
    finals: Vec<bool>,
    delta: Vec<usize>,
}

impl Dfa {
    /// Builds a DFA from a flat transition table.
    pub fn new(
        alphabet: Alphabet,
        states: usize,
        start: usize,
        finals: impl IntoIterator<Item = usize>,
        delta: Vec<usize>,
    ) -> Result<Self> {
        if states == 0 {
            return Err(invalid("a DFA needs at least one state"));
        }
        if start >= states {
            return Err(invalid(format!("start state {start} out of range (states: {states})")));
        }
        if delta.len() != states * alphabet.len() {
            return Err(invalid(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                states * alphabet.len()
            )));
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= states) {
            return Err(invalid(format!("transition target {bad} out of range (states: {states})")));
        }
        let mut flags = vec![false; states];
        for f in finals {
            *flags
                .get_mut(f)
                .ok_or_else(|| invalid(format!("final state {f} out of range (states: {states})")))? = true;
        }
        Ok(Dfa {
            alphabet,
            start,
            finals: flags,
            delta,
        })
    }

    /// Builds a DFA from one row of targets per state, in alphabet order.
    pub fn from_rows<R: AsRef<[usize]>>(
        alphabet: Alphabet,
        start: usize,
        finals: impl IntoIterator<Item = usize>,
        rows: &[R],
    ) -> Result<Self> {
        let k = alphabet.len();
        let mut delta = Vec::with_capacity(rows.len() * k);
        for (q, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != k {
                return Err(invalid(format!("row {q} has {} entries, expected {k}", row.len())));
            }
            delta.extend_from_slice(row);
        }
        Dfa::new(alphabet, rows.len(), start, finals, delta)
    }

    pub(crate) fn from_raw(alphabet: Alphabet, start: usize, finals: Vec<bool>, delta: Vec<usize>) -> Self {
        debug_assert_eq!(delta.len(), finals.len() * alphabet.len());
        Dfa {
            alphabet,
            start,
            finals,
            delta,
        }
    }

    /// The one-state DFA for ∅.
    pub fn empty(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::from_raw(alphabet, 0, vec![false], vec![0; k])
    }

    /// The one-state DFA for Σ*.
    pub fn universal(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::from_raw(alphabet, 0, vec![true], vec![0; k])
    }

    /// The two-state DFA for `{ε}`.
    pub fn epsilon(alphabet: Alphabet) -> Self {
        let k = alphabet.len();
        Dfa::from_raw(alphabet, 0, vec![true, false], vec![1; 2 * k])
    }

    /// The DFA accepting exactly one word.
    pub fn word<S: AsRef<str>>(alphabet: Alphabet, word: &[S]) -> Result<Self> {
        let w = alphabet.word(word)?;
        let n = w.len() + 2;
        let sink = n - 1;
        let k = alphabet.len();
        let mut delta = vec![sink; n * k];
        for (i, &c) in w.iter().enumerate() {
            delta[i * k + c] = i + 1;
        }
        let mut finals = vec![false; n];
        finals[w.len()] = true;
        Ok(Dfa::from_raw(alphabet, 0, finals, delta))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals.iter().enumerate().filter(|(_, &f)| f).map(|(q, _)| q)
    }

    pub fn final_count(&self) -> usize {
        self.finals.iter().filter(|&&f| f).count()
    }

    pub fn next(&self, q: usize, symbol: usize) -> usize {
        self.delta[q * self.alphabet.len() + symbol]
    }

    /// The state reached from `from` on `word`.
    pub fn run(&self, from: usize, word: &[usize]) -> usize {
        word.iter().fold(from, |q, &c| self.next(q, c))
    }

    /// Renumbers the reachable part breadth-first from the start state,
    /// visiting symbols in alphabet order. Unreachable states are dropped.
    pub fn canonical(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut id = vec![usize::MAX; self.state_count()];
        let mut order = vec![self.start];
        id[self.start] = 0;
        let mut i = 0;
        while i < order.len() {
            let q = order[i];
            for c in 0..k {
                let t = self.next(q, c);
                if id[t] == usize::MAX {
                    id[t] = order.len();
                    order.push(t);
                }
            }
            i += 1;
        }
        let delta = order
            .iter()
            .flat_map(|&q| (0..k).map(move |c| (q, c)))
            .map(|(q, c)| id[self.next(q, c)])
            .collect();
        let finals = order.iter().map(|&q| self.finals[q]).collect();
        Dfa::from_raw(self.alphabet.clone(), 0, finals, delta)
    }

    /// Every transition as `(from, symbol, to)`, sorted.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let k = self.alphabet.len();
        self.delta.iter().enumerate().map(move |(i, &t)| (i / k, i % k, t))
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut n = Nfa::new(self.alphabet.clone(), self.state_count());
        n.add_start(self.start);
        for q in self.finals() {
            n.set_final(q, true);
        }
        for (q, c, t) in self.transitions() {
            n.add_transition(q, c, t);
        }
        n
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.finals[self.run(self.start, word)]
    }
}

impl Recognizer for Dfa {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn state_count(&self) -> usize {
        self.finals.len()
    }

    fn to_nfa(&self) -> Nfa {
        Dfa::to_nfa(self)
    }

    fn to_dfa(&self) -> Dfa {
        self.clone()
    }

    fn accepts_indices(&self, word: &[usize]) -> bool {
        Dfa::accepts_indices(self, word)
    }
}

/// A deterministic automaton that may be missing transitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialDfa {
    pub alphabet: Alphabet,
    pub states: usize,
    pub start: usize,
    pub finals: Vec<usize>,
    /// Indexed by `state * |Σ| + symbol`.
    pub delta: Vec<Option<usize>>,
}

impl PartialDfa {
    pub fn new(alphabet: Alphabet, states: usize, start: usize) -> Self {
        let k = alphabet.len();
        PartialDfa {
            alphabet,
            states,
            start,
            finals: Vec::new(),
            delta: vec![None; states * k],
        }
    }

    pub fn set(&mut self, from: usize, symbol: usize, to: usize) {
        let k = self.alphabet.len();
        self.delta[from * k + symbol] = Some(to);
    }
}

impl From<Dfa> for PartialDfa {
    fn from(d: Dfa) -> Self {
        PartialDfa {
            states: d.state_count(),
            start: d.start,
            finals: d.finals().collect(),
            delta: d.delta.iter().map(|&t| Some(t)).collect(),
            alphabet: d.alphabet,
        }
    }
}

/// Makes the transition function total. When some transition is missing a
/// fresh non-final sink with self-loops is appended and every missing
/// transition is routed to it; otherwise the automaton is returned as is.
pub fn complete(d: PartialDfa) -> Result<Dfa> {
    let k = d.alphabet.len();
    if d.delta.len() != d.states * k {
        return Err(invalid("transition table size does not match states × symbols"));
    }
    if let Some(bad) = d.delta.iter().flatten().find(|&&t| t >= d.states) {
        return Err(invalid(format!("transition target {bad} out of range (states: {})", d.states)));
    }
    let missing = d.delta.iter().any(Option::is_none);
    let sink = d.states;
    let mut delta: Vec<usize> = d.delta.iter().map(|t| t.unwrap_or(sink)).collect();
    let mut states = d.states;
    if missing {
        delta.extend(std::iter::repeat_n(sink, k));
        states += 1;
    }
    Dfa::new(d.alphabet, states, d.start, d.finals, delta)
}

/// The reachable product automaton; a pair state is final iff
/// `combiner(final in a, final in b)`.
pub fn product(a: &Dfa, b: &Dfa, combiner: impl Fn(bool, bool) -> bool) -> Result<Dfa> {
    a.alphabet.ensure_same(&b.alphabet)?;
    let k = a.alphabet.len();
    let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut finals = Vec::new();
    let mut delta = Vec::new();
    ids.insert((a.start, b.start), 0);
    queue.push_back((a.start, b.start));
    while let Some((p, q)) = queue.pop_front() {
        finals.push(combiner(a.finals[p], b.finals[q]));
        for c in 0..k {
            let pair = (a.next(p, c), b.next(q, c));
            let next_id = ids.len();
            let id = *ids.entry(pair).or_insert_with(|| {
                queue.push_back(pair);
                next_id
            });
            delta.push(id);
        }
    }
    Ok(Dfa::from_raw(a.alphabet.clone(), 0, finals, delta))
}
