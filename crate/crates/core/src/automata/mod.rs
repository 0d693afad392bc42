//! Finite automata and the algorithms every state-complexity measurement
//! goes through: completion, subset construction, minimization and
//! language equivalence.
//!
//! State ids are dense `usize` values starting at 0. Symbols are named, and
//! a word is either a slice of names (`&[&str]`) or, on the hot paths, a
//! slice of symbol indices into the [`Alphabet`].

mod determinize;
mod dfa;
pub mod format;
mod minimize;
mod nfa;
mod stateset;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub use determinize::determinize;
pub use dfa::{complete, product, Dfa, PartialDfa};
pub use minimize::minimize;
pub use nfa::Nfa;
pub use stateset::StateSet;

/// A named input symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Symbol(String);

impl Symbol {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(invalid("symbol names must be nonempty"));
        }
        Ok(Symbol(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An ordered, nonempty list of distinct symbols.
///
/// The order matters: it fixes the breadth-first order used for canonical
/// state numbering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols = names
            .into_iter()
            .map(Symbol::new)
            .collect::<Result<Vec<_>>>()?;
        if symbols.is_empty() {
            return Err(invalid("an alphabet needs at least one symbol"));
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(invalid(format!("duplicate symbol `{s}` in alphabet")));
            }
        }
        Ok(Alphabet { symbols })
    }

    /// The two-letter alphabet `{a, b}`.
    pub fn ab() -> Self {
        Alphabet::new(["a", "b"]).expect("static alphabet")
    }

    /// `{a1, a2, …, a<count>}`.
    pub fn numbered(count: usize) -> Result<Self> {
        Alphabet::new((1..=count).map(|i| format!("a{i}")))
    }

    /// The first `count` lowercase letters, `a`, `b`, `c`, … .
    pub fn letters(count: usize) -> Result<Self> {
        if count > 26 {
            return Err(invalid("at most 26 letter symbols"));
        }
        Alphabet::new((0..count).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> &Symbol {
        &self.symbols[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.as_str() == name)
    }

    /// Translates a word of symbol names into symbol indices.
    pub fn word<S: AsRef<str>>(&self, word: &[S]) -> Result<Vec<usize>> {
        word.iter()
            .map(|s| {
                self.index_of(s.as_ref())
                    .ok_or_else(|| Error::UnknownSymbol(s.as_ref().to_string()))
            })
            .collect()
    }

    pub(crate) fn ensure_same(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(s.as_str())?;
        }
        Ok(())
    }
}

/// Anything that recognizes a language over a named alphabet.
pub trait Recognizer {
    fn alphabet(&self) -> &Alphabet;

    fn state_count(&self) -> usize;

    /// An ε-NFA for the same language.
    fn to_nfa(&self) -> Nfa;

    /// A complete DFA for the same language.
    fn to_dfa(&self) -> Dfa;

    /// Membership for a word given as symbol indices.
    fn accepts_indices(&self, word: &[usize]) -> bool;

    fn accepts<S: AsRef<str>>(&self, word: &[S]) -> Result<bool>
    where
        Self: Sized,
    {
        let w = self.alphabet().word(word)?;
        Ok(self.accepts_indices(&w))
    }
}

/// Either kind of automaton, as read from a file or produced by an
/// expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automaton {
    Dfa(Dfa),
    Nfa(Nfa),
}

impl Automaton {
    pub fn as_dfa(&self) -> Option<&Dfa> {
        match self {
            Automaton::Dfa(d) => Some(d),
            Automaton::Nfa(_) => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Automaton::Dfa(_) => "dfa",
            Automaton::Nfa(_) => "nfa",
        }
    }
}

impl From<Dfa> for Automaton {
    fn from(d: Dfa) -> Self {
        Automaton::Dfa(d)
    }
}

impl From<Nfa> for Automaton {
    fn from(n: Nfa) -> Self {
        Automaton::Nfa(n)
    }
}

impl Recognizer for Automaton {
    fn alphabet(&self) -> &Alphabet {
        match self {
            Automaton::Dfa(d) => d.alphabet(),
            Automaton::Nfa(n) => n.alphabet(),
        }
    }

    fn state_count(&self) -> usize {
        match self {
            Automaton::Dfa(d) => d.state_count(),
            Automaton::Nfa(n) => n.state_count(),
        }
    }

    fn to_nfa(&self) -> Nfa {
        match self {
            Automaton::Dfa(d) => d.to_nfa(),
            Automaton::Nfa(n) => n.clone(),
        }
    }

    fn to_dfa(&self) -> Dfa {
        match self {
            Automaton::Dfa(d) => d.clone(),
            Automaton::Nfa(n) => determinize(n),
        }
    }

    fn accepts_indices(&self, word: &[usize]) -> bool {
        match self {
            Automaton::Dfa(d) => d.accepts_indices(word),
            Automaton::Nfa(n) => n.accepts_indices(word),
        }
    }
}

/// Number of states of the minimal complete DFA of a language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateComplexity(usize);

impl StateComplexity {
    pub fn value(self) -> usize {
        self.0
    }

    pub fn to_nat(self) -> crate::formulas::Nat {
        crate::formulas::Nat::from(self.0)
    }
}

impl fmt::Display for StateComplexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Size of the minimal complete DFA, dead state included.
pub fn state_complexity<R: Recognizer + ?Sized>(m: &R) -> StateComplexity {
    StateComplexity(minimize(&m.to_dfa()).state_count())
}

/// Decides `L(a) = L(b)` by checking that the symmetric-difference product
/// has no reachable final state.
pub fn equivalent<A, B>(a: &A, b: &B) -> Result<bool>
where
    A: Recognizer + ?Sized,
    B: Recognizer + ?Sized,
{
    a.alphabet().ensure_same(b.alphabet())?;
    let diff = product(&a.to_dfa(), &b.to_dfa(), |x, y| x != y)?;
    let empty = diff.final_count() == 0;
    Ok(empty)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn odd_a() -> Dfa {
        Dfa::from_rows(Alphabet::ab(), 0, [1], &[&[1, 0], &[0, 1]]).unwrap()
    }

    fn even_a() -> Dfa {
        Dfa::from_rows(Alphabet::ab(), 0, [0], &[&[1, 0], &[0, 1]]).unwrap()
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a", ""]).is_err());
        let sigma = Alphabet::numbered(3).unwrap();
        assert_eq!(sigma.to_string(), "a1,a2,a3");
        assert_eq!(sigma.index_of("a2"), Some(1));
        assert!(matches!(sigma.word(&["a4"]), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn accepts_examples() {
        let d = odd_a();
        assert!(!d.accepts(&["a", "b", "a"]).unwrap());
        assert!(d.accepts(&["a"]).unwrap());
        assert!(matches!(d.accepts(&["c"]), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn equivalence_examples() {
        let d = odd_a();
        assert!(equivalent(&d, &d).unwrap());
        assert!(!equivalent(&odd_a(), &even_a()).unwrap());
        let lifted = d.to_nfa();
        assert!(equivalent(&d, &lifted).unwrap());
        let other = Dfa::empty(Alphabet::new(["a"]).unwrap());
        assert!(matches!(
            equivalent(&d, &other),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn empty_language_has_complexity_one() {
        assert_eq!(state_complexity(&Dfa::empty(Alphabet::ab())).value(), 1);
    }
}
