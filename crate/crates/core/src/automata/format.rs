//! The JSON automaton file format.
//!
//! ```text
//! {"kind":"dfa","alphabet":["a","b"],"states":2,"start":0,"finals":[1],
//!  "transitions":[[0,"a",1],[0,"b",0],[1,"a",0],[1,"b",1]]}
//! {"kind":"nfa","alphabet":["a","b"],"states":2,"starts":[0],"finals":[1],
//!  "transitions":[[0,"a",[0,1]]],"epsilon":[[1,0]]}
//! ```
//!
//! Unknown fields are rejected. A DFA file may leave transitions out; the
//! loader completes it with a sink state. `epsilon` is optional for NFAs.
//! Writing is canonical: transitions are listed by source state and then
//! by alphabet order, and sets are sorted, so equal automata serialize to
//! equal bytes.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{complete, Alphabet, Automaton, Dfa, Nfa, PartialDfa};
use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AutomatonFile {
    Dfa(DfaFile),
    Nfa(NfaFile),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DfaFile {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub start: usize,
    pub finals: Vec<usize>,
    pub transitions: Vec<(usize, String, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NfaFile {
    pub alphabet: Vec<String>,
    pub states: usize,
    pub starts: Vec<usize>,
    pub finals: Vec<usize>,
    pub transitions: Vec<(usize, String, Vec<usize>)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub epsilon: Vec<(usize, usize)>,
}

fn symbol_index(alphabet: &Alphabet, name: &str) -> Result<usize> {
    alphabet
        .index_of(name)
        .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
}

impl DfaFile {
    pub fn from_dfa(d: &Dfa) -> Self {
        let sigma = d.alphabet();
        DfaFile {
            alphabet: sigma.symbols().iter().map(|s| s.to_string()).collect(),
            states: d.state_count(),
            start: d.start(),
            finals: d.finals().collect(),
            transitions: d
                .transitions()
                .map(|(p, c, q)| (p, sigma.symbol(c).to_string(), q))
                .collect(),
        }
    }

    pub fn to_dfa(&self) -> Result<Dfa> {
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        if self.states == 0 {
            return Err(invalid("a DFA needs at least one state"));
        }
        if self.start >= self.states {
            return Err(invalid(format!("start state {} out of range", self.start)));
        }
        if let Some(f) = self.finals.iter().find(|&&f| f >= self.states) {
            return Err(invalid(format!("final state {f} out of range")));
        }
        let mut p = PartialDfa::new(alphabet, self.states, self.start);
        p.finals = self.finals.clone();
        let k = p.alphabet.len();
        for (from, sym, to) in &self.transitions {
            let c = symbol_index(&p.alphabet, sym)?;
            if *from >= self.states || *to >= self.states {
                return Err(invalid(format!("transition ({from}, {sym}, {to}) references an unknown state")));
            }
            let slot = &mut p.delta[from * k + c];
            if slot.is_some_and(|t| t != *to) {
                return Err(invalid(format!("state {from} has two transitions on `{sym}`")));
            }
            *slot = Some(*to);
        }
        complete(p)
    }
}

impl NfaFile {
    pub fn from_nfa(n: &Nfa) -> Self {
        let sigma = n.alphabet();
        let k = sigma.len();
        let transitions = (0..n.state_count())
            .flat_map(|q| (0..k).map(move |c| (q, c)))
            .filter(|&(q, c)| !n.targets(q, c).is_empty())
            .map(|(q, c)| (q, sigma.symbol(c).to_string(), n.targets(q, c).to_vec()))
            .collect();
        NfaFile {
            alphabet: sigma.symbols().iter().map(|s| s.to_string()).collect(),
            states: n.state_count(),
            starts: n.starts().to_vec(),
            finals: n.finals().collect(),
            transitions,
            epsilon: n.epsilon_transitions().collect(),
        }
    }

    pub fn to_nfa(&self) -> Result<Nfa> {
        let alphabet = Alphabet::new(self.alphabet.iter().cloned())?;
        let mut labelled = Vec::new();
        for (from, sym, tos) in &self.transitions {
            let c = symbol_index(&alphabet, sym)?;
            labelled.extend(tos.iter().map(|&to| (*from, c, to)));
        }
        Nfa::from_parts(
            alphabet,
            self.states,
            self.starts.iter().copied(),
            self.finals.iter().copied(),
            labelled,
            self.epsilon.iter().copied(),
        )
    }
}

impl AutomatonFile {
    pub fn from_automaton(a: &Automaton) -> Self {
        match a {
            Automaton::Dfa(d) => AutomatonFile::Dfa(DfaFile::from_dfa(d)),
            Automaton::Nfa(n) => AutomatonFile::Nfa(NfaFile::from_nfa(n)),
        }
    }

    pub fn to_automaton(&self) -> Result<Automaton> {
        Ok(match self {
            AutomatonFile::Dfa(d) => Automaton::Dfa(d.to_dfa()?),
            AutomatonFile::Nfa(n) => Automaton::Nfa(n.to_nfa()?),
        })
    }
}

/// Canonical single-line JSON for an automaton.
pub fn to_json(a: &Automaton) -> String {
    serde_json::to_string(&AutomatonFile::from_automaton(a)).expect("automaton files always serialize")
}

pub fn from_json(text: &str) -> Result<Automaton> {
    let file: AutomatonFile = serde_json::from_str(text)?;
    file.to_automaton()
}

pub fn read(path: impl AsRef<Path>) -> Result<Automaton> {
    from_json(&fs::read_to_string(path)?)
}

pub fn write(path: impl AsRef<Path>, a: &Automaton) -> Result<()> {
    let mut text = to_json(a);
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}
