use crate::automata::{Alphabet, Dfa};
use crate::error::{invalid, Result};

/// All complete DFAs with states `0..n`, start state 0, over the first
/// `alphabet_size` letters: `n^(n·|Σ|)` transition functions times `2^n`
/// final sets. Isomorphic copies are not removed.
///
/// Index `i` decodes as: the low `n` bits are the final set, the rest are
/// the transition targets in base `n`, least significant digit first, in
/// the order `(q0,a), (q0,b), …, (q1,a), …`.
#[derive(Debug, Clone)]
pub struct DfaSpace {
    states: usize,
    alphabet: Alphabet,
}

impl DfaSpace {
    pub fn new(states: usize, alphabet_size: usize) -> Result<Self> {
        if states == 0 || alphabet_size == 0 {
            return Err(invalid("need at least one state and one symbol"));
        }
        Ok(DfaSpace {
            states,
            alphabet: Alphabet::letters(alphabet_size)?,
        })
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Number of machines, or `None` if it does not fit in 128 bits.
    pub fn len(&self) -> Option<u128> {
        let n = self.states as u128;
        let digits = u32::try_from(self.states * self.alphabet.len()).ok()?;
        n.checked_pow(digits)?.checked_mul(1u128.checked_shl(self.states as u32)?)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, index: u128) -> Dfa {
        let n = self.states;
        let finals_mask = index & ((1u128 << n) - 1);
        let mut rest = index >> n;
        let delta: Vec<usize> = (0..n * self.alphabet.len())
            .map(|_| {
                let d = (rest % n as u128) as usize;
                rest /= n as u128;
                d
            })
            .collect();
        let finals = (0..n).filter(|q| finals_mask >> q & 1 == 1);
        Dfa::new(self.alphabet.clone(), n, 0, finals, delta).expect("decoded DFA is in range")
    }

    pub fn iter(&self) -> impl Iterator<Item = Dfa> + '_ {
        (0..self.len().unwrap_or(u128::MAX)).map(|i| self.get(i))
    }
}

/// Every complete `n`-state DFA over `alphabet_size` letters, provided
/// there are at most `ceiling` of them.
pub fn enumerate_dfas(n: usize, alphabet_size: usize, ceiling: u128) -> Result<impl Iterator<Item = Dfa>> {
    let space = DfaSpace::new(n, alphabet_size)?;
    match space.len() {
        Some(len) if len <= ceiling => Ok((0..len).map(move |i| space.get(i))),
        _ => Err(invalid(format!(
            "{n}-state DFAs over {alphabet_size} letters exceed the enumeration ceiling {ceiling}"
        ))),
    }
}
