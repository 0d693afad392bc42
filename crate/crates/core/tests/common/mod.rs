//! Oracles shared by the integration tests. Each one is deliberately naive
//! and shares no code with the library algorithm it checks.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sclab::automata::{Alphabet, Dfa, Nfa};

/// Myhill–Nerode table filling over the reachable states. Returns the
/// number of equivalence classes, i.e. the size of the minimal complete DFA.
pub fn table_filling_classes(d: &Dfa) -> usize {
    let n = d.state_count();
    let k = d.alphabet().len();
    let mut reach = vec![false; n];
    let mut stack = vec![d.start()];
    reach[d.start()] = true;
    while let Some(q) = stack.pop() {
        for c in 0..k {
            let t = d.next(q, c);
            if !reach[t] {
                reach[t] = true;
                stack.push(t);
            }
        }
    }
    let states: Vec<usize> = (0..n).filter(|&q| reach[q]).collect();
    let mut marked = vec![vec![false; n]; n];
    for &p in &states {
        for &q in &states {
            marked[p][q] = d.is_final(p) != d.is_final(q);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &p in &states {
            for &q in &states {
                if p < q && !marked[p][q] && (0..k).any(|c| marked[d.next(p, c)][d.next(q, c)]) {
                    marked[p][q] = true;
                    marked[q][p] = true;
                    changed = true;
                }
            }
        }
    }
    let mut classes = 0;
    let mut seen = vec![false; n];
    for &p in &states {
        if !seen[p] {
            classes += 1;
            for &q in &states {
                if !marked[p][q] {
                    seen[q] = true;
                }
            }
        }
    }
    classes
}

/// True when every pair of distinct states is separated by some word of
/// length below the state count (checked by brute force over words).
pub fn pairwise_distinguishable(d: &Dfa) -> bool {
    let n = d.state_count();
    let words = words_up_to(d.alphabet().len(), n.saturating_sub(1));
    (0..n).all(|p| {
        (p + 1..n).all(|q| {
            words
                .iter()
                .any(|w| d.is_final(d.run(p, w)) != d.is_final(d.run(q, w)))
        })
    })
}

/// Every word over `k` symbols of length at most `len`, shortest first.
pub fn words_up_to(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        let next: Vec<Vec<usize>> = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..k).map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Counts tuples `⟨u1, U2, …, Uk⟩` with `u1 ∈ Q1`, `Ui ⊆ Qi`, where every
/// machine has start 0 and finals `{n_i - f_i, …, n_i - 1}`, that satisfy:
/// (a) `Ui = ∅ ⇒ U(i+1) = ∅`; (b) `u1 ∈ F1 ⇒ 0 ∈ U2`;
/// (c) `Ui ∩ Fi ≠ ∅ ⇒ 0 ∈ U(i+1)`. Plain enumeration of all tuples.
pub fn brute_force_valid_tuples(ns: &[u64], fs: &[u64]) -> u64 {
    let k = ns.len();
    let final_mask = |i: usize| -> u64 { ((1u64 << fs[i]) - 1) << (ns[i] - fs[i]) };
    let total_rest: u64 = ns[1..].iter().map(|&n| 1u64 << n).product();
    let mut count = 0;
    for u1 in 0..ns[0] {
        for mut code in 0..total_rest {
            let mut us = Vec::with_capacity(k - 1);
            for &n in &ns[1..] {
                us.push(code % (1 << n));
                code >>= n;
            }
            let mut ok = true;
            if u1 >= ns[0] - fs[0] && us[0] & 1 == 0 {
                ok = false;
            }
            for i in 0..k - 2 {
                if us[i] == 0 && us[i + 1] != 0 {
                    ok = false;
                }
                if us[i] & final_mask(i + 1) != 0 && us[i + 1] & 1 == 0 {
                    ok = false;
                }
            }
            count += ok as u64;
        }
    }
    count
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_dfa(rng: &mut impl Rng, sigma: &Alphabet, max_states: usize) -> Dfa {
    let n = rng.random_range(1..=max_states);
    let k = sigma.len();
    let delta: Vec<usize> = (0..n * k).map(|_| rng.random_range(0..n)).collect();
    let finals: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
    let start = rng.random_range(0..n);
    Dfa::new(sigma.clone(), n, start, finals, delta).unwrap()
}

/// A random ε-NFA with possibly several (or no) initial states.
pub fn random_nfa(rng: &mut impl Rng, sigma: &Alphabet, max_states: usize) -> Nfa {
    let n = rng.random_range(1..=max_states);
    let mut m = Nfa::new(sigma.clone(), n);
    for q in 0..n {
        if rng.random_bool(0.4) {
            m.add_start(q);
        }
        if rng.random_bool(0.4) {
            m.set_final(q, true);
        }
        for c in 0..sigma.len() {
            for t in 0..n {
                if rng.random_bool(0.3) {
                    m.add_transition(q, c, t);
                }
            }
        }
        for t in 0..n {
            if rng.random_bool(0.15) {
                m.add_epsilon(q, t);
            }
        }
    }
    m
}

/// Direct simulation of an ε-NFA on a word, written independently of the
/// library's state sets.
pub fn nfa_accepts(m: &Nfa, word: &[usize]) -> bool {
    let n = m.state_count();
    let close = |set: &mut Vec<bool>| {
        let mut stack: Vec<usize> = (0..n).filter(|&q| set[q]).collect();
        while let Some(q) = stack.pop() {
            for &t in m.epsilon_targets(q) {
                if !set[t] {
                    set[t] = true;
                    stack.push(t);
                }
            }
        }
    };
    let mut cur = vec![false; n];
    for &s in m.starts() {
        cur[s] = true;
    }
    close(&mut cur);
    for &c in word {
        let mut next = vec![false; n];
        for q in 0..n {
            if cur[q] {
                for &t in m.targets(q, c) {
                    next[t] = true;
                }
            }
        }
        close(&mut next);
        cur = next;
    }
    (0..n).any(|q| cur[q] && m.is_final(q))
}

pub fn sigma(k: usize) -> Alphabet {
    Alphabet::letters(k).unwrap()
}
