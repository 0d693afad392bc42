mod common;

use common::*;
use proptest::prelude::*;
use sclab::automata::format::{self, AutomatonFile};
use sclab::automata::{
    complete, determinize, equivalent, minimize, product, state_complexity, Alphabet, Automaton, Dfa,
    Nfa, PartialDfa, Recognizer,
};
use sclab::regops::op_star;
use sclab::witnesses::{witness_odd_a, witness_star};

/// Walks the word tree depth-first, comparing the subset automaton against
/// direct NFA simulation on every word up to `len`.
fn agree_on_all_words(n: &Nfa, d: &Dfa, len: usize) -> Result<(), Vec<usize>> {
    let mut word = Vec::new();
    fn go(n: &Nfa, d: &Dfa, q: usize, word: &mut Vec<usize>, len: usize) -> Result<(), Vec<usize>> {
        if nfa_accepts(n, word) != d.is_final(q) {
            return Err(word.clone());
        }
        if word.len() == len {
            return Ok(());
        }
        for c in 0..d.alphabet().len() {
            word.push(c);
            go(n, d, d.next(q, c), word, len)?;
            word.pop();
        }
        Ok(())
    }
    go(n, d, d.start(), &mut word, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn determinization_preserves_membership(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let n = random_nfa(&mut r, &sigma(k), 5);
        let d = determinize(&n);
        prop_assert!(agree_on_all_words(&n, &d, 6).is_ok());
    }

    #[test]
    fn minimization_is_sound_minimal_and_idempotent(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let d = random_dfa(&mut r, &sigma(k), 7);
        let m = minimize(&d);
        prop_assert!(equivalent(&d, &m).unwrap());
        prop_assert!(m.state_count() <= d.state_count());
        prop_assert_eq!(m.state_count(), table_filling_classes(&d));
        prop_assert!(pairwise_distinguishable(&m));
        prop_assert_eq!(minimize(&m).state_count(), m.state_count());
    }

    #[test]
    fn pipelines_serialize_identically(seed in any::<u64>()) {
        let n = random_nfa(&mut rng(seed), &sigma(2), 5);
        let once = format::to_json(&Automaton::Dfa(minimize(&determinize(&n))));
        let twice = format::to_json(&Automaton::Dfa(minimize(&determinize(&n.clone()))));
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn files_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = random_nfa(&mut r, &sigma(2), 4);
        let d = random_dfa(&mut r, &sigma(3), 4);
        for a in [Automaton::Nfa(n), Automaton::Dfa(d)] {
            let back = format::from_json(&format::to_json(&a)).unwrap();
            prop_assert_eq!(&back, &a);
        }
    }

    #[test]
    fn operations_return_complete_dfas(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_dfa(&mut r, &sigma(2), 4);
        let b = random_dfa(&mut r, &sigma(2), 4);
        for d in [product(&a, &b, |x, y| x ^ y).unwrap(), minimize(&a), determinize(&op_star(&b))] {
            // next() panics on a missing transition
            for q in 0..d.state_count() {
                for c in 0..2 {
                    prop_assert!(d.next(q, c) < d.state_count());
                }
            }
        }
    }
}

#[test]
fn complete_examples() {
    let ab = Alphabet::ab();
    let odd = witness_odd_a();
    assert_eq!(complete(PartialDfa::from(odd.clone())).unwrap(), odd);

    let mut p = PartialDfa::new(ab.clone(), 1, 0);
    p.set(0, 0, 0);
    p.finals.push(0);
    let d = complete(p).unwrap();
    assert_eq!(d.state_count(), 2);
    assert!(d.accepts(&["a", "a"]).unwrap());
    assert!(!d.accepts(&["a", "b"]).unwrap());

    let w = witness_star(4).unwrap();
    assert_eq!(complete(PartialDfa::from(w.clone())).unwrap(), w);

    let mut bad = PartialDfa::new(ab, 1, 0);
    bad.delta[0] = Some(5);
    assert!(complete(bad).is_err());
}

#[test]
fn determinize_examples() {
    let w = witness_star(3).unwrap();
    let lifted = determinize(&w.to_nfa());
    assert_eq!(lifted.state_count(), 3);
    assert!(equivalent(&lifted, &w).unwrap());

    assert_eq!(minimize(&determinize(&op_star(&w))).state_count(), 6);

    let none = determinize(&Nfa::new(Alphabet::ab(), 3));
    assert_eq!(none.state_count(), 1);
    assert_eq!(none.final_count(), 0);
}

#[test]
fn minimize_and_sc_examples() {
    assert_eq!(minimize(&witness_odd_a()).state_count(), 2);
    assert_eq!(minimize(&determinize(&op_star(&witness_star(5).unwrap()))).state_count(), 24);
    assert_eq!(state_complexity(&Dfa::empty(Alphabet::ab())).value(), 1);
    let w6 = witness_star(6).unwrap();
    assert_eq!(state_complexity(&w6).value(), table_filling_classes(&w6));
    assert_eq!(state_complexity(&w6).value(), 6);
    assert_eq!(state_complexity(&op_star(&w6)).value(), 48);
}

#[test]
fn equivalence_and_membership_examples() {
    let w = witness_star(3).unwrap();
    assert!(equivalent(&w, &w).unwrap());
    assert!(equivalent(&w, &minimize(&determinize(&w.to_nfa()))).unwrap());
    let odd = witness_odd_a();
    let even = Dfa::from_rows(Alphabet::ab(), 0, [0], &[[1, 0], [0, 1]]).unwrap();
    assert!(!equivalent(&odd, &even).unwrap());
    assert!(equivalent(&odd, &Dfa::universal(Alphabet::new(["a"]).unwrap())).is_err());

    assert!(!odd.accepts(&["a", "b", "a"]).unwrap());
    assert!(odd.accepts(&["a"]).unwrap());
    assert!(op_star(&odd).accepts::<&str>(&[]).unwrap());
    assert!(odd.accepts(&["c"]).is_err());
}

#[test]
fn product_examples() {
    let odd_a = witness_odd_a();
    let odd_b = Dfa::from_rows(Alphabet::ab(), 0, [1], &[[0, 1], [1, 0]]).unwrap();
    let both = product(&odd_a, &odd_b, |x, y| x && y).unwrap();
    assert_eq!(both.state_count(), 4);
    assert!(both.accepts(&["a", "b"]).unwrap());
    let x = witness_star(4).unwrap();
    assert!(equivalent(&product(&x, &x, |p, q| p && q).unwrap(), &x).unwrap());
    let all = product(&x, &Dfa::universal(Alphabet::ab()), |p, q| p || q).unwrap();
    assert!(equivalent(&all, &Dfa::universal(Alphabet::ab())).unwrap());
}

#[test]
fn file_format_is_exact() {
    let text = r#"{"kind":"nfa","alphabet":["a","b"],"states":2,"starts":[0],"finals":[1],"transitions":[[0,"a",[0,1]]],"epsilon":[[1,0]]}"#;
    let a = format::from_json(text).unwrap();
    assert_eq!(format::to_json(&a), text);
    let extra = r#"{"kind":"dfa","alphabet":["a"],"states":1,"start":0,"finals":[],"transitions":[],"colour":1}"#;
    assert!(format::from_json(extra).is_err());
    let partial = r#"{"kind":"dfa","alphabet":["a","b"],"states":1,"start":0,"finals":[0],"transitions":[[0,"a",0]]}"#;
    let d = format::from_json(partial).unwrap();
    assert_eq!(d.state_count(), 2);
    assert!(matches!(serde_json::from_str::<AutomatonFile>(partial), Ok(AutomatonFile::Dfa(_))));
}
