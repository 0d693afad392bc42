use std::collections::HashMap;

use super::{Dfa, Nfa, StateSet};

/// Subset construction.
///
/// States of the result are the reachable ε-closed subsets, numbered in
/// breadth-first discovery order with symbols taken in alphabet order. The
/// empty subset only appears when it is reachable, and then acts as the
/// sink that keeps the result complete.
pub fn determinize(n: &Nfa) -> Dfa {
    let k = n.alphabet().len();
    let mut ids: HashMap<StateSet, usize> = HashMap::new();
    let mut order: Vec<StateSet> = Vec::new();
    let init = n.initial_set();
    ids.insert(init.clone(), 0);
    order.push(init);

    let mut delta = Vec::new();
    let mut finals = Vec::new();
    let mut i = 0;
    while i < order.len() {
        finals.push(n.contains_final(&order[i]));
        for c in 0..k {
            let next = n.step(&order[i], c);
            let id = match ids.get(&next) {
                Some(&id) => id,
                None => {
                    let id = order.len();
                    ids.insert(next.clone(), id);
                    order.push(next);
                    id
                }
            };
            delta.push(id);
        }
        i += 1;
    }
    Dfa::from_raw(n.alphabet().clone(), 0, finals, delta)
}
