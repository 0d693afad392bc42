mod common;

use common::*;
use proptest::prelude::*;
use sclab::automata::{determinize, equivalent, Dfa};
use sclab::regops::{
    catenation_k, catenation_k_tuples, entry_states, left_quotient, left_quotient_of_star,
    op_catenation, op_intersection, op_reversal, op_star, op_union, star_of_left_quotient,
};

fn words(k: usize) -> Vec<Vec<usize>> {
    words_up_to(k, 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn boolean_operations_follow_membership(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let (a, b) = (random_dfa(&mut r, &sigma(k), 4), random_dfa(&mut r, &sigma(k), 4));
        let u = op_union(&a, &b).unwrap();
        let i = op_intersection(&a, &b).unwrap();
        for w in words(k) {
            let (x, y) = (a.accepts_indices(&w), b.accepts_indices(&w));
            prop_assert_eq!(u.accepts_indices(&w), x || y);
            prop_assert_eq!(i.accepts_indices(&w), x && y);
        }
    }

    #[test]
    fn reversal_and_catenation_follow_membership(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let (a, b) = (random_dfa(&mut r, &sigma(k), 4), random_dfa(&mut r, &sigma(k), 4));
        let rev = op_reversal(&a);
        let cat = op_catenation(&a, &b).unwrap();
        for w in words(k) {
            let rw: Vec<usize> = w.iter().rev().copied().collect();
            prop_assert_eq!(rev.accepts_indices(&w), a.accepts_indices(&rw));
            let split = (0..=w.len()).any(|i| a.accepts_indices(&w[..i]) && b.accepts_indices(&w[i..]));
            prop_assert_eq!(cat.accepts_indices(&w), split);
        }
    }

    #[test]
    fn star_follows_membership(seed in any::<u64>(), k in 1usize..=2) {
        let a = random_dfa(&mut rng(seed), &sigma(k), 4);
        let s = op_star(&a);
        prop_assert_eq!(s.state_count(), a.state_count() + 1);
        // w ∈ L* iff w splits into pieces of L (nonempty pieces suffice)
        fn in_star(a: &Dfa, w: &[usize]) -> bool {
            w.is_empty() || (1..=w.len()).any(|i| a.accepts_indices(&w[..i]) && in_star(a, &w[i..]))
        }
        for w in words(k) {
            prop_assert_eq!(s.accepts_indices(&w), in_star(&a, &w));
        }
    }

    #[test]
    fn quotient_matches_definition(seed in any::<u64>(), k in 1usize..=2) {
        let mut r = rng(seed);
        let (l, m) = (random_dfa(&mut r, &sigma(k), 3), random_dfa(&mut r, &sigma(k), 4));
        let q = left_quotient(&l, &m).unwrap();
        let s = entry_states(&m, &l).unwrap();
        prop_assert!(s.states().iter().all(|&x| x < m.state_count()));
        // y ∈ L\R iff some x ∈ L with |x| ≤ 6 has xy ∈ R (6 exceeds |L|·|M| pairs)
        let xs: Vec<Vec<usize>> = words_up_to(k, 6).into_iter().filter(|x| l.accepts_indices(x)).collect();
        for y in words_up_to(k, 3) {
            let direct = xs.iter().any(|x| {
                let mut xy = x.clone();
                xy.extend(&y);
                m.accepts_indices(&xy)
            });
            prop_assert_eq!(q.accepts_indices(&y), direct);
        }
    }

    #[test]
    fn combined_constructions_match_their_definitions(seed in any::<u64>(), k in 1usize..=3) {
        let mut r = rng(seed);
        let (l, m) = (random_dfa(&mut r, &sigma(k), 3), random_dfa(&mut r, &sigma(k), 4));
        let n = m.state_count() as u32;

        let slq = star_of_left_quotient(&l, &m).unwrap();
        prop_assert!(slq.state_count() <= 1 << n);
        prop_assert!(equivalent(&slq, &op_star(&left_quotient(&l, &m).unwrap())).unwrap());

        let lqs = left_quotient_of_star(&l, &m).unwrap();
        prop_assert!(lqs.state_count() < 1 << (n + 1));
        let star = determinize(&op_star(&m));
        prop_assert!(equivalent(&lqs, &left_quotient(&l, &star).unwrap()).unwrap());
    }

    #[test]
    fn catenation_k_matches_folded_catenation(seed in any::<u64>(), k in 1usize..=3, count in 2usize..=4) {
        let mut r = rng(seed);
        let ms: Vec<Dfa> = (0..count).map(|_| random_dfa(&mut r, &sigma(k), 3)).collect();
        let fold = ms[1..].iter().fold(ms[0].to_nfa(), |acc, m| op_catenation(&acc, m).unwrap());
        prop_assert!(equivalent(&catenation_k(&ms).unwrap(), &fold).unwrap());
    }

    #[test]
    fn catenation_k_tuples_respect_the_exclusions(seed in any::<u64>(), count in 2usize..=4) {
        let mut r = rng(seed);
        let ms: Vec<Dfa> = (0..count).map(|_| random_dfa(&mut r, &sigma(2), 4)).collect();
        let built = catenation_k_tuples(&ms).unwrap();
        for t in &built.tuples {
            let u = |i: usize| t.component(i);
            let hits = |i: usize| u(i).iter().any(|q| ms[i - 1].is_final(q));
            if ms[0].is_final(t.first) {
                prop_assert!(u(2).contains(ms[1].start()));
            }
            for i in 2..count {
                if u(i).is_empty() {
                    prop_assert!(u(i + 1).is_empty());
                }
                if hits(i) {
                    prop_assert!(u(i + 1).contains(ms[i].start()));
                }
            }
        }
    }
}

#[test]
fn degenerate_quotients() {
    let mut r = rng(3);
    for _ in 0..50 {
        let m = random_dfa(&mut r, &sigma(2), 5);
        let eps = Dfa::epsilon(sigma(2));
        let empty = Dfa::empty(sigma(2));
        assert!(equivalent(&left_quotient(&eps, &m).unwrap(), &m).unwrap());
        assert!(equivalent(&left_quotient(&empty, &m).unwrap(), &empty).unwrap());
        assert!(equivalent(&star_of_left_quotient(&empty, &m).unwrap(), &eps).unwrap());
        assert!(equivalent(&left_quotient_of_star(&empty, &m).unwrap(), &empty).unwrap());
        assert!(equivalent(&star_of_left_quotient(&eps, &m).unwrap(), &op_star(&m)).unwrap());
        assert!(equivalent(&left_quotient_of_star(&eps, &m).unwrap(), &op_star(&m)).unwrap());
    }
}
