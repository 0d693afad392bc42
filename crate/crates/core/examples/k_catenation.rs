//! Catenation of k languages: the tuple automaton over the witness family,
//! its size, and the counting formula next to the older estimates.
//!
//! ```text
//! cargo run --example k_catenation
//! cargo run --example k_catenation -- 3 2 4
//! ```

use sclab::automata::state_complexity;
use sclab::formulas::{approx_cat_k, cat_k_terms, claim_upper_cat_k, sc_cat_k, SizeVector};
use sclab::regops::catenation_k_tuples;
use sclab::witnesses::witness_cat_k;

fn main() -> sclab::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ns = if args.len() >= 2 { args } else { vec![2, 3, 2] };
    let sv = SizeVector::new(ns)?;

    let machines = witness_cat_k(&sv)?;
    let built = catenation_k_tuples(&machines)?;
    println!("sizes {sv} over {} letters", machines[0].alphabet().len());
    println!("reachable tuples   {}", built.dfa.state_count());
    println!("minimal DFA        {}", state_complexity(&built.dfa).value());
    println!("valid-tuple count  {}", sc_cat_k(&sv));
    println!("older estimate     {}", claim_upper_cat_k(&sv));
    println!("n1 2^(n2+...+nk)   {}", approx_cat_k(&sv));

    let terms = cat_k_terms(&sv);
    println!("D = {}, E1 = {}, E2 = {:?}", terms.d, terms.e1, terms.e2.map(|e| e.to_string()));

    println!("\nfirst few tuples:");
    for t in built.tuples.iter().take(6) {
        let rest: Vec<Vec<usize>> = t.rest.iter().map(|s| s.iter().collect()).collect();
        println!("  <{}, {:?}>", t.first, rest);
    }
    Ok(())
}
