//! The two quotient/star combinations, step by step: entry states, the
//! constructions, and their minimized sizes.
//!
//! ```text
//! cargo run --example quotient_constructions
//! ```

use sclab::automata::{equivalent, minimize, Alphabet, Dfa};
use sclab::formulas::quotient_bounds;
use sclab::regops::{entry_states, left_quotient, left_quotient_of_star, op_star, star_of_left_quotient};
use sclab::witnesses::witness_star;

fn main() -> sclab::Result<()> {
    let sigma = Alphabet::ab();
    let m = witness_star(5)?;

    // L = {ε}: the quotient is M itself.
    let eps = Dfa::epsilon(sigma.clone());
    // L = a b*: the quotient starts from wherever a b^j leads.
    let ab_star = Dfa::from_rows(sigma.clone(), 0, [1], &[[1, 2], [2, 1], [2, 2]])?;

    let bounds = quotient_bounds(5)?;
    for (name, l) in [("{eps}", &eps), ("ab*", &ab_star)] {
        let s = entry_states(&m, l)?;
        let slq = star_of_left_quotient(l, &m)?;
        let lqs = left_quotient_of_star(l, &m)?;
        println!("L = {name}: entry states {:?}", s.states());
        println!(
            "  star of quotient: {} states (bound {}), minimal {}",
            slq.state_count(),
            bounds.star_lq_upper,
            minimize(&slq).state_count()
        );
        println!(
            "  quotient of star: {} states (bound {}), minimal {}",
            lqs.state_count(),
            bounds.lq_star_upper,
            minimize(&lqs).state_count()
        );
        // Both agree with composing the individual operations.
        assert!(equivalent(&slq, &op_star(&left_quotient(l, &m)?))?);
    }
    println!("lower bound {} is met with L = {{eps}}", bounds.star_lq_lower);
    Ok(())
}
