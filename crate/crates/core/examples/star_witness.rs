//! Builds the star witness for a range of sizes and shows how far its star
//! is from the naive subset bound.
//!
//! ```text
//! cargo run --example star_witness
//! ```

use sclab::automata::{determinize, minimize, state_complexity, Recognizer};
use sclab::regops::op_star;
use sclab::witnesses::{witness_odd_a, witness_star};

fn main() -> sclab::Result<()> {
    println!("{:>3} {:>10} {:>10} {:>10}", "n", "subsets", "sc(L*)", "2^n");
    for n in 3..=10u64 {
        let m = witness_star(n)?;
        let star = op_star(&m);
        let subsets = determinize(&star).state_count();
        let sc = state_complexity(&star).value();
        println!("{n:>3} {subsets:>10} {sc:>10} {:>10}", 1u64 << n);
        assert_eq!(sc as u64, (1 << (n - 1)) + (1 << (n - 2)));
    }

    // The two-state member of the family: odd number of a's.
    let r = witness_odd_a();
    let star = minimize(&determinize(&op_star(&r)));
    println!("\nodd-a: star has {} states", star.state_count());
    for w in ["", "b", "ab", "bb", "baab"] {
        let word: Vec<&str> = w.split("").filter(|s| !s.is_empty()).collect();
        println!("  {:<6} {}", format!("{w:?}"), star.accepts(&word)?);
    }
    Ok(())
}
