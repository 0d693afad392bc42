//! Exact formula values and approximation ratios, including the catenation
//! sweep where five languages push the ratio past 4.
//!
//! ```text
//! cargo run --example formulas_and_ratios
//! ```

use sclab::formulas::*;

fn main() -> sclab::Result<()> {
    println!("star combinations at m = n = 4");
    for c in StarCombination::ALL {
        let sc = c.sc(4, 4)?;
        let neu = neu_bound(&c.neu_spec(4, 4))?;
        let r = ratio(&neu, &sc)?;
        println!("  {:<18} sc {:>6}  neu {:>8}  ratio {} (~{:.3})", c.name(), sc, neu, r, r.to_f64());
    }

    // Exact big numbers, no rounding anywhere.
    println!("\nsc of (L(A) n L(B))* at m = n = 12: {}", sc_star_intersection(12, 12)?);

    println!("\nlargest n1 2^(n2+...+nk) / count, n_i in 2..=8");
    for k in 2..=5 {
        let (r, sv) = SizeVector::grid(k, 2, 8)
            .into_iter()
            .map(|sv| (ratio(&approx_cat_k(&sv), &sc_cat_k(&sv)).expect("positive"), sv))
            .max_by(|a, b| a.0.cmp(&b.0))
            .expect("nonempty grid");
        println!("  k={k}: {r} (~{:.3}) at {sv}", r.to_f64());
    }
    Ok(())
}
