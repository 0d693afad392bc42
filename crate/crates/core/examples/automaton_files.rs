//! Writing automata to the JSON file format, reading them back, and
//! evaluating an operation expression over files.
//!
//! ```text
//! cargo run --example automaton_files
//! ```

use sclab::automata::{format, minimize, Automaton};
use sclab::regops::{eval, OpExpr};
use sclab::witnesses::{witness_odd_a, witness_star};

fn main() -> sclab::Result<()> {
    let dir = std::env::temp_dir().join("sclab-example");
    std::fs::create_dir_all(&dir)?;

    let m = dir.join("m.json");
    let r = dir.join("r.json");
    format::write(&m, &witness_star(4)?.into())?;
    format::write(&r, &witness_odd_a().into())?;
    println!("{}", std::fs::read_to_string(&r)?.trim_end());

    let text = format!("union(star(@{}),@{})", m.display(), r.display());
    let expr = OpExpr::parse(&text)?;
    println!("expression: {expr}");
    let result = eval(&expr, &mut |path: &String| format::read(path))?;
    let Automaton::Dfa(d) = result else { unreachable!("union yields a DFA") };
    println!("construction {} states, minimal {}", d.state_count(), minimize(&d).state_count());

    // Canonical output: the same automaton always serializes to the same bytes.
    let once = format::to_json(&Automaton::Dfa(minimize(&d)));
    let again = format::to_json(&format::from_json(&once)?);
    assert_eq!(once, again);
    println!("{once}");
    Ok(())
}
