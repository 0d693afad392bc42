//! Searches small DFAs for the largest star of union, exhaustively and by
//! sampling, and prints the report.
//!
//! ```text
//! cargo run --release --example worst_case_search
//! ```

use sclab::lab::{search_worst_case, Format, SearchConfig, SearchOp};
use sclab::regops::OpExpr;

fn main() -> sclab::Result<()> {
    let op = SearchOp::parse("star-union").expect("known operation");
    let mut cfg = SearchConfig::exhaustive(op, vec![2, 2], 2);
    cfg.threads = 4;
    let report = search_worst_case(&cfg)?;
    print!("{}", report.render(Format::Text)?);

    // Any expression over numbered slots can be searched.
    let expr = OpExpr::<String>::parse("rev(star(cat(@0,@1)))")?;
    let expr = expr.map_leaves(&mut |s| s.parse::<usize>().expect("slot number"));
    let cfg = SearchConfig::random(SearchOp::Custom(expr), vec![3, 3], 2, 5_000, 7);
    let report = search_worst_case(&cfg)?;
    println!();
    print!("{}", report.render(Format::Text)?);
    Ok(())
}
