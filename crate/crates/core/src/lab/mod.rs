//! Experiment harness: witness verification, table reproduction, formula
//! cross-checks, exact ratio sweeps and worst-case search over small DFAs.
//!
//! Every experiment returns a [`Report`] whose rows carry the computed
//! value, the expected value or bound, where the expectation comes from,
//! and a verdict derived from the two.

mod enumerate;
mod experiments;
mod report;
mod search;

pub use enumerate::{enumerate_dfas, DfaSpace};
pub use experiments::{
    cat_closed_form, cat_ids, cross_check_cat_formulas, quotient_ratios, ratio_sweep_cat,
    reproduce_sc_neu_tables, star_ids, verify_witness,
};
pub use report::{Embedded, Expected, Format, Report, Row, Table, Value, Verdict};
pub use search::{search_worst_case, SearchConfig, SearchMode, SearchOp, DEFAULT_CEILING};
