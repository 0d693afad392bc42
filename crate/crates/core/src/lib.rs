//! # sclab
//!
//! A laboratory for the state complexity of combined operations on regular
//! languages. The crate builds the automata behind each combined operation,
//! determinizes and minimizes them, and compares the measured state counts
//! against exact closed-form formulas evaluated with arbitrary-precision
//! integers and rationals.
//!
//! The main pieces:
//!
//! * [`automata`]: complete DFAs, ε-NFAs, subset construction, Hopcroft
//!   minimization, equivalence, and the JSON automaton file format.
//! * [`regops`]: union, intersection, catenation, star, reversal, left
//!   quotient, the two quotient/star combinations, and the k-fold
//!   catenation tuple automaton. [`regops::OpExpr`] is a small expression
//!   language over these.
//! * [`formulas`]: exact state-complexity, NEU-bound and approximation
//!   formulas plus exact ratio machinery.
//! * [`witnesses`]: generators for the worst-case witness families.
//! * [`lab`]: experiments that tie everything together and produce
//!   [`lab::Report`]s.
//! * [`cli`]: the `sclab` command-line front end.
//!
//! ```
//! use sclab::{automata::state_complexity, regops::op_star, witnesses::witness_star};
//!
//! let m = witness_star(5).unwrap();
//! let sc = state_complexity(&op_star(&m));
//! assert_eq!(sc.value(), 24); // 2^4 + 2^3
//! ```

pub mod automata;
pub mod cli;
mod error;
pub mod formulas;
pub mod lab;
pub mod regops;
pub mod witnesses;

pub use error::{Error, Result};
