use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::enumerate::DfaSpace;
use super::report::{Expected, Report};
use crate::automata::{state_complexity, Dfa};
use crate::error::{invalid, Result};
use crate::formulas::{Nat, StarCombination};
use crate::regops::{eval, OpExpr, OpKind};

/// Default cap on the number of pipelines one search evaluates.
pub const DEFAULT_CEILING: u128 = 100_000_000;

/// The operation a search measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOp {
    /// One of the star combinations, checked against its formula.
    Star(StarCombination),
    /// Any template over argument slots `@0, @1, …`; no bound is checked.
    Custom(OpExpr<usize>),
}

impl SearchOp {
    pub fn parse(name: &str) -> Option<SearchOp> {
        StarCombination::ALL
            .into_iter()
            .find(|c| c.name() == name)
            .map(SearchOp::Star)
    }

    pub fn template(&self) -> OpExpr<usize> {
        match self {
            SearchOp::Custom(e) => e.clone(),
            SearchOp::Star(c) => {
                let inner = match c {
                    StarCombination::StarUnion => (OpKind::Union, 2),
                    StarCombination::StarIntersection => (OpKind::Intersection, 2),
                    StarCombination::StarCatenation => (OpKind::Catenation, 2),
                    StarCombination::StarReversal => (OpKind::Reversal, 1),
                };
                let leaves = (0..inner.1).map(OpExpr::Leaf).collect();
                let inner = OpExpr::node(inner.0, leaves).expect("fixed arity");
                OpExpr::node(OpKind::Star, vec![inner]).expect("fixed arity")
            }
        }
    }

    /// The formula value for these argument sizes, if there is one.
    pub fn bound(&self, sizes: &[usize]) -> Option<(Nat, &'static str)> {
        let SearchOp::Star(c) = self else { return None };
        let (m, n) = match *sizes {
            [n] => (n as u64, n as u64),
            [m, n] => (m as u64, n as u64),
            _ => return None,
        };
        c.sc(m, n).ok().map(|v| (v, c.sc_formula()))
    }
}

impl fmt::Display for SearchOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchOp::Star(c) => f.write_str(c.name()),
            SearchOp::Custom(e) => e.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub op: SearchOp,
    /// State count of each argument slot.
    pub sizes: Vec<usize>,
    pub alphabet_size: usize,
    pub mode: SearchMode,
    /// Samples in random mode; an optional cap in exhaustive mode.
    pub sample_budget: Option<u64>,
    pub seed: u64,
    pub threads: usize,
    pub ceiling: u128,
}

impl SearchConfig {
    pub fn exhaustive(op: SearchOp, sizes: Vec<usize>, alphabet_size: usize) -> Self {
        SearchConfig {
            op,
            sizes,
            alphabet_size,
            mode: SearchMode::Exhaustive,
            sample_budget: None,
            seed: 0,
            threads: 1,
            ceiling: DEFAULT_CEILING,
        }
    }

    pub fn random(op: SearchOp, sizes: Vec<usize>, alphabet_size: usize, samples: u64, seed: u64) -> Self {
        SearchConfig {
            mode: SearchMode::Random,
            sample_budget: Some(samples),
            seed,
            ..SearchConfig::exhaustive(op, sizes, alphabet_size)
        }
    }

    fn validate(&self, template: &OpExpr<usize>) -> Result<Vec<DfaSpace>> {
        let leaves = template.leaves();
        if leaves.iter().any(|&&slot| slot >= self.sizes.len()) {
            return Err(invalid(format!(
                "template {template} uses more argument slots than the {} sizes given",
                self.sizes.len()
            )));
        }
        if self.mode == SearchMode::Exhaustive && self.alphabet_size > 4 {
            return Err(invalid("exhaustive search supports at most 4 letters"));
        }
        if self.threads == 0 {
            return Err(invalid("threads must be at least 1"));
        }
        self.sizes
            .iter()
            .map(|&n| DfaSpace::new(n, self.alphabet_size))
            .collect()
    }
}

/// How candidate argument tuples are produced from a candidate index.
enum Source {
    /// Mixed radix over the spaces, last slot fastest.
    Enumerate(Vec<DfaSpace>),
    /// Sample `i` draws from its own ChaCha stream of the seed, so it does
    /// not depend on which thread evaluates it.
    Sample(Vec<DfaSpace>, u64),
}

impl Source {
    fn candidate(&self, index: u64) -> Vec<Dfa> {
        match self {
            Source::Enumerate(spaces) => {
                let mut rest = index as u128;
                let mut out: Vec<Dfa> = spaces
                    .iter()
                    .rev()
                    .map(|s| {
                        let len = s.len().expect("checked against the ceiling");
                        let d = s.get(rest % len);
                        rest /= len;
                        d
                    })
                    .collect();
                out.reverse();
                out
            }
            Source::Sample(spaces, seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                rng.set_stream(index);
                spaces
                    .iter()
                    .map(|s| {
                        let n = s.states();
                        let k = s.alphabet().len();
                        let delta: Vec<usize> = (0..n * k).map(|_| rng.random_range(0..n)).collect();
                        let finals: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
                        Dfa::new(s.alphabet().clone(), n, 0, finals, delta).expect("sampled DFA is in range")
                    })
                    .collect()
            }
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Best {
    sc: usize,
    index: u64,
    hits: u64,
}

impl Best {
    /// Larger sc wins; among equals the smaller candidate index.
    fn merge(self, other: Best) -> Best {
        let keep = if other.sc > self.sc || (other.sc == self.sc && other.index < self.index) {
            other
        } else {
            self
        };
        Best {
            hits: self.hits + other.hits,
            ..keep
        }
    }
}

/// Largest state complexity of the configured operation over small DFAs,
/// compared with the operation's formula.
///
/// Exhaustive mode visits every argument tuple (start state fixed at 0);
/// random mode draws `sample_budget` tuples with uniform transitions and
/// each state final with probability 1/2. Candidates are evaluated on a
/// pool of `threads` workers and merged by maximum, so the report does not
/// depend on the thread count. The argmax arguments are embedded.
pub fn search_worst_case(cfg: &SearchConfig) -> Result<Report> {
    let template = cfg.op.template();
    let spaces = cfg.validate(&template)?;
    let bound = cfg.op.bound(&cfg.sizes);

    let (source, budget, partial, how) = match cfg.mode {
        SearchMode::Exhaustive => {
            let total = spaces
                .iter()
                .try_fold(1u128, |acc, s| acc.checked_mul(s.len()?))
                .unwrap_or(u128::MAX);
            let cap = cfg.ceiling.min(cfg.sample_budget.map_or(u128::MAX, u128::from));
            let budget = total.min(cap).min(u64::MAX as u128) as u64;
            (Source::Enumerate(spaces), budget, (budget as u128) < total, "exhaustive".to_string())
        }
        SearchMode::Random => {
            let budget = cfg.sample_budget.unwrap_or(10_000).min(cfg.ceiling.min(u64::MAX as u128) as u64);
            (Source::Sample(spaces, cfg.seed), budget, false, format!("random seed={}", cfg.seed))
        }
    };

    let evaluate = |i: u64| -> Result<Best> {
        let args = source.candidate(i);
        let out = eval(&template, &mut |&slot| Ok(args[slot].clone().into()))?;
        let sc = state_complexity(&out).value();
        let hits = bound.as_ref().is_some_and(|(b, _)| Nat::from(sc) == *b) as u64;
        Ok(Best { sc, index: i, hits })
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| invalid(e.to_string()))?;
    let best = pool.install(|| {
        (0..budget)
            .into_par_iter()
            .map(evaluate)
            .try_reduce_with(|a, b| Ok(a.merge(b)))
            .transpose()
    })?;

    let sizes = cfg.sizes.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let label = format!("{}[{}|{}]", cfg.op, sizes, cfg.alphabet_size);
    let mut report = Report::new("search");
    report.partial = partial;
    report.check(format!("{label}.candidates"), budget, Expected::Observation, how);
    let Some(best) = best else {
        return Ok(report);
    };
    match &bound {
        Some((b, formula)) => {
            report.check(format!("{label}.max_sc"), best.sc, Expected::AtMost(b.clone().into()), *formula);
            report.check(format!("{label}.bound_attained"), best.hits > 0, Expected::Observation, *formula);
            report.check(format!("{label}.attaining_candidates"), best.hits, Expected::Observation, *formula);
        }
        None => report.check(format!("{label}.max_sc"), best.sc, Expected::Observation, "no formula"),
    }
    for (i, d) in source.candidate(best.index).into_iter().enumerate() {
        report.embed(format!("argmax.arg{i}"), &d.into());
    }
    if partial {
        report
            .notes
            .push(format!("stopped after {budget} candidates; the space was not covered"));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(name: &str) -> SearchOp {
        SearchOp::parse(name).unwrap()
    }

    #[test]
    fn templates() {
        assert_eq!(op("star-union").template().to_string(), "star(union(@0,@1))");
        assert_eq!(op("star-reversal").template().to_string(), "star(rev(@0))");
        assert_eq!(op("star-union").bound(&[2, 2]), Some((Nat::from(5u8), op_formula())));
        assert!(SearchOp::parse("nope").is_none());
    }

    fn op_formula() -> &'static str {
        StarCombination::StarUnion.sc_formula()
    }

    #[test]
    fn small_exhaustive_search_is_sound() {
        let r = search_worst_case(&SearchConfig::exhaustive(op("star-reversal"), vec![2], 2)).unwrap();
        assert!(r.passed, "{}", r.to_text());
        assert!(!r.partial);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn thread_count_does_not_change_the_report() {
        let mut cfg = SearchConfig::random(op("star-union"), vec![2, 3], 2, 300, 7);
        let one = search_worst_case(&cfg).unwrap();
        cfg.threads = 4;
        assert_eq!(search_worst_case(&cfg).unwrap(), one);
    }

    #[test]
    fn ceiling_marks_partial() {
        let mut cfg = SearchConfig::exhaustive(op("star-union"), vec![2, 2], 2);
        cfg.ceiling = 100;
        let r = search_worst_case(&cfg).unwrap();
        assert!(r.partial);
        assert_eq!(r.rows[0].computed, 100u64.into());
    }

    #[test]
    fn custom_templates_are_observations() {
        let t = OpExpr::parse("lqs(@0,@1)").unwrap().map_leaves(&mut |s| s.parse::<usize>().unwrap());
        let mut cfg = SearchConfig::exhaustive(SearchOp::Custom(t), vec![1, 2], 2);
        cfg.sample_budget = Some(50);
        let r = search_worst_case(&cfg).unwrap();
        assert!(r.passed);
        assert!(r.partial);
        let bad = SearchConfig::exhaustive(SearchOp::Custom(OpExpr::Leaf(3)), vec![2], 2);
        assert!(search_worst_case(&bad).is_err());
    }
}
