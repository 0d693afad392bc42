//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero on any failure that is not the documented ratio-sweep
//! counterexample (see `known_sweep_failure`).

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use sclab::automata::{determinize, minimize, state_complexity, Dfa};
use sclab::formulas::*;
use sclab::lab::*;
use sclab::regops::{catenation_k_tuples, left_quotient_of_star, op_star, star_of_left_quotient};
use sclab::witnesses::{witness_cat_k, witness_odd_a, witness_star};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const STAR_SIZES: [(u64, usize); 6] = [(3, 6), (4, 12), (5, 24), (6, 48), (7, 96), (8, 192)];

fn star_attainment() -> Outcome {
    for (n, expect) in STAR_SIZES {
        let star = op_star(&witness_star(n).map_err(|e| e.to_string())?);
        let sc = state_complexity(&star).value();
        ensure!(sc == expect, "n={n}: sc={sc}, expected {expect}");
        let oracle = table_filling_classes(&determinize(&star));
        ensure!(oracle == expect, "n={n}: table filling gives {oracle}");
    }
    Ok("6, 12, 24, 48, 96, 192".into())
}

fn star_of_quotient_pipeline() -> Outcome {
    for (n, expect) in STAR_SIZES {
        let m = witness_star(n).map_err(|e| e.to_string())?;
        let d = star_of_left_quotient(&Dfa::epsilon(m.alphabet().clone()), &m).map_err(|e| e.to_string())?;
        ensure!(d.state_count() <= 1 << n, "n={n}: {} states > 2^n", d.state_count());
        let sc = minimize(&d).state_count();
        ensure!(sc == expect, "n={n}: minimized {sc}, expected {expect}");
    }
    let r = witness_odd_a();
    let d = star_of_left_quotient(&Dfa::epsilon(r.alphabet().clone()), &r).map_err(|e| e.to_string())?;
    let sc = minimize(&d).state_count();
    ensure!(sc == 3, "odd-a: minimized {sc}, expected 3");
    Ok("n=3..8 within 2^n; odd-a gives 3".into())
}

fn quotient_of_star_pipeline() -> Outcome {
    for (n, expect) in STAR_SIZES {
        let m = witness_star(n).map_err(|e| e.to_string())?;
        let d = left_quotient_of_star(&Dfa::epsilon(m.alphabet().clone()), &m).map_err(|e| e.to_string())?;
        ensure!(d.state_count() < 1 << (n + 1), "n={n}: {} states > 2^(n+1)-1", d.state_count());
        let sc = minimize(&d).state_count();
        ensure!(sc == expect, "n={n}: minimized {sc}, expected {expect}");
    }
    Ok("n=3..8 within 2^(n+1)-1".into())
}

fn small_cat_grid() -> Vec<SizeVector> {
    (2..=4).flat_map(|k| SizeVector::grid(k, 2, 3)).collect()
}

fn cat_triple_agreement() -> Outcome {
    let mut count = 0;
    for sv in small_cat_grid() {
        let machines = witness_cat_k(&sv).map_err(|e| e.to_string())?;
        let built = catenation_k_tuples(&machines).map_err(|e| e.to_string())?;
        let measured = Nat::from(state_complexity(&built.dfa).value());
        let counted = sc_cat_k(&sv);
        ensure!(measured == counted, "{sv}: measured {measured}, count {counted}");
        let closed = cat_closed_form(&sv).map_err(|e| e.to_string())?;
        let (closed, _) = closed.ok_or_else(|| format!("{sv}: no closed form"))?;
        ensure!(closed == counted, "{sv}: closed form {closed}, count {counted}");
        count += 1;
    }
    for (ns, expect) in [(&[2u64, 2][..], 6u32), (&[2, 2, 2], 15), (&[2, 2, 2, 2], 37)] {
        let sv = SizeVector::new(ns.to_vec()).unwrap();
        let machines = witness_cat_k(&sv).map_err(|e| e.to_string())?;
        let built = catenation_k_tuples(&machines).map_err(|e| e.to_string())?;
        let sc = state_complexity(&built.dfa).value();
        ensure!(sc == expect as usize, "{sv}: anchor {sc}, expected {expect}");
    }
    Ok(format!("{count} size vectors; anchors 6, 15, 37"))
}

fn formula_grid() -> Outcome {
    let mut count = 0;
    for sv in SizeVector::grid(4, 2, 5) {
        let n = sv.ns();
        let four = sc_cat4(n[0], n[1], n[2], n[3]).map_err(|e| e.to_string())?;
        ensure!(four == sc_cat_k(&sv), "{sv}: four-language formula {four} != {}", sc_cat_k(&sv));
    }
    for k in 2..=5 {
        for sv in SizeVector::grid(k, 2, 8) {
            let (exact, claim, approx) = (sc_cat_k(&sv), claim_upper_cat_k(&sv), approx_cat_k(&sv));
            ensure!(exact <= claim && claim <= approx, "{sv}: {exact} <= {claim} <= {approx} fails");
            count += 1;
        }
    }
    Ok(format!("256 four-language vectors; ordering on {count} vectors"))
}

fn star_ratio(c: StarCombination, m: u64, n: u64) -> Result<Ratio, String> {
    ratio(&c.neu_closed_form(m, n), &c.sc(m, n).map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

fn ratio_identities() -> Outcome {
    use StarCombination::*;
    for m in 2..=8 {
        for n in 2..=8 {
            let r = star_ratio(StarIntersection, m, n)?;
            ensure!(r == Ratio::of(8, 3), "intersection ({m},{n}): {r}");
        }
    }
    for n in 2..=16 {
        let r = star_ratio(StarReversal, 2, n)?;
        ensure!(r == Ratio::integer(4u8), "reversal n={n}: {r}");
    }
    for m in 2..=16 {
        for n in 2..=16 {
            let r = star_ratio(StarUnion, m, n)?;
            ensure!(r > Ratio::integer(8u8), "union ({m},{n}): {r}");
        }
    }
    let diag = (2..=16).map(|n| star_ratio(StarUnion, n, n)).collect::<Result<Vec<_>, _>>()?;
    ensure!(diag.windows(2).all(|w| w[1] <= w[0]), "union diagonal increases somewhere");
    for m in 3..=16 {
        for n in 3..=16 {
            let r = star_ratio(StarCatenation, m, n)?;
            let four = Ratio::integer(4u8);
            ensure!(r <= four, "catenation ({m},{n}): {r} > 4");
            ensure!((r == four) == (m == 3), "catenation ({m},{n}): {r}, equality iff m = 3 fails");
        }
    }
    let m2 = star_ratio(StarCatenation, 2, 5)?;
    for n in 2..=32 {
        let b = quotient_bounds(n).map_err(|e| e.to_string())?;
        let slq = ratio(&b.star_lq_upper, &b.star_lq_lower).map_err(|e| e.to_string())?;
        let lqs = ratio(&b.lq_star_approx, &b.star_lq_lower).map_err(|e| e.to_string())?;
        ensure!(slq == Ratio::of(4, 3) && lqs == Ratio::of(8, 3), "quotient ratios at n={n}: {slq}, {lqs}");
    }
    let tables = reproduce_sc_neu_tables(2..=16, 2..=16).map_err(|e| e.to_string())?;
    ensure!(tables.passed, "tables report has failing rows");
    Ok(format!("finding: star-catenation at m=2 exceeds 4 (e.g. (2,5) gives {m2})"))
}

/// The sweep over five languages has exactly two failing rows, the k = 5 and
/// the overall maximum, both at sizes (2,2,2,2,8) with ratio 4096/657 ≈ 6.23,
/// while k ≤ 4 stays below 4. Anything else is a real regression.
fn known_sweep_failure(report: &Report) -> bool {
    let four_ok = ratio_sweep_cat(4, 8).is_ok_and(|r| r.passed);
    let fails: Vec<&Row> = report.failures().collect();
    four_ok
        && fails.len() == 2
        && fails.iter().all(|row| {
            row.params.contains("(2,2,2,2,8)") && row.computed == Value::Ratio(Ratio::of(4096, 657))
        })
}

fn approximation_sweep() -> Result<String, (String, bool)> {
    let report = ratio_sweep_cat(5, 8).map_err(|e| (e.to_string(), false))?;
    let below_three = report
        .rows
        .iter()
        .find(|r| r.params.ends_with("max ratio < 3"))
        .map(|r| r.computed.to_string())
        .unwrap_or_default();
    if report.passed {
        return Ok(format!("all ratios < 4; max < 3: {below_three}"));
    }
    let detail = report
        .failures()
        .map(|r| format!("{} = {} (~{:.3})", r.params, r.computed, r.computed.as_ratio().map_or(0.0, |q| q.to_f64())))
        .collect::<Vec<_>>()
        .join("; ");
    let known = known_sweep_failure(&report);
    Err((format!("{detail}; max < 3: {below_three}"), known))
}

fn exhaustive_two_state() -> Outcome {
    let mut found = Vec::new();
    for (op, sizes, bound, candidates) in [
        ("star-union", vec![2, 2], 5u32, 4096u32),
        ("star-intersection", vec![2, 2], 12, 4096),
        ("star-catenation", vec![2, 2], 8, 4096),
        ("star-reversal", vec![2], 4, 64),
    ] {
        let cfg = SearchConfig::exhaustive(SearchOp::parse(op).unwrap(), sizes, 2);
        let r = search_worst_case(&cfg).map_err(|e| e.to_string())?;
        ensure!(!r.partial, "{op}: search stopped early");
        ensure!(r.passed, "{op}: bound exceeded");
        let get = |suffix: &str| r.rows.iter().find(|row| row.params.ends_with(suffix)).map(|row| row.computed.clone());
        let max = get(".max_sc").ok_or("missing max row")?;
        ensure!(max.as_ratio() <= Some(Ratio::integer(bound)), "{op}: max {max} > {bound}");
        ensure!(get(".candidates") == Some(Value::from(candidates as usize)), "{op}: wrong candidate count");
        found.push(format!("{op} {max}<={bound}"));
    }
    Ok(found.join(", "))
}

fn membership_agreement() -> Outcome {
    let sigma2 = sigma(2);
    let words = words_up_to(2, 8);
    let mut r = rng(0x5c1ab);
    for case in 0..1000 {
        let n = random_nfa(&mut r, &sigma2, 6);
        let d = determinize(&n);
        let m = minimize(&d);
        for w in &words {
            let expect = nfa_accepts(&n, w);
            ensure!(d.accepts_indices(w) == expect, "case {case}: determinize disagrees on {w:?}");
            ensure!(m.accepts_indices(w) == expect, "case {case}: minimize disagrees on {w:?}");
        }
    }
    Ok(String::new())
}

fn minimality() -> Outcome {
    let mut dfas: Vec<Dfa> = vec![witness_odd_a()];
    for (n, _) in STAR_SIZES {
        let m = witness_star(n).map_err(|e| e.to_string())?;
        dfas.push(determinize(&op_star(&m)));
        dfas.push(m);
    }
    for sv in small_cat_grid() {
        let machines = witness_cat_k(&sv).map_err(|e| e.to_string())?;
        dfas.push(catenation_k_tuples(&machines).map_err(|e| e.to_string())?.dfa);
        dfas.extend(machines);
    }
    let witnesses = dfas.len();
    let mut r = rng(0xd1fa);
    for _ in 0..500 {
        let k = 1 + (dfas.len() % 3);
        dfas.push(random_dfa(&mut r, &sigma(k), 8));
    }
    for (i, d) in dfas.iter().enumerate() {
        let m = minimize(d);
        ensure!(minimize(&m) == m, "automaton {i}: minimize is not idempotent");
        let classes = table_filling_classes(d);
        ensure!(m.state_count() == classes, "automaton {i}: {} states, {classes} classes", m.state_count());
    }
    Ok(format!("{witnesses} witness automata, 500 random"))
}

fn structural_exclusions() -> Outcome {
    let mut tuples = 0;
    for sv in small_cat_grid() {
        let machines = witness_cat_k(&sv).map_err(|e| e.to_string())?;
        let built = catenation_k_tuples(&machines).map_err(|e| e.to_string())?;
        let k = sv.k();
        for t in &built.tuples {
            let u = |i: usize| t.component(i);
            if machines[0].is_final(t.first) {
                ensure!(u(2).contains(machines[1].start()), "{sv}: (b) violated");
            }
            for i in 2..k {
                ensure!(!u(i).is_empty() || u(i + 1).is_empty(), "{sv}: (a) violated");
                if u(i).iter().any(|q| machines[i - 1].is_final(q)) {
                    ensure!(u(i + 1).contains(machines[i].start()), "{sv}: (c) violated");
                }
            }
            tuples += 1;
        }
    }
    Ok(format!("{tuples} reachable tuples"))
}

fn reproducible_reports() -> Outcome {
    let run = || -> Result<Vec<String>, String> {
        let cfg = SearchConfig::random(SearchOp::parse("star-catenation").unwrap(), vec![3, 3], 2, 2000, 42);
        let reports = [
            verify_witness(&star_ids(2..=6)),
            reproduce_sc_neu_tables(2..=8, 2..=8),
            ratio_sweep_cat(4, 6),
            search_worst_case(&cfg),
        ];
        reports
            .into_iter()
            .map(|r| {
                let r = r.map_err(|e| e.to_string())?;
                Ok(format!("{}{}", r.to_json().map_err(|e| e.to_string())?, r.to_csv().map_err(|e| e.to_string())?))
            })
            .collect()
    };
    ensure!(run()? == run()?, "reports differ between runs");
    Ok(String::new())
}

fn property_suites() -> Outcome {
    membership_agreement()?;
    let min = minimality()?;
    let excl = structural_exclusions()?;
    reproducible_reports()?;
    Ok(format!("1000 NFAs; {min}; {excl}; reports byte-identical"))
}

fn main() -> ExitCode {
    let plain: [(&str, fn() -> Outcome, u64); 6] = [
        ("star witness attains 2^(n-1) + 2^(n-2)", star_attainment, 5),
        ("star of left quotient pipeline", star_of_quotient_pipeline, 5),
        ("left quotient of star pipeline", quotient_of_star_pipeline, 10),
        ("k-catenation triple agreement", cat_triple_agreement, 120),
        ("catenation formula cross-validation", formula_grid, 30),
        ("exact ratio identities and bounds", ratio_identities, 10),
    ];
    let mut unexpected = 0;
    let mut report = |id: usize, name: &str, budget: u64, elapsed: Duration, outcome: Result<String, (String, bool)>| {
        let secs = elapsed.as_secs_f64();
        let over = elapsed > Duration::from_secs(budget);
        let timing = format!("{secs:.2}s of {budget}s");
        match outcome {
            Ok(detail) if !over => println!("PASS {id} {name} [{timing}] {detail}"),
            Ok(detail) => {
                println!("FAIL {id} {name} [{timing}] over time budget; {detail}");
                unexpected += 1;
            }
            Err((detail, known)) => {
                let tag = if known { " (known counterexample, see notes)" } else { "" };
                println!("FAIL {id} {name} [{timing}]{tag} {detail}");
                if !known {
                    unexpected += 1;
                }
            }
        }
    };

    for (i, (name, f, budget)) in plain.into_iter().enumerate() {
        let t = Instant::now();
        let out = f().map_err(|e| (e, false));
        report(i + 1, name, budget, t.elapsed(), out);
    }
    let t = Instant::now();
    let out = approximation_sweep();
    report(7, "approximation ratio below 4 for k <= 5", 30, t.elapsed(), out);
    let t = Instant::now();
    let out = exhaustive_two_state().map_err(|e| (e, false));
    report(8, "exhaustive soundness at sizes (2,2)", 60, t.elapsed(), out);
    let t = Instant::now();
    let out = property_suites().map_err(|e| (e, false));
    report(9, "property suites", 120, t.elapsed(), out);

    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
