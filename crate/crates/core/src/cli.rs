//! The `sclab` command line.
//!
//! Exit codes: 0 success, 1 an experiment verdict failed, 2 usage error,
//! 3 unreadable or invalid automaton file.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::automata::{format, minimize, Alphabet, Automaton, Dfa, Recognizer};
use crate::error::{invalid, Error, Result};
use crate::formulas::{
    approx_cat_k, cat_k_terms, claim_upper_cat_k, neu_bound, nsc_basic, quotient_bounds, ratio,
    sc_cat2, sc_cat4, sc_cat_k, sc_star_catenation, sc_star_intersection, sc_star_reversal,
    sc_star_union, BasicOp, Nat, SizeVector, StarCombination,
};
use crate::lab::{self, Format, Report, SearchConfig, SearchMode, SearchOp};
use crate::regops::{eval, OpExpr};
use crate::witnesses::{witness_cat_k, witness_odd_a, witness_star};

/// `println!` that stays quiet when stdout is closed early (`sclab … | head`).
macro_rules! outln {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "sclab",
    version,
    about = "State-complexity laboratory for combined regular-language operations",
    after_help = "Ranges are written lo..hi (inclusive), lists as a,b,c."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a closed-form formula exactly.
    Formula(FormulaArgs),
    /// Write a witness automaton (or family) as JSON.
    #[command(subcommand)]
    Witness(WitnessCmd),
    /// Apply an operation expression to automaton files.
    Op(OpArgs),
    /// Run an experiment and print its report.
    Experiment(ExperimentArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FormulaName {
    ScStarUnion,
    ScStarIntersection,
    ScStarCatenation,
    ScStarReversal,
    Nsc,
    Neu,
    ScCat2,
    ScCat4,
    ScCatK,
    ClaimUpperCatK,
    ApproxCatK,
    CatKTerms,
    QuotientBounds,
    Ratio,
}

#[derive(Args, Debug)]
struct FormulaArgs {
    name: FormulaName,
    #[arg(short)]
    m: Option<u64>,
    /// A single size, or the size list n1,…,nk for the catenation formulas.
    #[arg(short, value_delimiter = ',')]
    n: Vec<u64>,
    #[arg(short)]
    p: Option<u64>,
    #[arg(short)]
    q: Option<u64>,
    /// Final-state counts f1,…,fk (default all 1).
    #[arg(short, value_delimiter = ',')]
    f: Vec<u64>,
    #[arg(long)]
    num: Option<String>,
    #[arg(long)]
    den: Option<String>,
    /// Operation for `nsc` (union, intersection, catenation, star, reversal)
    /// or `neu` (star-union, star-intersection, star-catenation, star-reversal).
    #[arg(long)]
    op: Option<String>,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand, Debug)]
enum WitnessCmd {
    /// The n-state DFA whose star needs 2^(n-1) + 2^(n-2) states (n >= 3).
    Star {
        #[arg(short)]
        n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Words over {a,b} with an odd number of a's.
    OddA {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The k DFAs of the catenation family, written as A1.json … Ak.json.
    CatK {
        #[arg(short, value_delimiter = ',', required = true)]
        n: Vec<u64>,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// The minimal DFA of {ε}, handy as a quotient language.
    Epsilon {
        #[arg(long, value_delimiter = ',', default_value = "a,b")]
        alphabet: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct OpArgs {
    /// Expression such as `star(union(@a.json,@b.json))` or `slq(@l.json,@m.json)`.
    expr: String,
    /// Also minimize and print sc=N; the minimized DFA is what gets written.
    #[arg(long)]
    minimize: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    #[command(subcommand)]
    which: Experiment,
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: OutputFormat,
    /// Worker threads for searches; results do not depend on it.
    #[arg(long, default_value_t = 1, global = true)]
    threads: usize,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    Star,
    OddA,
    CatK,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    Exhaustive,
    Random,
}

#[derive(Subcommand, Debug)]
enum Experiment {
    /// Check witness families against their formulas.
    VerifyWitness {
        #[arg(long, value_enum)]
        family: Family,
        /// n range (star; default 3..8) or per-automaton size range (cat-k; default 2..3).
        #[arg(short, value_parser = parse_range)]
        n: Option<RangeInclusive<u64>>,
        /// k range for cat-k (default 2..4).
        #[arg(long, value_parser = parse_range)]
        k: Option<RangeInclusive<u64>>,
    },
    /// Reproduce the star-combination tables and their ratio bounds.
    Tables {
        #[arg(short, value_parser = parse_range, default_value = "2..8")]
        m: RangeInclusive<u64>,
        #[arg(short, value_parser = parse_range, default_value = "2..8")]
        n: RangeInclusive<u64>,
    },
    /// Cross-check the k-catenation count against the known closed forms.
    CrossCheckCat {
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, default_value_t = 8)]
        n_max: u64,
    },
    /// Exact sweep of the k-catenation approximation ratio.
    RatioSweep {
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, default_value_t = 8)]
        n_max: u64,
    },
    /// Worst-case search over small DFAs.
    Search {
        /// star-union, star-intersection, star-catenation or star-reversal.
        #[arg(long, required_unless_present = "expr", conflicts_with = "expr")]
        op: Option<String>,
        /// A template over argument slots, e.g. `lqs(@0,star(@1))`.
        #[arg(long)]
        expr: Option<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        alphabet_size: usize,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: Mode,
        /// Samples in random mode, or a cap in exhaustive mode.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Candidate ceiling; defaults to $SC_LAB_CEILING or 10^8.
        #[arg(long)]
        ceiling: Option<u128>,
    },
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u64>, String> {
    let bad = || format!("expected lo..hi or a single number, got `{s}`");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.trim(), hi.trim()),
        None => (s.trim(), s.trim()),
    };
    let lo: u64 = lo.parse().map_err(|_| bad())?;
    let hi: u64 = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

/// A failure together with the exit code it maps to.
struct Failure(i32, String);

impl Failure {
    fn usage(e: impl ToString) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }

    fn input(e: impl ToString) -> Self {
        Failure(EXIT_INPUT, e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Json(_) => Failure::input(e),
            _ => Failure::usage(e),
        }
    }
}

type CliResult = std::result::Result<i32, Failure>;

/// Parses the process arguments, runs the command and returns the exit
/// code.
pub fn main() -> i32 {
    run(std::env::args_os())
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Formula(a) => cmd_formula(a),
        Command::Witness(w) => cmd_witness(w),
        Command::Op(a) => cmd_op(a),
        Command::Experiment(a) => cmd_experiment(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

fn need(v: Option<u64>, flag: &str) -> std::result::Result<u64, Failure> {
    v.ok_or_else(|| Failure::usage(format!("this formula needs -{flag}")))
}

fn single_n(a: &FormulaArgs) -> std::result::Result<u64, Failure> {
    match a.n[..] {
        [n] => Ok(n),
        _ => Err(Failure::usage("this formula needs a single -n")),
    }
}

fn size_vector(a: &FormulaArgs) -> Result<SizeVector> {
    if a.f.is_empty() {
        SizeVector::new(a.n.clone())
    } else {
        SizeVector::with_finals(a.n.clone(), a.f.clone())
    }
}

fn parse_nat(s: &Option<String>, flag: &str) -> std::result::Result<Nat, Failure> {
    let s = s
        .as_deref()
        .ok_or_else(|| Failure::usage(format!("ratio needs --{flag}")))?;
    s.parse()
        .map_err(|_| Failure::usage(format!("--{flag} must be a nonnegative integer")))
}

fn cmd_formula(a: FormulaArgs) -> CliResult {
    use FormulaName::*;
    let name = a.name.to_possible_value().expect("no skipped variants").get_name().to_owned();
    let mut params = serde_json::Map::new();
    let mut param = |k: &str, v: serde_json::Value| {
        params.insert(k.to_owned(), v);
    };

    let (value, expression): (serde_json::Value, String) = match a.name {
        ScStarUnion | ScStarIntersection | ScStarCatenation => {
            let (m, n) = (need(a.m, "m")?, single_n(&a)?);
            param("m", json!(m));
            param("n", json!(n));
            let (v, c) = match a.name {
                ScStarUnion => (sc_star_union(m, n)?, StarCombination::StarUnion),
                ScStarIntersection => (sc_star_intersection(m, n)?, StarCombination::StarIntersection),
                _ => (sc_star_catenation(m, n)?, StarCombination::StarCatenation),
            };
            (json!(v.to_string()), c.sc_formula().into())
        }
        ScStarReversal => {
            let n = single_n(&a)?;
            param("n", json!(n));
            (json!(sc_star_reversal(n)?.to_string()), "2^n".into())
        }
        Nsc => {
            let op = a.op.as_deref().ok_or_else(|| Failure::usage("nsc needs --op"))?;
            let op = BasicOp::parse(op).ok_or_else(|| Failure::usage(format!("unknown operation `{op}`")))?;
            let sizes: Vec<Nat> = a.n.iter().map(|&n| Nat::from(n)).collect();
            param("op", json!(op.to_string()));
            param("n", json!(a.n));
            (json!(nsc_basic(op, &sizes)?.to_string()), format!("nsc of {op}"))
        }
        Neu => {
            let op = a.op.as_deref().ok_or_else(|| Failure::usage("neu needs --op"))?;
            let c = StarCombination::ALL
                .into_iter()
                .find(|c| c.name() == op)
                .ok_or_else(|| Failure::usage(format!("unknown combination `{op}`")))?;
            let n = single_n(&a)?;
            let m = match c {
                StarCombination::StarReversal => n,
                _ => need(a.m, "m")?,
            };
            param("op", json!(op));
            param("m", json!(m));
            param("n", json!(n));
            (json!(neu_bound(&c.neu_spec(m, n))?.to_string()), c.neu_formula().into())
        }
        ScCat2 => {
            let (m, n) = match a.n[..] {
                [n1, n2] => (n1, n2),
                _ => (need(a.m, "m")?, single_n(&a)?),
            };
            param("n", json!([m, n]));
            (json!(sc_cat2(m, n)?.to_string()), "n1 2^n2 - 2^(n2-1)".into())
        }
        ScCat4 => {
            let v = match a.n[..] {
                [m, n, p, q] => [m, n, p, q],
                _ => [need(a.m, "m")?, single_n(&a)?, need(a.p, "p")?, need(a.q, "q")?],
            };
            param("n", json!(v));
            (
                json!(sc_cat4(v[0], v[1], v[2], v[3])?.to_string()),
                "four-language catenation formula".into(),
            )
        }
        ScCatK | ClaimUpperCatK | ApproxCatK | CatKTerms => {
            let sv = size_vector(&a)?;
            param("n", json!(sv.ns()));
            param("f", json!(sv.fs()));
            match a.name {
                ScCatK => (json!(sc_cat_k(&sv).to_string()), "valid-tuple count".into()),
                ClaimUpperCatK => (
                    json!(claim_upper_cat_k(&sv).to_string()),
                    "n1 2^(n2+...+nk) - 2^(n2+...+nk-1) - ... - 2^(nk-1)".into(),
                ),
                ApproxCatK => (json!(approx_cat_k(&sv).to_string()), "n1 2^(n2+...+nk)".into()),
                _ => (
                    serde_json::to_value(cat_k_terms(&sv)).map_err(Error::from)?,
                    "D, E1, E2".into(),
                ),
            }
        }
        QuotientBounds => {
            let n = single_n(&a)?;
            param("n", json!(n));
            (
                serde_json::to_value(quotient_bounds(n)?).map_err(Error::from)?,
                "2^n, 2^(n-1)+2^(n-2), 2^(n+1)-1, 2^(n+1)".into(),
            )
        }
        Ratio => {
            let (num, den) = (parse_nat(&a.num, "num")?, parse_nat(&a.den, "den")?);
            param("num", json!(num.to_string()));
            param("den", json!(den.to_string()));
            (json!(ratio(&num, &den)?.to_string()), "max(a/b, b/a)".into())
        }
    };

    if a.json {
        let doc = json!({ "formula": name, "params": params, "value": value, "expression": expression });
        outln!("{}", serde_json::to_string_pretty(&doc).map_err(Error::from)?);
    } else {
        match &value {
            serde_json::Value::String(s) => outln!("{s}"),
            serde_json::Value::Object(fields) => {
                for (k, v) in fields {
                    match v {
                        serde_json::Value::String(s) => outln!("{k} = {s}"),
                        other => outln!("{k} = {other}"),
                    }
                }
            }
            other => outln!("{other}"),
        }
        outln!("formula: {expression}");
    }
    Ok(EXIT_OK)
}

fn write_automaton(path: Option<&Path>, a: &Automaton) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => format::write(p, a).map_err(Failure::input),
        None => {
            outln!("{}", format::to_json(a));
            Ok(())
        }
    }
}

fn cmd_witness(w: WitnessCmd) -> CliResult {
    match w {
        WitnessCmd::Star { n, out } => write_automaton(out.as_deref(), &witness_star(n)?.into())?,
        WitnessCmd::OddA { out } => write_automaton(out.as_deref(), &witness_odd_a().into())?,
        WitnessCmd::Epsilon { alphabet, out } => {
            let sigma = Alphabet::new(alphabet)?;
            write_automaton(out.as_deref(), &Dfa::epsilon(sigma).into())?
        }
        WitnessCmd::CatK { n, out_dir } => {
            let machines = witness_cat_k(&SizeVector::new(n)?)?;
            fs::create_dir_all(&out_dir).map_err(Failure::input)?;
            for (i, m) in machines.into_iter().enumerate() {
                let path = out_dir.join(format!("A{}.json", i + 1));
                write_automaton(Some(&path), &m.into())?;
                outln!("{}", path.display());
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_op(a: OpArgs) -> CliResult {
    let expr = OpExpr::parse(&a.expr)?;
    let result = eval(&expr, &mut |path: &String| {
        format::read(path).map_err(|e| invalid(format!("{path}: {e}")))
    })
    .map_err(Failure::input)?;
    outln!("states={}", result.state_count());
    let result = if a.minimize {
        let m = minimize(&result.to_dfa());
        outln!("sc={}", m.state_count());
        Automaton::Dfa(m)
    } else {
        result
    };
    if let Some(out) = &a.out {
        write_automaton(Some(out), &result)?;
    }
    Ok(EXIT_OK)
}

fn ceiling_from_env() -> std::result::Result<u128, Failure> {
    match std::env::var("SC_LAB_CEILING") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("SC_LAB_CEILING must be a positive integer, got `{v}`"))),
        Err(_) => Ok(lab::DEFAULT_CEILING),
    }
}

fn cmd_experiment(a: ExperimentArgs) -> CliResult {
    let report: Report = match a.which {
        Experiment::VerifyWitness { family, n, k } => {
            let ids = match family {
                Family::Star => lab::star_ids(n.unwrap_or(3..=8)),
                Family::OddA => lab::star_ids(2..=2),
                Family::CatK => {
                    let n = n.unwrap_or(2..=3);
                    let k = k.unwrap_or(2..=4);
                    lab::cat_ids(*k.start() as usize..=*k.end() as usize, *n.start(), *n.end())
                }
            };
            if ids.is_empty() {
                return Err(Failure::usage("empty parameter grid"));
            }
            lab::verify_witness(&ids)?
        }
        Experiment::Tables { m, n } => lab::reproduce_sc_neu_tables(m, n)?,
        Experiment::CrossCheckCat { k_max, n_max } => lab::cross_check_cat_formulas(k_max, n_max)?,
        Experiment::RatioSweep { k_max, n_max } => lab::ratio_sweep_cat(k_max, n_max)?,
        Experiment::Search {
            op,
            expr,
            sizes,
            alphabet_size,
            mode,
            samples,
            seed,
            ceiling,
        } => {
            let op = match (op, expr) {
                (Some(name), _) => SearchOp::parse(&name)
                    .ok_or_else(|| Failure::usage(format!("unknown search operation `{name}`")))?,
                (None, Some(text)) => {
                    let e = OpExpr::parse(&text)?;
                    let mut bad = None;
                    let t = e.map_leaves(&mut |s| {
                        s.parse::<usize>().unwrap_or_else(|_| {
                            bad = Some(s.clone());
                            0
                        })
                    });
                    if let Some(s) = bad {
                        return Err(Failure::usage(format!("template leaves must be slot numbers, got `@{s}`")));
                    }
                    SearchOp::Custom(t)
                }
                (None, None) => unreachable!("clap requires one of --op/--expr"),
            };
            let cfg = SearchConfig {
                op,
                sizes,
                alphabet_size,
                mode: match mode {
                    Mode::Exhaustive => SearchMode::Exhaustive,
                    Mode::Random => SearchMode::Random,
                },
                sample_budget: samples,
                seed,
                threads: a.threads,
                ceiling: match ceiling {
                    Some(c) => c,
                    None => ceiling_from_env()?,
                },
            };
            lab::search_worst_case(&cfg)?
        }
    };

    let format = match a.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Csv => Format::Csv,
        OutputFormat::Text => Format::Text,
    };
    let text = report.render(format)?;
    match &a.out {
        Some(path) => fs::write(path, &text).map_err(Failure::input)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(Failure::input(e)),
                _ => {}
            }
        }
    }
    Ok(if report.passed { EXIT_OK } else { EXIT_VERDICT })
}
