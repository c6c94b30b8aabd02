//! Command-line front end: normal forms, enumeration, membership, the 25-dimensional module,
//! dimension counts and the verification suites, all printing JSON.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::a4tilde::{a4_apply, cardinality_ledger, Side, DIM};
use crate::expr::eval_elem;
use crate::freealg::AlgElem;
use crate::hecke::triple_rank_mod_p;
use crate::h3reps::{h3_basis, ideal_membership, phi_h3_eval};
use crate::ring::{is_generic, point_mod, random_points, rank_mod_p, LaurentPoly, DEFAULT_PRIME};
use crate::rewrite::{build_system, SystemKind};
use crate::verify::{run_suites, Suite, VerifyOptions, DEFAULT_SEED, POINT_BOUND};
use crate::vogel::{b3_span_check, parse_rational, suite_generic, Q};
use crate::words::SignedWord;

/// Exit code for a verification failure.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for a usage or parse error.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cubicq", version, about = "Exact computations in the cubic quotients of the braid group algebras")]
struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SystemArg {
    Pos,
    Signed1,
    Signed2,
}

impl From<SystemArg> for SystemKind {
    fn from(s: SystemArg) -> Self {
        match s {
            SystemArg::Pos => SystemKind::Positive,
            SystemArg::Signed1 => SystemKind::Signed1,
            SystemArg::Signed2 => SystemKind::Signed2,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal form of a word or an element expression on three strands.
    Nf {
        #[arg(long, value_enum, default_value = "pos")]
        system: SystemArg,
        input: String,
    },
    /// Words avoiding every left-hand side of a rewriting system.
    Enumerate {
        #[arg(long, value_enum, default_value = "pos")]
        system: SystemArg,
    },
    /// Membership of an element (JSON element format) in the defining ideal.
    Member { element: String },
    /// The 25-dimensional bimodule on four strands.
    A4 {
        #[command(subcommand)]
        action: A4Command,
    },
    /// Ranks and dimensions of the algebras.
    Dims {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Runs a verification suite, or all of them.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
enum A4Command {
    /// Applies a word to a vector on one side.
    Apply {
        #[arg(long, default_value = "left")]
        side: String,
        #[arg(long)]
        word: String,
        /// A basis vector `e_k` (1 to 25) or a JSON list of 25 coefficients.
        #[arg(long)]
        vector: String,
    },
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(value_name = "SUITE")]
    suite: Option<String>,
    #[arg(long = "suite", value_name = "SUITE", conflicts_with = "suite")]
    suite_flag: Option<String>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Integer specialization point `a,b,c`.
    #[arg(long, value_name = "A,B,C")]
    spec: Option<String>,
    /// Vogel parameter alpha (requires --beta).
    #[arg(long, requires = "beta", allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Vogel parameter beta (requires --alpha).
    #[arg(long, requires = "alpha", allow_hyphen_values = true)]
    beta: Option<String>,
    /// Strand count for the tripled Hecke ranks.
    #[arg(long)]
    n: Option<usize>,
}

/// Exit code and the text written to standard output and standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    value: Value,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, value: json!({ "error": msg.into() }) }
}

fn parse_error(msg: impl Into<String>, position: Option<usize>) -> Failure {
    Failure { code: EXIT_USAGE, value: json!({ "error": msg.into(), "position": position }) }
}

/// Parses and runs one command line (including the program name).
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandOutput { code, stdout: text, stderr: String::new() }
            } else {
                CommandOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let render = |v: &Value| {
        let mut s = if cli.pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) }
            .expect("JSON values serialize");
        s.push('\n');
        s
    };
    match dispatch(&cli.command) {
        Ok((code, value)) => CommandOutput { code, stdout: render(&value), stderr: String::new() },
        Err(f) => CommandOutput { code: f.code, stdout: String::new(), stderr: render(&f.value) },
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn dispatch(cmd: &Command) -> Result<(i32, Value), Failure> {
    match cmd {
        Command::Nf { system, input } => nf((*system).into(), input),
        Command::Enumerate { system } => enumerate((*system).into()),
        Command::Member { element } => member(element),
        Command::A4 { action: A4Command::Apply { side, word, vector } } => apply(side, word, vector),
        Command::Dims { seed } => dims(*seed),
        Command::Verify(args) => verify(args),
    }
}

fn word_position(e: &crate::words::WordError) -> Option<usize> {
    match e {
        crate::words::WordError::Parse { pos, .. } => Some(*pos),
        _ => None,
    }
}

/// Reads a bare word (`"1 2 -1"`, `"1 2 1'"`) or an element expression (`"[1 2] - a*[2]"`).
fn read_element(input: &str) -> Result<AlgElem, Failure> {
    if !input.contains(['[', '*', '+', '(', '$']) && !input.chars().any(|c| c.is_ascii_alphabetic()) {
        return match SignedWord::parse(input, Some(3)) {
            Ok(w) => Ok(AlgElem::word(w.letters(), 3)),
            Err(e) => Err(parse_error(e.to_string(), word_position(&e))),
        };
    }
    eval_elem(input, 3).map_err(|e| {
        let pos = match &e {
            crate::expr::ExprError::Parse { pos, .. } => Some(*pos),
            _ => None,
        };
        parse_error(e.to_string(), pos)
    })
}

fn element_json(x: &AlgElem) -> Value {
    let mut j = x.to_json();
    j.strands = None;
    to_value(&j)
}

fn nf(kind: SystemKind, input: &str) -> Result<(i32, Value), Failure> {
    let x = read_element(input)?;
    let system = build_system(kind).map_err(|e| Failure { code: EXIT_FAIL, value: json!({ "error": e.to_string() }) })?;
    let nf = system.normal_form(&x).map_err(|e| Failure { code: EXIT_FAIL, value: json!({ "error": e.to_string() }) })?;
    Ok((0, element_json(&nf)))
}

fn enumerate(kind: SystemKind) -> Result<(i32, Value), Failure> {
    let fail = |e: crate::rewrite::RewriteError| Failure { code: EXIT_FAIL, value: json!({ "error": e.to_string() }) };
    let words = build_system(kind).map_err(fail)?.enumerate_avoiding(12).map_err(fail)?;
    let list: Vec<&[i32]> = words.iter().map(|w| w.letters()).collect();
    Ok((0, json!({ "system": kind.name(), "count": list.len(), "words": list })))
}

fn member(src: &str) -> Result<(i32, Value), Failure> {
    let x = AlgElem::parse_json(src).map_err(|e| parse_error(e.to_string(), None))?;
    if x.strands() != 3 {
        return Err(usage(format!("membership is decided on 3 strands, got {}", x.strands())));
    }
    let m = ideal_membership(&x).map_err(|e| Failure { code: EXIT_FAIL, value: json!({ "error": e.to_string() }) })?;
    Ok((0, json!({ "member": m.member, "witness": m.witness })))
}

fn read_vector(src: &str) -> Result<Vec<LaurentPoly>, Failure> {
    let s = src.trim();
    if let Some(k) = s.strip_prefix("e_").or_else(|| s.strip_prefix('e')) {
        let k: usize = k.parse().map_err(|_| usage(format!("bad basis vector '{s}'")))?;
        if !(1..=DIM).contains(&k) {
            return Err(usage(format!("basis vector index {k} outside 1..={DIM}")));
        }
        let mut v = vec![LaurentPoly::zero(); DIM];
        v[k - 1] = LaurentPoly::one();
        return Ok(v);
    }
    let entries: Vec<String> = serde_json::from_str(s).map_err(|e| parse_error(e.to_string(), Some(e.column())))?;
    if entries.len() != DIM {
        return Err(usage(format!("expected {DIM} coefficients, got {}", entries.len())));
    }
    entries.iter().map(|c| LaurentPoly::parse(c).map_err(|e| parse_error(e.to_string(), None))).collect()
}

fn apply(side: &str, word: &str, vector: &str) -> Result<(i32, Value), Failure> {
    let side: Side = side.parse().map_err(usage)?;
    let w = SignedWord::parse(word, Some(3)).map_err(|e| parse_error(e.to_string(), word_position(&e)))?;
    let v = read_vector(vector)?;
    let img = a4_apply(w.letters(), side, &v).map_err(|e| Failure { code: EXIT_FAIL, value: json!({ "error": e.to_string() }) })?;
    let terms: Vec<Value> = img
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| json!({ "coeff": c.to_string(), "vector": format!("e_{}", i + 1) }))
        .collect();
    Ok((0, json!({ "side": side, "word": w.letters(), "terms": terms })))
}

fn dims(seed: u64) -> Result<(i32, Value), Failure> {
    let err = |e: String| Failure { code: EXIT_FAIL, value: json!({ "error": e }) };
    let q3 = build_system(SystemKind::Positive)
        .and_then(|s| s.enumerate_avoiding(12))
        .map_err(|e| err(e.to_string()))?
        .len();
    let q4 = cardinality_ledger().last().map_or(0, |e| e.counted);
    let pt = random_points(seed, 1, POINT_BOUND)[0];
    let reduced = point_mod(pt, DEFAULT_PRIME);
    let rows: Vec<Vec<u64>> = h3_basis()
        .iter()
        .map(|w| phi_h3_eval(&AlgElem::word(w, 3)).map(|i| i.coords().iter().map(|c| c.eval_mod(&reduced, DEFAULT_PRIME)).collect()))
        .collect::<Result<_, _>>()
        .map_err(|e| err(e.to_string()))?;
    let h3 = rank_mod_p(&rows, DEFAULT_PRIME);
    let mut k = serde_json::Map::new();
    for n in 2..=5 {
        let r = triple_rank_mod_p(n, reduced, DEFAULT_PRIME).map_err(|e| err(e.to_string()))?;
        k.insert(n.to_string(), json!(r.basis_rank));
    }
    let v3 = b3_span_check(&Q::from_integer(3.into()), &Q::from_integer((-1).into())).map_err(|e| err(e.to_string()))?.rank;
    Ok((0, json!({ "Q3": q3, "Q4": q4, "H3": h3, "K": k, "V3": v3 })))
}

fn parse_spec(s: &str) -> Result<[i64; 3], Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let vals: Vec<i64> = parts
        .iter()
        .map(|p| p.parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("--spec expects three integers a,b,c, got '{s}'")))?;
    let pt: [i64; 3] = vals.try_into().map_err(|_| usage(format!("--spec expects three integers a,b,c, got '{s}'")))?;
    if pt.iter().any(|x| x.unsigned_abs() >= 1 << 31) {
        return Err(usage("--spec coordinates must be below 2^31 in absolute value"));
    }
    if !is_generic(pt) {
        return Err(usage(format!("--spec point {pt:?} is degenerate")));
    }
    Ok(pt)
}

fn verify(args: &VerifyArgs) -> Result<(i32, Value), Failure> {
    let name = args.suite.as_deref().or(args.suite_flag.as_deref()).unwrap_or("all");
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        vec![Suite::from_name(name).ok_or_else(|| usage(format!("unknown suite '{name}'; expected all or one of {}", known.join(", "))))?]
    };
    let mut opts = VerifyOptions { seed: args.seed, ..VerifyOptions::default() };
    if let Some(s) = &args.spec {
        opts.spec = Some(parse_spec(s)?);
    }
    if let (Some(a), Some(b)) = (&args.alpha, &args.beta) {
        let read = |s: &str| parse_rational(s).ok_or_else(|| usage(format!("'{s}' is not a rational number")));
        let (a, b) = (read(a)?, read(b)?);
        if !suite_generic(&a, &b) {
            return Err(usage(format!("(alpha, beta) = ({a}, {b}) is degenerate")));
        }
        opts.vogel_point = Some((a, b));
    }
    if let Some(n) = args.n {
        if !(2..=5).contains(&n) {
            return Err(usage(format!("--n must lie in 2..=5, got {n}")));
        }
        opts.trihecke_n = Some(n);
    }
    let report = run_suites(&suites, &opts);
    let code = if report.passed() { 0 } else { EXIT_FAIL };
    Ok((code, to_value(&report)))
}
