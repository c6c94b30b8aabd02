//! Verification suites that reproduce the headline identities and ranks, with machine-readable
//! reports.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::a4tilde::{a4_consistency_check, augmentation_checks, build_action_tables, cardinality_ledger};
use crate::freealg::AlgElem;
use crate::hecke::{fiber_check, k_basis, ternary_element, triple_embed, triple_rank_mod_p, verify_ternary_relations};
use crate::h3reps::{
    h3_basis, ideal_membership, phi_h3_eval, ternary_image_check, verify_alt_basis, verify_q3_identities,
    verify_quotient_span,
};
use crate::q3struct::verify_filtration;
use crate::report::IdentityCheck;
use crate::rewrite::{build_system, listed_basis, SystemKind};
use crate::ring::{is_generic, is_generic_mod, point_mod, random_points, rank_mod_p, DEFAULT_PRIME};
use crate::vogel::{parameter_points, vogel_suite, ParamPoint, Q};
use crate::weights::verify_weights;
use crate::words::{braid_equal_bfs, handle_identity, handle_reduction_template, BfsLimits, BraidVerdict, HandleSide, SignedWord};

/// Version of the report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 2024;

/// Number of specialization points drawn for rank certificates.
pub const RANK_POINTS: usize = 3;

/// Bound on the coordinates of integer specialization points.
pub const POINT_BOUND: i64 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified item. A failing item always carries a witness.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub topic: String,
    pub criterion: u8,
    pub status: Status,
    pub witness: String,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Outcome of one suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub seed: u64,
    pub points: Vec<String>,
    pub checks: Vec<CheckRecord>,
    pub wall_time_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }

    pub fn failures(&self) -> Vec<&CheckRecord> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }
}

/// Outcome of several suites run together.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
    pub wall_time_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    /// Pass/fail of every criterion covered by the suites, in criterion order.
    pub fn criteria(&self) -> Vec<(u8, bool)> {
        let ids: BTreeSet<u8> = self.suites.iter().flat_map(|s| s.checks.iter().map(|c| c.criterion)).collect();
        ids.into_iter()
            .map(|k| (k, self.suites.iter().flat_map(|s| &s.checks).filter(|c| c.criterion == k).all(CheckRecord::passed)))
            .collect()
    }
}

/// The suites, each covering one or two acceptance criteria.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Enumeration,
    Rules,
    Q3,
    H3,
    A4,
    Trihecke,
    Vogel,
    Weights,
    Handles,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Enumeration,
        Suite::Rules,
        Suite::Q3,
        Suite::H3,
        Suite::A4,
        Suite::Trihecke,
        Suite::Vogel,
        Suite::Weights,
        Suite::Handles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Enumeration => "enumeration",
            Suite::Rules => "rules",
            Suite::Q3 => "q3",
            Suite::H3 => "h3",
            Suite::A4 => "a4",
            Suite::Trihecke => "trihecke",
            Suite::Vogel => "vogel",
            Suite::Weights => "weights",
            Suite::Handles => "handles",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Acceptance criteria covered by the suite.
    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Enumeration => &[1],
            Suite::Rules => &[2],
            Suite::Q3 => &[3, 5],
            Suite::H3 => &[4],
            Suite::A4 => &[6],
            Suite::Trihecke => &[7],
            Suite::Vogel => &[8],
            Suite::Weights => &[9],
            Suite::Handles => &[10],
        }
    }
}

/// Parameters shared by the suites.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Integer specialization point replacing the seeded ones.
    pub spec: Option<[i64; 3]>,
    /// Vogel parameters replacing the seeded ones.
    pub vogel_point: Option<(Q, Q)>,
    /// Restricts the tripled Hecke ranks to one strand count.
    pub trihecke_n: Option<usize>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: DEFAULT_SEED, spec: None, vogel_point: None, trihecke_n: None }
    }
}

impl VerifyOptions {
    /// Integer specialization points for the rank certificates.
    pub fn points(&self) -> Vec<[i64; 3]> {
        match self.spec {
            Some(p) => vec![p],
            None => random_points(self.seed, RANK_POINTS, POINT_BOUND),
        }
    }
}

struct Collector {
    suite: &'static str,
    criterion: u8,
    checks: Vec<CheckRecord>,
    points: Vec<String>,
}

impl Collector {
    fn push(&mut self, topic: impl Into<String>, holds: bool, witness: impl Into<String>) {
        let topic = topic.into();
        let mut witness = witness.into();
        if !holds && witness.is_empty() {
            witness = format!("nonzero residue in: {topic}");
        }
        let id = format!("{}.{}", self.suite, self.checks.len() + 1);
        let status = if holds { Status::Pass } else { Status::Fail };
        self.checks.push(CheckRecord { id, topic, criterion: self.criterion, status, witness });
    }

    fn identity(&mut self, c: &IdentityCheck) {
        self.push(c.name.clone(), c.holds, c.detail.clone());
    }

    fn error(&mut self, topic: &str, e: impl std::fmt::Display) {
        self.push(topic, false, format!("error: {e}"));
    }
}

/// Runs one suite.
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> SuiteReport {
    let start = Instant::now();
    let mut col = Collector { suite: suite.name(), criterion: suite.criteria()[0], checks: Vec::new(), points: Vec::new() };
    match suite {
        Suite::Enumeration => enumeration(&mut col),
        Suite::Rules => rules(&mut col),
        Suite::Q3 => q3(&mut col),
        Suite::H3 => h3(&mut col, opts),
        Suite::A4 => a4(&mut col),
        Suite::Trihecke => trihecke(&mut col, opts),
        Suite::Vogel => vogel(&mut col, opts),
        Suite::Weights => weights(&mut col),
        Suite::Handles => handles(&mut col),
    }
    SuiteReport {
        schema_version: SCHEMA_VERSION,
        suite: suite.name().into(),
        seed: opts.seed,
        points: col.points,
        checks: col.checks,
        wall_time_ms: start.elapsed().as_millis(),
    }
}

/// Runs several suites concurrently; reports keep the order of `suites`.
pub fn run_suites(suites: &[Suite], opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let reports = std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| {
                std::thread::Builder::new()
                    .name(s.name().into())
                    .stack_size(64 << 20)
                    .spawn_scoped(scope, move || run_suite(s, opts))
                    .expect("spawn suite thread")
            })
            .collect();
        handles
            .into_iter()
            .zip(suites)
            .map(|(h, s)| {
                h.join().unwrap_or_else(|_| {
                    let mut col =
                        Collector { suite: s.name(), criterion: s.criteria()[0], checks: Vec::new(), points: Vec::new() };
                    col.push("suite completed", false, "suite panicked");
                    SuiteReport {
                        schema_version: SCHEMA_VERSION,
                        suite: s.name().into(),
                        seed: opts.seed,
                        points: Vec::new(),
                        checks: col.checks,
                        wall_time_ms: 0,
                    }
                })
            })
            .collect()
    });
    VerifyReport { schema_version: SCHEMA_VERSION, seed: opts.seed, suites: reports, wall_time_ms: start.elapsed().as_millis() }
}

fn fmt_words(ws: &[Vec<i32>]) -> String {
    ws.iter().map(|w| format!("{w:?}")).collect::<Vec<_>>().join(" ")
}

fn enumeration(col: &mut Collector) {
    for kind in SystemKind::ALL {
        let system = match build_system(kind) {
            Ok(s) => s,
            Err(e) => return col.error("rewriting system builds", e),
        };
        match system.enumerate_avoiding(12) {
            Ok(found) => {
                let found: BTreeSet<Vec<i32>> = found.iter().map(|w| w.letters().to_vec()).collect();
                let listed: BTreeSet<Vec<i32>> = listed_basis(kind).into_iter().collect();
                let extra: Vec<_> = found.difference(&listed).cloned().collect();
                let missing: Vec<_> = listed.difference(&found).cloned().collect();
                col.push(
                    format!("{} system: avoiding words are the listed 20", kind.name()),
                    found.len() == 20 && extra.is_empty() && missing.is_empty(),
                    format!("{} words; extra {}; missing {}", found.len(), fmt_words(&extra), fmt_words(&missing)),
                );
            }
            Err(e) => col.error("avoiding words enumerate", e),
        }
    }
    // Each word of one signed list is braid-equal to exactly one word of the other.
    let as_braids = |kind| -> Vec<SignedWord> {
        listed_basis(kind).iter().map(|w| SignedWord::new(w.clone(), 3).expect("three-strand word")).collect()
    };
    let (first, second) = (as_braids(SystemKind::Signed1), as_braids(SystemKind::Signed2));
    let mut matched = vec![false; second.len()];
    let mut unmatched = Vec::new();
    let mut pairs = Vec::new();
    for x in &first {
        let hit = second.iter().enumerate().find(|(j, y)| {
            !matched[*j] && (braid_equal_bfs(x, y, BfsLimits::default()) == Ok(BraidVerdict::Equal))
        });
        match hit {
            Some((j, y)) => {
                matched[j] = true;
                if x != y {
                    pairs.push(format!("{x} = {y}"));
                }
            }
            None => unmatched.push(x.to_string()),
        }
    }
    col.push(
        "the two signed lists coincide elementwise as braids",
        unmatched.is_empty() && matched.iter().all(|&m| m),
        if unmatched.is_empty() { pairs.join("; ") } else { format!("unmatched {}", unmatched.join(" ")) },
    );
}

fn rules(col: &mut Collector) {
    let expected = [(SystemKind::Positive, 8), (SystemKind::Signed1, 23), (SystemKind::Signed2, 21)];
    for (kind, count) in expected {
        let system = match build_system(kind) {
            Ok(s) => s,
            Err(e) => return col.error("rewriting system builds", e),
        };
        col.push(
            format!("{} system has {count} rules", kind.name()),
            system.rules().len() == count,
            format!("{} rules", system.rules().len()),
        );
        let mut outside = Vec::new();
        for rule in system.rules() {
            match ideal_membership(&rule.relation()) {
                Ok(m) if m.member => {}
                Ok(m) => outside.push(format!("{}: {}", rule.label, m.witness.unwrap_or_default())),
                Err(e) => outside.push(format!("{}: {e}", rule.label)),
            }
        }
        col.push(
            format!("{} rules: lhs - rhs lies in the defining ideal", kind.name()),
            outside.is_empty(),
            outside.join("; "),
        );
    }
}

fn q3(col: &mut Collector) {
    match verify_q3_identities() {
        Ok(checks) => {
            for c in &checks {
                col.criterion = if c.name.starts_with("commutator") { 5 } else { 3 };
                col.identity(c);
            }
        }
        Err(e) => col.error("defining relations and their images", e),
    }
    col.criterion = 5;
    match verify_alt_basis() {
        Ok(r) => {
            col.push("change of basis has entries in R", r.matrix_in_ring, "");
            col.push("inverse change of basis has entries in R", r.inverse_in_ring, "");
            col.push("change of basis has unit determinant", r.determinant_is_unit, r.determinant.clone());
            r.checks.iter().for_each(|c| col.identity(c));
        }
        Err(e) => col.error("alternative basis", e),
    }
    match verify_filtration() {
        Ok(r) => r.checks.iter().for_each(|c| col.identity(c)),
        Err(e) => col.error("filtration", e),
    }
    match verify_quotient_span() {
        Ok(r) => r.checks.iter().for_each(|c| col.identity(c)),
        Err(e) => col.error("quotient by a left ideal", e),
    }
}

fn h3(col: &mut Collector, opts: &VerifyOptions) {
    let basis = h3_basis();
    let images: Result<Vec<_>, _> = basis.iter().map(|w| phi_h3_eval(&AlgElem::word(w, 3)).map(|i| i.coords())).collect();
    let images = match images {
        Ok(i) => i,
        Err(e) => return col.error("basis images", e),
    };
    col.push("basis has 24 words", basis.len() == 24, format!("{} words", basis.len()));
    for pt in opts.points() {
        col.points.push(format!("{pt:?}"));
        let generic = is_generic(pt);
        let reduced = point_mod(pt, DEFAULT_PRIME);
        let rows: Vec<Vec<u64>> =
            images.iter().map(|v| v.iter().map(|c| c.eval_mod(&reduced, DEFAULT_PRIME)).collect()).collect();
        let rank = rank_mod_p(&rows, DEFAULT_PRIME);
        col.push(
            format!("basis images have rank 24 at (a,b,c) = {pt:?}"),
            generic && rank == 24,
            format!("rank {rank} modulo {DEFAULT_PRIME}{}", if generic { "" } else { "; point is degenerate" }),
        );
    }
}

fn a4(col: &mut Collector) {
    let tables = match build_action_tables() {
        Ok(t) => t,
        Err(e) => return col.error("action tables build", e),
    };
    match a4_consistency_check(&tables) {
        Ok(r) => r.checks.iter().for_each(|c| col.identity(c)),
        Err(e) => col.error("consistency of the action tables", e),
    }
    match augmentation_checks(&tables) {
        Ok(cs) => cs.iter().for_each(|c| col.identity(c)),
        Err(e) => col.error("augmentation character", e),
    }
    for entry in cardinality_ledger() {
        col.push(
            format!("{} has {} elements", entry.name, entry.expected),
            entry.counted == entry.expected,
            format!("counted {}", entry.counted),
        );
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn trihecke(col: &mut Collector, opts: &VerifyOptions) {
    let ns: Vec<usize> = match opts.trihecke_n {
        Some(n) => vec![n],
        None => vec![2, 3, 4, 5],
    };
    let points = opts.points();
    col.points = points.iter().map(|p| format!("{p:?}")).collect();
    for &n in &ns {
        let expected = 3 * (factorial(n) - 1);
        for &pt in &points {
            let reduced = point_mod(pt, DEFAULT_PRIME);
            let generic = is_generic(pt) && is_generic_mod(reduced, DEFAULT_PRIME);
            match triple_rank_mod_p(n, reduced, DEFAULT_PRIME) {
                Ok(r) => col.push(
                    format!("n = {n}: span of the basis images has dimension {expected} at {pt:?}"),
                    generic && r.is_full() && r.basis_rank == expected,
                    format!(
                        "rank {} of {} words; fiber subspace {} = {} - {}{}",
                        r.basis_rank,
                        r.basis_size,
                        r.ambient_dim - r.fiber_constraint_rank,
                        r.ambient_dim,
                        r.fiber_constraint_rank,
                        if generic { "" } else { "; point is degenerate" }
                    ),
                ),
                Err(e) => col.error("tripled Hecke rank", e),
            }
        }
    }
    match verify_ternary_relations() {
        Ok(rs) => {
            let bad: Vec<String> =
                rs.iter().filter(|r| !r.vanishes).map(|r| format!("n={} #{} in {}", r.n, r.index, r.algebra)).collect();
            col.push("ternary relations vanish in the three quadratic quotients", bad.is_empty(), bad.join("; "));
        }
        Err(e) => col.error("ternary relations", e),
    }
    let mut off_fiber = Vec::new();
    for n in 2..=4 {
        for w in k_basis(n).unwrap_or_default() {
            let ok = triple_embed(&AlgElem::word(w.letters(), n.max(2))).is_ok_and(|t| fiber_check(&t));
            if !ok {
                off_fiber.push(w.to_string());
            }
        }
    }
    col.push("embedded basis elements satisfy the matching conditions", off_fiber.is_empty(), off_fiber.join(" "));
    let element = ternary_element(3);
    match triple_embed(&element) {
        Ok(t) => col.push("the commutator element vanishes in the three quadratic quotients", t.is_zero(), ""),
        Err(e) => col.error("commutator element", e),
    }
    match ternary_image_check() {
        Ok(c) => col.identity(&c),
        Err(e) => col.error("commutator element on the 3-dimensional block", e),
    }
    match phi_h3_eval(&element) {
        Ok(img) => {
            let block = img.block("V").cloned().unwrap_or_else(|| img.blocks[0].clone());
            for &pt in &points {
                let reduced = point_mod(pt, DEFAULT_PRIME);
                let nonzero = block.entries().iter().any(|c| c.eval_mod(&reduced, DEFAULT_PRIME) != 0);
                col.push(format!("the commutator element is nonzero on V at {pt:?}"), nonzero, "");
            }
        }
        Err(e) => col.error("commutator element on the 3-dimensional block", e),
    }
}

fn vogel(col: &mut Collector, opts: &VerifyOptions) {
    let points = match &opts.vogel_point {
        Some((a, b)) => vec![ParamPoint::new(a.clone(), b.clone())],
        None => parameter_points(opts.seed, 2),
    };
    col.points = points.iter().map(|p| format!("alpha = {}, beta = {}", p.alpha, p.beta)).collect();
    let report = match vogel_suite(&points) {
        Ok(r) => r,
        Err(e) => return col.error("Vogel models", e),
    };
    for m in &report.models {
        for c in &m.checks {
            col.push(
                format!("{} (n = {}, dim {}) at ({}, {}): {}", m.model, m.n, m.dim, m.alpha, m.beta, c.name),
                c.holds,
                c.detail.clone(),
            );
        }
    }
    for r in &report.v2 {
        r.checks.iter().for_each(|c| col.identity(c));
    }
    for r in &report.b3 {
        col.push(
            format!("three-strand span at ({}, {}) has rank 20", r.alpha, r.beta),
            r.rank == 20,
            format!("rank {}; model dimensions {:?}", r.rank, r.model_dims),
        );
        r.checks.iter().for_each(|c| col.identity(c));
    }
    for r in &report.transposition_models {
        for c in &r.checks {
            col.push(format!("transposition model n = {}: {}", r.n, c.name), c.holds, c.detail.clone());
        }
    }
    report.morphisms.iter().for_each(|c| col.identity(c));
}

fn weights(col: &mut Collector) {
    match verify_weights() {
        Ok(r) => r.checks.iter().for_each(|c| col.identity(c)),
        Err(e) => col.error("weights", e),
    }
}

fn handles(col: &mut Collector) {
    let equal = |(l, r): (SignedWord, SignedWord)| -> (bool, String) {
        match braid_equal_bfs(&l, &r, BfsLimits::default()) {
            Ok(BraidVerdict::Equal) => (true, format!("{l} = {r}")),
            Ok(BraidVerdict::Unknown) => (false, format!("{l} vs {r}: not connected within the search limits")),
            Err(e) => (false, format!("{l} vs {r}: {e}")),
        }
    };
    for n in 2..=4 {
        for (side, name) in [(HandleSide::A, "first"), (HandleSide::B, "mirrored")] {
            match handle_identity(n, side) {
                Ok(pair) => {
                    let (ok, w) = equal(pair);
                    col.push(format!("{name} handle identity for n = {n}"), ok, w);
                }
                Err(e) => col.error("handle identity", e),
            }
        }
    }
    let templates: [(usize, Vec<Vec<i32>>); 3] =
        [(3, vec![vec![1]]), (3, vec![vec![1], vec![1, 1]]), (4, vec![vec![1, 2], vec![-1]])];
    for (n, parts) in templates {
        match handle_reduction_template(n, &parts) {
            Ok(pair) => {
                let (ok, w) = equal(pair);
                col.push(format!("handle reduction on {} strands with parts {parts:?}", n + 1), ok, w);
            }
            Err(e) => col.error("handle reduction", e),
        }
    }
}
