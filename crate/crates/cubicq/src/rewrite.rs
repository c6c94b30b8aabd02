//! The three rewriting systems for the cubic quotient on three strands, normal forms and
//! enumeration of pattern-avoiding words.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::expr::{eval_elem, ExprError};
use crate::freealg::AlgElem;
use crate::ring::{named, LaurentPoly};
use crate::words::SignedWord;

const POSITIVE_RULES: &str = include_str!("../data/positive.rules");
const SIGNED1_RULES: &str = include_str!("../data/signed1.rules");
const SIGNED2_RULES: &str = include_str!("../data/signed2.rules");

/// Default bound on rewriting steps per input word.
pub const DEFAULT_STEP_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("rule {label}: {source}")]
    Rule { label: String, source: ExprError },
    #[error("rule {0}: left side occurs in its right side")]
    Loop(String),
    #[error("malformed rule file line {0}")]
    Format(usize),
    #[error("step cap of {0} rewriting steps exhausted")]
    StepCap(usize),
    #[error("new avoiding words still appear at length {0}")]
    LengthCap(usize),
    #[error("element lives on {0} strands, the systems need 3")]
    Strands(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemKind {
    Positive,
    Signed1,
    Signed2,
}

impl SystemKind {
    pub const ALL: [SystemKind; 3] = [SystemKind::Positive, SystemKind::Signed1, SystemKind::Signed2];

    pub fn name(self) -> &'static str {
        match self {
            SystemKind::Positive => "positive",
            SystemKind::Signed1 => "signed1",
            SystemKind::Signed2 => "signed2",
        }
    }

    pub fn alphabet(self) -> &'static [i32] {
        match self {
            SystemKind::Positive => &[1, 2],
            SystemKind::Signed1 => &[1, 2, -1, -2],
            SystemKind::Signed2 => &[1, -1, 2, -2],
        }
    }

    fn source(self) -> &'static str {
        match self {
            SystemKind::Positive => POSITIVE_RULES,
            SystemKind::Signed1 => SIGNED1_RULES,
            SystemKind::Signed2 => SIGNED2_RULES,
        }
    }
}

impl std::str::FromStr for SystemKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pos" | "positive" => Ok(SystemKind::Positive),
            "signed1" => Ok(SystemKind::Signed1),
            "signed2" => Ok(SystemKind::Signed2),
            _ => Err(format!("unknown system '{s}' (expected pos, signed1 or signed2)")),
        }
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RewriteRule {
    pub label: String,
    pub lhs: SignedWord,
    pub rhs: AlgElem,
}

impl RewriteRule {
    /// `lhs - rhs`, the relation the rule encodes.
    pub fn relation(&self) -> AlgElem {
        &AlgElem::from_word(&self.lhs) - &self.rhs
    }
}

/// Redex selection used by [`RewriteSystem::normal_form_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// First rule in table order that matches, at its leftmost occurrence.
    Leftmost,
    /// Occurrence starting furthest to the right, ties broken by table order.
    Rightmost,
}

#[derive(Debug, Clone)]
pub struct RewriteSystem {
    kind: SystemKind,
    rules: Vec<RewriteRule>,
}

/// Builds one of the three embedded systems.
pub fn build_system(kind: SystemKind) -> Result<RewriteSystem, RewriteError> {
    RewriteSystem::parse(kind, kind.source())
}

impl RewriteSystem {
    /// Parses a rule file: `(label) [lhs] := rhs`, continuation lines indented, `#` comments.
    pub fn parse(kind: SystemKind, src: &str) -> Result<Self, RewriteError> {
        let mut blocks: Vec<(usize, String)> = Vec::new();
        for (i, line) in src.lines().enumerate() {
            let text = line.split('#').next().unwrap_or("");
            if text.trim().is_empty() {
                continue;
            }
            if text.starts_with(char::is_whitespace) {
                let last = blocks.last_mut().ok_or(RewriteError::Format(i + 1))?;
                last.1.push(' ');
                last.1.push_str(text.trim());
            } else {
                blocks.push((i + 1, text.trim().to_string()));
            }
        }
        let mut rules = Vec::with_capacity(blocks.len());
        for (line, block) in blocks {
            let (head, rhs_src) = block.split_once(":=").ok_or(RewriteError::Format(line))?;
            let head = head.trim();
            let (label, lhs_src) = match head.strip_prefix('(') {
                Some(rest) => {
                    let (l, r) = rest.split_once(')').ok_or(RewriteError::Format(line))?;
                    (l.trim().to_string(), r.trim())
                }
                None => ((rules.len() + 1).to_string(), head),
            };
            let wrap = |source| RewriteError::Rule { label: label.clone(), source };
            let lhs_word = lhs_src
                .strip_prefix('[')
                .and_then(|x| x.strip_suffix(']'))
                .and_then(|x| SignedWord::parse(x, Some(3)).ok())
                .filter(|w| !w.is_empty())
                .ok_or(RewriteError::Format(line))?;
            let rhs = eval_elem(rhs_src, 3).map_err(wrap)?;
            if rhs.terms().any(|(w, _)| find(w, lhs_word.letters(), 0).is_some()) {
                return Err(RewriteError::Loop(label));
            }
            rules.push(RewriteRule { label, lhs: lhs_word, rhs });
        }
        Ok(RewriteSystem { kind, rules })
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn rule(&self, label: &str) -> Option<&RewriteRule> {
        self.rules.iter().find(|r| r.label == label)
    }

    pub fn forbidden_patterns(&self) -> Vec<&[i32]> {
        self.rules.iter().map(|r| r.lhs.letters()).collect()
    }

    pub fn avoids(&self, letters: &[i32]) -> bool {
        self.rules.iter().all(|r| find(letters, r.lhs.letters(), 0).is_none())
    }

    fn redex(&self, letters: &[i32], strategy: Strategy) -> Option<(usize, usize)> {
        match strategy {
            Strategy::Leftmost => {
                self.rules.iter().enumerate().find_map(|(i, r)| find(letters, r.lhs.letters(), 0).map(|p| (i, p)))
            }
            Strategy::Rightmost => {
                let mut best: Option<(usize, usize)> = None;
                for (i, r) in self.rules.iter().enumerate() {
                    if let Some(p) = rfind(letters, r.lhs.letters()) {
                        if best.is_none_or(|(_, q)| p > q) {
                            best = Some((i, p));
                        }
                    }
                }
                best
            }
        }
    }

    /// Normal form under the default strategy and step cap.
    pub fn normal_form(&self, x: &AlgElem) -> Result<AlgElem, RewriteError> {
        self.normal_form_with(x, Strategy::Leftmost, step_cap())
    }

    pub fn normal_form_with(&self, x: &AlgElem, strategy: Strategy, step_cap: usize) -> Result<AlgElem, RewriteError> {
        if x.strands() != 3 {
            return Err(RewriteError::Strands(x.strands()));
        }
        let x = if self.kind == SystemKind::Positive { positive_expansion(x) } else { x.clone() };
        let budget = step_cap.saturating_mul(x.num_terms().max(1));
        let mut pending: BTreeMap<(Reverse<usize>, Vec<i32>), LaurentPoly> = BTreeMap::new();
        for (w, c) in x.terms() {
            accumulate(&mut pending, w.clone(), c.clone());
        }
        let mut out = AlgElem::zero(3);
        let mut steps = 0usize;
        // Longest words first: their reducts are shorter or already pending, so coefficients merge.
        while let Some(((_, word), coeff)) = pending.pop_first() {
            match self.redex(&word, strategy) {
                None => out.add_term(word, coeff),
                Some((ri, pos)) => {
                    steps += 1;
                    if steps > budget {
                        return Err(RewriteError::StepCap(budget));
                    }
                    let rule = &self.rules[ri];
                    let n = rule.lhs.len();
                    for (w, c) in rule.rhs.terms() {
                        let mut nw = word[..pos].to_vec();
                        nw.extend_from_slice(w);
                        nw.extend_from_slice(&word[pos + n..]);
                        accumulate(&mut pending, nw, c * &coeff);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Breadth-first enumeration of all words over the alphabet avoiding every pattern.
    pub fn enumerate_avoiding(&self, length_cap: usize) -> Result<Vec<SignedWord>, RewriteError> {
        let alphabet = self.kind.alphabet();
        let mut out = vec![SignedWord::empty(3)];
        let mut layer: Vec<Vec<i32>> = vec![Vec::new()];
        for len in 1..=length_cap + 1 {
            let mut next = Vec::new();
            for w in &layer {
                for &l in alphabet {
                    let mut nw = w.clone();
                    nw.push(l);
                    // Only suffixes can create a new occurrence.
                    if self.rules.iter().all(|r| !nw.ends_with(r.lhs.letters())) {
                        next.push(nw);
                    }
                }
            }
            if next.is_empty() {
                return Ok(out);
            }
            if len > length_cap {
                return Err(RewriteError::LengthCap(length_cap));
            }
            out.extend(next.iter().map(|w| SignedWord::new(w.clone(), 3).expect("alphabet letters are valid")));
            layer = next;
        }
        unreachable!()
    }

    /// Reduces every sample with both strategies and reports the ones that disagree.
    pub fn check_local_confluence(&self, samples: &[SignedWord]) -> Result<ConfluenceReport, RewriteError> {
        let mut report = ConfluenceReport { checked: 0, divergent: Vec::new() };
        for s in samples {
            let x = AlgElem::word(s.letters(), 3);
            let l = self.normal_form_with(&x, Strategy::Leftmost, step_cap())?;
            let r = self.normal_form_with(&x, Strategy::Rightmost, step_cap())?;
            report.checked += 1;
            if l != r {
                report.divergent.push((s.clone(), l, r));
            }
        }
        Ok(report)
    }
}

#[derive(Debug, Clone)]
pub struct ConfluenceReport {
    pub checked: usize,
    pub divergent: Vec<(SignedWord, AlgElem, AlgElem)>,
}

impl ConfluenceReport {
    pub fn is_confluent(&self) -> bool {
        self.divergent.is_empty()
    }
}

/// Step cap, overridable through `CUBICQ_STEP_CAP`.
pub fn step_cap() -> usize {
    std::env::var("CUBICQ_STEP_CAP").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_STEP_CAP)
}

fn accumulate(map: &mut BTreeMap<(Reverse<usize>, Vec<i32>), LaurentPoly>, w: Vec<i32>, c: LaurentPoly) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry((Reverse(w.len()), w)) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn find(hay: &[i32], needle: &[i32], from: usize) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (from..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

fn rfind(hay: &[i32], needle: &[i32]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).rev().find(|&i| &hay[i..i + needle.len()] == needle)
}

/// Rewrites inverse letters through `s^-1 = w^-1 (s^2 - u s + v)`, which holds in the cubic quotient.
fn positive_expansion(x: &AlgElem) -> AlgElem {
    if x.terms().all(|(w, _)| w.iter().all(|&l| l > 0)) {
        return x.clone();
    }
    let winv = named::w().pow(-1);
    let inverse_of = |s: i32| {
        let mut e = AlgElem::zero(3);
        e.add_term(vec![s, s], winv.clone());
        e.add_term(vec![s], -(&named::u() * &winv));
        e.add_term(vec![], &named::v() * &winv);
        e
    };
    let mut out = AlgElem::zero(3);
    for (w, c) in x.terms() {
        let mut acc = AlgElem::scalar(c.clone(), 3);
        for &l in w {
            let f = if l > 0 { AlgElem::word(&[l], 3) } else { inverse_of(-l) };
            acc = &acc * &f;
        }
        out = &out + &acc;
    }
    out
}

/// Words of the three bases in the order they are listed.
pub fn listed_basis(kind: SystemKind) -> Vec<Vec<i32>> {
    let src: &[&[i32]] = match kind {
        SystemKind::Positive => &[
            &[], &[1], &[2], &[1, 1], &[1, 2], &[2, 1], &[2, 2], &[1, 1, 2], &[1, 2, 1], &[1, 2, 2], &[2, 1, 1],
            &[2, 2, 1], &[1, 1, 2, 1], &[1, 1, 2, 2], &[1, 2, 1, 1], &[1, 2, 2, 1], &[2, 1, 1, 2], &[2, 2, 1, 1],
            &[1, 1, 2, 1, 1], &[1, 1, 2, 2, 1],
        ],
        SystemKind::Signed1 => &[
            &[], &[1], &[2], &[-1], &[-2], &[1, 2], &[1, -2], &[2, 1], &[2, -1], &[-1, 2], &[-1, -2], &[-2, 1],
            &[-2, -1], &[1, 2, 1], &[1, 2, -1], &[1, -2, 1], &[1, -2, -1], &[2, 1, -2], &[2, -1, 2], &[-1, 2, -1],
        ],
        SystemKind::Signed2 => &[
            &[], &[1], &[-1], &[2], &[-2], &[1, 2], &[1, -2], &[-1, 2], &[-1, -2], &[2, 1], &[2, -1], &[-2, 1],
            &[-2, -1], &[1, 2, 1], &[1, 2, -1], &[1, -2, 1], &[1, -2, -1], &[-1, 2, 1], &[-1, 2, -1], &[2, -1, 2],
        ],
    };
    src.iter().map(|w| w.to_vec()).collect()
}

/// Coordinates of a normal form on a word list, or the words outside the list.
pub fn coordinates(x: &AlgElem, basis: &[Vec<i32>]) -> Result<Vec<LaurentPoly>, Vec<Vec<i32>>> {
    let index: HashMap<&[i32], usize> = basis.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
    let mut v = vec![LaurentPoly::zero(); basis.len()];
    let mut stray = BTreeSet::new();
    for (w, c) in x.terms() {
        match index.get(w.as_slice()) {
            Some(&i) => v[i] = c.clone(),
            None => {
                stray.insert(w.clone());
            }
        }
    }
    if stray.is_empty() {
        Ok(v)
    } else {
        Err(stray.into_iter().collect())
    }
}
