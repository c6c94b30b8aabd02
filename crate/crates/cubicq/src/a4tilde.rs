//! The 25-dimensional bimodule obtained from the cubic quotient on four strands by the ideal
//! generated by the three-strand algebra and `s_3`: its basis, the word-reversing involution, the
//! left and right actions of `s_1, s_2` and their consistency.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::expr::{eval, Env, ExprError, Value};
use crate::report::{check, IdentityCheck};
use crate::rewrite::{listed_basis, SystemKind};
use crate::ring::{det_unit_pivot, named, LaurentPoly, Matrix, RingError, RingMatrix};

const TABLES: &str = include_str!("../data/a4tilde.tables");

/// Rank of the bimodule.
pub const DIM: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum A4Error {
    #[error("malformed table line {0}")]
    Format(usize),
    #[error("entry {0} defined twice")]
    Duplicate(String),
    #[error("missing entry {0}")]
    Missing(String),
    #[error("entry {name}: {source}")]
    Expr { name: String, source: ExprError },
    #[error("letter {0} outside the three-strand alphabet")]
    Letter(i32),
    #[error("vector has length {0}, expected 25")]
    Length(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Words of the 25 basis vectors on four strands, in order.
pub fn basis_words() -> Vec<Vec<i32>> {
    const X: [i32; 3] = [3, -2, 3];
    let around = |pre: &[i32], post: &[i32]| -> Vec<i32> { pre.iter().chain(&X).chain(post).copied().collect() };
    vec![
        around(&[], &[]),
        around(&[1], &[]),
        around(&[-1], &[]),
        around(&[2, 1], &[]),
        around(&[2, -1], &[]),
        around(&[-2, 1], &[]),
        around(&[-2, -1], &[]),
        around(&[], &[1]),
        around(&[], &[-1]),
        around(&[], &[1, 2]),
        around(&[], &[1, -2]),
        around(&[], &[-1, 2]),
        around(&[], &[-1, -2]),
        around(&[2, 1], &[1]),
        around(&[-2, 1], &[1]),
        around(&[1], &[1, 2]),
        around(&[1], &[1, -2]),
        around(&[1], &[-1]),
        around(&[1], &[1]),
        around(&[2, 1], &[1, 2]),
        around(&[2, 1], &[1, -2]),
        vec![3, 2, -1, 2, 3],
        vec![-3, -2, 1, -2, -3],
        around(&[], &[1, -2, 1]),
        around(&[1, -2, 1], &[]),
    ]
}

/// The permutation of basis indices (1-based) induced by word reversal, away from `e18, e21`.
pub fn involution_permutation() -> [usize; DIM] {
    let mut sigma: [usize; DIM] = std::array::from_fn(|i| i + 1);
    for (i, j) in [(2, 8), (3, 9), (4, 10), (5, 12), (6, 11), (7, 13), (14, 16), (15, 17), (24, 25)] {
        sigma[i - 1] = j;
        sigma[j - 1] = i;
    }
    sigma
}

/// Named expressions of the data file, in file order.
#[derive(Debug, Clone)]
pub struct TableSource {
    pub entries: Vec<(String, String)>,
}

impl TableSource {
    pub fn builtin() -> Result<Self, A4Error> {
        Self::parse(TABLES)
    }

    /// Parses `name := expression` lines; indented lines continue the previous entry.
    pub fn parse(src: &str) -> Result<Self, A4Error> {
        let mut entries: Vec<(String, String)> = Vec::new();
        let mut seen = BTreeSet::new();
        for (n, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            if line.starts_with(char::is_whitespace) {
                let last = entries.last_mut().ok_or(A4Error::Format(n + 1))?;
                last.1.push(' ');
                last.1.push_str(line.trim());
                continue;
            }
            let (name, body) = line.split_once(":=").ok_or(A4Error::Format(n + 1))?;
            let name = name.trim().to_string();
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(A4Error::Format(n + 1));
            }
            if !seen.insert(name.clone()) {
                return Err(A4Error::Duplicate(name));
            }
            entries.push((name, body.trim().to_string()));
        }
        Ok(TableSource { entries })
    }

    fn get(&self, name: &str) -> Option<&str> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, b)| b.as_str())
    }
}

/// Resolves references with memoization; a reference back into an entry under evaluation is a cycle.
struct TableEnv<'a> {
    source: &'a TableSource,
    involution: Option<&'a RingMatrix>,
    memo: HashMap<String, Vec<LaurentPoly>>,
    active: Vec<String>,
}

impl TableEnv<'_> {
    fn resolve(&mut self, name: &str) -> Result<Vec<LaurentPoly>, ExprError> {
        if let Some(v) = self.memo.get(name) {
            return Ok(v.clone());
        }
        if self.active.iter().any(|n| n == name) {
            return Err(ExprError::Cycle(name.to_string()));
        }
        let body = self.source.get(name).ok_or_else(|| ExprError::UnknownRef(name.to_string()))?;
        self.active.push(name.to_string());
        let value = eval(body, self).and_then(Value::into_vector);
        self.active.pop();
        let value = value?;
        self.memo.insert(name.to_string(), value.clone());
        Ok(value)
    }
}

impl Env for TableEnv<'_> {
    fn lookup(&mut self, name: &str) -> Result<Value, ExprError> {
        self.resolve(name).map(Value::Vector)
    }

    fn apply_f(&mut self, v: Vec<LaurentPoly>) -> Result<Vec<LaurentPoly>, ExprError> {
        let f = self.involution.ok_or_else(|| ExprError::Env("the involution is not built yet".into()))?;
        f.apply(&v).map_err(ExprError::from)
    }

    fn vector_dim(&self) -> usize {
        DIM
    }

    fn strands(&self) -> usize {
        4
    }
}

/// Matrices of left multiplication by `s_1, s_2`, the involution and the induced right actions.
/// Column `j` of each matrix is the image of `e_{j+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionTables {
    pub left1: RingMatrix,
    pub left2: RingMatrix,
    pub involution: RingMatrix,
    pub right1: RingMatrix,
    pub right2: RingMatrix,
}

fn columns(cols: &[Vec<LaurentPoly>]) -> RingMatrix {
    Matrix::from_fn(DIM, cols.len(), |i, j| cols[j][i].clone())
}

fn resolve_all(env: &mut TableEnv, names: impl Iterator<Item = String>) -> Result<Vec<Vec<LaurentPoly>>, A4Error> {
    names
        .map(|name| {
            if env.source.get(&name).is_none() {
                return Err(A4Error::Missing(name));
            }
            env.resolve(&name).map_err(|source| A4Error::Expr { name, source })
        })
        .collect()
}

/// Builds the action tables from the embedded data file.
pub fn build_action_tables() -> Result<ActionTables, A4Error> {
    build_from(&TableSource::builtin()?)
}

/// Builds the action tables from a table source; every entry must resolve to a vector over `R`.
pub fn build_from(source: &TableSource) -> Result<ActionTables, A4Error> {
    let involution = {
        let mut env = TableEnv { source, involution: None, memo: HashMap::new(), active: Vec::new() };
        let special = resolve_all(&mut env, ["f_e18", "f_e21"].into_iter().map(String::from))?;
        let sigma = involution_permutation();
        let cols: Vec<Vec<LaurentPoly>> = (0..DIM)
            .map(|j| match j + 1 {
                18 => special[0].clone(),
                21 => special[1].clone(),
                _ => unit_vector(sigma[j] - 1),
            })
            .collect();
        columns(&cols)
    };
    let mut env = TableEnv { source, involution: Some(&involution), memo: HashMap::new(), active: Vec::new() };
    let left1 = columns(&resolve_all(&mut env, (1..=DIM).map(|i| format!("l1_e{i}")))?);
    let left2 = columns(&resolve_all(&mut env, (1..=DIM).map(|i| format!("l2_e{i}")))?);
    let right1 = involution.try_mul(&left1)?.try_mul(&involution)?;
    let right2 = involution.try_mul(&left2)?.try_mul(&involution)?;
    Ok(ActionTables { left1, left2, involution, right1, right2 })
}

fn unit_vector(i: usize) -> Vec<LaurentPoly> {
    let mut v = vec![LaurentPoly::zero(); DIM];
    v[i] = LaurentPoly::one();
    v
}

/// Which side a word acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("unknown side '{other}', expected left or right")),
        }
    }
}

impl ActionTables {
    /// Matrix of a signed letter acting on the given side; inverses come from the cubic relation
    /// `s^-1 = w^-1 (s^2 - u s + v)`.
    pub fn letter(&self, letter: i32, side: Side) -> Result<RingMatrix, A4Error> {
        let base = match (letter.abs(), side) {
            (1, Side::Left) => &self.left1,
            (2, Side::Left) => &self.left2,
            (1, Side::Right) => &self.right1,
            (2, Side::Right) => &self.right2,
            _ => return Err(A4Error::Letter(letter)),
        };
        if letter > 0 {
            return Ok(base.clone());
        }
        Ok(inverse_from_cubic(base)?)
    }

    /// Image of `v` under the word acting on the given side.
    pub fn apply(&self, word: &[i32], side: Side, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, A4Error> {
        if v.len() != DIM {
            return Err(A4Error::Length(v.len()));
        }
        let mut out = v.to_vec();
        let order: Box<dyn Iterator<Item = &i32>> = match side {
            Side::Left => Box::new(word.iter().rev()),
            Side::Right => Box::new(word.iter()),
        };
        for &l in order {
            out = self.letter(l, side)?.apply(&out)?;
        }
        Ok(out)
    }
}

fn inverse_from_cubic(m: &RingMatrix) -> Result<RingMatrix, RingError> {
    let sq = m.try_mul(m)?;
    let shifted = sq.try_sub(&m.scale(&named::u()))?;
    let id = Matrix::identity(m.rows(), &LaurentPoly::one());
    Ok(shifted.try_add(&id.scale(&named::v()))?.scale(&named::w().pow(-1)))
}

/// Applies a word on one side of a vector, building the tables on first use.
pub fn a4_apply(word: &[i32], side: Side, v: &[LaurentPoly]) -> Result<Vec<LaurentPoly>, A4Error> {
    static TABLES: std::sync::OnceLock<ActionTables> = std::sync::OnceLock::new();
    let tables = match TABLES.get() {
        Some(t) => t,
        None => {
            let t = build_action_tables()?;
            TABLES.get_or_init(|| t)
        }
    };
    tables.apply(word, side, v)
}

/// Outcome of the consistency checks on the action tables.
#[derive(Debug, Clone, Serialize)]
pub struct A4Report {
    pub checks: Vec<IdentityCheck>,
    pub det_left1: String,
    pub det_left2: String,
}

impl A4Report {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn braid(x: &RingMatrix, y: &RingMatrix) -> Result<bool, RingError> {
    let l = x.try_mul(y)?.try_mul(x)?;
    let r = y.try_mul(x)?.try_mul(y)?;
    Ok(l == r)
}

fn cubic(x: &RingMatrix) -> Result<bool, RingError> {
    let (a, b, c) = (named::a(), named::b(), named::c());
    Ok(x.minus_scalar(&a).try_mul(&x.minus_scalar(&b))?.try_mul(&x.minus_scalar(&c))?.is_zero())
}

fn only_a(p: &LaurentPoly) -> bool {
    p.terms().all(|(e, _)| e.iter().skip(1).all(|&k| k == 0))
}

/// Checks the braid and cubic relations on both sides, that the involution is an involution over
/// `Z[a^±1]`, that the two actions commute and that both left generators have unit determinant.
pub fn a4_consistency_check(t: &ActionTables) -> Result<A4Report, A4Error> {
    let mut checks = Vec::new();
    checks.push(check("left braid relation", braid(&t.left1, &t.left2)?, ""));
    checks.push(check("left cubic relation for s_1", cubic(&t.left1)?, ""));
    checks.push(check("left cubic relation for s_2", cubic(&t.left2)?, ""));
    checks.push(check("involution squares to the identity", t.involution.try_mul(&t.involution)?.is_identity(), ""));
    checks.push(check("involution has entries in Z[a^±1]", t.involution.entries().iter().all(only_a), ""));
    for (i, l) in [&t.left1, &t.left2].iter().enumerate() {
        for (j, r) in [&t.right1, &t.right2].iter().enumerate() {
            let commute = l.try_mul(r)? == r.try_mul(l)?;
            checks.push(check(&format!("left s_{} commutes with right s_{}", i + 1, j + 1), commute, ""));
        }
    }
    checks.push(check("right braid relation", braid(&t.right1, &t.right2)?, ""));
    checks.push(check("right cubic relation for s_1", cubic(&t.right1)?, ""));
    checks.push(check("right cubic relation for s_2", cubic(&t.right2)?, ""));
    let d1 = det_unit_pivot(&t.left1)?;
    let d2 = det_unit_pivot(&t.left2)?;
    checks.push(check("det of left s_1 is a unit", d1.is_unit(), d1.to_string()));
    checks.push(check("det of left s_2 is a unit", d2.is_unit(), d2.to_string()));
    Ok(A4Report { checks, det_left1: d1.to_string(), det_left2: d2.to_string() })
}

/// The augmentation character `s_i ↦ a` as seen by the tables: `s_2 x = a x`, and `s_1 w_+`
/// equals `a w_+` modulo the span of `u_1 x u_1`.
pub fn augmentation_checks(t: &ActionTables) -> Result<Vec<IdentityCheck>, A4Error> {
    let a = named::a();
    let e1 = unit_vector(0);
    let s2x = t.left2.apply(&e1)?;
    let mut out = vec![check("s_2 x = a x", s2x == e1.iter().map(|c| c * &a).collect::<Vec<_>>(), "")];
    // u_1 x u_1 is spanned by x, 1x, -1x, x1, x-1, 1x-1, 1x1 and the image of 1x-1 under f.
    let span: BTreeSet<usize> = [1, 2, 3, 8, 9, 18, 19].into_iter().collect();
    let mut img = t.left1.apply(&unit_vector(21))?;
    img[21] = &img[21] - &a;
    let stray: Vec<usize> = (0..DIM).filter(|i| !img[*i].is_zero() && !span.contains(&(i + 1))).map(|i| i + 1).collect();
    out.push(check("s_1 w_+ = a w_+ mod u_1 x u_1", stray.is_empty(), format!("stray basis vectors {stray:?}")));
    Ok(out)
}

/// One line of the cardinality ledger for the spanning sets on four strands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CardinalityEntry {
    pub name: &'static str,
    pub expected: usize,
    pub counted: usize,
}

fn concat(parts: &[&[i32]]) -> Vec<i32> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn words(list: &[&[i32]]) -> Vec<Vec<i32>> {
    list.iter().map(|w| w.to_vec()).collect()
}

/// Builds the literal word sets of the spanning statements and counts their distinct elements.
pub fn cardinality_ledger() -> Vec<CardinalityEntry> {
    let b0 = listed_basis(SystemKind::Signed1);
    let e = words(&[&[], &[2], &[-2], &[1, 2], &[1, -2], &[-1, 2], &[-1, -2], &[2, -1, 2]]);
    let e_prime = words(&[&[], &[1], &[-1], &[2, 1], &[2, -1], &[-2, 1], &[-2, -1], &[1, -2, 1]]);
    let e0 = words(&[&[], &[1], &[-1], &[2], &[-2]]);
    let f1 = words(&[&[], &[2], &[2, 1], &[2, -1], &[-2], &[-2, 1]]);
    let f2 = words(&[&[3], &[-3], &[3, 2], &[3, -2], &[-3, 2], &[3, 2, 1], &[-3, 2, 1], &[3, 2, -1], &[3, -2, 1]]);

    let mut one_sided = BTreeSet::new();
    for b in &b0 {
        for f in &f1 {
            one_sided.insert(concat(&[b, &[3], f]));
        }
    }
    for x in &e {
        one_sided.insert(concat(&[x, &[3, -2, -1]]));
        one_sided.insert(concat(&[x, &[3, 2, -1, 2]]));
    }

    let mut via_f2 = BTreeSet::new();
    for b in &b0 {
        for f in &f2 {
            via_f2.insert(concat(&[b, f]));
        }
    }
    for x in &e_prime {
        via_f2.insert(concat(&[x, &[-3, -2]]));
        via_f2.insert(concat(&[x, &[-3, -2, 1]]));
    }
    for x in &e0 {
        via_f2.insert(concat(&[x, &[-3, 2, -1]]));
    }

    let mut both = via_f2.clone();
    for x in &e {
        both.insert(concat(&[x, &[3, -2, -1]]));
        both.insert(concat(&[x, &[3, 2, -1, 2]]));
    }
    both.insert(vec![-3, -2, -1]);
    both.insert(vec![-3, 2, -1, 2]);

    let mut ideal = both.clone();
    ideal.extend(b0.iter().cloned());
    let mut full = ideal.clone();
    full.extend(basis_words());

    let entry = |name, expected, counted| CardinalityEntry { name, expected, counted };
    vec![
        entry("basis of the three-strand quotient", 20, b0.iter().collect::<BTreeSet<_>>().len()),
        entry("Q_3 s_3 Q_3 spanning set", 136, one_sided.len()),
        entry("Q_3 s_3 F + Q_3 s_3^-1 F spanning set", 201, via_f2.len()),
        entry("Q_3 s_3 Q_3 + Q_3 s_3^-1 Q_3 spanning set", 219, both.len()),
        entry("Q_3 u_3 Q_3 spanning set", 239, ideal.len()),
        entry("four-strand spanning set", 264, full.len()),
    ]
}

/// Named auxiliary vectors of the data file, resolved, for inspection.
pub fn resolved_entries() -> Result<BTreeMap<String, Vec<LaurentPoly>>, A4Error> {
    let source = TableSource::builtin()?;
    let tables = build_from(&source)?;
    let mut env = TableEnv { source: &source, involution: Some(&tables.involution), memo: HashMap::new(), active: Vec::new() };
    let names: Vec<String> = source.entries.iter().map(|(n, _)| n.clone()).collect();
    let values = resolve_all(&mut env, names.clone().into_iter())?;
    Ok(names.into_iter().zip(values).collect())
}
