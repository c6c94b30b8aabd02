//! Signed braid words, their symmetries and a bounded equality oracle for the braid group.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter {letter} out of range for {strands} strands")]
    OutOfRange { letter: i32, strands: usize },
    #[error("zero is not a letter")]
    ZeroLetter,
    #[error("at least two strands are required")]
    TooFewStrands,
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Word in the Artin generators: `i` stands for `s_i`, `-i` for its inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedWord {
    letters: Vec<i32>,
    strands: usize,
}

/// Symmetries acting letterwise on words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordSymmetry {
    /// Negates every letter.
    Mirror,
    /// Reverses the word and negates every letter.
    InverseRev,
    /// Sends `s_i` to `s_{i+k}`.
    Shift(i32),
}

impl SignedWord {
    pub fn new(letters: Vec<i32>, strands: usize) -> Result<Self, WordError> {
        if strands < 2 {
            return Err(WordError::TooFewStrands);
        }
        for &l in &letters {
            if l == 0 {
                return Err(WordError::ZeroLetter);
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(WordError::OutOfRange { letter: l, strands });
            }
        }
        Ok(SignedWord { letters, strands })
    }

    /// Builds a word on the smallest strand count that fits its letters (at least 3).
    pub fn from_letters(letters: &[i32]) -> Self {
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(0).max(3);
        Self::new(letters.to_vec(), strands).expect("valid letters")
    }

    pub fn empty(strands: usize) -> Self {
        SignedWord { letters: Vec::new(), strands }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters viewed on more strands.
    pub fn with_strands(&self, strands: usize) -> Result<Self, WordError> {
        Self::new(self.letters.clone(), strands)
    }

    /// Concatenation followed by free reduction.
    pub fn mul(&self, other: &Self) -> Result<Self, WordError> {
        if self.strands != other.strands {
            return Err(WordError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(SignedWord { letters: free_reduce_letters(&letters), strands: self.strands })
    }

    /// Plain concatenation without reduction.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        SignedWord { letters, strands: self.strands.max(other.strands) }
    }

    pub fn inverse(&self) -> Self {
        self.apply_symmetry(WordSymmetry::InverseRev).unwrap()
    }

    pub fn free_reduce(&self) -> Self {
        SignedWord { letters: free_reduce_letters(&self.letters), strands: self.strands }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|p| p[0] != -p[1])
    }

    pub fn apply_symmetry(&self, kind: WordSymmetry) -> Result<Self, WordError> {
        match kind {
            WordSymmetry::Mirror => Ok(SignedWord { letters: self.letters.iter().map(|l| -l).collect(), strands: self.strands }),
            WordSymmetry::InverseRev => {
                Ok(SignedWord { letters: self.letters.iter().rev().map(|l| -l).collect(), strands: self.strands })
            }
            WordSymmetry::Shift(k) => {
                let mut letters = Vec::with_capacity(self.letters.len());
                for &l in &self.letters {
                    let mag = l.abs() + k;
                    if mag < 1 || mag as usize >= self.strands {
                        return Err(WordError::OutOfRange { letter: l.signum() * mag, strands: self.strands });
                    }
                    letters.push(l.signum() * mag);
                }
                Ok(SignedWord { letters, strands: self.strands })
            }
        }
    }

    /// Image in the symmetric group, in one-line notation on `strands` points.
    pub fn permutation(&self) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            p.swap(i, i + 1);
        }
        p
    }

    /// Exponent sum, invariant under every braid relation.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Parses `"1 2 -1"`, `"1,2,-1"` or `"1 2 1'"` (apostrophe marks an inverse).
    pub fn parse(s: &str, strands: Option<usize>) -> Result<Self, WordError> {
        let letters = parse_letters(s)?;
        match strands {
            Some(n) => Self::new(letters, n),
            None => Ok(Self::from_letters(&letters)),
        }
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

impl fmt::Debug for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.strands)
    }
}

impl FromStr for SignedWord {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s, None)
    }
}

fn parse_letters(s: &str) -> Result<Vec<i32>, WordError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut pos = 0;
    let trimmed = s.trim();
    if trimmed == "[]" || trimmed.is_empty() {
        return Ok(out);
    }
    while pos < chars.len() {
        let ch = chars[pos];
        if ch.is_whitespace() || ch == ',' || ch == '[' || ch == ']' {
            pos += 1;
            continue;
        }
        let start = pos;
        let mut neg = false;
        if ch == '-' {
            neg = true;
            pos += 1;
        }
        let dstart = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        if dstart == pos {
            return Err(WordError::Parse { pos: start, msg: format!("unexpected '{}'", chars[start]) });
        }
        let n: i32 = chars[dstart..pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| WordError::Parse { pos: dstart, msg: "letter too large".into() })?;
        if n == 0 {
            return Err(WordError::ZeroLetter);
        }
        let mut l = if neg { -n } else { n };
        while pos < chars.len() && chars[pos] == '\'' {
            l = -l;
            pos += 1;
        }
        out.push(l);
    }
    Ok(out)
}

pub fn free_reduce_letters(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction, the `free_reduce` operation.
pub fn free_reduce(w: &SignedWord) -> SignedWord {
    w.free_reduce()
}

/// Verdict of the bounded equality oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BraidVerdict {
    Equal,
    Unknown,
}

/// Search limits of the equality oracle.
#[derive(Debug, Clone, Copy)]
pub struct BfsLimits {
    pub depth: usize,
    pub node_budget: usize,
}

impl Default for BfsLimits {
    fn default() -> Self {
        BfsLimits { depth: 64, node_budget: 1_000_000 }
    }
}

/// Length-3 relations between adjacent generators `i`, `j`, each listed once per orientation.
fn triple_moves(x: i32, y: i32, z: i32) -> Vec<[i32; 3]> {
    let (i, j) = (x.abs(), y.abs());
    if i != z.abs() || (i - j).abs() != 1 {
        return vec![];
    }
    let (si, sj, sk) = (x.signum(), y.signum(), z.signum());
    let rels: [([i32; 3], [i32; 3]); 6] = [
        ([1, 1, 1], [1, 1, 1]),
        ([1, 1, -1], [-1, 1, 1]),
        ([-1, 1, 1], [1, 1, -1]),
        ([-1, -1, -1], [-1, -1, -1]),
        ([1, -1, -1], [-1, -1, 1]),
        ([-1, -1, 1], [1, -1, -1]),
    ];
    let mut out = Vec::new();
    for (lhs, rhs) in rels {
        if lhs == [si, sj, sk] {
            out.push([rhs[0] * j, rhs[1] * i, rhs[2] * j]);
        }
    }
    out
}

fn neighbours(w: &[i32]) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(1) {
        if (w[p].abs() - w[p + 1].abs()).abs() >= 2 {
            let mut v = w.to_vec();
            v.swap(p, p + 1);
            out.push(v);
        }
        if p + 2 < w.len() {
            for t in triple_moves(w[p], w[p + 1], w[p + 2]) {
                let mut v = w.to_vec();
                v[p..p + 3].copy_from_slice(&t);
                out.push(free_reduce_letters(&v));
            }
        }
    }
    out
}

/// Bounded search for a rewrite path from `w1 · w2⁻¹` to the empty word.
///
/// Moves are the braid relations in all sign variants, far commutations and free reduction,
/// so no move lengthens the word. An answer of `Equal` is always a proof.
pub fn braid_equal_bfs(w1: &SignedWord, w2: &SignedWord, limits: BfsLimits) -> Result<BraidVerdict, WordError> {
    if w1.strands() != w2.strands() {
        return Err(WordError::StrandMismatch(w1.strands(), w2.strands()));
    }
    if w1.permutation() != w2.permutation() || w1.writhe() != w2.writhe() {
        return Ok(BraidVerdict::Unknown);
    }
    let start = free_reduce_letters(&w1.concat(&w2.inverse()).letters);
    if start.is_empty() {
        return Ok(BraidVerdict::Equal);
    }
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    let mut queue: VecDeque<(Vec<i32>, usize)> = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back((start, 0));
    while let Some((w, d)) = queue.pop_front() {
        if d >= limits.depth {
            continue;
        }
        for v in neighbours(&w) {
            if v.is_empty() {
                return Ok(BraidVerdict::Equal);
            }
            if seen.len() >= limits.node_budget {
                return Ok(BraidVerdict::Unknown);
            }
            if seen.insert(v.clone()) {
                queue.push_back((v, d + 1));
            }
        }
    }
    Ok(BraidVerdict::Unknown)
}

/// Which of the two mirror-image handle identities to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HandleSide {
    A,
    B,
}

/// The two sides of the iterated handle-reduction identity on `n + 1` strands.
pub fn handle_identity(n: usize, side: HandleSide) -> Result<(SignedWord, SignedWord), WordError> {
    if n < 2 {
        return Err(WordError::TooFewStrands);
    }
    let n = n as i32;
    let mut lhs = vec![-n];
    lhs.extend((2..n).rev().map(|i| -i));
    lhs.push(1);
    lhs.extend((2..n).map(|i| -i));
    lhs.push(n);
    let descending: Vec<i32> = (1..n).rev().collect();
    let mut core: Vec<i32> = (3..=n).rev().map(|i| -i).collect();
    core.push(2);
    core.extend((3..=n).map(|i| -i));
    let mut rhs = descending.clone();
    rhs.extend(core);
    rhs.extend(descending.iter().rev().map(|l| -l));
    let strands = n as usize + 1;
    let (l, r) = (SignedWord::new(lhs, strands)?, SignedWord::new(rhs, strands)?);
    Ok(match side {
        HandleSide::A => (l, r),
        HandleSide::B => (l.apply_symmetry(WordSymmetry::Mirror)?, r.apply_symmetry(WordSymmetry::Mirror)?),
    })
}

/// One step of handle reduction: for `a_1, …, a_k` in the subgroup on the first `n - 2`
/// generators, returns the handle `s_n s_{n-1} a_1 s_{n-1} … a_k s_{n-1} s_n⁻¹` and its reduced
/// form `s_{n-1}⁻¹ s_n (s_{n-1} a_1 s_{n-1}⁻¹) s_n … (s_{n-1} a_k s_{n-1}⁻¹) s_n s_{n-1}` on
/// `n + 1` strands.
pub fn handle_reduction_template(n: usize, parts: &[Vec<i32>]) -> Result<(SignedWord, SignedWord), WordError> {
    if n < 3 {
        return Err(WordError::TooFewStrands);
    }
    let top = n as i32;
    let mid = top - 1;
    for part in parts {
        for &l in part {
            if l == 0 || l.abs() > top - 2 {
                return Err(WordError::OutOfRange { letter: l, strands: n - 1 });
            }
        }
    }
    let mut handle = vec![top, mid];
    for part in parts {
        handle.extend(part);
        handle.push(mid);
    }
    handle.push(-top);
    let mut reduced = vec![-mid, top];
    for part in parts {
        reduced.push(mid);
        reduced.extend(part);
        reduced.push(-mid);
        reduced.push(top);
    }
    reduced.push(mid);
    Ok((SignedWord::new(handle, n + 1)?, SignedWord::new(reduced, n + 1)?))
}
