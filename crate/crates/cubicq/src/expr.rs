//! Expression language for the embedded data files and CLI inputs.
//!
//! Atoms are integers, the variables `a b c` and their elementary symmetric functions
//! `u = a+b+c`, `v = ab+ac+bc`, `w = abc`, bracketed words `[1 -2 1]`, basis vectors `e1`…`e25`,
//! references `$name` and the involution `f(...)`. Operators are `+ - * / ^` with `.` accepted as
//! a product and parentheses for grouping. Division must be exact.

use thiserror::Error;

use crate::freealg::AlgElem;
use crate::ring::{named, LaurentPoly, RingError};
use crate::words::free_reduce_letters;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("type error: {0}")]
    Type(String),
    #[error("division is not exact: {0}")]
    Inexact(String),
    #[error("unknown reference ${0}")]
    UnknownRef(String),
    #[error("cyclic reference through ${0}")]
    Cycle(String),
    #[error("{0}")]
    Env(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Value of an expression.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Scalar(LaurentPoly),
    Elem(AlgElem),
    Vector(Vec<LaurentPoly>),
}

impl Value {
    pub fn into_scalar(self) -> Result<LaurentPoly, ExprError> {
        match self {
            Value::Scalar(s) => Ok(s),
            other => Err(ExprError::Type(format!("expected a scalar, found {}", other.kind()))),
        }
    }

    pub fn into_elem(self, strands: usize) -> Result<AlgElem, ExprError> {
        match self {
            Value::Scalar(s) => Ok(AlgElem::scalar(s, strands)),
            Value::Elem(e) => Ok(e),
            other => Err(ExprError::Type(format!("expected an algebra element, found {}", other.kind()))),
        }
    }

    pub fn into_vector(self) -> Result<Vec<LaurentPoly>, ExprError> {
        match self {
            Value::Vector(v) => Ok(v),
            Value::Scalar(s) if s.is_zero() => Err(ExprError::Type("bare zero has no dimension".into())),
            other => Err(ExprError::Type(format!("expected a vector, found {}", other.kind()))),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Elem(_) => "element",
            Value::Vector(_) => "vector",
        }
    }
}

/// Resolves references and the involution for the evaluator.
pub trait Env {
    fn lookup(&mut self, name: &str) -> Result<Value, ExprError>;
    fn apply_f(&mut self, v: Vec<LaurentPoly>) -> Result<Vec<LaurentPoly>, ExprError>;
    fn vector_dim(&self) -> usize;
    fn strands(&self) -> usize;
}

/// Environment without references, vectors or involution.
pub struct ScalarEnv {
    pub strands: usize,
}

impl Env for ScalarEnv {
    fn lookup(&mut self, name: &str) -> Result<Value, ExprError> {
        Err(ExprError::UnknownRef(name.to_string()))
    }
    fn apply_f(&mut self, _: Vec<LaurentPoly>) -> Result<Vec<LaurentPoly>, ExprError> {
        Err(ExprError::Env("no involution in this context".into()))
    }
    fn vector_dim(&self) -> usize {
        0
    }
    fn strands(&self) -> usize {
        self.strands
    }
}

/// Evaluates `src` in `env`.
pub fn eval(src: &str, env: &mut dyn Env) -> Result<Value, ExprError> {
    let mut p = Parser { chars: src.chars().collect(), pos: 0, env };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(v)
}

/// Evaluates an expression that must be an algebra element on `strands` strands.
pub fn eval_elem(src: &str, strands: usize) -> Result<AlgElem, ExprError> {
    eval(src, &mut ScalarEnv { strands })?.into_elem(strands)
}

/// Evaluates a scalar expression.
pub fn eval_scalar(src: &str) -> Result<LaurentPoly, ExprError> {
    eval(src, &mut ScalarEnv { strands: 3 })?.into_scalar()
}

struct Parser<'e> {
    chars: Vec<char>,
    pos: usize,
    env: &'e mut dyn Env,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ExprError {
        ExprError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.add(acc, rhs, false)?;
                }
                Some('-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.add(acc, rhs, true)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') | Some('.') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.mul(acc, rhs)?;
                }
                Some('/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = self.div(acc, rhs)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value, ExprError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                let v = self.unary()?;
                self.mul(Value::Scalar(LaurentPoly::constant(-1)), v)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let neg = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let k = self.integer()?.ok_or_else(|| self.err("expected an integer exponent"))?;
        let k = if neg { -k } else { k };
        match base {
            Value::Scalar(s) => {
                if k < 0 && !s.is_unit() {
                    return Err(ExprError::Inexact(format!("negative power of non-unit {s}")));
                }
                Ok(Value::Scalar(s.pow(k as i32)))
            }
            Value::Elem(e) if k >= 0 => {
                let mut acc = AlgElem::one(e.strands());
                for _ in 0..k {
                    acc = &acc * &e;
                }
                Ok(Value::Elem(acc))
            }
            other => Err(ExprError::Type(format!("cannot raise a {} to the power {k}", other.kind()))),
        }
    }

    fn integer(&mut self) -> Result<Option<i64>, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map(Some).map_err(|_| self.err("integer too large"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_') {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Value, ExprError> {
        let Some(c) = self.peek() else {
            return Err(self.err("unexpected end of input"));
        };
        if c.is_ascii_digit() {
            let n = self.integer()?.unwrap();
            return Ok(Value::Scalar(LaurentPoly::constant(n)));
        }
        match c {
            '(' => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            '[' => {
                self.pos += 1;
                let mut letters = Vec::new();
                loop {
                    match self.peek() {
                        Some(']') => {
                            self.pos += 1;
                            break;
                        }
                        Some(',') => self.pos += 1,
                        Some('-') => {
                            self.pos += 1;
                            let n = self.integer()?.ok_or_else(|| self.err("expected a letter"))?;
                            letters.push(-(n as i32));
                        }
                        Some(d) if d.is_ascii_digit() => {
                            let n = self.integer()?.unwrap();
                            letters.push(n as i32);
                        }
                        _ => return Err(self.err("malformed word")),
                    }
                }
                let strands = self.env.strands();
                if letters.iter().any(|&l| l == 0 || l.unsigned_abs() as usize >= strands) {
                    return Err(self.err(&format!("letter out of range for {strands} strands")));
                }
                Ok(Value::Elem(AlgElem::word(&free_reduce_letters(&letters), strands)))
            }
            '$' => {
                self.pos += 1;
                let name = self.ident();
                if name.is_empty() {
                    return Err(self.err("expected a reference name"));
                }
                self.env.lookup(&name)
            }
            _ if c.is_alphabetic() => {
                let start = self.pos;
                let name = self.ident();
                match name.as_str() {
                    "a" => Ok(Value::Scalar(named::a())),
                    "b" => Ok(Value::Scalar(named::b())),
                    "c" => Ok(Value::Scalar(named::c())),
                    "u" => Ok(Value::Scalar(named::u())),
                    "v" => Ok(Value::Scalar(named::v())),
                    "w" => Ok(Value::Scalar(named::w())),
                    "f" => {
                        self.expect('(')?;
                        let inner = self.expr()?;
                        self.expect(')')?;
                        let vec = inner.into_vector()?;
                        Ok(Value::Vector(self.env.apply_f(vec)?))
                    }
                    _ if name.starts_with('e') && name[1..].chars().all(|d| d.is_ascii_digit()) && name.len() > 1 => {
                        let i: usize = name[1..].parse().map_err(|_| self.err("bad basis index"))?;
                        let dim = self.env.vector_dim();
                        if i == 0 || i > dim {
                            self.pos = start;
                            return Err(self.err(&format!("basis vector {name} outside 1..{dim}")));
                        }
                        let mut v = vec![LaurentPoly::zero(); dim];
                        v[i - 1] = LaurentPoly::one();
                        Ok(Value::Vector(v))
                    }
                    _ => {
                        self.pos = start;
                        Err(self.err(&format!("unknown identifier '{name}'")))
                    }
                }
            }
            _ => Err(self.err(&format!("unexpected '{c}'"))),
        }
    }

    fn add(&self, x: Value, y: Value, subtract: bool) -> Result<Value, ExprError> {
        let y = if subtract { negate(y) } else { y };
        let strands = self.env.strands();
        Ok(match (x, y) {
            (Value::Scalar(p), Value::Scalar(q)) => Value::Scalar(p + q),
            (Value::Vector(p), Value::Vector(q)) if p.len() == q.len() => {
                Value::Vector(p.iter().zip(&q).map(|(s, t)| s + t).collect())
            }
            (Value::Vector(_), _) | (_, Value::Vector(_)) => {
                return Err(ExprError::Type("vectors only add to vectors of the same length".into()))
            }
            (x, y) => Value::Elem(x.into_elem(strands)? + y.into_elem(strands)?),
        })
    }

    fn mul(&self, x: Value, y: Value) -> Result<Value, ExprError> {
        Ok(match (x, y) {
            (Value::Scalar(p), Value::Scalar(q)) => Value::Scalar(p * q),
            (Value::Scalar(p), Value::Elem(e)) | (Value::Elem(e), Value::Scalar(p)) => Value::Elem(e.scale(&p)),
            (Value::Scalar(p), Value::Vector(v)) | (Value::Vector(v), Value::Scalar(p)) => {
                Value::Vector(v.iter().map(|x| x * &p).collect())
            }
            (Value::Elem(e), Value::Elem(g)) => Value::Elem(&e * &g),
            (x, y) => return Err(ExprError::Type(format!("cannot multiply a {} by a {}", x.kind(), y.kind()))),
        })
    }

    fn div(&self, x: Value, y: Value) -> Result<Value, ExprError> {
        let q = y.into_scalar()?;
        let d = |p: &LaurentPoly| -> Result<LaurentPoly, ExprError> {
            p.divide_exact(&q)?.ok_or_else(|| ExprError::Inexact(format!("({p}) / ({q})")))
        };
        Ok(match x {
            Value::Scalar(p) => Value::Scalar(d(&p)?),
            Value::Vector(v) => Value::Vector(v.iter().map(d).collect::<Result<_, _>>()?),
            Value::Elem(e) => {
                let mut out = AlgElem::zero(e.strands());
                for (w, c) in e.terms() {
                    out.add_term(w.clone(), d(c)?);
                }
                Value::Elem(out)
            }
        })
    }
}

fn negate(v: Value) -> Value {
    match v {
        Value::Scalar(s) => Value::Scalar(-s),
        Value::Elem(e) => Value::Elem(e.neg()),
        Value::Vector(v) => Value::Vector(v.into_iter().map(|x| -x).collect()),
    }
}
