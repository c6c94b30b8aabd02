use std::collections::HashMap;

use cubicq::expr::{eval, eval_elem, eval_scalar, Env, ExprError, Value};
use cubicq::freealg::AlgElem;
use cubicq::ring::{named, LaurentPoly};

fn p(s: &str) -> LaurentPoly {
    LaurentPoly::parse(s).unwrap()
}

#[test]
fn scalars_and_symmetric_functions() {
    assert_eq!(eval_scalar("u").unwrap(), p("a + b + c"));
    assert_eq!(eval_scalar("v").unwrap(), p("a*b + a*c + b*c"));
    assert_eq!(eval_scalar("w").unwrap(), p("a*b*c"));
    assert_eq!(eval_scalar("(a+b)^2 - a^2 - b^2").unwrap(), p("2*a*b"));
    assert_eq!(eval_scalar("(a^2+v)*(w*a)^-1").unwrap(), &(&named::a().pow(2) + &named::v()) * &(&named::w() * &named::a()).pow(-1));
    assert_eq!(eval_scalar("(a^2 - b^2)/(a - b)").unwrap(), p("a + b"));
    assert_eq!(eval_scalar("a.b").unwrap(), p("a*b"));
}

#[test]
fn inexact_division_is_an_error() {
    assert!(matches!(eval_scalar("a/(a+b)"), Err(ExprError::Inexact(_))));
}

#[test]
fn elements_multiply_as_words() {
    let x = eval_elem("([1] - a)*([1] - b)", 3).unwrap();
    let mut y = AlgElem::word(&[1, 1], 3);
    y = &y - &AlgElem::word(&[1], 3).scale(&p("a + b"));
    y = &y + &AlgElem::scalar(p("a*b"), 3);
    assert_eq!(x, y);
    // Free reduction inside products.
    assert_eq!(eval_elem("[1 2]*[-2 -1]", 3).unwrap(), AlgElem::scalar(LaurentPoly::one(), 3));
    assert_eq!(eval_elem("[3]", 4).unwrap(), AlgElem::word(&[3], 4));
    assert!(eval_elem("[3]", 3).is_err());
}

#[test]
fn parse_errors_report_positions() {
    match eval_scalar("a + * b") {
        Err(ExprError::Parse { pos, .. }) => assert_eq!(pos, 4),
        other => panic!("{other:?}"),
    }
    assert!(matches!(eval_elem("[1 2", 3), Err(ExprError::Parse { .. })));
    assert!(matches!(eval_scalar("[1]"), Err(ExprError::Type(_))));
    assert!(matches!(eval_scalar("$x"), Err(ExprError::UnknownRef(_))));
}

struct Refs(HashMap<String, Value>);

impl Env for Refs {
    fn lookup(&mut self, name: &str) -> Result<Value, ExprError> {
        self.0.get(name).cloned().ok_or_else(|| ExprError::UnknownRef(name.into()))
    }
    fn apply_f(&mut self, v: Vec<LaurentPoly>) -> Result<Vec<LaurentPoly>, ExprError> {
        Ok(v.into_iter().rev().collect())
    }
    fn vector_dim(&self) -> usize {
        3
    }
    fn strands(&self) -> usize {
        3
    }
}

#[test]
fn references_vectors_and_the_involution() {
    let mut env = Refs(HashMap::from([("x".to_string(), Value::Scalar(p("a - b")))]));
    assert_eq!(eval("$x^2", &mut env).unwrap().into_scalar().unwrap(), p("a^2 - 2*a*b + b^2"));
    let v = eval("a*e1 + e3", &mut env).unwrap().into_vector().unwrap();
    assert_eq!(v, vec![p("a"), LaurentPoly::zero(), LaurentPoly::one()]);
    let fv = eval("f(a*e1 + e3)", &mut env).unwrap().into_vector().unwrap();
    assert_eq!(fv, vec![LaurentPoly::one(), LaurentPoly::zero(), p("a")]);
}
