use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{fmt_rational, Rational};
use crate::interval::{pi_interval, ElemFn, Interval};

#[derive(Debug, Clone)]
pub enum ExprKind {
    Lit(Rational),
    Pi,
    X,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Apply(ElemFn, Box<Expr>),
}

/// An expression node with the byte offset it was parsed from.
/// Equality is structural and ignores offsets.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub offset: usize,
}

impl PartialEq for ExprKind {
    fn eq(&self, other: &Self) -> bool {
        use ExprKind::*;
        match (self, other) {
            (Lit(a), Lit(b)) => a == b,
            (Pi, Pi) | (X, X) => true,
            (Neg(a), Neg(b)) => a == b,
            (Add(a, b), Add(c, d))
            | (Sub(a, b), Sub(c, d))
            | (Mul(a, b), Mul(c, d))
            | (Div(a, b), Div(c, d)) => a == c && b == d,
            (Pow(a, n), Pow(b, m)) => n == m && a == b,
            (Apply(f, a), Apply(g, b)) => f == g && a == b,
            _ => false,
        }
    }
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Expr {
    pub fn new(kind: ExprKind, offset: usize) -> Self {
        Expr { kind, offset }
    }

    pub fn lit(q: Rational) -> Self {
        Expr::new(ExprKind::Lit(q), 0)
    }

    pub fn x() -> Self {
        Expr::new(ExprKind::X, 0)
    }

    pub fn sub(a: Expr, b: Expr) -> Self {
        let off = a.offset;
        Expr::new(ExprKind::Sub(Box::new(a), Box::new(b)), off)
    }

    pub fn mentions_x(&self) -> bool {
        use ExprKind::*;
        match &self.kind {
            X => true,
            Lit(_) | Pi => false,
            Neg(a) | Pow(a, _) | Apply(_, a) => a.mentions_x(),
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => a.mentions_x() || b.mentions_x(),
        }
    }

    pub fn mentions_function(&self) -> bool {
        use ExprKind::*;
        match &self.kind {
            Apply(..) => true,
            X | Lit(_) | Pi => false,
            Neg(a) | Pow(a, _) => a.mentions_function(),
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => a.mentions_function() || b.mentions_function(),
        }
    }

    fn precedence(&self) -> u8 {
        use ExprKind::*;
        match &self.kind {
            Add(..) | Sub(..) => 1,
            Mul(..) | Div(..) => 2,
            Neg(_) => 3,
            Pow(..) => 4,
            Lit(_) | Pi | X | Apply(..) => 5,
        }
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, child: &Expr, min: u8) -> fmt::Result {
    if child.precedence() < min {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExprKind::*;
        match &self.kind {
            Lit(q) => {
                if q.denom().is_one() && !q.is_negative() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "({})", fmt_rational(q))
                }
            }
            Pi => f.write_str("pi"),
            X => f.write_str("x"),
            Neg(a) => {
                f.write_str("-")?;
                write_child(f, a, 3)
            }
            Add(a, b) => {
                write_child(f, a, 1)?;
                f.write_str(" + ")?;
                write_child(f, b, 2)
            }
            Sub(a, b) => {
                write_child(f, a, 1)?;
                f.write_str(" - ")?;
                write_child(f, b, 2)
            }
            Mul(a, b) => {
                write_child(f, a, 2)?;
                f.write_str("*")?;
                write_child(f, b, 3)
            }
            Div(a, b) => {
                write_child(f, a, 2)?;
                f.write_str("/")?;
                write_child(f, b, 3)
            }
            Pow(a, n) => {
                write_child(f, a, 5)?;
                write!(f, "^{n}")
            }
            Apply(func, a) => write!(f, "{func}({a})"),
        }
    }
}

pub(crate) fn at(offset: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        e @ Error::Eval { .. } => e,
        e => Error::Eval { offset, source: Box::new(e) },
    }
}

/// Certified enclosure of `{e(ξ) : ξ ∈ x}` by structural recursion; every
/// intermediate is rounded outward to `prec` fractional bits.
pub fn eval_expr(e: &Expr, x: &Interval, prec: u32) -> Result<Interval> {
    use ExprKind::*;
    let wrap = at(e.offset);
    Ok(match &e.kind {
        Lit(q) => Interval::from_rational(q, prec),
        Pi => pi_interval(prec),
        X => x.clone(),
        Neg(a) => eval_expr(a, x, prec)?.neg(),
        Add(a, b) => eval_expr(a, x, prec)?.add(&eval_expr(b, x, prec)?),
        Sub(a, b) => eval_expr(a, x, prec)?.sub(&eval_expr(b, x, prec)?),
        Mul(a, b) => eval_expr(a, x, prec)?.mul(&eval_expr(b, x, prec)?).round(prec),
        Div(a, b) => {
            let num = eval_expr(a, x, prec)?;
            let den = eval_expr(b, x, prec)?;
            num.div(&den, prec).map_err(&wrap)?
        }
        Pow(a, n) => eval_expr(a, x, prec)?.pow_int(*n, prec).map_err(&wrap)?.round(prec),
        Apply(func, a) => func.eval(&eval_expr(a, x, prec)?, prec).map_err(&wrap)?,
    })
}

/// Evaluates a closed expression (no `x`) such as a domain endpoint.
pub fn eval_const(e: &Expr, prec: u32) -> Result<Interval> {
    if e.mentions_x() {
        return Err(Error::domain(format!("expression {e} is not constant")));
    }
    eval_expr(e, &Interval::zero(), prec)
}

/// Folds `literal / literal` into a single literal.
pub(crate) fn fold_div(a: Expr, b: Expr, offset: usize) -> Expr {
    if let (ExprKind::Lit(p), ExprKind::Lit(q)) = (&a.kind, &b.kind) {
        if !q.is_zero() {
            return Expr::new(ExprKind::Lit(p / q), a.offset);
        }
    }
    Expr::new(ExprKind::Div(Box::new(a), Box::new(b)), offset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, parse_rational};
    use crate::lang::{bundled, parse_expression};

    fn at(q: Rational) -> Interval {
        Interval::from_rational(&q, 128)
    }

    #[test]
    fn precedence_fixture_value() {
        let e = parse_expression("1+2*3^2").unwrap();
        assert_eq!(eval_const(&e, 64).unwrap(), Interval::from_int(19));
    }

    #[test]
    fn x_over_sin_at_one() {
        let e = parse_expression("x/sin(x)").unwrap();
        let v = eval_expr(&e, &at(int(1)), 128).unwrap();
        let lo = parse_rational("1.188395105778121216261").unwrap();
        let hi = parse_rational("1.188395105778121216262").unwrap();
        assert!(v.lo_rational() >= lo && v.hi_rational() <= hi);
        assert!(v.width().to_rational() < parse_rational("1e-30").unwrap());
    }

    #[test]
    fn identity_and_errors() {
        let x = Interval::from_rationals(&int(1), &int(2), 64).unwrap();
        assert_eq!(eval_expr(&Expr::x(), &x, 64).unwrap(), x);
        let e = parse_expression("1/(x - x)").unwrap();
        match eval_expr(&e, &at(int(1)), 64) {
            Err(Error::Eval { offset, source }) => {
                assert_eq!(offset, 1);
                assert!(matches!(*source, Error::DivisionByZero(_)));
            }
            other => panic!("{other:?}"),
        }
        let e = parse_expression("2 + tan(x)").unwrap();
        let near_pole = Interval::from_rationals(&crate::exact::rat(3, 2), &int(2), 64).unwrap();
        assert!(matches!(eval_expr(&e, &near_pole, 64), Err(Error::Eval { offset: 4, .. })));
    }

    #[test]
    fn printing_round_trips_corpus() {
        for s in bundled().inequalities {
            for e in [&s.lhs, &s.rhs, &s.difference()] {
                let printed = e.to_string();
                assert_eq!(&parse_expression(&printed).unwrap(), e, "{printed}");
            }
        }
        for text in ["-x^2", "(-x)^2", "1-(2-x)", "x/(2*x)", "-(1/3)*x", "x^-2", "(2/3)^2", "--x"] {
            let e = parse_expression(text).unwrap();
            assert_eq!(parse_expression(&e.to_string()).unwrap(), e, "{text} -> {e}");
        }
    }
}
