//! Per-theorem data: sharp constants, ratio functions and difference series.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::lang::{parse_expression, Expr, ExprKind};
use crate::series::Theorem;

/// Which of a theorem's two bounds a claim refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lower" => Ok(Side::Lower),
            "upper" => Ok(Side::Upper),
            _ => Err(Error::UnknownId(format!("bound side {s}"))),
        }
    }
}

/// Closed form of the constant weighting `x³·sin x` or `x³·tanh x`.
pub fn sharp_constant_text(thm: Theorem, side: Side) -> Option<&'static str> {
    use Theorem::*;
    Some(match (thm, side) {
        (T31, Side::Lower) => "1/60",
        (T32, Side::Lower) => "17/720",
        (T33, Side::Lower) => "3/20",
        (T34, Side::Lower) => "23/720",
        (T35, Side::Lower) => "1/10",
        (T31, Side::Upper) => "(8*pi-24)/pi^3",
        (T32, Side::Upper) => "(pi^2+8*pi-32)/(2*pi^3)",
        (T35, Side::Upper) => "(12*pi-32)/pi^3",
        _ => return None,
    })
}

pub fn sharp_constant(thm: Theorem, side: Side) -> Option<Expr> {
    sharp_constant_text(thm, side).map(|t| parse_expression(t).expect("registered constant parses"))
}

/// The constant as an exact rational when it has no `pi`.
pub fn sharp_constant_exact(thm: Theorem, side: Side) -> Option<Rational> {
    match sharp_constant(thm, side)?.kind {
        ExprKind::Lit(q) => Some(q),
        _ => None,
    }
}

/// The ratio `F(x)` whose infimum / supremum is the sharp constant.
pub fn ratio_text(thm: Theorem) -> &'static str {
    use Theorem::*;
    match thm {
        T31 => "(2*x/sin(x) + x*cos(x)/sin(x) - 3)/(x^3*sin(x))",
        T32 => "(x/sin(x) + ((x/2)*cos(x/2)/sin(x/2))^2 - 2)/(x^3*sin(x))",
        T33 => "(2*sinh(x)/x + tanh(x)/x - 3)/(x^3*tanh(x))",
        T34 => "(sinh(x)/x + (tanh(x/2)/(x/2))^2 - 2)/(x^3*tanh(x))",
        T35 => "(3*x/sin(x) + cos(x) - 4)/(x^3*sin(x))",
    }
}

pub fn ratio_expression(thm: Theorem) -> Expr {
    parse_expression(ratio_text(thm)).expect("registered ratio parses")
}
