//! Interval arithmetic over dyadic-rational endpoints.
//!
//! `+`, `-`, `*` and integer powers are exact; division and every
//! transcendental enclosure round outward to a caller-supplied number of
//! fractional bits. Rounding only ever widens an interval, so every result
//! contains the exact real range of the operation.

mod dyadic;
mod elementary;
mod pi;

use std::fmt;

pub use dyadic::Dyadic;
pub(crate) use elementary::{sin_cos, sinh_cosh};
pub use elementary::{elem_enclose, ElemFn};
pub use pi::{pi_enclose, pi_interval, PiEnclosure};

use crate::error::{Error, Result};
use crate::exact::{fmt_decimal_rounded, Rational, Rounding};

/// Default outward-rounding precision, in fractional bits.
pub const DEFAULT_PRECISION: u32 = 192;

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic) -> Result<Self> {
        if lo > hi {
            return Err(Error::domain(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub(crate) fn from_sorted(lo: Dyadic, hi: Dyadic) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Dyadic) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn from_int(n: i64) -> Self {
        Interval::point(Dyadic::from_int(n))
    }

    pub fn zero() -> Self {
        Interval::from_int(0)
    }

    pub fn one() -> Self {
        Interval::from_int(1)
    }

    /// Smallest interval at `prec` bits containing `q`; exact for dyadic `q`.
    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        match Dyadic::try_exact(q) {
            Some(d) => Interval::point(d),
            None => Interval {
                lo: Dyadic::floor_rational(q, prec),
                hi: Dyadic::ceil_rational(q, prec),
            },
        }
    }

    /// Outward enclosure of `[lo, hi]`.
    pub fn from_rationals(lo: &Rational, hi: &Rational, prec: u32) -> Result<Self> {
        if lo > hi {
            return Err(Error::domain("interval lower endpoint exceeds upper endpoint"));
        }
        let lo = Dyadic::try_exact(lo).unwrap_or_else(|| Dyadic::floor_rational(lo, prec));
        let hi = Dyadic::try_exact(hi).unwrap_or_else(|| Dyadic::ceil_rational(hi, prec));
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn lo_rational(&self) -> Rational {
        self.lo.to_rational()
    }

    pub fn hi_rational(&self) -> Rational {
        self.hi.to_rational()
    }

    pub fn width(&self) -> Dyadic {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Dyadic {
        Dyadic::midpoint(&self.lo, &self.hi)
    }

    /// Largest absolute value over the interval.
    pub fn mag(&self) -> Dyadic {
        self.lo.abs().max(self.hi.abs())
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        &self.lo_rational() <= q && q <= &self.hi_rational()
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.signum() <= 0 && self.hi.signum() >= 0
    }

    /// `self ⊆ other`.
    pub fn subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.hi.signum() < 0
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// Widens outward onto the `2^-prec` grid.
    pub fn round(&self, prec: u32) -> Interval {
        Interval {
            lo: self.lo.floor_to(prec),
            hi: self.hi.ceil_to(prec),
        }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let (a, b, c, d) = (&self.lo, &self.hi, &other.lo, &other.hi);
        if a.signum() >= 0 && c.signum() >= 0 {
            Interval { lo: a * c, hi: b * d }
        } else if b.signum() <= 0 && d.signum() <= 0 {
            Interval { lo: b * d, hi: a * c }
        } else {
            let ps = [a * c, a * d, b * c, b * d];
            let lo = ps.iter().min().cloned().unwrap();
            let hi = ps.iter().max().cloned().unwrap();
            Interval { lo, hi }
        }
    }

    pub fn mul_dyadic(&self, k: &Dyadic) -> Interval {
        let (x, y) = (&self.lo * k, &self.hi * k);
        if k.signum() >= 0 {
            Interval { lo: x, hi: y }
        } else {
            Interval { lo: y, hi: x }
        }
    }

    /// Multiplies by `2^k` exactly.
    pub fn scale_pow2(&self, k: i64) -> Interval {
        Interval {
            lo: self.lo.shl(k),
            hi: self.hi.shl(k),
        }
    }

    pub fn div(&self, other: &Interval, prec: u32) -> Result<Interval> {
        if other.contains_zero() {
            return Err(Error::DivisionByZero(other.to_string()));
        }
        let (a, b, c, d) = (&self.lo, &self.hi, &other.lo, &other.hi);
        let candidates = [(a, c), (a, d), (b, c), (b, d)];
        let lo = candidates
            .iter()
            .map(|(x, y)| Dyadic::div_floor(x, y, prec))
            .min()
            .unwrap();
        let hi = candidates
            .iter()
            .map(|(x, y)| Dyadic::div_ceil(x, y, prec))
            .max()
            .unwrap();
        Ok(Interval { lo, hi })
    }

    pub fn recip(&self, prec: u32) -> Result<Interval> {
        Interval::one().div(self, prec)
    }

    /// Divides by a positive integer.
    pub fn div_int(&self, k: u64, prec: u32) -> Interval {
        let k = Dyadic::new(k.into(), 0);
        Interval {
            lo: Dyadic::div_floor(&self.lo, &k, prec),
            hi: Dyadic::div_ceil(&self.hi, &k, prec),
        }
    }

    pub fn sqr(&self) -> Interval {
        self.pow_u(2)
    }

    /// Exact non-negative integer power.
    pub fn pow_u(&self, n: u32) -> Interval {
        if n == 0 {
            return Interval::one();
        }
        let pow = |d: &Dyadic| {
            let mut acc = Dyadic::one();
            for _ in 0..n {
                acc = &acc * d;
            }
            acc
        };
        if n % 2 == 1 {
            return Interval { lo: pow(&self.lo), hi: pow(&self.hi) };
        }
        let (l, h) = (pow(&self.lo), pow(&self.hi));
        if self.contains_zero() {
            Interval { lo: Dyadic::zero(), hi: l.max(h) }
        } else if self.lo.signum() > 0 {
            Interval { lo: l, hi: h }
        } else {
            Interval { lo: h, hi: l }
        }
    }

    /// Integer power; negative exponents require `0 ∉ self`.
    pub fn pow_int(&self, n: i64, prec: u32) -> Result<Interval> {
        if n >= 0 {
            Ok(self.pow_u(n as u32))
        } else {
            if self.contains_zero() {
                return Err(Error::DivisionByZero(format!(
                    "{self} raised to negative power {n}"
                )));
            }
            self.pow_u(n.unsigned_abs() as u32).recip(prec)
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.lo.to_f64(), self.hi.to_f64())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            fmt_decimal_rounded(&self.lo_rational(), 17, Rounding::Down),
            fmt_decimal_rounded(&self.hi_rational(), 17, Rounding::Up)
        )
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Interval[{}, {}]", self.lo, self.hi)
    }
}

/// The six interval operations by name, for callers that dispatch on data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    PowInt(i64),
}

pub fn interval_arith(op: ArithOp, a: &Interval, b: Option<&Interval>, prec: u32) -> Result<Interval> {
    let rhs = || b.ok_or_else(|| Error::domain(format!("{op:?} needs a second operand")));
    match op {
        ArithOp::Add => Ok(a.add(rhs()?)),
        ArithOp::Sub => Ok(a.sub(rhs()?)),
        ArithOp::Mul => Ok(a.mul(rhs()?)),
        ArithOp::Div => a.div(rhs()?, prec),
        ArithOp::Neg => Ok(a.neg()),
        ArithOp::PowInt(n) => a.pow_int(n, prec),
    }
}
