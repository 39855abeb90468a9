use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use super::{pi_interval, Dyadic, Interval};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Trigonometric arguments are accepted on `[-TRIG_LIMIT, TRIG_LIMIT]`.
pub const TRIG_LIMIT: i64 = 4;
/// Hyperbolic arguments are accepted on `[-HYP_LIMIT, HYP_LIMIT]`.
pub const HYP_LIMIT: i64 = 32;

const GUARD_BITS: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElemFn {
    Sin,
    Cos,
    Tan,
    Sinh,
    Cosh,
    Tanh,
}

impl ElemFn {
    pub const ALL: [ElemFn; 6] = [
        ElemFn::Sin,
        ElemFn::Cos,
        ElemFn::Tan,
        ElemFn::Sinh,
        ElemFn::Cosh,
        ElemFn::Tanh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ElemFn::Sin => "sin",
            ElemFn::Cos => "cos",
            ElemFn::Tan => "tan",
            ElemFn::Sinh => "sinh",
            ElemFn::Cosh => "cosh",
            ElemFn::Tanh => "tanh",
        }
    }

    pub fn is_hyperbolic(self) -> bool {
        matches!(self, ElemFn::Sinh | ElemFn::Cosh | ElemFn::Tanh)
    }

    /// Enclosure of `{f(ξ) : ξ ∈ x}` at `prec` fractional bits.
    pub fn eval(self, x: &Interval, prec: u32) -> Result<Interval> {
        match self {
            ElemFn::Sin => Ok(sin_cos(x, prec)?.0),
            ElemFn::Cos => Ok(sin_cos(x, prec)?.1),
            ElemFn::Tan => {
                let (s, c) = sin_cos(x, prec)?;
                if c.contains_zero() {
                    return Err(Error::PossiblePole(format!("cos encloses 0 on {x}")));
                }
                Ok(s.div(&c, prec)?)
            }
            ElemFn::Sinh => Ok(sinh_cosh(x, prec)?.0),
            ElemFn::Cosh => Ok(sinh_cosh(x, prec)?.1),
            ElemFn::Tanh => {
                let (s, c) = sinh_cosh(x, prec)?;
                s.div(&c, prec)
            }
        }
    }
}

impl fmt::Display for ElemFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ElemFn {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ElemFn::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownId(format!("unknown function {s}")))
    }
}

/// Precision (fractional bits) sufficient for a requested output width.
pub(crate) fn bits_for_width(width: &Rational) -> u32 {
    let w = width.abs();
    let n = w.numer().bits() as i64;
    let d = w.denom().bits() as i64;
    (d - n + 8).clamp(64, 1 << 16) as u32
}

/// Enclosure of `f` over `x` whose width is at most `width_target` plus the
/// amplification of `x`'s own width.
pub fn elem_enclose(f: ElemFn, x: &Interval, width_target: &Rational) -> Result<Interval> {
    if !width_target.is_positive() {
        return Err(Error::domain("width target must be positive"));
    }
    f.eval(x, bits_for_width(width_target))
}

fn check_range(x: &Interval, limit: i64, what: &str) -> Result<()> {
    let lim = Dyadic::from_int(limit);
    if x.lo() < &-&lim || x.hi() > &lim {
        return Err(Error::domain(format!(
            "{what} argument {x} outside [-{limit}, {limit}]"
        )));
    }
    Ok(())
}

/// Halvings needed to bring `|x|` down to at most 1/4.
fn halvings(x: &Dyadic) -> i64 {
    let quarter = Dyadic::pow2(-2);
    let mut s = 0;
    while x.abs().shl(-s) > quarter {
        s += 1;
    }
    s
}

fn sin_cos_point(x: &Dyadic, prec: u32) -> (Interval, Interval) {
    let wp = prec + GUARD_BITS;
    let s = halvings(x);
    let t = x.shl(-s);
    let t2 = Interval::point(&t * &t);
    let eps = Dyadic::pow2(8 - wp as i64);

    // Alternating Taylor series with |t| <= 1/4: the first omitted term
    // bounds the remainder.
    let series = |first: Interval, offset: u64| {
        let mut term = first;
        let mut sum = term.clone();
        let mut k = 0u64;
        loop {
            let d = (2 * k + 1 + offset) * (2 * k + 2 + offset);
            term = term.mul(&t2).div_int(d, wp).neg();
            if term.mag() < eps {
                let r = term.mag();
                return sum.add(&Interval::from_sorted(-&r, r));
            }
            sum = sum.add(&term);
            k += 1;
        }
    };
    let mut sin = series(Interval::point(t.clone()), 1);
    let mut cos = series(Interval::one(), 0);
    for _ in 0..s {
        let two_sc = sin.mul(&cos).scale_pow2(1).round(wp);
        cos = Interval::one().sub(&sin.sqr().scale_pow2(1)).round(wp);
        sin = two_sc;
    }
    let unit = Interval::from_sorted(Dyadic::from_int(-1), Dyadic::one());
    let clamp = |v: Interval| v.intersect(&unit).unwrap_or(v).round(prec);
    (clamp(sin), clamp(cos))
}

/// Simultaneous enclosures of `sin` and `cos` over `x ⊆ [-4, 4]`.
pub(crate) fn sin_cos(x: &Interval, prec: u32) -> Result<(Interval, Interval)> {
    check_range(x, TRIG_LIMIT, "trigonometric")?;
    if x.is_point() {
        return Ok(sin_cos_point(x.lo(), prec));
    }
    let (sa, ca) = sin_cos_point(x.lo(), prec);
    let (sb, cb) = sin_cos_point(x.hi(), prec);
    let mut sin = sa.hull(&sb);
    let mut cos = ca.hull(&cb);

    let pi = pi_interval(prec + GUARD_BITS);
    let half_pi = pi.scale_pow2(-1);
    let meets = |c: &Interval| x.hi() >= c.lo() && x.lo() <= c.hi();
    let one = Dyadic::one();
    if meets(&half_pi) {
        sin = Interval::from_sorted(sin.lo().clone(), one.clone());
    }
    if meets(&half_pi.neg()) {
        sin = Interval::from_sorted(-&one, sin.hi().clone());
    }
    if x.contains_zero() {
        cos = Interval::from_sorted(cos.lo().clone(), one.clone());
    }
    if meets(&pi) || meets(&pi.neg()) {
        cos = Interval::from_sorted(-&one, cos.hi().clone());
    }
    Ok((sin, cos))
}

fn exp_point(x: &Dyadic, wp: u32) -> Interval {
    let s = halvings(x);
    let t = Interval::point(x.shl(-s));
    let eps = Dyadic::pow2(8 - wp as i64);
    let mut term = Interval::one();
    let mut sum = Interval::one();
    let mut k = 1u64;
    loop {
        term = term.mul(&t).div_int(k, wp);
        if term.mag() < eps {
            // |t| <= 1/4: the tail is dominated by a geometric series of ratio 1/2.
            let r = term.mag().shl(1);
            sum = sum.add(&Interval::from_sorted(-&r, r));
            break;
        }
        sum = sum.add(&term);
        k += 1;
    }
    for _ in 0..s {
        sum = sum.sqr().round(wp);
    }
    sum
}

fn sinh_cosh_point(x: &Dyadic, prec: u32) -> (Interval, Interval) {
    // e^32 < 2^47, so the squaring phase loses at most ~60 bits
    let wp = prec + GUARD_BITS + 64;
    let e = exp_point(x, wp);
    let inv = e.recip(wp).expect("exp is positive");
    let sinh = e.sub(&inv).scale_pow2(-1).round(prec);
    let cosh = e.add(&inv).scale_pow2(-1).round(prec);
    let one = Interval::one();
    let cosh = if cosh.lo() < one.lo() {
        Interval::from_sorted(Dyadic::one(), cosh.hi().clone().max(Dyadic::one()))
    } else {
        cosh
    };
    (sinh, cosh)
}

/// Simultaneous enclosures of `sinh` and `cosh` over `x ⊆ [-32, 32]`.
pub(crate) fn sinh_cosh(x: &Interval, prec: u32) -> Result<(Interval, Interval)> {
    check_range(x, HYP_LIMIT, "hyperbolic")?;
    if x.is_point() {
        return Ok(sinh_cosh_point(x.lo(), prec));
    }
    let (sa, ca) = sinh_cosh_point(x.lo(), prec);
    let (sb, cb) = sinh_cosh_point(x.hi(), prec);
    let sinh = Interval::from_sorted(sa.lo().clone(), sb.hi().clone());
    let cosh = if x.contains_zero() {
        Interval::from_sorted(Dyadic::one(), ca.hi().clone().max(cb.hi().clone()))
    } else if x.lo().signum() > 0 {
        Interval::from_sorted(ca.lo().clone(), cb.hi().clone())
    } else {
        Interval::from_sorted(cb.lo().clone(), ca.hi().clone())
    };
    Ok((sinh, cosh))
}
