use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::Rational;

/// A dyadic rational `mantissa · 2^exp`, kept normalized (odd mantissa or zero).
///
/// Interval endpoints live here: dyadics are closed under `+`, `-`, `*` without
/// any gcd work, and every other operation rounds outward to a fixed number of
/// fractional bits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    m: BigInt,
    e: i64,
}

impl Dyadic {
    pub fn new(m: BigInt, e: i64) -> Self {
        if m.is_zero() {
            return Dyadic::zero();
        }
        let tz = m.trailing_zeros().unwrap_or(0);
        if tz == 0 {
            Dyadic { m, e }
        } else {
            Dyadic { m: m >> tz, e: e + tz as i64 }
        }
    }

    pub fn zero() -> Self {
        Dyadic { m: BigInt::zero(), e: 0 }
    }

    pub fn one() -> Self {
        Dyadic { m: BigInt::one(), e: 0 }
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic { m: BigInt::one(), e: k }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.m
    }

    pub fn exponent(&self) -> i64 {
        self.e
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.m.is_zero() {
            0
        } else if self.m.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic { m: self.m.abs(), e: self.e }
    }

    /// Multiplies by `2^k` exactly.
    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic { m: self.m.clone(), e: self.e + k }
    }

    /// Largest multiple of `2^-prec` that is `<= self`.
    pub fn floor_to(&self, prec: u32) -> Self {
        let target = -(prec as i64);
        if self.e >= target {
            return self.clone();
        }
        // BigInt's right shift rounds toward negative infinity.
        Dyadic::new(&self.m >> ((target - self.e) as usize), target)
    }

    /// Smallest multiple of `2^-prec` that is `>= self`.
    pub fn ceil_to(&self, prec: u32) -> Self {
        -(-self).floor_to(prec)
    }

    pub fn floor_rational(q: &Rational, prec: u32) -> Self {
        let scaled = q.numer() << prec as usize;
        Dyadic::new(scaled.div_floor(q.denom()), -(prec as i64))
    }

    pub fn ceil_rational(q: &Rational, prec: u32) -> Self {
        -Dyadic::floor_rational(&-q, prec)
    }

    /// Exact conversion when `q` has a power-of-two denominator.
    pub fn try_exact(q: &Rational) -> Option<Self> {
        let d = q.denom();
        let tz = d.trailing_zeros()?;
        if (d >> tz as usize).is_one() {
            Some(Dyadic::new(q.numer().clone(), -(tz as i64)))
        } else {
            None
        }
    }

    /// `floor(a / b)` at `prec` fractional bits; `b` must be nonzero.
    pub fn div_floor(a: &Dyadic, b: &Dyadic, prec: u32) -> Self {
        assert!(!b.is_zero(), "dyadic division by zero");
        // a/b = (a.m / b.m) 2^(a.e - b.e); scale by 2^prec.
        let shift = a.e - b.e + prec as i64;
        let (num, den) = if shift >= 0 {
            (&a.m << shift as usize, b.m.clone())
        } else {
            (a.m.clone(), &b.m << (-shift) as usize)
        };
        Dyadic::new(num.div_floor(&den), -(prec as i64))
    }

    pub fn div_ceil(a: &Dyadic, b: &Dyadic, prec: u32) -> Self {
        -Dyadic::div_floor(&-a, b, prec)
    }

    pub fn to_rational(&self) -> Rational {
        if self.e >= 0 {
            Rational::from_integer(&self.m << self.e as usize)
        } else {
            Rational::new(self.m.clone(), BigInt::one() << (-self.e) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.m.bits() as i64;
        let keep = 60;
        let (m, e) = if bits > keep {
            (&self.m >> (bits - keep) as usize, self.e + bits - keep)
        } else {
            (self.m.clone(), self.e)
        };
        let m: f64 = num_traits::ToPrimitive::to_f64(&m).unwrap_or(f64::NAN);
        m * 2f64.powi(e.clamp(-2000, 2000) as i32)
    }

    /// Exact midpoint.
    pub fn midpoint(a: &Dyadic, b: &Dyadic) -> Self {
        (a + b).shl(-1)
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

fn align(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
    match a.e.cmp(&b.e) {
        Ordering::Equal => (a.m.clone(), b.m.clone(), a.e),
        Ordering::Less => (a.m.clone(), &b.m << (b.e - a.e) as usize, a.e),
        Ordering::Greater => (&a.m << (a.e - b.e) as usize, b.m.clone(), b.e),
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (s, o) = (self.signum(), other.signum());
        if s != o {
            return s.cmp(&o);
        }
        if s == 0 {
            return Ordering::Equal;
        }
        let (a, b, _) = align(self, other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, e) = align(self, rhs);
        Dyadic::new(a + b, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        // product of odd mantissas is odd: already normalized
        Dyadic { m: &self.m * &rhs.m, e: self.e + rhs.e }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { m: -&self.m, e: self.e }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { m: -self.m, e: self.e }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.m, self.e)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::exact::fmt_rational(&self.to_rational()))
    }
}
