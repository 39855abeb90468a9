//! Exact rational arithmetic, binomials, Bernoulli numbers and the even-zeta
//! identity.
//!
//! Bernoulli numbers follow the convention fixed by the generating function
//! `x / (e^x - 1) = Σ B_n x^n / n!`, so **`B_1 = -1/2`**. Tables that use
//! `x e^x / (e^x - 1)` have `B_1 = +1/2`; the two agree everywhere else.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction, always gcd-reduced with a positive
/// denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `base^exp` for a small integer base.
pub fn ipow(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

pub fn rpow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Renders `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Direction for decimal rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
    Nearest,
}

/// Scientific notation with `digits` significant digits, rounded to nearest.
pub fn fmt_decimal(q: &Rational, digits: usize) -> String {
    fmt_decimal_rounded(q, digits, Rounding::Nearest)
}

/// Scientific notation with `digits` significant digits, rounded exactly in
/// the requested direction (`Down` is toward −∞).
pub fn fmt_decimal_rounded(q: &Rational, digits: usize, rounding: Rounding) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1) as i64;
    let a = q.abs();
    let ten = int(10);
    let pow10 = |k: i64| if k >= 0 { rpow(&ten, k as u32) } else { int(1) / rpow(&ten, (-k) as u32) };
    let bits = a.numer().bits() as i64 - a.denom().bits() as i64;
    let mut e = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    while a >= pow10(e + 1) {
        e += 1;
    }
    while a < pow10(e) {
        e -= 1;
    }
    let scaled = &a / pow10(e - digits + 1);
    let up = match rounding {
        Rounding::Nearest => None,
        Rounding::Up => Some(q.is_positive()),
        Rounding::Down => Some(q.is_negative()),
    };
    let mut m = match up {
        Some(true) => scaled.ceil().to_integer(),
        Some(false) => scaled.floor().to_integer(),
        None => scaled.round().to_integer(),
    };
    if m == num_traits::pow(BigInt::from(10), digits as usize) {
        m /= 10;
        e += 1;
    }
    let ds = m.to_string();
    let (head, tail) = ds.split_at(1);
    let sign = if q.is_negative() { "-" } else { "" };
    if tail.is_empty() {
        format!("{sign}{head}e{e}")
    } else {
        format!("{sign}{head}.{tail}e{e}")
    }
}

/// Parses an exact rational from `p`, `p/q`, or a decimal literal with an
/// optional exponent (`0.15`, `1e-3`, `2.5E+2`). No binary rounding occurs.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::domain(format!("not a rational literal: {text:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p = parse_rational(p)?;
        let q = parse_rational(q)?;
        if q.is_zero() {
            return Err(Error::domain(format!("zero denominator in {text:?}")));
        }
        return Ok(p / q);
    }
    let (sign, body) = match t.as_bytes()[0] {
        b'-' => (-1, &t[1..]),
        b'+' => (1, &t[1..]),
        _ => (1, t),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = body[i + 1..].parse().map_err(|_| bad())?;
            (&body[..i], e)
        }
        None => (body, 0),
    };
    let (whole, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let scale = exponent - frac.len() as i64;
    if scale.unsigned_abs() > 100_000 {
        return Err(bad());
    }
    let ten = ipow(10, scale.unsigned_abs() as u32);
    let value = if scale >= 0 {
        big(digits * ten)
    } else {
        Rational::new(digits, ten)
    };
    Ok(if sign < 0 { -value } else { value })
}

/// `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::domain(format!("binomial({n}, {k}) requires k <= n")));
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Ok(acc)
}

/// Memoized `B_{2n}`; `evens[n] = B_{2n}`.
struct BernoulliTable {
    evens: RwLock<Vec<Rational>>,
}

fn table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(|| BernoulliTable {
        evens: RwLock::new(vec![Rational::one()]),
    })
}

impl BernoulliTable {
    fn even(&self, n: usize) -> Rational {
        if let Some(b) = self.evens.read().expect("bernoulli table poisoned").get(n) {
            return b.clone();
        }
        let mut evens = self.evens.write().expect("bernoulli table poisoned");
        while evens.len() <= n {
            let m = evens.len();
            let value = next_even_bernoulli(&evens, m);
            evens.push(value);
        }
        evens[n].clone()
    }
}

/// Solves `Σ_{j=0}^{2m} C(2m+1, j) B_j = 0` for `B_{2m}`, given `B_0..B_{2m-2}`.
fn next_even_bernoulli(evens: &[Rational], m: usize) -> Rational {
    let top = 2 * m as u64 + 1;
    // C(top, j) built incrementally along the row.
    let mut c = BigInt::one();
    let mut sum = Rational::zero();
    for j in 0..(2 * m as u64) {
        if j == 1 {
            sum -= big(c.clone()) / int(2);
        } else if j % 2 == 0 {
            sum += big(c.clone()) * &evens[(j / 2) as usize];
        }
        c = c * (top - j) / (j + 1);
    }
    -sum / big(top)
}

/// The Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    match n {
        1 => rat(-1, 2),
        n if n % 2 == 1 => Rational::zero(),
        n => table().even(n / 2),
    }
}

/// `|B_{2n}|`.
pub fn bernoulli_even_abs(n: usize) -> Rational {
    bernoulli(2 * n).abs()
}

/// Exact `r` with `ζ(2q) = r·π^{2q}`, i.e. `(-1)^{q-1} 2^{2q-1} B_{2q} / (2q)!`.
pub fn zeta_even_ratio(q: u32) -> Result<Rational> {
    if q == 0 {
        return Err(Error::domain("zeta_even_ratio requires q >= 1"));
    }
    let b = bernoulli(2 * q as usize);
    let sign = if q.is_odd() { int(1) } else { int(-1) };
    Ok(sign * big(ipow(2, 2 * q - 1)) * b / big(factorial(2 * q)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_decimal_rendering() {
        assert_eq!(fmt_decimal(&rat(1, 3), 4), "3.333e-1");
        assert_eq!(fmt_decimal_rounded(&rat(1, 3), 4, Rounding::Up), "3.334e-1");
        assert_eq!(fmt_decimal_rounded(&rat(-1, 3), 4, Rounding::Down), "-3.334e-1");
        assert_eq!(fmt_decimal_rounded(&rat(9999, 10000), 3, Rounding::Up), "1.00e0");
        assert_eq!(fmt_decimal(&int(-42), 1), "-4e1");
        assert_eq!(fmt_decimal(&int(0), 5), "0");
        assert_eq!(fmt_decimal(&rat(1, 1000), 3), "1.00e-3");
    }

    #[test]
    fn bernoulli_small_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn zeta_ratios() {
        assert_eq!(zeta_even_ratio(1).unwrap(), rat(1, 6));
        assert_eq!(zeta_even_ratio(2).unwrap(), rat(1, 90));
        assert_eq!(zeta_even_ratio(3).unwrap(), rat(1, 945));
        assert!(zeta_even_ratio(0).is_err());
    }

    #[test]
    fn binomial_cases() {
        assert_eq!(binomial(5, 2).unwrap(), BigInt::from(10));
        assert_eq!(binomial(17, 0).unwrap(), BigInt::from(1));
        assert_eq!(binomial(10, 5).unwrap(), BigInt::from(252));
        assert!(binomial(3, 4).is_err());
    }

    #[test]
    fn decimal_literals_are_exact() {
        assert_eq!(parse_rational("0.15").unwrap(), rat(3, 20));
        assert_eq!(parse_rational("0.1").unwrap(), rat(1, 10));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("-2.5E+2").unwrap(), int(-250));
        assert_eq!(parse_rational("17/720").unwrap(), rat(17, 720));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn concurrent_readers_agree() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || bernoulli(40 + 2 * (i % 3))))
            .collect();
        let values: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, v) in values.iter().enumerate() {
            assert_eq!(*v, bernoulli(40 + 2 * (i % 3)));
        }
    }
}
