//! Exact Maclaurin-type coefficient generators and certified truncation tails.
//!
//! Every series here has terms `coeff(n) · x^(2n + shift)` for `n >= start`,
//! plus an optional fixed principal part (the `1/x³ + 1/(2x)` of `1/sin³x`,
//! the constant `1` of `x/sin x`, ...). Coefficients are signed exact
//! rationals, so evaluating a truncation is a plain dot product.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{bernoulli_even_abs, big, factorial, int, ipow, rat, rpow, Rational};
use crate::interval::{Dyadic, Interval};

/// Lower bound for π used by tail majorants (a continued-fraction convergent).
pub fn pi_lower() -> Rational {
    rat(103_993, 33_102)
}

/// Trigonometric tails require `x <= (1 - 1/64)·π`.
pub fn trig_margin() -> Rational {
    rat(63, 64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaKind {
    XOverSin,
    Cot,
    Csc2,
    CosOverSin2,
    Csc3,
    CosOverSin3,
    Sinh,
    Cosh,
}

impl LemmaKind {
    pub const ALL: [LemmaKind; 8] = [
        LemmaKind::XOverSin,
        LemmaKind::Cot,
        LemmaKind::Csc2,
        LemmaKind::CosOverSin2,
        LemmaKind::Csc3,
        LemmaKind::CosOverSin3,
        LemmaKind::Sinh,
        LemmaKind::Cosh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaKind::XOverSin => "X_OVER_SIN",
            LemmaKind::Cot => "COT",
            LemmaKind::Csc2 => "CSC2",
            LemmaKind::CosOverSin2 => "COS_OVER_SIN2",
            LemmaKind::Csc3 => "CSC3",
            LemmaKind::CosOverSin3 => "COS_OVER_SIN3",
            LemmaKind::Sinh => "SINH",
            LemmaKind::Cosh => "COSH",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    T31,
    T32,
    T33,
    T34,
    T35,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [Theorem::T31, Theorem::T32, Theorem::T33, Theorem::T34, Theorem::T35];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::T31 => "T3.1",
            Theorem::T32 => "T3.2",
            Theorem::T33 => "T3.3",
            Theorem::T34 => "T3.4",
            Theorem::T35 => "T3.5",
        }
    }

    /// First index of the theorem's coefficient sequences.
    pub fn start(self) -> u32 {
        match self {
            Theorem::T34 => 3,
            _ => 2,
        }
    }

    pub fn is_hyperbolic(self) -> bool {
        matches!(self, Theorem::T33 | Theorem::T34)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().trim_start_matches("theorem:");
        let key = key.strip_prefix('T').unwrap_or(key);
        Theorem::ALL
            .into_iter()
            .find(|t| &t.name()[1..] == key || t.name()[1..].replace('.', "") == key)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    F,
    G,
    A,
    B,
    C,
}

impl FromStr for Role {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f" => Ok(Role::F),
            "g" => Ok(Role::G),
            "a" => Ok(Role::A),
            "b" => Ok(Role::B),
            "c" => Ok(Role::C),
            _ => Err(Error::UnknownId(format!("role {s}"))),
        }
    }
}

/// `|B_{2n}| / (2n)!`.
fn bern_weight(n: u32) -> Rational {
    bernoulli_even_abs(n as usize) / big(factorial(2 * n))
}

/// Coefficient of the `n`-th term of a lemma expansion (signed).
pub fn lemma_coeff(kind: LemmaKind, n: u32) -> Result<Rational> {
    let start = CoeffSeq::lemma(kind).start;
    if n < start {
        return Err(Error::domain(format!(
            "{} coefficients start at n = {start}, got {n}",
            kind.name()
        )));
    }
    let n64 = n as i64;
    let four_n = big(ipow(4, n));
    Ok(match kind {
        LemmaKind::XOverSin => int(2) * (big(ipow(2, 2 * n - 1)) - int(1)) * bern_weight(n),
        LemmaKind::Cot => -(four_n * bern_weight(n)),
        LemmaKind::Csc2 => four_n * int(2 * n64 - 1) * bern_weight(n),
        LemmaKind::CosOverSin2 => {
            -(int(2 * (2 * n64 - 1)) * (big(ipow(2, 2 * n - 1)) - int(1)) * bern_weight(n))
        }
        LemmaKind::Csc3 => {
            let hi = (big(ipow(2, 2 * n + 1)) - int(1)) * bernoulli_even_abs(n as usize + 1) / int(n64 + 1);
            let lo = (big(ipow(2, 2 * n - 1)) - int(1)) * bernoulli_even_abs(n as usize) / int(n64);
            (hi + lo) / big(factorial(2 * n - 1)) / int(2)
        }
        LemmaKind::CosOverSin3 => -(int((2 * n64 - 1) * (n64 - 1)) * four_n * bern_weight(n)),
        LemmaKind::Sinh => Rational::new(BigInt::one(), factorial(2 * n + 1)),
        LemmaKind::Cosh => Rational::new(BigInt::one(), factorial(2 * n)),
    })
}

/// The integer `b_n = 4^n(2n-3) + 3 + 3n - 2n²` from the second theorem.
pub fn t32_b(n: u32) -> BigInt {
    let n = n as i64;
    ipow(4, n as u32) * (2 * n - 3) + 3 + 3 * n - 2 * n * n
}

fn t33_a(n: u32) -> Rational {
    let n64 = n as i64;
    Rational::new(ipow(2, 2 * n + 1) - 6 * n64 - 2, factorial(2 * n))
}

fn t33_b(n: u32) -> Rational {
    let n = n as i64;
    Rational::new(BigInt::from(4 * n * (n - 1) * (4 * n * n - 1)), factorial(2 * n as u32))
}

fn t34_a(n: u32) -> Rational {
    let n64 = n as i64;
    let bracket = big(ipow(3, 2 * n - 1)) / int(2) - int(n64 - 1) * big(ipow(4, n)) - int(8 * n64) + rat(9, 2);
    let num = int(n64) * bracket + big(ipow(2, 2 * n + 1)) - int(4);
    num / big(factorial(2 * n))
}

fn t34_b(n: u32) -> Rational {
    let n64 = n as i64;
    let weight = int(1) + rpow(&int(2), 2 * n) / int(64);
    let falling: i64 = (2 * n64 - 4) * (2 * n64 - 3) * (2 * n64 - 2) * (2 * n64 - 1) * (2 * n64);
    weight * int(falling) / big(factorial(2 * n))
}

/// Coefficient sequences appearing in the proofs of the five theorems.
pub fn theorem_coeff(thm: Theorem, role: Role, n: u32) -> Result<Rational> {
    if n < thm.start() {
        return Err(Error::domain(format!(
            "{} sequences start at n = {}, got {n}",
            thm.name(),
            thm.start()
        )));
    }
    let n64 = n as i64;
    let bad = || Error::domain(format!("no role {role:?} for {}", thm.name()));
    Ok(match (thm, role) {
        (Theorem::T31, Role::F) => {
            let num = int(n64 - 2) * big(ipow(2, 2 * n + 1)) + int(4 * (n64 + 1));
            num * bern_weight(n)
        }
        (Theorem::T32, Role::B) => big(t32_b(n)),
        (Theorem::T32, Role::G) => big(t32_b(n)) * bern_weight(n),
        (Theorem::T33, Role::A) => t33_a(n),
        (Theorem::T33, Role::B) => t33_b(n),
        (Theorem::T33, Role::C) => t33_a(n) / t33_b(n),
        (Theorem::T34, Role::A) => t34_a(n),
        (Theorem::T34, Role::B) => t34_b(n),
        (Theorem::T34, Role::C) => t34_a(n) / t34_b(n),
        (Theorem::T35, Role::F) => {
            let num = int(6 * n64 - 8) * big(ipow(4, n)) + int(8);
            num * bern_weight(n)
        }
        _ => return Err(bad()),
    })
}

/// Identifies a coefficient series that carries powers of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SeriesId {
    Lemma(LemmaKind),
    Theorem(Theorem, Role),
}

impl SeriesId {
    pub fn name(&self) -> String {
        match self {
            SeriesId::Lemma(k) => k.name().to_string(),
            SeriesId::Theorem(t, r) => format!("{}:{}", t.name(), format!("{r:?}").to_lowercase()),
        }
    }
}

impl fmt::Display for SeriesId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for SeriesId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(k) = LemmaKind::ALL.into_iter().find(|k| k.name().eq_ignore_ascii_case(s)) {
            return Ok(SeriesId::Lemma(k));
        }
        let (t, r) = s
            .split_once(':')
            .ok_or_else(|| Error::UnknownId(format!("series {s}")))?;
        let id = SeriesId::Theorem(t.parse()?, r.parse()?);
        CoeffSeq::of(id)?;
        Ok(id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Radius {
    Pi,
    Infinite,
}

/// Factorial weight in a majorant: `1`, `1/(2n)!` or `1/(2n+1)!`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Decay {
    Geometric,
    Factorial(u32),
}

/// `|coeff(n)| x^(2n+shift) <= poly(n) · (scale·x)^(2n) · x^shift · decay(n)`,
/// with `poly` having non-negative coefficients.
#[derive(Debug, Clone)]
struct Majorant {
    poly: Vec<Rational>,
    scale: Rational,
    decay: Decay,
}

impl Majorant {
    fn trig(poly: Vec<Rational>) -> Self {
        Majorant { poly, scale: int(1) / pi_lower(), decay: Decay::Geometric }
    }

    fn hyp(poly: Vec<Rational>, scale: i64, offset: u32) -> Self {
        Majorant { poly, scale: int(scale), decay: Decay::Factorial(offset) }
    }

    fn poly_at(&self, n: u32) -> Rational {
        self.poly
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * int(n as i64) + c)
    }

    fn term(&self, n: u32, x: &Rational, shift: i64) -> Rational {
        let sx = &self.scale * x;
        let mut t = self.poly_at(n) * rpow(&sx, 2 * n);
        t *= if shift >= 0 {
            rpow(x, shift as u32)
        } else {
            int(1) / rpow(x, shift.unsigned_abs() as u32)
        };
        if let Decay::Factorial(off) = self.decay {
            t /= big(factorial(2 * n + off));
        }
        t
    }

    /// Upper bound of `term(n+1)/term(n)` valid for every `n >= m >= 1`.
    fn ratio_bound(&self, m: u32, x: &Rational) -> Rational {
        let deg = self.poly.len().saturating_sub(1) as u32;
        let growth = rpow(&rat(m as i64 + 1, m as i64), deg);
        let sx = &self.scale * x;
        let mut q = growth * &sx * &sx;
        if let Decay::Factorial(off) = self.decay {
            let m = m as i64;
            q /= int((2 * m + 1 + off as i64) * (2 * m + 2 + off as i64));
        }
        q
    }

    fn limit_ratio(&self, x: &Rational) -> Rational {
        match self.decay {
            Decay::Geometric => {
                let sx = &self.scale * x;
                &sx * &sx
            }
            Decay::Factorial(_) => Rational::zero(),
        }
    }
}

/// A named exact coefficient sequence with its exponent map and radius.
#[derive(Debug, Clone)]
pub struct CoeffSeq {
    pub id: SeriesId,
    pub start: u32,
    /// `exponent_of(n) = 2n + shift`.
    pub shift: i64,
    /// Non-series terms `(exponent, coefficient)`.
    pub principal_part: Vec<(i64, Rational)>,
    pub radius: Radius,
}

impl CoeffSeq {
    pub fn lemma(kind: LemmaKind) -> CoeffSeq {
        let (start, shift, principal, radius) = match kind {
            LemmaKind::XOverSin => (1, 0, vec![(0, int(1))], Radius::Pi),
            LemmaKind::Cot => (1, -1, vec![(-1, int(1))], Radius::Pi),
            LemmaKind::Csc2 => (1, -2, vec![(-2, int(1))], Radius::Pi),
            LemmaKind::CosOverSin2 => (1, -2, vec![(-2, int(1))], Radius::Pi),
            LemmaKind::Csc3 => (1, -1, vec![(-3, int(1)), (-1, rat(1, 2))], Radius::Pi),
            LemmaKind::CosOverSin3 => (2, -3, vec![(-3, int(1))], Radius::Pi),
            LemmaKind::Sinh => (0, 1, vec![], Radius::Infinite),
            LemmaKind::Cosh => (0, 0, vec![], Radius::Infinite),
        };
        CoeffSeq { id: SeriesId::Lemma(kind), start, shift, principal_part: principal, radius }
    }

    pub fn of(id: SeriesId) -> Result<CoeffSeq> {
        match id {
            SeriesId::Lemma(k) => Ok(CoeffSeq::lemma(k)),
            SeriesId::Theorem(t, r) => {
                let (shift, radius) = match (t, r) {
                    (Theorem::T31, Role::F) | (Theorem::T32, Role::G) | (Theorem::T35, Role::F) => {
                        (-4, Radius::Pi)
                    }
                    (Theorem::T33 | Theorem::T34, Role::A | Role::B) => (0, Radius::Infinite),
                    _ => {
                        return Err(Error::domain(format!(
                            "{}:{r:?} is a plain sequence, not a power series",
                            t.name()
                        )))
                    }
                };
                Ok(CoeffSeq { id, start: t.start(), shift, principal_part: vec![], radius })
            }
        }
    }

    pub fn coeff(&self, n: u32) -> Result<Rational> {
        match self.id {
            SeriesId::Lemma(k) => lemma_coeff(k, n),
            SeriesId::Theorem(t, r) => theorem_coeff(t, r, n),
        }
    }

    pub fn exponent_of(&self, n: u32) -> i64 {
        2 * n as i64 + self.shift
    }

    pub fn singular_part(&self) -> String {
        if self.principal_part.is_empty() {
            return "0".to_string();
        }
        self.principal_part
            .iter()
            .map(|(e, c)| match e {
                0 => crate::exact::fmt_rational(c),
                _ => format!("{}*x^{e}", crate::exact::fmt_rational(c)),
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn majorant(&self) -> Majorant {
        let pi2 = int(1) / (pi_lower() * pi_lower());
        let r = |v: &[i64]| v.iter().map(|&c| int(c)).collect::<Vec<_>>();
        match self.id {
            SeriesId::Lemma(k) => match k {
                LemmaKind::XOverSin | LemmaKind::Cot => Majorant::trig(r(&[4])),
                LemmaKind::Csc2 | LemmaKind::CosOverSin2 => Majorant::trig(r(&[0, 8])),
                LemmaKind::Csc3 => Majorant::trig(vec![int(2), int(4) * &pi2, int(8) * &pi2]),
                LemmaKind::CosOverSin3 => Majorant::trig(r(&[0, 0, 8])),
                LemmaKind::Sinh => Majorant::hyp(r(&[1]), 1, 1),
                LemmaKind::Cosh => Majorant::hyp(r(&[1]), 1, 0),
            },
            SeriesId::Theorem(t, role) => match (t, role) {
                (Theorem::T31, _) => Majorant::trig(r(&[16, 24])),
                (Theorem::T32, _) => Majorant::trig(r(&[24, 20, 8])),
                (Theorem::T35, _) => Majorant::trig(r(&[32, 24])),
                (Theorem::T33, Role::A) => Majorant::hyp(r(&[4, 6]), 2, 0),
                (Theorem::T33, _) => Majorant::hyp(r(&[0, 0, 0, 0, 16]), 1, 0),
                (Theorem::T34, Role::A) => Majorant::hyp(vec![int(6), rat(14, 3), int(9)], 3, 0),
                (Theorem::T34, _) => Majorant::hyp(vec![int(0), int(0), int(0), int(0), int(0), rat(65, 2)], 3, 0),
            },
        }
    }

    /// Largest admissible `x_upper` for tails, if bounded.
    pub fn admissible_upper(&self) -> Option<Rational> {
        match self.radius {
            Radius::Pi => Some(trig_margin() * pi_lower()),
            Radius::Infinite => None,
        }
    }
}

/// Certified upper bound on `Σ_{n>N} |coeff(n)| x_upper^exponent_of(n)`.
///
/// Terms `N+1..=M` of the majorant are summed explicitly; beyond `M` the
/// majorant's consecutive-term ratio is bounded by `q < 1` and the rest is
/// dominated by a geometric series.
pub fn tail_bound(seq: &CoeffSeq, n_trunc: u32, x_upper: &Rational) -> Result<Rational> {
    if !x_upper.is_positive() {
        return Err(Error::domain("tail_bound requires x_upper > 0"));
    }
    if let Some(limit) = seq.admissible_upper() {
        if x_upper > &limit {
            return Err(Error::domain(format!(
                "x_upper = {} exceeds (63/64)·π for {}",
                crate::exact::fmt_rational(x_upper),
                seq.id
            )));
        }
    }
    let maj = seq.majorant();
    let first = n_trunc.max(seq.start.saturating_sub(1)) + 1;
    let target = (int(1) + maj.limit_ratio(x_upper)) / int(2);
    let mut sum = Rational::zero();
    let mut n = first;
    loop {
        let q = maj.ratio_bound(n.max(1), x_upper);
        if q <= target {
            let t = maj.term(n, x_upper, seq.shift);
            return Ok(sum + t / (int(1) - q));
        }
        sum += maj.term(n, x_upper, seq.shift);
        n += 1;
    }
}

/// Dyadic upper bound of `x` at 64 fractional bits, keeping tail arithmetic cheap.
fn coarse_upper(x: &Dyadic) -> Rational {
    x.ceil_to(64).to_rational()
}

/// Certified enclosure of the full series on `x` from the first `n_trunc`
/// terms plus `±tail_bound`; the principal part is added when requested.
pub fn eval_series(
    seq: &CoeffSeq,
    x: &Interval,
    n_trunc: u32,
    include_principal: bool,
    prec: u32,
) -> Result<Interval> {
    if n_trunc < seq.start {
        return Err(Error::domain(format!("truncation index must be >= {}", seq.start)));
    }
    if x.lo().signum() <= 0 {
        return Err(Error::domain("eval_series requires x > 0"));
    }
    let upper = coarse_upper(x.hi());
    let tail = tail_bound(seq, n_trunc, &upper)?;
    let mut acc = Interval::zero();
    for n in seq.start..=n_trunc {
        let c = Interval::from_rational(&seq.coeff(n)?, prec);
        let p = x.pow_int(seq.exponent_of(n), prec)?;
        acc = acc.add(&c.mul(&p)).round(prec);
    }
    let t = Interval::from_rational(&tail, prec);
    acc = acc.add(&Interval::new(-t.hi(), t.hi().clone())?);
    if include_principal {
        for (e, c) in &seq.principal_part {
            let term = Interval::from_rational(c, prec).mul(&x.pow_int(*e, prec)?);
            acc = acc.add(&term).round(prec);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_examples() {
        assert_eq!(lemma_coeff(LemmaKind::XOverSin, 1).unwrap(), rat(1, 6));
        assert_eq!(lemma_coeff(LemmaKind::XOverSin, 2).unwrap(), rat(7, 360));
        assert_eq!(lemma_coeff(LemmaKind::Cot, 1).unwrap(), rat(-1, 3));
        assert_eq!(lemma_coeff(LemmaKind::Csc2, 1).unwrap(), rat(1, 3));
        assert_eq!(lemma_coeff(LemmaKind::Csc3, 1).unwrap(), rat(17, 120));
        assert_eq!(lemma_coeff(LemmaKind::CosOverSin3, 2).unwrap(), rat(-1, 15));
        assert_eq!(lemma_coeff(LemmaKind::Sinh, 0).unwrap(), int(1));
        assert!(lemma_coeff(LemmaKind::CosOverSin3, 1).is_err());
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(theorem_coeff(Theorem::T31, Role::F, 2).unwrap(), rat(1, 60));
        assert_eq!(theorem_coeff(Theorem::T32, Role::B, 2).unwrap(), int(17));
        assert_eq!(theorem_coeff(Theorem::T33, Role::C, 2).unwrap(), rat(3, 20));
        assert_eq!(theorem_coeff(Theorem::T33, Role::C, 3).unwrap(), rat(9, 70));
        assert_eq!(theorem_coeff(Theorem::T34, Role::C, 3).unwrap(), rat(23, 720));
        assert_eq!(theorem_coeff(Theorem::T34, Role::C, 4).unwrap(), rat(17, 336));
        assert_eq!(theorem_coeff(Theorem::T34, Role::C, 5).unwrap(), rat(5099, 85680));
        assert_eq!(theorem_coeff(Theorem::T35, Role::F, 2).unwrap(), rat(1, 10));
        assert!(theorem_coeff(Theorem::T34, Role::C, 2).is_err());
        assert!(theorem_coeff(Theorem::T31, Role::C, 3).is_err());
    }

    #[test]
    fn tail_rejects_bad_upper() {
        let s = CoeffSeq::lemma(LemmaKind::XOverSin);
        assert!(tail_bound(&s, 5, &int(0)).is_err());
        assert!(tail_bound(&s, 5, &int(4)).is_err());
        assert!(tail_bound(&CoeffSeq::lemma(LemmaKind::Sinh), 5, &int(30)).is_ok());
    }

    #[test]
    fn series_ids_parse() {
        assert_eq!("CSC3".parse::<SeriesId>().unwrap(), SeriesId::Lemma(LemmaKind::Csc3));
        assert_eq!(
            "T3.4:a".parse::<SeriesId>().unwrap(),
            SeriesId::Theorem(Theorem::T34, Role::A)
        );
        assert!("T3.2:b".parse::<SeriesId>().is_err());
        assert_eq!("3.1".parse::<Theorem>().unwrap(), Theorem::T31);
    }
}
