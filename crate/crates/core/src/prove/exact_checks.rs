//! Exact sequence monotonicity/positivity and closed-form identity checks.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{big, binomial, int, ipow, Rational};
use crate::series::{t32_b, theorem_coeff, Role, Theorem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    T31,
    T32B,
    T32G,
    T33C,
    T34C,
    T35,
}

impl SequenceId {
    pub const ALL: [SequenceId; 6] = [
        SequenceId::T31,
        SequenceId::T32B,
        SequenceId::T32G,
        SequenceId::T33C,
        SequenceId::T34C,
        SequenceId::T35,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::T31 => "S_T31",
            SequenceId::T32B => "S_T32_B",
            SequenceId::T32G => "S_T32_G",
            SequenceId::T33C => "S_T33_C",
            SequenceId::T34C => "S_T34_C",
            SequenceId::T35 => "S_T35",
        }
    }

    pub fn start(self) -> u32 {
        match self {
            SequenceId::T34C => 3,
            _ => 2,
        }
    }

    pub fn value(self, n: u32) -> Result<Rational> {
        match self {
            SequenceId::T31 => theorem_coeff(Theorem::T31, Role::F, n),
            SequenceId::T32B => theorem_coeff(Theorem::T32, Role::B, n),
            SequenceId::T32G => theorem_coeff(Theorem::T32, Role::G, n),
            SequenceId::T33C => theorem_coeff(Theorem::T33, Role::C, n),
            SequenceId::T34C => theorem_coeff(Theorem::T34, Role::C, n),
            SequenceId::T35 => theorem_coeff(Theorem::T35, Role::F, n),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SequenceId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownId(format!("sequence {s}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceMode {
    /// `s_n > 0`.
    Positive,
    /// `s_{n+1} − s_n > 0`.
    Increasing,
}

impl SequenceMode {
    pub fn name(self) -> &'static str {
        match self {
            SequenceMode::Positive => "positive",
            SequenceMode::Increasing => "increasing",
        }
    }
}

impl FromStr for SequenceMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" => Ok(SequenceMode::Positive),
            "increasing" => Ok(SequenceMode::Increasing),
            _ => Err(Error::UnknownId(format!("sequence mode {s}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SequenceReport {
    pub seq_id: SequenceId,
    pub mode: SequenceMode,
    /// Inclusive index range of the sequence terms examined.
    pub n_range: (u32, u32),
    /// The checked quantity (`s_n` or `s_{n+1} − s_n`) at the first index.
    pub first_value: Rational,
    /// First index whose checked quantity is not positive, with that quantity.
    pub first_violation: Option<(u32, Rational)>,
    pub all_pass: bool,
}

/// Exact check of `seq` over `n_min..=n_max`; `n_min` defaults to the
/// sequence's start index.
pub fn sequence_check(seq: SequenceId, mode: SequenceMode, n_min: Option<u32>, n_max: u32) -> Result<SequenceReport> {
    let n_min = n_min.unwrap_or(seq.start());
    if n_min < seq.start() {
        return Err(Error::domain(format!("{seq} starts at n = {}", seq.start())));
    }
    if n_max < n_min + 1 {
        return Err(Error::domain(format!("n_max must be at least {}", n_min + 1)));
    }
    let last = match mode {
        SequenceMode::Positive => n_max,
        SequenceMode::Increasing => n_max - 1,
    };
    let mut prev = seq.value(n_min)?;
    let mut first_value = None;
    let mut first_violation = None;
    for n in n_min..=last {
        let q = match mode {
            SequenceMode::Positive => {
                if n > n_min {
                    prev = seq.value(n)?;
                }
                prev.clone()
            }
            SequenceMode::Increasing => {
                let next = seq.value(n + 1)?;
                let d = &next - &prev;
                prev = next;
                d
            }
        };
        if first_value.is_none() {
            first_value = Some(q.clone());
        }
        if first_violation.is_none() && !q.is_positive() {
            first_violation = Some((n, q));
        }
    }
    Ok(SequenceReport {
        seq_id: seq,
        mode,
        n_range: (n_min, n_max),
        first_value: first_value.expect("range is non-empty"),
        all_pass: first_violation.is_none(),
        first_violation,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    T32BDiff,
    T33CDiff,
    T34FDecomp,
    T34Polys,
}

impl IdentityId {
    pub const ALL: [IdentityId; 4] =
        [IdentityId::T32BDiff, IdentityId::T33CDiff, IdentityId::T34FDecomp, IdentityId::T34Polys];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::T32BDiff => "ID_T32_BDIFF",
            IdentityId::T33CDiff => "ID_T33_CDIFF",
            IdentityId::T34FDecomp => "ID_T34_FDECOMP",
            IdentityId::T34Polys => "ID_T34_POLYS",
        }
    }

    pub fn start(self) -> u32 {
        match self {
            IdentityId::T32BDiff | IdentityId::T33CDiff => 2,
            IdentityId::T34FDecomp | IdentityId::T34Polys => 6,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownId(format!("identity {s}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityFailure {
    pub label: String,
    pub n: u32,
    pub lhs: Rational,
    pub rhs: Rational,
}

/// Per-`n` outcome of a claimed sign (`> 0`, or `>= 0` when not strict).
#[derive(Debug, Clone, PartialEq)]
pub struct SignRecord {
    pub label: String,
    pub strict: bool,
    pub satisfied: Vec<bool>,
    /// Indices where the claim fails, with the offending value.
    pub failures: Vec<(u32, Rational)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub n_range: (u32, u32),
    pub holds: bool,
    pub first_failure: Option<IdentityFailure>,
    pub signs: Vec<SignRecord>,
}

fn n_(n: u32) -> BigInt {
    BigInt::from(n)
}

/// Evaluates `Σ c_k m^k` for integer coefficients listed from degree 0.
fn poly(coeffs: &[i64], m: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, &c| acc * m + c)
}

struct Equation {
    label: &'static str,
    lhs: Rational,
    rhs: Rational,
}

struct Sign {
    label: &'static str,
    value: Rational,
    strict: bool,
}

fn gt0(label: &'static str, value: Rational) -> Sign {
    Sign { label, value, strict: true }
}

fn t33_terms(n: u32) -> Result<(Vec<Equation>, Vec<Sign>)> {
    let c = |k| theorem_coeff(Theorem::T33, Role::C, k);
    let m = n as i64;
    let num = big(ipow(4, n)) * int(6 * m * m - 17 * m + 1) + int(18 * m * m + 23 * m - 1);
    let den = int(2 * m * (2 * m + 3) * (4 * m * m - 1) * (m * m - 1));
    Ok((
        vec![Equation { label: "c(n+1) - c(n)", lhs: c(n + 1)? - c(n)?, rhs: &num / den }],
        vec![gt0("numerator", num)],
    ))
}

fn t32_terms(n: u32) -> (Vec<Equation>, Vec<Sign>) {
    let m = n as i64;
    let rhs = big(ipow(4, n) * (6 * m - 1)) - int(4 * m) + int(1);
    let lhs = big(t32_b(n + 1) - t32_b(n));
    (
        vec![Equation { label: "b(n+1) - b(n)", lhs, rhs: rhs.clone() }],
        vec![gt0("b(n+1) - b(n)", rhs)],
    )
}

fn f_parts(n: u32) -> [BigInt; 4] {
    let m = n_(n);
    let f1 = ipow(16, n) * poly(&[240, -648, -24, 144], &m);
    let f2 = ipow(9, n) * poly(&[3456, -640, -3072, 1024], &m);
    let f3 = ipow(4, n)
        * (ipow(9, n) * poly(&[54, -13, -57, 10], &m) + poly(&[17490, -33327, 5541, 8622, -2016], &m));
    let f4 = poly(&[-15744, -3456, 7680, 18432], &m);
    [f1, f2, f3, f4]
}

fn t34_decomp_terms(n: u32) -> Result<(Vec<Equation>, Vec<Sign>)> {
    let c = |k| theorem_coeff(Theorem::T34, Role::C, k);
    let m = n as i64;
    let parts = f_parts(n);
    let sum: BigInt = parts.iter().sum();
    let den = BigInt::from(3 * m)
        * (ipow(4, n) + 16)
        * (ipow(4, n) + 64)
        * BigInt::from((m - 2) * (2 * m - 3) * (4 * m * m - 1) * (m * m - 1));
    let labels = ["f1", "f2", "f3", "f4"];
    Ok((
        vec![Equation { label: "c(n+1) - c(n)", lhs: c(n + 1)? - c(n)?, rhs: Rational::new(sum, den) }],
        labels.iter().zip(parts).map(|(l, v)| gt0(l, big(v))).collect(),
    ))
}

fn t34_poly_terms(n: u32) -> Result<(Vec<Equation>, Vec<Sign>)> {
    let m = n_(n);
    let k = &m - 6;
    let eq = |label, lhs: BigInt, rhs: BigInt| Equation { label, lhs: big(lhs), rhs: big(rhs) };
    let f1 = poly(&[240, -648, -24, 144], &m);
    let f1r = 144 * &m * &k * &k + 1704 * &m * &k + 4392 * &k + 26592;
    let f2 = poly(&[3456, -640, -3072, 1024], &m);
    let f2r = 1024 * &m * &k * &k + 9216 * &m * &k + 128 * (139 * &m + 27);
    let f4 = poly(&[-15744, -3456, 7680, 18432], &m);
    let f4r = 18432 * &m * &k * &k + 228864 * &m * &k + 384 * (1839 * &m - 41);
    let f3 = poly(&[54, -13, -57, 10], &m);
    let f3r = 10 * &m * &k * &k + 63 * &m * &k + 5 * &k + 84;
    let binom = |j| binomial(n as u64, j).map(|b| b * ipow(8, j as u32));
    let truncated: BigInt = (0..=4).map(binom).sum::<Result<BigInt>>()?;
    let rest = poly(&[17490, -33327, 5541, 8622, -2016], &m);
    let bound = 84 * truncated + &rest;
    let expanded = poly(&[17574, -107023, 144421, -70226, 12320], &m);
    let shifted = poly(&[5372496, 4686101, 1541473, 225454, 12320], &k);
    let eqs = vec![
        eq("f1 cubic", f1.clone(), f1r),
        eq("f2 cubic", f2.clone(), f2r),
        eq("f4 cubic", f4.clone(), f4r),
        eq("f3 cubic", f3.clone(), f3r),
        eq("f3 binomial bound", bound, expanded.clone()),
        eq("f3 bound shifted", expanded.clone(), shifted),
    ];
    let signs = vec![
        gt0("f1 cubic", big(f1)),
        gt0("f2 cubic", big(f2)),
        gt0("f4 cubic", big(f4)),
        // equality at n = 6
        Sign { label: "f3 cubic - 84", value: big(f3 - 84), strict: false },
        gt0("f3 bound quartic", big(expanded)),
    ];
    Ok((eqs, signs))
}

/// Exact check of a closed-form identity for every `n` in its range up to
/// `n_max`, recording the sign of each quantity the proof claims positive.
pub fn identity_check(id: IdentityId, n_max: u32) -> Result<IdentityReport> {
    let n_min = id.start();
    if n_max < n_min {
        return Err(Error::domain(format!("{id} starts at n = {n_min}")));
    }
    let mut first_failure = None;
    let mut signs: Vec<SignRecord> = Vec::new();
    for n in n_min..=n_max {
        let (eqs, sgns) = match id {
            IdentityId::T32BDiff => t32_terms(n),
            IdentityId::T33CDiff => t33_terms(n)?,
            IdentityId::T34FDecomp => t34_decomp_terms(n)?,
            IdentityId::T34Polys => t34_poly_terms(n)?,
        };
        if first_failure.is_none() {
            if let Some(e) = eqs.into_iter().find(|e| e.lhs != e.rhs) {
                first_failure = Some(IdentityFailure { label: e.label.into(), n, lhs: e.lhs, rhs: e.rhs });
            }
        }
        if signs.is_empty() {
            signs = sgns
                .iter()
                .map(|s| SignRecord {
                    label: s.label.into(),
                    strict: s.strict,
                    satisfied: Vec::new(),
                    failures: Vec::new(),
                })
                .collect();
        }
        for (rec, s) in signs.iter_mut().zip(sgns) {
            let ok = s.value.is_positive() || (!s.strict && s.value.is_zero());
            rec.satisfied.push(ok);
            if !ok {
                rec.failures.push((n, s.value));
            }
        }
    }
    Ok(IdentityReport {
        identity_id: id,
        n_range: (n_min, n_max),
        holds: first_failure.is_none(),
        first_failure,
        signs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn b_sequence_increasing() {
        let r = sequence_check(SequenceId::T32B, SequenceMode::Increasing, None, 100).unwrap();
        assert!(r.all_pass);
        assert_eq!(r.first_value, int(169));
    }

    #[test]
    fn c_sequence_violation_at_two() {
        let r = sequence_check(SequenceId::T33C, SequenceMode::Increasing, None, 100).unwrap();
        assert!(!r.all_pass);
        assert_eq!(r.first_violation, Some((2, rat(-3, 140))));
        let tail = sequence_check(SequenceId::T33C, SequenceMode::Increasing, Some(3), 60).unwrap();
        assert!(tail.all_pass);
    }

    #[test]
    fn positive_mode_and_errors() {
        assert!(sequence_check(SequenceId::T31, SequenceMode::Positive, None, 40).unwrap().all_pass);
        assert!(sequence_check(SequenceId::T34C, SequenceMode::Increasing, Some(2), 10).is_err());
        assert!(sequence_check(SequenceId::T31, SequenceMode::Positive, None, 2).is_err());
        assert!("S_NOPE".parse::<SequenceId>().is_err());
    }

    #[test]
    fn identities_small_range() {
        let r = identity_check(IdentityId::T32BDiff, 30).unwrap();
        assert!(r.holds);
        let r = identity_check(IdentityId::T33CDiff, 30).unwrap();
        assert!(r.holds);
        assert_eq!(r.signs[0].failures, vec![(2, int(-27))]);
        for id in [IdentityId::T34FDecomp, IdentityId::T34Polys] {
            let r = identity_check(id, 30).unwrap();
            assert!(r.holds, "{id}: {:?}", r.first_failure);
            assert!(r.signs.iter().all(|s| s.failures.is_empty()));
        }
    }

    #[test]
    fn polynomial_helper() {
        assert_eq!(poly(&[1, 2, 3], &BigInt::from(2)), BigInt::from(17));
    }
}
