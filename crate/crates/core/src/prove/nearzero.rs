//! Sign certificates on `(0, ε]` from exact difference series.
//!
//! The difference series is `d_n = σ·(f_n − κ_g·g_n − [n = start]·κ_c)`
//! with terms `d_n x^{e(n)}`. With leading index `L`, on `(0, ε]`
//!
//! ```text
//! d(x) / x^{e(L)} ∈ d_L ± ( Σ_{L<n≤N} |d_n| ε^{e(n)−e(L)} + tail(ε) / ε^{e(L)} ).
//! ```

use num_traits::{Signed, Zero};

use super::bisect::{Leaf, ProofResult, ProofStats, Status, Witness};
use super::registry::{sharp_constant, Side};
use crate::error::{Error, Result};
use crate::exact::{fmt_rational, int, rat, Rational};
use crate::interval::Interval;
use crate::lang::eval_const;
use crate::series::{tail_bound, CoeffSeq, Role, SeriesId, Theorem};

const PREC: u32 = 256;
const EXTRA_TERMS: u32 = 12;
const LEADING_SEARCH: u32 = 8;

/// A weight that is either exact or only enclosed (π-dependent).
#[derive(Debug, Clone, PartialEq)]
pub enum Weight {
    Exact(Rational),
    Enclosed(Interval),
}

impl Weight {
    fn interval(&self) -> Interval {
        match self {
            Weight::Exact(q) => Interval::from_rational(q, PREC),
            Weight::Enclosed(i) => i.clone(),
        }
    }

    fn magnitude_upper(&self) -> Rational {
        match self {
            Weight::Exact(q) => q.abs(),
            Weight::Enclosed(i) => i.mag().to_rational(),
        }
    }
}

/// Exact coefficient where possible, else an enclosure.
#[derive(Debug, Clone, PartialEq)]
pub enum Coefficient {
    Exact(Rational),
    Enclosed(Interval),
}

impl Coefficient {
    fn interval(&self) -> Interval {
        match self {
            Coefficient::Exact(q) => Interval::from_rational(q, PREC),
            Coefficient::Enclosed(i) => i.clone(),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Coefficient::Exact(q) if q.is_zero())
    }

    fn abs_upper(&self) -> Rational {
        match self {
            Coefficient::Exact(q) => q.abs(),
            Coefficient::Enclosed(i) => i.mag().to_rational(),
        }
    }
}

impl std::fmt::Display for Coefficient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coefficient::Exact(q) => f.write_str(&fmt_rational(q)),
            Coefficient::Enclosed(i) => write!(f, "{i}"),
        }
    }
}

/// `σ·(f − κ_g·g − κ_c·x^{e(start)})` as a power series.
#[derive(Debug, Clone)]
pub struct DifferenceSeries {
    pub theorem: Theorem,
    pub side: Side,
    pub f: CoeffSeq,
    pub g: Option<(CoeffSeq, Weight)>,
    pub constant: Option<Weight>,
    /// `+1` when the claim is `f − κ·(...) > 0`, `-1` for the reverse.
    pub sign: i32,
    /// True when the series is the derivative of the claimed difference.
    pub derivative: bool,
}

fn weight_of(thm: Theorem, side: Side) -> Result<Weight> {
    let e = sharp_constant(thm, side)
        .ok_or_else(|| Error::UnknownId(format!("{} has no {side} bound", thm.name())))?;
    Ok(match e.kind {
        crate::lang::ExprKind::Lit(q) => Weight::Exact(q),
        _ => Weight::Enclosed(eval_const(&e, PREC)?),
    })
}

impl DifferenceSeries {
    /// The registered difference series for a theorem bound.
    pub fn of(thm: Theorem, side: Side) -> Result<DifferenceSeries> {
        let kappa = weight_of(thm, side)?;
        let sign = if side == Side::Lower { 1 } else { -1 };
        let seq = |r| CoeffSeq::of(SeriesId::Theorem(thm, r));
        let (f, g, constant, derivative) = match thm {
            Theorem::T31 | Theorem::T35 => (seq(Role::F)?, None, Some(kappa), false),
            Theorem::T32 => (seq(Role::G)?, None, Some(kappa), false),
            // f' − κ·g' for the third theorem, f − κ·g for the fourth
            Theorem::T33 => (seq(Role::A)?, Some((seq(Role::B)?, kappa)), None, true),
            Theorem::T34 => (seq(Role::A)?, Some((seq(Role::B)?, kappa)), None, false),
        };
        Ok(DifferenceSeries { theorem: thm, side, f, g, constant, sign, derivative })
    }

    pub fn start(&self) -> u32 {
        self.f.start
    }

    pub fn exponent_of(&self, n: u32) -> i64 {
        self.f.exponent_of(n)
    }

    pub fn coeff(&self, n: u32) -> Result<Coefficient> {
        let f = self.f.coeff(n)?;
        let mut exact = Some(f.clone());
        let mut enclosed = Interval::from_rational(&f, PREC);
        if let Some((g, w)) = &self.g {
            let gn = g.coeff(n)?;
            exact = match (&exact, w) {
                (Some(e), Weight::Exact(k)) => Some(e - k * &gn),
                _ => None,
            };
            enclosed = enclosed.sub(&w.interval().mul(&Interval::from_rational(&gn, PREC))).round(PREC);
        }
        if n == self.start() {
            if let Some(w) = &self.constant {
                exact = match (&exact, w) {
                    (Some(e), Weight::Exact(k)) => Some(e - k),
                    _ => None,
                };
                enclosed = enclosed.sub(&w.interval());
            }
        }
        Ok(match exact {
            Some(q) => Coefficient::Exact(q * int(self.sign as i64)),
            None if self.sign < 0 => Coefficient::Enclosed(enclosed.neg()),
            None => Coefficient::Enclosed(enclosed),
        })
    }

    /// First coefficient not known to vanish.
    pub fn leading(&self) -> Result<(u32, Coefficient)> {
        for n in self.start()..self.start() + LEADING_SEARCH {
            let c = self.coeff(n)?;
            if !c.is_zero() {
                return Ok((n, c));
            }
        }
        Err(Error::domain(format!("no nonzero coefficient within {LEADING_SEARCH} terms")))
    }

    /// Upper bound of `Σ_{n>N} |d_n| x^{e(n)}`.
    fn tail(&self, n_trunc: u32, x: &Rational) -> Result<Rational> {
        let mut t = tail_bound(&self.f, n_trunc, x)?;
        if let Some((g, w)) = &self.g {
            t += w.magnitude_upper() * tail_bound(g, n_trunc, x)?;
        }
        Ok(t)
    }

    /// Bound on `|d(x)/x^{e(L)} − d_L|` for `x ∈ (0, ε]`.
    fn spread(&self, lead: u32, eps: &Rational) -> Result<Rational> {
        let e_lead = self.exponent_of(lead);
        let n_trunc = lead + EXTRA_TERMS;
        let mut s = Rational::zero();
        for n in lead + 1..=n_trunc {
            let p = (self.exponent_of(n) - e_lead) as i32;
            s += self.coeff(n)?.abs_upper() * eps.pow(p);
        }
        Ok(s + self.tail(n_trunc, eps)? / eps.pow(e_lead as i32))
    }
}

/// Sign certificate for a theorem bound on `(0, ε]`.
///
/// Proved when the leading coefficient dominates the remainder on the
/// whole of `(0, ε]`; Refuted when the exact leading coefficient is
/// negative, with a certified point `x₀ ≤ ε` where the series is negative.
/// Certificate and witness bounds are for `d(x)/x^{e(L)}`.
pub fn near_zero_certificate_for(thm: Theorem, side: Side, eps: &Rational) -> Result<ProofResult> {
    if !eps.is_positive() || eps >= &int(1) {
        return Err(Error::domain("epsilon must lie in (0, 1)"));
    }
    let start = std::time::Instant::now();
    let d = DifferenceSeries::of(thm, side)?;
    let (lead, c) = d.leading()?;
    let lead_iv = c.interval();
    let what = if d.derivative { "derivative series" } else { "difference series" };
    let note = format!("{what} leading coefficient {c} at x^{}", d.exponent_of(lead));
    let stats = |leaves| ProofStats { leaves, max_depth: 0, elapsed: start.elapsed() };
    let domain = Interval::from_rationals(&int(0), eps, PREC)?;

    if lead_iv.is_negative() {
        let mut x0 = eps.clone();
        for _ in 0..64 {
            let s = Interval::from_rational(&d.spread(lead, &x0)?, PREC);
            let upper = lead_iv.add(&s);
            if upper.is_negative() {
                let x = Interval::from_rational(&x0, PREC);
                let value = lead_iv.add(&Interval::new(-s.hi(), s.hi().clone())?);
                let witness = Witness { interval: x, upper: upper.hi().clone(), midpoint_value: value };
                return Ok(ProofResult {
                    status: Status::Refuted,
                    witness: Some(witness),
                    certificate: Vec::new(),
                    stats: stats(0),
                    reason: Some(note),
                    findings: Vec::new(),
                });
            }
            x0 /= int(2);
        }
    }
    let status;
    let mut certificate = Vec::new();
    if lead_iv.is_positive() {
        let s = Interval::from_rational(&d.spread(lead, eps)?, PREC);
        let lower = lead_iv.sub(&s);
        if lower.is_positive() {
            certificate.push(Leaf { interval: domain, lower: lower.lo().clone() });
            status = Status::Proved;
        } else {
            status = Status::Unknown;
        }
    } else {
        status = Status::Unknown;
    }
    Ok(ProofResult {
        status,
        witness: None,
        stats: stats(certificate.len()),
        certificate,
        reason: Some(note),
        findings: Vec::new(),
    })
}

/// The lower-bound certificate of a theorem; see [`near_zero_certificate_for`].
pub fn near_zero_certificate(thm: Theorem, eps: &Rational) -> Result<ProofResult> {
    near_zero_certificate_for(thm, Side::Lower, eps)
}

/// Largest `ε = 2^-k` (down to `2^-40`) for which the certificate is Proved.
pub fn largest_certified_epsilon(thm: Theorem, side: Side) -> Result<Option<Rational>> {
    let mut eps = rat(1, 2);
    for _ in 0..40 {
        if near_zero_certificate_for(thm, side, &eps)?.is_proved() {
            return Ok(Some(eps));
        }
        eps /= int(2);
    }
    Ok(None)
}
