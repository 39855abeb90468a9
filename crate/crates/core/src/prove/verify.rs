use super::bisect::{prove_positive, ProofResult, ProveOptions, Status};
use super::nearzero::near_zero_certificate_for;
use super::registry::Side;
use crate::error::{Error, Result};
use crate::exact::{fmt_rational, int, rat, Rational};
use crate::interval::{Dyadic, Interval};
use crate::lang::{is_zero_endpoint, Bound, InequalitySpec};
use crate::series::Theorem;

const ENDPOINT_PREC: u32 = 256;
const CORE_BITS: u32 = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyOptions {
    /// Margin at an open left endpoint.
    pub eps_lo: Rational,
    /// Margin at an open finite right endpoint.
    pub eps_hi: Rational,
    /// Cutoff replacing an infinite right endpoint.
    pub x_max: Rational,
    pub prove: ProveOptions,
    /// Close a `(0, ε_lo]` gap with a registered series certificate.
    pub near_zero: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            eps_lo: rat(1, 1000),
            eps_hi: rat(1, 1000),
            x_max: int(20),
            prove: ProveOptions::default(),
            near_zero: true,
        }
    }
}

/// The theorem bound a stanza is tagged with, if any.
pub fn registered_claim(spec: &InequalitySpec) -> Option<(Theorem, Side)> {
    let thm = spec.tag("theorem")?.parse().ok()?;
    let side = spec.tag("bound").and_then(|s| s.parse().ok()).unwrap_or(Side::Lower);
    Some((thm, side))
}

/// The compact interval handed to the bisection prover. It contains
/// `[lo + ε_lo, hi − ε_hi]` (open ends) or the closed end itself, with
/// `x_max` standing in for `inf`.
pub fn core_domain(spec: &InequalitySpec, opts: &VerifyOptions) -> Result<Interval> {
    let margin = |closed: bool, eps: &Rational| if closed { int(0) } else { eps.clone() };
    let lo_enc = spec.lo.enclosure(ENDPOINT_PREC).expect("left endpoint is finite");
    let lo = Dyadic::floor_rational(&(lo_enc.lo_rational() + margin(spec.lo.is_closed(), &opts.eps_lo)), CORE_BITS);
    let hi = match &spec.hi {
        Bound::Infinite => Dyadic::ceil_rational(&opts.x_max, CORE_BITS),
        b => {
            let enc = b.enclosure(ENDPOINT_PREC).expect("finite");
            Dyadic::ceil_rational(&(enc.hi_rational() - margin(b.is_closed(), &opts.eps_hi)), CORE_BITS)
        }
    };
    if lo >= hi {
        return Err(Error::domain(format!("{}: margins leave an empty core domain", spec.name)));
    }
    Interval::new(lo, hi)
}

/// Proves a corpus inequality on its compact core, delegating `(0, ε_lo]` to
/// the theorem's series certificate when one is registered. Every part of
/// the domain left unverified is listed in `findings`.
pub fn verify_inequality(spec: &InequalitySpec, opts: &VerifyOptions) -> Result<ProofResult> {
    if !(opts.eps_lo > int(0) && opts.eps_hi > int(0) && opts.x_max > int(0)) {
        return Err(Error::domain("margins and x_max must be positive"));
    }
    let core = core_domain(spec, opts)?;
    let mut result = prove_positive(&spec.difference(), &core, &opts.prove);
    result.findings.push(format!("core {core}: {}", result.status));

    if !spec.lo.is_closed() {
        let lo_text = spec.lo.expr().map(|e| e.to_string()).unwrap_or_default();
        let claim = registered_claim(spec).filter(|_| opts.near_zero && is_zero_endpoint(&spec.lo));
        match claim {
            Some((thm, side)) => {
                let near = near_zero_certificate_for(thm, side, &opts.eps_lo)?;
                let detail = near.reason.clone().unwrap_or_default();
                result
                    .findings
                    .push(format!("near zero (0, {}]: {} ({detail})", fmt_rational(&opts.eps_lo), near.status));
                let combined = result.status.combine(near.status);
                if combined == Status::Refuted && result.witness.is_none() {
                    result.witness = near.witness;
                }
                if combined != Status::Proved {
                    result.certificate.clear();
                }
                result.status = combined;
            }
            None if is_zero_endpoint(&spec.lo) => {
                result.findings.push(format!("uncovered margin (0, {})", fmt_rational(&opts.eps_lo)))
            }
            None => result.findings.push(format!("uncovered margin ({lo_text}, {lo_text} + {})", fmt_rational(&opts.eps_lo))),
        }
    }
    match &spec.hi {
        Bound::Infinite => result
            .findings
            .push(format!("unverified beyond x_max: x > {}", fmt_rational(&opts.x_max))),
        b if !b.is_closed() => {
            let hi_text = b.expr().map(|e| e.to_string()).unwrap_or_default();
            result
                .findings
                .push(format!("uncovered margin ({hi_text} - {}, {hi_text})", fmt_rational(&opts.eps_hi)));
        }
        _ => {}
    }
    Ok(result)
}
