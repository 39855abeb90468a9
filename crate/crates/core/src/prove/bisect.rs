use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::taylor::enclose;
use crate::interval::{Dyadic, Interval, DEFAULT_PRECISION};
use crate::lang::Expr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Proved,
    Refuted,
    Unknown,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Proved => "Proved",
            Status::Refuted => "Refuted",
            Status::Unknown => "Unknown",
        }
    }

    /// Refuted dominates Unknown, which dominates Proved.
    pub fn combine(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Refuted, _) | (_, Refuted) => Refuted,
            (Unknown, _) | (_, Unknown) => Unknown,
            _ => Proved,
        }
    }
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Leaf {
    pub interval: Interval,
    /// Certified lower bound of the expression on `interval`.
    pub lower: Dyadic,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub interval: Interval,
    /// Certified upper bound of the expression on `interval`.
    pub upper: Dyadic,
    /// Enclosure of the expression at the midpoint of `interval`.
    pub midpoint_value: Interval,
}

impl Witness {
    pub fn midpoint(&self) -> Dyadic {
        self.interval.mid()
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ProofStats {
    pub leaves: usize,
    pub max_depth: u32,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProofResult {
    pub status: Status,
    pub witness: Option<Witness>,
    /// Leaves sorted by left endpoint; empty unless `status` is `Proved`.
    pub certificate: Vec<Leaf>,
    pub stats: ProofStats,
    /// Why the status was reached, when not self-evident.
    pub reason: Option<String>,
    /// Coverage notes: margins, cutoffs, delegated sub-proofs.
    pub findings: Vec<String>,
}

impl ProofResult {
    pub fn is_proved(&self) -> bool {
        self.status == Status::Proved
    }

    pub fn is_refuted(&self) -> bool {
        self.status == Status::Refuted
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProveOptions {
    pub max_depth: u32,
    /// Intervals narrower than this are not split further.
    pub min_width: Dyadic,
    pub precision: u32,
    pub max_leaves: usize,
    /// Order of the Taylor form intersected with the natural extension; 0 disables it.
    pub taylor_order: usize,
}

impl Default for ProveOptions {
    fn default() -> Self {
        ProveOptions {
            max_depth: 48,
            // 2^-40 ≈ 9.1e-13 is the largest power of two below 1e-12
            min_width: Dyadic::pow2(-40),
            precision: DEFAULT_PRECISION,
            max_leaves: 50_000,
            taylor_order: 12,
        }
    }
}

enum Outcome {
    Positive(Dyadic),
    Negative(Dyadic),
    Split,
    Stuck(String),
}

fn classify(e: &Expr, x: &Interval, depth: u32, opts: &ProveOptions) -> Outcome {
    let can_split = depth < opts.max_depth && x.width() > opts.min_width;
    match enclose(e, x, opts.taylor_order, opts.precision) {
        Ok(v) if v.is_positive() => Outcome::Positive(v.lo().clone()),
        Ok(v) if v.is_negative() => Outcome::Negative(v.hi().clone()),
        _ if can_split => Outcome::Split,
        Ok(v) => Outcome::Stuck(format!("undecided on {x}: enclosure {v}")),
        Err(err) => Outcome::Stuck(format!("evaluation failed on {x}: {err}")),
    }
}

/// Certifies `e > 0` on the compact interval `domain` by adaptive bisection.
///
/// Levels are processed breadth-first and each level is evaluated in
/// parallel; results are consumed in left-to-right order, so the outcome does
/// not depend on scheduling. On the first level containing a certified
/// negative subinterval, the one with the most negative upper bound becomes
/// the witness.
pub fn prove_positive(e: &Expr, domain: &Interval, opts: &ProveOptions) -> ProofResult {
    let start = Instant::now();
    let mut leaves = Vec::new();
    let mut level = vec![domain.clone()];
    let mut depth = 0u32;
    let mut max_depth = 0u32;
    let finish = |status, witness, certificate: Vec<Leaf>, reason, leaves, max_depth| ProofResult {
        status,
        witness,
        stats: ProofStats { leaves, max_depth, elapsed: start.elapsed() },
        certificate: if status == Status::Proved { certificate } else { Vec::new() },
        reason,
        findings: Vec::new(),
    };
    while !level.is_empty() {
        max_depth = depth;
        let outcomes: Vec<Outcome> = level.par_iter().map(|x| classify(e, x, depth, opts)).collect();

        let refuted = level
            .iter()
            .zip(&outcomes)
            .filter_map(|(x, o)| match o {
                Outcome::Negative(u) => Some((x, u)),
                _ => None,
            })
            .min_by(|a, b| a.1.cmp(b.1));
        if let Some((x, upper)) = refuted {
            let prec = opts.precision;
            let midpoint_value = crate::lang::eval_expr(e, &Interval::point(x.mid()), prec)
                .unwrap_or_else(|_| Interval::point(upper.clone()));
            let witness = Witness { interval: x.clone(), upper: upper.clone(), midpoint_value };
            let n = leaves.len();
            return finish(Status::Refuted, Some(witness), Vec::new(), None, n, max_depth);
        }

        let mut next = Vec::new();
        for (x, o) in level.iter().zip(outcomes) {
            match o {
                Outcome::Positive(lower) => leaves.push(Leaf { interval: x.clone(), lower }),
                Outcome::Split => {
                    let m = x.mid();
                    next.push(Interval::new(x.lo().clone(), m.clone()).expect("ordered"));
                    next.push(Interval::new(m, x.hi().clone()).expect("ordered"));
                }
                Outcome::Stuck(reason) => {
                    let n = leaves.len();
                    return finish(Status::Unknown, None, Vec::new(), Some(reason), n, max_depth);
                }
                Outcome::Negative(_) => unreachable!(),
            }
        }
        if leaves.len() + next.len() > opts.max_leaves {
            let n = leaves.len();
            let reason = format!("leaf budget of {} exhausted at depth {depth}", opts.max_leaves);
            return finish(Status::Unknown, None, Vec::new(), Some(reason), n, max_depth);
        }
        level = next;
        depth += 1;
    }
    leaves.sort_by(|a, b| a.interval.lo().cmp(b.interval.lo()));
    let n = leaves.len();
    finish(Status::Proved, None, leaves, None, n, max_depth)
}

/// Re-evaluates every certificate leaf at `prec` and reports whether all
/// lower bounds stay positive and the leaves tile `domain`.
pub fn recheck_certificate(e: &Expr, domain: &Interval, leaves: &[Leaf], taylor_order: usize, prec: u32) -> bool {
    let tiles = leaves.first().is_some_and(|l| l.interval.lo() == domain.lo())
        && leaves.last().is_some_and(|l| l.interval.hi() == domain.hi())
        && leaves.windows(2).all(|w| w[0].interval.hi() == w[1].interval.lo());
    tiles
        && leaves
            .par_iter()
            .all(|l| enclose(e, &l.interval, taylor_order, prec).is_ok_and(|v| v.is_positive()))
}
