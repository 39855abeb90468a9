//! Endpoint limits of the theorem ratios and a sampled extremum scan.

use rayon::prelude::*;

use super::registry::{ratio_expression, sharp_constant, sharp_constant_exact, sharp_constant_text, Side};
use crate::error::{Error, Result};
use crate::exact::{int, rat, Rational};
use crate::interval::{pi_interval, Dyadic, Interval};
use crate::lang::{eval_const, eval_expr};
use crate::series::{theorem_coeff, Role, Theorem};

const PREC: u32 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Zero,
    Right,
}

impl Endpoint {
    pub fn name(self) -> &'static str {
        match self {
            Endpoint::Zero => "zero",
            Endpoint::Right => "right",
        }
    }
}

impl std::str::FromStr for Endpoint {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero" => Ok(Endpoint::Zero),
            "right" => Ok(Endpoint::Right),
            _ => Err(Error::UnknownId(format!("endpoint {s}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitReport {
    pub theorem: Theorem,
    pub endpoint: Endpoint,
    /// Leading series coefficient (zero endpoint only).
    pub value_exact: Option<Rational>,
    /// Certified enclosure of the limit.
    pub value_enclosure: Interval,
    /// The constant as displayed with the theorem.
    pub paper_value: &'static str,
    /// Independent enclosure of the ratio evaluated at `π/2` (right endpoint only).
    pub cross_check: Option<Interval>,
    pub matches_paper: bool,
}

/// Limit of the theorem's ratio at `0⁺` (exact) or at `(π/2)⁻` (enclosed).
pub fn limit_report(thm: Theorem, endpoint: Endpoint) -> Result<LimitReport> {
    match endpoint {
        Endpoint::Zero => {
            let (role, n) = match thm {
                Theorem::T31 | Theorem::T35 => (Role::F, 2),
                Theorem::T32 => (Role::G, 2),
                Theorem::T33 => (Role::C, 2),
                Theorem::T34 => (Role::C, 3),
            };
            let v = theorem_coeff(thm, role, n)?;
            let stated = sharp_constant_exact(thm, Side::Lower).expect("lower constants are rational");
            Ok(LimitReport {
                theorem: thm,
                endpoint,
                matches_paper: v == stated,
                value_enclosure: Interval::from_rational(&v, PREC),
                value_exact: Some(v),
                paper_value: sharp_constant_text(thm, Side::Lower).expect("registered"),
                cross_check: None,
            })
        }
        Endpoint::Right => {
            if thm.is_hyperbolic() {
                return Err(Error::domain(format!("{} has no finite right endpoint", thm.name())));
            }
            let closed = eval_const(&sharp_constant(thm, Side::Upper).expect("trig upper constants"), PREC)?;
            let half_pi = pi_interval(PREC).scale_pow2(-1);
            let direct = eval_expr(&ratio_expression(thm), &half_pi, PREC)?;
            Ok(LimitReport {
                theorem: thm,
                endpoint,
                value_exact: None,
                matches_paper: closed.intersect(&direct).is_some(),
                value_enclosure: closed,
                paper_value: sharp_constant_text(thm, Side::Upper).expect("registered"),
                cross_check: Some(direct),
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub theorem: Theorem,
    pub domain: (Rational, Rational),
    pub argmin: Dyadic,
    pub min_value: Interval,
    pub argmax: Dyadic,
    pub max_value: Interval,
    /// Whether the sampled ratio is nondecreasing on the grid.
    pub sampled_monotone: bool,
    pub grid_points: usize,
}

pub const SCAN_GRID: usize = 1024;
const SCAN_PREC: u32 = 128;

fn sample(thm_expr: &crate::lang::Expr, x: &Dyadic) -> Result<Dyadic> {
    Ok(eval_expr(thm_expr, &Interval::point(x.clone()), SCAN_PREC)?.mid())
}

/// Golden-section search on `[a, b]`; `sign` = 1 minimises, −1 maximises.
fn golden(e: &crate::lang::Expr, mut a: Dyadic, mut b: Dyadic, tol: &Dyadic, sign: i32) -> Result<Dyadic> {
    let inv_phi = Dyadic::floor_rational(&rat(6_180_339_887, 10_000_000_000), 64);
    let better = |p: &Dyadic, q: &Dyadic| if sign > 0 { p < q } else { p > q };
    let step = |a: &Dyadic, b: &Dyadic| (&(b - a) * &inv_phi).floor_to(96);
    let mut c = &b - &step(&a, &b);
    let mut d = &a + &step(&a, &b);
    let mut fc = sample(e, &c)?;
    let mut fd = sample(e, &d)?;
    while &(&b - &a) > tol {
        if better(&fc, &fd) {
            b = d;
            d = c;
            fd = fc;
            c = &b - &step(&a, &b);
            fc = sample(e, &c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = &a + &step(&a, &b);
            fd = sample(e, &d)?;
        }
    }
    Ok(Dyadic::midpoint(&a, &b))
}

/// Non-rigorous extremum estimate of the theorem's ratio on `[lo, hi]`:
/// a uniform grid, golden-section refinement around the best grid points,
/// and a certified evaluation at each candidate.
pub fn scan_extremum(thm: Theorem, lo: &Rational, hi: &Rational, tol: &Rational) -> Result<ScanReport> {
    if lo >= hi || lo <= &int(0) {
        return Err(Error::domain("scan domain must satisfy 0 < lo < hi"));
    }
    let e = ratio_expression(thm);
    let a = Dyadic::ceil_rational(lo, 64);
    let b = Dyadic::floor_rational(hi, 64);
    let span = &b - &a;
    let steps = Dyadic::from_int(SCAN_GRID as i64 - 1);
    let grid: Vec<Dyadic> = (0..SCAN_GRID)
        .map(|i| {
            let t = Dyadic::div_floor(&Dyadic::from_int(i as i64), &steps, 64);
            (&a + &(&span * &t)).floor_to(64)
        })
        .collect();
    let values: Vec<Dyadic> = grid.par_iter().map(|x| sample(&e, x)).collect::<Result<_>>()?;
    let sampled_monotone = values.windows(2).all(|w| w[0] <= w[1]);

    let tol = Dyadic::floor_rational(tol, 96).max(Dyadic::pow2(-60));
    let bracket = |i: usize| (grid[i.saturating_sub(1)].clone(), grid[(i + 1).min(SCAN_GRID - 1)].clone());
    let imin = (0..SCAN_GRID).min_by(|&i, &j| values[i].cmp(&values[j])).expect("grid");
    let imax = (0..SCAN_GRID).max_by(|&i, &j| values[i].cmp(&values[j]).then(j.cmp(&i))).expect("grid");
    let (l, r) = bracket(imin);
    let argmin = golden(&e, l, r, &tol, 1)?;
    let (l, r) = bracket(imax);
    let argmax = golden(&e, l, r, &tol, -1)?;
    let certify = |x: &Dyadic| eval_expr(&e, &Interval::point(x.clone()), crate::interval::DEFAULT_PRECISION);
    Ok(ScanReport {
        theorem: thm,
        domain: (lo.clone(), hi.clone()),
        min_value: certify(&argmin)?,
        max_value: certify(&argmax)?,
        argmin,
        argmax,
        sampled_monotone,
        grid_points: SCAN_GRID,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_rational;

    #[test]
    fn zero_limits_exact() {
        let want = [(Theorem::T31, rat(1, 60)), (Theorem::T33, rat(3, 20)), (Theorem::T34, rat(23, 720))];
        for (t, v) in want {
            let r = limit_report(t, Endpoint::Zero).unwrap();
            assert_eq!(r.value_exact, Some(v));
            assert!(r.matches_paper);
        }
    }

    #[test]
    fn right_limit_cross_checked() {
        let r = limit_report(Theorem::T35, Endpoint::Right).unwrap();
        assert!(r.matches_paper);
        let lo = parse_rational("0.18380510").unwrap();
        let hi = parse_rational("0.18380511").unwrap();
        assert!(r.value_enclosure.lo_rational() > lo && r.value_enclosure.hi_rational() < hi);
        assert!(limit_report(Theorem::T33, Endpoint::Right).is_err());
    }

    #[test]
    fn scan_finds_interior_minimum_for_third_theorem() {
        let r = scan_extremum(Theorem::T33, &rat(1, 10), &int(10), &rat(1, 1_000_000)).unwrap();
        assert!(!r.sampled_monotone);
        let x = r.argmin.to_f64();
        assert!((x - 2.0).abs() < 0.3, "{x}");
        assert!(r.min_value.hi_rational() < rat(3, 20));
    }
}
