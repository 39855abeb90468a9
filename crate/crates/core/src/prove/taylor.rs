//! Taylor-mode evaluation and the Taylor-form range enclosure.

use crate::error::{Error, Result};
use crate::interval::{pi_interval, sin_cos, sinh_cosh, Dyadic, ElemFn, Interval};
use crate::lang::{at, eval_expr, Expr, ExprKind};

/// Taylor coefficients `c_0..c_K` of `e(x0 + h)` in `h`.
type Jet = Vec<Interval>;

fn constant(c: Interval, len: usize) -> Jet {
    let mut j = vec![Interval::zero(); len];
    j[0] = c;
    j
}

fn mul(a: &Jet, b: &Jet, prec: u32) -> Jet {
    (0..a.len())
        .map(|k| {
            let mut acc = Interval::zero();
            for j in 0..=k {
                if a[j].is_point() && a[j].lo().is_zero() {
                    continue;
                }
                acc = acc.add(&a[j].mul(&b[k - j]));
            }
            acc.round(prec)
        })
        .collect()
}

fn div(a: &Jet, b: &Jet, prec: u32) -> Result<Jet> {
    let mut q: Jet = Vec::with_capacity(a.len());
    for k in 0..a.len() {
        let mut num = a[k].clone();
        for j in 0..k {
            num = num.sub(&q[j].mul(&b[k - j]));
        }
        q.push(num.div(&b[0], prec)?);
    }
    Ok(q)
}

fn pow(a: &Jet, n: i64, prec: u32) -> Result<Jet> {
    let len = a.len();
    let mut acc = constant(Interval::one(), len);
    let mut base = a.clone();
    let mut k = n.unsigned_abs();
    while k > 0 {
        if k & 1 == 1 {
            acc = mul(&acc, &base, prec);
        }
        k >>= 1;
        if k > 0 {
            base = mul(&base, &base, prec);
        }
    }
    if n < 0 {
        if a[0].contains_zero() {
            return Err(Error::DivisionByZero(format!("{} raised to negative power {n}", a[0])));
        }
        acc = div(&constant(Interval::one(), len), &acc, prec)?;
    }
    Ok(acc)
}

/// Coupled recurrences for (sin u, cos u) or (sinh u, cosh u).
fn pair(u: &Jet, s0: Interval, c0: Interval, hyperbolic: bool, prec: u32) -> (Jet, Jet) {
    let mut s = vec![s0];
    let mut c = vec![c0];
    for k in 1..u.len() {
        let mut sk = Interval::zero();
        let mut ck = Interval::zero();
        for j in 1..=k {
            let ju = u[j].mul_dyadic(&Dyadic::from_int(j as i64));
            sk = sk.add(&ju.mul(&c[k - j]));
            ck = ck.add(&ju.mul(&s[k - j]));
        }
        let sk = sk.div_int(k as u64, prec);
        let ck = ck.div_int(k as u64, prec);
        s.push(sk);
        c.push(if hyperbolic { ck } else { ck.neg() });
    }
    (s, c)
}

fn apply(f: ElemFn, u: &Jet, prec: u32) -> Result<Jet> {
    let (s, c) = if f.is_hyperbolic() {
        let (s0, c0) = sinh_cosh(&u[0], prec)?;
        pair(u, s0, c0, true, prec)
    } else {
        let (s0, c0) = sin_cos(&u[0], prec)?;
        pair(u, s0, c0, false, prec)
    };
    match f {
        ElemFn::Sin | ElemFn::Sinh => Ok(s),
        ElemFn::Cos | ElemFn::Cosh => Ok(c),
        ElemFn::Tan if c[0].contains_zero() => {
            Err(Error::PossiblePole(format!("cos encloses 0 on {}", u[0])))
        }
        ElemFn::Tan | ElemFn::Tanh => div(&s, &c, prec),
    }
}

fn jet(e: &Expr, x0: &Interval, len: usize, prec: u32) -> Result<Jet> {
    use ExprKind::*;
    let wrap = at(e.offset);
    Ok(match &e.kind {
        Lit(q) => constant(Interval::from_rational(q, prec), len),
        Pi => constant(pi_interval(prec), len),
        X => {
            let mut j = constant(x0.clone(), len);
            if len > 1 {
                j[1] = Interval::one();
            }
            j
        }
        Neg(a) => jet(a, x0, len, prec)?.iter().map(Interval::neg).collect(),
        Add(a, b) | Sub(a, b) => {
            let (ja, jb) = (jet(a, x0, len, prec)?, jet(b, x0, len, prec)?);
            let sub = matches!(e.kind, Sub(..));
            ja.iter().zip(&jb).map(|(p, q)| if sub { p.sub(q) } else { p.add(q) }).collect()
        }
        Mul(a, b) => mul(&jet(a, x0, len, prec)?, &jet(b, x0, len, prec)?, prec),
        Div(a, b) => div(&jet(a, x0, len, prec)?, &jet(b, x0, len, prec)?, prec).map_err(&wrap)?,
        Pow(a, n) => pow(&jet(a, x0, len, prec)?, *n, prec).map_err(&wrap)?,
        Apply(f, a) => apply(*f, &jet(a, x0, len, prec)?, prec).map_err(&wrap)?,
    })
}

/// Taylor coefficients of `e` at `x0` up to and including `order`.
pub fn taylor_coefficients(e: &Expr, x0: &Interval, order: usize, prec: u32) -> Result<Vec<Interval>> {
    jet(e, x0, order + 1, prec)
}

/// Order-`order` Taylor form of `e` over `x`: point coefficients at the
/// midpoint plus a Lagrange remainder whose coefficient is enclosed over `x`.
pub fn taylor_form(e: &Expr, x: &Interval, order: usize, prec: u32) -> Result<Interval> {
    if order == 0 || x.is_point() {
        return eval_expr(e, x, prec);
    }
    let m = x.mid();
    let r = (x.hi() - &m).max(&m - x.lo());
    let h = Interval::new(-&r, r)?;
    let at_mid = jet(e, &Interval::point(m), order, prec)?;
    let over_x = jet(e, x, order + 1, prec)?;
    let mut sum = at_mid[0].clone();
    for (k, c) in at_mid.iter().enumerate().skip(1) {
        sum = sum.add(&c.mul(&h.pow_u(k as u32)));
    }
    sum = sum.add(&over_x[order].mul(&h.pow_u(order as u32)));
    Ok(sum.round(prec))
}

/// Intersection of the natural interval extension and the Taylor form.
pub fn enclose(e: &Expr, x: &Interval, order: usize, prec: u32) -> Result<Interval> {
    let natural = eval_expr(e, x, prec);
    if order == 0 || x.is_point() {
        return natural;
    }
    match (natural, taylor_form(e, x, order, prec)) {
        (Ok(n), Ok(t)) => Ok(n.intersect(&t).unwrap_or(n)),
        (Ok(v), Err(_)) | (Err(_), Ok(v)) => Ok(v),
        (Err(e), Err(_)) => Err(e),
    }
}
