//! Property suites: elementary containment, identities, evaluation
//! soundness over the corpus, parser round-trips and certificate soundness.

mod common;

use common::{q, qi};
use proptest::prelude::*;
use wilker::exact::{parse_rational, Rational};
use wilker::interval::{Dyadic, ElemFn, Interval};
use wilker::lang::{bundled, eval_expr, parse_expression, Expr, ExprKind};
use wilker::prove::{core_domain, enclose, recheck_certificate, verify_inequality, ProveOptions, Status, VerifyOptions};

const PREC: u32 = 128;

fn dy(x: f64) -> Dyadic {
    Dyadic::try_exact(&Rational::from_float(x).unwrap()).unwrap()
}

fn interval(a: f64, b: f64) -> Interval {
    Interval::new(dy(a), dy(b)).unwrap()
}

fn libm(f: ElemFn, t: f64) -> f64 {
    match f {
        ElemFn::Sin => t.sin(),
        ElemFn::Cos => t.cos(),
        ElemFn::Tan => t.tan(),
        ElemFn::Sinh => t.sinh(),
        ElemFn::Cosh => t.cosh(),
        ElemFn::Tanh => t.tanh(),
    }
}

/// Trigonometric arguments stay inside the supported range `[-4, 4]`.
/// Every libm sample taken inside `[a, a + w]` lies in the enclosure, up to
/// a few ulps of libm error.
fn check_containment(f: ElemFn, a: f64, w: f64, s: f64) -> Result<(), TestCaseError> {
    let b = a + w;
    let x = interval(a, b);
    let enc = f.eval(&x, PREC).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let (lo, hi) = enc.to_f64_pair();
    for t in [a, b, a + s * w] {
        let v = libm(f, t);
        let slack = 8.0 * f64::EPSILON * v.abs().max(1.0);
        prop_assert!(lo - slack <= v && v <= hi + slack, "{}({t}) = {v} not in {enc}", f.name());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn sin_contains(a in -4.0f64..3.5, w in 0.0f64..0.5, s in 0.0f64..1.0) {
        check_containment(ElemFn::Sin, a, w, s)?;
    }

    #[test]
    fn cos_contains(a in -4.0f64..3.5, w in 0.0f64..0.5, s in 0.0f64..1.0) {
        check_containment(ElemFn::Cos, a, w, s)?;
    }

    #[test]
    fn tan_contains(a in -1.5f64..1.5, w in 0.0f64..0.05, s in 0.0f64..1.0) {
        check_containment(ElemFn::Tan, a, w, s)?;
    }

    #[test]
    fn sinh_contains(a in -20.0f64..20.0, w in 0.0f64..0.5, s in 0.0f64..1.0) {
        check_containment(ElemFn::Sinh, a, w, s)?;
    }

    #[test]
    fn cosh_contains(a in -20.0f64..20.0, w in 0.0f64..0.5, s in 0.0f64..1.0) {
        check_containment(ElemFn::Cosh, a, w, s)?;
    }

    #[test]
    fn tanh_contains(a in -20.0f64..20.0, w in 0.0f64..0.5, s in 0.0f64..1.0) {
        check_containment(ElemFn::Tanh, a, w, s)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn pythagorean_identity(a in -3.9f64..3.9, w in 0.0f64..0.01) {
        let x = interval(a, a + w);
        let s = ElemFn::Sin.eval(&x, PREC).unwrap();
        let c = ElemFn::Cos.eval(&x, PREC).unwrap();
        let one = s.sqr().add(&c.sqr());
        prop_assert!(one.contains(&Dyadic::one()), "{one}");
    }

    #[test]
    fn hyperbolic_identity(a in -10.0f64..10.0, w in 0.0f64..0.01) {
        let x = interval(a, a + w);
        let s = ElemFn::Sinh.eval(&x, PREC).unwrap();
        let c = ElemFn::Cosh.eval(&x, PREC).unwrap();
        let one = c.sqr().sub(&s.sqr());
        prop_assert!(one.contains(&Dyadic::one()), "{one}");
    }

    #[test]
    fn tan_is_sin_over_cos(a in -1.5f64..1.5, w in 0.0f64..0.01) {
        let x = interval(a, a + w);
        let t = ElemFn::Tan.eval(&x, PREC).unwrap();
        let r = ElemFn::Sin.eval(&x, PREC).unwrap().div(&ElemFn::Cos.eval(&x, PREC).unwrap(), PREC).unwrap();
        prop_assert!(t.intersect(&r).is_some());
    }

    #[test]
    fn decimal_literals_are_exact(m in -1_000_000i64..1_000_000, k in 0u32..12) {
        let text = format!("{m}e-{k}");
        let want = Rational::new(m.into(), num_bigint::BigInt::from(10u64.pow(k)));
        prop_assert_eq!(parse_rational(&text).unwrap(), want);
    }
}

fn f64_eval(e: &Expr, x: f64) -> f64 {
    use ExprKind::*;
    match &e.kind {
        Lit(v) => num_traits::ToPrimitive::to_f64(v).unwrap(),
        Pi => std::f64::consts::PI,
        X => x,
        Neg(a) => -f64_eval(a, x),
        Add(a, b) => f64_eval(a, x) + f64_eval(b, x),
        Sub(a, b) => f64_eval(a, x) - f64_eval(b, x),
        Mul(a, b) => f64_eval(a, x) * f64_eval(b, x),
        Div(a, b) => f64_eval(a, x) / f64_eval(b, x),
        Pow(a, n) => f64_eval(a, x).powi(*n as i32),
        Apply(f, a) => libm(*f, f64_eval(a, x)),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// Enclosures over a subinterval, by natural extension and by Taylor
    /// form, both contain the point enclosure and the f64 value.
    #[test]
    fn corpus_evaluation_is_sound(idx in 0usize..64, s in 0.05f64..0.95, w in 0.0f64..0.05, t in 0.0f64..1.0) {
        let corpus = bundled();
        let spec = &corpus.inequalities[idx % corpus.inequalities.len()];
        let e = spec.difference();
        let opts = VerifyOptions { x_max: qi(6), ..VerifyOptions::default() };
        let dom = core_domain(spec, &opts).unwrap();
        let (dlo, dhi) = dom.to_f64_pair();
        let a = dlo + s * (dhi - dlo);
        let b = (a + w).min(dhi);
        let x = interval(a, b);
        let p = a + t * (b - a);
        let at_p = eval_expr(&e, &Interval::point(dy(p)), PREC).unwrap();
        let natural = eval_expr(&e, &x, PREC).unwrap();
        let taylor = enclose(&e, &x, 8, PREC).unwrap();
        prop_assert!(natural.intersect(&at_p).is_some(), "{}: {natural} vs {at_p}", spec.name);
        prop_assert!(taylor.intersect(&at_p).is_some(), "{}: {taylor} vs {at_p}", spec.name);
        prop_assert!(at_p.subset_of(&natural.hull(&at_p)));
        if p > 0.2 {
            let v = f64_eval(&e, p);
            let (lo, hi) = at_p.to_f64_pair();
            let slack = 1e-9 * v.abs().max(1.0);
            prop_assert!(lo - slack <= v && v <= hi + slack, "{}({p}) = {v} not in {at_p}", spec.name);
        }
    }
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(Expr::x()),
        Just(Expr::new(ExprKind::Pi, 0)),
        (0i64..50, 1i64..9).prop_map(|(n, d)| Expr::lit(q(n, d))),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        let b = |k: fn(Box<Expr>, Box<Expr>) -> ExprKind| {
            (inner.clone(), inner.clone()).prop_map(move |(a, c)| Expr::new(k(Box::new(a), Box::new(c)), 0))
        };
        prop_oneof![
            inner.clone().prop_map(|a| Expr::new(ExprKind::Neg(Box::new(a)), 0)),
            b(ExprKind::Add),
            b(ExprKind::Sub),
            b(ExprKind::Mul),
            b(ExprKind::Div).prop_filter("literal quotients fold", |e| match &e.kind {
                ExprKind::Div(a, c) => !matches!((&a.kind, &c.kind), (ExprKind::Lit(_), ExprKind::Lit(_))),
                _ => true,
            }),
            (inner.clone(), -4i64..5).prop_map(|(a, n)| Expr::new(ExprKind::Pow(Box::new(a), n), 0)),
            (inner, 0usize..6).prop_map(|(a, f)| Expr::new(ExprKind::Apply(ElemFn::ALL[f], Box::new(a)), 0)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn print_parse_round_trip(e in arb_expr()) {
        let text = e.to_string();
        let back = parse_expression(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(back, e, "{}", text);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    /// Proved certificates survive re-evaluation at doubled precision, and
    /// refutation witnesses stay negative there.
    #[test]
    fn certificates_recheck_at_doubled_precision(k in 1u32..4, name_idx in 0usize..3) {
        let corpus = bundled();
        let name = ["HUY_TRIG", "WILKER", "COS_HUY"][name_idx];
        let spec = corpus.inequality(name).unwrap();
        let eps = Rational::new(1.into(), num_bigint::BigInt::from(10u64.pow(k)));
        let opts = VerifyOptions { eps_lo: eps.clone(), eps_hi: eps, ..VerifyOptions::default() };
        let r = verify_inequality(spec, &opts).unwrap();
        prop_assert_eq!(r.status, Status::Proved);
        let dom = core_domain(spec, &opts).unwrap();
        let p = ProveOptions::default();
        prop_assert!(recheck_certificate(&spec.difference(), &dom, &r.certificate, p.taylor_order, 2 * p.precision));

        let bad = corpus.inequality("THM33").unwrap();
        let opts = VerifyOptions { x_max: qi(4 + k as i64), near_zero: false, ..VerifyOptions::default() };
        let r = verify_inequality(bad, &opts).unwrap();
        prop_assert_eq!(r.status, Status::Refuted);
        let w = r.witness.unwrap();
        let v = eval_expr(&bad.difference(), &Interval::point(w.midpoint()), 2 * p.precision).unwrap();
        prop_assert!(v.is_negative(), "{v}");
    }
}
