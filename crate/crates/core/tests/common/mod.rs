//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's series or elementary-function code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use wilker::exact::Rational;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Bernoulli numbers by the Akiyama–Tanigawa transform. The transform
/// yields `B_1 = +1/2`; the sign is flipped to match `B_1 = -1/2`.
pub fn bernoulli_oracle(upto: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(upto + 1);
    let mut a: Vec<Rational> = Vec::with_capacity(upto + 1);
    for m in 0..=upto {
        a.push(q(1, m as i64 + 1));
        for j in (1..=m).rev() {
            a[j - 1] = qi(j as i64) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    if upto >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

/// Truncated power series `Σ c_k x^k`, `k < N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ps(pub Vec<Rational>);

impl Ps {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn from_fn(n: usize, f: impl Fn(usize) -> Rational) -> Ps {
        Ps((0..n).map(f).collect())
    }

    pub fn constant(n: usize, c: Rational) -> Ps {
        Ps::from_fn(n, |k| if k == 0 { c.clone() } else { Rational::zero() })
    }

    /// `x^m`.
    pub fn monomial(n: usize, m: usize) -> Ps {
        Ps::from_fn(n, |k| if k == m { Rational::one() } else { Rational::zero() })
    }

    pub fn add(&self, o: &Ps) -> Ps {
        Ps::from_fn(self.len(), |k| &self.0[k] + &o.0[k])
    }

    pub fn sub(&self, o: &Ps) -> Ps {
        Ps::from_fn(self.len(), |k| &self.0[k] - &o.0[k])
    }

    pub fn scale(&self, c: &Rational) -> Ps {
        Ps::from_fn(self.len(), |k| &self.0[k] * c)
    }

    pub fn mul(&self, o: &Ps) -> Ps {
        Ps::from_fn(self.len(), |k| (0..=k).map(|j| &self.0[j] * &o.0[k - j]).sum())
    }

    pub fn inv(&self) -> Ps {
        assert!(!self.0[0].is_zero(), "series inverse needs a nonzero constant term");
        let mut r = vec![Rational::one() / &self.0[0]];
        for k in 1..self.len() {
            let s: Rational = (1..=k).map(|j| &self.0[j] * &r[k - j]).sum();
            r.push(-s / &self.0[0]);
        }
        Ps(r)
    }

    pub fn div(&self, o: &Ps) -> Ps {
        self.mul(&o.inv())
    }

    /// `f(c·x)`.
    pub fn compose_scale(&self, c: &Rational) -> Ps {
        let mut p = Rational::one();
        let mut out = Vec::with_capacity(self.len());
        for a in &self.0 {
            out.push(a * &p);
            p *= c;
        }
        Ps(out)
    }

    /// Divides by `x^m`, checking that the low coefficients vanish.
    pub fn div_xm(&self, m: usize) -> Ps {
        for k in 0..m {
            assert!(self.0[k].is_zero(), "coefficient of x^{k} is {} (expected 0)", self.0[k]);
        }
        Ps::from_fn(self.len() - m, |k| self.0[k + m].clone())
    }

    pub fn derivative(&self) -> Ps {
        Ps::from_fn(self.len() - 1, |k| qi(k as i64 + 1) * &self.0[k + 1])
    }
}

fn fact(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

fn inv_fact(n: usize) -> Rational {
    Rational::new(BigInt::one(), fact(n))
}

pub fn sin_ps(n: usize) -> Ps {
    Ps::from_fn(n, |k| if k % 2 == 1 { inv_fact(k) * if k % 4 == 1 { qi(1) } else { qi(-1) } } else { qi(0) })
}

pub fn cos_ps(n: usize) -> Ps {
    Ps::from_fn(n, |k| if k % 2 == 0 { inv_fact(k) * if k % 4 == 0 { qi(1) } else { qi(-1) } } else { qi(0) })
}

pub fn sinh_ps(n: usize) -> Ps {
    Ps::from_fn(n, |k| if k % 2 == 1 { inv_fact(k) } else { qi(0) })
}

pub fn cosh_ps(n: usize) -> Ps {
    Ps::from_fn(n, |k| if k % 2 == 0 { inv_fact(k) } else { qi(0) })
}

/// `sin(x)/x`.
pub fn sinc_ps(n: usize) -> Ps {
    Ps::from_fn(n, |k| if k % 2 == 0 { inv_fact(k + 1) * if k % 4 == 0 { qi(1) } else { qi(-1) } } else { qi(0) })
}

/// A Laurent series `x^(-m) · p(x)`.
pub struct Laurent {
    pub m: usize,
    pub p: Ps,
}

impl Laurent {
    pub fn coeff(&self, exponent: i64) -> Rational {
        let k = exponent + self.m as i64;
        assert!(k >= 0 && (k as usize) < self.p.len(), "exponent {exponent} out of range");
        self.p.0[k as usize].clone()
    }
}

/// Name-keyed Laurent expansions of the building blocks, built from the
/// sine/cosine series by inversion and products.
pub fn lemma_oracle(name: &str, n: usize) -> Laurent {
    let s = sinc_ps(n);
    let c = cos_ps(n);
    let inv = s.inv();
    match name {
        "X_OVER_SIN" => Laurent { m: 0, p: inv },
        "COT" => Laurent { m: 1, p: c.mul(&inv) },
        "CSC2" => Laurent { m: 2, p: inv.mul(&inv) },
        "COS_OVER_SIN2" => Laurent { m: 2, p: c.mul(&inv).mul(&inv) },
        "CSC3" => Laurent { m: 3, p: inv.mul(&inv).mul(&inv) },
        "COS_OVER_SIN3" => Laurent { m: 3, p: c.mul(&inv).mul(&inv).mul(&inv) },
        "SINH" => Laurent { m: 0, p: sinh_ps(n) },
        "COSH" => Laurent { m: 0, p: cosh_ps(n) },
        other => panic!("no oracle for {other}"),
    }
}

/// The ratio functions of the three trigonometric theorems as power series:
/// `(N(x) − c) / (x^3 sin x)` with the numerator given by name.
pub fn trig_ratio_oracle(thm: &str, n: usize) -> Ps {
    let s = sinc_ps(n);
    let c = cos_ps(n);
    let half = q(1, 2);
    let num = match thm {
        // (2x/sin x + x/tan x − 3)
        "T3.1" => qi(2).mul_ps(&s.inv()).add(&c.div(&s)).sub(&Ps::constant(n, qi(3))),
        // (x/sin x + ((x/2)/tan(x/2))^2 − 2)
        "T3.2" => {
            let t = c.compose_scale(&half).div(&s.compose_scale(&half));
            s.inv().add(&t.mul(&t)).sub(&Ps::constant(n, qi(2)))
        }
        // (3x/sin x + cos x − 4)
        "T3.5" => qi(3).mul_ps(&s.inv()).add(&c).sub(&Ps::constant(n, qi(4))),
        other => panic!("no trig ratio for {other}"),
    };
    // x^3 sin x = x^4 · sinc
    num.div(&s).div_xm(4)
}

trait MulPs {
    fn mul_ps(&self, p: &Ps) -> Ps;
}

impl MulPs for Rational {
    fn mul_ps(&self, p: &Ps) -> Ps {
        p.scale(self)
    }
}

/// Numerator and denominator series of the two hyperbolic theorems in the
/// form their coefficient sequences are stated: derivatives for the first,
/// the functions themselves for the second.
pub fn hyperbolic_pair_oracle(thm: &str, n: usize) -> (Ps, Ps) {
    let sh = sinh_ps(n);
    let ch = cosh_ps(n);
    let x = Ps::monomial(n, 1);
    let x2 = Ps::monomial(n, 2);
    match thm {
        "T3.3" => {
            // f = sinh 2x + sinh x − 3x cosh x, g = x^4 sinh x
            let f = sh.compose_scale(&qi(2)).add(&sh).sub(&x.mul(&ch).scale(&qi(3)));
            let g = Ps::monomial(n, 4).mul(&sh);
            (f.derivative(), g.derivative())
        }
        "T3.4" => {
            let inner = x
                .mul(&sh)
                .mul(&ch)
                .add(&x.mul(&sh))
                .add(&ch.scale(&qi(4)))
                .sub(&x2.mul(&ch).scale(&qi(2)))
                .sub(&Ps::constant(n, qi(4)))
                .sub(&x2.scale(&qi(2)));
            let f = ch.mul(&inner);
            let g = Ps::monomial(n, 5).mul(&sh).mul(&Ps::constant(n, qi(1)).add(&ch));
            (f, g)
        }
        other => panic!("no hyperbolic pair for {other}"),
    }
}

/// A closed rational interval for oracle arithmetic.
#[derive(Clone, Debug)]
pub struct RI {
    pub lo: Rational,
    pub hi: Rational,
}

impl RI {
    pub fn new(lo: Rational, hi: Rational) -> RI {
        assert!(lo <= hi);
        RI { lo, hi }
    }

    pub fn point(x: Rational) -> RI {
        RI { lo: x.clone(), hi: x }
    }

    pub fn add(&self, o: &RI) -> RI {
        RI::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &RI) -> RI {
        RI::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn mul(&self, o: &RI) -> RI {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        RI::new(lo, hi)
    }

    pub fn div(&self, o: &RI) -> RI {
        assert!(o.lo.is_positive() || o.hi.is_negative(), "oracle division by an interval containing 0");
        self.mul(&RI::new(Rational::one() / &o.hi, Rational::one() / &o.lo))
    }

    pub fn scale(&self, c: &Rational) -> RI {
        self.mul(&RI::point(c.clone()))
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn overlaps(&self, lo: &Rational, hi: &Rational) -> bool {
        &self.lo <= hi && lo <= &self.hi
    }
}

/// `atan(1/k)` bracketed by consecutive partial sums of its alternating series.
fn atan_inv(k: i64, terms: usize) -> RI {
    let k2 = qi(k * k);
    let mut p = q(1, k);
    let mut s = Rational::zero();
    let mut prev = Rational::zero();
    for j in 0..=terms {
        prev = s.clone();
        let t = &p / qi(2 * j as i64 + 1);
        if j % 2 == 0 {
            s += t;
        } else {
            s -= t;
        }
        p /= &k2;
    }
    if prev < s {
        RI::new(prev, s)
    } else {
        RI::new(s, prev)
    }
}

/// π from Machin's formula `π/4 = 4 atan(1/5) − atan(1/239)`.
pub fn machin_pi(terms: usize) -> RI {
    atan_inv(5, terms).scale(&qi(16)).sub(&atan_inv(239, terms).scale(&qi(4)))
}

/// `sin(1)` bracketed by alternating Taylor partial sums.
pub fn sin1(terms: usize) -> RI {
    let mut s = Rational::zero();
    let mut prev = Rational::zero();
    for j in 0..=terms {
        prev = s.clone();
        let t = inv_fact(2 * j + 1);
        if j % 2 == 0 {
            s += t;
        } else {
            s -= t;
        }
    }
    if prev < s {
        RI::new(prev, s)
    } else {
        RI::new(s, prev)
    }
}

/// `e^x` for rational `x ≥ 0`, using `terms` Taylor terms with a geometric
/// tail bound; requires `x ≤ terms / 2`.
pub fn exp_pos(x: &Rational, terms: usize) -> RI {
    assert!(!x.is_negative() && x <= &qi(terms as i64 / 2));
    let mut s = Rational::zero();
    let mut t = Rational::one();
    for k in 0..terms {
        s += &t;
        t = t * x / qi(k as i64 + 1);
    }
    // t is the first omitted term; later ratios are at most 1/2
    let hi = &s + &t * qi(2);
    RI::new(s, hi)
}

pub fn exp_ri(x: &Rational, terms: usize) -> RI {
    if x.is_negative() {
        RI::point(Rational::one()).div(&exp_pos(&-x.clone(), terms))
    } else {
        exp_pos(x, terms)
    }
}

pub fn sinh_ri(x: &Rational, terms: usize) -> RI {
    exp_ri(x, terms).sub(&exp_ri(&-x.clone(), terms)).scale(&q(1, 2))
}

pub fn cosh_ri(x: &Rational, terms: usize) -> RI {
    exp_ri(x, terms).add(&exp_ri(&-x.clone(), terms)).scale(&q(1, 2))
}

pub fn tanh1(terms: usize) -> RI {
    let e2 = exp_pos(&qi(2), terms);
    e2.sub(&RI::point(qi(1))).div(&e2.add(&RI::point(qi(1))))
}

/// The hyperbolic ratio `(sinh 2x + sinh x − 3x cosh x) / (x^4 sinh x)`.
pub fn t33_ratio(x: &Rational, terms: usize) -> RI {
    let num = sinh_ri(&(x * qi(2)), terms)
        .add(&sinh_ri(x, terms))
        .sub(&cosh_ri(x, terms).scale(&(x * qi(3))));
    let x4 = x * x * x * x;
    num.div(&sinh_ri(x, terms).scale(&x4))
}

/// Alternating Taylor series `Σ (-1)^j x^(2j+p)/(2j+p)!` bracketed by
/// consecutive partial sums; valid for `|x| ≤ 1`.
fn alternating(x: &Rational, p: usize, terms: usize) -> RI {
    assert!(x.abs() <= qi(1));
    let mut s = Rational::zero();
    let mut prev = Rational::zero();
    for j in 0..=terms {
        prev = s.clone();
        let k = 2 * j + p;
        let t = (0..k).fold(Rational::one(), |acc, _| acc * x) * inv_fact(k);
        if j % 2 == 0 {
            s += t;
        } else {
            s -= t;
        }
    }
    if prev < s {
        RI::new(prev, s)
    } else {
        RI::new(s, prev)
    }
}

pub fn sin_ri(x: &Rational, terms: usize) -> RI {
    alternating(x, 1, terms)
}

pub fn cos_ri(x: &Rational, terms: usize) -> RI {
    alternating(x, 0, terms)
}
