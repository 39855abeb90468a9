use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Interval;
use crate::error::{Error, Result};
use crate::exact::{int, ipow, Rational};

/// A rational bracket around π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiEnclosure {
    pub lo: Rational,
    pub hi: Rational,
    pub width: Rational,
}

impl PiEnclosure {
    pub fn to_interval(&self, prec: u32) -> Interval {
        Interval::from_rationals(&self.lo, &self.hi, prec).expect("pi bracket is ordered")
    }
}

/// Partial sums `S_n, S_{n+1}` of `arctan(1/k) = Σ (-1)^j / ((2j+1) k^(2j+1))`.
/// Consecutive partial sums of this alternating series bracket the limit and
/// the brackets nest as `n` grows.
fn arctan_inv_bracket(k: i64, n: usize) -> (Rational, Rational) {
    let mut sum = Rational::zero();
    let mut next = Rational::zero();
    for j in 0..=n {
        let term = Rational::new(
            if j % 2 == 0 { 1.into() } else { (-1).into() },
            ipow(k, 2 * j as u32 + 1) * (2 * j as i64 + 1),
        );
        if j < n {
            sum += &term;
        } else {
            next = &sum + term;
        }
    }
    if sum <= next {
        (sum, next)
    } else {
        (next, sum)
    }
}

/// Encloses π via `π/4 = 2·arctan(1/3) + arctan(1/7)`.
///
/// Smaller targets use more terms, and the brackets nest, so a tighter
/// result is always contained in a looser one.
pub fn pi_enclose(width_target: &Rational) -> Result<PiEnclosure> {
    if !width_target.is_positive() {
        return Err(Error::domain("pi_enclose width target must be positive"));
    }
    let mut n = 1usize;
    loop {
        let (a_lo, a_hi) = arctan_inv_bracket(3, n);
        let (b_lo, b_hi) = arctan_inv_bracket(7, n);
        let lo = int(4) * (int(2) * a_lo + b_lo);
        let hi = int(4) * (int(2) * a_hi + b_hi);
        let width = &hi - &lo;
        if &width <= width_target {
            return Ok(PiEnclosure { lo, hi, width });
        }
        n += 1;
    }
}

/// π rounded outward at `prec` fractional bits; cached per precision.
pub fn pi_interval(prec: u32) -> Interval {
    static CACHE: OnceLock<Mutex<HashMap<u32, Interval>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("pi cache poisoned").get(&prec) {
        return p.clone();
    }
    let target = Rational::new(BigInt::one(), ipow(2, prec + 2));
    let enc = pi_enclose(&target).expect("positive width target");
    let value = enc.to_interval(prec);
    cache
        .lock()
        .expect("pi cache poisoned")
        .insert(prec, value.clone());
    value
}
