//! Exact Bernoulli numbers and the even-zeta ratios built from them.
//!
//! ```text
//! cargo run --example bernoulli
//! ```

use wilker::exact::{bernoulli, fmt_rational, zeta_even_ratio};

fn main() {
    for n in 0..=20 {
        let b = bernoulli(n);
        if n < 2 || n % 2 == 0 {
            println!("B_{n:<2} = {}", fmt_rational(&b));
        }
    }
    // ζ(2q)/π^(2q) is rational
    for q in 1..=4 {
        println!("zeta({})/pi^{} = {}", 2 * q, 2 * q, fmt_rational(&zeta_even_ratio(q).unwrap()));
    }
}
