//! A claimed sharp bound that is false: the interval prover finds a witness
//! with a certified negative value and the series at zero has a negative
//! leading coefficient.
//!
//! ```text
//! cargo run --release --example refute
//! ```

use wilker::exact::{fmt_decimal, int, rat};
use wilker::lang::bundled;
use wilker::prove::{near_zero_certificate, verify_inequality, DifferenceSeries, Side, VerifyOptions};
use wilker::series::Theorem;

fn main() -> wilker::Result<()> {
    let corpus = bundled();
    let spec = corpus.inequality("THM33").expect("bundled stanza");
    let opts = VerifyOptions { x_max: int(10), ..VerifyOptions::default() };
    let r = verify_inequality(spec, &opts)?;
    println!("THM33: {}", r.status);
    if let Some(w) = &r.witness {
        println!(
            "  witness x in [{}, {}], difference at midpoint in {}",
            fmt_decimal(&w.interval.lo_rational(), 8),
            fmt_decimal(&w.interval.hi_rational(), 8),
            w.midpoint_value
        );
    }

    let d = DifferenceSeries::of(Theorem::T33, Side::Lower)?;
    let (n, c) = d.leading()?;
    println!("difference series: leading coefficient {c} at x^{}", d.exponent_of(n));
    let near = near_zero_certificate(Theorem::T33, &rat(1, 10))?;
    println!("near zero: {} ({})", near.status, near.reason.unwrap_or_default());
    Ok(())
}
