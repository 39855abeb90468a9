//! Sampled monotonicity of the theorem ratios. This corroborates the
//! monotone-ratio arguments but proves nothing.
//!
//! ```text
//! cargo run --release --example scan
//! ```

use wilker::cli::default_scan_domain;
use wilker::exact::parse_rational;
use wilker::prove::scan_extremum;
use wilker::series::Theorem;

fn main() -> wilker::Result<()> {
    let tol = parse_rational("1e-6")?;
    for thm in Theorem::ALL {
        let (lo, hi) = default_scan_domain(thm);
        let r = scan_extremum(thm, &lo, &hi, &tol)?;
        println!(
            "{thm}: monotone={:<5} min {} at x ~ {:.6}",
            r.sampled_monotone,
            r.min_value,
            r.argmin.to_f64()
        );
    }
    Ok(())
}
