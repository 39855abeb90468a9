//! Endpoint limits of the five theorem ratios against the best constants.
//!
//! ```text
//! cargo run --example sharp_constants
//! ```

use wilker::exact::fmt_rational;
use wilker::prove::{limit_report, Endpoint};
use wilker::series::Theorem;

fn main() -> wilker::Result<()> {
    for thm in Theorem::ALL {
        for endpoint in [Endpoint::Zero, Endpoint::Right] {
            if endpoint == Endpoint::Right && thm.is_hyperbolic() {
                continue;
            }
            let r = limit_report(thm, endpoint)?;
            let value = match &r.value_exact {
                Some(q) => fmt_rational(q),
                None => r.value_enclosure.to_string(),
            };
            println!("{thm} {:<5} {:<26} {value}  match={}", endpoint.name(), r.paper_value, r.matches_paper);
            if let Some(x) = &r.cross_check {
                println!("      ratio evaluated at pi/2: {x}");
            }
        }
    }
    Ok(())
}
