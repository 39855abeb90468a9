//! Exact rational checks of the coefficient sequences and difference
//! identities that the monotonicity arguments rest on.
//!
//! ```text
//! cargo run --example exact_checks
//! ```

use wilker::exact::fmt_rational;
use wilker::prove::{identity_check, sequence_check, IdentityId, SequenceId, SequenceMode};

fn main() -> wilker::Result<()> {
    let runs = [
        ("S_T31", SequenceMode::Positive, None, 200),
        ("S_T32_B", SequenceMode::Increasing, None, 100),
        ("S_T33_C", SequenceMode::Increasing, None, 100),
        ("S_T33_C", SequenceMode::Increasing, Some(3), 500),
        ("S_T34_C", SequenceMode::Increasing, None, 200),
    ];
    for (id, mode, n_min, n_max) in runs {
        let r = sequence_check(id.parse::<SequenceId>()?, mode, n_min, n_max)?;
        let verdict = match &r.first_violation {
            Some((n, v)) => format!("violation at n={n}: {}", fmt_rational(v)),
            None => "all pass".to_string(),
        };
        println!("{id:<8} {:<10} n in {:?}: {verdict}", mode.name(), r.n_range);
    }

    for id in ["ID_T32_BDIFF", "ID_T33_CDIFF", "ID_T34_FDECOMP", "ID_T34_POLYS"] {
        let id: IdentityId = id.parse()?;
        let n_max = if id.start() >= 6 { 200 } else { 500 };
        let r = identity_check(id, n_max)?;
        println!("\n{} holds={} on {:?}", id.name(), r.holds, r.n_range);
        for s in &r.signs {
            let failures: Vec<String> = s.failures.iter().map(|(n, v)| format!("n={n} ({})", fmt_rational(v))).collect();
            println!("  sign of {}: failures [{}]", s.label, failures.join(", "));
        }
    }
    Ok(())
}
