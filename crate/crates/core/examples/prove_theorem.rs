//! Proves one sharp inequality: interval bisection on the compact core and
//! a series certificate on the margin at zero. The certificate is then
//! re-checked at doubled precision.
//!
//! ```text
//! cargo run --release --example prove_theorem [NAME]
//! ```

use wilker::lang::bundled;
use wilker::prove::{core_domain, recheck_certificate, verify_inequality, VerifyOptions};

fn main() -> wilker::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "THM31_LO".to_string());
    let corpus = bundled();
    let spec = corpus.inequality(&name).expect("no such stanza");
    let opts = VerifyOptions::default();

    let r = verify_inequality(spec, &opts)?;
    println!("{name}: {} ({} leaves, depth {}, {:?})", r.status, r.stats.leaves, r.stats.max_depth, r.stats.elapsed);
    for f in &r.findings {
        println!("  {f}");
    }

    let domain = core_domain(spec, &opts)?;
    let ok = recheck_certificate(
        &spec.difference(),
        &domain,
        &r.certificate,
        opts.prove.taylor_order,
        2 * opts.prove.precision,
    );
    println!("certificate re-checked at {} bits: {ok}", 2 * opts.prove.precision);
    Ok(())
}
