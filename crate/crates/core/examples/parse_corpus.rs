//! Parses expressions and walks the bundled inequality corpus.
//!
//! ```text
//! cargo run --example parse_corpus
//! ```

use wilker::exact::{fmt_rational, parse_rational};
use wilker::lang::{bundled, eval_const, parse_expression};

fn main() -> wilker::Result<()> {
    let e = parse_expression("2*sin(x) + tan(x) - 3*x")?;
    println!("parsed: {e}");
    println!("0.15 = {}", fmt_rational(&parse_rational("0.15")?));
    println!("(8*pi-24)/pi^3 in {}", eval_const(&parse_expression("(8*pi-24)/pi^3")?, 128)?);

    if let Err(err) = parse_expression("sin(x") {
        println!("error: {err}");
    }

    let corpus = bundled();
    println!("\n{} inequalities", corpus.inequalities.len());
    for spec in &corpus.inequalities {
        println!("  {:<12} {}  {}", spec.name, spec.relation, spec.difference());
    }
    println!("{} sequence checks, {} identity checks", corpus.sequences.len(), corpus.identities.len());
    Ok(())
}
