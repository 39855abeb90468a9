//! Power-series coefficients of the trigonometric and hyperbolic building
//! blocks, with a rigorous tail bound and a series evaluation checked
//! against direct interval evaluation.
//!
//! ```text
//! cargo run --example lemma_series
//! ```

use wilker::exact::{fmt_decimal, fmt_rational, rat};
use wilker::interval::Interval;
use wilker::lang::{eval_expr, parse_expression};
use wilker::series::{eval_series, lemma_coeff, tail_bound, CoeffSeq, LemmaKind};

fn main() -> wilker::Result<()> {
    for kind in LemmaKind::ALL {
        let seq = CoeffSeq::lemma(kind);
        let coeffs: Vec<String> = (seq.start..seq.start + 4)
            .map(|n| lemma_coeff(kind, n).map(|c| fmt_rational(&c)))
            .collect::<Result<_, _>>()?;
        println!("{:<14} {:<10} {}", kind.name(), seq.singular_part(), coeffs.join(", "));
    }

    let seq = CoeffSeq::lemma(LemmaKind::XOverSin);
    let x = rat(1, 2);
    println!("\nx/sin x, tail after n = 10 at x = 1/2: <= {}", fmt_decimal(&tail_bound(&seq, 10, &x)?, 6));

    let xi = Interval::from_rational(&x, 128);
    let by_series = eval_series(&seq, &xi, 10, true, 128)?;
    let direct = eval_expr(&parse_expression("x/sin(x)")?, &xi, 128)?;
    println!("series  {by_series}");
    println!("direct  {direct}");
    assert!(by_series.intersect(&direct).is_some());
    Ok(())
}
