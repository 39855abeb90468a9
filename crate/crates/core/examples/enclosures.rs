//! Rigorous enclosures of π and of the six elementary functions.
//!
//! ```text
//! cargo run --example enclosures
//! ```

use wilker::exact::{fmt_decimal, parse_rational};
use wilker::interval::{elem_enclose, pi_enclose, ElemFn, Interval};

fn main() -> wilker::Result<()> {
    let pi = pi_enclose(&parse_rational("1e-40")?)?;
    println!("pi in [{}, {}]", fmt_decimal(&pi.lo, 45), fmt_decimal(&pi.hi, 45));

    let x = Interval::from_rational(&parse_rational("0.75")?, 192);
    let target = parse_rational("1e-30")?;
    for f in ElemFn::ALL {
        println!("{:<5}(0.75) in {}", f.name(), elem_enclose(f, &x, &target)?);
    }

    // wide arguments give wide but still guaranteed results
    let wide = Interval::from_rationals(&parse_rational("1.5")?, &parse_rational("1.57")?, 128)?;
    println!("tan([1.5, 1.57]) in {}", ElemFn::Tan.eval(&wide, 128)?);
    Ok(())
}
