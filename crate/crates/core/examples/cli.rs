//! Drives the command-line front end in-process and shows its exit codes.
//!
//! ```text
//! cargo run --release --example cli
//! ```

use wilker::cli::run_with_io;

fn main() {
    let runs: [&[&str]; 4] = [
        &["prove", "--name", "THM31_LO", "--format", "json"],
        &["sequences", "--id", "S_T33_C", "--mode", "increasing", "--nmax", "500"],
        &["bernoulli", "--upto", "12"],
        &["prove", "--corpus", "nosuch.ineq"],
    ];
    for args in runs {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with_io(args.iter().copied(), &mut out, &mut err);
        println!("$ wilker {}\n{}{}exit {code}\n", args.join(" "), String::from_utf8_lossy(&out), String::from_utf8_lossy(&err));
    }
}
