//! Randomized self-checks of the library, as run by `polyprod verify`.
//!
//! Run with `cargo run --release --example verify_suites`.

use polyprod::cli::{run_suite, Suite, VerifyConfig};

fn main() -> polyprod::Result<()> {
    let cfg = VerifyConfig { max_vertices: 5, trials: 25, seed: 1 };
    let mut all = true;
    for suite in Suite::ALL {
        let report = run_suite(suite, &cfg)?;
        println!("{:<22} {}/{} passed", suite.name(), cfg.trials - report.failures(), cfg.trials);
        all &= report.passed();
    }
    println!("{}", if all { "all suites passed" } else { "some suites failed" });
    Ok(())
}
