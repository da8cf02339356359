//! Runs every verification suite with small sizes and prints a summary.
//!
//! cargo run --release --example verify_suites

use rsmorse::qcore::{rat, ParamSet};
use rsmorse::verify::{run_suite, Suite, SuiteOptions};

fn main() -> rsmorse::Result<()> {
    let params = ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)])?;
    let opts = SuiteOptions { n: 2, max_weight: 3, seed: 1, levels: None, points: 2 };
    for name in ["pieri", "qdiff", "commute", "nonneg", "limits", "balance"] {
        let suite: Suite = name.parse()?;
        let report = run_suite(suite, &opts, &params)?;
        println!("{name:8} {:4} passed {:4} failed", report.passed, report.failed);
    }
    Ok(())
}
