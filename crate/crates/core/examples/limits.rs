//! Degenerations of the model: the vanishing Morse coupling, the elementary
//! symmetric identity, and the linear approach to the Ruijsenaars limit.
//!
//! cargo run --example limits

use rsmorse::latticeop::{elementary_identity_residual, morse_vanishing_limit_check, ruijsenaars_limit_check};
use rsmorse::qcore::{format_rational, rat, ParamSet};

fn main() -> rsmorse::Result<()> {
    let params = ParamSet::with_vanishing_that2(rat(1, 3), rat(1, 2), rat(1, 2), rat(1, 3))?;
    let report = morse_vanishing_limit_check(&params, 2, 4)?;
    println!("vanishing Morse term: {} sites, passed {}", report.sites_checked, report.passed());

    let z = [rat(2, 3), rat(5, 4), rat(-3, 7)];
    println!("elementary identity residual: {}", format_rational(&elementary_identity_residual(&z, &rat(1, 2))?));

    let r = ruijsenaars_limit_check([1e-3, 1e-5], 2, 0.3, 0.6, 4);
    println!("w± errors at ε = {:?}: {:?} / {:?}", r.eps, r.err_plus, r.err_minus);
    println!("ratio {:.3} (expected {:.0}), linear: {}", r.ratio, r.expected_ratio, r.is_linear(0.1));
    Ok(())
}
