//! Checks the Pieri formulas `Ê_l P_λ = Σ (H_l)_{λμ} P_μ` exactly at random
//! rational points.
//!
//! cargo run --example pieri

use rsmorse::dualop::sample_points;
use rsmorse::latticeop::hl_row;
use rsmorse::polynomials::PolynomialFamily;
use rsmorse::qcore::{format_rational, rat, ParamSet};

fn main() -> rsmorse::Result<()> {
    let params = ParamSet::from_hat(rat(2, 5), rat(1, 3), [rat(1, 4), rat(-1, 2), rat(1, 7)])?;
    let n = 2;
    let family = PolynomialFamily::new(n, 5, &params)?;
    let points = sample_points(n, 3, 7);

    for lam in [rsmorse::combinatorics::part(&[1, 0]), rsmorse::combinatorics::part(&[2, 1])] {
        for l in 1..=n {
            let row = hl_row(l, &lam, &params)?;
            println!("H_{l} at {lam}: {} neighbours", row.len());
            for z in &points {
                let r = family.pieri_residual(&lam, l, z)?;
                println!("  residual at z = {:?}: {}", z.iter().map(format_rational).collect::<Vec<_>>(), format_rational(&r));
            }
        }
    }
    Ok(())
}
