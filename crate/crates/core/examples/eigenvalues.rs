//! Eigenvalues of the integrals: `E(λ)`, the elementary-type `E_{λ,l}`, the
//! spectral functions `Ê_l(ξ)`, and the recurrence for `E_{l,n}`.
//!
//! cargo run --example eigenvalues

use rsmorse::combinatorics::{eln_recurrence_residual, eval_e, eval_e_l, eval_ehat, eval_ehat_l, part};
use rsmorse::qcore::{format_rational, rat, ParamSet};

fn main() -> rsmorse::Result<()> {
    let params = ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)])?;
    for lam in [part(&[0, 0]), part(&[1, 0]), part(&[2, 1]), part(&[3, 3])] {
        println!(
            "λ = {lam}: E = {}, E_1 = {}, E_2 = {}",
            format_rational(&eval_e(&lam, &params)),
            format_rational(&eval_e_l(&lam, 1, &params)?),
            format_rational(&eval_e_l(&lam, 2, &params)?)
        );
    }

    let xi = [2.1, 0.7];
    println!("\nÊ(ξ) = {:.12} at ξ = {xi:?}", eval_ehat(&xi, &params));
    for l in 1..=2 {
        println!("Ê_{l}(ξ) = {:.12}", eval_ehat_l(l, &xi, &params)?);
    }

    let z = [rat(3, 2), rat(-2, 7), rat(5, 1)];
    let y = [rat(1, 3), rat(4, 1), rat(-1, 2)];
    for l in 1..=3 {
        let r = eln_recurrence_residual(l, &z, &y[..4 - l])?;
        println!("E_{{{l},3}} recurrence residual: {}", format_rational(&r));
    }
    Ok(())
}
