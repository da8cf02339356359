//! Builds the continuous dual q-Hahn polynomials `P_λ` for two particles and
//! prints their exact monomial expansions.
//!
//! cargo run --example polynomials

use rsmorse::combinatorics::part;
use rsmorse::polynomials::{coeff_strings, leading_coeff, rho_hat_point, PolynomialFamily};
use rsmorse::qcore::{format_rational, rat, ParamSet};

fn main() -> rsmorse::Result<()> {
    let params = ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)])?;
    let family = PolynomialFamily::new(2, 3, &params)?;

    for p in family.iter() {
        let terms: Vec<String> = coeff_strings(p).into_iter().map(|(mu, c)| format!("{c}·m{mu}")).collect();
        println!("P{} = {}", p.label(), terms.join(" + "));
    }

    let lam = part(&[2, 1]);
    let p = family.get(&lam)?;
    println!("\nleading coefficient of P{lam}: {}", format_rational(&leading_coeff(&lam, &params)?));
    println!("P{lam}(iρ̂) = {}", format_rational(&p.eval(&rho_hat_point(2, &params))?));
    println!("P{lam}(2, 5/3) = {}", format_rational(&p.eval(&[rat(2, 1), rat(5, 3)])?));
    Ok(())
}
