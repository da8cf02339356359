//! The dual q-difference operators `Ĥ_l` on W-invariant Laurent polynomials:
//! their triangular matrices in the monomial basis, mutual commutativity, and
//! the eigenvalue equation for `P_λ`.
//!
//! cargo run --example dual_operator

use rsmorse::combinatorics::{eval_e_l, part};
use rsmorse::dualop::{apply_hhat_l, matrix_in_monomial_basis, InvariantPolynomial};
use rsmorse::polynomials::{build_p, dual_eigen_residual};
use rsmorse::qcore::{format_rational, rat, ParamSet};

fn main() -> rsmorse::Result<()> {
    let params = ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)])?;
    let root = part(&[2, 0]);

    let h1 = matrix_in_monomial_basis(1, &root, &params)?;
    let h2 = matrix_in_monomial_basis(2, &root, &params)?;
    println!("basis {:?}", h1.basis());
    for mu in h1.basis() {
        let row: Vec<String> = h1.basis().iter().map(|nu| format_rational(&h1.get(mu, nu))).collect();
        println!("  Ĥ_1 m{mu} -> [{}]", row.join(", "));
    }
    println!("triangular: {}, {}", h1.is_triangular(), h2.is_triangular());
    println!("[Ĥ_1, Ĥ_2] = 0 on the ideal: {}", h1.commutes_with(&h2)?);

    let image = apply_hhat_l(1, &InvariantPolynomial::monomial(&part(&[1, 1])), &params)?;
    println!("Ĥ_1 m(1,1) = {}", serde_json::to_string(&image.coeffs_json())?);

    let p = build_p(&root, &params)?;
    for l in 1..=2 {
        println!(
            "E_{{λ,{l}}} = {}, eigen-residual zero: {}",
            format_rational(&eval_e_l(&root, l, &params)?),
            dual_eigen_residual(&p, l)?.is_zero()
        );
    }
    Ok(())
}
