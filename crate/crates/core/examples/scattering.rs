//! The factorized scattering matrix `Ŝ(ξ)`: unimodularity, the sorting
//! gradient-sorting permutation, and a phase table.
//!
//! cargo run --example scattering

use rsmorse::qcore::{rat, ParamSet, DEFAULT_TOL};
use rsmorse::scattering::{free_kernel_residual, s_hat, sorting_permutation, write_phase_csv};
use rsmorse::spectral::AlcovePoint;

fn main() -> rsmorse::Result<()> {
    let params = ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)])?;
    let fp = params.to_float();

    let xi = AlcovePoint::new(vec![2.5, 1.2, 0.3])?;
    let s = s_hat(&xi, &fp, DEFAULT_TOL)?;
    println!("Ŝ{:?} = {s:.12}, |Ŝ| - 1 = {:.2e}", xi.xi(), s.norm() - 1.0);

    let sp = sorting_permutation(&xi);
    println!("regular: {}, sorted argument {:?}", sp.regular, sp.sorted_argument());
    if let Some(v) = sp.s_hat(&fp, DEFAULT_TOL)? {
        println!("Ŝ at the sorted argument = {v:.12}");
    }
    let tied = AlcovePoint::new(vec![std::f64::consts::PI - 1.0, 1.0, 0.5])?;
    println!("(π-1, 1, 0.5) regular: {}", sorting_permutation(&tied).regular);

    let lam = rsmorse::combinatorics::part(&[2, 1, 0]);
    println!("free kernel residual at {lam}: {:.2e}", free_kernel_residual(xi.xi(), &lam)?.norm());

    let points = vec![vec![2.0, 1.0, 0.5], vec![3.0, 2.0, 0.1], vec![1.5, 1.4, 1.3]];
    write_phase_csv(&points, &fp, DEFAULT_TOL, std::io::stdout())?;
    Ok(())
}
