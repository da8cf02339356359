//! The lattice Hamiltonian `H` and the higher integrals `H_l` acting on
//! finitely supported functions on the dominant lattice.
//!
//! cargo run --example lattice_hamiltonian

use rsmorse::combinatorics::part;
use rsmorse::latticeop::{apply_h, apply_hl, commutator_on_delta, epsilon0, h_row, LatticeFunction};
use rsmorse::qcore::{format_rational, rat, ParamSet, Rational};

fn main() -> rsmorse::Result<()> {
    let params = ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)])?;
    let lam = part(&[1, 0, 0]);

    println!("(H f)(λ) = Σ c f(target) at λ = {lam}:");
    for (target, c) in h_row(&lam, &params)? {
        println!("  {target}: {}", format_rational(&c));
    }
    println!("ε₀ = {}", format_rational(&epsilon0(&params, 3)));

    let f: LatticeFunction<Rational> = LatticeFunction::delta(&part(&[2, 1, 0]));
    println!("H δ(2,1,0) has support {}", apply_h(&f, &params)?.len());
    println!("H_2 δ(2,1,0) has support {}", apply_hl(2, &f, &params)?.len());

    for (l, m) in [(1, 2), (1, 3), (2, 3)] {
        let c = commutator_on_delta(l, m, &part(&[1, 1, 0]), &params)?;
        println!("[H_{l}, H_{m}] δ(1,1,0) = 0: {}", c.is_zero());
    }
    Ok(())
}
