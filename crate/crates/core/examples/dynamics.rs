//! Unitary time evolution on the truncated lattice after conjugating `H` to
//! a symmetric matrix.
//!
//! cargo run --release --example dynamics

use num_complex::Complex64;
use rsmorse::combinatorics::part;
use rsmorse::latticeop::LatticeFunction;
use rsmorse::qcore::{rat, ParamSet};
use rsmorse::spectral::{conjugated_h_matrix, max_distance, Propagator};

fn main() -> rsmorse::Result<()> {
    let params = ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)])?;
    let conj = conjugated_h_matrix(1, 2, 12, &params)?;
    println!(
        "{} sites, exactly symmetric: {}, Gershgorin bound {:.4}",
        conj.basis().len(),
        conj.is_exactly_symmetric(),
        conj.gershgorin_bound()
    );
    let spec = conj.eigenvalues();
    println!("spectrum in [{:.6}, {:.6}]", spec[0], spec[spec.len() - 1]);

    let prop = Propagator::new(conj);
    let psi0 = LatticeFunction::from_entries(2, [(part(&[1, 0]), Complex64::new(1.0, 0.0))])?;
    for t in [0.5, 1.0, 2.0, 4.0] {
        let e = prop.evolve(&psi0, t)?;
        println!("t = {t}: norm {:.14}, boundary mass {:.2e}", e.norm, e.boundary_mass);
    }
    let direct = prop.evolve(&psi0, 1.5)?.state;
    let composed = prop.evolve(&prop.evolve(&psi0, 0.5)?.state, 1.0)?.state;
    println!("U(1)U(0.5) vs U(1.5): {:.2e}", max_distance(&direct, &composed));
    Ok(())
}
