//! Orthogonality of `P_λ` against the weight `Δ̂` on the alcove, by tensor
//! Gauss-Legendre quadrature, compared with the exact quadratic norms.
//!
//! cargo run --release --example orthogonality

use rsmorse::combinatorics::Partition;
use rsmorse::polynomials::PolynomialFamily;
use rsmorse::qcore::{rat, ParamSet, DEFAULT_TOL};
use rsmorse::spectral::{orthogonality_report, AlcoveQuadrature, QuadSpec};

fn main() -> rsmorse::Result<()> {
    let params = ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)])?;
    for (n, w) in [(1usize, 6u32), (2, 3)] {
        let family = PolynomialFamily::new(n, w, &params)?;
        let quad = AlcoveQuadrature::new(n, QuadSpec::default_for(n), &params.to_float(), DEFAULT_TOL)?;
        let labels: Vec<Partition> = family.iter().map(|p| p.label().clone()).collect();
        let rows = orthogonality_report(&family, &labels, &quad, DEFAULT_TOL)?;
        let worst = rows.iter().max_by(|a, b| a.rel_err.total_cmp(&b.rel_err)).expect("nonempty");
        println!("n = {n}, {} pairs, {} nodes", rows.len(), quad.len());
        for r in rows.iter().filter(|r| r.lambda == r.mu).take(4) {
            println!("  ⟨P{0}, P{0}⟩ = {1:.12e}  (1/Δ = {2:.12e})", r.lambda, r.value, r.target);
        }
        println!("  worst relative error {:.2e} at ({}, {})", worst.rel_err, worst.lambda, worst.mu);
    }
    Ok(())
}
