//! The Fourier pair between the lattice and the alcove: transform a lattice
//! function, transform back by quadrature, and compare.
//!
//! cargo run --release --example fourier

use num_complex::Complex64;
use rsmorse::combinatorics::part;
use rsmorse::latticeop::LatticeFunction;
use rsmorse::polynomials::PolynomialFamily;
use rsmorse::qcore::{rat, ParamSet, DEFAULT_TOL};
use rsmorse::spectral::{max_distance, AlcoveQuadrature, FourierPair, QuadSpec};

fn main() -> rsmorse::Result<()> {
    let params = ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)])?;
    let family = PolynomialFamily::new(1, 4, &params)?;
    let quad = AlcoveQuadrature::new(1, QuadSpec::default_for(1), &params.to_float(), DEFAULT_TOL)?;
    let fourier = FourierPair::new(&family, quad, DEFAULT_TOL)?;

    let f = LatticeFunction::from_entries(
        1,
        [
            (part(&[0]), Complex64::new(1.0, 0.0)),
            (part(&[2]), Complex64::new(-0.5, 0.25)),
            (part(&[4]), Complex64::new(0.0, 2.0)),
        ],
    )?;
    for xi in [0.4, 1.5, 2.9] {
        println!("(F f)({xi}) = {:.10}", fourier.forward(&f, &[xi])?);
    }
    let back = fourier.roundtrip(&f)?;
    for (lam, v) in back.iter() {
        println!("F⁻¹F f at {lam}: {v:.10}");
    }
    println!("max deviation {:.2e}", max_distance(&f, &back));
    Ok(())
}
