//! Cross-module identities tying the lattice side, the dual side and the
//! spectral side together.

use num_complex::Complex64;
use proptest::prelude::*;
use rsmorse::combinatorics::{eval_ehat_l, part, Partition};
use rsmorse::latticeop::{apply_hl, hl_row};
use rsmorse::polynomials::{PolynomialFamily, QHahnPolynomial};
use rsmorse::qcore::{rat, ParamSet, Rational};
use rsmorse::spectral::RealPolynomial;

fn params() -> ParamSet {
    ParamSet::from_hat(rat(2, 7), rat(3, 5), [rat(1, 3), rat(-2, 5), rat(1, 6)]).unwrap()
}

fn cos_point(xi: &[f64]) -> Vec<Complex64> {
    xi.iter().map(|&x| Complex64::from_polar(1.0, x)).collect()
}

fn eval_at(p: &QHahnPolynomial, xi: &[f64]) -> f64 {
    p.eval(&cos_point(xi)).unwrap().re
}

/// `(H_l ψ_ξ)(λ) = Ê_l(ξ) ψ_ξ(λ)` with `ψ_ξ(λ) = P_λ(e^{iξ})`, in floating point.
#[test]
fn plane_waves_diagonalize_the_integrals() {
    let p = params();
    let family = PolynomialFamily::new(2, 6, &p).unwrap();
    for xi in [[2.3, 0.4], [1.1, 0.9], [3.0, 0.05]] {
        for lam in Partition::all_up_to_weight(2, 4) {
            for l in 1..=2 {
                let lhs: f64 = hl_row(l, &lam, &p)
                    .unwrap()
                    .into_iter()
                    .map(|(mu, c)| rsmorse::qcore::to_f64(&c) * eval_at(family.get(&mu).unwrap(), &xi))
                    .sum();
                let rhs = eval_ehat_l(l, &xi, &p).unwrap() * eval_at(family.get(&lam).unwrap(), &xi);
                assert!((lhs - rhs).abs() < 1e-9 * (1.0 + rhs.abs()), "λ={lam} l={l} ξ={xi:?}: {lhs} vs {rhs}");
            }
        }
    }
}

#[test]
fn real_evaluation_agrees_with_complex() {
    let p = params();
    let family = PolynomialFamily::new(3, 3, &p).unwrap();
    let xi = [2.9, 1.3, 0.2];
    for poly in family.iter() {
        let real = RealPolynomial::new(poly).eval(&xi);
        assert!((real - eval_at(poly, &xi)).abs() < 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The integrals are linear: `H_l(a f + g) = a H_l f + H_l g` on random
    /// finitely supported functions.
    #[test]
    fn integrals_are_linear(a in -5i64..5, seeds in proptest::collection::vec((0u32..4, 0u32..4, -9i64..9), 1..5), l in 1usize..=2) {
        let p = params();
        let mk = |shift: u32| {
            let mut f = rsmorse::latticeop::LatticeFunction::<Rational>::new(2);
            for &(x, y, c) in &seeds {
                let (hi, lo) = if x >= y { (x, y) } else { (y, x) };
                f.add_at(&part(&[hi + shift, lo]), rat(c, 1)).unwrap();
            }
            f
        };
        let (f, g) = (mk(0), mk(1));
        let lhs = apply_hl(l, &f.scaled(&rat(a, 1)).add(&g).unwrap(), &p).unwrap();
        let rhs = apply_hl(l, &f, &p).unwrap().scaled(&rat(a, 1)).add(&apply_hl(l, &g, &p).unwrap()).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
    }
}
