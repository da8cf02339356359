use std::collections::BTreeMap;

use num_complex::Complex64;

use super::norms::{delta0, norm_ratio};
use super::quadrature::{AlcoveQuadrature, RealPolynomial};
use crate::combinatorics::Partition;
use crate::error::Result;
use crate::latticeop::LatticeFunction;
use crate::polynomials::PolynomialFamily;
use crate::qcore::to_f64;

/// The pair `F`, `F⁻¹` restricted to the labels of a polynomial family.
#[derive(Debug, Clone)]
pub struct FourierPair {
    polys: BTreeMap<Partition, RealPolynomial>,
    norms: BTreeMap<Partition, f64>,
    quad: AlcoveQuadrature,
}

impl FourierPair {
    pub fn new(family: &PolynomialFamily, quad: AlcoveQuadrature, tol: f64) -> Result<Self> {
        let d0 = delta0(&family.params().to_float(), family.n(), tol)?;
        let mut polys = BTreeMap::new();
        let mut norms = BTreeMap::new();
        for p in family.iter() {
            polys.insert(p.label().clone(), RealPolynomial::new(p));
            norms.insert(p.label().clone(), d0 * to_f64(&norm_ratio(p.label(), family.params())?));
        }
        Ok(Self { polys, norms, quad })
    }

    /// `Δ_λ`.
    pub fn norm(&self, lambda: &Partition) -> Option<f64> {
        self.norms.get(lambda).copied()
    }

    /// `ψ_ξ(ρ + λ) = P_λ(ξ)`, real for real `ξ`.
    pub fn psi(&self, lambda: &Partition, xi: &[f64]) -> Option<f64> {
        self.polys.get(lambda).map(|p| p.eval(xi))
    }

    /// `(F f)(ξ) = Σ_λ f(ρ+λ) conj(ψ_ξ(ρ+λ)) Δ_λ`.
    pub fn forward(&self, f: &LatticeFunction<Complex64>, xi: &[f64]) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (lam, v) in f.iter() {
            let (p, d) = self.lookup(lam)?;
            acc += v * p.eval(xi) * d;
        }
        Ok(acc)
    }

    /// `(F⁻¹ f̂)(ρ+λ) = ∫_𝔸 f̂(ξ) ψ_ξ(ρ+λ) Δ̂(ξ) dξ` by quadrature.
    pub fn inverse<F>(&self, fhat: F, lambda: &Partition) -> Result<Complex64>
    where
        F: Fn(&[f64]) -> Complex64 + Sync,
    {
        let (p, _) = self.lookup(lambda)?;
        let re = self.quad.integrate(|xi| fhat(xi).re * p.eval(xi));
        let im = self.quad.integrate(|xi| fhat(xi).im * p.eval(xi));
        Ok(Complex64::new(re, im))
    }

    /// `F⁻¹ F f` on every label of the family.
    pub fn roundtrip(&self, f: &LatticeFunction<Complex64>) -> Result<LatticeFunction<Complex64>> {
        let mut out = LatticeFunction::new(f.n());
        for lam in self.polys.keys() {
            let v = self.inverse(|xi| self.forward(f, xi).unwrap_or_default(), lam)?;
            out.add_at(lam, v)?;
        }
        Ok(out)
    }

    fn lookup(&self, lambda: &Partition) -> Result<(&RealPolynomial, f64)> {
        match (self.polys.get(lambda), self.norms.get(lambda)) {
            (Some(p), Some(&d)) => Ok((p, d)),
            _ => Err(crate::error::Error::OutOfRange(format!("{lambda} is outside the polynomial family"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::part;
    use crate::qcore::{rat, ParamSet, DEFAULT_TOL};
    use crate::spectral::QuadSpec;

    fn pair() -> FourierPair {
        let p = ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(-1, 5)]).unwrap();
        let fam = PolynomialFamily::new(1, 4, &p).unwrap();
        let quad = AlcoveQuadrature::new(1, QuadSpec::default_for(1), &p.to_float(), DEFAULT_TOL).unwrap();
        FourierPair::new(&fam, quad, DEFAULT_TOL).unwrap()
    }

    #[test]
    fn forward_of_delta_zero() {
        let fp = pair();
        let d = LatticeFunction::delta(&part(&[0]));
        let v = fp.forward(&d, &[1.3]).unwrap();
        assert!((v.re - fp.norm(&part(&[0])).unwrap()).abs() < 1e-15 && v.im == 0.0);
    }

    #[test]
    fn roundtrip_and_linearity() {
        let fp = pair();
        for k in 0..=4 {
            let lam = part(&[k]);
            let back = fp.roundtrip(&LatticeFunction::delta(&lam)).unwrap();
            for mu in (0..=4).map(|m| part(&[m])) {
                let target = if mu == lam { 1.0 } else { 0.0 };
                assert!((back.get(&mu) - target).norm() < 1e-6);
            }
        }
        let f = LatticeFunction::from_entries(1, [(part(&[1]), Complex64::new(2.0, -1.0)), (part(&[3]), Complex64::new(0.5, 0.0))]).unwrap();
        let g1 = LatticeFunction::from_entries(1, [(part(&[1]), Complex64::new(2.0, -1.0))]).unwrap();
        let g2 = LatticeFunction::from_entries(1, [(part(&[3]), Complex64::new(0.5, 0.0))]).unwrap();
        let xi = [0.77];
        let lhs = fp.forward(&f, &xi).unwrap();
        let rhs = fp.forward(&g1, &xi).unwrap() + fp.forward(&g2, &xi).unwrap();
        assert!((lhs - rhs).norm() < 1e-13);
    }
}
