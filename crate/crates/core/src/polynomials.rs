//! Multivariate continuous dual q-Hahn polynomials `P_λ`, built by a
//! triangular eigen-solve of `Ĥ` in the monomial basis, and the lattice wave
//! function `ψ_ξ(ρ + λ) = P_λ(ξ)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::json;

use crate::combinatorics::{ehat_l_from_cos, eval_e, eval_e_l, ideal, Partition};
use crate::dualop::{apply_hhat_l, matrix_on_downset, InvariantPolynomial, TriangularMatrix, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::latticeop::hl_row;
use crate::qcore::{format_rational, qpoch_finite, ParamSet, Rational, Scalar};

#[derive(Debug, Clone)]
pub struct QHahnPolynomial {
    label: Partition,
    poly: InvariantPolynomial,
    params: ParamSet,
}

impl QHahnPolynomial {
    pub fn label(&self) -> &Partition {
        &self.label
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    /// Coefficients `c_{λμ}` in the monomial basis.
    pub fn polynomial(&self) -> &InvariantPolynomial {
        &self.poly
    }

    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.poly.coeff(mu)
    }

    /// `P_λ(z)` with `z_j = e^{iξ_j}`.
    pub fn eval<T: Scalar>(&self, z: &[T]) -> Result<T> {
        self.poly.eval(z)
    }

    /// `{n, params, lambda, coeffs: [{mu, value}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.label.n(),
            "params": self.params.record(),
            "lambda": self.label,
            "coeffs": self.poly.coeffs_json(),
        })
    }
}

/// `c_{λλ}`.
pub fn leading_coeff(lambda: &Partition, params: &ParamSet) -> Result<Rational> {
    let n = lambda.n();
    let (q, t) = (params.q(), params.t());
    let th = params.that();
    let mut c = Rational::one();
    for j in 1..=n {
        let lj = lambda.part(j);
        let tn = t.pow((n - j) as i32);
        let den = qpoch_finite(&(&th[0] * &th[1] * &tn), lj, q) * qpoch_finite(&(&th[0] * &th[2] * &tn), lj, q);
        if den.is_zero() {
            return Err(Error::Degenerate(format!("vanishing Pochhammer symbol in the leading coefficient of {lambda}")));
        }
        c *= (&th[0] * &tn).pow(lj as i32) / den;
    }
    for j in 1..=n {
        for k in j + 1..=n {
            let d = lambda.part(j) - lambda.part(k);
            let den = qpoch_finite(&t.pow((1 + k - j) as i32), d, q);
            if den.is_zero() {
                return Err(Error::Degenerate(format!("vanishing Pochhammer symbol in the leading coefficient of {lambda}")));
            }
            c *= qpoch_finite(&t.pow((k - j) as i32), d, q) / den;
        }
    }
    Ok(c)
}

/// The point `z = e^{i·iρ̂}`, i.e. `z_j = (t^{n-j} t̂₀)⁻¹`.
pub fn rho_hat_point(n: usize, params: &ParamSet) -> Vec<Rational> {
    (1..=n).map(|j| (params.t().pow((n - j) as i32) * params.that0()).recip()).collect()
}

/// `P_λ` from a matrix of `Ĥ₁` whose basis contains the ideal of `λ`.
pub fn build_p_from_matrix(lambda: &Partition, matrix: &TriangularMatrix, params: &ParamSet) -> Result<QHahnPolynomial> {
    if matrix.level() != 1 {
        return Err(Error::Mismatch(format!("construction needs the matrix of Ĥ₁, got Ĥ_{}", matrix.level())));
    }
    if !matrix.is_triangular() {
        return Err(Error::Structure(format!("matrix of Ĥ₁ failed its checks: {:?}", matrix.failures())));
    }
    let members = ideal(lambda).members().to_vec();
    if members.iter().any(|mu| matrix.basis().binary_search_by(|b| b.graded_cmp(mu)).is_err()) {
        return Err(Error::OutOfRange(format!("matrix basis does not cover the ideal of {lambda}")));
    }
    let e = eval_e(lambda, params);
    let mut u: BTreeMap<Partition, Rational> = BTreeMap::new();
    u.insert(lambda.clone(), Rational::one());
    for nu in members.iter().rev().filter(|nu| *nu != lambda) {
        let gap = &e - matrix.diagonal(nu);
        if gap.is_zero() {
            return Err(Error::Degenerate(format!("eigenvalue collision E_{nu} = E_{lambda}")));
        }
        let s: Rational = u.iter().map(|(mu, c)| c * matrix.get(mu, nu)).sum();
        u.insert(nu.clone(), s / gap);
    }
    let c = leading_coeff(lambda, params)?;
    let poly = InvariantPolynomial::from_coeffs(lambda.n(), u.into_iter().map(|(mu, v)| (mu, v * &c)))?;
    Ok(QHahnPolynomial { label: lambda.clone(), poly, params: params.clone() })
}

pub fn build_p(lambda: &Partition, params: &ParamSet) -> Result<QHahnPolynomial> {
    let m = matrix_on_downset(1, ideal(lambda).members(), params, DEFAULT_SEED)?;
    build_p_from_matrix(lambda, &m, params)
}

/// `P_λ(z)`.
pub fn evaluate_p<T: Scalar>(poly: &QHahnPolynomial, z: &[T]) -> Result<T> {
    poly.eval(z)
}

/// `Ĥ_l P_λ - E_{λ,l} P_λ`, expected to vanish.
pub fn dual_eigen_residual(poly: &QHahnPolynomial, l: usize) -> Result<InvariantPolynomial> {
    let image = apply_hhat_l(l, &poly.poly, &poly.params)?;
    image.sub(&poly.poly.scaled(&eval_e_l(&poly.label, l, &poly.params)?))
}

/// All `P_λ` with `|λ| ≤ max_weight`, sharing one matrix of `Ĥ₁`.
#[derive(Debug, Clone)]
pub struct PolynomialFamily {
    n: usize,
    max_weight: u32,
    params: ParamSet,
    matrix: TriangularMatrix,
    polys: BTreeMap<Partition, QHahnPolynomial>,
}

impl PolynomialFamily {
    pub fn new(n: usize, max_weight: u32, params: &ParamSet) -> Result<Self> {
        Self::with_seed(n, max_weight, params, DEFAULT_SEED)
    }

    pub fn with_seed(n: usize, max_weight: u32, params: &ParamSet, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("n must be positive".into()));
        }
        let basis = Partition::all_up_to_weight(n, max_weight);
        let matrix = matrix_on_downset(1, &basis, params, seed)?;
        let polys = basis
            .iter()
            .map(|lam| Ok((lam.clone(), build_p_from_matrix(lam, &matrix, params)?)))
            .collect::<Result<_>>()?;
        Ok(Self { n, max_weight, params: params.clone(), matrix, polys })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    /// The shared matrix of `Ĥ₁`.
    pub fn matrix(&self) -> &TriangularMatrix {
        &self.matrix
    }

    pub fn get(&self, lambda: &Partition) -> Result<&QHahnPolynomial> {
        self.polys
            .get(lambda)
            .ok_or_else(|| Error::OutOfRange(format!("{lambda} is not in the family of weight ≤ {}", self.max_weight)))
    }

    pub fn iter(&self) -> impl Iterator<Item = &QHahnPolynomial> {
        self.polys.values()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// `(H_l ψ_ξ)(ρ + λ) - Ê_l(ξ) ψ_ξ(ρ + λ)` at `e^{iξ} = z`; exact for
    /// rational `z`.
    pub fn pieri_residual(&self, lambda: &Partition, l: usize, z: &[Rational]) -> Result<Rational> {
        if z.len() != self.n {
            return Err(Error::Mismatch(format!("point has {} coordinates, expected {}", z.len(), self.n)));
        }
        let mut lhs = Rational::zero();
        for (mu, c) in hl_row(l, lambda, &self.params)? {
            lhs += c * self.get(&mu)?.eval(z)?;
        }
        let two = Rational::from_integer(2.into());
        let cos: Vec<Rational> = z.iter().map(|x| (x + x.recip()) / &two).collect();
        let ehat = ehat_l_from_cos(l, &cos, &self.params)?;
        Ok(lhs - ehat * self.get(lambda)?.eval(z)?)
    }
}

/// Stand-alone form of [`PolynomialFamily::pieri_residual`].
pub fn pieri_residual(lambda: &Partition, l: usize, z: &[Rational], params: &ParamSet) -> Result<Rational> {
    PolynomialFamily::new(lambda.n(), lambda.weight() + l as u32, params)?.pieri_residual(lambda, l, z)
}

/// Tables of `P_λ` as a JSON array.
pub fn family_json(family: &PolynomialFamily) -> serde_json::Value {
    serde_json::Value::Array(family.iter().map(QHahnPolynomial::to_json).collect())
}

/// `c_{λμ}` as strings, for display.
pub fn coeff_strings(poly: &QHahnPolynomial) -> Vec<(Partition, String)> {
    poly.poly.coeffs().map(|(mu, c)| (mu.clone(), format_rational(c))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::part;
    use crate::qcore::{int, rat};

    fn params() -> ParamSet {
        ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(-1, 5)]).unwrap()
    }

    #[test]
    fn leading_coefficients() {
        let p = params();
        assert_eq!(leading_coeff(&part(&[0, 0]), &p).unwrap(), int(1));
        let expected = rat(1, 2) / ((int(1) - rat(1, 6)) * (int(1) + rat(1, 10)));
        assert_eq!(leading_coeff(&part(&[1]), &p).unwrap(), expected);
        // n = 2, λ = (1,0): c = t̂₀t/((t̂₀t̂₁t)₁(t̂₀t̂₂t)₁) · (t)₁/(t²)₁
        let t = rat(1, 2);
        let two = (rat(1, 2) * &t) / ((int(1) - rat(1, 6) * &t) * (int(1) + rat(1, 10) * &t)) * (int(1) - &t)
            / (int(1) - &t * &t);
        assert_eq!(leading_coeff(&part(&[1, 0]), &p).unwrap(), two);
    }

    #[test]
    fn first_polynomials() {
        let p = params();
        let p0 = build_p(&part(&[0]), &p).unwrap();
        assert_eq!(p0.eval(&[rat(7, 3)]).unwrap(), int(1));
        let p1 = build_p(&part(&[1]), &p).unwrap();
        assert_eq!(p1.polynomial().len(), 2);
        assert!(dual_eigen_residual(&p1, 1).unwrap().is_zero());
        assert_eq!(p1.eval(&rho_hat_point(1, &p)).unwrap(), int(1));
        let p10 = build_p(&part(&[1, 0]), &p).unwrap();
        assert!(dual_eigen_residual(&p10, 1).unwrap().is_zero());
        assert!(dual_eigen_residual(&p10, 2).unwrap().is_zero());
    }

    #[test]
    fn family_normalization_and_pieri() {
        let p = params();
        let fam = PolynomialFamily::new(2, 5, &p).unwrap();
        let rho = rho_hat_point(2, &p);
        for poly in fam.iter() {
            assert_eq!(poly.eval(&rho).unwrap(), int(1), "{}", poly.label());
            assert_eq!(poly.coeff(poly.label()), leading_coeff(poly.label(), &p).unwrap());
        }
        let z = [rat(3, 7), rat(-11, 5)];
        for l in 1..=2 {
            assert_eq!(fam.pieri_residual(&part(&[2, 1]), l, &z).unwrap(), int(0));
        }
        assert!(fam.pieri_residual(&part(&[5, 0]), 1, &z).is_err());
        assert_eq!(pieri_residual(&part(&[0]), 1, &[rat(2, 3)], &p).unwrap(), int(0));
    }

    #[test]
    fn conjugation_symmetry() {
        use num_complex::Complex64;
        let p = params();
        let poly = build_p(&part(&[2, 1]), &p).unwrap();
        let z = [Complex64::from_polar(1.0, 0.7), Complex64::from_polar(1.0, 2.1)];
        let zc: Vec<Complex64> = z.iter().map(|x| x.conj()).collect();
        let a = poly.eval(&z).unwrap();
        let b = poly.eval(&zc).unwrap();
        assert!((a - b.conj()).norm() < 1e-12);
    }

    #[test]
    fn json_table() {
        let poly = build_p(&part(&[1]), &params()).unwrap();
        let v = poly.to_json();
        assert_eq!(v["n"], 1);
        assert_eq!(v["lambda"], json!([1]));
        assert_eq!(v["coeffs"].as_array().unwrap().len(), 2);
    }
}
