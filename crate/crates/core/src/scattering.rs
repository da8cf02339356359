//! Factorized scattering matrix `Ŝ`, its square-root branches, the free
//! kernel `χ_ξ` with the discrete Laplacian `𝓗₀`, and the sorting
//! permutation of a regular spectral point.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use num_traits::One;

use crate::combinatorics::{Partition, SignedPermutation};
use crate::error::{Error, Result};
use crate::latticeop::hamiltonian::unit_shifts;
use crate::latticeop::function::apply_rows;
use crate::latticeop::LatticeFunction;
use crate::qcore::{qpoch_infinite, FloatParams, Rational, Scalar};
use crate::spectral::AlcovePoint;

fn cis(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, x)
}

fn poch(x: Complex64, params: &FloatParams, tol: f64) -> Result<Complex64> {
    qpoch_infinite(x, Complex64::new(params.q, 0.0), tol)
}

/// `s(x) = (q e^{ix}, t e^{-ix})_∞ / (q e^{-ix}, t e^{ix})_∞`.
pub fn s_pair(x: f64, params: &FloatParams, tol: f64) -> Result<Complex64> {
    let (q, t) = (params.q, params.t);
    Ok(poch(q * cis(x), params, tol)? * poch(t * cis(-x), params, tol)?
        / (poch(q * cis(-x), params, tol)? * poch(t * cis(x), params, tol)?))
}

/// `s₀(x) = (q e^{2ix})_∞ / (q e^{-2ix})_∞ · ∏_r (t̂_r e^{-ix})_∞ / (t̂_r e^{ix})_∞`.
pub fn s_one(x: f64, params: &FloatParams, tol: f64) -> Result<Complex64> {
    let q = params.q;
    let mut s = poch(q * cis(2.0 * x), params, tol)? / poch(q * cis(-2.0 * x), params, tol)?;
    for &a in &params.that {
        s *= poch(a * cis(-x), params, tol)? / poch(a * cis(x), params, tol)?;
    }
    Ok(s)
}

/// `Ŝ(ξ)` at any real `ξ`.
pub fn s_hat_extended(xi: &[f64], params: &FloatParams, tol: f64) -> Result<Complex64> {
    let mut s = Complex64::one();
    for (j, &a) in xi.iter().enumerate() {
        for &b in &xi[j + 1..] {
            s *= s_pair(a - b, params, tol)? * s_pair(a + b, params, tol)?;
        }
        s *= s_one(a, params, tol)?;
    }
    Ok(s)
}

pub fn s_hat(xi: &AlcovePoint, params: &FloatParams, tol: f64) -> Result<Complex64> {
    s_hat_extended(xi.xi(), params, tol)
}

fn phase(z: Complex64, x: f64) -> Result<Complex64> {
    let r = z.norm();
    if r == 0.0 || !r.is_finite() {
        return Err(Error::Branch(x));
    }
    Ok(z / r)
}

/// `s(x)^{1/2} = (q e^{ix})_∞/|·| · |(t e^{ix})_∞|/(t e^{ix})_∞`.
pub fn sqrt_branch_s(x: f64, params: &FloatParams, tol: f64) -> Result<Complex64> {
    let a = phase(poch(params.q * cis(x), params, tol)?, x)?;
    let b = phase(poch(params.t * cis(x), params, tol)?, x)?;
    Ok(a / b)
}

/// `s₀(x)^{1/2} = (q e^{2ix})_∞/|·| · ∏_r |(t̂_r e^{ix})_∞|/(t̂_r e^{ix})_∞`.
pub fn sqrt_branch_s0(x: f64, params: &FloatParams, tol: f64) -> Result<Complex64> {
    let mut s = phase(poch(params.q * cis(2.0 * x), params, tol)?, x)?;
    for &a in &params.that {
        s /= phase(poch(a * cis(x), params, tol)?, x)?;
    }
    Ok(s)
}

/// `χ_ξ(λ) = (2π)^{-n/2} i^{-n²} Σ_w sign(w) e^{i⟨w(ρ₀+λ), ξ⟩}` with
/// `ρ₀ = (n, …, 1)`.
pub fn chi(xi: &[f64], lambda: &Partition) -> Result<Complex64> {
    let n = lambda.n();
    if xi.len() != n {
        return Err(Error::Mismatch(format!("ξ has {} coordinates, expected {n}", xi.len())));
    }
    let v: Vec<f64> = lambda.parts().iter().enumerate().map(|(i, &p)| (n - i) as f64 + p as f64).collect();
    let sum: Complex64 = SignedPermutation::all(n)
        .iter()
        .map(|w| {
            let wv = w.apply(&v);
            w.sign() as f64 * cis(wv.iter().zip(xi).map(|(a, b)| a * b).sum())
        })
        .sum();
    // i^{-n²} is -i for odd n and 1 for even n
    let prefactor = if n % 2 == 1 { Complex64::new(0.0, -1.0) } else { Complex64::one() };
    Ok(sum * prefactor * (2.0 * PI).powf(-(n as f64) / 2.0))
}

/// `(𝓗₀ f)(λ) = Σ_{λ±e_j ∈ Λ} f(λ ± e_j)`.
pub fn apply_h0<T: Scalar>(f: &LatticeFunction<T>) -> Result<LatticeFunction<T>> {
    let n = f.n();
    apply_rows(f, &unit_shifts(n), |lam| {
        Ok((1..=n)
            .flat_map(|j| [lam.step(j, true), lam.step(j, false)])
            .flatten()
            .map(|mu| (mu, Rational::one()))
            .collect())
    })
}

/// `(𝓗₀ χ_ξ)(λ) - (Σ_j 2 cos ξ_j) χ_ξ(λ)`.
pub fn free_kernel_residual(xi: &[f64], lambda: &Partition) -> Result<Complex64> {
    let n = lambda.n();
    let mut lhs = Complex64::new(0.0, 0.0);
    for j in 1..=n {
        for mu in [lambda.step(j, true), lambda.step(j, false)].into_iter().flatten() {
            lhs += chi(xi, &mu)?;
        }
    }
    let e: f64 = xi.iter().map(|x| 2.0 * x.cos()).sum();
    Ok(lhs - e * chi(xi, lambda)?)
}

/// A spectral point with its membership in the regular set and, when
/// regular, the signed permutation sorting `∇Ê(ξ) = -2 sin ξ`.
#[derive(Debug, Clone)]
pub struct ScatterPoint {
    pub xi: AlcovePoint,
    pub regular: bool,
    pub w: Option<SignedPermutation>,
}

/// Relative gap below which two components `|2 sin ξ_j|` count as tied.
pub const TIE_TOL: f64 = 1e-12;

pub fn sorting_permutation(xi: &AlcovePoint) -> ScatterPoint {
    let grad: Vec<f64> = xi.xi().iter().map(|x| -2.0 * x.sin()).collect();
    let mags: Vec<f64> = grad.iter().map(|g| g.abs()).collect();
    let scale = mags.iter().copied().fold(0.0, f64::max).max(1.0);
    let vanishing = mags.iter().any(|&m| m <= TIE_TOL * scale);
    let tied = (0..mags.len()).any(|i| (i + 1..mags.len()).any(|j| (mags[i] - mags[j]).abs() <= TIE_TOL * scale));
    if vanishing || tied {
        return ScatterPoint { xi: xi.clone(), regular: false, w: None };
    }
    let mut order: Vec<usize> = (0..mags.len()).collect();
    order.sort_by(|&a, &b| mags[b].total_cmp(&mags[a]));
    let signs: Vec<i8> = order.iter().map(|&i| if grad[i] > 0.0 { 1 } else { -1 }).collect();
    let w = SignedPermutation::new(order, signs).expect("sorting yields a valid signed permutation");
    ScatterPoint { xi: xi.clone(), regular: true, w: Some(w) }
}

impl ScatterPoint {
    /// `w_ξ ξ`, when regular.
    pub fn sorted_argument(&self) -> Option<Vec<f64>> {
        self.w.as_ref().map(|w| w.apply(self.xi.xi()))
    }

    /// `Ŝ(w_ξ ξ)`; `None` for irregular points.
    pub fn s_hat(&self, params: &FloatParams, tol: f64) -> Result<Option<Complex64>> {
        self.sorted_argument().map(|x| s_hat_extended(&x, params, tol)).transpose()
    }
}

/// CSV rows `xi1,…,xin,re,im,arg` of `Ŝ` at the given points.
pub fn write_phase_csv<W: Write>(points: &[Vec<f64>], params: &FloatParams, tol: f64, out: W) -> Result<()> {
    let n = points.first().map_or(0, Vec::len);
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = (1..=n).map(|j| format!("xi{j}")).collect();
    header.extend(["re", "im", "arg"].map(String::from));
    w.write_record(&header)?;
    for xi in points {
        let s = s_hat_extended(xi, params, tol)?;
        let mut rec: Vec<String> = xi.iter().map(|x| x.to_string()).collect();
        rec.extend([s.re, s.im, s.arg()].map(|v| v.to_string()));
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::part;
    use crate::qcore::DEFAULT_TOL;
    use proptest::prelude::*;

    fn fp() -> FloatParams {
        FloatParams::new(0.3, 0.5, [0.4, -0.25, 0.6]).unwrap()
    }

    #[test]
    fn pair_factor_basics() {
        let p = fp();
        assert!((s_pair(0.0, &p, DEFAULT_TOL).unwrap() - 1.0).norm() < 1e-15);
        let x = 0.83;
        let s = s_pair(x, &p, DEFAULT_TOL).unwrap();
        let m = s_pair(-x, &p, DEFAULT_TOL).unwrap();
        assert!((m - s.conj()).norm() < 1e-14 && (m * s - 1.0).norm() < 1e-14);
        let qt = FloatParams::new(0.4, 0.4, [0.1, 0.2, 0.3]).unwrap();
        assert!((s_pair(1.7, &qt, DEFAULT_TOL).unwrap() - 1.0).norm() < 1e-14);
    }

    #[test]
    fn s_hat_factorizes() {
        let p = fp();
        let s1 = s_hat(&AlcovePoint::new(vec![1.2]).unwrap(), &p, DEFAULT_TOL).unwrap();
        assert_eq!(s1, s_one(1.2, &p, DEFAULT_TOL).unwrap());
        let (a, b) = (2.1, 0.4);
        let s2 = s_hat(&AlcovePoint::new(vec![a, b]).unwrap(), &p, DEFAULT_TOL).unwrap();
        let f = s_pair(a - b, &p, DEFAULT_TOL).unwrap()
            * s_pair(a + b, &p, DEFAULT_TOL).unwrap()
            * s_one(a, &p, DEFAULT_TOL).unwrap()
            * s_one(b, &p, DEFAULT_TOL).unwrap();
        assert!((s2 - f).norm() < 1e-14);
    }

    #[test]
    fn one_body_factor_in_the_free_limit() {
        // q = 0 and t̂_r = 0 leave every Pochhammer symbol equal to 1
        let p = FloatParams::new(0.0, 0.5, [0.0; 3]).unwrap();
        assert!((s_one(0.9, &p, DEFAULT_TOL).unwrap() - 1.0).norm() < 1e-15);
    }

    #[test]
    fn chi_one_particle() {
        for (lam, x) in [(0u32, 0.4), (3, 2.2)] {
            let c = chi(&[x], &part(&[lam])).unwrap();
            let expected = (2.0 / PI).sqrt() * ((lam as f64 + 1.0) * x).sin();
            assert!((c - expected).norm() < 1e-14);
        }
        assert!(chi(&[0.0, 1.0], &part(&[1, 0])).unwrap().norm() < 1e-14);
        assert!(chi(&[PI, 1.0], &part(&[2, 1])).unwrap().norm() < 1e-13);
    }

    #[test]
    fn chi_anti_invariance() {
        let xi = [2.3, 0.9, 0.2];
        let lam = part(&[2, 1, 1]);
        let base = chi(&xi, &lam).unwrap();
        for w in SignedPermutation::all(3) {
            let moved = chi(&w.apply(&xi), &lam).unwrap();
            assert!((moved - base * w.sign() as f64).norm() < 1e-12);
        }
    }

    #[test]
    fn laplacian() {
        let f = apply_h0(&LatticeFunction::<f64>::delta(&part(&[0]))).unwrap();
        assert_eq!(f.get(&part(&[1])), 1.0);
        assert_eq!(f.len(), 1);
        for lam in Partition::all_up_to_weight(2, 4) {
            assert!(free_kernel_residual(&[2.4, 0.7], &lam).unwrap().norm() < 1e-12);
        }
    }

    #[test]
    fn sorting() {
        let s = sorting_permutation(&AlcovePoint::new(vec![1.0]).unwrap());
        assert!(s.regular);
        assert_eq!(s.w.as_ref().unwrap().signs(), &[-1]);
        let tie = sorting_permutation(&AlcovePoint::new(vec![2.0 * PI / 3.0, PI / 3.0]).unwrap());
        assert!(!tie.regular);
        let s = sorting_permutation(&AlcovePoint::new(vec![2.5, 0.5]).unwrap());
        let w = s.w.clone().unwrap();
        let g: Vec<f64> = [2.5f64, 0.5].iter().map(|x| -2.0 * x.sin()).collect();
        let wg = w.apply(&g);
        assert!(wg[0] > wg[1] && wg[1] > 0.0);
        assert!(s.s_hat(&fp(), DEFAULT_TOL).unwrap().is_some());
    }

    #[test]
    fn phase_csv() {
        let mut buf = Vec::new();
        write_phase_csv(&[vec![1.0, 0.5]], &fp(), DEFAULT_TOL, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("xi1,xi2,re,im,arg"));
    }

    proptest! {
        #[test]
        fn unimodular_and_branches(x in -3.2f64..3.2) {
            let p = fp();
            let s = s_pair(x, &p, DEFAULT_TOL).unwrap();
            let s0 = s_one(x, &p, DEFAULT_TOL).unwrap();
            prop_assert!((s.norm() - 1.0).abs() < 1e-12 && (s0.norm() - 1.0).abs() < 1e-12);
            let b = sqrt_branch_s(x, &p, DEFAULT_TOL).unwrap();
            let b0 = sqrt_branch_s0(x, &p, DEFAULT_TOL).unwrap();
            prop_assert!((b * b - s).norm() < 1e-12 && (b0 * b0 - s0).norm() < 1e-12);
        }
    }
}
