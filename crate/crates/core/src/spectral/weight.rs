use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qcore::{qpoch_infinite, FloatParams};

/// A point of the open alcove `π > ξ₁ > … > ξ_n > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlcovePoint(Vec<f64>);

impl AlcovePoint {
    pub fn new(xi: Vec<f64>) -> Result<Self> {
        if xi.is_empty() {
            return Err(Error::Mismatch("alcove point with no coordinates".into()));
        }
        let mut prev = PI;
        for &x in &xi {
            if !(x < prev && x.is_finite()) {
                return Err(Error::Domain { name: "xi", value: format!("{xi:?}"), reason: "not in the open alcove" });
            }
            prev = x;
        }
        if !(prev > 0.0) {
            return Err(Error::Domain { name: "xi", value: format!("{xi:?}"), reason: "not in the open alcove" });
        }
        Ok(Self(xi))
    }

    pub fn xi(&self) -> &[f64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }
}

fn cis(x: f64) -> Complex64 {
    Complex64::from_polar(1.0, x)
}

/// `Δ̂(ξ)` on the alcove.
pub fn weight(xi: &AlcovePoint, params: &FloatParams, tol: f64) -> Result<f64> {
    weight_extended(xi.xi(), params, tol)
}

/// The same product for arbitrary real `ξ`; it is W-invariant and vanishes on
/// the walls of the alcove.
pub fn weight_extended(xi: &[f64], params: &FloatParams, tol: f64) -> Result<f64> {
    let n = xi.len() as i32;
    let q = Complex64::new(params.q, 0.0);
    let t = params.t;
    let poch = |x: Complex64| qpoch_infinite(x, q, tol);
    let mut w = (2.0 * PI).powi(-n);
    for &x in xi {
        let mut den = Complex64::new(1.0, 0.0);
        for &a in &params.that {
            den *= poch(a * cis(x))?;
        }
        w *= (poch(cis(2.0 * x))? / den).norm_sqr();
    }
    for (j, &a) in xi.iter().enumerate() {
        for &b in &xi[j + 1..] {
            let (p, m) = (cis(a + b), cis(a - b));
            w *= (poch(p)? * poch(m)? / (poch(t * p)? * poch(t * m)?)).norm_sqr();
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::DEFAULT_TOL;

    fn fp() -> FloatParams {
        FloatParams::new(0.3, 0.5, [0.4, -0.25, 0.6]).unwrap()
    }

    #[test]
    fn alcove_validation() {
        assert!(AlcovePoint::new(vec![2.0, 1.0]).is_ok());
        assert!(AlcovePoint::new(vec![1.0, 2.0]).is_err());
        assert!(AlcovePoint::new(vec![1.0, 1.0]).is_err());
        assert!(AlcovePoint::new(vec![PI]).is_err());
        assert!(AlcovePoint::new(vec![0.0]).is_err());
    }

    #[test]
    fn free_limit() {
        let p = FloatParams::new(0.0, 0.0, [0.0; 3]).unwrap();
        for x in [0.3, 1.1, 2.9] {
            let w = weight(&AlcovePoint::new(vec![x]).unwrap(), &p, DEFAULT_TOL).unwrap();
            assert!((w - 2.0 * x.sin().powi(2) / PI).abs() < 1e-15);
        }
    }

    #[test]
    fn reflection_invariance_and_positivity() {
        let p = fp();
        let a = weight_extended(&[2.0, 1.0], &p, DEFAULT_TOL).unwrap();
        let b = weight_extended(&[-2.0, 1.0], &p, DEFAULT_TOL).unwrap();
        let c = weight_extended(&[1.0, -2.0], &p, DEFAULT_TOL).unwrap();
        assert!(a > 0.0);
        assert!((a - b).abs() < 1e-14 * a && (a - c).abs() < 1e-14 * a);
    }

    #[test]
    fn long_product_oracle() {
        let p = fp();
        let poch = |x: Complex64| (0..200).fold(Complex64::new(1.0, 0.0), |acc, k| acc * (1.0 - x * p.q.powi(k)));
        let (x1, x2) = (2.0f64, 1.0f64);
        let mut w = 1.0 / (2.0 * PI).powi(2);
        for x in [x1, x2] {
            let den = p.that.iter().fold(Complex64::new(1.0, 0.0), |acc, &a| acc * poch(a * cis(x)));
            w *= (poch(cis(2.0 * x)) / den).norm_sqr();
        }
        let (s, d) = (cis(x1 + x2), cis(x1 - x2));
        w *= (poch(s) * poch(d) / (poch(p.t * s) * poch(p.t * d))).norm_sqr();
        let got = weight(&AlcovePoint::new(vec![x1, x2]).unwrap(), &p, DEFAULT_TOL).unwrap();
        assert!((got - w).abs() < 1e-12 * w);
    }
}
