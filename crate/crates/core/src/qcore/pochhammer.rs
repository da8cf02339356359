//! q-Pochhammer symbols `(x)_m = ∏_{l<m} (1 - x q^l)` and their infinite
//! versions.

use num_complex::Complex64;

use super::rational::Scalar;
use crate::error::{Error, Result};

/// Default truncation tolerance for infinite products.
pub const DEFAULT_TOL: f64 = 1e-16;

/// Maximum number of factors taken in an infinite product.
pub const TRUNCATION_CAP: usize = 1_000_000;

/// Finite product `∏_{l=0}^{m-1} (1 - x q^l)`; exact for rationals.
pub fn qpoch_finite<T: Scalar>(x: &T, m: u32, q: &T) -> T {
    let mut acc = T::one();
    let mut xq = x.clone();
    for _ in 0..m {
        acc = acc * (T::one() - xq.clone());
        xq = xq * q.clone();
    }
    acc
}

/// Product of several finite symbols `(x_1, ..., x_k)_m`.
pub fn qpoch_finite_multi<T: Scalar>(xs: &[T], m: u32, q: &T) -> T {
    xs.iter().fold(T::one(), |acc, x| acc * qpoch_finite(x, m, q))
}

/// Infinite product `∏_{l≥0} (1 - x q^l)`, truncated at the smallest `N` with
/// `|x| |q|^N < tol`.
///
/// The neglected tail satisfies `|log tail| ≤ tol / ((1 - |q|)(1 - tol))`, so the
/// relative error of the result is at most `exp(tol / ((1 - |q|)(1 - tol))) - 1`,
/// i.e. about `tol / (1 - |q|)`.
pub fn qpoch_infinite(x: Complex64, q: Complex64, tol: f64) -> Result<Complex64> {
    if !(q.norm() < 1.0) {
        return Err(Error::Domain {
            name: "q",
            value: format!("{q}"),
            reason: "infinite q-Pochhammer symbols need |q| < 1",
        });
    }
    let mut acc = Complex64::new(1.0, 0.0);
    let mut term = x;
    let mut count = 0usize;
    while term.norm() >= tol {
        if count == TRUNCATION_CAP {
            return Err(Error::TruncationCap { cap: TRUNCATION_CAP });
        }
        acc *= Complex64::new(1.0, 0.0) - term;
        term *= q;
        count += 1;
    }
    Ok(acc)
}

/// Real-argument convenience wrapper around [`qpoch_infinite`].
pub fn qpoch_infinite_real(x: f64, q: f64, tol: f64) -> Result<f64> {
    Ok(qpoch_infinite(Complex64::new(x, 0.0), Complex64::new(q, 0.0), tol)?.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::rational::{int, rat, Rational};
    use proptest::prelude::*;

    #[test]
    fn finite_products() {
        let q = rat(1, 3);
        assert_eq!(qpoch_finite(&rat(7, 5), 0, &q), int(1));
        assert_eq!(qpoch_finite(&rat(7, 5), 1, &q), rat(-2, 5));
        // (1 - 1/2)(1 - 1/6)
        assert_eq!(qpoch_finite(&rat(1, 2), 2, &q), rat(5, 12));
    }

    fn long_product(x: Complex64, q: Complex64, terms: usize) -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        let mut qp = Complex64::new(1.0, 0.0);
        for _ in 0..terms {
            acc *= 1.0 - x * qp;
            qp *= q;
        }
        acc
    }

    #[test]
    fn infinite_products_against_long_products() {
        let c = |r| Complex64::new(r, 0.0);
        assert_eq!(qpoch_infinite(c(0.0), c(0.4), DEFAULT_TOL).unwrap(), c(1.0));
        let v = qpoch_infinite_real(0.5, 0.5, 1e-16).unwrap();
        let oracle = long_product(c(0.5), c(0.5), 200).re;
        assert!((v - oracle).abs() < 1e-15);
        assert!((v - 0.288_788_095_1).abs() < 1e-10);
        let v = qpoch_infinite(c(0.3), c(0.3), 1e-16).unwrap();
        assert!((v - long_product(c(0.3), c(0.3), 50)).norm() < 1e-14);
        let x = Complex64::from_polar(0.8, 1.1);
        let q = Complex64::new(0.45, 0.0);
        let v = qpoch_infinite(x, q, 1e-16).unwrap();
        assert!((v - long_product(x, q, 400)).norm() < 1e-14);
    }

    #[test]
    fn infinite_product_rejects_unit_q() {
        let one = Complex64::new(1.0, 0.0);
        assert!(matches!(qpoch_infinite(one, one, 1e-16), Err(Error::Domain { .. })));
        assert!(qpoch_infinite(one, Complex64::new(0.0, -2.0), 1e-16).is_err());
    }

    proptest! {
        #[test]
        fn finite_recurrence(num in -20i64..20, den in 1i64..20, m in 0u32..8) {
            let x = rat(num, den);
            let q = rat(2, 7);
            let lhs = qpoch_finite(&x, m + 1, &q);
            let rhs = qpoch_finite(&x, m, &q) * (Rational::from_integer(1.into()) - x.clone() * q.pow(m as i32));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn infinite_shift_relation(re in -0.95f64..0.95, im in -0.95f64..0.95, q in 0.01f64..0.9) {
            let x = Complex64::new(re, im);
            let qc = Complex64::new(q, 0.0);
            let lhs = qpoch_infinite(x, qc, 1e-16).unwrap();
            let rhs = (1.0 - x) * qpoch_infinite(x * qc, qc, 1e-16).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-13 * (1.0 + lhs.norm()));
        }
    }
}
