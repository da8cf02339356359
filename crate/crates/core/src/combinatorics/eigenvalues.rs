//! Closed-form eigenvalues of the lattice integrals (`Ê_l(ξ)`) and of the dual
//! q-difference operators (`E_{λ,l}`), and the symmetric-function form
//! `E_{l,n}(z; y)`.

use itertools::Itertools;

use super::partition::Partition;
use super::symmetric::{complete_sym, elem_sym};
use crate::error::{Error, Result};
use crate::qcore::{ParamSet, Rational, Scalar};

fn check_level(l: usize, n: usize) -> Result<()> {
    if l == 0 || l > n {
        Err(Error::OutOfRange(format!("level l = {l} with n = {n}")))
    } else {
        Ok(())
    }
}

/// `Ê_l` from the values `cos ξ_j`:
/// `Σ_{j₁<…<j_l} ∏_r (2 cos ξ_{j_r} - t^{j_r-r} t̂₀ - t^{r-j_r} t̂₀⁻¹)`.
pub fn ehat_l_from_cos<T: Scalar>(l: usize, cos: &[T], params: &ParamSet) -> Result<T> {
    let n = cos.len();
    check_level(l, n)?;
    let t = T::from_rational(params.t());
    let a0 = T::from_rational(params.that0());
    let a0inv = a0.inv();
    let two = T::from_i64(2);
    let mut total = T::zero();
    for subset in (1..=n).combinations(l) {
        let mut term = T::one();
        for (r, &j) in subset.iter().enumerate() {
            let shift = j as i32 - (r as i32 + 1);
            let factor = two.clone() * cos[j - 1].clone()
                - t.powi(shift) * a0.clone()
                - t.powi(-shift) * a0inv.clone();
            term = term * factor;
        }
        total = total + term;
    }
    Ok(total)
}

/// `Ê(ξ) = Σ_j (2 cos ξ_j - t^{n-j} t̂₀ - t^{j-n} t̂₀⁻¹)` from the values `cos ξ_j`.
pub fn ehat_from_cos<T: Scalar>(cos: &[T], params: &ParamSet) -> T {
    let n = cos.len() as i32;
    let t = T::from_rational(params.t());
    let a0 = T::from_rational(params.that0());
    let a0inv = a0.inv();
    let two = T::from_i64(2);
    cos.iter().enumerate().fold(T::zero(), |acc, (i, c)| {
        let e = n - (i as i32 + 1);
        acc + two.clone() * c.clone() - t.powi(e) * a0.clone() - t.powi(-e) * a0inv.clone()
    })
}

pub fn eval_ehat(xi: &[f64], params: &ParamSet) -> f64 {
    let cos: Vec<f64> = xi.iter().map(|x| x.cos()).collect();
    ehat_from_cos(&cos, params)
}

pub fn eval_ehat_l(l: usize, xi: &[f64], params: &ParamSet) -> Result<f64> {
    let cos: Vec<f64> = xi.iter().map(|x| x.cos()).collect();
    ehat_l_from_cos(l, &cos, params)
}

/// `E_λ = Σ_j t^{j-1} (q^{-λ_j} - 1)`.
pub fn eval_e(lambda: &Partition, params: &ParamSet) -> Rational {
    let (q, t) = (params.q(), params.t());
    let one = Rational::from_integer(1.into());
    lambda
        .parts()
        .iter()
        .enumerate()
        .fold(Rational::from_integer(0.into()), |acc, (i, &p)| {
            acc + t.pow(i as i32) * (q.pow(-(p as i32)) - &one)
        })
}

/// `E_{λ,l} = t^{-l(l-1)/2} Σ_{j₁<…<j_l} ∏_r (t^{j_r-1} q^{-λ_{j_r}} - t^{n+r-j_r-1})`.
pub fn eval_e_l(lambda: &Partition, l: usize, params: &ParamSet) -> Result<Rational> {
    let n = lambda.n();
    check_level(l, n)?;
    let (q, t) = (params.q(), params.t());
    let mut total = Rational::from_integer(0.into());
    for subset in (1..=n).combinations(l) {
        let mut term = Rational::from_integer(1.into());
        for (r0, &j) in subset.iter().enumerate() {
            let r = r0 as i32 + 1;
            let j = j as i32;
            let lam = lambda.part(j as usize) as i32;
            term *= t.pow(j - 1) * q.pow(-lam) - t.pow(n as i32 + r - j - 1);
        }
        total += term;
    }
    Ok(total * t.pow(-((l * (l - 1) / 2) as i32)))
}

/// `E_{l,n}(z; y) = Σ_{0≤k≤l} (-1)^{l+k} e_k(z) h_{l-k}(y)` with
/// `#y = n - l + 1`.
pub fn eval_eln<T: Scalar>(l: usize, z: &[T], y: &[T]) -> Result<T> {
    let n = z.len();
    if l > n || y.len() != n + 1 - l {
        return Err(Error::Mismatch(format!(
            "E_(l,n) with l = {l}, #z = {n}, #y = {} (expected {})",
            y.len(),
            (n + 1).saturating_sub(l)
        )));
    }
    let mut total = T::zero();
    for k in 0..=l {
        let term = elem_sym(k, z) * complete_sym(l - k, y);
        total = if (l + k).is_multiple_of(2) { total + term } else { total - term };
    }
    Ok(total)
}

/// `E_{l,n}(z; y) - (z₁ - y_l) E_{l-1,n-1}(z₂…; y) - E_{l,n-1}(z₂…; y_{l+1}…)`,
/// with the last term read as 0 when `l = n`. Vanishes identically.
pub fn eln_recurrence_residual<T: Scalar>(l: usize, z: &[T], y: &[T]) -> Result<T> {
    let n = z.len();
    if l == 0 || n == 0 {
        return Err(Error::OutOfRange(format!("recurrence needs l ≥ 1 and n ≥ 1, got l = {l}, n = {n}")));
    }
    let lhs = eval_eln(l, z, y)?;
    let first = (z[0].clone() - y[0].clone()) * eval_eln(l - 1, &z[1..], y)?;
    let second = if l < n { eval_eln(l, &z[1..], &y[1..])? } else { T::zero() };
    Ok(lhs - first - second)
}

/// Arguments `(q^{-λ₁}, t q^{-λ₂}, …)` and `(t^{l-1}, …, t^{n-1})` for which
/// `E_{λ,l} = t^{-l(l-1)/2} E_{l,n}(z; y)`.
pub fn eln_arguments(lambda: &Partition, l: usize, params: &ParamSet) -> (Vec<Rational>, Vec<Rational>) {
    let (q, t) = (params.q(), params.t());
    let n = lambda.n();
    let z = (0..n).map(|i| t.pow(i as i32) * q.pow(-(lambda.parts()[i] as i32))).collect();
    let y = (l.max(1) - 1..n).map(|e| t.pow(e as i32)).collect();
    (z, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::partition::part;
    use crate::qcore::{int, rat};
    use proptest::prelude::*;

    fn params() -> ParamSet {
        ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)]).unwrap()
    }

    #[test]
    fn ehat_examples() {
        let p = params();
        // n = 1, ξ = π/2: 0 - 1/2 - 2
        let v = eval_ehat(&[std::f64::consts::FRAC_PI_2], &p);
        assert!((v + 2.5).abs() < 1e-15);
        let cos = [rat(1, 3)];
        assert_eq!(ehat_l_from_cos(1, &cos, &p).unwrap(), ehat_from_cos(&cos, &p));
        // n = 2, l = 2, cos = (1/2, 1/3), t = 1/2, t̂₀ = 1/2:
        // (2·1/2 - 1/2 - 2)(2·1/3 - 1/2 - 2)
        let cos = [rat(1, 2), rat(1, 3)];
        let expected = (int(1) - rat(1, 2) - int(2)) * (rat(2, 3) - rat(1, 2) - int(2));
        assert_eq!(ehat_l_from_cos(2, &cos, &p).unwrap(), expected);
        assert!(ehat_l_from_cos(3, &cos, &p).is_err());
        assert!(ehat_l_from_cos(0, &cos, &p).is_err());
        for n in 1..=4 {
            let cos: Vec<Rational> = (0..n).map(|i| rat(i as i64 - 1, 5)).collect();
            assert_eq!(ehat_l_from_cos(1, &cos, &p).unwrap(), ehat_from_cos(&cos, &p));
        }
    }

    #[test]
    fn e_examples() {
        let p = params();
        assert_eq!(eval_e(&part(&[0, 0, 0]), &p), int(0));
        let p1 = ParamSet::from_hat(rat(1, 2), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)]).unwrap();
        assert_eq!(eval_e(&part(&[2]), &p1), int(3));
        // n = 2, λ = (1,1), l = 2, q = 1/3, t = 1/2: t⁻¹ (q⁻¹ - t)(t q⁻¹ - t)
        let expected = int(2) * (int(3) - rat(1, 2)) * (rat(3, 2) - rat(1, 2));
        assert_eq!(eval_e_l(&part(&[1, 1]), 2, &p).unwrap(), expected);
        for lam in Partition::all_up_to_weight(3, 5) {
            assert_eq!(eval_e_l(&lam, 1, &p).unwrap(), eval_e(&lam, &p));
        }
        assert!(eval_e_l(&part(&[1, 1]), 3, &p).is_err());
    }

    #[test]
    fn eln_trivial_level() {
        let z = [rat(1, 2), rat(3, 4)];
        let y = [rat(1, 1), rat(1, 2), rat(1, 4)];
        assert_eq!(eval_eln(0, &z, &y).unwrap(), int(1));
        assert!(eval_eln(1, &z, &y).is_err());
    }

    #[test]
    fn e_l_equals_symmetric_function_form() {
        let p = params();
        for n in 1..=4 {
            for lam in Partition::all_up_to_weight(n, 5) {
                for l in 1..=n {
                    let (z, y) = eln_arguments(&lam, l, &p);
                    let scale = p.t().pow(-((l * (l - 1) / 2) as i32));
                    assert_eq!(eval_e_l(&lam, l, &p).unwrap(), scale * eval_eln(l, &z, &y).unwrap());
                }
            }
        }
    }

    #[test]
    fn recurrence_at_two_particles() {
        // E_{1,2}(z1, z2; y1, y2) = (z1 - y1) E_{0,1}(z2; y1) + E_{1,1}(z2; y2)
        let (z1, z2, y1, y2) = (rat(3, 1), rat(2, 1), rat(1, 1), rat(1, 2));
        let lhs = eval_eln(1, &[z1.clone(), z2.clone()], &[y1.clone(), y2.clone()]).unwrap();
        let rhs = (&z1 - &y1) * eval_eln(0, std::slice::from_ref(&z2), &[y1.clone(), y2.clone()]).unwrap()
            + eval_eln(1, std::slice::from_ref(&z2), std::slice::from_ref(&y2)).unwrap();
        assert_eq!(lhs, rhs);
        // direct: e1 - h1 = z1 + z2 - y1 - y2
        assert_eq!(lhs, rat(7, 2));
        assert_eq!(eln_recurrence_residual(1, &[z1, z2], &[y1, y2]).unwrap(), int(0));
    }

    #[test]
    fn recurrence_on_lattice_arguments() {
        let p = params();
        for n in 1..=4 {
            for lam in Partition::all_up_to_weight(n, 6) {
                for l in 1..=n {
                    let (z, y) = eln_arguments(&lam, l, &p);
                    assert_eq!(eln_recurrence_residual(l, &z, &y).unwrap(), int(0));
                }
            }
        }
    }

    #[test]
    fn nonnegativity() {
        for p in [params(), ParamSet::from_hat(rat(4, 5), rat(9, 10), [rat(-1, 2), rat(1, 3), rat(1, 5)]).unwrap()] {
            for n in 1..=4 {
                for lam in Partition::all_up_to_weight(n, 8) {
                    for l in 1..=n {
                        assert!(eval_e_l(&lam, l, &p).unwrap() >= int(0), "{lam} l={l}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn homogeneity(zs in proptest::collection::vec(-30i64..30, 3), ys in proptest::collection::vec(-30i64..30, 2), tn in 1i64..9) {
            let z: Vec<Rational> = zs.iter().map(|&a| rat(a, 7)).collect();
            let y: Vec<Rational> = ys.iter().map(|&a| rat(a, 5)).collect();
            let t = rat(tn, 10);
            let tz: Vec<Rational> = z.iter().map(|v| v * &t).collect();
            let ty: Vec<Rational> = y.iter().map(|v| v * &t).collect();
            let l = 2;
            prop_assert_eq!(eval_eln(l, &tz, &ty).unwrap(), t.pow(l as i32) * eval_eln(l, &z, &y).unwrap());
        }
    }
}
