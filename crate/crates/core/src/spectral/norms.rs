use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::latticeop::{v_minus, v_plus};
use crate::qcore::{qpoch_finite, qpoch_infinite_real, to_f64, FloatParams, ParamSet, Rational};

/// `Δ_λ = delta0 · ratio`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormValue {
    #[serde(serialize_with = "ser_rational")]
    pub ratio: Rational,
    pub delta0: f64,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::qcore::format_rational(r))
}

impl NormValue {
    pub fn value(&self) -> f64 {
        self.delta0 * to_f64(&self.ratio)
    }
}

/// `Δ_λ / Δ₀`, exact.
pub fn norm_ratio(lambda: &Partition, params: &ParamSet) -> Result<Rational> {
    let n = lambda.n();
    let (q, t) = (params.q(), params.t());
    let th = params.that();
    let degenerate = || Error::Degenerate(format!("vanishing Pochhammer symbol in the norm of {lambda}"));
    let mut r = Rational::one();
    for j in 1..=n {
        let lj = lambda.part(j);
        let tn = t.pow((n - j) as i32);
        let num = qpoch_finite(&(&th[0] * &th[1] * &tn), lj, q) * qpoch_finite(&(&th[0] * &th[2] * &tn), lj, q);
        let den = (&th[0] * &tn).pow(2 * lj as i32)
            * qpoch_finite(&(q * &tn), lj, q)
            * qpoch_finite(&(&th[1] * &th[2] * &tn), lj, q);
        if den.is_zero() {
            return Err(degenerate());
        }
        r *= num / den;
    }
    for j in 1..=n {
        for k in j + 1..=n {
            let d = lambda.part(j) - lambda.part(k);
            let tkj = t.pow((k - j) as i32);
            let den = (Rational::one() - &tkj) * qpoch_finite(&(q * t.pow((k - j) as i32 - 1)), d, q);
            if den.is_zero() {
                return Err(degenerate());
            }
            r *= (Rational::one() - &tkj * q.pow(d as i32)) * qpoch_finite(&(t * &tkj), d, q) / den;
        }
    }
    Ok(r)
}

/// `Δ₀ = ∏_j (q, t^j)_∞ / (t)_∞ · ∏_{r<s} (t̂_r t̂_s t^{n-j})_∞`.
pub fn delta0(params: &FloatParams, n: usize, tol: f64) -> Result<f64> {
    let (q, t) = (params.q, params.t);
    let th = params.that;
    let poch = |x: f64| qpoch_infinite_real(x, q, tol);
    let mut d = 1.0;
    for j in 1..=n {
        let tn = t.powi((n - j) as i32);
        d *= poch(q)? * poch(t.powi(j as i32))? / poch(t)?;
        for (r, s) in [(0, 1), (0, 2), (1, 2)] {
            d *= poch(th[r] * th[s] * tn)?;
        }
    }
    Ok(d)
}

pub fn norm_delta(lambda: &Partition, params: &ParamSet, tol: f64) -> Result<NormValue> {
    Ok(NormValue { ratio: norm_ratio(lambda, params)?, delta0: delta0(&params.to_float(), lambda.n(), tol)? })
}

/// `(Δ_{λ+e_j}/Δ_λ) v⁻_j(λ + e_j) - v⁺_j(λ)`, or `None` when `λ + e_j` is
/// not a partition.
pub fn balance_residual(lambda: &Partition, j: usize, params: &ParamSet) -> Result<Option<Rational>> {
    let Some(up) = lambda.step(j, true) else {
        return Ok(None);
    };
    let r = norm_ratio(&up, params)? / norm_ratio(lambda, params)?;
    Ok(Some(r * v_minus(&up, j, params)? - v_plus(lambda, j, params)?))
}

/// Checks detailed balance at every `λ` with `|λ| ≤ max_weight`; returns the
/// number of pairs checked and the failures.
pub fn check_balance(n: usize, max_weight: u32, params: &ParamSet) -> Result<(usize, Vec<(Partition, usize)>)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for lam in Partition::all_up_to_weight(n, max_weight) {
        for j in 1..=n {
            if let Some(res) = balance_residual(&lam, j, params)? {
                checked += 1;
                if !res.is_zero() {
                    bad.push((lam.clone(), j));
                }
            }
        }
    }
    Ok((checked, bad))
}
