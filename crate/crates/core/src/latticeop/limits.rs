//! Two degenerations of the lattice Hamiltonian: the `t̂₂ → 0` limit, where
//! `H + ε₀` takes a simpler form, and the Morse-free limit of the generic
//! four-coupling Hamiltonian.

use num_traits::{One, Zero};
use serde::Serialize;

use super::hamiltonian::{v_minus, v_plus, Site};
use super::integrals::epsilon0;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::qcore::{Rational, ParamSet};

#[derive(Debug, Clone, Serialize)]
pub struct LimitMismatch {
    pub lambda: Partition,
    /// 1-based particle index; `None` for the diagonal.
    pub j: Option<usize>,
    pub what: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct MorseLimitReport {
    pub sites_checked: usize,
    pub mismatches: Vec<LimitMismatch>,
}

impl MorseLimitReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `∏_{k≠j} (a - q^{x_j-x_k}) / (1 - q^{x_j-x_k})`, the Ruijsenaars-Macdonald
/// factor of a hop.
fn rs_product(site: &Site<'_>, a: &Rational, j: usize) -> Rational {
    (1..=site.n())
        .filter(|&k| k != j)
        .fold(Rational::one(), |acc, k| {
            let d = &site.qx[j - 1] / &site.qx[k - 1];
            acc * (a - &d) / (Rational::one() - d)
        })
}

/// With `t̂₂ = 0` compares, for every `λ` of weight at most `max_weight`, the
/// amplitudes of `H` with the reduced form
/// `Σ_j [t̂₀⁻¹(1 - t̂₀t̂₁q^{x_j})(…)T_j + t̂₀(1 - q^{x_j})(…)T_j⁻¹ + (t̂₀+t̂₁)q^{x_j}] - ε₀`.
pub fn morse_vanishing_limit_check(params: &ParamSet, n: usize, max_weight: u32) -> Result<MorseLimitReport> {
    if !params.that()[2].is_zero() {
        return Err(Error::Domain {
            name: "that2",
            value: crate::qcore::format_rational(&params.that()[2]),
            reason: "the limit check needs t̂₂ = 0",
        });
    }
    let a0 = params.that0();
    let a1 = &params.that()[1];
    let t = params.t();
    let tinv = t.recip();
    let eps0 = epsilon0(params, n);
    let mut report = MorseLimitReport { sites_checked: 0, mismatches: Vec::new() };
    for lam in Partition::all_up_to_weight(n, max_weight) {
        let site = Site::new(&lam, params);
        let mut diag = Rational::zero();
        let mut reduced_diag = -eps0.clone();
        for j in 1..=n {
            let x = &site.qx[j - 1];
            let vp = v_plus(&lam, j, params)?;
            let vm = v_minus(&lam, j, params)?;
            let up = (Rational::one() - a0 * a1 * x) / a0 * rs_product(&site, &tinv, j);
            let down = a0 * (Rational::one() - x) * rs_product(&site, t, j);
            if vp != up {
                report.mismatches.push(LimitMismatch { lambda: lam.clone(), j: Some(j), what: "up-hop" });
            }
            if vm != down {
                report.mismatches.push(LimitMismatch { lambda: lam.clone(), j: Some(j), what: "down-hop" });
            }
            diag -= vp + vm;
            reduced_diag += (a0 + a1) * x;
        }
        if diag != reduced_diag {
            report.mismatches.push(LimitMismatch { lambda: lam.clone(), j: None, what: "diagonal" });
        }
        report.sites_checked += 1;
    }
    Ok(report)
}

/// `Σ_j (1 + z_j) ∏_{k≠j} (t - z_j/z_k)/(1 - z_j/z_k) - Σ_j (z_j + t^{n-j})`,
/// which vanishes identically.
pub fn elementary_identity_residual(z: &[Rational], t: &Rational) -> Result<Rational> {
    let n = z.len();
    let mut lhs = Rational::zero();
    for j in 0..n {
        let mut term = Rational::one() + &z[j];
        for k in (0..n).filter(|&k| k != j) {
            if z[k].is_zero() {
                return Err(Error::Pole("elementary identity (zero coordinate)"));
            }
            let r = &z[j] / &z[k];
            let den = Rational::one() - &r;
            if den.is_zero() {
                return Err(Error::Pole("elementary identity (coinciding coordinates)"));
            }
            term *= (t - r) / den;
        }
        lhs += term;
    }
    let rhs = (0..n).fold(Rational::zero(), |acc, j| acc + &z[j] + t.pow((n - 1 - j) as i32));
    Ok(lhs - rhs)
}

/// Floating-point couplings `(q, t, t₀, t₁, t₂, t₃)` of the generic
/// Hamiltonian, before any normalization of `t₃`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenericCouplings {
    pub q: f64,
    pub t: f64,
    pub t0: f64,
    pub t1: f64,
    pub t2: f64,
    pub t3: f64,
}

impl GenericCouplings {
    /// `t₀ = ε t^{n-1} q⁻¹`, `t₁ = t₂ = t₃ = ε`.
    pub fn ruijsenaars_path(q: f64, t: f64, n: usize, eps: f64) -> Self {
        Self { q, t, t0: eps * t.powi(n as i32 - 1) / q, t1: eps, t2: eps, t3: eps }
    }

    /// `w₊` at `q^x`.
    pub fn w_plus(&self, qx: f64) -> f64 {
        (self.q * self.t0 * self.t3 / (self.t1 * self.t2)).sqrt() * (1.0 - self.t1 * qx) * (1.0 - self.t2 * qx)
    }

    /// `w₋` at `q^x`.
    pub fn w_minus(&self, qx: f64) -> f64 {
        (self.t1 * self.t2 / (self.q * self.t0 * self.t3)).sqrt() * (1.0 - self.t0 * qx) * (1.0 - self.t3 * qx)
    }

    /// Up-hop amplitude of the generic Hamiltonian at `x = ρ + λ`.
    pub fn hop_plus(&self, lambda: &Partition, j: usize) -> f64 {
        let qx = self.lattice_qx(lambda);
        let mut v = self.w_plus(qx[j - 1]);
        for k in (1..=lambda.n()).filter(|&k| k != j) {
            let d = qx[j - 1] / qx[k - 1];
            v *= (1.0 / self.t - d) / (1.0 - d);
        }
        v
    }

    /// Down-hop amplitude of the generic Hamiltonian at `x = ρ + λ`.
    pub fn hop_minus(&self, lambda: &Partition, j: usize) -> f64 {
        let qx = self.lattice_qx(lambda);
        let mut v = self.w_minus(qx[j - 1]);
        for k in (1..=lambda.n()).filter(|&k| k != j) {
            let d = qx[j - 1] / qx[k - 1];
            v *= (self.t - d) / (1.0 - d);
        }
        v
    }

    fn lattice_qx(&self, lambda: &Partition) -> Vec<f64> {
        let n = lambda.n() as i32;
        lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| self.t.powi(n - 1 - i as i32) * self.q.powi(p as i32))
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RuijsenaarsLimitReport {
    pub eps: [f64; 2],
    /// `max_{λ,j} |w₊(x_j) - t^{(n-1)/2}|` at each `ε`.
    pub err_plus: [f64; 2],
    /// `max_{λ,j} |w₋(x_j) - t^{-(n-1)/2}|` at each `ε`.
    pub err_minus: [f64; 2],
    /// `max |w₊ w₋ - 1|` at each `ε`.
    pub err_product: [f64; 2],
    /// Error ratio between the two `ε`, for the larger of the two errors.
    pub ratio: f64,
    /// The ratio expected from linear convergence, `ε₀/ε₁`.
    pub expected_ratio: f64,
}

impl RuijsenaarsLimitReport {
    /// Linear shrinking within the relative tolerance `rel`.
    pub fn is_linear(&self, rel: f64) -> bool {
        (self.ratio / self.expected_ratio - 1.0).abs() <= rel
    }
}

/// Evaluates `w_±` along `t₀ = ε t^{n-1} q⁻¹`, `t_r = ε`, at the two values of
/// `ε`, over all sites `ρ + λ` with `|λ| ≤ max_weight`.
pub fn ruijsenaars_limit_check(eps: [f64; 2], n: usize, q: f64, t: f64, max_weight: u32) -> RuijsenaarsLimitReport {
    let target_plus = t.powf((n as f64 - 1.0) / 2.0);
    let target_minus = 1.0 / target_plus;
    let mut err_plus = [0.0; 2];
    let mut err_minus = [0.0; 2];
    let mut err_product = [0.0f64; 2];
    let sites = Partition::all_up_to_weight(n, max_weight);
    for (i, &e) in eps.iter().enumerate() {
        let c = GenericCouplings::ruijsenaars_path(q, t, n, e);
        for lam in &sites {
            let qx = c.lattice_qx(lam);
            for x in qx {
                let wp = c.w_plus(x);
                let wm = c.w_minus(x);
                err_plus[i] = f64::max(err_plus[i], (wp - target_plus).abs());
                err_minus[i] = f64::max(err_minus[i], (wm - target_minus).abs());
                err_product[i] = err_product[i].max((wp * wm - 1.0).abs());
            }
        }
    }
    let coarse = err_plus[0].max(err_minus[0]);
    let fine = err_plus[1].max(err_minus[1]);
    RuijsenaarsLimitReport {
        eps,
        err_plus,
        err_minus,
        err_product,
        ratio: coarse / fine,
        expected_ratio: eps[0] / eps[1],
    }
}
