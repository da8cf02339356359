//! The lattice Hamiltonian `H` and its hopping amplitudes `v_j^±(λ)`.

use num_traits::{One, Zero};

use super::function::{apply_rows, LatticeFunction};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::qcore::{ParamSet, Rational, Scalar};

/// Rational building blocks of the amplitudes at a fixed site `ρ + λ`.
pub(crate) struct Site<'a> {
    pub lambda: &'a Partition,
    pub params: &'a ParamSet,
    /// `q^{x_j} = t^{n-j} q^{λ_j}`, 0-based.
    pub qx: Vec<Rational>,
}

impl<'a> Site<'a> {
    pub fn new(lambda: &'a Partition, params: &'a ParamSet) -> Self {
        let n = lambda.n() as i32;
        let qx = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| params.t().pow(n - 1 - i as i32) * params.q().pow(p as i32))
            .collect();
        Self { lambda, params, qx }
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// `t^{k-j} q^{λ_j - λ_k + extra}` (1-based `j`, `k`).
    pub fn d(&self, j: usize, k: usize, extra: i32) -> Rational {
        let exp_q = self.lambda.part(j) as i32 - self.lambda.part(k) as i32 + extra;
        self.params.t().pow(k as i32 - j as i32) * self.params.q().pow(exp_q)
    }

    /// One-body factor of an up-hop: `t̂₀⁻¹ (1 - t₁ q^{x_j})(1 - t₂ q^{x_j})`.
    pub fn up(&self, j: usize) -> Rational {
        let x = &self.qx[j - 1];
        let one = Rational::one();
        (&one - self.params.t1() * x) * (&one - self.params.t2() * x) / self.params.that0()
    }

    /// One-body factor of a down-hop: `t̂₀ (1 - t₀ q^{x_j})(1 - q^{x_j})`.
    pub fn down(&self, j: usize) -> Rational {
        let x = &self.qx[j - 1];
        let one = Rational::one();
        (&one - self.params.t0() * x) * (&one - x) * self.params.that0()
    }

    /// `(a - d)/(1 - d)` with `d = t^{k-j} q^{λ_j-λ_k+extra}`.
    pub fn pair(&self, a: &Rational, j: usize, k: usize, extra: i32) -> Result<Rational> {
        let d = self.d(j, k, extra);
        let den = Rational::one() - &d;
        if den.is_zero() {
            return Err(Error::Degenerate(format!(
                "vanishing pair denominator at λ = {}, (j, k) = ({j}, {k})",
                self.lambda
            )));
        }
        Ok((a - d) / den)
    }
}

fn check_index(j: usize, n: usize) -> Result<()> {
    if j == 0 || j > n {
        Err(Error::OutOfRange(format!("particle index j = {j} with n = {n}")))
    } else {
        Ok(())
    }
}

/// `v_j^+(λ)`; vanishes whenever `λ + e_j ∉ Λ`.
pub fn v_plus(lambda: &Partition, j: usize, params: &ParamSet) -> Result<Rational> {
    let n = lambda.n();
    check_index(j, n)?;
    let site = Site::new(lambda, params);
    let tinv = params.t().recip();
    let mut v = site.up(j);
    for k in (1..=n).filter(|&k| k != j) {
        v *= site.pair(&tinv, j, k, 0)?;
    }
    Ok(v)
}

/// `v_j^-(λ)`; vanishes whenever `λ - e_j ∉ Λ`.
pub fn v_minus(lambda: &Partition, j: usize, params: &ParamSet) -> Result<Rational> {
    let n = lambda.n();
    check_index(j, n)?;
    let site = Site::new(lambda, params);
    let t = params.t().clone();
    let mut v = site.down(j);
    for k in (1..=n).filter(|&k| k != j) {
        v *= site.pair(&t, j, k, 0)?;
    }
    Ok(v)
}

/// Nonzero entries of the row of `H` at `λ`: `(λ ± e_j, v_j^±(λ))` for
/// admissible neighbours and the diagonal `-Σ_j (v_j^+ + v_j^-)`.
pub fn h_row(lambda: &Partition, params: &ParamSet) -> Result<Vec<(Partition, Rational)>> {
    let mut row = Vec::new();
    let mut diag = Rational::zero();
    for j in 1..=lambda.n() {
        if let Some(up) = lambda.step(j, true) {
            let v = v_plus(lambda, j, params)?;
            diag -= &v;
            row.push((up, v));
        }
        if let Some(down) = lambda.step(j, false) {
            let v = v_minus(lambda, j, params)?;
            diag -= &v;
            row.push((down, v));
        }
    }
    if !diag.is_zero() {
        row.push((lambda.clone(), diag));
    }
    row.retain(|(_, v)| !v.is_zero());
    Ok(row)
}

pub(crate) fn unit_shifts(n: usize) -> Vec<Vec<i32>> {
    let mut shifts = vec![vec![0; n]];
    for j in 0..n {
        for s in [1, -1] {
            let mut d = vec![0; n];
            d[j] = s;
            shifts.push(d);
        }
    }
    shifts
}

/// `(H f)(ρ + λ)` for a finitely supported `f`.
pub fn apply_h<T: Scalar>(f: &LatticeFunction<T>, params: &ParamSet) -> Result<LatticeFunction<T>> {
    apply_rows(f, &unit_shifts(f.n()), |lam| h_row(lam, params))
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
    fn boundary_zeros() {
        let p = params();
        assert_eq!(v_plus(&part(&[2, 2, 0]), 2, &p).unwrap(), int(0));
        assert_eq!(v_minus(&part(&[2, 1, 0]), 3, &p).unwrap(), int(0));
        assert_eq!(v_minus(&part(&[2, 1, 1]), 2, &p).unwrap(), int(0));
        assert!(v_plus(&part(&[1, 0]), 3, &p).is_err());
        assert!(v_minus(&part(&[1, 0]), 0, &p).is_err());
    }

    #[test]
    fn one_particle_amplitudes() {
        let p = params();
        let a = p.that();
        // v⁺(0) = t̂₀⁻¹ (1 - t̂₀t̂₂)(1 - t̂₀t̂₁)
        let expected = (int(1) - &a[0] * &a[2]) * (int(1) - &a[0] * &a[1]) / &a[0];
        assert_eq!(v_plus(&part(&[0]), 1, &p).unwrap(), expected);
        // v⁻(λ) = t̂₀ (1 - q⁻¹ t̂₁t̂₂ q^λ)(1 - q^λ)
        let qx = p.q().pow(3);
        let expected = &a[0] * (int(1) - &a[1] * &a[2] / p.q() * &qx) * (int(1) - &qx);
        assert_eq!(v_minus(&part(&[3]), 1, &p).unwrap(), expected);
    }

    #[test]
    fn boundary_consistency_exhaustive() {
        let p = params();
        for n in 1..=3 {
            for lam in Partition::all_up_to_weight(n, 6) {
                for j in 1..=n {
                    if lam.step(j, true).is_none() {
                        assert_eq!(v_plus(&lam, j, &p).unwrap(), int(0));
                    }
                    if lam.step(j, false).is_none() {
                        assert_eq!(v_minus(&lam, j, &p).unwrap(), int(0));
                    }
                }
            }
        }
    }

    #[test]
    fn action_on_deltas() {
        let p = params();
        let zero = LatticeFunction::<Rational>::new(2);
        assert!(apply_h(&zero, &p).unwrap().is_empty());
        let f = apply_h(&LatticeFunction::<Rational>::delta(&part(&[0])), &p).unwrap();
        assert!(f.support().all(|l| l.parts()[0] <= 1));
        // (H δ_μ)(λ) = H[λ, μ]; at λ = μ this is the diagonal -Σ(v⁺ + v⁻)
        let mu = part(&[2, 1]);
        let g = apply_h(&LatticeFunction::<Rational>::delta(&mu), &p).unwrap();
        let diag: Rational = (1..=2)
            .map(|j| v_plus(&mu, j, &p).unwrap() + v_minus(&mu, j, &p).unwrap())
            .fold(int(0), |a, b| a - b);
        assert_eq!(g.get(&mu), diag);
        // transpose reading: entry at λ = μ - e_1 is v_1^+(μ - e_1)
        assert_eq!(g.get(&part(&[1, 1])), v_plus(&part(&[1, 1]), 1, &p).unwrap());
        assert_eq!(g.get(&part(&[3, 1])), v_minus(&part(&[3, 1]), 1, &p).unwrap());
    }
}
