use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::norms::norm_ratio;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::latticeop::{epsilon0, hl_row, LatticeFunction};
use crate::qcore::{to_f64, ParamSet, Rational};

/// Matrix of `Δ^{1/2} (H_l + δ_{l1} ε₀) Δ^{-1/2}` on `{λ : |λ| ≤ cutoff}`.
///
/// Entries are `sign(H_{λμ}) · sqrt((Δ_λ/Δ_μ) H_{λμ}²)` with the radicand
/// exact, so `Δ₀` never enters.
#[derive(Debug, Clone)]
pub struct ConjugatedMatrix {
    l: usize,
    cutoff: u32,
    basis: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    squares: BTreeMap<(usize, usize), (bool, Rational)>,
    matrix: DMatrix<f64>,
    dropped: usize,
}

pub fn conjugated_h_matrix(l: usize, n: usize, cutoff: u32, params: &ParamSet) -> Result<ConjugatedMatrix> {
    let basis = Partition::all_up_to_weight(n, cutoff);
    let index: BTreeMap<Partition, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let ratios: Vec<Rational> = basis.iter().map(|lam| norm_ratio(lam, params)).collect::<Result<_>>()?;
    let shift = if l == 1 { epsilon0(params, n) } else { Rational::zero() };
    let dim = basis.len();
    let mut matrix = DMatrix::zeros(dim, dim);
    let mut squares = BTreeMap::new();
    let mut dropped = 0;
    for (i, lam) in basis.iter().enumerate() {
        for (mu, h) in hl_row(l, lam, params)? {
            let Some(&j) = index.get(&mu) else {
                dropped += 1;
                continue;
            };
            let h = if i == j { h + &shift } else { h };
            let sq = &ratios[i] / &ratios[j] * &h * &h;
            let negative = h.is_negative();
            let v = to_f64(&sq).sqrt();
            matrix[(i, j)] = if negative { -v } else { v };
            squares.insert((i, j), (negative, sq));
        }
        if l == 1 && !squares.contains_key(&(i, i)) && !shift.is_zero() {
            let v = to_f64(&shift);
            matrix[(i, i)] = v;
            squares.insert((i, i), (shift.is_negative(), &shift * &shift));
        }
    }
    Ok(ConjugatedMatrix { l, cutoff, basis, index, squares, matrix, dropped })
}

impl ConjugatedMatrix {
    pub fn level(&self) -> usize {
        self.l
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Transitions from inside the cutoff to outside it, dropped.
    pub fn dropped(&self) -> usize {
        self.dropped
    }

    /// Whether every entry's exact square and sign match its transpose.
    pub fn is_exactly_symmetric(&self) -> bool {
        self.squares.iter().all(|(&(i, j), v)| self.squares.get(&(j, i)) == Some(v))
            && self.matrix == self.matrix.transpose()
    }

    /// Largest Gershgorin radius plus diagonal magnitude.
    pub fn gershgorin_bound(&self) -> f64 {
        self.matrix.row_iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = SymmetricEigen::new(self.matrix.clone()).eigenvalues.iter().copied().collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    fn vector(&self, f: &LatticeFunction<Complex64>) -> Result<DVector<Complex64>> {
        let mut v = DVector::zeros(self.basis.len());
        for (lam, x) in f.iter() {
            let i = self
                .index
                .get(lam)
                .ok_or_else(|| Error::OutOfRange(format!("{lam} lies beyond the cutoff {}", self.cutoff)))?;
            v[*i] = *x;
        }
        Ok(v)
    }
}

/// `e^{i𝓗t}` from one symmetric eigendecomposition.
#[derive(Debug, Clone)]
pub struct Propagator {
    conj: ConjugatedMatrix,
    eigenvalues: DVector<f64>,
    eigenvectors: DMatrix<Complex64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Evolution {
    pub time: f64,
    #[serde(skip)]
    pub state: LatticeFunction<Complex64>,
    pub norm: f64,
    /// Probability on the outermost shell `|λ| = cutoff`.
    pub boundary_mass: f64,
    pub warning: Option<String>,
}

impl Propagator {
    pub fn new(conj: ConjugatedMatrix) -> Self {
        let eig = SymmetricEigen::new(conj.matrix.clone());
        let eigenvectors = eig.eigenvectors.map(|x| Complex64::new(x, 0.0));
        Self { conj, eigenvalues: eig.eigenvalues, eigenvectors }
    }

    pub fn matrix(&self) -> &ConjugatedMatrix {
        &self.conj
    }

    pub fn evolve(&self, initial: &LatticeFunction<Complex64>, time: f64) -> Result<Evolution> {
        let v = self.conj.vector(initial)?;
        let coeffs = self.eigenvectors.adjoint() * v;
        let phased = DVector::from_iterator(
            coeffs.len(),
            coeffs.iter().zip(self.eigenvalues.iter()).map(|(c, &e)| c * Complex64::from_polar(1.0, e * time)),
        );
        let out = &self.eigenvectors * phased;
        let mut state = LatticeFunction::new(initial.n());
        let mut boundary_mass = 0.0;
        for (lam, x) in self.conj.basis.iter().zip(out.iter()) {
            if lam.weight() == self.conj.cutoff {
                boundary_mass += x.norm_sqr();
            }
            state.add_at(lam, *x)?;
        }
        let reach = initial.support().map(Partition::weight).max().unwrap_or(0);
        let warning = (reach + 2 > self.conj.cutoff || boundary_mass > 1e-6).then(|| {
            format!("truncation: initial reach {reach} vs cutoff {}, boundary mass {boundary_mass:.3e}", self.conj.cutoff)
        });
        Ok(Evolution { time, state, norm: out.norm(), boundary_mass, warning })
    }

    /// Evolutions at each time, as a JSON time series.
    pub fn snapshots_json(&self, initial: &LatticeFunction<Complex64>, times: &[f64]) -> Result<serde_json::Value> {
        let mut series = Vec::new();
        for &t in times {
            let e = self.evolve(initial, t)?;
            let state: Vec<serde_json::Value> = e
                .state
                .iter()
                .map(|(lam, x)| serde_json::json!({"lambda": lam, "re": x.re, "im": x.im}))
                .collect();
            series.push(serde_json::json!({
                "time": t,
                "norm": e.norm,
                "boundary_mass": e.boundary_mass,
                "warning": e.warning,
                "state": state,
            }));
        }
        Ok(serde_json::Value::Array(series))
    }
}

/// One-shot evolution of `initial` under `𝓗` truncated at `cutoff`.
pub fn evolve(initial: &LatticeFunction<Complex64>, time: f64, cutoff: u32, params: &ParamSet) -> Result<Evolution> {
    Propagator::new(conjugated_h_matrix(1, initial.n(), cutoff, params)?).evolve(initial, time)
}

/// `‖f‖` in `ℓ²(Λ)`.
pub fn l2_norm(f: &LatticeFunction<Complex64>) -> f64 {
    f.iter().map(|(_, x)| x.norm_sqr()).sum::<f64>().sqrt()
}

/// `max_λ |f(λ) - g(λ)|`.
pub fn max_distance(f: &LatticeFunction<Complex64>, g: &LatticeFunction<Complex64>) -> f64 {
    f.support()
        .chain(g.support())
        .map(|lam| (f.get(lam) - g.get(lam)).norm())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::part;
    use crate::latticeop::{v_minus, v_plus};
    use crate::qcore::rat;

    fn params() -> ParamSet {
        ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(-1, 5)]).unwrap()
    }

    #[test]
    fn cutoff_zero() {
        let p = params();
        let m = conjugated_h_matrix(1, 1, 0, &p).unwrap();
        let lam = part(&[0]);
        let expected = -(v_plus(&lam, 1, &p).unwrap() + v_minus(&lam, 1, &p).unwrap()) + epsilon0(&p, 1);
        assert_eq!(m.matrix()[(0, 0)], to_f64(&expected));
        assert_eq!(m.dropped(), 1);
    }

    #[test]
    fn symmetry_for_all_levels() {
        let p = params();
        for (n, l) in [(1, 1), (2, 1), (2, 2), (3, 2)] {
            let m = conjugated_h_matrix(l, n, 5, &p).unwrap();
            assert!(m.is_exactly_symmetric(), "n = {n}, l = {l}");
            assert!(m.gershgorin_bound().is_finite());
        }
    }

    #[test]
    fn spectrum_within_band() {
        let m = conjugated_h_matrix(1, 1, 40, &params()).unwrap();
        let ev = m.eigenvalues();
        assert!(ev[0] >= -2.0 - 1e-3 && *ev.last().unwrap() <= 2.0 + 1e-3, "{:?}", (ev[0], ev.last()));
    }

    #[test]
    fn unitary_group() {
        let p = params();
        let prop = Propagator::new(conjugated_h_matrix(1, 2, 12, &p).unwrap());
        let psi0 = LatticeFunction::from_entries(2, [(part(&[1, 0]), Complex64::new(0.6, 0.0)), (part(&[2, 1]), Complex64::new(0.0, 0.8))]).unwrap();
        let at0 = prop.evolve(&psi0, 0.0).unwrap();
        assert!(max_distance(&at0.state, &psi0) < 1e-12);
        let a = prop.evolve(&psi0, 0.7).unwrap();
        assert!((a.norm - 1.0).abs() < 1e-10);
        let b = prop.evolve(&a.state, 1.1).unwrap();
        let c = prop.evolve(&psi0, 1.8).unwrap();
        assert!(max_distance(&b.state, &c.state) < 1e-9);
        let json = prop.snapshots_json(&psi0, &[0.0, 1.0]).unwrap();
        assert_eq!(json.as_array().unwrap().len(), 2);
        assert!(evolve(&LatticeFunction::delta(&part(&[9])), 1.0, 4, &p).is_err());
    }
}
