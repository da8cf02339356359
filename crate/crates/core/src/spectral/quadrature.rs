use std::f64::consts::PI;
use std::io::Write;
use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;
use rayon::prelude::*;
use serde::Serialize;

use super::norms::{delta0, norm_ratio};
use super::weight::weight_extended;
use crate::combinatorics::{orbit, Partition};
use crate::error::{Error, Result};
use crate::polynomials::{PolynomialFamily, QHahnPolynomial};
use crate::qcore::{to_f64, FloatParams};

/// Gauss–Legendre nodes per axis; `n = 3` grids are refused unless allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadSpec {
    pub nodes: usize,
    pub allow_n3: bool,
}

impl QuadSpec {
    pub fn default_for(n: usize) -> Self {
        Self { nodes: if n == 1 { 200 } else { 120 }, allow_n3: false }
    }
}

/// Tensor Gauss–Legendre rule on `[0, π]ⁿ` with `Δ̂` and the `1/n!` of the
/// alcove folded into the weights.
#[derive(Debug, Clone)]
pub struct AlcoveQuadrature {
    n: usize,
    points: Vec<Vec<f64>>,
    weights: Vec<f64>,
}

impl AlcoveQuadrature {
    pub fn new(n: usize, spec: QuadSpec, params: &FloatParams, tol: f64) -> Result<Self> {
        if n == 0 || (n >= 3 && !spec.allow_n3) {
            return Err(Error::OutOfRange(format!("quadrature for n = {n} is not enabled")));
        }
        let nodes = NonZeroUsize::new(spec.nodes).ok_or_else(|| Error::OutOfRange("zero quadrature nodes".into()))?;
        let rule: Vec<(f64, f64)> = GaussLegendre::new(nodes)
            .as_node_weight_pairs()
            .iter()
            .map(|&(x, w)| (PI / 2.0 * (x + 1.0), PI / 2.0 * w))
            .collect();
        let total = rule.len().pow(n as u32);
        let factorial: f64 = (1..=n).map(|k| k as f64).product();
        let (points, weights): (Vec<Vec<f64>>, Vec<f64>) = (0..total)
            .into_par_iter()
            .map(|mut idx| {
                let mut xi = Vec::with_capacity(n);
                let mut w = 1.0 / factorial;
                for _ in 0..n {
                    let (x, wx) = rule[idx % rule.len()];
                    xi.push(x);
                    w *= wx;
                    idx /= rule.len();
                }
                let dw = weight_extended(&xi, params, tol)?;
                Ok((xi, w * dw))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .unzip();
        Ok(Self { n, points, weights })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `∫_𝔸 f Δ̂ dξ` for W-invariant `f`.
    pub fn integrate<F>(&self, f: F) -> f64
    where
        F: Fn(&[f64]) -> f64 + Sync,
    {
        self.points.par_iter().zip(&self.weights).map(|(xi, w)| w * f(xi)).sum()
    }

    pub fn points(&self) -> impl Iterator<Item = (&[f64], f64)> {
        self.points.iter().map(Vec::as_slice).zip(self.weights.iter().copied())
    }
}

/// `P_λ` in floating point, evaluated at real `ξ` as `Σ_μ c_μ Σ_ν cos⟨ν, ξ⟩`.
#[derive(Debug, Clone)]
pub struct RealPolynomial {
    terms: Vec<(f64, Vec<Vec<i32>>)>,
}

impl RealPolynomial {
    pub fn new(poly: &QHahnPolynomial) -> Self {
        Self { terms: poly.polynomial().coeffs().map(|(mu, c)| (to_f64(c), orbit(mu))).collect() }
    }

    pub fn eval(&self, xi: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(c, orb)| {
                c * orb
                    .iter()
                    .map(|nu| nu.iter().zip(xi).map(|(&e, x)| e as f64 * x).sum::<f64>().cos())
                    .sum::<f64>()
            })
            .sum()
    }
}

/// `∫_𝔸 P_λ conj(P_μ) Δ̂ dξ`.
pub fn gram(family: &PolynomialFamily, lambda: &Partition, mu: &Partition, quad: &AlcoveQuadrature) -> Result<f64> {
    let a = RealPolynomial::new(family.get(lambda)?);
    let b = RealPolynomial::new(family.get(mu)?);
    Ok(quad.integrate(|xi| a.eval(xi) * b.eval(xi)))
}

#[derive(Debug, Clone, Serialize)]
pub struct QuadratureRow {
    pub lambda: String,
    pub mu: String,
    pub value: f64,
    pub target: f64,
    pub abs_err: f64,
    /// `abs_err` relative to `(Δ_λ Δ_μ)^{-1/2}`.
    pub rel_err: f64,
}

/// Gram matrix of the given labels against `δ_{λμ} Δ_λ⁻¹`.
pub fn orthogonality_report(
    family: &PolynomialFamily,
    labels: &[Partition],
    quad: &AlcoveQuadrature,
    tol: f64,
) -> Result<Vec<QuadratureRow>> {
    let polys: Vec<RealPolynomial> = labels.iter().map(|l| Ok(RealPolynomial::new(family.get(l)?))).collect::<Result<_>>()?;
    let d0 = delta0(&family.params().to_float(), family.n(), tol)?;
    let inv_norms: Vec<f64> =
        labels.iter().map(|l| Ok(1.0 / (d0 * to_f64(&norm_ratio(l, family.params())?)))).collect::<Result<_>>()?;
    let k = labels.len();
    let gram: Vec<f64> = quad
        .points()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|(xi, w)| {
            let vals: Vec<f64> = polys.iter().map(|p| p.eval(xi)).collect();
            let mut g = vec![0.0; k * k];
            for a in 0..k {
                for b in a..k {
                    g[a * k + b] = w * vals[a] * vals[b];
                }
            }
            g
        })
        .reduce(|| vec![0.0; k * k], |mut x, y| {
            x.iter_mut().zip(y).for_each(|(u, v)| *u += v);
            x
        });
    let mut rows = Vec::new();
    for a in 0..k {
        for b in a..k {
            let value = gram[a * k + b];
            let target = if a == b { inv_norms[a] } else { 0.0 };
            let abs_err = (value - target).abs();
            rows.push(QuadratureRow {
                lambda: labels[a].to_string(),
                mu: labels[b].to_string(),
                value,
                target,
                abs_err,
                rel_err: abs_err / (inv_norms[a] * inv_norms[b]).sqrt(),
            });
        }
    }
    Ok(rows)
}

pub fn write_quadrature_csv<W: Write>(rows: &[QuadratureRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}
