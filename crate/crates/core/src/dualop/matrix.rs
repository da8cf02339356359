use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;
use serde_json::json;

use super::invariant::InvariantPolynomial;
use super::operator::{check_level, interpolate_images, DEFAULT_SEED};
use crate::combinatorics::{dominance_leq, eval_e_l, ideal, Partition};
use crate::error::{Error, Result};
use crate::qcore::{format_rational, ParamSet, Rational};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StructuralFailure {
    /// `c_{μν} ≠ 0` although `ν ≰ μ`.
    OutsideIdeal { mu: Partition, nu: Partition, value: String },
    /// `c_{μμ} ≠ E_{μ,l}`.
    Diagonal { mu: Partition, got: String, expected: String },
}

/// Matrix of `Ĥ_l` in the monomial basis: `Ĥ_l m_μ = Σ_ν c_{μν} m_ν`.
#[derive(Debug, Clone)]
pub struct TriangularMatrix {
    l: usize,
    root: Option<Partition>,
    basis: Vec<Partition>,
    entries: BTreeMap<(Partition, Partition), Rational>,
    failures: Vec<StructuralFailure>,
}

impl TriangularMatrix {
    pub fn level(&self) -> usize {
        self.l
    }

    /// The root of the ideal, when built from one.
    pub fn root(&self) -> Option<&Partition> {
        self.root.as_ref()
    }

    /// Rows and columns, in graded lexicographic order.
    pub fn basis(&self) -> &[Partition] {
        &self.basis
    }

    pub fn get(&self, mu: &Partition, nu: &Partition) -> Rational {
        self.entries.get(&(mu.clone(), nu.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn diagonal(&self, mu: &Partition) -> Rational {
        self.get(mu, mu)
    }

    /// Nonzero entries `((μ, ν), c_{μν})`.
    pub fn entries(&self) -> impl Iterator<Item = (&(Partition, Partition), &Rational)> {
        self.entries.iter()
    }

    pub fn failures(&self) -> &[StructuralFailure] {
        &self.failures
    }

    pub fn is_triangular(&self) -> bool {
        self.failures.is_empty()
    }

    /// Row `μ` as a polynomial, i.e. `Ĥ_l m_μ`.
    pub fn image(&self, mu: &Partition) -> InvariantPolynomial {
        let n = mu.n();
        let mut p = InvariantPolynomial::zero(n);
        for nu in &self.basis {
            let _ = p.add_term(nu, self.get(mu, nu));
        }
        p
    }

    /// `Σ_μ c_μ Ĥ_l m_μ`, provided `p` is supported on the basis.
    pub fn apply(&self, p: &InvariantPolynomial) -> Result<InvariantPolynomial> {
        let mut out = InvariantPolynomial::zero(p.n());
        for (mu, c) in p.coeffs() {
            if self.basis.binary_search_by(|b| b.graded_cmp(mu)).is_err() {
                return Err(Error::OutOfRange(format!("{mu} is outside the matrix basis")));
            }
            out = out.add(&self.image(mu).scaled(c))?;
        }
        Ok(out)
    }

    /// Dense form with rows and columns ordered as [`Self::basis`].
    pub fn dense(&self) -> Vec<Vec<Rational>> {
        self.basis.iter().map(|mu| self.basis.iter().map(|nu| self.get(mu, nu)).collect()).collect()
    }

    /// Whether `[A, B] = 0` exactly; both must share a basis.
    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        if self.basis != other.basis {
            return Err(Error::Mismatch("commutator of matrices over different bases".into()));
        }
        let (a, b) = (self.dense(), other.dense());
        let n = a.len();
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for k in 0..n {
                    s += &a[i][k] * &b[k][j] - &b[i][k] * &a[k][j];
                }
                if !s.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `[{"mu": [...], "nu": [...], "value": "p/q"}]`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|((mu, nu), v)| json!({"mu": mu, "nu": nu, "value": format_rational(v)}))
                .collect(),
        )
    }
}

/// `c^{(l)}_{μν}` for all `μ, ν ≤ root`, with triangularity and the diagonal
/// checked rather than assumed.
pub fn matrix_in_monomial_basis(l: usize, root: &Partition, params: &ParamSet) -> Result<TriangularMatrix> {
    let basis = ideal(root).members().to_vec();
    let mut m = matrix_on_downset(l, &basis, params, DEFAULT_SEED)?;
    m.root = Some(root.clone());
    Ok(m)
}

/// As [`matrix_in_monomial_basis`] over any dominance-closed `basis`, such as
/// all partitions up to a given weight.
pub fn matrix_on_downset(l: usize, basis: &[Partition], params: &ParamSet, seed: u64) -> Result<TriangularMatrix> {
    let n = basis.first().map(Partition::n).ok_or_else(|| Error::Mismatch("empty basis".into()))?;
    check_level(l, n)?;
    let mut basis = basis.to_vec();
    basis.sort_by(Partition::graded_cmp);
    basis.dedup();
    let inputs: Vec<InvariantPolynomial> = basis.iter().map(InvariantPolynomial::monomial).collect();
    let images = interpolate_images(l, n, &basis, &inputs, params, seed)?;
    let mut entries = BTreeMap::new();
    let mut failures = Vec::new();
    for (mu, image) in basis.iter().zip(images) {
        let expected = eval_e_l(mu, l, params)?;
        let got = image.get(mu).cloned().unwrap_or_else(Rational::zero);
        if got != expected {
            failures.push(StructuralFailure::Diagonal {
                mu: mu.clone(),
                got: format_rational(&got),
                expected: format_rational(&expected),
            });
        }
        for (nu, v) in image {
            if !dominance_leq(&nu, mu)? {
                failures.push(StructuralFailure::OutsideIdeal {
                    mu: mu.clone(),
                    nu: nu.clone(),
                    value: format_rational(&v),
                });
            }
            entries.insert((mu.clone(), nu), v);
        }
    }
    Ok(TriangularMatrix { l, root: None, basis, entries, failures })
}
