use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde_json::json;

use crate::combinatorics::{orbit, Partition, PowerTable};
use crate::error::{Error, Result};
use crate::qcore::{format_rational, Rational, Scalar};

/// A W-invariant Laurent polynomial `Σ_μ c_μ m_μ` with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantPolynomial {
    n: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

impl InvariantPolynomial {
    pub fn zero(n: usize) -> Self {
        Self { n, coeffs: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.coeffs.insert(Partition::zero(n), c);
        }
        p
    }

    pub fn monomial(mu: &Partition) -> Self {
        let mut p = Self::zero(mu.n());
        p.coeffs.insert(mu.clone(), Rational::one());
        p
    }

    pub fn from_coeffs(n: usize, coeffs: impl IntoIterator<Item = (Partition, Rational)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (mu, c) in coeffs {
            p.add_term(&mu, c)?;
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Largest part over the support, i.e. the degree in each variable.
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(|mu| mu.parts()[0]).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, mu: &Partition, c: Rational) -> Result<()> {
        if mu.n() != self.n {
            return Err(Error::Mismatch(format!("monomial {mu} in a polynomial of {} variables", self.n)));
        }
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.coeffs.entry(mu.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(mu);
        }
        Ok(())
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self { n: self.n, coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (mu, c) in &other.coeffs {
            out.add_term(mu, -c)?;
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (mu, c) in &other.coeffs {
            out.add_term(mu, c.clone())?;
        }
        Ok(out)
    }

    /// `Σ c_μ m_μ(z)`.
    pub fn eval<T: Scalar>(&self, z: &[T]) -> Result<T> {
        if z.len() != self.n {
            return Err(Error::Mismatch(format!("point has {} coordinates, expected {}", z.len(), self.n)));
        }
        let table = PowerTable::new(z, self.degree())?;
        Ok(self.eval_with(&table, &mut OrbitCache::default()))
    }

    pub(crate) fn eval_with<T: Scalar>(&self, table: &PowerTable<T>, cache: &mut OrbitCache) -> T {
        self.coeffs.iter().fold(T::zero(), |acc, (mu, c)| {
            acc + T::from_rational(c) * table.orbit_sum(cache.get(mu))
        })
    }

    /// `[{"mu": [...], "value": "p/q"}]` in graded order.
    pub fn coeffs_json(&self) -> serde_json::Value {
        let mut keys: Vec<&Partition> = self.coeffs.keys().collect();
        keys.sort_by(|a, b| a.graded_cmp(b));
        serde_json::Value::Array(
            keys.into_iter()
                .map(|mu| json!({"mu": mu, "value": format_rational(&self.coeffs[mu])}))
                .collect(),
        )
    }
}

#[derive(Debug, Default)]
pub(crate) struct OrbitCache(BTreeMap<Partition, Vec<Vec<i32>>>);

impl OrbitCache {
    pub fn get(&mut self, mu: &Partition) -> &[Vec<i32>] {
        self.0.entry(mu.clone()).or_insert_with(|| orbit(mu))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{monomial_eval, part};
    use crate::qcore::{int, rat};

    #[test]
    fn arithmetic_and_evaluation() {
        let a = InvariantPolynomial::from_coeffs(2, [(part(&[1, 0]), rat(1, 2)), (part(&[0, 0]), int(3))]).unwrap();
        let b = InvariantPolynomial::monomial(&part(&[1, 0]));
        let d = a.sub(&b.scaled(&rat(1, 2))).unwrap();
        assert_eq!(d, InvariantPolynomial::constant(2, int(3)));
        let z = [rat(2, 3), rat(5, 7)];
        let expect = rat(1, 2) * monomial_eval(&part(&[1, 0]), &z).unwrap() + int(3);
        assert_eq!(a.eval(&z).unwrap(), expect);
        assert!(a.add(&InvariantPolynomial::monomial(&part(&[1]))).is_err());
        assert!(a.eval(&[rat(0, 1), rat(1, 2)]).is_err());
    }
}
