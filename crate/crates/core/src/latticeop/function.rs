use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::qcore::{format_rational, parse_rational, Rational, Scalar};

/// A finitely supported function on the lattice `ρ + Λ`, keyed by `λ`.
/// Absent keys are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeFunction<T> {
    n: usize,
    values: BTreeMap<Partition, T>,
}

impl<T: Scalar> LatticeFunction<T> {
    pub fn new(n: usize) -> Self {
        Self { n, values: BTreeMap::new() }
    }

    pub fn delta(lambda: &Partition) -> Self {
        let mut f = Self::new(lambda.n());
        f.values.insert(lambda.clone(), T::one());
        f
    }

    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (Partition, T)>) -> Result<Self> {
        let mut f = Self::new(n);
        for (lam, v) in entries {
            f.add_at(&lam, v)?;
        }
        Ok(f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, lambda: &Partition) -> T {
        self.values.get(lambda).cloned().unwrap_or_else(T::zero)
    }

    /// Adds `v` at `λ`, dropping entries that cancel to zero.
    pub fn add_at(&mut self, lambda: &Partition, v: T) -> Result<()> {
        if lambda.n() != self.n {
            return Err(Error::Mismatch(format!("{lambda} in a {}-particle lattice function", self.n)));
        }
        let entry = self.values.entry(lambda.clone()).or_insert_with(T::zero);
        *entry = entry.clone() + v;
        if entry.is_zero() {
            self.values.remove(lambda);
        }
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.values.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.values.keys()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|v| v.is_zero())
    }

    pub fn scaled(&self, c: &T) -> Self {
        let mut out = Self::new(self.n);
        for (k, v) in &self.values {
            let w = v.clone() * c.clone();
            if !w.is_zero() {
                out.values.insert(k.clone(), w);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (k, v) in &other.values {
            out.add_at(k, -v.clone())?;
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (k, v) in &other.values {
            out.add_at(k, v.clone())?;
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    lambda: Partition,
    value: String,
}

impl LatticeFunction<Rational> {
    /// `[{"lambda": [..], "value": "p/q"}, ...]` in key order.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<Entry> = self
            .values
            .iter()
            .map(|(k, v)| Entry { lambda: k.clone(), value: format_rational(v) })
            .collect();
        serde_json::to_value(entries).expect("lattice function entries serialize")
    }

    pub fn from_json(n: usize, value: &serde_json::Value) -> Result<Self> {
        let entries: Vec<Entry> = serde_json::from_value(value.clone())?;
        let mut f = Self::new(n);
        for e in entries {
            f.add_at(&e.lambda, parse_rational(&e.value)?)?;
        }
        Ok(f)
    }
}

/// Applies a row-finite operator: `(A f)(λ) = Σ_μ A[λ, μ] f(μ)`.
///
/// `shifts` lists every `μ - λ` that can occur in a row; `row(λ)` returns the
/// nonzero entries `(μ, A[λ, μ])`.
pub(crate) fn apply_rows<T, F>(f: &LatticeFunction<T>, shifts: &[Vec<i32>], row: F) -> Result<LatticeFunction<T>>
where
    T: Scalar,
    F: Fn(&Partition) -> Result<Vec<(Partition, Rational)>>,
{
    let mut sites: Vec<Partition> = Vec::new();
    for mu in f.support() {
        for delta in shifts {
            let back: Vec<i32> = delta.iter().map(|d| -d).collect();
            if let Some(lam) = mu.shifted(&back) {
                sites.push(lam);
            }
        }
    }
    sites.sort();
    sites.dedup();
    let mut out = LatticeFunction::new(f.n());
    for lam in sites {
        let mut acc = T::zero();
        for (mu, coeff) in row(&lam)? {
            let v = f.get(&mu);
            if !v.is_zero() {
                acc = acc + T::from_rational(&coeff) * v;
            }
        }
        if !acc.is_zero() {
            out.values.insert(lam, acc);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::part;
    use crate::qcore::rat;

    #[test]
    fn json_roundtrip_and_cancellation() {
        let mut f = LatticeFunction::<Rational>::new(2);
        f.add_at(&part(&[1, 0]), rat(1, 2)).unwrap();
        f.add_at(&part(&[2, 1]), rat(-3, 4)).unwrap();
        let json = f.to_json();
        assert_eq!(json.to_string(), r#"[{"lambda":[1,0],"value":"1/2"},{"lambda":[2,1],"value":"-3/4"}]"#);
        assert_eq!(LatticeFunction::from_json(2, &json).unwrap(), f);
        f.add_at(&part(&[1, 0]), rat(-1, 2)).unwrap();
        assert_eq!(f.len(), 1);
        assert!(f.add_at(&part(&[1]), rat(1, 1)).is_err());
    }
}
