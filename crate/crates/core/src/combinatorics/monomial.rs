//! Hyperoctahedral orbits and the symmetric monomials
//! `m_λ(z) = Σ_{ν ∈ Wλ} z^ν`.

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::qcore::Scalar;

/// The orbit `Wλ` as a set of exponent vectors (no repetitions).
pub fn orbit(lambda: &Partition) -> Vec<Vec<i32>> {
    let mut sorted: Vec<i32> = lambda.parts().iter().map(|&p| p as i32).collect();
    sorted.sort_unstable();
    let mut out = Vec::new();
    loop {
        let nonzero: Vec<usize> = (0..sorted.len()).filter(|&i| sorted[i] != 0).collect();
        for mask in 0..(1usize << nonzero.len()) {
            let mut v = sorted.clone();
            for (b, &i) in nonzero.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    v[i] = -v[i];
                }
            }
            out.push(v);
        }
        if !next_permutation(&mut sorted) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [i32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Integer powers `z_j^k`, `|k| ≤ max_exp`, for repeated monomial evaluation at
/// a fixed point.
#[derive(Debug, Clone)]
pub struct PowerTable<T> {
    max_exp: i32,
    powers: Vec<Vec<T>>,
}

impl<T: Scalar> PowerTable<T> {
    pub fn new(z: &[T], max_exp: u32) -> Result<Self> {
        let max_exp = max_exp as i32;
        let mut powers = Vec::with_capacity(z.len());
        for zj in z {
            if zj.is_zero() {
                return Err(Error::Mismatch("monomials need nonzero coordinates".into()));
            }
            let inv = zj.inv();
            let mut row = vec![T::one(); (2 * max_exp + 1) as usize];
            for k in 1..=max_exp {
                row[(max_exp + k) as usize] = row[(max_exp + k - 1) as usize].clone() * zj.clone();
                row[(max_exp - k) as usize] = row[(max_exp - k + 1) as usize].clone() * inv.clone();
            }
            powers.push(row);
        }
        Ok(Self { max_exp, powers })
    }

    pub fn pow(&self, j: usize, k: i32) -> &T {
        &self.powers[j][(self.max_exp + k) as usize]
    }

    pub fn orbit_sum(&self, orbit: &[Vec<i32>]) -> T {
        orbit.iter().fold(T::zero(), |acc, nu| {
            let term = nu
                .iter()
                .enumerate()
                .fold(T::one(), |t, (j, &e)| t * self.pow(j, e).clone());
            acc + term
        })
    }
}

/// `m_λ(z)`.
pub fn monomial_eval<T: Scalar>(lambda: &Partition, z: &[T]) -> Result<T> {
    if z.len() != lambda.n() {
        return Err(Error::Mismatch(format!("point has {} coordinates, expected {}", z.len(), lambda.n())));
    }
    let table = PowerTable::new(z, lambda.parts()[0])?;
    Ok(table.orbit_sum(&orbit(lambda)))
}
