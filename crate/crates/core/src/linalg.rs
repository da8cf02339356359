//! Exact linear solves over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qcore::Rational;

/// Solves `A X = B` exactly for square `A` and any number of right-hand side
/// columns. `b[i]` holds row `i` of `B`.
///
/// Rows of `[A | B]` are scaled to integers and reduced by fraction-free
/// (Bareiss) elimination; back-substitution is done in the rationals.
/// Returns [`Error::Singular`] with `retries = 0` when `A` is singular.
pub fn solve(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(Error::Mismatch(format!("system of {n} rows is not square or has {} right-hand rows", b.len())));
    }
    let r = b.first().map_or(0, Vec::len);
    if b.iter().any(|row| row.len() != r) {
        return Err(Error::Mismatch("ragged right-hand side".into()));
    }
    let mut m: Vec<Vec<BigInt>> = a.iter().zip(b).map(|(ar, br)| integer_row(ar.iter().chain(br))).collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&i| !m[i][k].is_zero()).ok_or(Error::Singular { retries: 0 })?;
        m.swap(k, pivot);
        let (top, bottom) = m.split_at_mut(k + 1);
        let pk = &top[k];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n + r {
                let v = &pk[k] * &row[j] - &lead * &pk[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = m[k][k].clone();
    }

    let mut x = vec![vec![Rational::zero(); r]; n];
    for i in (0..n).rev() {
        let d = Rational::from_integer(m[i][i].clone());
        for c in 0..r {
            let mut acc = Rational::from_integer(m[i][n + c].clone());
            for j in i + 1..n {
                if !m[i][j].is_zero() {
                    acc -= Rational::from_integer(m[i][j].clone()) * &x[j][c];
                }
            }
            x[i][c] = acc / &d;
        }
    }
    Ok(x)
}

fn integer_row<'a>(row: impl Iterator<Item = &'a Rational> + Clone) -> Vec<BigInt> {
    let lcm = row.clone().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.map(|v| v.numer() * (&lcm / v.denom())).collect()
}
