use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition `λ₁ ≥ λ₂ ≥ … ≥ λ_n ≥ 0` with exactly `n` (possibly zero)
/// parts.
///
/// The lattice point it labels is `ρ + λ` with `q^{ρ_j + λ_j} = t^{n-j} q^{λ_j}`;
/// `ρ` itself is never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Mismatch("a partition needs at least one part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Mismatch(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `λ_j` with 1-based `j`.
    pub fn part(&self, j: usize) -> u32 {
        self.0[j - 1]
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// `λ + δ` if it is again a partition.
    pub fn shifted(&self, delta: &[i32]) -> Option<Partition> {
        debug_assert_eq!(delta.len(), self.n());
        let mut parts = Vec::with_capacity(self.n());
        for (&p, &d) in self.0.iter().zip(delta) {
            let v = p as i64 + d as i64;
            if v < 0 {
                return None;
            }
            parts.push(v as u32);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            None
        } else {
            Some(Self(parts))
        }
    }

    /// `λ ± e_j` (1-based `j`), if admissible.
    pub fn step(&self, j: usize, up: bool) -> Option<Partition> {
        let mut delta = vec![0i32; self.n()];
        delta[j - 1] = if up { 1 } else { -1 };
        self.shifted(&delta)
    }

    /// Graded lexicographic order: weight first, then lexicographic. A linear
    /// extension of the dominance order.
    pub fn graded_cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }

    /// All partitions with `n` parts and weight at most `max_weight`, in
    /// graded lexicographic order.
    pub fn all_up_to_weight(n: usize, max_weight: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        fn rec(n: usize, bound: u32, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if current.len() == n {
                out.push(Partition(current.clone()));
                return;
            }
            for p in 0..=bound.min(remaining) {
                current.push(p);
                rec(n, p, remaining - p, current, out);
                current.pop();
            }
        }
        if n > 0 {
            rec(n, max_weight, max_weight, &mut current, &mut out);
        }
        out.sort_by(Partition::graded_cmp);
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Shorthand used throughout tests and examples; panics on invalid input.
pub fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("invalid partition literal")
}

/// Dominance order: `μ ≤ λ` iff every leading partial sum of `μ` is bounded by
/// the corresponding one of `λ`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.n() != lambda.n() {
        return Err(Error::Mismatch(format!(
            "dominance between partitions with {} and {} parts",
            mu.n(),
            lambda.n()
        )));
    }
    let (mut a, mut b) = (0u64, 0u64);
    for (x, y) in mu.parts().iter().zip(lambda.parts()) {
        a += *x as u64;
        b += *y as u64;
        if a > b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The principal order ideal `{μ : μ ≤ root}` in graded lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceIdeal {
    root: Partition,
    members: Vec<Partition>,
}

impl DominanceIdeal {
    pub fn root(&self) -> &Partition {
        &self.root
    }

    pub fn members(&self) -> &[Partition] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        self.members.binary_search_by(|m| m.graded_cmp(mu)).is_ok()
    }
}

pub fn ideal(root: &Partition) -> DominanceIdeal {
    let n = root.n();
    let mut bounds = Vec::with_capacity(n);
    let mut acc = 0u32;
    for &p in root.parts() {
        acc += p;
        bounds.push(acc);
    }
    let mut members = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(bounds: &[u32], prev: u32, sum: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let k = current.len();
        if k == bounds.len() {
            out.push(Partition(current.clone()));
            return;
        }
        let hi = prev.min(bounds[k] - sum);
        for p in 0..=hi {
            current.push(p);
            rec(bounds, p, sum + p, current, out);
            current.pop();
        }
    }
    rec(&bounds, root.parts()[0], 0, &mut current, &mut members);
    members.sort_by(Partition::graded_cmp);
    DominanceIdeal { root: root.clone(), members }
}

/// Union of the ideals of several roots, in graded lexicographic order.
pub fn ideal_union<'a>(roots: impl IntoIterator<Item = &'a Partition>) -> Vec<Partition> {
    let mut all: Vec<Partition> = roots.into_iter().flat_map(|r| ideal(r).members).collect();
    all.sort_by(Partition::graded_cmp);
    all.dedup();
    all
}
