use crate::error::{Error, Result};

/// Element `w = (σ, ε)` of the hyperoctahedral group acting on vectors by
/// `(w v)_i = ε_i v_{σ(i)}` (0-based `σ`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::Mismatch("permutation and sign vector differ in length".into()));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Mismatch(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Mismatch("signs must be ±1".into()));
        }
        Ok(Self { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        Self { perm: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `sign(w) = ε₁⋯ε_n sign(σ)`.
    pub fn sign(&self) -> i32 {
        let mut inversions = 0;
        for i in 0..self.perm.len() {
            for j in i + 1..self.perm.len() {
                if self.perm[i] > self.perm[j] {
                    inversions += 1;
                }
            }
        }
        let eps: i32 = self.signs.iter().map(|&s| s as i32).product();
        if inversions % 2 == 0 {
            eps
        } else {
            -eps
        }
    }

    pub fn apply<T>(&self, v: &[T]) -> Vec<T>
    where
        T: Clone + std::ops::Neg<Output = T>,
    {
        self.perm
            .iter()
            .zip(&self.signs)
            .map(|(&p, &s)| if s == 1 { v[p].clone() } else { -v[p].clone() })
            .collect()
    }

    /// All `2ⁿ n!` elements.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut out = Vec::new();
        for perm in permutations(n) {
            for mask in 0..(1usize << n) {
                let signs = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                out.push(SignedPermutation { perm: perm.clone(), signs });
            }
        }
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut current, &mut out);
    out
}
