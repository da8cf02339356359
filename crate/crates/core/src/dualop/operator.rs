//! Pointwise evaluation of `Ĥ_l` and its realization on invariant polynomials
//! by evaluation-interpolation.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::invariant::{InvariantPolynomial, OrbitCache};
use crate::combinatorics::{ideal_union, Partition, PowerTable};
use crate::error::{Error, Result};
use crate::linalg;
use crate::qcore::{ParamSet, Rational, Scalar};

pub const DEFAULT_SEED: u64 = 0x5eed;
/// Fresh point sets tried before a singular evaluation matrix is reported.
pub const MAX_RETRIES: u32 = 16;
const PRIMES: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

struct Coeffs<T> {
    q: T,
    t: T,
    that: [T; 3],
}

impl<T: Scalar> Coeffs<T> {
    fn new(params: &ParamSet) -> Self {
        let that = params.that();
        Self {
            q: T::from_rational(params.q()),
            t: T::from_rational(params.t()),
            that: [0, 1, 2].map(|r| T::from_rational(&that[r])),
        }
    }
}

#[derive(Clone, Copy)]
enum Internal {
    V,
    U,
}

fn div<T: Scalar>(num: T, den: T, what: &'static str) -> Result<T> {
    if den.is_zero() {
        Err(Error::Pole(what))
    } else {
        Ok(num / den)
    }
}

fn one_body<T: Scalar>(x: &T, c: &Coeffs<T>) -> Result<T> {
    let num = c.that.iter().fold(T::one(), |acc, a| acc * (T::one() - a.clone() * x.clone()));
    let x2 = x.clone() * x.clone();
    div(num, (T::one() - x2.clone()) * (T::one() - c.q.clone() * x2), "one-body factor of v̂")
}

fn pair<T: Scalar>(x: T, c: &Coeffs<T>) -> Result<T> {
    div(T::one() - c.t.clone() * x.clone(), T::one() - x, "pair factor of v̂")
}

/// Product over a set of shifted variables `(j, ε_j)` with spectators `rest`.
fn block<T: Scalar>(z: &[T], movers: &[(usize, i32)], rest: &[usize], internal: Internal, c: &Coeffs<T>) -> Result<T> {
    let ze: Vec<T> = movers.iter().map(|&(j, e)| z[j].powi(e)).collect();
    let mut v = T::one();
    for x in &ze {
        v = v * one_body(x, c)?;
        for &k in rest {
            v = v * pair(x.clone() * z[k].clone(), c)? * pair(x.clone() / z[k].clone(), c)?;
        }
    }
    for (a, b) in (0..ze.len()).tuple_combinations() {
        let x = ze[a].clone() * ze[b].clone();
        let qx = c.q.clone() * x.clone();
        let num = match internal {
            Internal::V => T::one() - c.t.clone() * qx.clone(),
            Internal::U => c.t.clone() - qx.clone(),
        };
        v = v * pair(x, c)? * div(num, T::one() - qx, "internal factor of V̂")?;
    }
    Ok(v)
}

fn sign_patterns(k: usize) -> impl Iterator<Item = Vec<i32>> {
    (0..1u32 << k).map(move |m| (0..k).map(|b| if m >> b & 1 == 1 { -1 } else { 1 }).collect())
}

fn u_hat<T: Scalar>(z: &[T], k: &[usize], p: usize, c: &Coeffs<T>) -> Result<T> {
    let mut total = T::zero();
    for subset in k.iter().copied().combinations(p) {
        let rest: Vec<usize> = k.iter().copied().filter(|j| !subset.contains(j)).collect();
        for eps in sign_patterns(p) {
            let movers: Vec<(usize, i32)> = subset.iter().copied().zip(eps).collect();
            total = total + block(z, &movers, &rest, Internal::U, c)?;
        }
    }
    Ok(if p % 2 == 1 { -total } else { total })
}

/// `v̂_j(z)` with `z_k = e^{iξ_k}`; `j` is 1-based.
pub fn vhat<T: Scalar>(j: usize, z: &[T], params: &ParamSet) -> Result<T> {
    if j == 0 || j > z.len() {
        return Err(Error::OutOfRange(format!("particle index {j} for n = {}", z.len())));
    }
    let rest: Vec<usize> = (0..z.len()).filter(|&k| k != j - 1).collect();
    block(z, &[(j - 1, 1)], &rest, Internal::V, &Coeffs::new(params))
}

/// The coefficients `K_s(z)` of `Ĥ_l = Σ_s K_s T̂^s`, indexed by shift
/// vectors `s ∈ {-1, 0, 1}ⁿ` with at most `l` nonzero entries.
pub fn stencil<T: Scalar>(l: usize, z: &[T], params: &ParamSet) -> Result<Vec<(Vec<i32>, T)>> {
    let n = z.len();
    check_level(l, n)?;
    let c = Coeffs::new(params);
    let mut out = Vec::new();
    for size in 0..=l {
        for jset in (0..n).combinations(size) {
            let rest: Vec<usize> = (0..n).filter(|k| !jset.contains(k)).collect();
            let u = u_hat(z, &rest, l - size, &c)?;
            if u.is_zero() {
                continue;
            }
            for eps in sign_patterns(size) {
                let movers: Vec<(usize, i32)> = jset.iter().copied().zip(eps).collect();
                let v = block(z, &movers, &rest, Internal::V, &c)?;
                let mut s = vec![0; n];
                for &(j, e) in &movers {
                    s[j] = e;
                }
                out.push((s, u.clone() * v));
            }
        }
    }
    Ok(out)
}

pub(crate) fn check_level(l: usize, n: usize) -> Result<()> {
    if l == 0 || l > n {
        return Err(Error::OutOfRange(format!("level l = {l} for n = {n}")));
    }
    Ok(())
}

fn shifted<T: Scalar>(z: &[T], s: &[i32], q: &T) -> Vec<T> {
    z.iter().zip(s).map(|(x, &e)| x.clone() * q.powi(e)).collect()
}

/// `(Ĥ_l p)(z)` from the defining sum.
pub fn hhat_l_pointwise<T: Scalar>(l: usize, p: &InvariantPolynomial, z: &[T], params: &ParamSet) -> Result<T> {
    if z.len() != p.n() {
        return Err(Error::Mismatch(format!("point has {} coordinates, expected {}", z.len(), p.n())));
    }
    let q = T::from_rational(params.q());
    let mut total = T::zero();
    for (s, k) in stencil(l, z, params)? {
        total = total + k * p.eval(&shifted(z, &s, &q))?;
    }
    Ok(total)
}

/// Deterministic generator of points `z_j = ±a/b` with `a ≠ b` small primes.
pub(crate) struct PointSampler {
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn draw(&mut self, n: usize) -> Vec<Rational> {
        (0..n)
            .map(|_| {
                let ab: Vec<&i64> = PRIMES.choose_multiple(&mut self.rng, 2).collect();
                let sign = if self.rng.gen_bool(0.5) { 1 } else { -1 };
                Rational::new((sign * ab[0]).into(), (*ab[1]).into())
            })
            .collect()
    }
}

/// `count` distinct points with `z_j = ±a/b`, reproducible from `seed`.
pub fn sample_points(n: usize, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut sampler = PointSampler::new(seed);
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(count);
    while out.len() < count {
        let z = sampler.draw(n);
        if !out.contains(&z) {
            out.push(z);
        }
    }
    out
}

struct Sample {
    stencil: Vec<(Vec<i32>, Rational)>,
    monomials: Vec<Rational>,
    inputs: Vec<Rational>,
}

/// Evaluates the monomials of `basis` and the images of all `inputs` at a
/// point, or reports a pole.
fn sample(
    l: usize,
    z: &[Rational],
    basis: &[Partition],
    inputs: &[InvariantPolynomial],
    params: &ParamSet,
    cache: &mut OrbitCache,
) -> Result<Sample> {
    let st = stencil(l, z, params)?;
    let deg = basis.iter().map(|mu| mu.parts()[0]).chain(inputs.iter().map(|p| p.degree())).max().unwrap_or(0);
    let table = PowerTable::new(z, deg)?;
    let monomials = basis.iter().map(|mu| table.orbit_sum(cache.get(mu))).collect();
    let shifted_tables: Vec<PowerTable<Rational>> = st
        .iter()
        .map(|(s, _)| PowerTable::new(&shifted(z, s, params.q()), deg))
        .collect::<Result<_>>()?;
    let images = inputs
        .iter()
        .map(|p| {
            st.iter()
                .zip(&shifted_tables)
                .fold(Rational::zero(), |acc, ((_, k), tab)| acc + k * p.eval_with(tab, cache))
        })
        .collect();
    Ok(Sample { stencil: st, monomials, inputs: images })
}

/// Draws points until one avoids every pole and has not been used before.
fn next_point(sampler: &mut PointSampler, n: usize, seen: &mut Vec<Vec<Rational>>, f: &mut impl FnMut(&[Rational]) -> Result<Sample>) -> Result<Sample> {
    for _ in 0..10_000 {
        let z = sampler.draw(n);
        if seen.contains(&z) {
            continue;
        }
        match f(&z) {
            Ok(s) => {
                seen.push(z);
                return Ok(s);
            }
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Pole("every sampled point hit a pole"))
}

/// Images `Ĥ_l p` of every input, expanded over `basis`, which must contain
/// their supports. Each image is confirmed at a held-out point; a mismatch
/// means the image leaves `span(basis)` and is reported as a structural
/// failure.
pub(crate) fn interpolate_images(
    l: usize,
    n: usize,
    basis: &[Partition],
    inputs: &[InvariantPolynomial],
    params: &ParamSet,
    seed: u64,
) -> Result<Vec<BTreeMap<Partition, Rational>>> {
    check_level(l, n)?;
    let mut cache = OrbitCache::default();
    let mut eval = |z: &[Rational]| sample(l, z, basis, inputs, params, &mut cache);
    for attempt in 0..MAX_RETRIES {
        let mut sampler = PointSampler::new(seed.wrapping_add(attempt as u64));
        let mut seen = Vec::new();
        let rows: Vec<Sample> = (0..basis.len()).map(|_| next_point(&mut sampler, n, &mut seen, &mut eval)).collect::<Result<_>>()?;
        let a: Vec<Vec<Rational>> = rows.iter().map(|s| s.monomials.clone()).collect();
        let b: Vec<Vec<Rational>> = rows.iter().map(|s| s.inputs.clone()).collect();
        let x = match linalg::solve(&a, &b) {
            Ok(x) => x,
            Err(Error::Singular { .. }) => continue,
            Err(e) => return Err(e),
        };
        let held_out = next_point(&mut sampler, n, &mut seen, &mut eval)?;
        debug_assert!(!held_out.stencil.is_empty());
        let mut images = Vec::with_capacity(inputs.len());
        for (c, expected) in held_out.inputs.iter().enumerate() {
            let got: Rational = basis.iter().enumerate().map(|(i, _)| &x[i][c] * &held_out.monomials[i]).sum();
            if &got != expected {
                return Err(Error::Structure(format!(
                    "image of input {c} under Ĥ_{l} is not spanned by the {} candidate monomials",
                    basis.len()
                )));
            }
            images.push(
                basis
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !x[*i][c].is_zero())
                    .map(|(i, mu)| (mu.clone(), x[i][c].clone()))
                    .collect(),
            );
        }
        return Ok(images);
    }
    Err(Error::Singular { retries: MAX_RETRIES })
}

/// `Ĥ_l p`, exact.
pub fn apply_hhat_l(l: usize, p: &InvariantPolynomial, params: &ParamSet) -> Result<InvariantPolynomial> {
    apply_hhat_l_seeded(l, p, params, DEFAULT_SEED)
}

pub fn apply_hhat_l_seeded(l: usize, p: &InvariantPolynomial, params: &ParamSet, seed: u64) -> Result<InvariantPolynomial> {
    let basis = if p.is_zero() { vec![Partition::zero(p.n())] } else { ideal_union(p.support()) };
    let mut images = interpolate_images(l, p.n(), &basis, std::slice::from_ref(p), params, seed)?;
    InvariantPolynomial::from_coeffs(p.n(), images.pop().unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{eval_e, part};
    use crate::qcore::{int, rat};

    fn params() -> ParamSet {
        ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(-1, 5)]).unwrap()
    }

    #[test]
    fn vhat_one_particle() {
        let p = params();
        let z = rat(2, 7);
        let expected = (int(1) - rat(1, 2) * &z) * (int(1) - rat(1, 3) * &z) * (int(1) + rat(1, 5) * &z)
            / ((int(1) - &z * &z) * (int(1) - rat(1, 3) * &z * &z));
        assert_eq!(vhat(1, &[z], &p).unwrap(), expected);
        assert_eq!(vhat(1, &[2.0f64], &p).unwrap(), 0.0);
        assert!(matches!(vhat(1, &[int(1)], &p), Err(Error::Pole(_))));
        assert!(vhat(2, &[int(3)], &p).is_err());
    }

    #[test]
    fn vhat_two_particles() {
        let p = params();
        let z = [int(2), int(3)];
        let one = |x: Rational| {
            (int(1) - rat(1, 2) * &x) * (int(1) - rat(1, 3) * &x) * (int(1) + rat(1, 5) * &x)
                / ((int(1) - &x * &x) * (int(1) - rat(1, 3) * &x * &x))
        };
        let pr = |x: Rational| (int(1) - rat(1, 2) * &x) / (int(1) - x);
        let expected = one(int(2)) * pr(int(6)) * pr(rat(2, 3));
        assert_eq!(vhat(1, &z, &p).unwrap(), expected);
    }

    #[test]
    fn level_one_is_the_hamiltonian_sum() {
        let p = params();
        let poly = InvariantPolynomial::from_coeffs(2, [(part(&[2, 1]), int(1)), (part(&[1, 0]), rat(3, 4))]).unwrap();
        let z = [rat(3, 11), rat(-7, 5)];
        let q = p.q();
        let direct: Rational = (1..=2)
            .map(|j| {
                let up: Vec<Rational> = z.iter().enumerate().map(|(i, x)| if i == j - 1 { x * q } else { x.clone() }).collect();
                let dn: Vec<Rational> = z.iter().enumerate().map(|(i, x)| if i == j - 1 { x / q } else { x.clone() }).collect();
                let zi: Vec<Rational> = z.iter().enumerate().map(|(i, x)| if i == j - 1 { x.recip() } else { x.clone() }).collect();
                let f0 = poly.eval(&z).unwrap();
                vhat(j, &z, &p).unwrap() * (poly.eval(&up).unwrap() - &f0)
                    + vhat(j, &zi, &p).unwrap() * (poly.eval(&dn).unwrap() - &f0)
            })
            .sum();
        assert_eq!(hhat_l_pointwise(1, &poly, &z, &p).unwrap(), direct);
    }

    #[test]
    fn constants_are_annihilated() {
        let p = params();
        for n in 1..=3 {
            let one = InvariantPolynomial::constant(n, int(1));
            assert!(apply_hhat_l(1, &one, &p).unwrap().is_zero());
        }
        assert!(apply_hhat_l(2, &InvariantPolynomial::constant(1, int(1)), &p).is_err());
    }

    #[test]
    fn one_particle_image() {
        let p = params();
        let img = apply_hhat_l(1, &InvariantPolynomial::monomial(&part(&[1])), &p).unwrap();
        assert_eq!(img.coeff(&part(&[1])), eval_e(&part(&[1]), &p));
        assert_eq!(img.coeff(&part(&[1])), int(2));
        // held-out consistency
        let z = [rat(13, 17)];
        let direct = hhat_l_pointwise(1, &InvariantPolynomial::monomial(&part(&[1])), &z, &p).unwrap();
        assert_eq!(img.eval(&z).unwrap(), direct);
        assert!(img.len() <= 2);
    }

    #[test]
    fn seeds_agree() {
        let p = params();
        let m = InvariantPolynomial::monomial(&part(&[2, 1]));
        assert_eq!(apply_hhat_l_seeded(2, &m, &p, 1).unwrap(), apply_hhat_l_seeded(2, &m, &p, 99).unwrap());
    }
}
