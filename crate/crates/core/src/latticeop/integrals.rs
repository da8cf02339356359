//! Higher commuting integrals `H_1, …, H_n` of the lattice model.
//!
//! `(H_l f)(ρ+λ) = Σ U_{J₊ᶜ∩J₋ᶜ, l-|J₊|-|J₋|}(λ) V_{J₊,J₋}(λ) f(ρ+λ+e_{J₊}-e_{J₋})`
//! over disjoint `J₊, J₋ ⊂ {1..n}` with `|J₊|+|J₋| ≤ l` and
//! `λ + e_{J₊} - e_{J₋} ∈ Λ`. Index sets are handled as bitmasks (bit `j-1`
//! for particle `j`).

use num_traits::{One, Zero};

use super::function::{apply_rows, LatticeFunction};
use super::hamiltonian::Site;
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::qcore::{ParamSet, Rational, Scalar};

fn members(mask: u32, n: usize) -> impl Iterator<Item = usize> {
    (1..=n).filter(move |j| mask >> (j - 1) & 1 == 1)
}

fn to_mask(set: &[usize], n: usize) -> Result<u32> {
    let mut mask = 0u32;
    for &j in set {
        if j == 0 || j > n {
            return Err(Error::OutOfRange(format!("index {j} outside 1..={n}")));
        }
        mask |= 1 << (j - 1);
    }
    Ok(mask)
}

/// `(a - b·d)/(1 - d)` with `d = t^{k-j} q^{λ_j-λ_k+extra}`.
fn ratio(site: &Site<'_>, a: &Rational, b: &Rational, j: usize, k: usize, extra: i32) -> Result<Rational> {
    let d = site.d(j, k, extra);
    let den = Rational::one() - &d;
    if den.is_zero() {
        return Err(Error::Degenerate(format!(
            "vanishing denominator 1 - t^{}q^{} at λ = {}",
            k as i32 - j as i32,
            site.lambda.part(j) as i32 - site.lambda.part(k) as i32 + extra,
            site.lambda
        )));
    }
    Ok((a - b * d) / den)
}

/// Products shared by `V` and `U`: one-body factors of the hopping particles,
/// the cross factors between up- and down-hoppers, and the interaction with
/// the spectators in `rest`.
fn hop_product(site: &Site<'_>, plus: u32, minus: u32, rest: u32, cross_second: CrossKind) -> Result<Rational> {
    let n = site.n();
    let t = site.params.t();
    let tinv = t.recip();
    let one = Rational::one();
    let mut v = Rational::one();
    for j in members(plus, n) {
        v *= site.up(j);
    }
    for j in members(minus, n) {
        v *= site.down(j);
    }
    for j in members(plus, n) {
        for k in members(minus, n) {
            v *= ratio(site, &one, t, j, k, 0)?;
            v *= match cross_second {
                CrossKind::Hop => ratio(site, &tinv, &one, j, k, 1)?,
                CrossKind::Diagonal => ratio(site, &one, &tinv, j, k, 1)?,
            };
        }
        for k in members(rest, n) {
            v *= ratio(site, &tinv, &one, j, k, 0)?;
        }
    }
    for j in members(minus, n) {
        for k in members(rest, n) {
            v *= ratio(site, t, &one, j, k, 0)?;
        }
    }
    Ok(v)
}

#[derive(Clone, Copy)]
enum CrossKind {
    /// `(t⁻¹ - t^{k-j}q^{λ_j-λ_k+1}) / (1 - t^{k-j}q^{λ_j-λ_k+1})` in `V`.
    Hop,
    /// `(1 - t^{k-j-1}q^{λ_j-λ_k+1}) / (1 - t^{k-j}q^{λ_j-λ_k+1})` in `U`.
    Diagonal,
}

fn v_mask(site: &Site<'_>, plus: u32, minus: u32) -> Result<Rational> {
    let n = site.n();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let rest = full & !plus & !minus;
    let a = plus.count_ones() as i32;
    let b = minus.count_ones() as i32;
    // t^{-a(a-1)/2 + b(b-1)/2}
    let prefactor = site.params.t().pow(-a * (a - 1) / 2 + b * (b - 1) / 2);
    Ok(prefactor * hop_product(site, plus, minus, rest, CrossKind::Hop)?)
}

fn u_mask(site: &Site<'_>, k_mask: u32, p: usize) -> Result<Rational> {
    if p > k_mask.count_ones() as usize {
        return Ok(Rational::zero());
    }
    let mut total = Rational::zero();
    // I₊ ⊂ K, I₋ ⊂ K \ I₊ with |I₊| + |I₋| = p
    let mut plus = k_mask;
    loop {
        let a = plus.count_ones() as usize;
        if a <= p {
            let remaining = k_mask & !plus;
            let mut minus = remaining;
            loop {
                if a + minus.count_ones() as usize == p {
                    let spectators = k_mask & !plus & !minus;
                    total += hop_product(site, plus, minus, spectators, CrossKind::Diagonal)?;
                }
                if minus == 0 {
                    break;
                }
                minus = (minus - 1) & remaining;
            }
        }
        if plus == 0 {
            break;
        }
        plus = (plus - 1) & k_mask;
    }
    Ok(if p % 2 == 1 { -total } else { total })
}

/// `V_{J₊,J₋}(λ)`; `V_{∅,∅} = 1`.
pub fn v_coeff(jplus: &[usize], jminus: &[usize], lambda: &Partition, params: &ParamSet) -> Result<Rational> {
    let n = lambda.n();
    let plus = to_mask(jplus, n)?;
    let minus = to_mask(jminus, n)?;
    if plus & minus != 0 {
        return Err(Error::Mismatch(format!("J+ = {jplus:?} and J- = {jminus:?} overlap")));
    }
    v_mask(&Site::new(lambda, params), plus, minus)
}

/// `U_{K,p}(λ)`; `U_{K,0} = 1` and `U_{K,p} = 0` for `p > |K|`.
pub fn u_coeff(k: &[usize], p: usize, lambda: &Partition, params: &ParamSet) -> Result<Rational> {
    let k_mask = to_mask(k, lambda.n())?;
    u_mask(&Site::new(lambda, params), k_mask, p)
}

fn check_level(l: usize, n: usize) -> Result<()> {
    if l == 0 || l > n {
        Err(Error::OutOfRange(format!("integral H_{l} with n = {n}")))
    } else {
        Ok(())
    }
}

/// Nonzero entries `(λ + e_{J₊} - e_{J₋}, U·V)` of the row of `H_l` at `λ`.
pub fn hl_row(l: usize, lambda: &Partition, params: &ParamSet) -> Result<Vec<(Partition, Rational)>> {
    let n = lambda.n();
    check_level(l, n)?;
    let site = Site::new(lambda, params);
    let full: u32 = (1u32 << n) - 1;
    let mut row = Vec::new();
    for plus in 0..=full {
        let a = plus.count_ones() as usize;
        if a > l {
            continue;
        }
        let free = full & !plus;
        let mut minus = free;
        loop {
            let b = minus.count_ones() as usize;
            if a + b <= l {
                let delta: Vec<i32> = (0..n)
                    .map(|i| (plus >> i & 1) as i32 - (minus >> i & 1) as i32)
                    .collect();
                if let Some(target) = lambda.shifted(&delta) {
                    let u = u_mask(&site, full & !plus & !minus, l - a - b)?;
                    if !u.is_zero() {
                        let c = u * v_mask(&site, plus, minus)?;
                        if !c.is_zero() {
                            row.push((target, c));
                        }
                    }
                }
            }
            if minus == 0 {
                break;
            }
            minus = (minus - 1) & free;
        }
    }
    Ok(row)
}

/// All shifts `e_{J₊} - e_{J₋}` with `|J₊| + |J₋| ≤ l`.
pub(crate) fn level_shifts(n: usize, l: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut current = vec![0i32; n];
    fn rec(i: usize, used: usize, l: usize, current: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if i == current.len() {
            out.push(current.clone());
            return;
        }
        for s in [0, 1, -1] {
            let cost = if s == 0 { 0 } else { 1 };
            if used + cost <= l {
                current[i] = s;
                rec(i + 1, used + cost, l, current, out);
            }
        }
        current[i] = 0;
    }
    rec(0, 0, l, &mut current, &mut out);
    out
}

/// `(H_l f)(ρ + λ)` for a finitely supported `f`.
pub fn apply_hl<T: Scalar>(l: usize, f: &LatticeFunction<T>, params: &ParamSet) -> Result<LatticeFunction<T>> {
    check_level(l, f.n())?;
    apply_rows(f, &level_shifts(f.n(), l), |lam| hl_row(l, lam, params))
}

/// `ε₀ = Σ_j (t̂₀ t^{n-j} + t̂₀⁻¹ t^{j-n})`.
pub fn epsilon0(params: &ParamSet, n: usize) -> Rational {
    let a0 = params.that0();
    (1..=n).fold(Rational::zero(), |acc, j| {
        let e = n as i32 - j as i32;
        acc + a0 * params.t().pow(e) + params.t().pow(-e) / a0
    })
}

/// `(H_l H_m - H_m H_l) δ_{λ₀}`, exactly.
pub fn commutator_on_delta(l: usize, m: usize, lambda0: &Partition, params: &ParamSet) -> Result<LatticeFunction<Rational>> {
    let delta = LatticeFunction::<Rational>::delta(lambda0);
    let lm = apply_hl(l, &apply_hl(m, &delta, params)?, params)?;
    let ml = apply_hl(m, &apply_hl(l, &delta, params)?, params)?;
    lm.sub(&ml)
}
