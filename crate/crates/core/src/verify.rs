//! Verification suites over ranges of labels, returning per-case reports.

use std::str::FromStr;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::combinatorics::{eval_e_l, Partition};
use crate::dualop::{apply_hhat_l_seeded, matrix_on_downset, sample_points};
use crate::error::{Error, Result};
use crate::latticeop::{
    commutator_on_delta, elementary_identity_residual, morse_vanishing_limit_check, ruijsenaars_limit_check,
};
use crate::polynomials::PolynomialFamily;
use crate::qcore::{format_rational, to_f64, ParamSet, Rational};
use crate::spectral::{check_balance, conjugated_h_matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Pieri,
    Qdiff,
    Commute,
    Nonneg,
    Limits,
    Balance,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "pieri" => Self::Pieri,
            "qdiff" => Self::Qdiff,
            "commute" => Self::Commute,
            "nonneg" => Self::Nonneg,
            "limits" => Self::Limits,
            "balance" => Self::Balance,
            other => return Err(Error::Parse(format!("unknown suite {other:?}"))),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Case {
    pub label: String,
    pub passed: bool,
    /// Set for exact identities: whether the residual is exactly zero.
    pub exact_zero: Option<bool>,
    pub detail: Option<String>,
}

impl Case {
    fn exact(label: String, residual: &Rational) -> Self {
        let zero = residual.is_zero();
        Self {
            label,
            passed: zero,
            exact_zero: Some(zero),
            detail: (!zero).then(|| format!("residual {}", format_rational(residual))),
        }
    }

    fn check(label: String, passed: bool, detail: Option<String>) -> Self {
        Self { label, passed, exact_zero: None, detail }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub max_weight: u32,
    pub seed: u64,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub n: usize,
    pub max_weight: u32,
    pub seed: u64,
    /// Restricts `commute` to one pair of levels.
    pub levels: Option<(usize, usize)>,
    /// Evaluation points per label for `pieri`.
    pub points: usize,
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions, params: &ParamSet) -> Result<SuiteReport> {
    let cases = match suite {
        Suite::Pieri => pieri(opts, params)?,
        Suite::Qdiff => qdiff(opts, params)?,
        Suite::Commute => commute(opts, params)?,
        Suite::Nonneg => nonneg(opts, params)?,
        Suite::Limits => limits(opts, params)?,
        Suite::Balance => balance(opts, params)?,
    };
    let passed = cases.iter().filter(|c| c.passed).count();
    Ok(SuiteReport {
        suite,
        n: opts.n,
        max_weight: opts.max_weight,
        seed: opts.seed,
        passed,
        failed: cases.len() - passed,
        cases,
    })
}

fn pieri(opts: &SuiteOptions, params: &ParamSet) -> Result<Vec<Case>> {
    let n = opts.n;
    let family = PolynomialFamily::with_seed(n, opts.max_weight + n as u32, params, opts.seed)?;
    let points = sample_points(n, opts.points, opts.seed);
    let mut cases = Vec::new();
    for lam in Partition::all_up_to_weight(n, opts.max_weight) {
        for l in 1..=n {
            for (i, z) in points.iter().enumerate() {
                let r = family.pieri_residual(&lam, l, z)?;
                cases.push(Case::exact(format!("lambda={lam} l={l} point={i}"), &r));
            }
        }
    }
    Ok(cases)
}

fn qdiff(opts: &SuiteOptions, params: &ParamSet) -> Result<Vec<Case>> {
    let family = PolynomialFamily::with_seed(opts.n, opts.max_weight, params, opts.seed)?;
    let mut cases = Vec::new();
    for poly in family.iter() {
        for l in 1..=opts.n {
            let image = apply_hhat_l_seeded(l, poly.polynomial(), params, opts.seed.wrapping_add(1))?;
            let residual = image.sub(&poly.polynomial().scaled(&eval_e_l(poly.label(), l, params)?))?;
            let zero = residual.is_zero();
            cases.push(Case {
                label: format!("lambda={} l={l}", poly.label()),
                passed: zero,
                exact_zero: Some(zero),
                detail: (!zero).then(|| format!("{} nonzero coefficients", residual.len())),
            });
        }
    }
    Ok(cases)
}

fn commute(opts: &SuiteOptions, params: &ParamSet) -> Result<Vec<Case>> {
    let n = opts.n;
    let pairs: Vec<(usize, usize)> = match opts.levels {
        Some(p) => vec![p],
        None => (1..=n).flat_map(|l| (l + 1..=n).map(move |m| (l, m))).collect(),
    };
    let basis = Partition::all_up_to_weight(n, opts.max_weight);
    let mut cases = Vec::new();
    for &(l, m) in &pairs {
        for lam in &basis {
            let c = commutator_on_delta(l, m, lam, params)?;
            cases.push(Case::check(format!("lattice l={l} m={m} lambda0={lam}"), c.is_zero(), None));
        }
        let a = matrix_on_downset(l, &basis, params, opts.seed)?;
        let b = matrix_on_downset(m, &basis, params, opts.seed)?;
        let ok = a.is_triangular() && b.is_triangular() && a.commutes_with(&b)?;
        cases.push(Case::check(format!("dual l={l} m={m} weight<={}", opts.max_weight), ok, None));
    }
    Ok(cases)
}

fn nonneg(opts: &SuiteOptions, params: &ParamSet) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    for lam in Partition::all_up_to_weight(opts.n, opts.max_weight) {
        for l in 1..=opts.n {
            let e = eval_e_l(&lam, l, params)?;
            let ok = e >= Rational::zero();
            cases.push(Case::check(format!("lambda={lam} l={l}"), ok, (!ok).then(|| format_rational(&e))));
        }
    }
    Ok(cases)
}

fn limits(opts: &SuiteOptions, params: &ParamSet) -> Result<Vec<Case>> {
    let mut cases = Vec::new();
    let reduced = ParamSet::with_vanishing_that2(
        params.q().clone(),
        params.t().clone(),
        params.that()[0].clone(),
        params.that()[1].clone(),
    )?;
    for n in 1..=opts.n {
        let r = morse_vanishing_limit_check(&reduced, n, opts.max_weight)?;
        cases.push(Case::check(
            format!("morse t̂₂=0 n={n} sites={}", r.sites_checked),
            r.passed(),
            (!r.passed()).then(|| format!("{} mismatches", r.mismatches.len())),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for i in 0..50 {
        let k = rng.gen_range(1..=4);
        let z: Vec<Rational> = (0..k)
            .map(|_| Rational::new(rng.gen_range(-40i64..=40).into(), rng.gen_range(1i64..=13).into()))
            .collect();
        match elementary_identity_residual(&z, params.t()) {
            Ok(r) => cases.push(Case::exact(format!("elementary identity point={i}"), &r)),
            Err(Error::Pole(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    let r = ruijsenaars_limit_check([1e-4, 1e-6], opts.n, to_f64(params.q()), to_f64(params.t()), opts.max_weight);
    cases.push(Case::check(
        format!("ruijsenaars limit ratio={:.4}", r.ratio),
        r.is_linear(0.1),
        Some(format!("errors {:?} {:?}", r.err_plus, r.err_minus)),
    ));
    Ok(cases)
}

fn balance(opts: &SuiteOptions, params: &ParamSet) -> Result<Vec<Case>> {
    let (checked, bad) = check_balance(opts.n, opts.max_weight, params)?;
    let mut cases = vec![Case::check(
        format!("detailed balance pairs={checked}"),
        bad.is_empty(),
        (!bad.is_empty()).then(|| format!("{bad:?}")),
    )];
    for l in 1..=opts.n {
        let m = conjugated_h_matrix(l, opts.n, opts.max_weight, params)?;
        cases.push(Case::check(format!("conjugated H_{l} symmetric"), m.is_exactly_symmetric(), None));
    }
    Ok(cases)
}
