//! Model parameters `(q, t, t̂₀, t̂₁, t̂₂)` and the derived Morse couplings.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{abs_lt_one, format_rational, parse_rational, to_f64, Rational};
use crate::error::{Error, Result};

/// Exact parameter set.
///
/// The Morse couplings of the lattice Hamiltonian are tied to the dual
/// couplings by `t₀ = q⁻¹ t̂₁ t̂₂`, `t₁ = t̂₀ t̂₂`, `t₂ = t̂₀ t̂₁` (with `t₃ = 1`),
/// which turns the square-root prefactors of the hopping amplitudes into the
/// rationals `t̂₀^{∓1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamSet {
    q: Rational,
    t: Rational,
    that: [Rational; 3],
    t0: Rational,
    t1: Rational,
    t2: Rational,
}

const HAT_NAMES: [&str; 3] = ["that0", "that1", "that2"];

fn check_unit_interval(name: &'static str, v: &Rational) -> Result<()> {
    if v.is_positive() && *v < Rational::one() {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value: format_rational(v),
            reason: "must lie in (0, 1)",
        })
    }
}

fn check_hat(name: &'static str, v: &Rational) -> Result<()> {
    if !v.is_zero() && abs_lt_one(v) {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value: format_rational(v),
            reason: "must lie in (-1, 1) and be nonzero",
        })
    }
}

impl ParamSet {
    /// Validates the domain `q, t ∈ (0,1)`, `t̂_r ∈ (-1,1) \ {0}` and fills in
    /// the derived couplings.
    pub fn from_hat(q: Rational, t: Rational, that: [Rational; 3]) -> Result<Self> {
        check_unit_interval("q", &q)?;
        check_unit_interval("t", &t)?;
        for (name, v) in HAT_NAMES.iter().zip(&that) {
            check_hat(name, v)?;
        }
        Ok(Self::derive(q, t, that))
    }

    /// The `t̂₂ → 0` degeneration (outside the spectral domain, used only for
    /// the limit check of the lattice Hamiltonian).
    pub fn with_vanishing_that2(q: Rational, t: Rational, that0: Rational, that1: Rational) -> Result<Self> {
        check_unit_interval("q", &q)?;
        check_unit_interval("t", &t)?;
        check_hat("that0", &that0)?;
        check_hat("that1", &that1)?;
        Ok(Self::derive(q, t, [that0, that1, Rational::zero()]))
    }

    /// Parses the five parameters from strings (`"p/q"` or decimals).
    pub fn parse(q: &str, t: &str, that: [&str; 3]) -> Result<Self> {
        Self::from_hat(
            parse_rational(q)?,
            parse_rational(t)?,
            [parse_rational(that[0])?, parse_rational(that[1])?, parse_rational(that[2])?],
        )
    }

    fn derive(q: Rational, t: Rational, that: [Rational; 3]) -> Self {
        let t0 = &that[1] * &that[2] / &q;
        let t1 = &that[0] * &that[2];
        let t2 = &that[0] * &that[1];
        Self { q, t, that, t0, t1, t2 }
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }
    pub fn t(&self) -> &Rational {
        &self.t
    }
    pub fn that(&self) -> &[Rational; 3] {
        &self.that
    }
    pub fn that0(&self) -> &Rational {
        &self.that[0]
    }
    pub fn t0(&self) -> &Rational {
        &self.t0
    }
    pub fn t1(&self) -> &Rational {
        &self.t1
    }
    pub fn t2(&self) -> &Rational {
        &self.t2
    }

    pub fn to_float(&self) -> FloatParams {
        FloatParams {
            q: to_f64(&self.q),
            t: to_f64(&self.t),
            that: [to_f64(&self.that[0]), to_f64(&self.that[1]), to_f64(&self.that[2])],
        }
    }

    pub fn record(&self) -> ParamRecord {
        ParamRecord {
            q: format_rational(&self.q),
            t: format_rational(&self.t),
            that: self.that.iter().map(format_rational).collect(),
        }
    }
}

/// String form of a [`ParamSet`] for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRecord {
    pub q: String,
    pub t: String,
    pub that: Vec<String>,
}

/// Floating-point view of the parameters for the transcendental quantities
/// (weights, norms `Δ₀`, scattering phases).
///
/// Unlike [`ParamSet`] this only requires `|q|, |t| < 1`, so it can also
/// describe the degenerate limits `t̂_r → 0`, `q → 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatParams {
    pub q: f64,
    pub t: f64,
    pub that: [f64; 3],
}

impl FloatParams {
    pub fn new(q: f64, t: f64, that: [f64; 3]) -> Result<Self> {
        if !(q.abs() < 1.0) {
            return Err(Error::Domain { name: "q", value: q.to_string(), reason: "|q| < 1 required" });
        }
        if !(t.abs() < 1.0) {
            return Err(Error::Domain { name: "t", value: t.to_string(), reason: "|t| < 1 required" });
        }
        for (name, v) in HAT_NAMES.iter().zip(that) {
            if !(v.abs() < 1.0) {
                return Err(Error::Domain { name, value: v.to_string(), reason: "|t̂| < 1 required" });
            }
        }
        Ok(Self { q, t, that })
    }
}

/// Draws a parameter set with small-denominator rationals, rejecting
/// multiplicative relations `q^a = t^b` with `a, b ≤ 12` (which can make
/// dual eigenvalues collide).
pub fn sample_params<R: rand::Rng>(rng: &mut R) -> ParamSet {
    let mut frac = |signed: bool| loop {
        let den: i64 = rng.gen_range(2..=9);
        let num: i64 = rng.gen_range(1..den);
        let sign = if signed && rng.gen_bool(0.5) { -1 } else { 1 };
        let r = Rational::new((sign * num).into(), den.into());
        if abs_lt_one(&r) && !r.is_zero() {
            break r;
        }
    };
    loop {
        let q = frac(false);
        let t = frac(false);
        let related = (1..=12).any(|a| (1..=12).any(|b| q.pow(a) == t.pow(b)));
        if related {
            continue;
        }
        let that = [frac(true), frac(true), frac(true)];
        if let Ok(p) = ParamSet::from_hat(q, t, that) {
            return p;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::rational::rat;

    fn sample() -> ParamSet {
        ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)]).unwrap()
    }

    #[test]
    fn sampled_sets_are_generic() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let p = sample_params(&mut rng);
            assert!(ParamSet::from_hat(p.q().clone(), p.t().clone(), p.that().clone()).is_ok());
            assert!((1..=12).all(|a| p.q().pow(a) != p.t().pow(a)));
        }
    }

    #[test]
    fn derived_couplings() {
        let p = sample();
        assert_eq!(*p.t0(), rat(1, 5));
        assert_eq!(*p.t1(), rat(1, 10));
        assert_eq!(*p.t2(), rat(1, 6));
    }

    #[test]
    fn symmetric_hats_give_equal_couplings() {
        let p = ParamSet::from_hat(rat(1, 3), rat(1, 2), [rat(2, 3), rat(1, 4), rat(1, 4)]).unwrap();
        assert_eq!(p.t1(), p.t2());
    }

    #[test]
    fn recovers_that0_squared() {
        for that in [[rat(1, 2), rat(1, 3), rat(1, 5)], [rat(-3, 4), rat(2, 9), rat(-1, 7)]] {
            let p = ParamSet::from_hat(rat(2, 5), rat(3, 7), that.clone()).unwrap();
            let lhs = &that[0] * &that[0];
            let rhs = p.t1() * p.t2() / (p.q() * p.t0());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rejects_out_of_domain() {
        let err = ParamSet::from_hat(rat(2, 1), rat(1, 2), [rat(1, 2), rat(1, 3), rat(1, 5)]).unwrap_err();
        assert!(matches!(err, Error::Domain { name: "q", .. }));
        let err = ParamSet::from_hat(rat(1, 2), rat(1, 2), [rat(1, 2), rat(0, 1), rat(1, 5)]).unwrap_err();
        assert!(matches!(err, Error::Domain { name: "that1", .. }));
        let err = ParamSet::from_hat(rat(1, 2), rat(1, 1), [rat(1, 2), rat(1, 3), rat(1, 5)]).unwrap_err();
        assert!(matches!(err, Error::Domain { name: "t", .. }));
        assert!(ParamSet::from_hat(rat(1, 2), rat(1, 2), [rat(-1, 1), rat(1, 3), rat(1, 5)]).is_err());
        // negative couplings are admissible
        assert!(ParamSet::from_hat(rat(1, 2), rat(1, 2), [rat(-1, 2), rat(-1, 3), rat(1, 5)]).is_ok());
    }

    #[test]
    fn parses_strings() {
        let p = ParamSet::parse("1/3", "0.5", ["1/2", "1/3", "0.2"]).unwrap();
        assert_eq!(p, sample());
        assert_eq!(p.record().that, vec!["1/2", "1/3", "1/5"]);
    }
}
