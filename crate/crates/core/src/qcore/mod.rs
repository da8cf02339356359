//! Scalars, q-Pochhammer symbols and parameter handling.

pub mod params;
pub mod pochhammer;
pub mod rational;

pub use params::{sample_params, FloatParams, ParamRecord, ParamSet};
pub use pochhammer::{qpoch_finite, qpoch_finite_multi, qpoch_infinite, qpoch_infinite_real, DEFAULT_TOL};
pub use rational::{format_rational, int, parse_rational, rat, to_f64, Rational, Scalar};
