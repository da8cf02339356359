//! Lattice hyperbolic Ruijsenaars–Schneider particles with an exponential
//! Morse term: the lattice Hamiltonian and its commuting integrals, the
//! multivariate continuous dual q-Hahn eigenpolynomials built from the dual
//! q-difference operators, orthogonality and Fourier analysis, and the
//! factorized scattering matrix.
//!
//! Exact computations use [`qcore::Rational`]; transcendental quantities
//! (infinite products, quadrature, evolution) use `f64` and `Complex64`.

// `!(x < 1.0)` style guards also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod combinatorics;
pub mod dualop;
pub mod error;
pub mod latticeop;
pub mod linalg;
pub mod polynomials;
pub mod qcore;
pub mod scattering;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
