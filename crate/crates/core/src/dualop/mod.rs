//! The dual `q`-difference operators `Ĥ_l` on W-invariant Laurent
//! polynomials and their matrices in the monomial basis.

pub mod invariant;
pub mod matrix;
pub mod operator;

pub use invariant::InvariantPolynomial;
pub use matrix::{matrix_in_monomial_basis, matrix_on_downset, StructuralFailure, TriangularMatrix};
pub use operator::{apply_hhat_l, apply_hhat_l_seeded, hhat_l_pointwise, sample_points, stencil, vhat, DEFAULT_SEED, MAX_RETRIES};
