//! Orthogonality measure, norms, Fourier transform and the conjugated
//! Hamiltonian with its unitary dynamics.

pub mod dynamics;
pub mod fourier;
pub mod norms;
pub mod quadrature;
pub mod weight;

pub use dynamics::{conjugated_h_matrix, evolve, l2_norm, max_distance, ConjugatedMatrix, Evolution, Propagator};
pub use fourier::FourierPair;
pub use norms::{balance_residual, check_balance, delta0, norm_delta, norm_ratio, NormValue};
pub use quadrature::{gram, orthogonality_report, write_quadrature_csv, AlcoveQuadrature, QuadSpec, QuadratureRow, RealPolynomial};
pub use weight::{weight, weight_extended, AlcovePoint};
