//! The lattice Hamiltonian `H`, its commuting integrals `H_l`, and limit
//! checks.

pub mod function;
pub mod hamiltonian;
pub mod integrals;
pub mod limits;

pub use function::LatticeFunction;
pub use hamiltonian::{apply_h, h_row, v_minus, v_plus};
pub use integrals::{apply_hl, commutator_on_delta, epsilon0, hl_row, u_coeff, v_coeff};
pub use limits::{
    elementary_identity_residual, morse_vanishing_limit_check, ruijsenaars_limit_check, GenericCouplings,
    LimitMismatch, MorseLimitReport, RuijsenaarsLimitReport,
};
