//! Partitions, dominance ideals, hyperoctahedral orbits, symmetric functions
//! and the closed-form eigenvalues.

pub mod eigenvalues;
pub mod monomial;
pub mod partition;
pub mod signed;
pub mod symmetric;

pub use eigenvalues::{
    ehat_from_cos, ehat_l_from_cos, eln_arguments, eln_recurrence_residual, eval_e, eval_e_l, eval_ehat, eval_ehat_l, eval_eln,
};
pub use monomial::{monomial_eval, orbit, PowerTable};
pub use partition::{dominance_leq, ideal, ideal_union, part, DominanceIdeal, Partition};
pub use signed::SignedPermutation;
pub use symmetric::{complete_sym, elem_sym};
