//! Symmetric-function algebra in `n` variables on the torus `x_1⋯x_n = 1`.
//!
//! A κ-index `(κ_1, …, κ_{n-1})` labels the degenerate Schur polynomial
//! `S_κ`, the ratio of alternants with numerator exponents
//! `Σ_{l ≤ n-i} (κ_l + 1)`. Subtracting the staircase shows `S_κ = s_λ` with
//! `λ_i = κ_1 + ⋯ + κ_{n-i}`; see [`partition_from_kappa`].

mod eval;
mod expansion;
mod kappa;
mod lr;
mod oracle;
mod partition;
pub mod tableaux;

pub use eval::{
    dimension, schur_eval_cyclotomic, schur_eval_determinant, schur_eval_tableaux,
    CyclotomicInteger, SchurPolynomial, DEGENERACY_THRESHOLD,
};
pub use expansion::SchurExpansion;
pub use kappa::{kappa_dual, partition_from_kappa, partition_to_kappa, KappaIndex};
pub use lr::{littlewood_richardson, reduce_mod_determinant, schur_multiply};
pub use oracle::{lr_bruteforce_oracle, lr_bruteforce_oracle_with_guard, DEFAULT_ORACLE_GUARD};
pub use partition::Partition;
