//! Hecke coefficients of synthetic forms and the structure constants of the
//! Hecke relations.

mod form;
mod relations;
mod satake;

pub use form::{build_form, ForcedZeros, SyntheticForm, NUMERIC_ZERO};
pub use relations::{
    boundedness_scan, coefficient_bound, hecke_product_expansion, hecke_square_identity_check, schur_value,
};
pub use satake::SatakePoint;
