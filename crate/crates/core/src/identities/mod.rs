//! Combinatorial and special-function identities behind the `L_k^p` operators.
//!
//! Every check here is a finite exact computation: sums are evaluated term by
//! term, polynomial identities are compared at more sample points than their
//! degree, and reports carry the offending values on failure.

mod catalan;
mod hyper;
mod toeplitz;

pub use catalan::{
    catalan, lkp_sr_decomposition, super_catalan, symmetric_identity_sides, szily_check, szily_sum,
    verify_symmetric_identity,
};
pub use hyper::{
    gauss_2f1_truncated, jacobi_polynomial, jacobi_root_to_z, jacobi_samples, q_polynomial,
    verify_jacobi_relation,
};
pub use toeplitz::{determinant, toeplitz_minor_scan, MinorPosition, ToeplitzScan, ToeplitzWindow};

pub use crate::exactpoly::Pochhammer;
