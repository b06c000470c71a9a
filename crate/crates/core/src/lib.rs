//! Exact-arithmetic toolkit for non-linear coefficient operators that
//! preserve real-negative-rootedness.
//!
//! The operators `L_k^p` (extended Turán forms), Fisk's `S_r` and the general
//! quadratic transform `T_mu` act on polynomials with rational coefficients.
//! [`rootcert`] certifies where the zeros of the results lie, [`identities`]
//! checks the combinatorial and hypergeometric identities behind the
//! operators, and [`lpclass`] builds Laguerre–Pólya data and Jensen
//! approximations.

pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod identities;
pub mod lpclass;
pub mod operators;
pub mod rational;
pub mod report;
pub mod rootcert;
pub mod search;
pub mod suites;

pub use error::{Error, Result};
pub use exactpoly::{Polynomial, TaylorData};
pub use rational::Rational;
pub use report::VerificationReport;
