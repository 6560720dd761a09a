//! Exact construction of Macdonald polynomials in N variables.
//!
//! Everything is computed over the fraction field of integer polynomials in
//! the two deformation parameters q and t — no floating point anywhere. The
//! crate provides:
//!
//! - [`qt`]: the coefficient field (canonical rational functions in q, t),
//! - [`mpoly`]: sparse multivariate polynomials over it,
//! - [`hecke`]: the affine Hecke algebra generators and Dunkl–Cherednik
//!   operators acting on those polynomials,
//! - [`symfun`]: partitions, dominance order, classical symmetric-function
//!   bases and the (q,t) scalar product,
//! - [`macdonald`]: Macdonald q-difference operators, their eigenvalues, and
//!   the Gram–Schmidt construction of the integral forms `J_lambda`,
//! - [`creation`]: the three creation operators and the Rodrigues-style
//!   driver that builds `J_lambda` by raising columns,
//! - [`pieri_kostka`]: Pieri coefficients and (q,t)-Kostka matrices,
//! - [`verify`]: the exact-identity verification suites behind the CLI.

pub mod error;
pub mod qt;

pub use error::{Error, Result};
