//! Exact and floating-point machinery for zeta values at non-positive integers.
//!
//! The crate is organized in two layers that check each other:
//!
//! * an exact layer ([`exact`], [`bernoulli`], [`zetasym`]) working over
//!   arbitrary-precision rationals: Bernoulli numbers and polynomials,
//!   Hurwitz zeta at non-positive integer first argument as a polynomial in
//!   the shift parameter, and the reduction of nested (multiple) zeta sums
//!   with non-positive integer trailing arguments to finite rational
//!   combinations of shifted Riemann zeta values;
//! * a floating-point layer ([`numerics`], [`fourier`]) providing complex
//!   gamma, Euler–Maclaurin evaluation of the Hurwitz zeta analytic
//!   continuation, Fourier partial sums of periodic Bernoulli functions,
//!   and Parseval/lattice-sum identities for products of Bernoulli
//!   polynomials.
//!
//! Every identity exposed here is testable in both directions: exact
//! results are rational and compared structurally, floating results are
//! compared against the exact layer at stated tolerances.

pub mod bernoulli;
pub mod exact;
pub mod fourier;
pub mod numerics;
pub mod zetasym;

pub use exact::{binomial, BigRational, RationalPoly};
pub use zetasym::{MZVSpec, ZetaCombination};

use thiserror::Error;

/// Errors shared by the evaluation layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    /// The requested point sits on (or within tolerance of) a pole.
    #[error("pole hit: {0}")]
    PoleHit(String),
    /// An argument lies outside the domain the operation is defined on.
    #[error("domain violation: {0}")]
    DomainViolation(String),
    /// A truncated sum whose convergence is not certified was refused.
    #[error("convergence unsafe: {0}")]
    ConvergenceUnsafe(String),
}
