//! Arithmetic statistics of L-functions at desk scale.
//!
//! The library tabulates generalized von Mangoldt functions Lambda(n; F) for
//! the Riemann zeta function, the Ramanujan Delta form, and elliptic curves,
//! and computes the statistics built on them:
//!
//! - short-interval variances Var^fix / Var^mul with their two-regime
//!   theoretical predictions ([`variance`]),
//! - arithmetic pair correlations C(r, N; F) and the Hardy-Littlewood
//!   singular series ([`correlations`]),
//! - Montgomery's pair-correlation statistic F(X, T) over zero ordinates and
//!   the closed-form 2-point correlation model for zeta ([`zerostats`]).

pub mod arith;
pub mod correlations;
pub mod error;
pub mod kahan;
pub mod lfunc;
pub mod variance;
pub mod zerostats;

pub use error::{Error, Result};

/// Euler's constant gamma = 0.5772...
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
