//! Hypergeometric zeta functions.
//!
//! The N-th order hypergeometric zeta function generalizes the Riemann zeta
//! function by replacing the denominator e^x - 1 of the classical integral
//! representation with e^x - T_{N-1}(x), where T_{N-1} is the Taylor
//! polynomial of the exponential of degree N - 1:
//!
//! ```text
//! zeta_N(s) = 1/Gamma(s + N - 1) * integral_0^inf x^{s+N-2} / (e^x - T_{N-1}(x)) dx
//! ```
//!
//! For N = 1 this is the Riemann zeta function. The crate provides:
//!
//! * whole-plane evaluation of zeta_N(s) by region-appropriate methods
//!   (Dirichlet-type series, direct quadrature, subtracted-integrand strip
//!   continuation, and a convergent sum over the complex zeros of
//!   e^z - T_{N-1}(z)) — see [`zeta`];
//! * exact generalized Bernoulli numbers B_{N,n} in rational arithmetic,
//!   plus floating root-sum approximations and growth bounds — see
//!   [`bernoulli`];
//! * certified location of the upper-half-plane zeros of e^z - T_{N-1}(z)
//!   — see [`roots`];
//! * a machine-check suite for the functional inequalities, residues and
//!   reference tables — see [`verify`];
//! * a thin CLI over all of the above — see [`cli`] and the `hzeta` binary.
//!
//! Start from [`zeta::evaluate`] for plain evaluation, or browse the
//! `examples/` directory for runnable tours of each module.

pub mod bernoulli;
pub mod cli;
pub mod error;
pub mod numerics;
pub mod precision;
pub mod roots;
pub mod verify;
pub mod zeta;

pub use error::{Error, Result};
pub use precision::PrecisionContext;
