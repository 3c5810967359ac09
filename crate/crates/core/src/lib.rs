//! Numerical toolkit for the affine stochastic functional differential equation
//!
//! ```text
//! dX(t) = (a X(t) + b (1+t)^{-1} ∫_{-1}^t X(s) ds) dt + σ dB(t)
//! ```
//!
//! The crate provides the regime classification of the (a, b) plane, a
//! special-function kernel, the differential resolvent r(t, s) built from
//! confluent hypergeometric and Bessel bases, the mean path and its limit
//! constants, autocovariances and memory diagnostics, and Monte Carlo path
//! simulation.

pub mod autocov;
pub mod error;
pub mod meanpath;
pub mod model;
pub mod montecarlo;
pub mod ode;
pub mod quad;
pub mod resolvent;
pub mod specfun;

pub use error::{Error, Result};
pub use model::{classify, market_to_ab, Label, Params, Regime};
