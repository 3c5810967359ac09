//! Real-argument special functions: Γ, Kummer M, Tricomi U and the Bessel
//! functions J, Y, I, K of orders 0 and 1.
//!
//! Every evaluator returns a [`SpecValue`] carrying an estimate of the
//! relative error actually achieved by the branch that produced it.

mod bessel;
mod gamma;
mod hyper;

pub use bessel::{bessel_i, bessel_i_scaled, bessel_j, bessel_k, bessel_k_scaled, bessel_y};
pub use gamma::{gamma, ln_gamma, rgamma};
pub use hyper::{kummer_m, kummer_m_scaled, tricomi_u};

/// Default relative accuracy requested from every evaluator.
pub const TARGET_REL_ERR: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FnAccuracy {
    pub target_rel_err: f64,
    pub achieved_rel_err_estimate: f64,
}

/// A function value together with its accuracy estimate.
///
/// `overflow` is set when the true value lies outside the representable
/// range; `value` is then a signed infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpecValue {
    pub value: f64,
    pub accuracy: FnAccuracy,
    pub overflow: bool,
}

impl SpecValue {
    pub(crate) fn new(value: f64, err: f64) -> Self {
        SpecValue {
            value,
            accuracy: FnAccuracy {
                target_rel_err: TARGET_REL_ERR,
                achieved_rel_err_estimate: err.max(f64::EPSILON),
            },
            overflow: false,
        }
    }

    pub(crate) fn exact(value: f64) -> Self {
        Self::new(value, f64::EPSILON)
    }

    /// Builds `sign · exp(log_mag)`, flagging overflow instead of saturating.
    pub(crate) fn from_log(sign: f64, log_mag: f64, err: f64) -> Self {
        if log_mag > f64::MAX.ln() {
            SpecValue {
                overflow: true,
                ..Self::new(sign * f64::INFINITY, err)
            }
        } else {
            Self::new(sign * log_mag.exp(), err)
        }
    }
}

/// Euler–Mascheroni constant.
pub(crate) const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}
