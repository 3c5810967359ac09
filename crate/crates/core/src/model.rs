//! Model parameters, regime classification of the (a, b) plane and the
//! market parameter mapping.

use std::fmt;

use crate::error::{check_finite, Error, Result};

/// Absolute tolerance used when comparing `a`, `b` and `a + b` with zero.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// Relative tolerance of the integer test on `b / a`.
pub const INTEGER_TOL: f64 = 1e-9;

/// Parameters of dX = (aX + b(1+t)^{-1} ∫_{-1}^t X ds) dt + σ dB.
///
/// The initial history ψ on [-1, 0] enters the dynamics for t ≥ 0 only
/// through ψ(0) and ∫ψ, so those two numbers are stored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub a: f64,
    pub b: f64,
    pub sigma: f64,
    pub psi0: f64,
    pub psi_int: f64,
}

impl Params {
    pub fn new(a: f64, b: f64, sigma: f64, psi0: f64, psi_int: f64) -> Result<Self> {
        let p = Params {
            a,
            b,
            sigma,
            psi0,
            psi_int,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        check_finite("a", self.a)?;
        check_finite("b", self.b)?;
        check_finite("sigma", self.sigma)?;
        check_finite("psi0", self.psi0)?;
        check_finite("psi_int", self.psi_int)?;
        if self.sigma <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "sigma must be positive, got {}",
                self.sigma
            )));
        }
        Ok(())
    }

    pub fn regime(&self) -> Result<Regime> {
        classify(self.a, self.b)
    }
}

/// Region of the (a, b) plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    /// a < 0, a + b < 0
    RecurrentOU,
    /// a < 0, a + b = 0
    RecurrentShifted,
    /// a < 0, a + b > 0
    PolynomialGrowth,
    /// a > 0, b ≠ 0
    ExponentialGrowth,
    /// a = 0, b > 0
    SubexponentialGrowth,
    /// a = 0, b < 0
    BrownianLike,
    /// a < 0, b = 0
    DegenerateOU,
    /// a = 0, b = 0
    DegenerateBM,
    /// a > 0, b = 0
    DegenerateExp,
}

impl Label {
    pub const ALL: [Label; 9] = [
        Label::RecurrentOU,
        Label::RecurrentShifted,
        Label::PolynomialGrowth,
        Label::ExponentialGrowth,
        Label::SubexponentialGrowth,
        Label::BrownianLike,
        Label::DegenerateOU,
        Label::DegenerateBM,
        Label::DegenerateExp,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Label::RecurrentOU => "RecurrentOU",
            Label::RecurrentShifted => "RecurrentShifted",
            Label::PolynomialGrowth => "PolynomialGrowth",
            Label::ExponentialGrowth => "ExponentialGrowth",
            Label::SubexponentialGrowth => "SubexponentialGrowth",
            Label::BrownianLike => "BrownianLike",
            Label::DegenerateOU => "DegenerateOU",
            Label::DegenerateBM => "DegenerateBM",
            Label::DegenerateExp => "DegenerateExp",
        }
    }

    pub fn is_recurrent(&self) -> bool {
        matches!(self, Label::RecurrentOU | Label::RecurrentShifted)
    }

    pub fn is_growth(&self) -> bool {
        matches!(
            self,
            Label::PolynomialGrowth | Label::ExponentialGrowth | Label::SubexponentialGrowth
        )
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Label::ALL
            .iter()
            .copied()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown regime label {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Regime {
    pub label: Label,
    /// True iff (a < 0 and b/a ∈ {1, 2, ...}) or (a > 0 and b/a ∈ {-1, -2, ...}).
    pub degenerate_integer: bool,
}

fn is_zero(x: f64) -> bool {
    x.abs() <= BOUNDARY_TOL
}

/// Nearest integer to `b / a` if it lies in the degenerate sign set for the
/// sign of `a` and is within `rel_tol·(1 + |b/a|)` of `b / a`.
pub(crate) fn degenerate_index(a: f64, b: f64, tol: impl Fn(f64) -> f64) -> Option<i64> {
    if is_zero(a) || is_zero(b) {
        return None;
    }
    let q = b / a;
    let n = q.round();
    if (q - n).abs() > tol(q) {
        return None;
    }
    let ok = if a < 0.0 { n >= 1.0 } else { n <= -1.0 };
    ok.then_some(n as i64)
}

/// Assigns the regime label and the degeneracy flag to (a, b).
pub fn classify(a: f64, b: f64) -> Result<Regime> {
    check_finite("a", a)?;
    check_finite("b", b)?;
    let label = if is_zero(a) {
        if is_zero(b) {
            Label::DegenerateBM
        } else if b > 0.0 {
            Label::SubexponentialGrowth
        } else {
            Label::BrownianLike
        }
    } else if a < 0.0 {
        if is_zero(b) {
            Label::DegenerateOU
        } else {
            let s = a + b;
            if is_zero(s) {
                Label::RecurrentShifted
            } else if s < 0.0 {
                Label::RecurrentOU
            } else {
                Label::PolynomialGrowth
            }
        }
    } else if is_zero(b) {
        Label::DegenerateExp
    } else {
        Label::ExponentialGrowth
    };
    let degenerate_integer = degenerate_index(a, b, |q| INTEGER_TOL * (1.0 + q.abs())).is_some();
    Ok(Regime {
        label,
        degenerate_integer,
    })
}

/// Maps the market parameters (α, β) to (a, b) = (α + β, −α).
pub fn market_to_ab(alpha: f64, beta: f64) -> Result<(f64, f64)> {
    check_finite("alpha", alpha)?;
    check_finite("beta", beta)?;
    Ok((alpha + beta, -alpha))
}

/// Inverse of [`market_to_ab`]: (α, β) = (−b, a + b).
pub fn ab_to_market(a: f64, b: f64) -> Result<(f64, f64)> {
    check_finite("a", a)?;
    check_finite("b", b)?;
    Ok((-b, a + b))
}
