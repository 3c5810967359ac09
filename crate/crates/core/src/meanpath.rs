//! The mean x(t) = E[X(t)], growth normalizers, and the limiting constants
//! E[C], Var[C] (growth regimes) and E[L], Var[L] (a + b = 0).
//!
//! x solves the resolvent ODE with x(0) = ψ(0), x'(0) = aψ(0) + b∫ψ, so
//! x = c_A r_A + c_B r_B with (c_A, c_B) from one 2×2 solve at t = 0.

use crate::error::{check_finite, Error, Result};
use crate::model::{Label, Params, Regime};
use crate::quad::{integrate_half_line, Tolerance};
use crate::resolvent::{BasisPair, Eval, Resolvent, Scaled};
use crate::specfun::{bessel_k, bessel_k_scaled, tricomi_u};

/// Mean path x(t) in the resolvent basis.
#[derive(Debug, Clone)]
pub struct MeanSolution {
    pub params: Params,
    pub regime: Regime,
    /// Coefficient of r_A (for b = 0, r_A = e^{at}).
    pub c_a: f64,
    /// Coefficient of r_B (zero for b = 0).
    pub c_b: f64,
    /// True when b/a was snapped to a nearby degenerate integer.
    pub near_degenerate_warning: bool,
    resolvent: Resolvent,
    ca: Scaled,
    cb: Scaled,
}

impl MeanSolution {
    pub fn basis(&self) -> Option<&BasisPair> {
        self.resolvent.basis()
    }

    pub fn resolvent(&self) -> &Resolvent {
        &self.resolvent
    }

    /// x(t) and x'(t) as Σ m·e^{log} terms, returned as (terms of x, terms of x').
    fn terms(&self, t: f64) -> Result<[(f64, f64, f64); 2]> {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Error::Domain(format!("mean needs finite t >= 0, got {t}")));
        }
        let (ra, rb) = row_evals(&self.resolvent, t)?;
        Ok([
            (self.ca.m * ra.m, self.ca.m * ra.dm, self.ca.log + ra.log),
            (self.cb.m * rb.m, self.cb.m * rb.dm, self.cb.log + rb.log),
        ])
    }

    /// x(t).
    pub fn eval(&self, t: f64) -> Result<f64> {
        Ok(self.terms(t)?.iter().map(|&(m, _, l)| exp_mul(m, l)).sum())
    }

    /// x'(t).
    pub fn derivative(&self, t: f64) -> Result<f64> {
        Ok(self.terms(t)?.iter().map(|&(_, d, l)| exp_mul(d, l)).sum())
    }

    /// x(t) / N(t) for the regime's growth normalizer N, computed in log
    /// space so that neither factor needs to be representable.
    pub fn normalized(&self, t: f64) -> Result<f64> {
        let ln_n = ln_growth_normalizer(self.regime, self.params.a, self.params.b, t)?;
        Ok(self
            .terms(t)?
            .iter()
            .map(|&(m, _, l)| exp_mul(m, l - ln_n))
            .sum())
    }
}

fn exp_mul(m: f64, log: f64) -> f64 {
    if m == 0.0 {
        0.0
    } else {
        m * log.exp()
    }
}

fn row_evals(r: &Resolvent, t: f64) -> Result<(Eval, Eval)> {
    match r.basis() {
        Some(bp) => bp.stable_pair(t),
        None => Ok((
            Eval {
                m: 1.0,
                dm: r.a,
                log: r.a * t,
            },
            Eval {
                m: 0.0,
                dm: 0.0,
                log: 0.0,
            },
        )),
    }
}

/// Solves for (c_A, c_B).
pub fn mean_solution(params: &Params) -> Result<MeanSolution> {
    mean_solution_with_wronskian0(params, 1.0)
}

/// As [`mean_solution`], with `w0` normalizing a degenerate second solution.
pub fn mean_solution_with_wronskian0(params: &Params, w0: f64) -> Result<MeanSolution> {
    params.validate()?;
    let regime = params.regime()?;
    let (a, b) = (params.a, params.b);
    let resolvent = Resolvent::with_wronskian0(a, b, w0)?;
    let (ca, cb) = match resolvent.basis() {
        None => (
            Scaled {
                m: params.psi0,
                log: 0.0,
            },
            Scaled { m: 0.0, log: 0.0 },
        ),
        Some(bp) => {
            let x0 = params.psi0;
            let x1 = a * params.psi0 + b * params.psi_int;
            let (ra, rb) = bp.stable_pair(0.0)?;
            // Cramer's rule with W(0) = det·e^{log_A + log_B}
            let det = ra.m * rb.dm - ra.dm * rb.m;
            if det == 0.0 || !det.is_finite() {
                return Err(Error::Singular(format!(
                    "basis Wronskian vanishes at ({a}, {b})"
                )));
            }
            // c_A = (x0 r_B' − x1 r_B)/W, c_B = (x1 r_A − x0 r_A')/W
            let ca = Scaled {
                m: (x0 * rb.dm - x1 * rb.m) / det,
                log: -ra.log,
            };
            let cb = Scaled {
                m: (x1 * ra.m - x0 * ra.dm) / det,
                log: -rb.log,
            };
            (ca, cb)
        }
    };
    let degenerate = resolvent.basis().is_some_and(|bp| bp.is_degenerate());
    // (ca, cb) multiply the stable pair; on the degenerate branch that is
    // (r_A, r̃ − r_A), so the r_A coefficient of (r_A, r̃) is ca − cb
    let c_a = if degenerate {
        ca.value() - cb.value()
    } else {
        ca.value()
    };
    Ok(MeanSolution {
        params: *params,
        regime,
        c_a,
        c_b: cb.value(),
        near_degenerate_warning: resolvent
            .basis()
            .is_some_and(|bp| bp.near_degenerate_warning),
        resolvent,
        ca,
        cb,
    })
}

/// x(t) for a solved mean.
pub fn mean_eval(sol: &MeanSolution, t: f64) -> Result<f64> {
    sol.eval(t)
}

/// ln N(t) for the regime's normalizer N.
pub fn ln_growth_normalizer(regime: Regime, a: f64, b: f64, t: f64) -> Result<f64> {
    check_finite("t", t)?;
    let need = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "normalizer needs {what}, got t = {t}"
            )))
        }
    };
    match regime.label {
        Label::ExponentialGrowth => {
            need(t > 0.0, "t > 0")?;
            Ok(a * t + b / a * t.ln())
        }
        Label::PolynomialGrowth => {
            need(t > 0.0, "t > 0")?;
            Ok(-(1.0 + b / a) * t.ln())
        }
        Label::SubexponentialGrowth => {
            need(t > 0.0, "t > 0")?;
            Ok(-0.25 * t.ln() + 2.0 * (b * t).sqrt())
        }
        Label::RecurrentOU | Label::RecurrentShifted => {
            need(t > 1.0, "t > 1")?;
            Ok(0.5 * (2.0 * t.ln()).ln())
        }
        Label::BrownianLike | Label::DegenerateBM => {
            need(t > std::f64::consts::E, "t > e")?;
            Ok(0.5 * (2.0 * t * t.ln().ln()).ln())
        }
        Label::DegenerateOU | Label::DegenerateExp => Err(Error::Unsupported(format!(
            "no growth normalizer for {}",
            regime.label
        ))),
    }
}

/// The normalizer N(t): e^{at}t^{b/a}, t^{-(1+b/a)}, t^{-1/4}e^{2√(bt)},
/// √(2 log t) or √(2t log log t) according to the regime.
pub fn growth_normalizer(regime: Regime, a: f64, b: f64, t: f64) -> Result<f64> {
    Ok(ln_growth_normalizer(regime, a, b, t)?.exp())
}

/// Human-readable form of the normalizer.
pub fn growth_normalizer_formula(label: Label) -> Option<&'static str> {
    match label {
        Label::ExponentialGrowth => Some("e^(a t) t^(b/a)"),
        Label::PolynomialGrowth => Some("t^(-(1+b/a))"),
        Label::SubexponentialGrowth => Some("t^(-1/4) e^(2 sqrt(b t))"),
        Label::RecurrentOU | Label::RecurrentShifted => Some("sqrt(2 log t)"),
        Label::BrownianLike | Label::DegenerateBM => Some("sqrt(2 t log log t)"),
        Label::DegenerateOU | Label::DegenerateExp => None,
    }
}

/// Which limit a [`LimitStats`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitKind {
    /// C = lim X(t)/N(t) in a growth regime.
    C,
    /// L = lim X(t) − U(t) when a + b = 0.
    L,
}

/// Mean and variance of the limiting Gaussian variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitStats {
    pub kind: LimitKind,
    pub mean_c: f64,
    pub var_c: f64,
    /// Where the doubling panels stopped and the mapped tail began.
    pub truncation_t: f64,
    /// Contribution of the mapped tail to the variance integral.
    pub tail: f64,
    pub quadrature_tol: f64,
    /// True when the tail was located empirically (no a priori bound).
    pub empirical_tail: bool,
}

/// Relative tolerance of the limit-constant quadratures.
pub const LIMIT_TOL: f64 = 1e-10;
/// Doubling stops once the last panel adds less than this fraction.
pub const PANEL_RATIO: f64 = 1e-3;

fn u(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    Ok(tricomi_u(alpha, beta, x)?.value)
}

/// E and Var of C (growth regimes) or L (a + b = 0).
pub fn limit_stats(params: &Params) -> Result<LimitStats> {
    params.validate()?;
    let regime = params.regime()?;
    let Params {
        a,
        b,
        sigma,
        psi0,
        psi_int,
    } = *params;
    let tol = Tolerance::new(0.0, LIMIT_TOL);
    let s2 = sigma * sigma;
    let c = a.abs();
    let done = |kind, mean_c, r: crate::quad::HalfLineResult, scale: f64, empirical| LimitStats {
        kind,
        mean_c,
        var_c: scale * r.value,
        truncation_t: r.truncation,
        tail: scale * r.tail,
        quadrature_tol: LIMIT_TOL,
        empirical_tail: empirical,
    };
    match regime.label {
        Label::PolynomialGrowth => {
            let q = b / a;
            let pre = c.powf(-1.0 - q) * b;
            let mean = pre * (psi0 * u(1.0 - q, 2.0, c)? + psi_int * u(-q, 1.0, c)?);
            let r = integrate_half_line(
                |s| {
                    let v = (1.0 + s) * u(1.0 - q, 2.0, c * (1.0 + s))?;
                    Ok(v * v)
                },
                0.0,
                1.0 / c,
                PANEL_RATIO,
                tol,
            )?;
            Ok(done(
                LimitKind::C,
                mean,
                r,
                s2 * b * b * c.powf(-2.0 - 2.0 * q),
                false,
            ))
        }
        Label::ExponentialGrowth => {
            let q = b / a;
            let al = 1.0 + q;
            let mean = a.powf(q) * (a * psi0 * u(al, 2.0, a)? + b * psi_int * u(al, 1.0, a)?);
            let r = integrate_half_line(
                |s| {
                    let v = (-a * s).exp() * (1.0 + s) * u(al, 2.0, a * (1.0 + s))?;
                    Ok(v * v)
                },
                0.0,
                1.0 / a,
                PANEL_RATIO,
                tol,
            )?;
            Ok(done(
                LimitKind::C,
                mean,
                r,
                s2 * a.powf(2.0 + 2.0 * q),
                false,
            ))
        }
        Label::SubexponentialGrowth => {
            let z0 = 2.0 * b.sqrt();
            let mean = (psi0 * b.powf(0.25) * bessel_k(1, z0)?.value
                + b.powf(0.75) * psi_int * bessel_k(0, z0)?.value)
                / std::f64::consts::PI.sqrt();
            let r = integrate_half_line(
                |s| {
                    let z = 2.0 * (b * (s + 1.0)).sqrt();
                    let k = bessel_k_scaled(1, z)?.value;
                    Ok((s + 1.0) * k * k * (-2.0 * z).exp())
                },
                0.0,
                1.0 / b,
                PANEL_RATIO,
                tol,
            )?;
            Ok(done(
                LimitKind::C,
                mean,
                r,
                s2 * b.sqrt() / std::f64::consts::PI,
                false,
            ))
        }
        Label::RecurrentShifted => {
            // b/a = −1: Γ(−b/a) = 1 and U(1−b/a, 2, ·) = U(2, 2, ·), whose
            // antiderivative gives F(u) = ∫_u^∞ U(2,2,c(1+s)) ds = U(1,1,c(1+u))/c.
            let f = |x: f64| -> Result<f64> { Ok(u(1.0, 1.0, c * (1.0 + x))? / c) };
            let inner_tol = Tolerance::new(0.0, 1e-12);
            // J(u) = ∫_0^∞ e^{-cv} F(u+v) dv
            let j = |x: f64| -> Result<f64> {
                Ok(integrate_half_line(
                    |v| Ok((-c * v).exp() * f(x + v)?),
                    0.0,
                    1.0 / c,
                    PANEL_RATIO,
                    inner_tol,
                )?
                .value)
            };
            let b2 = b * b;
            let mean = b2 * (psi_int * f(0.0)? + psi0 * j(0.0)?);
            let r = integrate_half_line(
                |x| {
                    let v = j(x)?;
                    Ok(v * v)
                },
                0.0,
                1.0 / c,
                PANEL_RATIO,
                tol,
            )?;
            Ok(done(LimitKind::L, mean, r, s2 * b2 * b2, true))
        }
        _ => Err(Error::Unsupported(format!(
            "limit statistics are defined for growth regimes and a + b = 0, not {}",
            regime.label
        ))),
    }
}
