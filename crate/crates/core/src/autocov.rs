//! Autocovariance γ_t(Δ) = σ²∫₀ᵗ r(t,s) r(t+Δ,s) ds, the long-memory
//! constant c_t, power-law decay fits, the large-t limit of the
//! autocovariance and the Yule–Walker-type identity it satisfies.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::meanpath::PANEL_RATIO;
use crate::model::{Label, Params};
use crate::quad::{integrate_fallible, integrate_half_line, Tolerance};
use crate::resolvent::{scaled, Resolvent, Scaled};
use crate::specfun::tricomi_u;

/// Default relative tolerance of the autocovariance quadratures.
pub const QUAD_TOL: f64 = 1e-9;
/// Largest deviation (in natural-log units) of log|Cov| from the fitted line
/// for which a decay fit still counts as a power law.
pub const POOR_FIT_RESIDUAL: f64 = 0.02;
/// Tolerance of the autocovariance values inside the Yule–Walker residual,
/// where finite differences amplify quadrature error by 1/h.
const RESIDUAL_QUAD_TOL: f64 = 1e-12;

/// Autocovariances γ_t(Δ) at one t over a grid of lags.
#[derive(Debug, Clone, PartialEq)]
pub struct AcfEstimate {
    pub t: f64,
    pub deltas: Vec<f64>,
    pub values: Vec<f64>,
    pub quad_tol: f64,
}

/// Least-squares power-law fit of Δ ↦ Cov(X(t), X(t+Δ)).
#[derive(Debug, Clone, PartialEq)]
pub struct DecayFit {
    pub fitted_exponent: f64,
    /// −(1 + b/a)
    pub theoretical_exponent: f64,
    /// Mean of Cov·Δ^{1+b/a} over the grid.
    pub fitted_constant: f64,
    pub c_t_quadrature: f64,
    pub delta_range: (f64, f64),
    /// Largest |log|Cov| − fitted line| over the grid.
    pub max_log_residual: f64,
    /// The log-log data are not close to a line (e.g. exponential decay).
    pub poor_fit: bool,
}

/// ∫_lo^hi f to relative accuracy `tol`, with absolute floor tol·∫|f| so
/// that integrals with cancellation terminate.
fn integrate_robust<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    if hi <= lo {
        return Ok(0.0);
    }
    let l1 = integrate_fallible(|x| Ok(f(x)?.abs()), lo, hi, Tolerance::new(0.0, 1e-3))?.value;
    if l1 == 0.0 {
        return Ok(0.0);
    }
    Ok(integrate_fallible(&mut f, lo, hi, Tolerance::new(tol * l1, tol))?.value)
}

/// (e^{2au} − 1)/(2a), continuous at a = 0.
fn ou_integral(a: f64, u: f64) -> f64 {
    if a == 0.0 {
        u
    } else {
        (2.0 * a * u).exp_m1() / (2.0 * a)
    }
}

fn is_b_zero(label: Label) -> bool {
    matches!(
        label,
        Label::DegenerateOU | Label::DegenerateBM | Label::DegenerateExp
    )
}

/// Autocovariance evaluator for one parameter set.
#[derive(Debug, Clone)]
pub struct Autocov {
    pub params: Params,
    pub label: Label,
    resolvent: Resolvent,
}

/// Cov(X(t), X(t+Δ)) = c_A r_A(t+Δ) + c_B r_B(t+Δ) at a fixed t, with
/// c_i = σ²∫₀ᵗ r(t,s) d_i(s) ds; one quadrature serves every lag.
#[derive(Debug, Clone)]
pub struct ProductForm<'a> {
    acf: &'a Autocov,
    pub t: f64,
    ca: Scaled,
    cb: Scaled,
}

impl ProductForm<'_> {
    /// Cov(X(t), X(t+Δ)) for Δ ≥ 0.
    pub fn eval(&self, delta: f64) -> Result<f64> {
        if !(delta >= 0.0) || !delta.is_finite() {
            return Err(Error::Domain(format!(
                "delta must be finite and >= 0, got {delta}"
            )));
        }
        let row = self.acf.resolvent.row(self.t + delta)?;
        Ok(scaled(self.ca.m * row.ra.m, self.ca.log + row.ra.log)
            + scaled(self.cb.m * row.rb.m, self.cb.log + row.rb.log))
    }

    /// (c_A, c_B) in the basis used internally by the resolvent.
    pub fn coefficients(&self) -> (f64, f64) {
        (self.ca.value(), self.cb.value())
    }
}

impl Autocov {
    pub fn new(params: &Params) -> Result<Autocov> {
        params.validate()?;
        let label = params.regime()?.label;
        let resolvent = Resolvent::new(params.a, params.b)?;
        Ok(Autocov {
            params: *params,
            label,
            resolvent,
        })
    }

    pub fn resolvent(&self) -> &Resolvent {
        &self.resolvent
    }

    /// γ_t(w) = σ²∫₀^{min(t, t+w)} r(t,s) r(t+w,s) ds for w ≥ −t.
    pub fn gamma(&self, t: f64, w: f64) -> Result<f64> {
        self.gamma_with_tol(t, w, QUAD_TOL)
    }

    /// [`Autocov::gamma`] with relative quadrature tolerance `tol`.
    pub fn gamma_with_tol(&self, t: f64, w: f64, tol: f64) -> Result<f64> {
        if !(t >= 0.0) || !t.is_finite() || !w.is_finite() {
            return Err(Error::Domain(format!(
                "need finite t >= 0 and w, got t = {t}, w = {w}"
            )));
        }
        if w < -t {
            return Err(Error::Domain(format!("lag {w} is below -t = {}", -t)));
        }
        let u = t.min(t + w);
        let s2 = self.params.sigma * self.params.sigma;
        if u <= 0.0 {
            return Ok(0.0);
        }
        if is_b_zero(self.label) {
            let a = self.params.a;
            return Ok(s2 * (a * w.abs()).exp() * ou_integral(a, u));
        }
        let r = &self.resolvent;
        let row_t = r.row(t)?;
        let row_w = r.row(t + w)?;
        let v = integrate_robust(
            |s| Ok(r.eval_row(&row_t, s)? * r.eval_row(&row_w, s)?),
            0.0,
            u,
            tol,
        )?;
        Ok(s2 * v)
    }

    /// Cov(X(t), X(t+Δ)) by direct quadrature.
    pub fn covariance(&self, t: f64, delta: f64) -> Result<f64> {
        if !(delta >= 0.0) {
            return Err(Error::Domain(format!("delta must be >= 0, got {delta}")));
        }
        self.gamma(t, delta)
    }

    pub fn product_form(&self, t: f64) -> Result<ProductForm<'_>> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!("t must be finite and >= 0, got {t}")));
        }
        let s2 = self.params.sigma * self.params.sigma;
        let r = &self.resolvent;
        let row = r.row(t)?;
        let (d0a, d0b) = r.coefficients(0.0)?;
        let (dta, dtb) = r.coefficients(t)?;
        // reference scales keep the integrands of order one
        let la = d0a.log.max(dta.log);
        let lb = d0b.log.max(dtb.log);
        let ia = integrate_robust(
            |s| {
                let (da, _) = r.coefficients(s)?;
                Ok(r.eval_row(&row, s)? * scaled(da.m, da.log - la))
            },
            0.0,
            t,
            QUAD_TOL,
        )?;
        let ib = if is_b_zero(self.label) {
            0.0
        } else {
            integrate_robust(
                |s| {
                    let (_, db) = r.coefficients(s)?;
                    Ok(r.eval_row(&row, s)? * scaled(db.m, db.log - lb))
                },
                0.0,
                t,
                QUAD_TOL,
            )?
        };
        Ok(ProductForm {
            acf: self,
            t,
            ca: Scaled {
                m: s2 * ia,
                log: la,
            },
            cb: Scaled {
                m: s2 * ib,
                log: lb,
            },
        })
    }

    /// Autocovariances over a grid of lags, via the product form.
    pub fn acf(&self, t: f64, deltas: &[f64]) -> Result<AcfEstimate> {
        let pf = self.product_form(t)?;
        let values = deltas
            .par_iter()
            .map(|&d| pf.eval(d))
            .collect::<Result<Vec<_>>>()?;
        Ok(AcfEstimate {
            t,
            deltas: deltas.to_vec(),
            values,
            quad_tol: QUAD_TOL,
        })
    }

    fn require_recurrent(&self, what: &str) -> Result<()> {
        match self.label {
            Label::RecurrentOU | Label::RecurrentShifted | Label::DegenerateOU => Ok(()),
            l => Err(Error::Unsupported(format!(
                "{what} needs a < 0 and a + b <= 0, got regime {l:?}"
            ))),
        }
    }

    /// c_t = σ² b |a|^{−1−b/a} ∫₀ᵗ r(t,s)(1+s) U(1−b/a, 2, |a|(1+s)) ds.
    pub fn ct_limit(&self, t: f64) -> Result<f64> {
        self.require_recurrent("ct_limit")?;
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!("t must be finite and >= 0, got {t}")));
        }
        if self.label == Label::DegenerateOU || t == 0.0 {
            return Ok(0.0);
        }
        let Params { a, b, sigma, .. } = self.params;
        let c = a.abs();
        let q = b / a;
        let r = &self.resolvent;
        let row = r.row(t)?;
        let v =
            integrate_robust(
                |s| {
                    Ok(r.eval_row(&row, s)?
                        * (1.0 + s)
                        * tricomi_u(1.0 - q, 2.0, c * (1.0 + s))?.value)
                },
                0.0,
                t,
                QUAD_TOL,
            )?;
        Ok(sigma * sigma * b * c.powf(-1.0 - q) * v)
    }

    /// Power-law fit of the autocovariance over n log-spaced lags in
    /// [delta_min, delta_max].
    pub fn decay_fit(
        &self,
        t: f64,
        delta_min: f64,
        delta_max: f64,
        n_points: usize,
    ) -> Result<DecayFit> {
        self.require_recurrent("decay_fit")?;
        if n_points < 8 {
            return Err(Error::InvalidArgument(format!(
                "n_points must be >= 8, got {n_points}"
            )));
        }
        if !(delta_min > 0.0) || !(delta_max >= 10.0 * delta_min) || !delta_max.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "need 0 < delta_min and delta_max >= 10 delta_min, got [{delta_min}, {delta_max}]"
            )));
        }
        let pf = self.product_form(t)?;
        let (l0, l1) = (delta_min.ln(), delta_max.ln());
        let deltas: Vec<f64> = (0..n_points)
            .map(|i| (l0 + (l1 - l0) * i as f64 / (n_points - 1) as f64).exp())
            .collect();
        let values = deltas
            .par_iter()
            .map(|&d| pf.eval(d))
            .collect::<Result<Vec<_>>>()?;
        for i in 0..n_points {
            if values[i] == 0.0 || values[i].signum() != values[0].signum() {
                let lo = if i == 0 { deltas[0] } else { deltas[i - 1] };
                return Err(Error::SignChange {
                    delta: locate_sign_change(&pf, lo, deltas[i], values[0])?,
                });
            }
        }
        let xs: Vec<f64> = deltas.iter().map(|d| d.ln()).collect();
        let ys: Vec<f64> = values.iter().map(|v| v.abs().ln()).collect();
        let n = n_points as f64;
        let mx = xs.iter().sum::<f64>() / n;
        let my = ys.iter().sum::<f64>() / n;
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        let slope = sxy / sxx;
        let max_log_residual = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (y - my - slope * (x - mx)).abs())
            .fold(0.0_f64, f64::max);
        let p = 1.0 + self.params.b / self.params.a;
        let fitted_constant = deltas
            .iter()
            .zip(&values)
            .map(|(d, v)| v * d.powf(p))
            .sum::<f64>()
            / n;
        Ok(DecayFit {
            fitted_exponent: slope,
            theoretical_exponent: -p,
            fitted_constant,
            c_t_quadrature: self.ct_limit(t)?,
            delta_range: (delta_min, delta_max),
            max_log_residual,
            poor_fit: max_log_residual > POOR_FIT_RESIDUAL,
        })
    }

    /// σ²b²|a|^{−2−2b/a} ∫₀^∞ (1+s)² U(1−b/a, 2, |a|(1+s))² ds, the additive
    /// constant of the limiting autocovariance when a + b = 0.
    pub fn shifted_constant(&self) -> Result<f64> {
        let Params { a, b, sigma, .. } = self.params;
        if self.label != Label::RecurrentShifted {
            return Err(Error::Unsupported(format!(
                "additive constant needs a < 0, a + b = 0, got ({a}, {b})"
            )));
        }
        let c = a.abs();
        let q = b / a;
        let v = integrate_half_line(
            |s| Ok(((1.0 + s) * tricomi_u(1.0 - q, 2.0, c * (1.0 + s))?.value).powi(2)),
            0.0,
            1.0 / c,
            PANEL_RATIO,
            Tolerance::new(0.0, QUAD_TOL),
        )?;
        Ok(sigma * sigma * b * b * c.powf(-2.0 - 2.0 * q) * v.value)
    }

    /// lim_{t→∞} Cov(X(t), X(t+Δ)).
    pub fn limiting_acf(&self, delta: f64) -> Result<f64> {
        self.require_recurrent("limiting_acf")?;
        if !(delta >= 0.0) || !delta.is_finite() {
            return Err(Error::Domain(format!(
                "delta must be finite and >= 0, got {delta}"
            )));
        }
        let Params { a, sigma, .. } = self.params;
        let ou = sigma * sigma / (2.0 * a.abs()) * (a * delta).exp();
        if self.label == Label::RecurrentShifted {
            Ok(ou + self.shifted_constant()?)
        } else {
            Ok(ou)
        }
    }

    /// γ_t′(Δ) − aγ_t(Δ) − b/(1+t+Δ)∫_{−t}^Δ γ_t(w)dw − [Δ<0]σ²r(t,t+Δ),
    /// relative to max(|aγ_t(Δ)|, |integral term|, σ²).
    pub fn yule_walker_residual(&self, t: f64, delta: f64) -> Result<f64> {
        if !(t > 0.0) || !t.is_finite() || !delta.is_finite() || delta < -t {
            return Err(Error::Domain(format!(
                "need t > 0 and delta >= -t, got t = {t}, delta = {delta}"
            )));
        }
        let Params { a, b, sigma, .. } = self.params;
        let s2 = sigma * sigma;
        let g = |w: f64| self.gamma_with_tol(t, w, RESIDUAL_QUAD_TOL);
        let h = 1e-4 * (1.0 + delta.abs());
        // γ_t′ jumps by σ² at 0, so stencils stay on one side of it
        let (lo, hi) = if delta >= 0.0 {
            (0.0, f64::INFINITY)
        } else {
            (-t, 0.0)
        };
        let dg = if delta - h >= lo && delta + h <= hi {
            (g(delta + h)? - g(delta - h)?) / (2.0 * h)
        } else if delta - h < lo {
            (-3.0 * g(delta)? + 4.0 * g(delta + h)? - g(delta + 2.0 * h)?) / (2.0 * h)
        } else {
            (3.0 * g(delta)? - 4.0 * g(delta - h)? + g(delta - 2.0 * h)?) / (2.0 * h)
        };
        let gd = g(delta)?;
        let outer = |lo: f64, hi: f64| integrate_robust(|w| g(w), lo, hi, 1e-10);
        let int = if delta > 0.0 {
            outer(-t, 0.0)? + outer(0.0, delta)?
        } else {
            outer(-t, delta)?
        };
        let int_term = b / (1.0 + t + delta) * int;
        let jump = if delta < 0.0 {
            s2 * self.resolvent.eval(t, t + delta)?
        } else {
            0.0
        };
        let residual = dg - a * gd - int_term - jump;
        let scale = (a * gd).abs().max(int_term.abs()).max(s2);
        Ok(residual / scale)
    }
}

/// Bisection in log Δ for the zero of the autocovariance in [lo, hi].
fn locate_sign_change(pf: &ProductForm<'_>, lo: f64, hi: f64, reference: f64) -> Result<f64> {
    let (mut l, mut r) = (lo.ln(), hi.ln());
    for _ in 0..100 {
        let m = 0.5 * (l + r);
        if m == l || m == r {
            break;
        }
        if pf.eval(m.exp())?.signum() == reference.signum() {
            l = m;
        } else {
            r = m;
        }
    }
    Ok((0.5 * (l + r)).exp())
}

/// Cov(X(t), X(t+Δ)) = σ²∫₀ᵗ r(t,s) r(t+Δ,s) ds.
pub fn covariance(params: &Params, t: f64, delta: f64) -> Result<f64> {
    Autocov::new(params)?.covariance(t, delta)
}

pub fn acf(params: &Params, t: f64, deltas: &[f64]) -> Result<AcfEstimate> {
    Autocov::new(params)?.acf(t, deltas)
}

pub fn ct_limit(params: &Params, t: f64) -> Result<f64> {
    Autocov::new(params)?.ct_limit(t)
}

pub fn decay_fit(
    params: &Params,
    t: f64,
    delta_min: f64,
    delta_max: f64,
    n_points: usize,
) -> Result<DecayFit> {
    Autocov::new(params)?.decay_fit(t, delta_min, delta_max, n_points)
}

pub fn limiting_acf(params: &Params, delta: f64) -> Result<f64> {
    Autocov::new(params)?.limiting_acf(delta)
}

pub fn yule_walker_residual(params: &Params, t: f64, delta: f64) -> Result<f64> {
    Autocov::new(params)?.yule_walker_residual(t, delta)
}
