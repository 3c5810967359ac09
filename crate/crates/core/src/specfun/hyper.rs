use std::f64::consts::PI;

use super::gamma::{gamma, rgamma};
use super::{is_nonpositive_integer, SpecValue};
use crate::error::{Error, Result};
use crate::ode::{dopri5, OdeOptions};

const EPS: f64 = f64::EPSILON;
const MAX_SERIES_TERMS: usize = 20_000;

/// Below this argument M is summed from its Taylor series.
const M_SERIES_MAX_X: f64 = 650.0;
/// From this argument on the large-x expansion of M is tried first.
const M_ASYMPTOTIC_MIN_X: f64 = 30.0;
/// From this argument on the large-x expansion of U is tried first.
const U_ASYMPTOTIC_MIN_X: f64 = 15.0;
/// Relative size of the smallest asymptotic term required for acceptance.
const ASYMPTOTIC_ACCEPT: f64 = 1e-15;
/// Series results less accurate than this are replaced by ODE continuation.
const M_SERIES_ACCEPT: f64 = 1e-12;
const M_ODE_TOL: f64 = 1e-13;

fn check_x(name: &str, x: f64) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!(
            "{name} needs finite x >= 0, got {x}"
        )));
    }
    Ok(())
}

/// Σ (α)_k/(β)_k x^k/k!; returns (sum, relative error estimate).
fn m_series(alpha: f64, beta: f64, x: f64) -> (f64, f64) {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut abs_sum = 1.0;
    for k in 0..MAX_SERIES_TERMS {
        let kf = k as f64;
        term *= (alpha + kf) / (beta + kf) * x / (kf + 1.0);
        sum += term;
        abs_sum += term.abs();
        if term == 0.0 {
            break;
        }
        // terms decrease monotonically once k exceeds x and |α|
        if kf > x + alpha.abs() && term.abs() < EPS * 1e-2 * sum.abs() {
            break;
        }
    }
    let err = EPS * (8.0 + abs_sum / sum.abs());
    (sum, err)
}

/// M(−n, β, x) by the three-term recurrence in α; the Taylor form cancels
/// badly between the roots of the polynomial.
fn m_polynomial(n: u64, beta: f64, x: f64) -> (f64, f64) {
    // (β + k) M(−k−1) = (2k + β − x) M(−k) − k M(−k+1), M(0) = 1, M(−1) = 1 − x/β
    if n == 0 {
        return (1.0, EPS);
    }
    let mut lo = 1.0;
    let mut hi = 1.0 - x / beta;
    let mut lo_abs: f64 = 1.0;
    let mut hi_abs = 1.0 + (x / beta).abs();
    for k in 1..n {
        let kf = k as f64;
        let c = 1.0 / (beta + kf);
        let next = c * ((2.0 * kf + beta - x) * hi - kf * lo);
        let next_abs = c.abs() * ((2.0 * kf + beta - x).abs() * hi_abs + kf * lo_abs);
        lo = hi;
        lo_abs = hi_abs;
        hi = next;
        hi_abs = next_abs;
    }
    let err = if hi == 0.0 {
        EPS
    } else {
        EPS * (4.0 + hi_abs / hi.abs())
    };
    (hi, err)
}

/// Sums an asymptotic series Σ c_k with c_{k+1} = c_k·ratio(k), stopping at
/// the smallest term. Returns (sum, |smallest term| / |sum|).
fn asymptotic_sum(ratio: impl Fn(f64) -> f64) -> (f64, f64) {
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut last = 1.0_f64;
    for k in 0..500 {
        let next = term * ratio(k as f64);
        if next == 0.0 {
            return (sum, EPS);
        }
        if next.abs() >= last {
            break;
        }
        term = next;
        last = term.abs();
        sum += term;
        if last < EPS * 1e-2 * sum.abs() {
            break;
        }
    }
    (sum, last / sum.abs())
}

/// e^{-x} M(α, β, x) from the large-x expansion; None if not accurate enough.
fn m_scaled_asymptotic(alpha: f64, beta: f64, x: f64) -> Option<(f64, f64)> {
    let (s1, e1) = asymptotic_sum(|k| (beta - alpha + k) * (1.0 - alpha + k) / ((k + 1.0) * x));
    if e1 > ASYMPTOTIC_ACCEPT {
        return None;
    }
    let gb = gamma(beta).ok()?.value;
    let lead = gb * rgamma(alpha) * x.powf(alpha - beta) * s1;
    let (s2, _) = asymptotic_sum(|k| -(alpha + k) * (alpha - beta + 1.0 + k) / ((k + 1.0) * x));
    let sub = gb * rgamma(beta - alpha) * (PI * alpha).cos() * x.powf(-alpha) * (-x).exp() * s2;
    let v = lead + sub;
    if v == 0.0 || !v.is_finite() {
        return None;
    }
    Some((v, e1 + 4.0 * EPS))
}

/// e^{-x} M(α, β, x) for α < 0 by integrating the equation for
/// w = e^{-z/2} M, z w'' + β w' + (β/2 - α - z/4) w = 0, forward from a point
/// where the series is accurate. M grows relative to U as z increases, so
/// the forward continuation is stable.
fn m_scaled_ode(alpha: f64, beta: f64, x: f64) -> Option<(f64, f64)> {
    let mut z0 = x;
    let (m0, e0) = loop {
        z0 *= 0.5;
        let (m, e) = m_series(alpha, beta, z0);
        if e < 1e-14 {
            break (m, e);
        }
        if z0 < 1e-8 {
            return None;
        }
    };
    let (dm, de) = m_series(alpha + 1.0, beta + 1.0, z0);
    let dm = alpha / beta * dm;
    let h = (-0.5 * z0).exp();
    let y0 = [h * m0, h * (dm - 0.5 * m0)];
    let f = |z: f64, y: &[f64; 2]| {
        [
            y[1],
            -(beta * y[1] + (0.5 * beta - alpha - 0.25 * z) * y[0]) / z,
        ]
    };
    let opts = OdeOptions {
        rtol: M_ODE_TOL,
        atol: 1e-300,
        max_steps: 200_000,
        h_max: 0.0,
    };
    let traj = dopri5(f, z0, y0, x, opts).ok()?;
    let w = traj.mesh.last()?.1[0];
    if w == 0.0 || !w.is_finite() {
        return None;
    }
    // error relative to the local amplitude, amplified near zeros of w
    let peak = traj
        .mesh
        .iter()
        .map(|(_, y)| y[0].abs())
        .fold(0.0_f64, f64::max);
    let steps = traj.steps.len() as f64;
    let err = (e0 + de + M_ODE_TOL * steps.sqrt()) * peak / w.abs();
    let v = w.signum() * (w.abs().ln() - 0.5 * x).exp();
    Some((v, err))
}

fn check_beta(beta: f64) -> Result<()> {
    if !beta.is_finite() || is_nonpositive_integer(beta) {
        return Err(Error::Domain(format!(
            "kummer_m needs beta outside the nonpositive integers, got {beta}"
        )));
    }
    Ok(())
}

/// e^{-x} M(α, β, x) for x ≥ 0, free of overflow for large x.
pub fn kummer_m_scaled(alpha: f64, beta: f64, x: f64) -> Result<SpecValue> {
    check_beta(beta)?;
    check_x("kummer_m_scaled", x)?;
    if !alpha.is_finite() {
        return Err(Error::Domain(format!("alpha must be finite, got {alpha}")));
    }
    if alpha == 0.0 {
        return Ok(SpecValue::exact((-x).exp()));
    }
    let terminating = is_nonpositive_integer(alpha);
    if !terminating && x >= M_ASYMPTOTIC_MIN_X {
        if let Some((v, e)) = m_scaled_asymptotic(alpha, beta, x) {
            return Ok(SpecValue::new(v, e));
        }
    }
    if terminating || x <= M_SERIES_MAX_X {
        let (s, e) = if terminating {
            m_polynomial(-alpha as u64, beta, x)
        } else {
            m_series(alpha, beta, x)
        };
        if !terminating && alpha < 0.0 && e > M_SERIES_ACCEPT {
            if let Some((v, e2)) = m_scaled_ode(alpha, beta, x) {
                if e2 < e {
                    return Ok(SpecValue::new(v, e2));
                }
            }
        }
        if s.is_finite() {
            let v = if s == 0.0 {
                0.0
            } else {
                s.signum() * (s.abs().ln() - x).exp()
            };
            return Ok(SpecValue::new(v, e + EPS * x));
        }
    }
    Err(Error::Numerical(format!(
        "kummer_m_scaled({alpha}, {beta}, {x}) failed to reach accuracy"
    )))
}

/// Kummer's function M(α, β, x), x ≥ 0.
pub fn kummer_m(alpha: f64, beta: f64, x: f64) -> Result<SpecValue> {
    check_beta(beta)?;
    check_x("kummer_m", x)?;
    if alpha == 0.0 {
        return Ok(SpecValue::exact(1.0));
    }
    if is_nonpositive_integer(alpha) {
        let (s, e) = m_polynomial(-alpha as u64, beta, x);
        if s.is_finite() {
            return Ok(SpecValue::new(s, e));
        }
    }
    if x <= M_ASYMPTOTIC_MIN_X {
        let (s, e) = m_series(alpha, beta, x);
        if s.is_finite() && (e <= M_SERIES_ACCEPT || alpha > 0.0 || is_nonpositive_integer(alpha)) {
            return Ok(SpecValue::new(s, e));
        }
    }
    let sc = kummer_m_scaled(alpha, beta, x)?;
    let v = sc.value;
    if v == 0.0 {
        return Ok(sc);
    }
    let mut out = SpecValue::from_log(
        v.signum(),
        v.abs().ln() + x,
        sc.accuracy.achieved_rel_err_estimate,
    );
    out.accuracy.achieved_rel_err_estimate += EPS * x;
    Ok(out)
}

/// ∫₀^∞ f(v) dv by exp-sinh (double exponential) trapezoidal quadrature.
/// Suited to integrands with an integrable endpoint singularity at 0 and
/// exponential decay at infinity. Returns (value, error estimate).
fn exp_sinh_quad(f: impl Fn(f64) -> f64, rel_tol: f64) -> (f64, f64) {
    let half_pi = 0.5 * PI;
    let g = |tau: f64| -> f64 {
        let v = (half_pi * tau.sinh()).exp();
        if v == 0.0 || !v.is_finite() {
            return 0.0;
        }
        let y = f(v);
        if y == 0.0 || !y.is_finite() {
            return 0.0;
        }
        y * v * half_pi * tau.cosh()
    };
    let tau_max = 6.5;
    let mut h = 0.5;
    let mut sum = g(0.0);
    let mut k = 1;
    while (k as f64) * h <= tau_max {
        let t = k as f64 * h;
        sum += g(t) + g(-t);
        k += 1;
    }
    let mut est = h * sum;
    let mut err = f64::INFINITY;
    for _ in 0..9 {
        h *= 0.5;
        let mut add = 0.0;
        let mut k = 1;
        while (k as f64) * h <= tau_max {
            let t = k as f64 * h;
            add += g(t) + g(-t);
            k += 2;
        }
        sum += add;
        let new = h * sum;
        err = (new - est).abs();
        est = new;
        if err <= rel_tol * est.abs() {
            break;
        }
    }
    (est, err)
}

/// U(α, β, x) for α > 0 from the integral representation
/// U = x^{-α}/Γ(α) ∫₀^∞ e^{-v} v^{α-1} (1 + v/x)^{β-α-1} dv.
fn u_integral(alpha: f64, beta: f64, x: f64) -> Result<(f64, f64)> {
    let p = beta - alpha - 1.0;
    let inv_x = 1.0 / x;
    let (i, e) = exp_sinh_quad(
        |v| ((alpha - 1.0) * v.ln() - v + p * (v * inv_x).ln_1p()).exp(),
        1e-15,
    );
    let g = gamma(alpha)?;
    let v = x.powf(-alpha) * i / g.value;
    Ok((
        v,
        e / i.abs() + g.accuracy.achieved_rel_err_estimate + 4.0 * EPS,
    ))
}

/// U from the large-x expansion x^{-α} Σ (α)_k(α-β+1)_k/k! (-x)^{-k}.
fn u_asymptotic(alpha: f64, beta: f64, x: f64) -> Option<(f64, f64)> {
    let (s, e) = asymptotic_sum(|k| -(alpha + k) * (alpha - beta + 1.0 + k) / ((k + 1.0) * x));
    if e > ASYMPTOTIC_ACCEPT {
        return None;
    }
    Some((x.powf(-alpha) * s, e + 4.0 * EPS))
}

/// U for α > 0, choosing between the expansion and the integral.
fn u_positive(alpha: f64, beta: f64, x: f64) -> Result<(f64, f64)> {
    if x >= U_ASYMPTOTIC_MIN_X {
        if let Some(r) = u_asymptotic(alpha, beta, x) {
            return Ok(r);
        }
    }
    u_integral(alpha, beta, x)
}

/// U(-m, β, x) = (-1)^m (β)_m M(-m, β, x), a polynomial of degree m.
fn u_polynomial(m: u64, beta: f64, x: f64) -> (f64, f64) {
    // U(−k−1) = (x − β − 2k) U(−k) − k(k + β − 1) U(−k+1), U(0) = 1, U(−1) = x − β;
    // the monomial form cancels badly for large m
    let mut lo = 1.0;
    let mut hi = x - beta;
    let mut lo_abs: f64 = 1.0;
    let mut hi_abs = x.abs() + beta.abs();
    if m == 0 {
        return (1.0, EPS);
    }
    for k in 1..m {
        let kf = k as f64;
        let t1 = (x - beta - 2.0 * kf) * hi;
        let t2 = -kf * (kf + beta - 1.0) * lo;
        let next_abs =
            (x - beta - 2.0 * kf).abs() * hi_abs + (kf * (kf + beta - 1.0)).abs() * lo_abs;
        lo = hi;
        lo_abs = hi_abs;
        hi = t1 + t2;
        hi_abs = next_abs;
    }
    let err = if hi == 0.0 {
        EPS
    } else {
        EPS * (4.0 + hi_abs / hi.abs())
    };
    (hi, err)
}

/// Tricomi's function U(α, β, x), x > 0.
///
/// Supported: α a nonpositive integer (polynomial), α > 0 (any β), and
/// non-integer α < 0 with β ∈ {1, 2} (backward recurrence in α from
/// positive parameters).
pub fn tricomi_u(alpha: f64, beta: f64, x: f64) -> Result<SpecValue> {
    if !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::Domain(format!(
            "tricomi_u needs finite parameters, got ({alpha}, {beta})"
        )));
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("tricomi_u needs x > 0, got {x}")));
    }
    if is_nonpositive_integer(alpha) {
        let (v, e) = u_polynomial((-alpha) as u64, beta, x);
        return Ok(SpecValue::new(v, e));
    }
    if alpha < 0.0 && beta != 1.0 && beta != 2.0 {
        return Err(Error::Unsupported(format!(
            "tricomi_u({alpha}, {beta}, x): negative non-integer alpha needs beta in {{1, 2}}"
        )));
    }
    if alpha >= 0.5 {
        let (v, e) = u_positive(alpha, beta, x)?;
        return Ok(SpecValue::new(v, e));
    }
    if x >= U_ASYMPTOTIC_MIN_X {
        if let Some((v, e)) = u_asymptotic(alpha, beta, x) {
            return Ok(SpecValue::new(v, e));
        }
    }
    // U(a-1) = -(β - 2a - x) U(a) - a(a - β + 1) U(a+1), run downwards from a0 ∈ [1, 2);
    // U is the minimal solution of this recurrence so the direction is stable.
    let steps = (1.0 - alpha).ceil() as usize;
    let a0 = alpha + steps as f64;
    let (mut u_hi, e_hi) = u_positive(a0 + 1.0, beta, x)?;
    let (mut u_mid, e_mid) = u_positive(a0, beta, x)?;
    let mut a = a0;
    let mut growth: f64 = 1.0;
    for _ in 0..steps {
        let t1 = -(beta - 2.0 * a - x) * u_mid;
        let t2 = -a * (a - beta + 1.0) * u_hi;
        let u_lo = t1 + t2;
        if u_lo != 0.0 {
            growth = growth.max((t1.abs() + t2.abs()) / u_lo.abs());
        }
        u_hi = u_mid;
        u_mid = u_lo;
        a -= 1.0;
    }
    let err = (e_hi + e_mid) * growth + EPS * (steps as f64 + 1.0) * growth;
    Ok(SpecValue::new(u_mid, err))
}
