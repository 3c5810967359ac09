use std::f64::consts::{FRAC_PI_4, PI};

use super::{SpecValue, EULER_GAMMA};
use crate::error::{Error, Result};

const EPS: f64 = f64::EPSILON;

/// J/Y switch from ascending series to the Hankel expansion.
const JY_ASYMPTOTIC_MIN_X: f64 = 12.5;
/// I/K switch to the large-argument expansion.
const IK_ASYMPTOTIC_MIN_X: f64 = 20.0;
/// K uses its ascending series up to here and Steed's continued fraction beyond.
const K_SERIES_MAX_X: f64 = 2.0;

fn check_order(order: u32) -> Result<()> {
    if order > 1 {
        return Err(Error::Domain(format!(
            "Bessel order must be 0 or 1, got {order}"
        )));
    }
    Ok(())
}

fn check_nonneg(x: f64) -> Result<()> {
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!(
            "Bessel argument must be finite and >= 0, got {x}"
        )));
    }
    Ok(())
}

fn check_pos(x: f64) -> Result<()> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "Bessel argument must be finite and > 0, got {x}"
        )));
    }
    Ok(())
}

/// Σ_k s^k (x/2)^{2k+n} / (k! (k+n)!) with s = ±1: J_n (s=-1) or I_n (s=+1).
/// Also returns the sum of |terms| for the error estimate.
fn ascending(n: u32, x: f64, sign: f64) -> (f64, f64) {
    let q = 0.25 * x * x;
    let mut term = if n == 0 { 1.0 } else { 0.5 * x };
    let mut sum = term;
    let mut abs_sum = term.abs();
    for k in 1..500 {
        let kf = k as f64;
        term *= sign * q / (kf * (kf + n as f64));
        sum += term;
        abs_sum += term.abs();
        if term.abs() < 1e-18 * abs_sum {
            break;
        }
    }
    (sum, abs_sum)
}

/// Y_n from the ascending series with the logarithmic term.
fn y_series(n: u32, x: f64) -> (f64, f64) {
    let (j, j_abs) = ascending(n, x, -1.0);
    let q = -0.25 * x * x;
    let lx = (0.5 * x).ln();
    // ψ(k+1) + ψ(k+n+1), built from harmonic numbers
    let mut h1 = -EULER_GAMMA;
    let mut h2 = -EULER_GAMMA + if n == 1 { 1.0 } else { 0.0 };
    let mut term = if n == 0 { 1.0 } else { 0.5 * x };
    let mut sum = term * (h1 + h2);
    let mut abs_sum = sum.abs();
    for k in 1..500 {
        let kf = k as f64;
        term *= q / (kf * (kf + n as f64));
        h1 += 1.0 / kf;
        h2 += 1.0 / (kf + n as f64);
        let t = term * (h1 + h2);
        sum += t;
        abs_sum += t.abs();
        if t.abs() < 1e-18 * abs_sum && kf > 2.0 {
            break;
        }
    }
    let (v, scale) = if n == 0 {
        let v = 2.0 / PI * lx * j - sum / PI;
        (v, (2.0 * lx.abs() * j_abs + abs_sum) / PI)
    } else {
        let v = -2.0 / (PI * x) + 2.0 / PI * lx * j - sum / PI;
        (v, 2.0 / (PI * x) + (2.0 * lx.abs() * j_abs + abs_sum) / PI)
    };
    (v, scale)
}

/// Hankel expansion amplitudes (P, Q) and the relative size of the smallest term.
fn hankel_pq(n: u32, x: f64) -> (f64, f64, f64) {
    let mu = 4.0 * (n * n) as f64;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        let next = term * (mu - odd * odd) / (kf * 8.0 * x);
        if next.abs() >= last && k > 2 {
            break;
        }
        term = next;
        last = term.abs();
        // a_k/x^k enters P for even k with sign (-1)^{k/2}, Q for odd k with (-1)^{(k-1)/2}
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
        if last < 1e-18 {
            break;
        }
    }
    (p, q, last)
}

fn jy_asymptotic(n: u32, x: f64) -> (f64, f64, f64) {
    let (p, q, small) = hankel_pq(n, x);
    let w = x - (n as f64) * 0.5 * PI - FRAC_PI_4;
    let amp = (2.0 / (PI * x)).sqrt();
    let (s, c) = w.sin_cos();
    let j = amp * (p * c - q * s);
    let y = amp * (p * s + q * c);
    // absolute error relative to the amplitude
    (j, y, (small + 4.0 * EPS * (1.0 + x * EPS)) * amp)
}

fn rel_from_abs(v: f64, abs_err: f64) -> f64 {
    if v == 0.0 {
        1.0
    } else {
        abs_err / v.abs()
    }
}

/// Bessel function of the first kind J_n(x), n ∈ {0, 1}, x ≥ 0.
pub fn bessel_j(order: u32, x: f64) -> Result<SpecValue> {
    check_order(order)?;
    check_nonneg(x)?;
    if x == 0.0 {
        return Ok(SpecValue::exact(if order == 0 { 1.0 } else { 0.0 }));
    }
    if x < JY_ASYMPTOTIC_MIN_X {
        let (v, abs_sum) = ascending(order, x, -1.0);
        return Ok(SpecValue::new(v, rel_from_abs(v, 2.0 * EPS * abs_sum)));
    }
    let (j, _, e) = jy_asymptotic(order, x);
    Ok(SpecValue::new(j, rel_from_abs(j, e)))
}

/// Bessel function of the second kind Y_n(x), n ∈ {0, 1}, x > 0.
pub fn bessel_y(order: u32, x: f64) -> Result<SpecValue> {
    check_order(order)?;
    check_pos(x)?;
    if x < JY_ASYMPTOTIC_MIN_X {
        let (v, scale) = y_series(order, x);
        return Ok(SpecValue::new(v, rel_from_abs(v, 4.0 * EPS * scale)));
    }
    let (_, y, e) = jy_asymptotic(order, x);
    Ok(SpecValue::new(y, rel_from_abs(y, e)))
}

/// Large-argument sum Σ (±1)^k a_k(n)/x^k shared by I and K.
fn ik_asymptotic_sum(n: u32, x: f64, sign: f64) -> (f64, f64) {
    let mu = 4.0 * (n * n) as f64;
    let mut term = 1.0_f64;
    let mut sum = 1.0;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        let next = sign * term * (mu - odd * odd) / (kf * 8.0 * x);
        if next.abs() >= last && k > 2 {
            break;
        }
        term = next;
        last = term.abs();
        sum += term;
        if last < 1e-18 {
            break;
        }
    }
    (sum, last / sum.abs() + 4.0 * EPS)
}

/// e^{-x} I_n(x).
pub fn bessel_i_scaled(order: u32, x: f64) -> Result<SpecValue> {
    check_order(order)?;
    check_nonneg(x)?;
    if x < IK_ASYMPTOTIC_MIN_X {
        let (v, _) = ascending(order, x, 1.0);
        return Ok(SpecValue::new(v * (-x).exp(), EPS * (8.0 + x)));
    }
    let (s, e) = ik_asymptotic_sum(order, x, -1.0);
    Ok(SpecValue::new(s / (2.0 * PI * x).sqrt(), e))
}

/// Modified Bessel function I_n(x), n ∈ {0, 1}, x ≥ 0.
pub fn bessel_i(order: u32, x: f64) -> Result<SpecValue> {
    check_order(order)?;
    check_nonneg(x)?;
    if x < IK_ASYMPTOTIC_MIN_X {
        let (v, _) = ascending(order, x, 1.0);
        return Ok(SpecValue::new(v, EPS * 8.0));
    }
    let sc = bessel_i_scaled(order, x)?;
    let mut out = SpecValue::from_log(
        1.0,
        sc.value.ln() + x,
        sc.accuracy.achieved_rel_err_estimate,
    );
    out.accuracy.achieved_rel_err_estimate += EPS * x;
    Ok(out)
}

/// (e^x K_0(x), e^x K_1(x)) for x > K_SERIES_MAX_X by Steed's method (CF2).
fn k_steed_scaled(x: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..10_000 {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS * 0.5 {
            break;
        }
    }
    let h = a1 * h;
    let k0 = (PI / (2.0 * x)).sqrt() / s;
    let k1 = k0 * (x + 0.5 - h) / x;
    (k0, k1)
}

/// K_n(x) from the ascending series (small x).
fn k_series(n: u32, x: f64) -> f64 {
    let lx = (0.5 * x).ln();
    let q = 0.25 * x * x;
    let (i, _) = ascending(n, x, 1.0);
    let mut h1 = -EULER_GAMMA;
    let mut h2 = -EULER_GAMMA + if n == 1 { 1.0 } else { 0.0 };
    let mut term = if n == 0 { 1.0 } else { 0.5 * x };
    let mut sum = term * (h1 + h2);
    for k in 1..300 {
        let kf = k as f64;
        term *= q / (kf * (kf + n as f64));
        h1 += 1.0 / kf;
        h2 += 1.0 / (kf + n as f64);
        let t = term * (h1 + h2);
        sum += t;
        if t.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    if n == 0 {
        -lx * i + 0.5 * sum
    } else {
        1.0 / x + lx * i - 0.5 * sum
    }
}

/// e^{x} K_n(x).
pub fn bessel_k_scaled(order: u32, x: f64) -> Result<SpecValue> {
    check_order(order)?;
    check_pos(x)?;
    if x <= K_SERIES_MAX_X {
        return Ok(SpecValue::new(k_series(order, x) * x.exp(), EPS * 16.0));
    }
    if x < IK_ASYMPTOTIC_MIN_X {
        let (k0, k1) = k_steed_scaled(x);
        let v = if order == 0 { k0 } else { k1 };
        return Ok(SpecValue::new(v, EPS * 16.0));
    }
    let (s, e) = ik_asymptotic_sum(order, x, 1.0);
    Ok(SpecValue::new((PI / (2.0 * x)).sqrt() * s, e))
}

/// Modified Bessel function K_n(x), n ∈ {0, 1}, x > 0.
pub fn bessel_k(order: u32, x: f64) -> Result<SpecValue> {
    check_order(order)?;
    check_pos(x)?;
    if x <= K_SERIES_MAX_X {
        return Ok(SpecValue::new(k_series(order, x), EPS * 16.0));
    }
    let sc = bessel_k_scaled(order, x)?;
    Ok(SpecValue::new(
        sc.value * (-x).exp(),
        sc.accuracy.achieved_rel_err_estimate + EPS * 4.0,
    ))
}
