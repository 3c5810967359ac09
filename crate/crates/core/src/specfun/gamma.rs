use std::f64::consts::PI;

use super::{is_nonpositive_integer, SpecValue};
use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln Γ(x) for x ≥ 0.5 from the Lanczos sum.
fn ln_gamma_lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let mut s = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + s.ln()
}

fn err_estimate(x: f64) -> f64 {
    let ax = x.abs().max(1.0);
    f64::EPSILON * (16.0 + ax * ax.ln())
}

/// sin(πx) with the argument reduced exactly first, accurate near integers.
pub(crate) fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// (sign of Γ(x), ln|Γ(x)|), x not a pole.
fn signed_ln_gamma(x: f64) -> (f64, f64) {
    if x >= 0.5 {
        (1.0, ln_gamma_lanczos(x))
    } else {
        let s = sin_pi(x);
        let (_, l) = signed_ln_gamma(1.0 - x);
        (s.signum(), PI.ln() - s.abs().ln() - l)
    }
}

/// Γ(x); poles at nonpositive integers are a domain error.
pub fn gamma(x: f64) -> Result<SpecValue> {
    if !x.is_finite() {
        return Err(Error::Domain(format!(
            "gamma argument must be finite, got {x}"
        )));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Domain(format!("gamma has a pole at {x}")));
    }
    if x == x.round() && x <= 23.0 {
        let mut f = 1.0;
        for k in 2..(x as i64) {
            f *= k as f64;
        }
        return Ok(SpecValue::exact(f));
    }
    let err = err_estimate(x);
    if (0.5..=20.0).contains(&x) {
        // direct product form keeps full relative accuracy
        let xm = x - 1.0;
        let mut s = LANCZOS[0];
        for (i, c) in LANCZOS.iter().enumerate().skip(1) {
            s += c / (xm + i as f64);
        }
        let t = xm + LANCZOS_G + 0.5;
        let v = (2.0 * PI).sqrt() * t.powf(xm + 0.5) * (-t).exp() * s;
        return Ok(SpecValue::new(v, err));
    }
    if x < 0.5 && x > -20.0 {
        let g = gamma(1.0 - x)?;
        let v = PI / (sin_pi(x) * g.value);
        return Ok(SpecValue::new(
            v,
            err + g.accuracy.achieved_rel_err_estimate,
        ));
    }
    let (sign, l) = signed_ln_gamma(x);
    Ok(SpecValue::from_log(sign, l, err))
}

/// ln|Γ(x)|.
pub fn ln_gamma(x: f64) -> Result<SpecValue> {
    if !x.is_finite() || is_nonpositive_integer(x) {
        return Err(Error::Domain(format!("ln_gamma undefined at {x}")));
    }
    let (_, l) = signed_ln_gamma(x);
    Ok(SpecValue::new(l, err_estimate(x) / l.abs().max(1.0)))
}

/// 1/Γ(x), entire: zero at the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    match gamma(x) {
        Ok(g) if g.overflow => 0.0,
        Ok(g) => 1.0 / g.value,
        Err(_) => 0.0,
    }
}
