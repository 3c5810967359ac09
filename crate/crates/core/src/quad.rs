//! Adaptive Gauss–Kronrod quadrature on finite intervals and on half lines.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

const XGK: [f64; 11] = [
    0.995_657_163_025_808_1,
    0.973_906_528_517_171_7,
    0.930_157_491_355_708_2,
    0.865_063_366_688_984_5,
    0.780_817_726_586_416_9,
    0.679_409_568_299_024_4,
    0.562_757_134_668_604_7,
    0.433_395_394_129_247_2,
    0.294_392_862_701_460_2,
    0.148_874_338_981_631_2,
    0.0,
];
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874,
    0.032_558_162_307_964_73,
    0.054_755_896_574_351_996,
    0.075_039_674_810_919_95,
    0.093_125_454_583_697_6,
    0.109_387_158_802_297_64,
    0.123_491_976_262_065_85,
    0.134_709_217_311_473_33,
    0.142_775_938_577_060_08,
    0.147_739_104_901_338_5,
    0.149_445_554_002_916_9,
];
/// Weights of the embedded 10-point Gauss rule at XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_14,
    0.149_451_349_150_580_6,
    0.219_086_362_515_982_04,
    0.269_266_719_309_996_35,
    0.295_524_224_714_752_87,
];

const MAX_PANELS: usize = 5_000;

/// Absolute and relative error targets; a result is accepted when the
/// estimated error is below max(abs, rel·|value|).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub const fn new(abs: f64, rel: f64) -> Self {
        Tolerance { abs, rel }
    }

    pub const fn both(tol: f64) -> Self {
        Tolerance { abs: tol, rel: tol }
    }

    fn bound(&self, value: f64) -> f64 {
        self.abs.max(self.rel * value.abs())
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::both(1e-9)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk21<F: FnMut(f64) -> Result<f64>>(f: &mut F, a: f64, b: f64) -> Result<Panel> {
    let c = 0.5 * (a + b);
    let hl = 0.5 * (b - a);
    let fc = f(c)?;
    let mut resk = fc * WGK[10];
    let mut resabs = resk.abs();
    let mut resg = 0.0;
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = hl * XGK[j];
        let f1 = f(c - dx)?;
        let f2 = f(c + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let reskh = 0.5 * resk;
    let mut resasc = WGK[10] * (fc - reskh).abs();
    for j in 0..10 {
        resasc += WGK[j] * ((fv1[j] - reskh).abs() + (fv2[j] - reskh).abs());
    }
    let value = resk * hl;
    let resabs = resabs * hl.abs();
    let resasc = resasc * hl.abs();
    let mut error = ((resk - resg) * hl).abs();
    if resasc != 0.0 && error != 0.0 {
        error = resasc * (200.0 * error / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * resabs);
    }
    if !value.is_finite() {
        return Err(Error::Numerical(format!(
            "non-finite integrand on [{a}, {b}]"
        )));
    }
    Ok(Panel { a, b, value, error })
}

/// ∫_a^b f for a fallible integrand, by globally adaptive bisection of the
/// panel with the largest Gauss–Kronrod (10/21) error estimate.
pub fn integrate_fallible<F>(mut f: F, a: f64, b: f64, tol: Tolerance) -> Result<QuadResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            error: 0.0,
            evaluations: 0,
        });
    }
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "finite limits required, got [{a}, {b}]"
        )));
    }
    let first = gk21(&mut f, a, b)?;
    let mut value = first.value;
    let mut error = first.error;
    let mut evaluations = 21;
    let mut heap = BinaryHeap::new();
    heap.push(first);
    while error > tol.bound(value) {
        if heap.len() >= MAX_PANELS {
            return Err(Error::Numerical(format!(
                "quadrature on [{a}, {b}] stalled at error {error:e} (value {value:e})"
            )));
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid == worst.a || mid == worst.b {
            // interval exhausted at machine resolution; accept what we have
            heap.push(worst);
            break;
        }
        let left = gk21(&mut f, worst.a, mid)?;
        let right = gk21(&mut f, mid, worst.b)?;
        evaluations += 42;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // re-sum occasionally so the running totals do not drift
        if evaluations % (42 * 64) == 21 {
            value = heap.iter().map(|p| p.value).sum();
            error = heap.iter().map(|p| p.error).sum();
        }
    }
    let value = heap.iter().map(|p| p.value).sum();
    let error = heap.iter().map(|p| p.error).sum();
    Ok(QuadResult {
        value,
        error,
        evaluations,
    })
}

/// ∫_a^b f for an infallible integrand.
pub fn integrate<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    tol: Tolerance,
) -> Result<QuadResult> {
    integrate_fallible(|x| Ok(f(x)), a, b, tol)
}

/// Result of a half-line integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfLineResult {
    pub value: f64,
    pub error: f64,
    /// End of the last doubled panel; the remainder beyond it is the tail.
    pub truncation: f64,
    /// Contribution of [truncation, ∞).
    pub tail: f64,
}

/// ∫_a^∞ f. Panels [a, a+L], [a+L, a+3L], ... of doubling length are added
/// until the last one contributes less than `panel_ratio` of the running
/// total; the remaining tail is then integrated exactly after the map
/// s = T + T·u/(1-u), u ∈ [0, 1).
pub fn integrate_half_line<F>(
    mut f: F,
    a: f64,
    first_panel: f64,
    panel_ratio: f64,
    tol: Tolerance,
) -> Result<HalfLineResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(first_panel > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "first panel must be positive, got {first_panel}"
        )));
    }
    let mut lo = a;
    let mut len = first_panel;
    let mut value = 0.0;
    let mut error = 0.0;
    for _ in 0..60 {
        let r = integrate_fallible(&mut f, lo, lo + len, tol)?;
        value += r.value;
        error += r.error;
        lo += len;
        len *= 2.0;
        if r.value.abs() <= panel_ratio * value.abs() || (r.value == 0.0 && value == 0.0) {
            break;
        }
    }
    let t = lo;
    let scale = t.abs().max(first_panel);
    let tail = integrate_fallible(
        |u: f64| {
            let w = 1.0 - u;
            let s = t + scale * u / w;
            if !s.is_finite() {
                return Ok(0.0);
            }
            Ok(f(s)? * scale / (w * w))
        },
        0.0,
        1.0,
        Tolerance::new(tol.abs, tol.rel.max(1e-14)),
    )?;
    Ok(HalfLineResult {
        value: value + tail.value,
        error: error + tail.error,
        truncation: t,
        tail: tail.value,
    })
}
