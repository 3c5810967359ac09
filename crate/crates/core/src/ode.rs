//! Dormand–Prince 5(4) integrator with PI step control and continuous output.

use crate::error::{Error, Result};

const C2: f64 = 0.2;
const C3: f64 = 0.3;
const C4: f64 = 0.8;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 0.2;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

#[derive(Debug, Clone, Copy)]
pub struct OdeOptions {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
    /// Largest step magnitude allowed (0 = unbounded).
    pub h_max: f64,
}

impl OdeOptions {
    pub fn with_tol(tol: f64) -> Self {
        OdeOptions {
            rtol: tol,
            atol: tol,
            max_steps: 1_000_000,
            h_max: 0.0,
        }
    }
}

/// One accepted step with its continuous-extension coefficients.
#[derive(Debug, Clone)]
pub struct DenseStep<const N: usize> {
    pub t0: f64,
    pub h: f64,
    cont: [[f64; N]; 5],
}

impl<const N: usize> DenseStep<N> {
    fn eval(&self, t: f64) -> [f64; N] {
        let th = (t - self.t0) / self.h;
        let th1 = 1.0 - th;
        let c = &self.cont;
        std::array::from_fn(|i| {
            c[0][i] + th * (c[1][i] + th1 * (c[2][i] + th * (c[3][i] + th1 * c[4][i])))
        })
    }
}

/// Dense solution of an initial value problem, integrated forward or backward.
#[derive(Debug, Clone)]
pub struct Trajectory<const N: usize> {
    pub t_start: f64,
    pub t_end: f64,
    pub steps: Vec<DenseStep<N>>,
    /// Mesh points and states at the accepted steps, starting with the initial state.
    pub mesh: Vec<(f64, [f64; N])>,
}

impl<const N: usize> Trajectory<N> {
    fn forward(&self) -> bool {
        self.t_end >= self.t_start
    }

    /// State at any t between t_start and t_end.
    pub fn eval(&self, t: f64) -> Result<[f64; N]> {
        let (lo, hi) = if self.forward() {
            (self.t_start, self.t_end)
        } else {
            (self.t_end, self.t_start)
        };
        let slack = 1e-12 * (1.0 + lo.abs().max(hi.abs()));
        if t < lo - slack || t > hi + slack || t.is_nan() {
            return Err(Error::Domain(format!(
                "t = {t} outside the solved range [{lo}, {hi}]"
            )));
        }
        if self.steps.is_empty() {
            return Ok(self.mesh[0].1);
        }
        let fwd = self.forward();
        // steps are ordered along the integration direction
        let idx = self.steps.partition_point(|s| {
            if fwd {
                s.t0 + s.h <= t
            } else {
                s.t0 + s.h >= t
            }
        });
        let idx = idx.min(self.steps.len() - 1);
        Ok(self.steps[idx].eval(t))
    }
}

fn norm<const N: usize>(e: &[f64; N], y0: &[f64; N], y1: &[f64; N], o: &OdeOptions) -> f64 {
    let mut s = 0.0;
    for i in 0..N {
        let sk = o.atol + o.rtol * y0[i].abs().max(y1[i].abs());
        s += (e[i] / sk).powi(2);
    }
    (s / N as f64).sqrt()
}

fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    std::array::from_fn(|i| y[i] + h * terms.iter().map(|(c, k)| c * k[i]).sum::<f64>())
}

/// Integrates y' = f(t, y) from (t0, y0) to t_end (either direction).
pub fn dopri5<const N: usize, F>(
    mut f: F,
    t0: f64,
    y0: [f64; N],
    t_end: f64,
    opts: OdeOptions,
) -> Result<Trajectory<N>>
where
    F: FnMut(f64, &[f64; N]) -> [f64; N],
{
    let dir = if t_end >= t0 { 1.0 } else { -1.0 };
    let span = (t_end - t0).abs();
    let mut traj = Trajectory {
        t_start: t0,
        t_end,
        steps: Vec::new(),
        mesh: vec![(t0, y0)],
    };
    if span == 0.0 {
        return Ok(traj);
    }
    let h_max = if opts.h_max > 0.0 {
        opts.h_max.min(span)
    } else {
        span
    };
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    // initial step from the scale of y and y'
    let d0 = norm(&y, &[0.0; N], &y, &opts);
    let d1 = norm(&k1, &[0.0; N], &y, &opts);
    let mut h = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    h = h.min(h_max).min(0.1 * span).max(1e-10 * span);
    let beta = 0.04;
    let expo1 = 0.2 - beta * 0.75;
    let safe = 0.9;
    let mut facold: f64 = 1e-4;
    let mut reject = false;
    for _ in 0..opts.max_steps {
        let remaining = (t_end - t) * dir;
        if remaining <= 1e-14 * (1.0 + t.abs()) {
            traj.t_end = t_end;
            return Ok(traj);
        }
        let last = h >= remaining;
        if last {
            h = remaining;
        }
        if h < 1e-14 * (1.0 + t.abs()) {
            return Err(Error::Stiffness { t });
        }
        let hs = h * dir;
        let k2 = f(t + C2 * hs, &axpy(&y, hs, &[(A21, &k1)]));
        let k3 = f(t + C3 * hs, &axpy(&y, hs, &[(A31, &k1), (A32, &k2)]));
        let k4 = f(
            t + C4 * hs,
            &axpy(&y, hs, &[(A41, &k1), (A42, &k2), (A43, &k3)]),
        );
        let k5 = f(
            t + C5 * hs,
            &axpy(&y, hs, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
        );
        let k6 = f(
            t + hs,
            &axpy(
                &y,
                hs,
                &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
            ),
        );
        let y1 = axpy(
            &y,
            hs,
            &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)],
        );
        let k7 = f(t + hs, &y1);
        let e: [f64; N] = std::array::from_fn(|i| {
            hs * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i])
        });
        let err = norm(&e, &y, &y1, &opts);
        if !err.is_finite() {
            h *= 0.1;
            reject = true;
            continue;
        }
        let fac11 = err.powf(expo1);
        if err <= 1.0 {
            let mut fac = fac11 / facold.powf(beta);
            fac = (fac / safe).clamp(0.1, 5.0);
            let mut hnew = h / fac;
            if reject {
                hnew = hnew.min(h);
            }
            facold = err.max(1e-4);
            let ydiff: [f64; N] = std::array::from_fn(|i| y1[i] - y[i]);
            let bspl: [f64; N] = std::array::from_fn(|i| hs * k1[i] - ydiff[i]);
            let cont = [
                y,
                ydiff,
                bspl,
                std::array::from_fn(|i| ydiff[i] - hs * k7[i] - bspl[i]),
                std::array::from_fn(|i| {
                    hs * (D1 * k1[i]
                        + D3 * k3[i]
                        + D4 * k4[i]
                        + D5 * k5[i]
                        + D6 * k6[i]
                        + D7 * k7[i])
                }),
            ];
            traj.steps.push(DenseStep { t0: t, h: hs, cont });
            t = if last { t_end } else { t + hs };
            y = y1;
            k1 = k7;
            traj.mesh.push((t, y));
            h = hnew.min(h_max);
            reject = false;
            if last {
                return Ok(traj);
            }
        } else {
            h /= (fac11 / safe).min(10.0);
            reject = true;
        }
    }
    Err(Error::Numerical(format!(
        "dopri5 exceeded {} steps at t = {t}",
        opts.max_steps
    )))
}
