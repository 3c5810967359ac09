//! The differential resolvent r(t, s): the solution of
//! r'(t) = a r(t) + b (1+t)^{-1} ∫_s^t r(u, s) du with r(s, s) = 1.
//!
//! For b ≠ 0 it is assembled as r(t, s) = d_A(s) r_A(t) + d_B(s) r_B(t) from
//! a pair of fundamental solutions of
//! r'' + (1/(1+t) − a) r' − ((a+b)/(1+t)) r = 0
//! and the coefficients d_A = (r_B' − a r_B)/W, d_B = (a r_A − r_A')/W, where
//! W(s) = W0 e^{as}/(1+s) is the Wronskian of (r_A, r_B).
//!
//! | region            | r_A                   | r_B                   |
//! |-------------------|-----------------------|-----------------------|
//! | a < 0             | e^{at} U(−b/a, 1, z)  | e^{at} M(−b/a, 1, z)  |
//! | a > 0             | U(1+b/a, 1, z)        | M(1+b/a, 1, z)        |
//! | a = 0, b > 0      | I₀(2√(b(1+t)))        | K₀(2√(b(1+t)))        |
//! | a = 0, b < 0      | J₀(2√(−b(1+t)))       | Y₀(2√(−b(1+t)))       |
//!
//! with z = |a|(1+t). When b/a is an integer of the right sign the two
//! Kummer solutions are proportional and r_B is replaced by the second
//! solution r̃ = r_A + W0·Q built from Abel's identity.
//!
//! Values are carried as mantissa·e^{log} so that products d(s)·r(t) stay
//! representable for large t.

use crate::error::{check_finite, Error, Result};
use crate::model::{classify, degenerate_index, Label, Regime, BOUNDARY_TOL};
use crate::ode::{dopri5, OdeOptions, Trajectory};
use crate::quad::{integrate, Tolerance};
use crate::specfun::{
    bessel_i_scaled, bessel_j, bessel_k_scaled, bessel_y, kummer_m_scaled, ln_gamma, tricomi_u,
};

/// Distance of b/a from an integer below which the degenerate branch is used.
pub const NEAR_DEGENERATE_TOL: f64 = 1e-6;
/// Largest |b/a| accepted off the degenerate lines.
pub const MAX_RATIO: f64 = 120.0;
/// Largest polynomial degree accepted on the degenerate lines.
pub const MAX_TILDE_DEGREE: u32 = 50;

/// Value m·e^{log} of a function together with its derivative dm·e^{log}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eval {
    pub m: f64,
    pub dm: f64,
    pub log: f64,
}

impl Eval {
    pub fn value(&self) -> f64 {
        scaled(self.m, self.log)
    }

    pub fn derivative(&self) -> f64 {
        scaled(self.dm, self.log)
    }
}

/// A number stored as m·e^{log}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    pub m: f64,
    pub log: f64,
}

impl Scaled {
    pub fn value(&self) -> f64 {
        scaled(self.m, self.log)
    }
}

pub(crate) fn scaled(m: f64, log: f64) -> f64 {
    if m == 0.0 {
        0.0
    } else {
        m * log.exp()
    }
}

#[derive(Debug, Clone)]
enum Kind {
    /// a < 0, non-degenerate: r1 = e^{at}U(α,1,z), r2 = e^{at}M(α,1,z), α = −b/a.
    NegativeA { alpha: f64 },
    /// a > 0, non-degenerate: r3 = U(α,1,z), r4 = M(α,1,z), α = 1 + b/a.
    PositiveA { alpha: f64 },
    /// a = 0, b > 0: r5 = I₀(z), r6 = K₀(z), z = 2√(b(1+t)).
    Modified,
    /// a = 0, b < 0: r7 = J₀(z), r8 = Y₀(z), z = 2√(|b|(1+t)).
    Ordinary,
    /// b/a an integer of the degenerate sign set.
    Tilde(Box<Tilde>),
}

/// Fundamental pair (r_A, r_B) and the resolvent coefficients (d_A, d_B).
#[derive(Debug, Clone)]
pub struct BasisPair {
    pub regime: Regime,
    pub a: f64,
    /// b actually used by the basis; differs from the input only on the
    /// near-degenerate route, where b/a is snapped to the nearby integer.
    pub b: f64,
    /// W(0), the Wronskian r_A r_B' − r_A' r_B at t = 0.
    pub wronskian0: f64,
    /// Set when b/a was within NEAR_DEGENERATE_TOL of, but not within the
    /// classification tolerance of, a degenerate integer.
    pub near_degenerate_warning: bool,
    ln_w0: f64,
    sign_w0: f64,
    kind: Kind,
}

fn u(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    Ok(tricomi_u(alpha, beta, x)?.value)
}

fn ms(alpha: f64, beta: f64, x: f64) -> Result<f64> {
    Ok(kummer_m_scaled(alpha, beta, x)?.value)
}

/// Builds the basis for (a, b); b = 0 is rejected (closed form applies).
pub fn basis(a: f64, b: f64) -> Result<BasisPair> {
    BasisPair::new(a, b, 1.0)
}

impl BasisPair {
    /// Like [`basis`], with an explicit normalization W0 for the degenerate
    /// second solution (ignored on non-degenerate branches).
    pub fn new(a: f64, b: f64, tilde_w0: f64) -> Result<BasisPair> {
        check_finite("a", a)?;
        check_finite("b", b)?;
        let regime = classify(a, b)?;
        if b.abs() <= BOUNDARY_TOL {
            return Err(Error::Unsupported(
                "b = 0 has no basis decomposition; use the closed form e^{a(t-s)}".into(),
            ));
        }
        if !(tilde_w0.is_finite() && tilde_w0 != 0.0) {
            return Err(Error::InvalidArgument(format!(
                "W0 must be finite and nonzero, got {tilde_w0}"
            )));
        }
        if a.abs() <= BOUNDARY_TOL {
            let (ln_w0, sign_w0, kind) = if b > 0.0 {
                ((0.5f64).ln(), -1.0, Kind::Modified)
            } else {
                ((-(std::f64::consts::PI.ln())), 1.0, Kind::Ordinary)
            };
            return Ok(BasisPair {
                regime,
                a: 0.0,
                b,
                wronskian0: sign_w0 * ln_w0.exp(),
                near_degenerate_warning: false,
                ln_w0,
                sign_w0,
                kind,
            });
        }
        if let Some(n) = degenerate_index(a, b, |_| NEAR_DEGENERATE_TOL) {
            let b_eff = n as f64 * a;
            let tilde = Tilde::new(a, b_eff, tilde_w0)?;
            return Ok(BasisPair {
                regime,
                a,
                b: b_eff,
                wronskian0: tilde_w0,
                near_degenerate_warning: !regime.degenerate_integer,
                ln_w0: tilde_w0.abs().ln(),
                sign_w0: tilde_w0.signum(),
                kind: Kind::Tilde(Box::new(tilde)),
            });
        }
        if (b / a).abs() > MAX_RATIO {
            return Err(Error::Unsupported(format!(
                "|b/a| = {} exceeds the supported bound {MAX_RATIO}",
                (b / a).abs()
            )));
        }
        let (alpha, ln_w0_part, kind) = if a < 0.0 {
            let alpha = -b / a;
            (alpha, -a, Kind::NegativeA { alpha })
        } else {
            let alpha = 1.0 + b / a;
            (alpha, a, Kind::PositiveA { alpha })
        };
        // W0 = e^{∓a}/Γ(α)
        let lg = ln_gamma(alpha)?.value;
        let sign_gamma = gamma_sign(alpha);
        let ln_w0 = ln_w0_part - lg;
        Ok(BasisPair {
            regime,
            a,
            b,
            wronskian0: sign_gamma * ln_w0.exp(),
            near_degenerate_warning: false,
            ln_w0,
            sign_w0: sign_gamma,
            kind,
        })
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self.kind, Kind::Tilde(_))
    }

    /// The degenerate second solution, if this basis uses one.
    pub fn tilde(&self) -> Option<&Tilde> {
        match &self.kind {
            Kind::Tilde(t) => Some(t),
            _ => None,
        }
    }

    /// r_A and r_A' at t ≥ 0.
    pub fn r_a(&self, t: f64) -> Result<Eval> {
        let (a, b) = (self.a, self.b);
        match &self.kind {
            Kind::NegativeA { alpha } => {
                let z = -a * (1.0 + t);
                let u0 = u(*alpha, 1.0, z)?;
                let u1 = u(alpha + 1.0, 2.0, z)?;
                Ok(Eval {
                    m: u0,
                    dm: a * u0 - b * u1,
                    log: a * t,
                })
            }
            Kind::PositiveA { alpha } => {
                let z = a * (1.0 + t);
                let u0 = u(*alpha, 1.0, z)?;
                let u1 = u(alpha + 1.0, 2.0, z)?;
                Ok(Eval {
                    m: u0,
                    dm: -a * alpha * u1,
                    log: 0.0,
                })
            }
            Kind::Modified => {
                let z = 2.0 * (b * (1.0 + t)).sqrt();
                let i0 = bessel_i_scaled(0, z)?.value;
                let i1 = bessel_i_scaled(1, z)?.value;
                Ok(Eval {
                    m: i0,
                    dm: 2.0 * b / z * i1,
                    log: z,
                })
            }
            Kind::Ordinary => {
                let z = 2.0 * (-b * (1.0 + t)).sqrt();
                let j0 = bessel_j(0, z)?.value;
                let j1 = bessel_j(1, z)?.value;
                Ok(Eval {
                    m: j0,
                    dm: 2.0 * b / z * j1,
                    log: 0.0,
                })
            }
            Kind::Tilde(td) => td.r_a(t),
        }
    }

    /// r_B and r_B' at t ≥ 0.
    pub fn r_b(&self, t: f64) -> Result<Eval> {
        let (a, b) = (self.a, self.b);
        match &self.kind {
            Kind::NegativeA { alpha } => {
                let z = -a * (1.0 + t);
                let m0 = ms(*alpha, 1.0, z)?;
                let m1 = ms(alpha + 1.0, 2.0, z)?;
                // e^{at} e^{z} = e^{|a|}
                Ok(Eval {
                    m: m0,
                    dm: a * m0 + b * m1,
                    log: -a,
                })
            }
            Kind::PositiveA { alpha } => {
                let z = a * (1.0 + t);
                let m0 = ms(*alpha, 1.0, z)?;
                let m1 = ms(alpha + 1.0, 2.0, z)?;
                Ok(Eval {
                    m: m0,
                    dm: a * alpha * m1,
                    log: z,
                })
            }
            Kind::Modified => {
                let z = 2.0 * (b * (1.0 + t)).sqrt();
                let k0 = bessel_k_scaled(0, z)?.value;
                let k1 = bessel_k_scaled(1, z)?.value;
                Ok(Eval {
                    m: k0,
                    dm: -2.0 * b / z * k1,
                    log: -z,
                })
            }
            Kind::Ordinary => {
                let z = 2.0 * (-b * (1.0 + t)).sqrt();
                let y0 = bessel_y(0, z)?.value;
                let y1 = bessel_y(1, z)?.value;
                Ok(Eval {
                    m: y0,
                    dm: 2.0 * b / z * y1,
                    log: 0.0,
                })
            }
            Kind::Tilde(td) => td.r_b(t),
        }
    }

    /// A pair spanning the same solutions as (r_A, r_B) that is preferred
    /// for numerical work: (r_A, r_B) itself, except on the degenerate branch
    /// where it is (r_A, r̃ − r_A) = (r_A, W0·Q). Both pairs have Wronskian
    /// W0·e^{at}/(1+t), and the second avoids adding r_A to a much smaller Q.
    pub fn stable_pair(&self, t: f64) -> Result<(Eval, Eval)> {
        match &self.kind {
            Kind::Tilde(td) => Ok((td.r_a(t)?, td.w0_q(t)?)),
            _ => Ok((self.r_a(t)?, self.r_b(t)?)),
        }
    }

    /// Coefficients of [`BasisPair::stable_pair`] in r(t, s).
    pub fn stable_d(&self, s: f64) -> Result<(Scaled, Scaled)> {
        let (ra, rb) = self.stable_pair(s)?;
        Ok(self.d_from(s, &ra, &rb))
    }

    /// (d_A(s), d_B(s)).
    pub fn d(&self, s: f64) -> Result<(Scaled, Scaled)> {
        let (ea, eb) = self.stable_d(s)?;
        match self.kind {
            // r = e_A r_A + e_B (r̃ − r_A) = (e_A − e_B) r_A + e_B r̃
            Kind::Tilde(_) => {
                let log = ea.log.max(eb.log);
                let m = scaled(ea.m, ea.log - log) - scaled(eb.m, eb.log - log);
                Ok((Scaled { m, log }, eb))
            }
            _ => Ok((ea, eb)),
        }
    }

    fn d_from(&self, s: f64, ra: &Eval, rb: &Eval) -> (Scaled, Scaled) {
        let a = self.a;
        // 1/W(s) = (1+s) e^{-as} / W0
        let f = (1.0 + s) / self.sign_w0;
        let shift = -a * s - self.ln_w0;
        let da = Scaled {
            m: (rb.dm - a * rb.m) * f,
            log: rb.log + shift,
        };
        let db = Scaled {
            m: (a * ra.m - ra.dm) * f,
            log: ra.log + shift,
        };
        (da, db)
    }

    pub fn d_a(&self, s: f64) -> Result<Scaled> {
        Ok(self.d(s)?.0)
    }

    pub fn d_b(&self, s: f64) -> Result<Scaled> {
        Ok(self.d(s)?.1)
    }

    /// Wronskian r_A r_B' − r_A' r_B at t, from the basis values.
    pub fn wronskian(&self, t: f64) -> Result<f64> {
        let ra = self.r_a(t)?;
        let rb = self.r_b(t)?;
        Ok(scaled(ra.m * rb.dm - ra.dm * rb.m, ra.log + rb.log))
    }
}

fn gamma_sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else {
        // Γ is negative on (−1, 0), (−3, −2), ...
        let k = (-x).floor() as i64;
        if k % 2 == 0 {
            -1.0
        } else {
            1.0
        }
    }
}

/// Data for the degenerate second solution r̃ = r_A + W0·Q, where
/// Q(t) = P(t)·G(t) for a < 0 and Q(t) = e^{at}P(t)·G(t) for a > 0,
/// with P the polynomial r_A·e^{-at} (a < 0) or r_A (a > 0),
/// G(t) = ∫_{t*}^t e^{-|a|(t-u)} g(u) du and g(u) = 1/((1+u)P(u)²).
/// On [0, t*) Q is continued by integrating the resolvent ODE backwards.
#[derive(Debug, Clone)]
pub struct Tilde {
    a: f64,
    c: f64,
    degree: u32,
    w0: f64,
    /// Anchor t* = 1 + max(0, largest real zero of P).
    pub t_star: f64,
    backward: Trajectory<2>,
    step: f64,
    window: f64,
    checkpoints: Vec<f64>,
}

const G_TOL: Tolerance = Tolerance::new(1e-300, 1e-13);

impl Tilde {
    fn new(a: f64, b: f64, w0: f64) -> Result<Tilde> {
        let c = a.abs();
        // P = U(−n, 1, c(1+t)), n = b/a for a < 0 and n = −1 − b/a for a > 0
        let n = if a < 0.0 {
            (b / a).round()
        } else {
            -1.0 - (b / a).round()
        };
        if n < 0.0 {
            return Err(Error::Unsupported(format!("({a}, {b}) is not degenerate")));
        }
        if n > MAX_TILDE_DEGREE as f64 {
            return Err(Error::Unsupported(format!(
                "degenerate degree {n} exceeds the supported bound {MAX_TILDE_DEGREE}"
            )));
        }
        let degree = n as u32;
        let mut td = Tilde {
            a,
            c,
            degree,
            w0,
            t_star: 1.0,
            backward: Trajectory {
                t_start: 0.0,
                t_end: 0.0,
                steps: vec![],
                mesh: vec![(0.0, [0.0; 2])],
            },
            step: 1.0 / c,
            window: 60.0 / c,
            checkpoints: Vec::new(),
        };
        let root = largest_root(degree)?;
        td.t_star = 1.0 + root.map_or(0.0, |z| (z / c - 1.0).max(0.0));
        // G at the checkpoints t* + kΔ, k = 0..K
        let k_max = (td.window / td.step).ceil() as usize;
        let decay = (-c * td.step).exp();
        let mut g = 0.0;
        td.checkpoints.push(0.0);
        for k in 0..k_max {
            let lo = td.t_star + k as f64 * td.step;
            let hi = lo + td.step;
            g = decay * g + td.window_integral(lo, hi)?;
            td.checkpoints.push(g);
        }
        // Q on [0, t*] from Q(t*) = 0, Q'(t*) = e^{(a>0) a t*} P(t*) g(t*)
        let ts = td.t_star;
        let p = td.p(ts)?;
        let lift = if a > 0.0 { (a * ts).exp() } else { 1.0 };
        let dq = lift * p.0 * td.g(ts)?;
        let (ab, aa) = (a + b, a);
        td.backward = dopri5(
            move |t, y: &[f64; 2]| [y[1], -(1.0 / (1.0 + t) - aa) * y[1] + ab / (1.0 + t) * y[0]],
            ts,
            [0.0, dq],
            0.0,
            OdeOptions {
                h_max: 0.05,
                atol: 1e-300,
                ..OdeOptions::with_tol(1e-13)
            },
        )?;
        Ok(td)
    }

    /// (P(t), P'(t)).
    fn p(&self, t: f64) -> Result<(f64, f64)> {
        let n = self.degree as f64;
        let z = self.c * (1.0 + t);
        let p = u(-n, 1.0, z)?;
        let dp = if self.degree == 0 {
            0.0
        } else {
            self.c * n * u(1.0 - n, 2.0, z)?
        };
        Ok((p, dp))
    }

    fn g(&self, t: f64) -> Result<f64> {
        let p = self.p(t)?.0;
        Ok(1.0 / ((1.0 + t) * p * p))
    }

    /// ∫_lo^hi e^{-c(hi-u)} g(u) du.
    fn window_integral(&self, lo: f64, hi: f64) -> Result<f64> {
        if hi <= lo {
            return Ok(0.0);
        }
        let mut err = None;
        let r = integrate(
            |x| match self.g(x) {
                Ok(v) => (-self.c * (hi - x)).exp() * v,
                Err(e) => {
                    err.get_or_insert(e);
                    0.0
                }
            },
            lo,
            hi,
            G_TOL,
        )?;
        if let Some(e) = err {
            return Err(e);
        }
        Ok(r.value)
    }

    /// G(t) for t ≥ t*.
    fn big_g(&self, t: f64) -> Result<f64> {
        let x = t - self.t_star;
        if x <= self.window {
            let k = ((x / self.step).floor() as usize).min(self.checkpoints.len() - 1);
            let ck = self.t_star + k as f64 * self.step;
            Ok((-self.c * (t - ck)).exp() * self.checkpoints[k] + self.window_integral(ck, t)?)
        } else {
            // contributions from before t − window are below e^{-60} relative
            self.window_integral(t - self.window, t)
        }
    }

    /// Normalization W0 of the second solution.
    pub fn wronskian0(&self) -> f64 {
        self.w0
    }

    /// (Q(t), Q'(t)) for a < 0, and (e^{-at}Q, e^{-at}Q') for a > 0 with t ≥ t*
    /// (unscaled for t < t*). Returns the log-scale used.
    fn q(&self, t: f64) -> Result<(f64, f64, f64)> {
        if t < self.t_star {
            let y = self.backward.eval(t)?;
            return Ok((y[0], y[1], 0.0));
        }
        let (p, dp) = self.p(t)?;
        let big_g = self.big_g(t)?;
        let g = self.g(t)?;
        if self.a < 0.0 {
            Ok((p * big_g, dp * big_g + p * (g - self.c * big_g), 0.0))
        } else {
            // Q' = e^{at}(P'G + P g)
            Ok((p * big_g, dp * big_g + p * g, self.a * t))
        }
    }

    fn r_a(&self, t: f64) -> Result<Eval> {
        let (p, dp) = self.p(t)?;
        if self.a < 0.0 {
            Ok(Eval {
                m: p,
                dm: self.a * p + dp,
                log: self.a * t,
            })
        } else {
            Ok(Eval {
                m: p,
                dm: dp,
                log: 0.0,
            })
        }
    }

    /// W0·Q(t) and its derivative.
    fn w0_q(&self, t: f64) -> Result<Eval> {
        let (q, dq, log) = self.q(t)?;
        Ok(Eval {
            m: self.w0 * q,
            dm: self.w0 * dq,
            log,
        })
    }

    fn r_b(&self, t: f64) -> Result<Eval> {
        let ra = self.r_a(t)?;
        let wq = self.w0_q(t)?;
        // r̃ = r_A + W0·Q, written on Q's scale
        let shift = (ra.log - wq.log).exp();
        Ok(Eval {
            m: ra.m * shift + wq.m,
            dm: ra.dm * shift + wq.dm,
            log: wq.log,
        })
    }

    /// r̃(t), the degenerate second solution.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if t < 0.0 {
            return Err(Error::Domain(format!("t must be >= 0, got {t}")));
        }
        Ok(self.r_b(t)?.value())
    }

    /// r̃(t) and r̃'(t) in scaled form.
    pub fn eval_scaled(&self, t: f64) -> Result<Eval> {
        self.r_b(t)
    }
}

/// Largest real zero z > 0 of U(−n, 1, z) = (−1)^n n! L_n(z), by scanning
/// down from 4n + 4 (all Laguerre zeros lie below it) and bisecting the
/// first sign change.
fn largest_root(n: u32) -> Result<Option<f64>> {
    if n == 0 {
        return Ok(None);
    }
    let poly = |z: f64| tricomi_u(-(n as f64), 1.0, z).map(|v| v.value);
    let bound = 4.0 * n as f64 + 4.0;
    let cells = 400 * n as usize;
    let h = bound / cells as f64;
    let mut hi = bound;
    let mut f_hi = poly(hi)?;
    for i in (0..cells).rev() {
        let lo = i as f64 * h;
        let f_lo = if lo == 0.0 { 1.0 } else { poly(lo)? };
        if f_lo == 0.0 {
            return Ok(Some(lo));
        }
        if f_lo.signum() != f_hi.signum() {
            let (mut l, mut r) = (lo, hi);
            for _ in 0..200 {
                let m = 0.5 * (l + r);
                if m == l || m == r {
                    break;
                }
                if poly(m)?.signum() == f_lo.signum() {
                    l = m;
                } else {
                    r = m;
                }
            }
            return Ok(Some(0.5 * (l + r)));
        }
        hi = lo;
        f_hi = f_lo;
    }
    Err(Error::Numerical(format!(
        "no real zero found for U(-{n}, 1, z)"
    )))
}

/// The degenerate second solution r̃₂ (a < 0) or r̃₄ (a > 0).
pub fn tilde_second_solution(a: f64, b: f64) -> Result<Tilde> {
    let regime = classify(a, b)?;
    if !regime.degenerate_integer {
        return Err(Error::Unsupported(format!(
            "({a}, {b}) is not a degenerate pair"
        )));
    }
    let n = (b / a).round();
    Tilde::new(a, n * a, 1.0)
}

/// Resolvent evaluator; construct once and evaluate many times.
#[derive(Debug, Clone)]
pub struct Resolvent {
    pub a: f64,
    pub b: f64,
    basis: Option<BasisPair>,
}

/// Basis values at a fixed t, cached for repeated evaluation.
#[derive(Debug, Clone, Copy)]
pub struct Row {
    pub t: f64,
    pub(crate) ra: Eval,
    pub(crate) rb: Eval,
}

impl Resolvent {
    pub fn new(a: f64, b: f64) -> Result<Resolvent> {
        Resolvent::with_wronskian0(a, b, 1.0)
    }

    /// Uses `w0` as the normalization of a degenerate second solution.
    pub fn with_wronskian0(a: f64, b: f64, w0: f64) -> Result<Resolvent> {
        let regime = classify(a, b)?;
        let basis = match regime.label {
            Label::DegenerateOU | Label::DegenerateBM | Label::DegenerateExp => None,
            _ => Some(BasisPair::new(a, b, w0)?),
        };
        Ok(Resolvent { a, b, basis })
    }

    pub fn basis(&self) -> Option<&BasisPair> {
        self.basis.as_ref()
    }

    pub fn row(&self, t: f64) -> Result<Row> {
        match &self.basis {
            Some(bp) => {
                let (ra, rb) = bp.stable_pair(t)?;
                Ok(Row { t, ra, rb })
            }
            None => Ok(Row {
                t,
                ra: Eval {
                    m: 1.0,
                    dm: self.a,
                    log: self.a * t,
                },
                rb: Eval {
                    m: 0.0,
                    dm: 0.0,
                    log: 0.0,
                },
            }),
        }
    }

    /// Coefficients of the stable pair at s; for b = 0 this is (e^{-as}, 0).
    pub(crate) fn coefficients(&self, s: f64) -> Result<(Scaled, Scaled)> {
        match &self.basis {
            Some(bp) => bp.stable_d(s),
            None => Ok((
                Scaled {
                    m: 1.0,
                    log: -self.a * s,
                },
                Scaled { m: 0.0, log: 0.0 },
            )),
        }
    }

    /// r(t, s) from a cached row and coefficients at s < t.
    pub(crate) fn combine_row(row: &Row, coeffs: &(Scaled, Scaled)) -> f64 {
        combine(&coeffs.0, &row.ra, &coeffs.1, &row.rb)
    }

    /// r(t, s) for a cached row at t.
    pub fn eval_row(&self, row: &Row, s: f64) -> Result<f64> {
        check_times(row.t, s)?;
        if row.t < s {
            return Ok(0.0);
        }
        if row.t == s {
            return Ok(1.0);
        }
        let (da, db) = self.coefficients(s)?;
        Ok(combine(&da, &row.ra, &db, &row.rb))
    }

    /// r(t, s) and ∂r/∂t(t, s) for a cached row at t.
    pub fn eval_row_with_derivative(&self, row: &Row, s: f64) -> Result<(f64, f64)> {
        check_times(row.t, s)?;
        if row.t < s {
            return Ok((0.0, 0.0));
        }
        let (da, db) = self.coefficients(s)?;
        let v = if row.t == s {
            1.0
        } else {
            combine(&da, &row.ra, &db, &row.rb)
        };
        let dra = Eval {
            m: row.ra.dm,
            ..row.ra
        };
        let drb = Eval {
            m: row.rb.dm,
            ..row.rb
        };
        Ok((v, combine(&da, &dra, &db, &drb)))
    }

    /// r(t, s); zero for t < s and one for t = s.
    pub fn eval(&self, t: f64, s: f64) -> Result<f64> {
        check_times(t, s)?;
        if t < s {
            return Ok(0.0);
        }
        if t == s {
            return Ok(1.0);
        }
        if self.basis.is_none() {
            return Ok((self.a * (t - s)).exp());
        }
        let row = self.row(t)?;
        self.eval_row(&row, s)
    }
}

fn combine(da: &Scaled, ra: &Eval, db: &Scaled, rb: &Eval) -> f64 {
    scaled(da.m * ra.m, da.log + ra.log) + scaled(db.m * rb.m, db.log + rb.log)
}

fn check_times(t: f64, s: f64) -> Result<()> {
    if !(t >= 0.0 && s >= 0.0) || !t.is_finite() || !s.is_finite() {
        return Err(Error::Domain(format!(
            "resolvent needs finite t, s >= 0, got t = {t}, s = {s}"
        )));
    }
    Ok(())
}

/// r(t, s) for one (a, b); builds the basis on every call.
pub fn resolvent_eval(a: f64, b: f64, t: f64, s: f64) -> Result<f64> {
    check_times(t, s)?;
    if t <= s {
        return Ok(if t == s { 1.0 } else { 0.0 });
    }
    Resolvent::new(a, b)?.eval(t, s)
}

/// Dense numerical solution of the resolvent ODE started at s.
#[derive(Debug, Clone)]
pub struct OdeSolution {
    pub abscissae: Vec<f64>,
    pub values: Vec<f64>,
    pub derivative_values: Vec<f64>,
    pub tol: f64,
    trajectory: Trajectory<2>,
}

impl OdeSolution {
    /// r(t, s) at any t in [s, t_max].
    pub fn eval(&self, t: f64) -> Result<f64> {
        Ok(self.trajectory.eval(t)?[0])
    }

    /// ∂r/∂t at any t in [s, t_max].
    pub fn eval_derivative(&self, t: f64) -> Result<f64> {
        Ok(self.trajectory.eval(t)?[1])
    }
}

/// Integrates r'' + (1/(1+t) − a) r' − ((a+b)/(1+t)) r = 0 from r(s) = 1,
/// r'(s) = a up to t_max with an embedded 5(4) Runge–Kutta pair.
pub fn resolvent_ode_oracle(a: f64, b: f64, s: f64, t_max: f64, tol: f64) -> Result<OdeSolution> {
    check_finite("a", a)?;
    check_finite("b", b)?;
    if !(s >= 0.0 && s < t_max && t_max.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "need 0 <= s < t_max, got s = {s}, t_max = {t_max}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "tol must be positive, got {tol}"
        )));
    }
    let trajectory = dopri5(
        |t, y: &[f64; 2]| {
            [
                y[1],
                -(1.0 / (1.0 + t) - a) * y[1] + (a + b) / (1.0 + t) * y[0],
            ]
        },
        s,
        [1.0, a],
        t_max,
        OdeOptions::with_tol(tol),
    )?;
    let abscissae = trajectory.mesh.iter().map(|m| m.0).collect();
    let values = trajectory.mesh.iter().map(|m| m.1[0]).collect();
    let derivative_values = trajectory.mesh.iter().map(|m| m.1[1]).collect();
    Ok(OdeSolution {
        abscissae,
        values,
        derivative_values,
        tol,
        trajectory,
    })
}
