//! Path simulation and path estimators.
//!
//! Two schemes are provided. Euler–Maruyama carries the running integral
//! A(t) = ∫₋₁ᵗ X ds with a trapezoidal update. The exact scheme samples the
//! Gaussian representation X(t) = x(t) + σ∫₀ᵗ r(t,s) dB(s) on a refined
//! midpoint grid. Every path draws its normals from its own ChaCha8 stream,
//! selected by (master seed, path index), so ensembles are reproducible
//! for any thread count.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::autocov::Autocov;
use crate::error::{check_finite, Error, Result};
use crate::meanpath::{ln_growth_normalizer, mean_solution};
use crate::model::{Label, Params, Regime};
use crate::resolvent::{Resolvent, Row};

/// Default Euler–Maruyama step.
pub const DEFAULT_DT: f64 = 1.0 / 128.0;
/// Relative variance mismatch accepted by the exact scheme.
pub const EXACT_VARIANCE_TOL: f64 = 5e-3;
/// Maximum number of halvings of the exact scheme's base cells.
pub const EXACT_MAX_DEPTH: u32 = 12;
/// Start of the window of the LIL statistics, 10·e^e.
pub const LIL_WINDOW_START: f64 = 151.542_622_414_792_64;

/// Inverse of the standard normal CDF (Wichura's AS241, PPND16).
pub fn inverse_normal(p: f64) -> f64 {
    if !(p > 0.0 && p < 1.0) {
        return if p == 0.0 {
            f64::NEG_INFINITY
        } else if p == 1.0 {
            f64::INFINITY
        } else {
            f64::NAN
        };
    }
    let q = p - 0.5;
    if q.abs() <= 0.425 {
        let r = 0.180625 - q * q;
        let num = ((((((2509.080_928_730_122_7 * r + 33430.575_583_588_128) * r
            + 67265.770_927_008_7)
            * r
            + 45921.953_931_549_87)
            * r
            + 13731.693_765_509_461)
            * r
            + 1971.590_950_306_551_3)
            * r
            + 133.141_667_891_784_38)
            * r
            + 3.387_132_872_796_366_5;
        let den = ((((((5226.495_278_852_545 * r + 28729.085_735_721_943) * r
            + 39307.895_800_092_71)
            * r
            + 21213.794_301_586_597)
            * r
            + 5394.196_021_424_751)
            * r
            + 687.187_007_492_057_9)
            * r
            + 42.313_330_701_600_91)
            * r
            + 1.0;
        return q * num / den;
    }
    let mut r = if q < 0.0 { p } else { 1.0 - p };
    r = (-r.ln()).sqrt();
    let x = if r <= 5.0 {
        let r = r - 1.6;
        let num = ((((((7.745_450_142_783_414e-4 * r + 0.022_723_844_989_269_184) * r
            + 0.241_780_725_177_450_6)
            * r
            + 1.270_458_252_452_368_4)
            * r
            + 3.647_848_324_763_204_5)
            * r
            + 5.769_497_221_460_691)
            * r
            + 4.630_337_846_156_546)
            * r
            + 1.423_437_110_749_683_5;
        let den = ((((((1.050_750_071_644_416_9e-9 * r + 5.475_938_084_995_345e-4) * r
            + 0.015_198_666_563_616_457)
            * r
            + 0.148_103_976_427_480_08)
            * r
            + 0.689_767_334_985_1)
            * r
            + 1.676_384_830_183_803_8)
            * r
            + 2.053_191_626_637_759)
            * r
            + 1.0;
        num / den
    } else {
        let r = r - 5.0;
        let num = ((((((2.010_334_399_292_288_1e-7 * r + 2.711_555_568_743_487_6e-5) * r
            + 0.001_242_660_947_388_078_4)
            * r
            + 0.026_532_189_526_576_124)
            * r
            + 0.296_560_571_828_504_9)
            * r
            + 1.784_826_539_917_291_3)
            * r
            + 5.463_784_911_164_114)
            * r
            + 6.657_904_643_501_103;
        let den = ((((((2.044_263_103_389_939_7e-15 * r + 1.421_511_758_316_446e-7) * r
            + 1.846_318_317_510_054_8e-5)
            * r
            + 7.868_691_311_456_133e-4)
            * r
            + 0.014_875_361_290_850_615)
            * r
            + 0.136_929_880_922_735_8)
            * r
            + 0.599_832_206_555_888)
            * r
            + 1.0;
        num / den
    };
    if q < 0.0 {
        -x
    } else {
        x
    }
}

/// Standard normal variates from one ChaCha8 stream.
#[derive(Debug, Clone)]
pub struct NormalStream {
    rng: ChaCha8Rng,
}

impl NormalStream {
    /// Stream `stream` of the generator keyed by `seed`.
    pub fn new(seed: u64, stream: u64) -> NormalStream {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        NormalStream { rng }
    }

    /// Uniform on the open interval (0, 1) with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        ((self.rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }

    pub fn next_normal(&mut self) -> f64 {
        inverse_normal(self.uniform())
    }
}

/// Sum with pairwise splitting; the rounding error grows like log n.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const BLOCK: usize = 64;
    if xs.len() <= BLOCK {
        xs.iter().sum()
    } else {
        let (l, r) = xs.split_at(xs.len() / 2);
        pairwise_sum(l) + pairwise_sum(r)
    }
}

/// Moments of a sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleStats {
    pub n: usize,
    pub mean: f64,
    /// Unbiased sample variance.
    pub variance: f64,
    /// Standard error of the mean.
    pub std_error: f64,
    pub skewness: f64,
    pub excess_kurtosis: f64,
}

impl SampleStats {
    pub fn new(xs: &[f64]) -> Result<SampleStats> {
        let n = xs.len();
        if n < 2 {
            return Err(Error::InvalidArgument(format!(
                "need at least 2 samples, got {n}"
            )));
        }
        let nf = n as f64;
        let mean = pairwise_sum(xs) / nf;
        let powers =
            |k: i32| pairwise_sum(&xs.iter().map(|x| (x - mean).powi(k)).collect::<Vec<_>>()) / nf;
        let (m2, m3, m4) = (powers(2), powers(3), powers(4));
        let variance = m2 * nf / (nf - 1.0);
        let (skewness, excess_kurtosis) = if m2 > 0.0 {
            (m3 / m2.powf(1.5), m4 / (m2 * m2) - 3.0)
        } else {
            (0.0, 0.0)
        };
        Ok(SampleStats {
            n,
            mean,
            variance,
            std_error: (variance / nf).sqrt(),
            skewness,
            excess_kurtosis,
        })
    }

    /// Standard error of the sample variance for Gaussian data.
    pub fn variance_std_error(&self) -> f64 {
        self.variance * (2.0 / (self.n as f64 - 1.0)).sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Euler,
    Exact,
}

/// Time grid of a path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridSpec {
    /// Euler step dt; values are kept every `record_every` steps.
    Uniform { dt: f64, record_every: usize },
    /// Exact scheme: number of Brownian cells and the refinement depth used.
    Refined { cells: usize, depth: u32 },
}

/// One sample path. `values[0]` is ψ(0) and `times[0]` is 0.
#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    pub params: Params,
    pub times: Vec<f64>,
    pub values: Vec<f64>,
    pub scheme: Scheme,
    pub seed: u64,
    /// Stream index within `seed`; distinct per ensemble member.
    pub stream: u64,
    pub grid: GridSpec,
}

impl Path {
    pub fn t_max(&self) -> f64 {
        *self.times.last().unwrap_or(&0.0)
    }
}

/// A time series derived from a path.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub times: Vec<f64>,
    pub values: Vec<f64>,
}

/// Options of the Euler–Maruyama scheme.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmOptions {
    pub stream: u64,
    /// Drop the noise term (drift-only check).
    pub deterministic: bool,
    /// Negate every Brownian increment.
    pub flip_noise: bool,
    /// Keep every k-th grid value in the returned path.
    pub record_every: usize,
}

impl Default for EmOptions {
    fn default() -> Self {
        EmOptions {
            stream: 0,
            deterministic: false,
            flip_noise: false,
            record_every: 1,
        }
    }
}

/// State of the Euler–Maruyama recursion after k steps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmState {
    pub t: f64,
    pub x: f64,
    /// A(t) = ψ_int + ∫₀ᵗ X ds (trapezoidal).
    pub integral: f64,
    /// X(t) − U(t) for the OU process dU = aU dt + σ dB, U(0) = 0, on the same noise.
    pub diff: f64,
}

/// Euler–Maruyama stepper. The companion difference D = X − U obeys
/// D_{k+1} = D_k + (a D_k + b A_k/(1+t_k)) dt and is stepped directly, so it
/// never sees the noise.
#[derive(Debug, Clone)]
pub struct EmStepper {
    a: f64,
    b: f64,
    noise_scale: f64,
    dt: f64,
    k: u64,
    state: EmState,
    noise: NormalStream,
}

impl EmStepper {
    pub fn new(params: &Params, dt: f64, seed: u64, opts: &EmOptions) -> Result<EmStepper> {
        params.validate()?;
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "dt must be positive, got {dt}"
            )));
        }
        let mut noise_scale = if opts.deterministic {
            0.0
        } else {
            params.sigma * dt.sqrt()
        };
        if opts.flip_noise {
            noise_scale = -noise_scale;
        }
        Ok(EmStepper {
            a: params.a,
            b: params.b,
            noise_scale,
            dt,
            k: 0,
            state: EmState {
                t: 0.0,
                x: params.psi0,
                integral: params.psi_int,
                diff: params.psi0,
            },
            noise: NormalStream::new(seed, opts.stream),
        })
    }

    pub fn state(&self) -> EmState {
        self.state
    }

    pub fn step(&mut self) {
        let EmState {
            t,
            x,
            integral,
            diff,
        } = self.state;
        let memory = self.b * integral / (1.0 + t);
        let z = self.noise.next_normal();
        let x_next = x + (self.a * x + memory) * self.dt + self.noise_scale * z;
        self.k += 1;
        self.state = EmState {
            t: self.k as f64 * self.dt,
            x: x_next,
            integral: integral + 0.5 * self.dt * (x + x_next),
            diff: diff + (self.a * diff + memory) * self.dt,
        };
    }
}

fn em_steps(t_max: f64, dt: f64) -> Result<u64> {
    check_finite("t_max", t_max)?;
    if !(t_max > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "t_max must be positive, got {t_max}"
        )));
    }
    if !(dt > 0.0 && dt <= t_max / 10.0) {
        return Err(Error::InvalidArgument(format!(
            "need 0 < dt <= t_max/10, got dt = {dt}, t_max = {t_max}"
        )));
    }
    Ok((t_max / dt).round() as u64)
}

/// Euler–Maruyama path on the grid k·dt, k = 0..=round(t_max/dt).
pub fn simulate_em(params: &Params, t_max: f64, dt: f64, seed: u64) -> Result<Path> {
    simulate_em_with(params, t_max, dt, seed, &EmOptions::default())
}

pub fn simulate_em_with(
    params: &Params,
    t_max: f64,
    dt: f64,
    seed: u64,
    opts: &EmOptions,
) -> Result<Path> {
    let n = em_steps(t_max, dt)?;
    let every = opts.record_every.max(1) as u64;
    let mut em = EmStepper::new(params, dt, seed, opts)?;
    let cap = (n / every + 2) as usize;
    let (mut times, mut values) = (Vec::with_capacity(cap), Vec::with_capacity(cap));
    times.push(0.0);
    values.push(params.psi0);
    for k in 1..=n {
        em.step();
        if k % every == 0 || k == n {
            let s = em.state();
            times.push(s.t);
            values.push(s.x);
        }
    }
    Ok(Path {
        params: *params,
        times,
        values,
        scheme: Scheme::Euler,
        seed,
        stream: opts.stream,
        grid: GridSpec::Uniform {
            dt,
            record_every: every as usize,
        },
    })
}

/// Final Euler–Maruyama state without storing the path.
pub fn em_terminal(
    params: &Params,
    t_max: f64,
    dt: f64,
    seed: u64,
    opts: &EmOptions,
) -> Result<EmState> {
    let n = em_steps(t_max, dt)?;
    let mut em = EmStepper::new(params, dt, seed, opts)?;
    for _ in 0..n {
        em.step();
    }
    Ok(em.state())
}

/// Final states of paths 0..n_paths of master seed `seed`, in parallel.
pub fn ensemble_terminal(
    params: &Params,
    t_max: f64,
    dt: f64,
    seed: u64,
    n_paths: usize,
) -> Result<Vec<EmState>> {
    (0..n_paths as u64)
        .into_par_iter()
        .map(|i| {
            em_terminal(
                params,
                t_max,
                dt,
                seed,
                &EmOptions {
                    stream: i,
                    ..EmOptions::default()
                },
            )
        })
        .collect()
}

/// A set of paths on a common grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble {
    pub params: Params,
    pub paths: Vec<Path>,
}

impl Ensemble {
    /// Euler–Maruyama paths using streams 0..n_paths of `seed`.
    pub fn simulate_em(
        params: &Params,
        t_max: f64,
        dt: f64,
        seed: u64,
        n_paths: usize,
        record_every: usize,
    ) -> Result<Ensemble> {
        let paths = (0..n_paths as u64)
            .into_par_iter()
            .map(|i| {
                simulate_em_with(
                    params,
                    t_max,
                    dt,
                    seed,
                    &EmOptions {
                        stream: i,
                        record_every,
                        ..EmOptions::default()
                    },
                )
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Ensemble {
            params: *params,
            paths,
        })
    }

    /// Exact-scheme paths using streams 0..n_paths of `seed`.
    pub fn simulate_exact(
        params: &Params,
        times: &[f64],
        seed: u64,
        n_paths: usize,
    ) -> Result<Ensemble> {
        let sampler = ExactSampler::new(params, times)?;
        let paths = (0..n_paths as u64)
            .into_par_iter()
            .map(|i| sampler.sample(seed, i))
            .collect();
        Ok(Ensemble {
            params: *params,
            paths,
        })
    }

    /// Values of every path at grid index k.
    pub fn values_at(&self, k: usize) -> Vec<f64> {
        self.paths.iter().map(|p| p.values[k]).collect()
    }

    /// Sample statistics at every grid index.
    pub fn stats(&self) -> Result<Vec<SampleStats>> {
        let len = self.paths.first().map_or(0, |p| p.values.len());
        (0..len)
            .map(|k| SampleStats::new(&self.values_at(k)))
            .collect()
    }
}

/// Sampler of the Gaussian representation on a fixed set of times.
///
/// The Brownian motion is discretized on cells ending at each requested time.
/// Each cell contributes r(t_k, s*)·ΔB with s* its midpoint. Cells are halved
/// until Σ r(t_k, s*)² Δs matches ∫₀^{t_k} r(t_k, s)² ds within
/// [`EXACT_VARIANCE_TOL`] for every k.
#[derive(Debug, Clone)]
pub struct ExactSampler {
    params: Params,
    times: Vec<f64>,
    mean: Vec<f64>,
    /// Cell widths.
    widths: Vec<f64>,
    /// weights[k][j] = r(t_k, s_j*)·√Δs_j for the cells before t_k.
    weights: Vec<Vec<f64>>,
    depth: u32,
}

impl ExactSampler {
    pub fn new(params: &Params, times: &[f64]) -> Result<ExactSampler> {
        params.validate()?;
        if times.is_empty() {
            return Err(Error::InvalidArgument("need at least one time".into()));
        }
        for w in times.windows(2) {
            if !(w[1] > w[0]) {
                return Err(Error::InvalidArgument(
                    "times must be strictly increasing".into(),
                ));
            }
        }
        if !(times[0] >= 0.0) || !times[times.len() - 1].is_finite() {
            return Err(Error::InvalidArgument(
                "times must be finite and nonnegative".into(),
            ));
        }
        let mut grid = Vec::with_capacity(times.len() + 1);
        if times[0] > 0.0 {
            grid.push(0.0);
        }
        grid.extend_from_slice(times);

        let resolvent = Resolvent::new(params.a, params.b)?;
        let autocov = Autocov::new(params)?;
        let rows = grid
            .iter()
            .map(|&t| resolvent.row(t))
            .collect::<Result<Vec<Row>>>()?;
        let target = grid
            .iter()
            .map(|&t| Ok(autocov.gamma(t, 0.0)? / (params.sigma * params.sigma)))
            .collect::<Result<Vec<f64>>>()?;
        let mean_sol = mean_solution(params)?;
        let mean = grid
            .iter()
            .map(|&t| {
                if t == 0.0 {
                    Ok(params.psi0)
                } else {
                    mean_sol.eval(t)
                }
            })
            .collect::<Result<Vec<f64>>>()?;

        let scale = params.a.abs().max(params.b.abs().sqrt()).max(1.0);
        let h0 = 0.5 / scale;
        let base: Vec<(f64, f64, usize)> = grid
            .windows(2)
            .map(|w| (w[0], w[1], ((w[1] - w[0]) / h0).ceil().max(1.0) as usize))
            .collect();

        let mut worst = f64::INFINITY;
        for depth in 0..=EXACT_MAX_DEPTH {
            let parts = 1usize << depth;
            let mut widths = Vec::new();
            let mut mids = Vec::new();
            let mut ends = Vec::with_capacity(grid.len());
            ends.push(0usize);
            for &(lo, hi, n) in &base {
                let m = n * parts;
                let h = (hi - lo) / m as f64;
                for j in 0..m {
                    widths.push(h);
                    mids.push(lo + (j as f64 + 0.5) * h);
                }
                ends.push(widths.len());
            }
            let coeffs = mids
                .par_iter()
                .map(|&s| resolvent.coefficients(s))
                .collect::<Result<Vec<_>>>()?;
            let weights: Vec<Vec<f64>> = rows
                .par_iter()
                .zip(ends.par_iter())
                .map(|(row, &end)| {
                    (0..end)
                        .map(|j| {
                            let r = if resolvent.basis().is_some() {
                                Resolvent::combine_row(row, &coeffs[j])
                            } else {
                                (params.a * (row.t - mids[j])).exp()
                            };
                            r * widths[j].sqrt()
                        })
                        .collect()
                })
                .collect();
            worst = 0.0;
            for (w, &q) in weights.iter().zip(&target) {
                if q > 0.0 {
                    let v = pairwise_sum(&w.iter().map(|x| x * x).collect::<Vec<_>>());
                    worst = f64::max(worst, (v / q - 1.0).abs());
                }
            }
            if worst <= EXACT_VARIANCE_TOL {
                return Ok(ExactSampler {
                    params: *params,
                    times: grid,
                    mean,
                    widths,
                    weights,
                    depth,
                });
            }
        }
        Err(Error::Discretization(format!(
            "exact scheme variance mismatch {worst:.3e} after {EXACT_MAX_DEPTH} halvings"
        )))
    }

    /// Sample times; 0 is prepended when absent.
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn cell_widths(&self) -> &[f64] {
        &self.widths
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Brownian increments ΔB_j of stream `stream` of `seed`.
    pub fn increments(&self, seed: u64, stream: u64) -> Vec<f64> {
        let mut noise = NormalStream::new(seed, stream);
        self.widths
            .iter()
            .map(|h| h.sqrt() * noise.next_normal())
            .collect()
    }

    /// Values at `times()` driven by the given increments (one per cell).
    pub fn sample_from_increments(&self, increments: &[f64]) -> Result<Vec<f64>> {
        if increments.len() != self.widths.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} increments, got {}",
                self.widths.len(),
                increments.len()
            )));
        }
        let z: Vec<f64> = increments
            .iter()
            .zip(&self.widths)
            .map(|(db, h)| db / h.sqrt())
            .collect();
        Ok(self.combine(&z))
    }

    fn combine(&self, z: &[f64]) -> Vec<f64> {
        let sigma = self.params.sigma;
        self.weights
            .iter()
            .zip(&self.mean)
            .map(|(w, &m)| {
                let terms: Vec<f64> = w.iter().zip(z).map(|(wj, zj)| wj * zj).collect();
                m + sigma * pairwise_sum(&terms)
            })
            .collect()
    }

    pub fn sample(&self, seed: u64, stream: u64) -> Path {
        let mut noise = NormalStream::new(seed, stream);
        let z: Vec<f64> = self.widths.iter().map(|_| noise.next_normal()).collect();
        let values = self.combine(&z);
        Path {
            params: self.params,
            times: self.times.clone(),
            values,
            scheme: Scheme::Exact,
            seed,
            stream,
            grid: GridSpec::Refined {
                cells: self.widths.len(),
                depth: self.depth,
            },
        }
    }
}

/// One exact-scheme path at `times` (0 is prepended when absent).
pub fn simulate_exact(params: &Params, times: &[f64], seed: u64) -> Result<Path> {
    Ok(ExactSampler::new(params, times)?.sample(seed, 0))
}

fn is_growth(label: Label) -> bool {
    matches!(
        label,
        Label::PolynomialGrowth | Label::ExponentialGrowth | Label::SubexponentialGrowth
    )
}

/// X(t)/N(t) at the grid points t > 0 of a growth-regime path.
pub fn growth_ratio(path: &Path, regime: Regime) -> Result<Series> {
    if !is_growth(regime.label) {
        return Err(Error::Unsupported(format!(
            "growth ratio needs a growth regime, got {}",
            regime.label
        )));
    }
    let (a, b) = (path.params.a, path.params.b);
    let mut out = Series {
        times: Vec::new(),
        values: Vec::new(),
    };
    for (&t, &x) in path.times.iter().zip(&path.values) {
        if t > 0.0 {
            out.times.push(t);
            out.values
                .push(x * (-ln_growth_normalizer(regime, a, b, t)?).exp());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LilMode {
    /// X/√(2t log log t)
    BrownianLike,
    /// X/√(2 log t)
    Recurrent,
}

/// Running sup and inf of the normalized statistic over t ≥ 10·e^e.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LilTracker {
    pub mode: LilMode,
    pub sup: f64,
    pub inf: f64,
}

impl LilTracker {
    pub fn new(mode: LilMode) -> LilTracker {
        LilTracker {
            mode,
            sup: f64::NEG_INFINITY,
            inf: f64::INFINITY,
        }
    }

    pub fn push(&mut self, t: f64, x: f64) {
        if t < LIL_WINDOW_START {
            return;
        }
        let norm = match self.mode {
            LilMode::BrownianLike => (2.0 * t * t.ln().ln()).sqrt(),
            LilMode::Recurrent => (2.0 * t.ln()).sqrt(),
        };
        let v = x / norm;
        self.sup = self.sup.max(v);
        self.inf = self.inf.min(v);
    }
}

/// (sup, inf) of the LIL statistic of a path with t_max ≥ 1000.
pub fn lil_statistic(path: &Path, mode: LilMode) -> Result<(f64, f64)> {
    if !(path.t_max() >= 1e3) {
        return Err(Error::InvalidArgument(format!(
            "LIL statistic needs t_max >= 1000, got {}",
            path.t_max()
        )));
    }
    let mut tr = LilTracker::new(mode);
    for (&t, &x) in path.times.iter().zip(&path.values) {
        tr.push(t, x);
    }
    Ok((tr.sup, tr.inf))
}

/// LIL statistics of Euler–Maruyama paths 0..n_paths, without storing them.
pub fn lil_ensemble(
    params: &Params,
    t_max: f64,
    dt: f64,
    seed: u64,
    n_paths: usize,
    mode: LilMode,
) -> Result<Vec<(f64, f64)>> {
    if !(t_max >= 1e3) {
        return Err(Error::InvalidArgument(format!(
            "LIL statistic needs t_max >= 1000, got {t_max}"
        )));
    }
    let n = em_steps(t_max, dt)?;
    (0..n_paths as u64)
        .into_par_iter()
        .map(|i| {
            let mut em = EmStepper::new(
                params,
                dt,
                seed,
                &EmOptions {
                    stream: i,
                    ..EmOptions::default()
                },
            )?;
            let mut tr = LilTracker::new(mode);
            for _ in 0..n {
                em.step();
                let s = em.state();
                tr.push(s.t, s.x);
            }
            Ok((tr.sup, tr.inf))
        })
        .collect()
}

/// (1+t)⁻¹(ψ_int + ∫₀ᵗX ds) with the trapezoidal rule on the path grid.
pub fn running_average(path: &Path) -> Series {
    let mut integral = path.params.psi_int;
    let mut values = Vec::with_capacity(path.values.len());
    for k in 0..path.times.len() {
        if k > 0 {
            integral +=
                0.5 * (path.times[k] - path.times[k - 1]) * (path.values[k] + path.values[k - 1]);
        }
        values.push(integral / (1.0 + path.times[k]));
    }
    Series {
        times: path.times.clone(),
        values,
    }
}

/// X(t) − U(t) on the Euler grid, with U the OU process driven by the same
/// increments and U(0) = 0. Needs a < 0 and a + b ≤ 0.
pub fn xu_difference(params: &Params, t_max: f64, dt: f64, seed: u64) -> Result<Series> {
    check_coupling(params)?;
    let n = em_steps(t_max, dt)?;
    let mut em = EmStepper::new(params, dt, seed, &EmOptions::default())?;
    let mut out = Series {
        times: vec![0.0],
        values: vec![params.psi0],
    };
    for _ in 0..n {
        em.step();
        let s = em.state();
        out.times.push(s.t);
        out.values.push(s.diff);
    }
    Ok(out)
}

/// X(t_max) − U(t_max) for paths 0..n_paths.
pub fn xu_terminal(
    params: &Params,
    t_max: f64,
    dt: f64,
    seed: u64,
    n_paths: usize,
) -> Result<Vec<f64>> {
    check_coupling(params)?;
    Ok(ensemble_terminal(params, t_max, dt, seed, n_paths)?
        .into_iter()
        .map(|s| s.diff)
        .collect())
}

fn check_coupling(params: &Params) -> Result<()> {
    let label = params.regime()?.label;
    if !matches!(
        label,
        Label::RecurrentOU | Label::RecurrentShifted | Label::DegenerateOU
    ) {
        return Err(Error::Unsupported(format!(
            "X - U coupling needs a < 0 and a + b <= 0, got {label}"
        )));
    }
    Ok(())
}
