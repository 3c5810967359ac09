use std::fs;
use std::io::{ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use avg_sfde::autocov::Autocov;
use avg_sfde::meanpath::{growth_normalizer_formula, limit_stats, mean_solution};
use avg_sfde::model::ab_to_market;
use avg_sfde::montecarlo::{Ensemble, SampleStats, DEFAULT_DT};
use avg_sfde::{classify, market_to_ab, Label, Params, Regime};
use avg_sfde_cli::config::{Settings, Spec};
use avg_sfde_cli::grid::{geometric, parse_grid};
use avg_sfde_cli::table::{fmt_f64, render_document, Cell, Table};
use avg_sfde_verify::{run_criterion, Suite, VerifyOptions, DEFAULT_SEED};

/// Thread count for ensembles and sweeps.
const THREADS_ENV: &str = "AVG_SFDE_THREADS";
/// Largest number of individual paths written by `simulate`.
const MAX_PATH_COLUMNS: usize = 100;

#[derive(Parser)]
#[command(
    name = "avg-sfde",
    version,
    about = "Regimes, mean paths, autocovariances and simulation of dX = (aX + b(1+t)^-1 ∫X) dt + σ dB"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regime, degeneracy, normalizer and market mapping of (a, b)
    Classify(Flags),
    /// Mean path: t, x(t), normalizer, ratio
    Mean(Flags),
    /// Autocovariance over lags: delta, cov, scaled, limiting_acf
    Acf(Flags),
    /// Ensemble of sample paths with per-time statistics
    Simulate(Flags),
    /// Regime labels over a grid of (a, b)
    Sweep(Flags),
    /// Acceptance suites; exits 1 on failure
    Verify(Flags),
}

#[derive(Args, Default)]
struct Flags {
    /// TOML settings file (top-level keys, plus a section per command)
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    /// Market parameter; a = alpha + beta, b = -alpha
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    #[arg(long)]
    sigma: Option<f64>,
    /// Initial value ψ(0) (default 1)
    #[arg(long, allow_hyphen_values = true)]
    psi0: Option<f64>,
    /// ∫₋₁⁰ψ ds (default ψ0, a constant history)
    #[arg(long, allow_hyphen_values = true)]
    psi_int: Option<f64>,
    /// Time or time grid: x, x1,x2,..., lo:hi:step or lo:hi:logN
    #[arg(long)]
    t: Option<String>,
    #[arg(long)]
    t_max: Option<f64>,
    #[arg(long)]
    dt: Option<f64>,
    /// Lag grid, same forms as --t
    #[arg(long)]
    delta: Option<String>,
    #[arg(long)]
    n_paths: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (default stdout)
    #[arg(long)]
    out: Option<String>,
    /// Quadrature tolerance for acf (direct quadrature when set)
    #[arg(long)]
    tol: Option<f64>,
    /// specfun, resolvent, autocov, montecarlo or all
    #[arg(long)]
    suite: Option<String>,
    /// euler or exact
    #[arg(long)]
    scheme: Option<String>,
    /// Keep every k-th Euler step in the output
    #[arg(long)]
    record_every: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    a_range: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b_range: Option<String>,
}

impl Flags {
    fn settings(&self) -> Settings {
        Settings {
            a: self.a,
            b: self.b,
            alpha: self.alpha,
            beta: self.beta,
            sigma: self.sigma,
            psi0: self.psi0,
            psi_int: self.psi_int,
            t: self.t.clone().map(Spec::Text),
            t_max: self.t_max,
            dt: self.dt,
            delta: self.delta.clone().map(Spec::Text),
            n_paths: self.n_paths,
            seed: self.seed,
            out: self.out.clone(),
            tol: self.tol,
            suite: self.suite.clone(),
            scheme: self.scheme.clone(),
            record_every: self.record_every,
            a_range: self.a_range.clone(),
            b_range: self.b_range.clone(),
        }
    }
}

enum CliError {
    Usage(String),
    Numeric(String),
    Verification(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn numeric(e: avg_sfde::Error) -> CliError {
    match e {
        avg_sfde::Error::InvalidArgument(m) => CliError::Usage(m),
        e => CliError::Numeric(e.to_string()),
    }
}

/// Numeric failure annotated with the regime of `p`.
fn in_regime(p: &Params) -> impl Fn(avg_sfde::Error) -> CliError + '_ {
    move |e| match numeric(e) {
        CliError::Numeric(m) => match p.regime() {
            Ok(r) => CliError::Numeric(format!(
                "{m} (regime {}: {})",
                r.label,
                description(r.label)
            )),
            Err(_) => CliError::Numeric(m),
        },
        other => other,
    }
}

fn usage(m: impl Into<String>) -> CliError {
    CliError::Usage(m.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {}", message(&e));
        return ExitCode::from(e.code());
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", message(&e));
            ExitCode::from(e.code())
        }
    }
}

fn message(e: &CliError) -> &str {
    match e {
        CliError::Usage(m) | CliError::Numeric(m) | CliError::Verification(m) => m,
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        usage(format!(
            "{THREADS_ENV} must be a positive integer, got '{v}'"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| usage(e.to_string()))
}

fn run(command: Command) -> CliResult<()> {
    let (name, flags) = match &command {
        Command::Classify(f) => ("classify", f),
        Command::Mean(f) => ("mean", f),
        Command::Acf(f) => ("acf", f),
        Command::Simulate(f) => ("simulate", f),
        Command::Sweep(f) => ("sweep", f),
        Command::Verify(f) => ("verify", f),
    };
    let mut settings = Settings::default();
    if let Some(path) = &flags.config {
        let text = fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        settings = Settings::from_toml(&text, name)
            .map_err(|e| usage(format!("config {}: {e}", path.display())))?;
    }
    let s = settings.overlay(flags.settings());
    match command {
        Command::Classify(_) => cmd_classify(&s),
        Command::Mean(_) => cmd_mean(&s),
        Command::Acf(_) => cmd_acf(&s),
        Command::Simulate(_) => cmd_simulate(&s),
        Command::Sweep(_) => cmd_sweep(&s),
        Command::Verify(_) => cmd_verify(&s),
    }
}

/// (a, b) from either parameterization; mixing the two is a usage error.
fn resolve_ab(s: &Settings) -> CliResult<(f64, f64)> {
    let direct = s.a.is_some() || s.b.is_some();
    let market = s.alpha.is_some() || s.beta.is_some();
    match (direct, market) {
        (true, true) => Err(usage("give either --a/--b or --alpha/--beta, not both")),
        (false, true) => match (s.alpha, s.beta) {
            (Some(al), Some(be)) => market_to_ab(al, be).map_err(numeric),
            _ => Err(usage("--alpha and --beta must be given together")),
        },
        (true, false) => match (s.a, s.b) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(usage("--a and --b must be given together")),
        },
        (false, false) => Err(usage(
            "missing parameters: give --a and --b (or --alpha and --beta)",
        )),
    }
}

fn resolve_params(s: &Settings) -> CliResult<Params> {
    let (a, b) = resolve_ab(s)?;
    let psi0 = s.psi0.unwrap_or(1.0);
    let sigma = positive("sigma", s.sigma.unwrap_or(1.0))?;
    Params::new(a, b, sigma, psi0, s.psi_int.unwrap_or(psi0)).map_err(numeric)
}

fn positive(name: &str, x: f64) -> CliResult<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(usage(format!("--{name} must be positive, got {x}")))
    }
}

fn grid(spec: &Spec) -> CliResult<Vec<f64>> {
    parse_grid(&spec.as_text()).map_err(usage)
}

/// Default horizon per regime.
fn default_t_max(label: Label) -> f64 {
    match label {
        Label::PolynomialGrowth => 50.0,
        Label::ExponentialGrowth | Label::DegenerateExp => 30.0,
        Label::SubexponentialGrowth => 40.0,
        Label::RecurrentOU
        | Label::RecurrentShifted
        | Label::BrownianLike
        | Label::DegenerateOU
        | Label::DegenerateBM => 1000.0,
    }
}

fn description(label: Label) -> &'static str {
    match label {
        Label::RecurrentOU => {
            "recurrent; X - U and the running average tend to 0, fluctuations of size sqrt(2 log t)"
        }
        Label::RecurrentShifted => {
            "recurrent about a random level L; X - U and the running average tend to L"
        }
        Label::PolynomialGrowth => "X(t) t^(-(1+b/a)) tends to a Gaussian limit C",
        Label::ExponentialGrowth => "X(t) e^(-at) t^(-b/a) tends to a Gaussian limit C",
        Label::SubexponentialGrowth => "X(t) t^(1/4) e^(-2 sqrt(bt)) tends to a Gaussian limit C",
        Label::BrownianLike => "Var X(t)/t tends to sigma^2/3; LIL constant sigma/sqrt(3)",
        Label::DegenerateOU => "no memory term: Ornstein-Uhlenbeck process",
        Label::DegenerateBM => "no drift: Brownian motion",
        Label::DegenerateExp => "no memory term: explosive Ornstein-Uhlenbeck process",
    }
}

fn emit(s: &Settings, text: &str) -> CliResult<()> {
    match &s.out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {path}: {e}"))),
        None => {
            let mut out = std::io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
                Err(e) if e.kind() != ErrorKind::BrokenPipe => {
                    Err(usage(format!("cannot write to stdout: {e}")))
                }
                _ => Ok(()),
            }
        }
    }
}

/// Summaries go to stdout when the main output went to a file.
fn emit_summary(s: &Settings, text: &str) {
    if s.out.is_some() {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
}

/// Market parameters without negative zeros.
fn market(a: f64, b: f64) -> CliResult<(f64, f64)> {
    let (alpha, beta) = ab_to_market(a, b).map_err(numeric)?;
    Ok((alpha + 0.0, beta + 0.0))
}

fn cmd_classify(s: &Settings) -> CliResult<()> {
    let (a, b) = resolve_ab(s)?;
    let regime = classify(a, b).map_err(numeric)?;
    let (alpha, beta) = market(a, b)?;
    let mut doc = toml::Table::new();
    doc.insert("a".into(), a.into());
    doc.insert("b".into(), b.into());
    doc.insert("alpha".into(), alpha.into());
    doc.insert("beta".into(), beta.into());
    doc.insert("regime".into(), regime.label.name().into());
    doc.insert("degenerate".into(), regime.degenerate_integer.into());
    doc.insert("behavior".into(), description(regime.label).into());
    doc.insert(
        "normalizer".into(),
        growth_normalizer_formula(regime.label)
            .unwrap_or("none")
            .into(),
    );
    emit(s, &render_document("classify", &doc.to_string()))
}

fn cmd_mean(s: &Settings) -> CliResult<()> {
    let p = resolve_params(s)?;
    let regime = p.regime().map_err(numeric)?;
    let times = match &s.t {
        Some(spec) => grid(spec)?,
        None => {
            let t_max = positive("t-max", s.t_max.unwrap_or(default_t_max(regime.label)))?;
            let dt = positive("dt", s.dt.unwrap_or(t_max / 1000.0))?;
            parse_grid(&format!("0:{t_max}:{dt}")).map_err(usage)?
        }
    };
    let sol = mean_solution(&p).map_err(in_regime(&p))?;
    let mut table = Table::new("mean", &["t", "x", "normalizer", "ratio"]);
    for t in times {
        let x = sol.eval(t).map_err(in_regime(&p))?;
        let ln_n = avg_sfde::meanpath::ln_growth_normalizer(regime, p.a, p.b, t).ok();
        let ratio = ln_n
            .and_then(|_| sol.normalized(t).ok())
            .unwrap_or(f64::NAN);
        table.push(vec![
            Cell::Num(t),
            Cell::Num(x),
            Cell::Num(ln_n.map_or(f64::NAN, f64::exp)),
            Cell::Num(ratio),
        ]);
    }
    emit(s, &table.render())
}

fn cmd_acf(s: &Settings) -> CliResult<()> {
    let p = resolve_params(s)?;
    let regime = p.regime().map_err(numeric)?;
    let t = match &s.t {
        Some(spec) => match grid(spec)?.as_slice() {
            [t] if *t >= 0.0 => *t,
            _ => return Err(usage("--t for acf must be a single time >= 0")),
        },
        None => 1.0,
    };
    let deltas = match &s.delta {
        Some(spec) => grid(spec)?,
        None => parse_grid("1:1000:log32").map_err(usage)?,
    };
    if deltas.iter().any(|&d| d < 0.0) {
        return Err(usage("lags must be >= 0"));
    }
    let ac = Autocov::new(&p).map_err(in_regime(&p))?;
    // limiting_acf exists only for a < 0, a + b <= 0; fail before any quadrature.
    ac.limiting_acf(0.0).map_err(in_regime(&p))?;
    let covs = match s.tol {
        Some(tol) => {
            let tol = positive("tol", tol)?;
            deltas
                .par_iter()
                .map(|&d| ac.gamma_with_tol(t, d, tol))
                .collect::<Result<Vec<_>, _>>()
                .map_err(in_regime(&p))?
        }
        None => ac.acf(t, &deltas).map_err(in_regime(&p))?.values,
    };
    let q = 1.0 + p.b / p.a;
    let mut table = Table::new("acf", &["delta", "cov", "scaled", "limiting_acf"]);
    for (&d, &c) in deltas.iter().zip(&covs) {
        let lim = ac.limiting_acf(d).map_err(in_regime(&p))?;
        table.push(vec![
            Cell::Num(d),
            Cell::Num(c),
            Cell::Num(d.powf(q) * c),
            Cell::Num(lim),
        ]);
    }
    emit(s, &table.render())?;

    let (lo, hi) = (
        deltas.iter().cloned().fold(f64::INFINITY, f64::min),
        deltas.iter().cloned().fold(0.0, f64::max),
    );
    let mut doc = toml::Table::new();
    doc.insert("regime".into(), regime.label.name().into());
    if lo > 0.0 && hi > lo {
        match ac.decay_fit(t, lo, hi, deltas.len().max(8)) {
            Ok(fit) => {
                doc.insert("fitted_exponent".into(), fit.fitted_exponent.into());
                doc.insert(
                    "theoretical_exponent".into(),
                    fit.theoretical_exponent.into(),
                );
                doc.insert("fitted_constant".into(), fit.fitted_constant.into());
                doc.insert("c_t_quadrature".into(), fit.c_t_quadrature.into());
                doc.insert("max_log_residual".into(), fit.max_log_residual.into());
                doc.insert("poor_fit".into(), fit.poor_fit.into());
            }
            Err(e) => {
                doc.insert("fit_error".into(), e.to_string().into());
            }
        }
    } else {
        doc.insert(
            "fit_error".into(),
            "decay fit needs at least two positive lags".into(),
        );
    }
    emit_summary(s, &render_document("acf-fit", &doc.to_string()));
    Ok(())
}

fn cmd_simulate(s: &Settings) -> CliResult<()> {
    let p = resolve_params(s)?;
    let regime = p.regime().map_err(numeric)?;
    let t_max = positive("t-max", s.t_max.unwrap_or(default_t_max(regime.label)))?;
    let n_paths = s.n_paths.unwrap_or(16);
    if n_paths == 0 {
        return Err(usage("--n-paths must be positive"));
    }
    let seed = s.seed.unwrap_or(1);
    let ens = match s.scheme.as_deref().unwrap_or("euler") {
        "euler" => {
            let dt = positive("dt", s.dt.unwrap_or(DEFAULT_DT))?;
            let steps = (t_max / dt).round() as usize;
            let every = s.record_every.unwrap_or((steps / 1000).max(1));
            Ensemble::simulate_em(&p, t_max, dt, seed, n_paths, every).map_err(in_regime(&p))?
        }
        "exact" => {
            let times = match &s.t {
                Some(spec) => grid(spec)?,
                None => geometric(t_max / 1000.0, t_max, 64),
            };
            Ensemble::simulate_exact(&p, &times, seed, n_paths).map_err(in_regime(&p))?
        }
        other => {
            return Err(usage(format!(
                "--scheme must be euler or exact, got '{other}'"
            )))
        }
    };

    let kept = n_paths.min(MAX_PATH_COLUMNS);
    let mut columns = vec!["t".to_string(), "mean".into(), "variance".into()];
    columns.extend((0..kept).map(|i| format!("x{i}")));
    let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
    let mut table = Table::new("simulate", &cols);
    let times = &ens.paths[0].times;
    for (k, &t) in times.iter().enumerate() {
        let values = ens.values_at(k);
        let (mean, var) = moments(&values);
        let mut row = vec![Cell::Num(t), Cell::Num(mean), Cell::Num(var)];
        row.extend(values[..kept].iter().map(|&v| Cell::Num(v)));
        table.push(row);
    }
    emit(s, &table.render())?;

    let last = ens.values_at(times.len() - 1);
    let t_end = times[times.len() - 1];
    let mut doc = toml::Table::new();
    doc.insert("regime".into(), regime.label.name().into());
    doc.insert(
        "scheme".into(),
        s.scheme.clone().unwrap_or_else(|| "euler".into()).into(),
    );
    doc.insert("n_paths".into(), (n_paths as i64).into());
    doc.insert("paths_written".into(), (kept as i64).into());
    doc.insert("seed".into(), (seed as i64).into());
    doc.insert("terminal".into(), stats_table(t_end, &last).into());
    if regime.label.is_growth() {
        let norm = avg_sfde::meanpath::growth_normalizer(regime, p.a, p.b, t_end)
            .map_err(in_regime(&p))?;
        let ratios: Vec<f64> = last.iter().map(|x| x / norm).collect();
        let mut ratio = stats_table(t_end, &ratios);
        let ls = limit_stats(&p).map_err(in_regime(&p))?;
        ratio.insert("mean_c".into(), ls.mean_c.into());
        ratio.insert("var_c".into(), ls.var_c.into());
        doc.insert("ratio".into(), ratio.into());
    }
    emit_summary(s, &render_document("simulate-summary", &doc.to_string()));
    Ok(())
}

fn moments(values: &[f64]) -> (f64, f64) {
    match SampleStats::new(values) {
        Ok(st) => (st.mean, st.variance),
        Err(_) => (values[0], f64::NAN),
    }
}

fn stats_table(t: f64, values: &[f64]) -> toml::Table {
    let mut out = toml::Table::new();
    out.insert("t".into(), t.into());
    if let Ok(st) = SampleStats::new(values) {
        out.insert("mean".into(), st.mean.into());
        out.insert("variance".into(), st.variance.into());
        out.insert("std_error".into(), st.std_error.into());
        out.insert("skewness".into(), st.skewness.into());
        out.insert("excess_kurtosis".into(), st.excess_kurtosis.into());
    } else {
        out.insert("value".into(), values[0].into());
    }
    out
}

fn cmd_sweep(s: &Settings) -> CliResult<()> {
    let a_grid = parse_grid(s.a_range.as_deref().unwrap_or("-2:2:0.1")).map_err(usage)?;
    let b_grid = parse_grid(s.b_range.as_deref().unwrap_or("-2:2:0.1")).map_err(usage)?;
    let cells: Vec<(f64, f64)> = a_grid
        .iter()
        .flat_map(|&a| b_grid.iter().map(move |&b| (a, b)))
        .collect();
    let labels: Vec<Regime> = cells
        .par_iter()
        .map(|&(a, b)| classify(a, b))
        .collect::<Result<_, _>>()
        .map_err(numeric)?;
    let mut table = Table::new(
        "sweep",
        &["a", "b", "regime", "degenerate", "alpha", "beta"],
    );
    for (&(a, b), r) in cells.iter().zip(&labels) {
        let (alpha, beta) = market(a, b)?;
        table.push(vec![
            Cell::Num(a),
            Cell::Num(b),
            Cell::Text(r.label.name().into()),
            Cell::Bool(r.degenerate_integer),
            Cell::Num(alpha),
            Cell::Num(beta),
        ]);
    }
    emit(s, &table.render())
}

fn cmd_verify(s: &Settings) -> CliResult<()> {
    let name = s.suite.as_deref().unwrap_or("all");
    let suite = Suite::parse(name).ok_or_else(|| usage(format!("unknown suite '{name}'")))?;
    let opts = VerifyOptions {
        seed: s.seed.unwrap_or(DEFAULT_SEED),
    };
    let mut doc = String::new();
    let mut failed = Vec::new();
    for &id in suite.criteria() {
        let report = run_criterion(id, &opts);
        eprintln!("{}", report.summary_line());
        if !report.passed() {
            failed.push(id);
        }
        doc += &format!(
            "\n[[criterion]]\nid = {id}\ntitle = {}\npassed = {}\nelapsed_s = {}\n",
            toml::Value::from(report.title),
            report.passed(),
            fmt_toml(report.elapsed.as_secs_f64())
        );
        if let Some(b) = report.budget {
            doc += &format!("budget_s = {}\n", fmt_toml(b.as_secs_f64()));
        }
        if let Some(e) = &report.error {
            doc += &format!("error = {}\n", toml::Value::from(e.as_str()));
        }
        if !report.notes.is_empty() {
            let notes: Vec<toml::Value> = report
                .notes
                .iter()
                .map(|n| toml::Value::from(n.as_str()))
                .collect();
            doc += &format!("notes = {}\n", toml::Value::Array(notes));
        }
        for c in &report.checks {
            doc += &format!(
                "\n[[criterion.check]]\nname = {}\nvalue = {}\nreference = {}\nmetric = {}\nlimit = {}\npassed = {}\n",
                toml::Value::from(c.name.as_str()),
                fmt_toml(c.value),
                fmt_toml(c.reference),
                fmt_toml(c.metric),
                toml::Value::from(c.limit.as_str()),
                c.passed
            );
        }
    }
    let head = format!(
        "suite = {}\nseed = {}\npassed = {}\n",
        toml::Value::from(name),
        opts.seed,
        failed.is_empty()
    );
    emit(s, &render_document("verify", &(head + &doc)))?;
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "criteria {failed:?} failed"
        )))
    }
}

/// A float as a TOML literal that parses back to the same value.
fn fmt_toml(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        let s = fmt_f64(x);
        if s.contains(['.', 'e', 'E']) {
            s
        } else {
            s + ".0"
        }
    }
}
