use avg_sfde::autocov::Autocov;
use avg_sfde::meanpath::{limit_stats, mean_solution};
use avg_sfde::montecarlo::*;
use avg_sfde::{Error, Params};
use proptest::prelude::*;

fn params(a: f64, b: f64, psi0: f64, psi_int: f64) -> Params {
    Params::new(a, b, 1.0, psi0, psi_int).unwrap()
}

const DRIFT_ONLY: EmOptions = EmOptions {
    stream: 0,
    deterministic: true,
    flip_noise: false,
    record_every: 1,
};

#[test]
fn inverse_normal_reference_values() {
    let cases = [
        (0.5, 0.0),
        (0.975, 1.959963984540054),
        (0.3, -0.5244005127080407),
        (1e-10, -6.361340902404056),
        (0.999, 3.090232306167813),
    ];
    for (p, z) in cases {
        assert!(
            (inverse_normal(p) - z).abs() <= 1e-14 * (1.0 + z.abs()),
            "p = {p}"
        );
    }
    assert_eq!(inverse_normal(0.0), f64::NEG_INFINITY);
    assert!(inverse_normal(1.5).is_nan());
}

proptest! {
    #[test]
    fn inverse_normal_is_odd_and_monotone(p in 1e-12f64..0.5, dp in 1e-9f64..1e-3) {
        prop_assert!((inverse_normal(p) + inverse_normal(1.0 - p)).abs() <= 1e-9);
        prop_assert!(inverse_normal(p + dp) > inverse_normal(p));
    }
}

#[test]
fn pairwise_sum_and_sample_stats() {
    let xs: Vec<f64> = (1..=1000).map(f64::from).collect();
    assert_eq!(pairwise_sum(&xs), 500500.0);
    let st = SampleStats::new(&[1.0, 2.0, 3.0, 4.0]).unwrap();
    assert_eq!(st.mean, 2.5);
    assert!((st.variance - 5.0 / 3.0).abs() < 1e-15);
    assert!(st.skewness.abs() < 1e-15);
    assert!(SampleStats::new(&[1.0]).is_err());
}

#[test]
fn paths_are_deterministic_per_seed_and_stream() {
    let p = params(-1.0, 0.5, 1.0, 0.0);
    let x = simulate_em(&p, 10.0, 1.0 / 128.0, 42).unwrap();
    let y = simulate_em(&p, 10.0, 1.0 / 128.0, 42).unwrap();
    assert_eq!(x, y);
    assert_eq!(x.times.len(), 1281);
    assert_eq!(x.values[0], 1.0);
    let z = simulate_em_with(
        &p,
        10.0,
        1.0 / 128.0,
        42,
        &EmOptions {
            stream: 1,
            ..EmOptions::default()
        },
    )
    .unwrap();
    assert_ne!(x.values[5], z.values[5]);
    let w = simulate_em(&p, 10.0, 1.0 / 128.0, 43).unwrap();
    assert_ne!(x.values[5], w.values[5]);

    let par = ensemble_terminal(&p, 10.0, 1.0 / 128.0, 42, 16).unwrap();
    for (i, s) in par.iter().enumerate() {
        let seq = em_terminal(
            &p,
            10.0,
            1.0 / 128.0,
            42,
            &EmOptions {
                stream: i as u64,
                ..EmOptions::default()
            },
        )
        .unwrap();
        assert_eq!(*s, seq);
    }
    assert_eq!(par[0].x, *x.values.last().unwrap());
}

#[test]
fn recording_stride_keeps_the_final_point() {
    let p = params(-1.0, 0.5, 1.0, 0.0);
    let full = simulate_em(&p, 10.0, 0.01, 5).unwrap();
    let thin = simulate_em_with(
        &p,
        10.0,
        0.01,
        5,
        &EmOptions {
            record_every: 7,
            ..EmOptions::default()
        },
    )
    .unwrap();
    assert_eq!(thin.values[1], full.values[7]);
    assert_eq!(thin.values.last(), full.values.last());
    assert_eq!(thin.times.last(), Some(&10.0));
}

#[test]
fn step_preconditions() {
    let p = params(-1.0, 0.5, 1.0, 0.0);
    assert!(matches!(
        simulate_em(&p, 1.0, 0.2, 0),
        Err(Error::InvalidArgument(_))
    ));
    assert!(matches!(
        simulate_em(&p, -1.0, 0.01, 0),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn drift_only_ou_is_first_order() {
    let p = params(-1.0, 0.0, 2.0, 2.0);
    let err = |dt: f64| {
        let path = simulate_em_with(&p, 5.0, dt, 0, &DRIFT_ONLY).unwrap();
        path.times
            .iter()
            .zip(&path.values)
            .map(|(t, x)| (x - 2.0 * (-t).exp()).abs())
            .fold(0.0, f64::max)
    };
    let (e1, e2) = (err(1.0 / 64.0), err(1.0 / 128.0));
    assert!(e1 < 2.0 / 64.0, "{e1}");
    assert!((e1 / e2 - 2.0).abs() < 0.1, "{e1} {e2}");
}

#[test]
fn drift_only_matches_the_mean_path() {
    let p = params(-1.0, 0.5, 1.0, 0.0);
    let sol = mean_solution(&p).unwrap();
    let path = simulate_em_with(&p, 10.0, 1.0 / 128.0, 0, &DRIFT_ONLY).unwrap();
    for (t, x) in path.times.iter().zip(&path.values).step_by(64) {
        assert!((x - sol.eval(*t).unwrap()).abs() < 1.0 / 128.0, "t = {t}");
    }
}

#[test]
fn ensemble_mean_matches_the_mean_path() {
    let p = params(-1.0, 0.5, 1.0, 0.0);
    let m = mean_solution(&p).unwrap().eval(5.0).unwrap();
    let xs: Vec<f64> = ensemble_terminal(&p, 5.0, 1.0 / 128.0, 2024, 10_000)
        .unwrap()
        .iter()
        .map(|s| s.x)
        .collect();
    let st = SampleStats::new(&xs).unwrap();
    assert!(
        (st.mean - m).abs() <= 3.0 * st.std_error,
        "{} vs {m} (se {})",
        st.mean,
        st.std_error
    );
}

#[test]
fn weak_error_halves_with_dt() {
    let p = params(-1.0, 0.5, 1.0, 0.0);
    let m = mean_solution(&p).unwrap().eval(5.0).unwrap();
    let err = |dt: f64| {
        let xs: Vec<f64> = ensemble_terminal(&p, 5.0, dt, 99, 100_000)
            .unwrap()
            .iter()
            .map(|s| s.x)
            .collect();
        SampleStats::new(&xs).unwrap().mean - m
    };
    let ratio = err(0.4) / err(0.2);
    assert!((ratio / 2.0 - 1.0).abs() <= 0.3, "ratio {ratio}");
}

#[test]
fn exact_scheme_starts_at_the_initial_value() {
    let p = params(-1.0, 0.5, 1.5, 0.0);
    let path = simulate_exact(&p, &[0.0, 1.0, 2.0], 3).unwrap();
    assert_eq!(path.values[0], 1.5);
    assert_eq!(path.scheme, Scheme::Exact);
    let shifted = simulate_exact(&p, &[1.0, 2.0], 3).unwrap();
    assert_eq!(shifted.times, vec![0.0, 1.0, 2.0]);
    assert_eq!(shifted.values[0], 1.5);
    assert!(simulate_exact(&p, &[2.0, 1.0], 3).is_err());
}

#[test]
fn exact_scheme_moments() {
    let p = params(-1.0, 0.5, 1.0, 0.0);
    let times = [2.0, 3.0];
    let ens = Ensemble::simulate_exact(&p, &times, 17, 10_000).unwrap();
    let ac = Autocov::new(&p).unwrap();
    let sol = mean_solution(&p).unwrap();
    let stats = ens.stats().unwrap();
    for (k, &t) in times.iter().enumerate() {
        let st = stats[k + 1];
        let var = ac.gamma(t, 0.0).unwrap();
        assert!((st.mean - sol.eval(t).unwrap()).abs() <= 3.0 * st.std_error);
        assert!(
            (st.variance - var).abs() <= 3.0 * var * (2.0 / 9999.0f64).sqrt(),
            "t = {t}: {} vs {var}",
            st.variance
        );
        let (se_skew, se_kurt) = ((6.0 / 1e4f64).sqrt(), (24.0 / 1e4f64).sqrt());
        assert!(
            st.skewness.abs() <= 4.0 * se_skew,
            "skewness {}",
            st.skewness
        );
        assert!(
            st.excess_kurtosis.abs() <= 4.0 * se_kurt,
            "kurtosis {}",
            st.excess_kurtosis
        );
    }
    let (x, y) = (ens.values_at(1), ens.values_at(2));
    let (mx, my) = (stats[1].mean, stats[2].mean);
    let prods: Vec<f64> = x.iter().zip(&y).map(|(u, v)| (u - mx) * (v - my)).collect();
    let cov = pairwise_sum(&prods) / 9999.0;
    let expect = ac.covariance(2.0, 1.0).unwrap();
    let band = 3.0 * ((stats[1].variance * stats[2].variance + expect * expect) / 1e4).sqrt();
    assert!((cov - expect).abs() <= band, "{cov} vs {expect}");
}

#[test]
fn exact_scheme_reuses_increments() {
    let p = params(1.0, 1.0, 1.0, 0.0);
    let sampler = ExactSampler::new(&p, &[0.5, 1.0, 2.0]).unwrap();
    let db = sampler.increments(8, 2);
    let via = sampler.sample_from_increments(&db).unwrap();
    let direct = sampler.sample(8, 2);
    for (u, v) in via.iter().zip(&direct.values) {
        assert!((u - v).abs() <= 1e-12 * (1.0 + v.abs()));
    }
    assert!(sampler.sample_from_increments(&db[1..]).is_err());
}

#[test]
fn growth_ratio_stabilizes() {
    let p = params(1.0, 1.0, 1.0, 0.0);
    let path = simulate_em(&p, 20.0, 1.0 / 128.0, 1).unwrap();
    let ratio = growth_ratio(&path, p.regime().unwrap()).unwrap();
    assert_eq!(ratio.times[0], 1.0 / 128.0);
    let n = ratio.values.len();
    let sd = |xs: &[f64]| SampleStats::new(xs).unwrap().variance.sqrt();
    assert!(sd(&ratio.values[3 * n / 4..]) < sd(&ratio.values[..n / 4]));
    let ou = params(-1.0, 0.5, 1.0, 0.0);
    let path = simulate_em(&ou, 20.0, 1.0 / 128.0, 1).unwrap();
    assert!(matches!(
        growth_ratio(&path, ou.regime().unwrap()),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn growth_ratio_ensemble_matches_limit_moments() {
    let p = params(0.5, -0.25, 1.0, 0.0);
    let ls = limit_stats(&p).unwrap();
    let ens = Ensemble::simulate_em(&p, 30.0, 1.0 / 128.0, 31, 10_000, 3840).unwrap();
    let finals: Vec<f64> = ens
        .paths
        .iter()
        .map(|path| {
            *growth_ratio(path, p.regime().unwrap())
                .unwrap()
                .values
                .last()
                .unwrap()
        })
        .collect();
    let st = SampleStats::new(&finals).unwrap();
    assert!(
        (st.mean - ls.mean_c).abs() <= 3.0 * st.std_error,
        "{} vs {}",
        st.mean,
        ls.mean_c
    );
    assert!(
        (st.variance / ls.var_c - 1.0).abs() <= 0.15,
        "{} vs {}",
        st.variance,
        ls.var_c
    );
}

#[test]
fn lil_statistic_is_antisymmetric_under_noise_flip() {
    let p = params(-1.0, 0.5, 0.0, 0.0);
    let up = simulate_em(&p, 2000.0, 1.0 / 16.0, 4).unwrap();
    let down = simulate_em_with(
        &p,
        2000.0,
        1.0 / 16.0,
        4,
        &EmOptions {
            flip_noise: true,
            ..EmOptions::default()
        },
    )
    .unwrap();
    for mode in [LilMode::Recurrent, LilMode::BrownianLike] {
        let (s1, i1) = lil_statistic(&up, mode).unwrap();
        let (s2, i2) = lil_statistic(&down, mode).unwrap();
        assert_eq!((s2, i2), (-i1, -s1));
        assert!(s1 > i1);
    }
}

#[test]
fn lil_sup_grows_with_horizon() {
    let p = params(0.0, -1.0, 1.0, 1.0);
    for seed in 0..4 {
        let short = simulate_em(&p, 1e3, 1.0 / 16.0, seed).unwrap();
        let long = simulate_em(&p, 1e5, 1.0 / 16.0, seed).unwrap();
        let (s_short, i_short) = lil_statistic(&short, LilMode::BrownianLike).unwrap();
        let (s_long, i_long) = lil_statistic(&long, LilMode::BrownianLike).unwrap();
        assert!(s_long >= s_short && i_long <= i_short);
    }
    let short = simulate_em(&p, 500.0, 1.0 / 16.0, 0).unwrap();
    assert!(lil_statistic(&short, LilMode::BrownianLike).is_err());
}

#[test]
fn lil_ensemble_matches_stored_paths() {
    let p = params(-1.0, 0.5, 1.0, 0.0);
    let streamed = lil_ensemble(&p, 1e3, 1.0 / 16.0, 12, 3, LilMode::Recurrent).unwrap();
    for (i, got) in streamed.iter().enumerate() {
        let opts = EmOptions {
            stream: i as u64,
            ..EmOptions::default()
        };
        let path = simulate_em_with(&p, 1e3, 1.0 / 16.0, 12, &opts).unwrap();
        assert_eq!(*got, lil_statistic(&path, LilMode::Recurrent).unwrap());
    }
}

#[test]
fn running_average_of_a_constant_path() {
    let c = 2.5;
    let path = Path {
        params: params(-1.0, 0.5, c, c),
        times: vec![0.0, 0.5, 1.5, 4.0],
        values: vec![c; 4],
        scheme: Scheme::Euler,
        seed: 0,
        stream: 0,
        grid: GridSpec::Uniform {
            dt: 0.5,
            record_every: 1,
        },
    };
    assert!(running_average(&path)
        .values
        .iter()
        .all(|&v| (v - c).abs() <= 1e-15));
}

#[test]
fn running_average_limits() {
    let p = params(-1.0, 0.5, 1.0, 0.0);
    let path = simulate_em(&p, 1e3, 1.0 / 64.0, 6).unwrap();
    assert!(running_average(&path).values.last().unwrap().abs() < 0.3);

    let p = params(-1.0, 1.0, 1.0, 0.0);
    for seed in 0..3 {
        let path = simulate_em(&p, 2e3, 1.0 / 64.0, seed).unwrap();
        let avg = *running_average(&path).values.last().unwrap();
        let diff = *xu_difference(&p, 2e3, 1.0 / 64.0, seed)
            .unwrap()
            .values
            .last()
            .unwrap();
        assert!((avg - diff).abs() < 0.02, "{avg} vs {diff}");
    }
}

#[test]
fn xu_difference_without_memory_is_deterministic() {
    let p = params(-0.8, 0.0, 1.7, 0.0);
    let dt = 1.0 / 128.0;
    let first = xu_difference(&p, 5.0, dt, 0).unwrap();
    for seed in 1..5 {
        assert_eq!(xu_difference(&p, 5.0, dt, seed).unwrap(), first);
    }
    for (t, d) in first.times.iter().zip(&first.values) {
        assert!((d - 1.7 * (-0.8 * t).exp()).abs() <= dt);
    }
}

#[test]
fn xu_difference_envelope_and_regime() {
    let p = params(-1.0, 0.5, 1.0, 0.0);
    let d = xu_terminal(&p, 1e3, 1.0 / 128.0, 8, 20).unwrap();
    let inside = d
        .iter()
        .filter(|x| x.abs() <= 10.0 * 1e3f64.powf(-0.5))
        .count();
    assert!(inside >= 19, "{inside} of 20");
    for (a, b) in [(-1.0, 2.0), (0.0, -1.0), (1.0, 0.0)] {
        assert!(matches!(
            xu_difference(&params(a, b, 1.0, 0.0), 10.0, 0.01, 0),
            Err(Error::Unsupported(_))
        ));
    }
}

#[test]
fn xu_difference_mean_follows_the_drift() {
    let p = params(-1.0, 1.0, 1.0, 0.0);
    let det = em_terminal(&p, 100.0, 1.0 / 64.0, 0, &DRIFT_ONLY).unwrap();
    let d = xu_terminal(&p, 100.0, 1.0 / 64.0, 21, 2000).unwrap();
    let st = SampleStats::new(&d).unwrap();
    assert!(
        (st.mean - det.diff).abs() <= 3.0 * st.std_error,
        "{} vs {}",
        st.mean,
        det.diff
    );
}
