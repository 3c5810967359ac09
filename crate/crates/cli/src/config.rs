//! Run settings from a TOML file and command-line flags.
//!
//! Top-level keys apply to every command; a `[command]` section overrides
//! them for that command; flags override both.

use serde::Deserialize;

/// A number or a grid string.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum Spec {
    Num(f64),
    Text(String),
}

impl Spec {
    pub fn as_text(&self) -> String {
        match self {
            Spec::Num(x) => x.to_string(),
            Spec::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub sigma: Option<f64>,
    pub psi0: Option<f64>,
    pub psi_int: Option<f64>,
    pub t: Option<Spec>,
    pub t_max: Option<f64>,
    pub dt: Option<f64>,
    pub delta: Option<Spec>,
    pub n_paths: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<String>,
    pub tol: Option<f64>,
    pub suite: Option<String>,
    pub scheme: Option<String>,
    pub record_every: Option<usize>,
    pub a_range: Option<String>,
    pub b_range: Option<String>,
}

macro_rules! overlay {
    ($base:ident, $top:ident; $($f:ident),*) => {
        $( if $top.$f.is_some() { $base.$f = $top.$f; } )*
    };
}

impl Settings {
    /// Fields set in `top` replace those in `self`.
    pub fn overlay(mut self, top: Settings) -> Settings {
        overlay!(self, top; a, b, alpha, beta, sigma, psi0, psi_int, t, t_max, dt, delta, n_paths, seed, out, tol,
            suite, scheme, record_every, a_range, b_range);
        self
    }

    /// Settings for `command` from the text of a config file.
    pub fn from_toml(text: &str, command: &str) -> Result<Settings, String> {
        let table: toml::Table = text.parse().map_err(|e: toml::de::Error| e.to_string())?;
        let mut base = toml::Table::new();
        let mut section = toml::Table::new();
        for (k, v) in table {
            match v {
                toml::Value::Table(t) if k == command => section = t,
                toml::Value::Table(_) => {}
                v => {
                    base.insert(k, v);
                }
            }
        }
        let parse = |t: toml::Table| -> Result<Settings, String> {
            t.try_into().map_err(|e: toml::de::Error| e.to_string())
        };
        Ok(parse(base)?.overlay(parse(section)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sections_override_top_level() {
        let text = "a = -1\nb = 0.5\nt_max = 100.0\n[simulate]\nt_max = 20.0\nn_paths = 8\n[acf]\ndelta = \"1:10:log4\"\n";
        let s = Settings::from_toml(text, "simulate").unwrap();
        assert_eq!(
            (s.a, s.b, s.t_max, s.n_paths),
            (Some(-1.0), Some(0.5), Some(20.0), Some(8))
        );
        let s = Settings::from_toml(text, "acf").unwrap();
        assert_eq!(s.t_max, Some(100.0));
        assert_eq!(s.delta, Some(Spec::Text("1:10:log4".into())));
        assert!(Settings::from_toml("bogus = 1", "mean").is_err());
        let flags = Settings {
            t_max: Some(5.0),
            ..Settings::default()
        };
        assert_eq!(s.overlay(flags).t_max, Some(5.0));
    }
}
