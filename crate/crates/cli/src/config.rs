use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use laguerre_core::asymptotics::GaussianRational;
use laguerre_core::combo::GammaSpec;
use laguerre_core::ratpoly::parse_rational;
use laguerre_core::{Family, Rational};
use serde::Deserialize;

/// Largest degree built in exact arithmetic unless overridden.
pub const DEFAULT_CAP: usize = 400;

/// Every check name accepted by `verify`.
pub const CHECKS: &[&str] = &[
    "zeros",
    "identities",
    "bell-identity",
    "generating-series",
    "binomial-collapse",
    "thresholds",
    "mehler-heine",
    "outer",
    "limits",
    "density",
    "preservation",
];

/// Checks that build `q_n` for the degrees of `nList`.
const ASYMPTOTIC_CHECKS: &[&str] = &["mehler-heine", "outer", "limits", "density"];

/// The experiment file as written on disk.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub name: Option<String>,
    pub family: String,
    pub alpha: String,
    #[serde(default)]
    pub gamma: Option<Vec<String>>,
    #[serde(default)]
    pub q_zeros: Option<Vec<String>>,
    #[serde(default)]
    pub p_zeros: Option<Vec<String>>,
    #[serde(default)]
    pub n_window: Option<[usize; 2]>,
    #[serde(default)]
    pub checks: Vec<String>,
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
    #[serde(default)]
    pub seed: u64,
    /// Degrees for the asymptotic checks.
    #[serde(default)]
    pub n_list: Option<Vec<usize>>,
    /// Real points `z` for the Mehler-Heine check.
    #[serde(default)]
    pub z_grid: Option<Vec<f64>>,
    /// Points `[re, im]` as rational strings for the outer check.
    #[serde(default)]
    pub outer_grid: Option<Vec<[String; 2]>>,
    #[serde(default)]
    pub bins: Option<usize>,
    #[serde(default)]
    pub trials: Option<usize>,
    #[serde(default)]
    pub cap: Option<usize>,
}

/// Rejected configuration; maps to exit code 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

/// Command-line values that take precedence over the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub window: Option<(usize, usize)>,
    pub cap: Option<usize>,
    pub seed: Option<u64>,
}

/// A validated experiment.
#[derive(Clone, Debug)]
pub struct Experiment {
    pub name: String,
    pub spec: GammaSpec,
    pub window: (usize, usize),
    pub checks: Vec<String>,
    pub tolerances: BTreeMap<String, f64>,
    pub seed: u64,
    pub n_list: Vec<usize>,
    pub z_grid: Vec<f64>,
    pub outer_grid: Vec<GaussianRational>,
    pub bins: usize,
    pub trials: usize,
    pub cap: usize,
}

impl Experiment {
    pub fn tolerance(&self, check: &str, default: f64) -> f64 {
        self.tolerances.get(check).copied().unwrap_or(default)
    }
}

pub fn parse_window(s: &str) -> Result<(usize, usize), ConfigError> {
    let Some((a, b)) = s.split_once(':') else {
        return err(format!("window {s:?} is not NMIN:NMAX"));
    };
    match (a.trim().parse(), b.trim().parse()) {
        (Ok(a), Ok(b)) => Ok((a, b)),
        _ => err(format!("window {s:?} is not NMIN:NMAX")),
    }
}

fn rationals(v: &[String], what: &str) -> Result<Vec<Rational>, ConfigError> {
    v.iter()
        .map(|s| parse_rational(s).map_err(|e| ConfigError(format!("{what}: {e}"))))
        .collect()
}

pub fn load(path: &Path) -> Result<ExperimentConfig, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| ConfigError(format!("{}: {e}", path.display())))
}

impl ExperimentConfig {
    pub fn validate(&self, ov: &Overrides) -> Result<Experiment, ConfigError> {
        let family: Family = self.family.parse().map_err(|e| ConfigError(format!("family: {e}")))?;
        let alpha = parse_rational(&self.alpha).map_err(|e| ConfigError(format!("alpha: {e}")))?;
        let given = [&self.gamma, &self.q_zeros, &self.p_zeros].iter().filter(|v| v.is_some()).count();
        if given != 1 {
            return err("exactly one of gamma, qZeros, pZeros must be given");
        }
        let degenerate = |e| ConfigError(format!("{e}"));
        let spec = if let Some(g) = &self.gamma {
            GammaSpec::new(rationals(g, "gamma")?, alpha, family).map_err(degenerate)?
        } else if let Some(t) = &self.q_zeros {
            GammaSpec::from_q_zeros(&rationals(t, "qZeros")?, alpha, family).map_err(degenerate)?
        } else {
            let t = self.p_zeros.as_ref().expect("one source given");
            GammaSpec::from_p_zeros(&rationals(t, "pZeros")?, alpha, family).map_err(degenerate)?
        };
        let k = spec.k();
        let window = ov
            .window
            .or(self.n_window.map(|[a, b]| (a, b)))
            .unwrap_or((k, k + 15));
        let cap = ov.cap.or(self.cap).unwrap_or(DEFAULT_CAP);
        if window.0 < k {
            return err(format!("window start {} is below K = {k}", window.0));
        }
        if window.1 < window.0 {
            return err(format!("empty window {}:{}", window.0, window.1));
        }
        if window.1 > cap {
            return err(format!("window end {} exceeds the exact-mode cap {cap}", window.1));
        }
        for c in &self.checks {
            if !CHECKS.contains(&c.as_str()) {
                return err(format!("unknown check {c:?}"));
            }
        }
        let mut checks: Vec<String> = Vec::new();
        for c in &self.checks {
            if !checks.contains(c) {
                checks.push(c.clone());
            }
        }
        let n_list = self.n_list.clone().unwrap_or_else(|| vec![100, 200, 400]);
        let asymptotic = checks.iter().any(|c| ASYMPTOTIC_CHECKS.contains(&c.as_str()));
        if let Some(&n) = n_list.iter().find(|&&n| asymptotic && n > cap) {
            return err(format!("n = {n} in nList exceeds the exact-mode cap {cap}"));
        }
        if let Some(&n) = n_list.iter().find(|&&n| n < k.max(1)) {
            return err(format!("n = {n} in nList is below K"));
        }
        let outer_grid = match &self.outer_grid {
            Some(g) => g
                .iter()
                .map(|[re, im]| {
                    let re = parse_rational(re).map_err(|e| ConfigError(format!("outerGrid: {e}")))?;
                    let im = parse_rational(im).map_err(|e| ConfigError(format!("outerGrid: {e}")))?;
                    Ok(GaussianRational::new(re, im))
                })
                .collect::<Result<Vec<_>, ConfigError>>()?,
            None => default_outer_grid(),
        };
        Ok(Experiment {
            name: self.name.clone().unwrap_or_default(),
            spec,
            window,
            checks,
            tolerances: self.tolerances.clone(),
            seed: ov.seed.unwrap_or(self.seed),
            n_list,
            z_grid: self.z_grid.clone().unwrap_or_else(|| vec![0.5, 1.0, 2.0, 4.0]),
            outer_grid,
            bins: self.bins.unwrap_or(20),
            trials: self.trials.unwrap_or(200),
            cap,
        })
    }
}

fn default_outer_grid() -> Vec<GaussianRational> {
    let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
    vec![
        GaussianRational::new(r(6, 1), r(0, 1)),
        GaussianRational::new(r(2, 1), r(3, 1)),
        GaussianRational::new(r(-1, 2), r(1, 1)),
    ]
}
