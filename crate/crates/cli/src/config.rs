//! Optional TOML defaults. Command-line flags take precedence over the file,
//! and `WPI_SEED` is consulted only when neither provides a seed.

use std::path::Path;

use serde::Deserialize;

use crate::CliError;

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_MAX_COSETS: usize = 100_000;
pub const DEFAULT_SEED: u64 = 42;
pub const SEED_ENV: &str = "WPI_SEED";

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub format: Option<String>,
    pub n: Option<usize>,
    pub d: Option<u32>,
    pub variant: Option<String>,
    pub l: Option<u32>,
    pub fixture: Option<String>,
    pub pact_exponent: Option<u32>,
    pub allow_odd_d: Option<bool>,
    pub n_max: Option<u32>,
    pub d_max: Option<u32>,
    pub seeds: Option<u64>,
    pub seed: Option<u64>,
    pub tol: Option<f64>,
    pub max_cosets: Option<usize>,
    pub v: Option<Vec<f64>>,
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Config, CliError> {
        let Some(path) = path else {
            return Ok(Config::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text)
            .map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
    }

    pub fn seed(&self, flag: Option<u64>) -> Result<u64, CliError> {
        if let Some(s) = flag.or(self.seed) {
            return Ok(s);
        }
        match std::env::var(SEED_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{SEED_ENV} is not an integer: `{v}`"))),
            Err(_) => Ok(DEFAULT_SEED),
        }
    }

    pub fn tol(&self, flag: Option<f64>) -> Result<f64, CliError> {
        let tol = flag.or(self.tol).unwrap_or(DEFAULT_TOL);
        if tol > 0.0 && tol.is_finite() {
            Ok(tol)
        } else {
            Err(CliError::Usage(format!("tolerance must be positive (got {tol})")))
        }
    }
}
