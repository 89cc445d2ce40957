use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

pub const DEFAULT_CONFIG: &str = "matlis.toml";
pub const CONFIG_ENV: &str = "MATLIS_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Human,
    Document,
}

/// Defaults read from a TOML file; command-line flags take precedence.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionConfig {
    pub n: Option<usize>,
    pub field: Option<String>,
    pub trunc: Option<Vec<u64>>,
    pub seed: Option<u64>,
    pub format: Option<Format>,
}

impl SessionConfig {
    /// Loads `explicit` if given (it must exist), else `matlis.toml` in the
    /// working directory when present.
    pub fn load(explicit: Option<&Path>) -> Result<SessionConfig, String> {
        let (path, required) = match explicit {
            Some(p) => (p.to_path_buf(), true),
            None => (PathBuf::from(DEFAULT_CONFIG), false),
        };
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(_) if !required => return Ok(SessionConfig::default()),
            Err(e) => return Err(format!("cannot read config {}: {e}", path.display())),
        };
        let cfg: SessionConfig =
            toml::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))?;
        if cfg.n == Some(0) {
            return Err(format!("invalid config {}: n must be at least 1", path.display()));
        }
        Ok(cfg)
    }
}
