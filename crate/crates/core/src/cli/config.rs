use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::monomial::{SpectrumSpec, Window};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BackendChoice {
    Matching,
    Linalg,
    Both,
}

impl FromStr for BackendChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "matching" => Ok(BackendChoice::Matching),
            "linalg" => Ok(BackendChoice::Linalg),
            "both" => Ok(BackendChoice::Both),
            other => Err(Error::Usage(format!("unknown backend {other:?} (matching, linalg, both)"))),
        }
    }
}

impl BackendChoice {
    pub fn name(self) -> &'static str {
        match self {
            BackendChoice::Matching => "matching",
            BackendChoice::Linalg => "linalg",
            BackendChoice::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            other => Err(Error::Usage(format!("unknown format {other:?} (json, tsv)"))),
        }
    }
}

/// A fully resolved run configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub spectrum: SpectrumSpec,
    pub window: Window,
    pub backend: BackendChoice,
    pub output: Option<PathBuf>,
    pub format: Format,
}

/// Unresolved settings, from flags or a config file. Later layers win.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartialConfig {
    pub spectrum: Option<String>,
    pub p: Option<String>,
    pub qmax: Option<i64>,
    pub w: Option<String>,
    pub backend: Option<String>,
    pub output: Option<PathBuf>,
    pub format: Option<String>,
}

impl PartialConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Usage(format!("config {}: {e}", path.display())))
    }

    /// Fields set in `self` override those in `base`.
    pub fn over(self, base: PartialConfig) -> PartialConfig {
        PartialConfig {
            spectrum: self.spectrum.or(base.spectrum),
            p: self.p.or(base.p),
            qmax: self.qmax.or(base.qmax),
            w: self.w.or(base.w),
            backend: self.backend.or(base.backend),
            output: self.output.or(base.output),
            format: self.format.or(base.format),
        }
    }

    pub fn resolve(self, defaults: &Defaults) -> Result<RunConfig> {
        let spectrum: SpectrumSpec = self.spectrum.as_deref().unwrap_or(defaults.spectrum).parse()?;
        let (p_min, p_max) = parse_range(self.p.as_deref().unwrap_or(defaults.p))?;
        let (w_min, w_max) = parse_range(self.w.as_deref().unwrap_or(defaults.w))?;
        let q_max = self.qmax.unwrap_or(defaults.qmax);
        let window =
            Window::new(p_min, p_max, q_max, w_min, w_max).map_err(|e| Error::Usage(e.to_string()))?;
        Ok(RunConfig {
            spectrum,
            window,
            backend: self.backend.as_deref().unwrap_or(defaults.backend).parse()?,
            output: self.output,
            format: self.format.as_deref().unwrap_or("json").parse()?,
        })
    }
}

pub struct Defaults {
    pub spectrum: &'static str,
    pub p: &'static str,
    pub qmax: i64,
    pub w: &'static str,
    pub backend: &'static str,
}

pub const COMPUTE_DEFAULTS: Defaults = Defaults {
    spectrum: "bp2",
    p: "0:10",
    qmax: 6,
    w: "-4:0",
    backend: "matching",
};

/// Parses `a:b` (or a single integer `a`, meaning `a:a`).
pub fn parse_range(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::Usage(format!("bad range {s:?}, expected <min>:<max>"));
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|_| bad());
    match s.split_once(':') {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => {
            let a = parse(s)?;
            Ok((a, a))
        }
    }
}
