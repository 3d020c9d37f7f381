//! Desk-scale defaults, overridable by flags and by a key=value config file
//! named through the ONSAGER_ACE_DEFAULTS environment variable.

use anyhow::{bail, Context, Result};

#[derive(Clone, Copy, Debug)]
pub struct Defaults {
    /// Window bound for coordinates, the center solver and the span oracle.
    pub window: usize,
    /// Parameter bound for relation suites.
    pub kmax: i64,
    /// Bracket nesting depth for the span oracle.
    pub depth: usize,
    /// Index bound for the q -> 1 limit checks.
    pub bound: u32,
}

impl Default for Defaults {
    fn default() -> Self {
        Defaults {
            window: 8,
            kmax: 8,
            depth: 18,
            bound: 8,
        }
    }
}

pub const ENV_VAR: &str = "ONSAGER_ACE_DEFAULTS";

impl Defaults {
    /// Builtin values, overridden by the config file when the environment
    /// variable points at one.
    pub fn load() -> Result<Self> {
        let mut defaults = Defaults::default();
        let Some(path) = std::env::var_os(ENV_VAR) else {
            return Ok(defaults);
        };
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("reading config file {}", path.to_string_lossy()))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("config line {}: expected key=value", lineno + 1);
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "window" => defaults.window = parse_positive(value, lineno)?,
                "kmax" => defaults.kmax = value.parse().context("kmax")?,
                "depth" => defaults.depth = value.parse().context("depth")?,
                "bound" => defaults.bound = value.parse().context("bound")?,
                other => bail!("config line {}: unknown key {other:?}", lineno + 1),
            }
        }
        if defaults.kmax < 0 {
            bail!("kmax must be non-negative");
        }
        Ok(defaults)
    }
}

fn parse_positive(value: &str, lineno: usize) -> Result<usize> {
    let n: usize = value
        .parse()
        .with_context(|| format!("config line {}", lineno + 1))?;
    if n == 0 {
        bail!("config line {}: value must be at least 1", lineno + 1);
    }
    Ok(n)
}
