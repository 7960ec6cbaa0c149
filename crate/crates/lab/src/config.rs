//! Run configuration, optionally read from a `key = value` file.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("format must be json or csv, got {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub max_n: u32,
    pub variable_count: usize,
    /// `None` lets the thread pool pick.
    pub worker_count: Option<usize>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { max_n: 11, variable_count: 6, worker_count: None, output_path: None, format: Format::Json }
    }
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let num = |v: &str| v.parse::<usize>().map_err(|e| format!("{key}: {e}"));
        match key {
            "max_n" => {
                let n = num(value)?;
                if n == 0 {
                    return Err("max_n must be at least 1".into());
                }
                self.max_n = u32::try_from(n).map_err(|e| format!("{key}: {e}"))?;
            }
            "variable_count" => self.variable_count = num(value)?,
            "worker_count" => self.worker_count = Some(num(value)?),
            "output_path" => self.output_path = Some(PathBuf::from(value)),
            "format" => self.format = value.parse()?,
            other => return Err(format!("unknown config key {other:?}")),
        }
        Ok(())
    }

    /// Parse `key = value` lines; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<RunConfig, String> {
        let mut cfg = RunConfig::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", i + 1))?;
            cfg.set(k.trim(), v.trim()).map_err(|e| format!("line {}: {e}", i + 1))?;
        }
        Ok(cfg)
    }

    pub fn from_file(path: &Path) -> Result<RunConfig, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        RunConfig::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_file_text() {
        let cfg = RunConfig::parse("# lab\nmax_n = 9\nformat=csv\nworker_count = 2\noutput_path = out/r.csv\n").unwrap();
        assert_eq!(cfg.max_n, 9);
        assert_eq!(cfg.format, Format::Csv);
        assert_eq!(cfg.worker_count, Some(2));
        assert_eq!(cfg.output_path, Some(PathBuf::from("out/r.csv")));
        assert_eq!(cfg.variable_count, 6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RunConfig::parse("max_n = 0").is_err());
        assert!(RunConfig::parse("colour = red").is_err());
        assert!(RunConfig::parse("format = xml").is_err());
        assert!(RunConfig::parse("just words").is_err());
    }
}
