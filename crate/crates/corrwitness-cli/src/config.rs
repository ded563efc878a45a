//! Flat key-value configuration files and run manifests.
//!
//! A config file holds `key = value` lines whose keys mirror the long flag
//! names of one subcommand. Precedence is CLI flag > config file > default.
//! Every output-producing run writes a manifest in the same format next to
//! its output; feeding that manifest back through `--config` reproduces the
//! output byte for byte.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::CliError;

/// 17 significant digits: enough to round-trip any f64 exactly.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Key-value store parsed from a config file, with consumption tracking so
/// unknown keys can be rejected.
pub struct ConfigFile {
    path: Option<PathBuf>,
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn empty() -> Self {
        Self {
            path: None,
            entries: BTreeMap::new(),
        }
    }

    /// Parse a flat key-value file. The reserved keys `command` and
    /// `version` are checked (when present) and dropped.
    pub fn load(path: &Path, expected_command: &str) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read config {}: {e}", path.display())))?;
        let mut entries = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::usage(format!(
                    "{}:{}: expected 'key = value', got '{raw}'",
                    path.display(),
                    lineno + 1
                )));
            };
            entries.insert(key.trim().to_string(), value.trim().to_string());
        }
        if let Some(command) = entries.remove("command") {
            if command != expected_command {
                return Err(CliError::usage(format!(
                    "config {} was written by '{command}', not '{expected_command}'",
                    path.display()
                )));
            }
        }
        entries.remove("version");
        Ok(Self {
            path: Some(path.to_path_buf()),
            entries,
        })
    }

    fn take(&mut self, key: &str) -> Option<String> {
        self.entries.remove(key)
    }

    /// Error on leftover keys, which are either typos or keys of a
    /// different subcommand.
    pub fn finish(self) -> Result<(), CliError> {
        if let Some(key) = self.entries.keys().next() {
            return Err(CliError::usage(format!(
                "unknown key '{key}' in config {}",
                self.path
                    .as_deref()
                    .unwrap_or_else(|| Path::new("<none>"))
                    .display()
            )));
        }
        Ok(())
    }
}

/// Merges flag / config-file / default values and records the resolved
/// settings for the manifest.
pub struct Resolver {
    file: ConfigFile,
    manifest: Vec<(String, String)>,
}

impl Resolver {
    pub fn new(config_path: Option<&Path>, command: &str) -> Result<Self, CliError> {
        let file = match config_path {
            Some(path) => ConfigFile::load(path, command)?,
            None => ConfigFile::empty(),
        };
        Ok(Self {
            file,
            manifest: vec![
                ("command".to_string(), command.to_string()),
                ("version".to_string(), env!("CARGO_PKG_VERSION").to_string()),
            ],
        })
    }

    fn record(&mut self, key: &str, value: impl Display) {
        self.manifest.push((key.to_string(), value.to_string()));
    }

    /// Resolve a value with full precedence; records it in the manifest.
    pub fn value<T>(&mut self, key: &str, flag: Option<T>, default: T) -> Result<T, CliError>
    where
        T: FromStr + Display,
        T::Err: Display,
    {
        let resolved = self.resolve_opt(key, flag)?.unwrap_or(default);
        self.record(key, &resolved);
        Ok(resolved)
    }

    /// Resolve a float; the manifest entry uses the exact 17-digit form.
    pub fn float(&mut self, key: &str, flag: Option<f64>, default: f64) -> Result<f64, CliError> {
        let resolved = self.resolve_opt(key, flag)?.unwrap_or(default);
        self.record(key, format_float(resolved));
        Ok(resolved)
    }

    /// Resolve a float that has no fixed default (computed by the caller);
    /// not yet recorded.
    pub fn float_unrecorded(
        &mut self,
        key: &str,
        flag: Option<f64>,
    ) -> Result<Option<f64>, CliError> {
        self.resolve_opt(key, flag)
    }

    /// Record a caller-computed float (pairs with [`Self::float_unrecorded`]).
    pub fn record_float(&mut self, key: &str, value: f64) {
        self.record(key, format_float(value));
    }

    /// Record a comma-joined float list in round-trip form.
    pub fn record_float_list(&mut self, key: &str, values: &[f64]) {
        let joined = values
            .iter()
            .map(|&v| format_float(v))
            .collect::<Vec<_>>()
            .join(",");
        self.record(key, joined);
    }

    /// Resolve a required value with no default.
    pub fn required<T>(&mut self, key: &str, flag: Option<T>) -> Result<T, CliError>
    where
        T: FromStr + Display,
        T::Err: Display,
    {
        match self.resolve_opt(key, flag)? {
            Some(value) => {
                self.record(key, &value);
                Ok(value)
            }
            None => Err(CliError::usage(format!("missing required --{key}"))),
        }
    }

    /// Flag > file > None, without recording.
    pub fn resolve_opt<T>(&mut self, key: &str, flag: Option<T>) -> Result<Option<T>, CliError>
    where
        T: FromStr,
        T::Err: Display,
    {
        if let Some(value) = flag {
            self.file.take(key);
            return Ok(Some(value));
        }
        match self.file.take(key) {
            Some(raw) => raw.parse::<T>().map(Some).map_err(|e| {
                CliError::usage(format!("config key '{key}': cannot parse '{raw}': {e}"))
            }),
            None => Ok(None),
        }
    }

    /// Reject unconsumed config keys and hand back the manifest entries.
    pub fn finish(self) -> Result<Vec<(String, String)>, CliError> {
        self.file.finish()?;
        Ok(self.manifest)
    }
}

/// Write the manifest next to the output file (`<output>.manifest`).
pub fn write_manifest(output: &Path, entries: &[(String, String)]) -> Result<PathBuf, CliError> {
    let mut text = String::new();
    for (key, value) in entries {
        text.push_str(key);
        text.push_str(" = ");
        text.push_str(value);
        text.push('\n');
    }
    let mut name = output.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest");
    let path = output.with_file_name(name);
    fs::write(&path, text)
        .map_err(|e| CliError::runtime(format!("cannot write {}: {e}", path.display())))?;
    Ok(path)
}
