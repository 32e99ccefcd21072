//! Loader for the optional `key = value` config file. Keys mirror the long
//! command-line flags; any flag given explicitly wins over the file. Unknown
//! keys are an error so typos surface instead of being silently ignored.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

/// Every key a config file may set, i.e. the long flag names.
pub const KNOWN_KEYS: &[&str] = &[
    "preset",
    "L",
    "q",
    "k",
    "f",
    "step",
    "mode",
    "heights",
    "k-range",
    "format",
    "out",
    "samples",
    "n",
    "stride",
    "tol-u",
    "tol-res",
    "pos-tol",
    "ang-tol-deg",
    "tension-tol",
    "no-terminal",
];

/// Parsed config file: flag name to raw value string.
#[derive(Debug, Default, Clone)]
pub struct ConfigFile {
    values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut values = BTreeMap::new();
        for (i, raw_line) in text.lines().enumerate() {
            let line = match raw_line.split_once('#') {
                Some((before, _comment)) => before,
                None => raw_line,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key = value", i + 1))?;
            let key = key.trim();
            let value = value.trim();
            if !KNOWN_KEYS.contains(&key) {
                return Err(format!("config line {}: unknown key {key:?}", i + 1));
            }
            if values.insert(key.to_string(), value.to_string()).is_some() {
                return Err(format!("config line {}: duplicate key {key:?}", i + 1));
            }
        }
        Ok(Self { values })
    }

    /// Raw string for `key`, if the file set it.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_blanks_and_spacing() {
        let cfg = ConfigFile::parse(
            "# planner defaults\n\npreset = demo\nstep=0.01   # coarse grid\n  format = jsonl\n",
        )
        .unwrap();
        assert_eq!(cfg.get("preset"), Some("demo"));
        assert_eq!(cfg.get("step"), Some("0.01"));
        assert_eq!(cfg.get("format"), Some("jsonl"));
        assert_eq!(cfg.get("mode"), None);
    }

    #[test]
    fn rejects_unknown_and_duplicate_keys() {
        assert!(ConfigFile::parse("stpe = 0.01\n").is_err());
        assert!(ConfigFile::parse("step = 0.01\nstep = 0.02\n").is_err());
        assert!(ConfigFile::parse("just a line\n").is_err());
    }

    #[test]
    fn heights_value_may_hold_a_comma_list() {
        let cfg = ConfigFile::parse("heights = 0.25,0.5,0.75\n").unwrap();
        assert_eq!(cfg.get("heights"), Some("0.25,0.5,0.75"));
    }
}
