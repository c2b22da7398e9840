//! Flat `key = value` configuration files.
//!
//! Blank lines and lines starting with `#` are ignored. Keys use the long
//! flag names (`gamma-ratio`, `t-max`, ...; underscores are accepted).
//! Repeating a key, or giving a comma-separated value, builds a grid.

use std::fs;
use std::path::Path;

pub const KEYS: [&str; 15] = [
    "family",
    "r",
    "gamma-ratio",
    "t-max",
    "t-steps",
    "measures",
    "numeric",
    "theta-bc",
    "traj",
    "dt",
    "seed",
    "mode",
    "sigma",
    "out",
    "format",
];

#[derive(Debug, Default, Clone, PartialEq)]
pub struct ConfigFile {
    entries: Vec<(String, String)>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut entries = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", n + 1))?;
            let key = key.trim().replace('_', "-");
            if !KEYS.contains(&key.as_str()) {
                return Err(format!("line {}: unknown key '{key}'", n + 1));
            }
            entries.push((key, value.trim().to_string()));
        }
        Ok(Self { entries })
    }

    /// Every value given for `key`, comma lists expanded, in file order.
    pub fn values(&self, key: &str) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|(k, _)| k == key)
            .flat_map(|(_, v)| v.split(','))
            .map(str::trim)
            .filter(|v| !v.is_empty())
            .collect()
    }

    /// The last value given for `key`.
    pub fn last(&self, key: &str) -> Option<&str> {
        self.values(key).pop()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeated_keys_form_grids() {
        let c = ConfigFile::parse("# sweep\nfamily = W\nr = 0.5\nr = 0.98\ngamma_ratio = 0.1, 10\n\n").unwrap();
        assert_eq!(c.values("r"), vec!["0.5", "0.98"]);
        assert_eq!(c.values("gamma-ratio"), vec!["0.1", "10"]);
        assert_eq!(c.last("family"), Some("W"));
        assert_eq!(c.last("seed"), None);
    }

    #[test]
    fn rejects_unknown_and_malformed() {
        assert!(ConfigFile::parse("colour = red").is_err());
        assert!(ConfigFile::parse("r 0.5").is_err());
    }
}
