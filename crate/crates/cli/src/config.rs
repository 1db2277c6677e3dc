//! Flat `key = value` defaults file. Recognized keys: `n`, `trunc`, `mode`,
//! `suites` (comma-separated). `#` starts a comment.

use std::path::Path;

use anyhow::{bail, Context, Result};

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Defaults {
    pub n: Option<usize>,
    pub trunc: Option<u32>,
    pub mode: Option<String>,
    pub suites: Option<Vec<String>>,
}

impl Defaults {
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = Defaults::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .with_context(|| format!("line {}: expected key = value", i + 1))?;
            let value = value.trim();
            match key.trim() {
                "n" => out.n = Some(value.parse().with_context(|| format!("line {}: bad n", i + 1))?),
                "trunc" => out.trunc = Some(value.parse().with_context(|| format!("line {}: bad trunc", i + 1))?),
                "mode" => out.mode = Some(value.to_string()),
                "suites" | "suite" => {
                    out.suites = Some(value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect())
                }
                other => bail!("line {}: unknown key {other:?}", i + 1),
            }
        }
        Ok(out)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let d = Defaults::parse("# defaults\nn = 3\ntrunc=8\nmode = exact\nsuites = qbg, relations\n").unwrap();
        assert_eq!(d.n, Some(3));
        assert_eq!(d.trunc, Some(8));
        assert_eq!(d.mode.as_deref(), Some("exact"));
        assert_eq!(d.suites, Some(vec!["qbg".into(), "relations".into()]));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(Defaults::parse("colour = blue").is_err());
        assert!(Defaults::parse("n 3").is_err());
    }
}
