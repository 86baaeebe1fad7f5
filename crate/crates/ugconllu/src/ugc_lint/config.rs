use std::collections::BTreeMap;

use thiserror::Error;

use super::rule::{RuleId, Severity};
use crate::conllu_model::{Mode, Vocabulary};
use crate::normalizer::ClassifyOptions;

/// Hesitation markers known out of the box (matched case-sensitively).
pub const DEFAULT_HESITATIONS: &[&str] = &[
    "äh", "ähm", "öh", "öhm", "uh", "uhm", "umm", "hm", "hmm", "ehm", "euh", "erm",
];

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{origin}: {reason}")]
pub struct ConfigError {
    /// `line N` or the environment variable name.
    pub origin: String,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct LintConfig {
    /// Per-rule override; `None` turns the rule off.
    pub levels: BTreeMap<RuleId, Option<Severity>>,
    pub vocabulary: Vocabulary,
    /// Accept `discourse:context` and `dep` for standalone URLs.
    pub url_alternatives: bool,
    pub hesitations: Vec<String>,
    pub classify: ClassifyOptions,
}

impl Default for LintConfig {
    fn default() -> Self {
        LintConfig {
            levels: BTreeMap::new(),
            vocabulary: Vocabulary::default(),
            url_alternatives: false,
            hesitations: DEFAULT_HESITATIONS.iter().map(|s| s.to_string()).collect(),
            classify: ClassifyOptions::default(),
        }
    }
}

fn parse_bool(v: &str) -> Result<bool, String> {
    match v {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        _ => Err(format!("expected a boolean, found `{v}`")),
    }
}

fn parse_level(v: &str) -> Result<Option<Severity>, String> {
    match v {
        "error" => Ok(Some(Severity::Error)),
        "warning" => Ok(Some(Severity::Warning)),
        "info" => Ok(Some(Severity::Info)),
        "off" => Ok(None),
        _ => Err(format!("expected error|warning|info|off, found `{v}`")),
    }
}

fn list(v: &str) -> impl Iterator<Item = String> + '_ {
    v.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from)
}

/// Option keys besides rule ids.
pub const OPTION_KEYS: &[&str] = &[
    "strict",
    "url-alternatives",
    "hesitations",
    "markup",
    "rt-ignore-case",
    "subtypes",
];

impl LintConfig {
    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        if key.starts_with("R-") {
            let id: RuleId = key.parse()?;
            self.levels.insert(id, parse_level(value)?);
            return Ok(());
        }
        match key {
            "strict" => {
                self.vocabulary.mode = if parse_bool(value)? {
                    Mode::Strict
                } else {
                    Mode::Lenient
                }
            }
            "url-alternatives" => self.url_alternatives = parse_bool(value)?,
            "rt-ignore-case" => self.classify.rt_ignore_case = parse_bool(value)?,
            "hesitations" => self.hesitations = list(value).collect(),
            "markup" => self.classify.markup.extend(list(value)),
            "subtypes" => {
                for s in list(value) {
                    self.vocabulary.register_subtype(&s);
                }
            }
            _ => return Err(format!("unknown setting `{key}`")),
        }
        Ok(())
    }

    /// Reads `KEY = VALUE` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut cfg = LintConfig::default();
        cfg.apply_text(text)?;
        Ok(cfg)
    }

    pub fn apply_text(&mut self, text: &str) -> Result<(), ConfigError> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: String| ConfigError {
                origin: format!("line {}", i + 1),
                reason,
            };
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| err("expected `KEY = VALUE`".into()))?;
            self.set(k.trim(), v.trim()).map_err(err)?;
        }
        Ok(())
    }

    /// Applies variables named `PREFIX` + key, upper-cased with `-` as `_`
    /// (e.g. `UGCONLLU_R_HASH_01=off`, `UGCONLLU_STRICT=yes`).
    pub fn apply_env<I, K, V>(&mut self, prefix: &str, vars: I) -> Result<(), ConfigError>
    where
        I: IntoIterator<Item = (K, V)>,
        K: AsRef<str>,
        V: AsRef<str>,
    {
        let known: Vec<String> = super::rule::RULES
            .iter()
            .map(|r| r.id.as_str().to_string())
            .chain(OPTION_KEYS.iter().map(|s| s.to_string()))
            .collect();
        let mut vars: Vec<(String, String)> = vars
            .into_iter()
            .map(|(k, v)| (k.as_ref().to_string(), v.as_ref().to_string()))
            .filter(|(k, _)| k.starts_with(prefix))
            .collect();
        vars.sort();
        for (name, value) in vars {
            let wanted = &name[prefix.len()..];
            let key = known
                .iter()
                .find(|k| k.to_uppercase().replace('-', "_") == wanted)
                .ok_or_else(|| ConfigError {
                    origin: name.clone(),
                    reason: "unknown setting".into(),
                })?;
            self.set(key, value.trim()).map_err(|reason| ConfigError {
                origin: name.clone(),
                reason,
            })?;
        }
        Ok(())
    }

    /// Severity for a diagnostic whose rule-chosen default is `default`.
    pub fn level(&self, rule: RuleId, default: Severity) -> Option<Severity> {
        match self.levels.get(&rule) {
            Some(l) => *l,
            None => Some(default),
        }
    }

    pub fn enabled(&self, rule: RuleId) -> bool {
        !matches!(self.levels.get(&rule), Some(None))
    }
}
