//! Rule engine for UGC annotation conventions: a catalog of configurable
//! checks, the diagnostics they emit and deterministic auto-fixes.

mod checks;
mod config;
pub mod emoticon;
mod fix;
mod rule;

pub use checks::validate;
pub use config::{ConfigError, LintConfig, DEFAULT_HESITATIONS, OPTION_KEYS};
pub use emoticon::{emoticon_recognizer, is_emoticon, is_pictogram};
pub use fix::{fix, AppliedFix, FixConflict, FixOutcome};
pub use rule::{Diagnostic, Fix, Rule, RuleId, Severity, RULES};
