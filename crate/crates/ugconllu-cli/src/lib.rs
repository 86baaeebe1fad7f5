//! Command-line frontend. [`run`] does all the work and returns the exit code
//! and both output streams, so tests can drive it in-process.

mod args;
mod commands;
mod files;
mod stats;

use std::ffi::OsString;

use anyhow::Context;
use clap::Parser;
use ugconllu::normalizer::Lexicon;
use ugconllu::sud_bridge::ConversionTable;
use ugconllu::ugc_lint::LintConfig;

pub use args::{Cli, Command, ConvertDirection, Format, SegmentDirection};
pub use stats::Stats;

/// Prefix of environment variables that override config keys.
pub const ENV_PREFIX: &str = "UGCONLLU_";

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERRORS: i32 = 1;
pub const EXIT_IO: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Everything resolved before the first file is read.
pub struct Settings {
    pub lint: LintConfig,
    pub lexicon: Lexicon,
    pub table: ConversionTable,
    pub format: Format,
    pub(crate) pool: rayon::ThreadPool,
}

impl Settings {
    fn resolve(common: &args::Common, env: &[(String, String)]) -> anyhow::Result<Self> {
        let mut lint = LintConfig::default();
        if let Some(path) = &common.config {
            let text = std::fs::read_to_string(path).with_context(|| format!("{}", path.display()))?;
            lint.apply_text(&text).with_context(|| format!("{}", path.display()))?;
        }
        lint.apply_env(ENV_PREFIX, env.iter().map(|(k, v)| (k.as_str(), v.as_str())))?;
        if common.strict {
            lint.set("strict", "yes").map_err(anyhow::Error::msg)?;
        }
        let mut lexicon = Lexicon::default();
        for path in &common.lexicon {
            lexicon.extend(&Lexicon::load(path, false)?);
        }
        let table = match &common.table {
            Some(path) => ConversionTable::load(path)?,
            None => ConversionTable::default(),
        };
        let jobs = common
            .jobs
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        anyhow::ensure!(jobs > 0, "--jobs must be at least 1");
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
        Ok(Settings {
            lint,
            lexicon,
            table,
            format: common.format,
            pool,
        })
    }
}

/// Parses `args` (program name first) and runs the command. `env` supplies
/// the variables consulted for config overrides.
pub fn run<I, T>(args: I, env: &[(String, String)]) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stderr: text, ..Default::default() }
            } else {
                Outcome { code, stdout: text, ..Default::default() }
            };
        }
    };
    let settings = match Settings::resolve(&cli.common, env) {
        Ok(s) => s,
        Err(e) => {
            return Outcome {
                code: EXIT_CONFIG,
                stderr: format!("config error: {e:#}\n"),
                ..Default::default()
            }
        }
    };
    commands::dispatch(&cli.command, &settings)
}
