use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ugconllu", version, about = "Validate, fix, segment, convert and count CoNLL-U corpora")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Lint configuration file (`KEY = VALUE` lines).
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Reject relation subtypes that are not registered.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Extra lexicon file; may be repeated.
    #[arg(long, global = true, value_name = "FILE")]
    pub lexicon: Vec<PathBuf>,
    /// Conversion table replacing the built-in one.
    #[arg(long, global = true, value_name = "FILE")]
    pub table: Option<PathBuf>,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Tsv,
}

/// Where rewritten files go.
#[derive(Debug, Args, Clone)]
pub struct Output {
    /// Write results below DIR, mirroring the input layout.
    #[arg(long, value_name = "DIR", conflicts_with_all = ["in_place", "dry_run"])]
    pub out: Option<PathBuf>,
    /// Rewrite input files atomically.
    #[arg(long, conflicts_with = "dry_run")]
    pub in_place: bool,
    /// Report only; write nothing.
    #[arg(long)]
    pub dry_run: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report rule violations.
    Validate {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Apply the deterministic fixes attached to diagnostics.
    Fix {
        #[command(flatten)]
        output: Output,
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Split sentences at `parataxis:sentence` or merge units of one post.
    Segment {
        #[arg(value_enum)]
        direction: SegmentDirection,
        #[command(flatten)]
        output: Output,
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Convert between UD and SUD.
    Convert {
        #[arg(value_enum)]
        direction: ConvertDirection,
        #[command(flatten)]
        output: Output,
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Count tokens, UGC phenomena and units.
    Stats {
        paths: Vec<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SegmentDirection {
    Split,
    #[value(name = "merge-by-post-id")]
    MergeByPostId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvertDirection {
    Ud2sud,
    Sud2ud,
}
