use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use walkdir::WalkDir;

/// One input file, with its path relative to the argument that named it.
#[derive(Debug, Clone)]
pub struct Input {
    pub path: PathBuf,
    pub rel: PathBuf,
}

impl Input {
    pub fn display(&self) -> String {
        self.path.display().to_string()
    }
}

/// Files named directly, plus every `*.conllu` below named directories in
/// lexicographic order.
pub fn collect(paths: &[PathBuf]) -> anyhow::Result<Vec<Input>> {
    let mut out = Vec::new();
    for p in paths {
        if p.is_dir() {
            for entry in WalkDir::new(p).sort_by_file_name() {
                let entry = entry?;
                let path = entry.path();
                if entry.file_type().is_file() && path.extension().is_some_and(|e| e == "conllu") {
                    out.push(Input {
                        rel: path.strip_prefix(p).unwrap_or(path).to_path_buf(),
                        path: path.to_path_buf(),
                    });
                }
            }
        } else if p.is_file() {
            out.push(Input {
                rel: p.file_name().map(PathBuf::from).unwrap_or_else(|| p.clone()),
                path: p.clone(),
            });
        } else {
            anyhow::bail!("{}: no such file or directory", p.display());
        }
    }
    Ok(out)
}

/// Replaces `path` by writing a sibling temporary file and renaming it.
pub fn write_atomic(path: &Path, contents: &str) -> anyhow::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("{}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).with_context(|| format!("{}", path.display()))?;
    Ok(())
}

pub fn write_under(dir: &Path, rel: &Path, contents: &str) -> anyhow::Result<()> {
    let target = dir.join(rel);
    if let Some(parent) = target.parent() {
        std::fs::create_dir_all(parent).with_context(|| format!("{}", parent.display()))?;
    }
    std::fs::write(&target, contents).with_context(|| format!("{}", target.display()))
}
