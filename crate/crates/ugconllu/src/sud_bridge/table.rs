use std::path::Path;

use thiserror::Error;

/// One `ud<TAB>sud<TAB>flip` row. For flipped rows `sud` is the label the
/// content word takes once it hangs under the function word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub ud: String,
    pub sud: String,
    pub flip: bool,
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
}

pub const DEFAULT_TABLE: &str = "\
# ud\tsud\tflip
nsubj\tsubj\tno
xcomp\tcomp:obj@x\tno
ccomp\tcomp:obj\tno
obj\tcomp:obj\tno
obl\tmod\tno
amod\tmod\tno
nmod\tmod\tno
advmod\tadvmod\tno
det\tdet\tno
flat:name\tflat@name\tno
fixed\tunk@fixed\tno
aux\tcomp:obj@x\tyes
cop\tcomp:pred\tyes
case\tcomp:obj\tyes
mark\tcomp:obj@x\tyes
";

/// Relations copied unchanged in both directions (by base, except `flat`
/// subtypes that have a row of their own).
pub const PASSTHROUGH: &[&str] = &[
    "root", "punct", "discourse", "parataxis", "goeswith", "vocative", "flat", "orphan",
    "reparandum", "conj", "cc", "expl",
];

/// Label given to a `mark` that heads an infinitival `xcomp`.
pub const INFINITIVAL_MARK: &str = "comp:obl@x";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConversionTable {
    pub rows: Vec<Row>,
}

impl Default for ConversionTable {
    fn default() -> Self {
        ConversionTable::parse(DEFAULT_TABLE).expect("shipped table is valid")
    }
}

impl ConversionTable {
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let err = |reason: String| TableError::Syntax { line: i + 1, reason };
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(err(format!("expected 3 tab-separated fields, found {}", cols.len())));
            }
            let flip = match cols[2] {
                "yes" => true,
                "no" => false,
                other => return Err(err(format!("flip must be yes or no, found `{other}`"))),
            };
            if rows.iter().any(|r: &Row| r.ud == cols[0]) {
                return Err(err(format!("duplicate relation `{}`", cols[0])));
            }
            rows.push(Row {
                ud: cols[0].to_string(),
                sud: cols[1].to_string(),
                flip,
            });
        }
        Ok(ConversionTable { rows })
    }

    pub fn load(path: &Path) -> Result<Self, TableError> {
        let text = std::fs::read_to_string(path).map_err(|source| TableError::Io {
            path: path.display().to_string(),
            source,
        })?;
        ConversionTable::parse(&text)
    }

    pub fn row(&self, ud: &str) -> Option<&Row> {
        self.rows.iter().find(|r| r.ud == ud)
    }

    pub fn is_flip(&self, ud: &str) -> bool {
        self.row(ud).is_some_and(|r| r.flip)
    }

    /// UD relations a non-flipped SUD label can come from, in table order.
    pub fn ud_candidates(&self, sud: &str) -> Vec<&str> {
        self.rows
            .iter()
            .filter(|r| !r.flip && r.sud == sud)
            .map(|r| r.ud.as_str())
            .collect()
    }

    /// Whether `sud` is a label this table (or the passthrough set) produces.
    pub fn knows_sud(&self, sud: &str) -> bool {
        is_passthrough(sud) || sud == INFINITIVAL_MARK || self.rows.iter().any(|r| r.sud == sud)
    }
}

pub fn is_passthrough(rel: &str) -> bool {
    let base = rel.split([':', '@']).next().unwrap_or("");
    PASSTHROUGH.contains(&base)
}
