use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::conllu_model::NonCan;

/// What a lexicon entry records about its form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phenomenon {
    NonCan(NonCan),
    /// An abbreviation proper, annotated with `Abbr=Yes` rather than `NonCan`.
    Abbr,
}

impl FromStr for Phenomenon {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "Abbr" {
            return Ok(Phenomenon::Abbr);
        }
        s.parse::<NonCan>()
            .map(Phenomenon::NonCan)
            .map_err(|e| e.to_string())
    }
}

impl fmt::Display for Phenomenon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phenomenon::NonCan(n) => n.fmt(f),
            Phenomenon::Abbr => f.write_str("Abbr"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexEntry {
    pub form: String,
    pub expansion: String,
    pub phenomenon: Phenomenon,
    pub upos_hint: Option<String>,
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Line {
    Raw(String),
    Entry(usize),
}

/// Form lookup table loaded from `form<TAB>expansion<TAB>phenomenon[<TAB>upos]`
/// lines. Comments and blank lines are kept so that saving reproduces the file.
#[derive(Debug, Clone)]
pub struct Lexicon {
    entries: Vec<LexEntry>,
    raw: Vec<String>,
    lines: Vec<Line>,
    index: HashMap<String, usize>,
    ignore_case: bool,
    trailing_newline: bool,
    pub source: Option<PathBuf>,
}

/// Shipped entries: attested forms with their standard counterparts.
pub const DEFAULT_LEXICON: &str = "\
# form\texpansion\tphenomenon\tupos
ppl\tpeople\tCharOm\tNOUN
slm\tselam\tCharOm\tINTJ
govt\tgovernment\tAbbr\tNOUN
zuggm\tzugegebenermaßen\tAbbr\tADV
2\tto\tPhon\tADP
1az\tbiraz\tPhon\tADV
k1\tkein\tPhon\tDET
sé\tsais\tSpellVar\tVERB
gura\tgo raibh\tSpellVar
son\tsont\tSpellVar\tAUX
anno\thanno\tSpellVar\tAUX
examen\texamens\tSpellVar\tNOUN
nimp\tn'importe\tCont
idk\tI don't know\tCont\tVERB
gonna\tgoing to\tCont\tVERB
wanna\twant to\tCont\tVERB
gotta\tgot to\tCont\tVERB
im\tI'm\tCont
sumthn\tsomething\tCharOm\tPRON
caxxo\tcazzo\tSpellVar\tNOUN
taymlayn\ttimeline\tTransl\tNOUN
tuittare\ttwittare\tLexInno\tVERB
RT\tretweet\tAbbr\tVERB
PM\tpersonal message\tAbbr\tNOUN
lol\tlaughing out loud\tAbbr\tINTJ
";

impl Default for Lexicon {
    fn default() -> Self {
        Lexicon::parse(DEFAULT_LEXICON, false).expect("shipped lexicon is valid")
    }
}

impl Lexicon {
    pub fn empty(ignore_case: bool) -> Self {
        Lexicon {
            entries: Vec::new(),
            raw: Vec::new(),
            lines: Vec::new(),
            index: HashMap::new(),
            ignore_case,
            trailing_newline: true,
            source: None,
        }
    }

    fn key(&self, form: &str) -> String {
        if self.ignore_case {
            form.to_lowercase()
        } else {
            form.to_string()
        }
    }

    pub fn parse(text: &str, ignore_case: bool) -> Result<Self, LexiconError> {
        let mut lex = Lexicon::empty(ignore_case);
        if text.is_empty() {
            return Ok(lex);
        }
        lex.trailing_newline = text.ends_with('\n');
        let body = text.strip_suffix('\n').unwrap_or(text);
        for (i, line) in body.split('\n').enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                lex.lines.push(Line::Raw(line.to_string()));
                continue;
            }
            let cols: Vec<&str> = line.trim_end_matches('\r').split('\t').collect();
            if !(3..=4).contains(&cols.len()) || cols[0].is_empty() {
                return Err(LexiconError::Syntax {
                    line: i + 1,
                    reason: format!("expected 3 or 4 tab-separated fields, found {}", cols.len()),
                });
            }
            let phenomenon = cols[2]
                .parse()
                .map_err(|reason| LexiconError::Syntax { line: i + 1, reason })?;
            let entry = LexEntry {
                form: cols[0].to_string(),
                expansion: cols[1].to_string(),
                phenomenon,
                upos_hint: cols.get(3).map(|s| s.to_string()),
            };
            let k = lex.key(&entry.form);
            if lex.index.contains_key(&k) {
                return Err(LexiconError::Syntax {
                    line: i + 1,
                    reason: format!("duplicate form `{}`", entry.form),
                });
            }
            lex.index.insert(k, lex.entries.len());
            lex.lines.push(Line::Entry(lex.entries.len()));
            lex.entries.push(entry);
            lex.raw.push(line.to_string());
        }
        Ok(lex)
    }

    pub fn load(path: &Path, ignore_case: bool) -> Result<Self, LexiconError> {
        let text = std::fs::read_to_string(path).map_err(|source| LexiconError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let mut lex = Lexicon::parse(&text, ignore_case)?;
        lex.source = Some(path.to_path_buf());
        Ok(lex)
    }

    /// Serializes the lexicon; a loaded file comes back byte-identical.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, l) in self.lines.iter().enumerate() {
            if n > 0 {
                out.push('\n');
            }
            match l {
                Line::Raw(s) => out.push_str(s),
                Line::Entry(i) => out.push_str(&self.raw[*i]),
            }
        }
        if self.trailing_newline && !self.lines.is_empty() {
            out.push('\n');
        }
        out
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_text())
    }

    /// Adds or replaces an entry.
    pub fn insert(&mut self, entry: LexEntry) {
        let mut line = format!("{}\t{}\t{}", entry.form, entry.expansion, entry.phenomenon);
        if let Some(u) = &entry.upos_hint {
            line.push('\t');
            line.push_str(u);
        }
        let k = self.key(&entry.form);
        match self.index.get(&k) {
            Some(&i) => {
                self.entries[i] = entry;
                self.raw[i] = line;
            }
            None => {
                self.index.insert(k, self.entries.len());
                self.lines.push(Line::Entry(self.entries.len()));
                self.entries.push(entry);
                self.raw.push(line);
            }
        }
    }

    /// Adds every entry of `other`, later entries winning.
    pub fn extend(&mut self, other: &Lexicon) {
        for e in &other.entries {
            self.insert(e.clone());
        }
    }

    pub fn get(&self, form: &str) -> Option<&LexEntry> {
        self.index.get(&self.key(form)).map(|&i| &self.entries[i])
    }

    pub fn entries(&self) -> &[LexEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub full_form: String,
    pub phenomenon: Phenomenon,
}

/// Exact lookup, case-folded when the lexicon was loaded that way.
pub fn lookup_abbreviation(form: &str, lexicon: &Lexicon) -> Option<Expansion> {
    lexicon.get(form).map(|e| Expansion {
        full_form: e.expansion.clone(),
        phenomenon: e.phenomenon,
    })
}
