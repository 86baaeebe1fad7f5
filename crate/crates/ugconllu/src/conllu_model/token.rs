use std::cmp::Ordering;
use std::fmt;

/// Value of the ID column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenId {
    /// A syntactic word, `1..=n`.
    Word(usize),
    /// A multiword token spanning words `start..=end`.
    Range(usize, usize),
    /// An empty node `major.minor`.
    Empty(usize, usize),
}

impl TokenId {
    pub fn word(&self) -> Option<usize> {
        match *self {
            TokenId::Word(i) => Some(i),
            _ => None,
        }
    }

    pub fn is_word(&self) -> bool {
        matches!(self, TokenId::Word(_))
    }
}

impl fmt::Display for TokenId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenId::Word(i) => write!(f, "{i}"),
            TokenId::Range(s, e) => write!(f, "{s}-{e}"),
            TokenId::Empty(a, b) => write!(f, "{a}.{b}"),
        }
    }
}

fn feat_order(a: &str, b: &str) -> Ordering {
    a.to_lowercase()
        .cmp(&b.to_lowercase())
        .then_with(|| a.cmp(b))
}

/// FEATS column: always kept sorted by key, case-insensitively.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Feats(Vec<(String, String)>);

impl Feats {
    pub fn new() -> Self {
        Feats(Vec::new())
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn insert(&mut self, key: &str, value: &str) {
        match self.0.binary_search_by(|(k, _)| feat_order(k, key)) {
            Ok(i) => self.0[i].1 = value.to_string(),
            Err(i) => self.0.insert(i, (key.to_string(), value.to_string())),
        }
    }

    pub fn remove(&mut self, key: &str) -> Option<String> {
        let i = self.0.iter().position(|(k, _)| k == key)?;
        Some(self.0.remove(i).1)
    }

    pub fn clear(&mut self) {
        self.0.clear();
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    /// Parses a FEATS column. Input must already be in canonical order.
    pub fn parse(col: &str) -> Result<Self, String> {
        if col == "_" {
            return Ok(Feats::new());
        }
        let mut out: Vec<(String, String)> = Vec::new();
        for item in col.split('|') {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| format!("feature `{item}` is not Key=Value"))?;
            if k.is_empty() || v.is_empty() {
                return Err(format!("feature `{item}` has an empty key or value"));
            }
            if let Some((prev, _)) = out.last() {
                match feat_order(prev, k) {
                    Ordering::Less => {}
                    Ordering::Equal => return Err(format!("duplicate feature `{k}`")),
                    Ordering::Greater => {
                        return Err(format!("features not sorted: `{prev}` before `{k}`"))
                    }
                }
            }
            out.push((k.to_string(), v.to_string()));
        }
        Ok(Feats(out))
    }
}

impl fmt::Display for Feats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("_");
        }
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl<K: AsRef<str>, V: AsRef<str>> FromIterator<(K, V)> for Feats {
    fn from_iter<T: IntoIterator<Item = (K, V)>>(iter: T) -> Self {
        let mut f = Feats::new();
        for (k, v) in iter {
            f.insert(k.as_ref(), v.as_ref());
        }
        f
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MiscEntry {
    pub key: String,
    /// `None` for flag entries written without `=`.
    pub value: Option<String>,
}

/// MISC column: order is preserved as read.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Misc(Vec<MiscEntry>);

impl Misc {
    pub fn new() -> Self {
        Misc(Vec::new())
    }

    /// Flag entries yield `Some("")`.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.0
            .iter()
            .find(|e| e.key == key)
            .map(|e| e.value.as_deref().unwrap_or(""))
    }

    pub fn contains(&self, key: &str) -> bool {
        self.0.iter().any(|e| e.key == key)
    }

    /// Replaces the first entry with this key, or appends.
    pub fn set(&mut self, key: &str, value: &str) {
        match self.0.iter_mut().find(|e| e.key == key) {
            Some(e) => e.value = Some(value.to_string()),
            None => self.0.push(MiscEntry {
                key: key.to_string(),
                value: Some(value.to_string()),
            }),
        }
    }

    pub fn remove(&mut self, key: &str) -> Option<MiscEntry> {
        let i = self.0.iter().position(|e| e.key == key)?;
        Some(self.0.remove(i))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[MiscEntry] {
        &self.0
    }

    pub fn parse(col: &str) -> Result<Self, String> {
        if col == "_" {
            return Ok(Misc::new());
        }
        col.split('|')
            .map(|item| {
                if item.is_empty() {
                    return Err("empty MISC entry".to_string());
                }
                Ok(match item.split_once('=') {
                    Some((k, v)) => MiscEntry {
                        key: k.to_string(),
                        value: Some(v.to_string()),
                    },
                    None => MiscEntry {
                        key: item.to_string(),
                        value: None,
                    },
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Misc)
    }
}

impl fmt::Display for Misc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("_");
        }
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            match &e.value {
                Some(v) => write!(f, "{}={}", e.key, v)?,
                None => f.write_str(&e.key)?,
            }
        }
        Ok(())
    }
}

/// One CoNLL-U row. Unspecified text columns hold `"_"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub id: TokenId,
    pub form: String,
    pub lemma: String,
    pub upos: String,
    pub xpos: String,
    pub feats: Feats,
    /// `None` when the column is `_`.
    pub head: Option<usize>,
    pub deprel: String,
    /// Enhanced dependencies, kept verbatim.
    pub deps: String,
    pub misc: Misc,
}

impl Token {
    /// A word row with every annotation column unspecified.
    pub fn word(index: usize, form: &str) -> Self {
        Token {
            id: TokenId::Word(index),
            form: form.to_string(),
            lemma: "_".into(),
            upos: "_".into(),
            xpos: "_".into(),
            feats: Feats::new(),
            head: None,
            deprel: "_".into(),
            deps: "_".into(),
            misc: Misc::new(),
        }
    }

    pub fn range(start: usize, end: usize, form: &str) -> Self {
        Token {
            id: TokenId::Range(start, end),
            ..Token::word(start, form)
        }
    }

    pub fn get_feat(&self, key: &str) -> Option<&str> {
        self.feats.get(key)
    }

    pub fn get_misc(&self, key: &str) -> Option<&str> {
        self.misc.get(key)
    }

    /// Relation without its subtype: `parataxis:hashtag` -> `parataxis`.
    pub fn deprel_base(&self) -> &str {
        self.deprel.split(':').next().unwrap_or("")
    }

    pub fn deprel_subtype(&self) -> Option<&str> {
        self.deprel.split_once(':').map(|(_, s)| s)
    }

    pub fn space_after(&self) -> bool {
        self.misc.get("SpaceAfter") != Some("No")
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = match self.head {
            Some(h) => h.to_string(),
            None => "_".to_string(),
        };
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.id,
            self.form,
            self.lemma,
            self.upos,
            self.xpos,
            self.feats,
            head,
            self.deprel,
            self.deps,
            self.misc
        )
    }
}
