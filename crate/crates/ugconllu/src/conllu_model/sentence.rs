use super::token::{Token, TokenId};

/// Where a sentence came from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SourceSpan {
    pub file: Option<String>,
    /// 1-based line of the first metadata or token row.
    pub start_line: usize,
    pub end_line: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Sentence {
    /// Comment lines, verbatim, including the leading `#`.
    pub metadata: Vec<String>,
    pub tokens: Vec<Token>,
    pub source: SourceSpan,
}

/// Splits `# key = value` into its parts.
pub fn meta_pair(line: &str) -> Option<(&str, &str)> {
    let body = line.strip_prefix('#')?;
    let (k, v) = body.split_once('=')?;
    let k = k.trim();
    if k.is_empty() || k.contains(char::is_whitespace) {
        return None;
    }
    Some((k, v.trim()))
}

impl Sentence {
    pub fn new(tokens: Vec<Token>) -> Self {
        Sentence {
            tokens,
            ..Default::default()
        }
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .filter_map(|l| meta_pair(l))
            .find(|(k, _)| *k == key)
            .map(|(_, v)| v)
    }

    /// Replaces an existing `# key = ...` line in place, else inserts after `sent_id`
    /// (or at the end).
    pub fn set_meta(&mut self, key: &str, value: &str) {
        let line = format!("# {key} = {value}");
        if let Some(i) = self
            .metadata
            .iter()
            .position(|l| meta_pair(l).is_some_and(|(k, _)| k == key))
        {
            self.metadata[i] = line;
            return;
        }
        let at = self
            .metadata
            .iter()
            .position(|l| meta_pair(l).is_some_and(|(k, _)| k == "sent_id"))
            .map(|i| i + 1)
            .unwrap_or(self.metadata.len());
        self.metadata.insert(at, line);
    }

    pub fn sent_id(&self) -> Option<&str> {
        self.meta("sent_id")
    }

    pub fn text(&self) -> Option<&str> {
        self.meta("text")
    }

    pub fn words(&self) -> impl Iterator<Item = (usize, &Token)> {
        self.tokens
            .iter()
            .filter_map(|t| t.id.word().map(|i| (i, t)))
    }

    pub fn word_count(&self) -> usize {
        self.tokens.iter().filter(|t| t.id.is_word()).count()
    }

    /// Position in `tokens` of each word: `pos[i - 1]` holds word `i`.
    pub fn word_positions(&self) -> Vec<usize> {
        self.tokens
            .iter()
            .enumerate()
            .filter(|(_, t)| t.id.is_word())
            .map(|(p, _)| p)
            .collect()
    }

    pub fn word(&self, index: usize) -> Option<&Token> {
        if index == 0 {
            return None;
        }
        self.tokens
            .iter()
            .skip(index - 1)
            .find(|t| t.id == TokenId::Word(index))
    }

    pub fn word_mut(&mut self, index: usize) -> Option<&mut Token> {
        if index == 0 {
            return None;
        }
        self.tokens
            .iter_mut()
            .skip(index - 1)
            .find(|t| t.id == TokenId::Word(index))
    }

    /// Surface string rebuilt from forms: multiword tokens replace their words,
    /// and a space follows every token unless its MISC has `SpaceAfter=No`.
    pub fn surface_text(&self) -> String {
        let mut out = String::new();
        let mut covered_to = 0;
        let mut pending_space = false;
        for t in &self.tokens {
            let take = match t.id {
                TokenId::Range(s, e) => {
                    covered_to = e;
                    s > 0
                }
                TokenId::Word(i) => i > covered_to,
                TokenId::Empty(..) => false,
            };
            if !take {
                continue;
            }
            if pending_space {
                out.push(' ');
            }
            out.push_str(&t.form);
            pending_space = t.space_after();
        }
        out
    }

    /// Rewrites the `text` metadata from the forms, if a `text` line exists.
    pub fn refresh_text(&mut self) {
        if self.text().is_some() {
            let text = self.surface_text();
            self.set_meta("text", &text);
        }
    }
}
