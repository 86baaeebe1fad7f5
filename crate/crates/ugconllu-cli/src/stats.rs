use std::collections::BTreeMap;

use ugconllu::conllu_model::{Sentence, TokenId};
use ugconllu::normalizer::{classify_token, Lexicon, TokenClass};
use ugconllu::tree_algebra::{build_graph, goeswith_spans, SENTENCE_REL};

use crate::args::Format;

/// Counters always reported, even when zero.
const FIXED: &[&str] = &[
    "files",
    "sentences",
    "tokens",
    "multiword_tokens",
    "hashtags",
    "mentions",
    "urls",
    "emoticons",
    "rt",
    "markup",
    "foreign",
    "goeswith_spans",
    "units",
    "lexicon_hits",
];

/// Corpus counts keyed by name; histograms use `noncan:<value>` and
/// `cstype:<value>` keys.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stats(pub BTreeMap<String, usize>);

impl Default for Stats {
    fn default() -> Self {
        Stats(FIXED.iter().map(|k| (k.to_string(), 0)).collect())
    }
}

impl Stats {
    fn bump(&mut self, key: &str) {
        *self.0.entry(key.to_string()).or_insert(0) += 1;
    }

    pub fn get(&self, key: &str) -> usize {
        self.0.get(key).copied().unwrap_or(0)
    }

    pub fn merge(&mut self, other: &Stats) {
        for (k, v) in &other.0 {
            *self.0.entry(k.clone()).or_insert(0) += v;
        }
    }

    pub fn file(sentences: &[Sentence], lexicon: &Lexicon) -> Stats {
        let mut st = Stats::default();
        st.bump("files");
        for s in sentences {
            st.add_sentence(s, lexicon);
        }
        st
    }

    fn add_sentence(&mut self, s: &Sentence, lexicon: &Lexicon) {
        self.bump("sentences");
        self.bump("units");
        for t in &s.tokens {
            if matches!(t.id, TokenId::Range(..)) {
                self.bump("multiword_tokens");
            }
        }
        for (_, t) in s.words() {
            self.bump("tokens");
            match classify_token(&t.form) {
                TokenClass::Hashtag => self.bump("hashtags"),
                TokenClass::Mention => self.bump("mentions"),
                TokenClass::Url => self.bump("urls"),
                TokenClass::Emoticon => self.bump("emoticons"),
                TokenClass::Rt => self.bump("rt"),
                TokenClass::Markup => self.bump("markup"),
                TokenClass::Plain => {}
            }
            if t.get_feat("Foreign") == Some("Yes") || t.get_misc("Foreign") == Some("Yes") {
                self.bump("foreign");
            }
            if let Some(v) = t.get_misc("NonCan") {
                self.bump(&format!("noncan:{v}"));
            }
            if let Some(v) = t.get_misc("CSType") {
                self.bump(&format!("cstype:{v}"));
            }
            if t.deprel == SENTENCE_REL {
                self.bump("units");
            }
            if lexicon.get(&t.form).is_some() {
                self.bump("lexicon_hits");
            }
        }
        if let Ok(g) = build_graph(s) {
            for _ in goeswith_spans(&g) {
                self.bump("goeswith_spans");
            }
        }
    }

    pub fn render(&self, format: Format) -> String {
        let width = self.0.keys().map(|k| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.0 {
            match format {
                Format::Tsv => out.push_str(&format!("{k}\t{v}\n")),
                Format::Human => out.push_str(&format!("{k:<width$}  {v:>8}\n")),
            }
        }
        out
    }
}
