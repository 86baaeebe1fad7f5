use std::fmt;
use std::str::FromStr;

use crate::conllu_model::TokenId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Severity {
    Error,
    Warning,
    Info,
}

impl Severity {
    pub fn as_str(&self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
            Severity::Info => "info",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

macro_rules! rule_ids {
    ($($var:ident => $id:literal, $phen:literal, $sev:ident, $fix:literal;)+) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum RuleId { $($var),+ }

        /// Every rule, in catalog order.
        pub const RULES: &[Rule] = &[
            $(Rule { id: RuleId::$var, phenomenon: $phen, default_severity: Severity::$sev, fixable: $fix }),+
        ];

        impl RuleId {
            pub fn as_str(&self) -> &'static str {
                match self { $(RuleId::$var => $id),+ }
            }
        }

        impl FromStr for RuleId {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($id => Ok(RuleId::$var),)+
                    _ => Err(format!("unknown rule `{s}`")),
                }
            }
        }
    };
}

rule_ids! {
    Tree01 => "R-TREE-01", "Tree structure", Error, false;
    Vocab01 => "R-VOCAB-01", "Controlled vocabularies", Error, false;
    Hash01 => "R-HASH-01", "Hashtags", Error, true;
    Hash02 => "R-HASH-02", "Hashtags", Error, true;
    Ment01 => "R-MENT-01", "At-mentions", Error, true;
    Ment02 => "R-MENT-02", "At-mentions", Warning, false;
    Url01 => "R-URL-01", "URLs", Error, true;
    Url02 => "R-URL-02", "URLs", Error, true;
    Pict01 => "R-PICT-01", "Pictograms/Emoticons", Error, false;
    Pict02 => "R-PICT-02", "Pictograms/Emoticons", Error, false;
    Rt01 => "R-RT-01", "RTs", Error, true;
    Rt02 => "R-RT-02", "RTs", Error, false;
    Markup01 => "R-MARKUP-01", "Markup symbols", Error, true;
    Goeswith01 => "R-GOESWITH-01", "Oversplitting", Error, true;
    Cs01 => "R-CS-01", "Code-switching", Error, false;
    Cs02 => "R-CS-02", "Code-switching", Error, false;
    Noncan01 => "R-NONCAN-01", "Non-canonical forms", Error, false;
    Noncan02 => "R-NONCAN-02", "Spelling errors, abbreviations, contractions", Warning, false;
    Punct01 => "R-PUNCT-01", "Punctuation reduplication", Error, true;
    Emot01 => "R-EMOT-01", "Pictograms/Emoticons", Warning, true;
    Sent01 => "R-SENT-01", "Sentence boundaries", Error, false;
    Disf01 => "R-DISF-01", "Disfluencies", Error, false;
    Disf02 => "R-DISF-02", "Disfluencies", Error, false;
    Orph01 => "R-ORPH-01", "Ellipsis", Warning, false;
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Catalog entry. `default_severity` is the most severe level the rule emits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub id: RuleId,
    pub phenomenon: &'static str,
    pub default_severity: Severity,
    pub fixable: bool,
}

/// A deterministic edit attached to a diagnostic. Word indices refer to the
/// sentence the diagnostic was produced on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Fix {
    SetUpos { word: usize, value: String },
    SetLemma { word: usize, value: String },
    ClearFeats { word: usize },
    SetDeprel { word: usize, value: String },
    SetMisc { word: usize, key: String, value: String },
    /// Replaces one token by one token per part.
    SplitEmoticon { word: usize, parts: Vec<String> },
}

impl Fix {
    pub fn word(&self) -> usize {
        match self {
            Fix::SetUpos { word, .. }
            | Fix::SetLemma { word, .. }
            | Fix::ClearFeats { word }
            | Fix::SetDeprel { word, .. }
            | Fix::SetMisc { word, .. }
            | Fix::SplitEmoticon { word, .. } => *word,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Fix::SetUpos { value, .. } => format!("UPOS -> {value}"),
            Fix::SetLemma { value, .. } => format!("LEMMA -> {value}"),
            Fix::ClearFeats { .. } => "FEATS -> _".to_string(),
            Fix::SetDeprel { value, .. } => format!("DEPREL -> {value}"),
            Fix::SetMisc { key, value, .. } => format!("MISC {key}={value}"),
            Fix::SplitEmoticon { parts, .. } => format!("split into {}", parts.join(" + ")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub rule: RuleId,
    pub severity: Severity,
    pub sent_id: Option<String>,
    pub token: Option<TokenId>,
    pub message: String,
    pub fix: Option<Fix>,
}

impl Diagnostic {
    pub fn fix_available(&self) -> bool {
        self.fix.is_some()
    }
}
