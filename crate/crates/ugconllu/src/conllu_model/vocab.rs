use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

macro_rules! closed_vocab {
    ($(#[$m:meta])* $name:ident, $err:literal, [$($var:ident),+ $(,)?]) => {
        $(#[$m])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name { $($var),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$var),+];

            pub fn as_str(&self) -> &'static str {
                match self { $($name::$var => stringify!($var)),+ }
            }
        }

        impl FromStr for $name {
            type Err = UnknownValue;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $(stringify!($var) => Ok($name::$var),)+
                    _ => Err(UnknownValue { vocabulary: $err, value: s.to_string() }),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }
    };
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("`{value}` is not a valid {vocabulary} value")]
pub struct UnknownValue {
    pub vocabulary: &'static str,
    pub value: String,
}

closed_vocab!(
    /// Universal part-of-speech tags.
    Upos, "UPOS",
    [ADJ, ADP, ADV, AUX, CCONJ, DET, INTJ, NOUN, NUM, PART, PRON, PROPN, PUNCT, SCONJ, SYM, VERB, X]
);

closed_vocab!(
    /// Values of the `NonCan` MISC attribute.
    NonCan, "NonCan",
    [AutoC, CharOm, Cont, Neo, OS, Phon, PuncVar, SpellVar, Stretch, Transl, Trunc, LexInno]
);

closed_vocab!(
    /// Values of the `CSType` MISC attribute.
    CsType, "CSType",
    [INTER, INTRA, MIXED]
);

/// The universal dependency relations (without subtypes).
pub const UNIVERSAL_RELATIONS: &[&str] = &[
    "acl", "advcl", "advmod", "amod", "appos", "aux", "case", "cc", "ccomp", "clf", "compound",
    "conj", "cop", "csubj", "dep", "det", "discourse", "dislocated", "expl", "fixed", "flat",
    "goeswith", "iobj", "list", "mark", "nmod", "nsubj", "nummod", "obj", "obl", "orphan",
    "parataxis", "punct", "reparandum", "root", "vocative", "xcomp",
];

/// Subtyped relations known out of the box.
pub const DEFAULT_SUBTYPES: &[&str] = &[
    "parataxis:sentence",
    "parataxis:hashtag",
    "parataxis:url",
    "vocative:mention",
    "flat:foreign",
    "flat:name",
    "acl:relcl",
    "discourse:context",
    "aux:pass",
    "nsubj:pass",
    "csubj:pass",
    "obl:tmod",
    "obl:npmod",
    "nmod:poss",
    "nmod:tmod",
    "det:poss",
    "compound:prt",
    "cc:preconj",
    "expl:pv",
];

/// FEATS keys the UGC guidelines rely on.
pub const UGC_FEATS: &[&str] = &["Abbr", "Typo", "Foreign", "Style"];

/// MISC keys the UGC guidelines rely on.
pub const UGC_MISC: &[&str] = &[
    "NonCan",
    "CorrectForm",
    "FullForm",
    "CorrectSpaceAfter",
    "CSType",
    "LangID",
    "FuncPOS",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    Strict,
    #[default]
    Lenient,
}

#[derive(Debug, Clone)]
pub struct Vocabulary {
    pub mode: Mode,
    pub deprel_subtypes: BTreeSet<String>,
}

impl Default for Vocabulary {
    fn default() -> Self {
        Vocabulary {
            mode: Mode::Lenient,
            deprel_subtypes: DEFAULT_SUBTYPES.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl Vocabulary {
    pub fn is_upos(&self, tag: &str) -> bool {
        tag.parse::<Upos>().is_ok()
    }

    pub fn is_noncan(&self, value: &str) -> bool {
        value.parse::<NonCan>().is_ok()
    }

    pub fn is_cstype(&self, value: &str) -> bool {
        value.parse::<CsType>().is_ok()
    }

    /// Lenient mode accepts any label; strict mode needs a universal base and,
    /// for subtyped labels, a registered subtype.
    pub fn accepts_deprel(&self, label: &str) -> bool {
        if self.mode == Mode::Lenient {
            return true;
        }
        match label.split_once(':') {
            None => UNIVERSAL_RELATIONS.contains(&label),
            Some((base, _)) => {
                UNIVERSAL_RELATIONS.contains(&base) && self.deprel_subtypes.contains(label)
            }
        }
    }

    pub fn register_subtype(&mut self, label: &str) {
        self.deprel_subtypes.insert(label.to_string());
    }
}
