//! In-memory CoNLL-U: tokens, sentences, a parser and a byte-exact serializer,
//! plus the closed vocabularies used by the UGC annotation rules.

mod parse;
mod sentence;
mod token;
mod vocab;
mod write;

pub use parse::{parse_bytes, parse_document, parse_document_from, ParseError, ParseErrorKind};
pub use sentence::{meta_pair, Sentence, SourceSpan};
pub use token::{Feats, Misc, MiscEntry, Token, TokenId};
pub use vocab::{
    CsType, Mode, NonCan, UnknownValue, Upos, Vocabulary, DEFAULT_SUBTYPES, UGC_FEATS, UGC_MISC,
    UNIVERSAL_RELATIONS,
};
pub use write::{serialize_document, write_sentence};

pub fn get_feat<'a>(token: &'a Token, key: &str) -> Option<&'a str> {
    token.feats.get(key)
}

pub fn get_misc<'a>(token: &'a Token, key: &str) -> Option<&'a str> {
    token.misc.get(key)
}
