//! Surface-form analysis shared by the lint rules: token classes, stretched
//! spellings, lexicon lookups and punctuation lemmas.

mod classify;
mod lexicon;
mod punct;
mod stretch;

pub use classify::{classify_token, classify_token_with, ClassifyOptions, TokenClass, DEFAULT_MARKUP};
pub use lexicon::{
    lookup_abbreviation, Expansion, LexEntry, Lexicon, LexiconError, Phenomenon, DEFAULT_LEXICON,
};
pub use punct::{is_punct_char, is_reduplicated_punct, punct_lemma};
pub use stretch::{collapse_stretch, Confidence, NormCandidate};
