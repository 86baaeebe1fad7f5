use std::collections::HashSet;

use thiserror::Error;

use super::sentence::{meta_pair, SourceSpan, Sentence};
use super::token::{Feats, Misc, Token, TokenId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected 10 tab-separated fields, found {0}")]
    FieldCount(usize),
    #[error("invalid ID `{0}`")]
    BadId(String),
    #[error("invalid HEAD `{0}`")]
    BadHead(String),
    #[error("HEAD {head} out of range for a sentence of {words} words")]
    HeadOutOfRange { head: usize, words: usize },
    #[error("duplicate word index {0}")]
    DuplicateIndex(usize),
    #[error("word index {found} where {expected} was expected")]
    NonConsecutive { expected: usize, found: usize },
    #[error("multiword range {0} overlaps a previous range")]
    OverlappingRange(String),
    #[error("multiword range {0} does not cover existing words")]
    RangeOutOfBounds(String),
    #[error("multiword token {0} must leave LEMMA..DEPS as `_`")]
    RangeColumns(String),
    #[error("HEAD 0 requires DEPREL root and vice versa (word {0})")]
    RootMismatch(usize),
    #[error("bad FEATS: {0}")]
    Feats(String),
    #[error("bad MISC: {0}")]
    Misc(String),
    #[error("duplicate `{0}` metadata")]
    DuplicateMeta(String),
    #[error("comment line inside a token block")]
    CommentAfterTokens,
    #[error("sentence without word lines")]
    EmptySentence,
    #[error("sentence not followed by exactly one blank line")]
    MissingBlankLine,
    #[error("input is not valid UTF-8")]
    NotUtf8,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn err<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

/// Parses canonical decimal: no sign, no leading zeros.
fn num(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0'))
    {
        return None;
    }
    s.parse().ok()
}

fn parse_id(s: &str) -> Option<TokenId> {
    if let Some((a, b)) = s.split_once('-') {
        let (a, b) = (num(a)?, num(b)?);
        return (a >= 1 && a < b).then_some(TokenId::Range(a, b));
    }
    if let Some((a, b)) = s.split_once('.') {
        let (a, b) = (num(a)?, num(b)?);
        return (b >= 1).then_some(TokenId::Empty(a, b));
    }
    let i = num(s)?;
    (i >= 1).then_some(TokenId::Word(i))
}

fn parse_row(line: &str, lineno: usize) -> Result<Token, ParseError> {
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() != 10 {
        return err(lineno, ParseErrorKind::FieldCount(cols.len()));
    }
    let id = parse_id(cols[0]).ok_or_else(|| ParseError {
        line: lineno,
        kind: ParseErrorKind::BadId(cols[0].to_string()),
    })?;
    let head = match cols[6] {
        "_" => None,
        h => Some(num(h).ok_or_else(|| ParseError {
            line: lineno,
            kind: ParseErrorKind::BadHead(h.to_string()),
        })?),
    };
    let feats = Feats::parse(cols[5]).map_err(|e| ParseError {
        line: lineno,
        kind: ParseErrorKind::Feats(e),
    })?;
    let misc = Misc::parse(cols[9]).map_err(|e| ParseError {
        line: lineno,
        kind: ParseErrorKind::Misc(e),
    })?;
    let tok = Token {
        id,
        form: cols[1].to_string(),
        lemma: cols[2].to_string(),
        upos: cols[3].to_string(),
        xpos: cols[4].to_string(),
        feats,
        head,
        deprel: cols[7].to_string(),
        deps: cols[8].to_string(),
        misc,
    };
    match tok.id {
        TokenId::Range(..) => {
            let blank = cols[2..9].iter().all(|c| *c == "_");
            if !blank {
                return err(lineno, ParseErrorKind::RangeColumns(tok.id.to_string()));
            }
        }
        TokenId::Empty(..) => {
            if tok.head.is_some() {
                return err(lineno, ParseErrorKind::BadHead(cols[6].to_string()));
            }
        }
        TokenId::Word(i) => {
            if let Some(h) = tok.head {
                if tok.deprel != "_" && (h == 0) != (tok.deprel_base() == "root") {
                    return err(lineno, ParseErrorKind::RootMismatch(i));
                }
            }
        }
    }
    Ok(tok)
}

/// Checks the sentence-level invariants once all rows are in.
fn check_sentence(s: &Sentence, token_lines: &[usize]) -> Result<(), ParseError> {
    let n = s.word_count();
    if n == 0 {
        return err(s.source.start_line, ParseErrorKind::EmptySentence);
    }
    let mut expected = 1;
    let mut seen = HashSet::new();
    let mut last_range_end = 0;
    for (t, &line) in s.tokens.iter().zip(token_lines) {
        match t.id {
            TokenId::Word(i) => {
                if !seen.insert(i) {
                    return err(line, ParseErrorKind::DuplicateIndex(i));
                }
                if i != expected {
                    return err(line, ParseErrorKind::NonConsecutive { expected, found: i });
                }
                expected += 1;
                if let Some(h) = t.head {
                    if h > n {
                        return err(line, ParseErrorKind::HeadOutOfRange { head: h, words: n });
                    }
                }
            }
            TokenId::Range(a, b) => {
                if a <= last_range_end || a != expected {
                    return err(line, ParseErrorKind::OverlappingRange(t.id.to_string()));
                }
                if b > n {
                    return err(line, ParseErrorKind::RangeOutOfBounds(t.id.to_string()));
                }
                last_range_end = b;
            }
            TokenId::Empty(major, _) => {
                if major + 1 != expected {
                    return err(line, ParseErrorKind::BadId(t.id.to_string()));
                }
            }
        }
    }
    Ok(())
}

/// Parses a CoNLL-U document. Each sentence must be followed by exactly one
/// blank line; `\r\n` terminators are accepted and dropped.
pub fn parse_document(input: &str) -> Result<Vec<Sentence>, ParseError> {
    parse_document_from(input, None)
}

pub fn parse_bytes(input: &[u8]) -> Result<Vec<Sentence>, ParseError> {
    let text = std::str::from_utf8(input).map_err(|_| ParseError {
        line: 0,
        kind: ParseErrorKind::NotUtf8,
    })?;
    parse_document(text)
}

/// Like [`parse_document`], recording `file` in every sentence's source span.
pub fn parse_document_from(input: &str, file: Option<&str>) -> Result<Vec<Sentence>, ParseError> {
    let mut out = Vec::new();
    if input.is_empty() {
        return Ok(out);
    }
    let body = match input.strip_suffix('\n') {
        Some(b) => b,
        None => {
            let lines = input.split('\n').count();
            return err(lines, ParseErrorKind::MissingBlankLine);
        }
    };
    let mut cur = Sentence::default();
    let mut token_lines: Vec<usize> = Vec::new();
    let mut open = false;
    for (idx, raw) in body.split('\n').enumerate() {
        let lineno = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.is_empty() {
            if !open {
                return err(lineno, ParseErrorKind::MissingBlankLine);
            }
            cur.source.end_line = lineno - 1;
            check_sentence(&cur, &token_lines)?;
            out.push(std::mem::take(&mut cur));
            token_lines.clear();
            open = false;
            continue;
        }
        if !open {
            open = true;
            cur.source = SourceSpan {
                file: file.map(str::to_string),
                start_line: lineno,
                end_line: lineno,
            };
        }
        if line.starts_with('#') {
            if !cur.tokens.is_empty() {
                return err(lineno, ParseErrorKind::CommentAfterTokens);
            }
            if let Some((k, _)) = meta_pair(line) {
                if (k == "sent_id" || k == "text") && cur.meta(k).is_some() {
                    return err(lineno, ParseErrorKind::DuplicateMeta(k.to_string()));
                }
            }
            cur.metadata.push(line.to_string());
        } else {
            cur.tokens.push(parse_row(line, lineno)?);
            token_lines.push(lineno);
        }
    }
    if open {
        return err(cur.source.start_line, ParseErrorKind::MissingBlankLine);
    }
    Ok(out)
}
