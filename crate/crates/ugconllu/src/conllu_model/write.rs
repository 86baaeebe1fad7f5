use std::fmt::Write;

use super::sentence::Sentence;

pub fn write_sentence(out: &mut String, s: &Sentence) {
    for m in &s.metadata {
        out.push_str(m);
        out.push('\n');
    }
    for t in &s.tokens {
        let _ = writeln!(out, "{t}");
    }
    out.push('\n');
}

/// Serializes sentences with `\n` terminators and one blank line after each.
pub fn serialize_document(sentences: &[Sentence]) -> String {
    let mut out = String::new();
    for s in sentences {
        write_sentence(&mut out, s);
    }
    out
}
