/// Characters that can make up reduplicated punctuation.
const PUNCT: &[char] = &['!', '?', '.', ',', ';', ':', '¡', '¿', '…', '‽'];

pub fn is_punct_char(c: char) -> bool {
    PUNCT.contains(&c)
}

/// A single token of repeated punctuation, possibly with stray `1`s from a
/// missed shift key (`!!!1!`). Canonical `...` is excluded.
pub fn is_reduplicated_punct(form: &str) -> bool {
    if form == "..." {
        return false;
    }
    let chars: Vec<char> = form.chars().collect();
    let puncts: Vec<char> = chars.iter().copied().filter(|&c| is_punct_char(c)).collect();
    chars.len() >= 2
        && chars.iter().all(|&c| is_punct_char(c) || c == '1')
        && is_punct_char(chars[0])
        && puncts
            .iter()
            .enumerate()
            .any(|(i, c)| puncts[..i].contains(c))
}

/// Lemma for repeated punctuation: the repeating unit of one or two
/// characters when the form is `(ab)+a?`, otherwise the form itself.
pub fn punct_lemma(form: &str) -> String {
    let chars: Vec<char> = form.chars().collect();
    for unit in 1..=2 {
        if chars.len() < unit || !chars[..unit].iter().all(|&c| is_punct_char(c)) {
            continue;
        }
        if unit == 2 && chars[0] == chars[1] {
            continue;
        }
        let tiles = chars.iter().enumerate().all(|(i, &c)| c == chars[i % unit]);
        let whole = chars.len() % unit == 0 || unit == 2;
        if tiles && whole {
            return chars[..unit].iter().collect();
        }
    }
    form.to_string()
}
