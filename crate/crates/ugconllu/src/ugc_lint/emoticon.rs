//! Emoticon and pictogram recognition.
//!
//! Faces are `eyes? nose? mouth+` with at least one of eyes or nose present and
//! the mouth repeated with a single character (`:)))`, `:]]`). Hearts are `<3`
//! repeated. Pictograms are emoji code points with their modifiers.

const EYES: &[char] = &[':', ';', '8', 'x', 'X', '='];
const NOSES: &[char] = &['-', '^', 'o', '\''];
const MOUTHS: &[char] = &[')', '(', ']', '[', 'D', 'P', 'p', 'O', 'o', '3', '/', '\\', '|', '*'];

fn is_pictograph(c: char) -> bool {
    matches!(c as u32,
        0x2300..=0x23FF | 0x2600..=0x27BF | 0x2B00..=0x2BFF | 0x1F000..=0x1FAFF)
        && !is_modifier(c)
}

fn is_modifier(c: char) -> bool {
    matches!(c as u32, 0xFE0E | 0xFE0F | 0x20E3 | 0x1F3FB..=0x1F3FF)
}

fn is_regional(c: char) -> bool {
    matches!(c as u32, 0x1F1E6..=0x1F1FF)
}

/// Byte length of the longest face starting at `s`.
fn face_len(s: &str) -> usize {
    let chars: Vec<(usize, char)> = s.char_indices().take(8).collect();
    let mut best = 0;
    for eyes in [false, true] {
        for nose in [false, true] {
            if !eyes && !nose {
                continue;
            }
            let mut k = 0;
            if eyes {
                match chars.get(k) {
                    Some((_, c)) if EYES.contains(c) => k += 1,
                    _ => continue,
                }
            }
            if nose {
                match chars.get(k) {
                    Some((_, c)) if NOSES.contains(c) => k += 1,
                    _ => continue,
                }
            }
            let mouth = match chars.get(k) {
                Some(&(_, c)) if MOUTHS.contains(&c) => c,
                _ => continue,
            };
            if !eyes && mouth.is_alphabetic() {
                continue;
            }
            let start = chars[k].0;
            let run = s[start..].chars().take_while(|&c| c == mouth).count();
            best = best.max(start + run * mouth.len_utf8());
        }
    }
    best
}

fn heart_len(s: &str) -> usize {
    let mut len = 0;
    while s[len..].starts_with("<3") {
        len += 2;
    }
    len
}

fn picto_len(s: &str) -> usize {
    let mut it = s.char_indices().peekable();
    let Some((_, first)) = it.next() else {
        return 0;
    };
    if is_regional(first) {
        return match it.next() {
            Some((i, c)) if is_regional(c) => i + c.len_utf8(),
            _ => first.len_utf8(),
        };
    }
    if !is_pictograph(first) {
        return 0;
    }
    let mut len = first.len_utf8();
    while let Some(&(i, c)) = it.peek() {
        if is_modifier(c) {
            len = i + c.len_utf8();
            it.next();
        } else if c == '\u{200D}' {
            it.next();
            match it.next() {
                Some((j, d)) if is_pictograph(d) => len = j + d.len_utf8(),
                _ => break,
            }
        } else {
            break;
        }
    }
    len
}

/// Splits `form` into emoticons by longest match. `None` unless the whole
/// form is consumed.
pub fn emoticon_recognizer(form: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut rest = form;
    while !rest.is_empty() {
        let len = face_len(rest).max(heart_len(rest)).max(picto_len(rest));
        if len == 0 {
            return None;
        }
        parts.push(&rest[..len]);
        rest = &rest[len..];
    }
    if parts.is_empty() {
        None
    } else {
        Some(parts)
    }
}

pub fn is_emoticon(form: &str) -> bool {
    emoticon_recognizer(form).is_some()
}

/// A single pictographic emoji (as opposed to an ASCII emoticon).
pub fn is_pictogram(form: &str) -> bool {
    !form.is_empty() && picto_len(form) == form.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faces() {
        assert_eq!(emoticon_recognizer(":):)"), Some(vec![":)", ":)"]));
        assert_eq!(emoticon_recognizer(":]]"), Some(vec![":]]"]));
        assert_eq!(emoticon_recognizer(":-)"), Some(vec![":-)"]));
        assert_eq!(emoticon_recognizer(":D"), Some(vec![":D"]));
        assert_eq!(emoticon_recognizer("xDDD"), Some(vec!["xDDD"]));
        assert_eq!(emoticon_recognizer("<3<3"), Some(vec!["<3<3"]));
        assert_eq!(emoticon_recognizer(";)<3"), Some(vec![";)", "<3"]));
    }

    #[test]
    fn non_faces() {
        assert_eq!(emoticon_recognizer("gonna"), None);
        assert_eq!(emoticon_recognizer(")"), None);
        assert_eq!(emoticon_recognizer("D"), None);
        assert_eq!(emoticon_recognizer(":)x"), None);
        assert_eq!(emoticon_recognizer(""), None);
        assert_eq!(emoticon_recognizer("3D"), None);
        assert_eq!(emoticon_recognizer("ooo"), None);
    }

    #[test]
    fn pictograms() {
        assert_eq!(emoticon_recognizer("☕"), Some(vec!["☕"]));
        assert_eq!(emoticon_recognizer("♥"), Some(vec!["♥"]));
        assert_eq!(emoticon_recognizer("☕☕"), Some(vec!["☕", "☕"]));
        assert_eq!(emoticon_recognizer("👍🏽"), Some(vec!["👍🏽"]));
        assert_eq!(emoticon_recognizer("❤️"), Some(vec!["❤️"]));
        assert!(is_pictogram("☕"));
        assert!(!is_pictogram(":)"));
    }
}
