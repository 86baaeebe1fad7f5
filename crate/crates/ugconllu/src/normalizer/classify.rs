use crate::ugc_lint::emoticon::is_emoticon;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TokenClass {
    Hashtag,
    Mention,
    Url,
    Emoticon,
    Rt,
    Markup,
    Plain,
}

impl TokenClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            TokenClass::Hashtag => "hashtag",
            TokenClass::Mention => "mention",
            TokenClass::Url => "url",
            TokenClass::Emoticon => "emoticon",
            TokenClass::Rt => "rt",
            TokenClass::Markup => "markup",
            TokenClass::Plain => "plain",
        }
    }
}

/// Options for [`classify_token_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Match `RT` regardless of case.
    pub rt_ignore_case: bool,
    /// Extra markup forms beyond the symbol-run pattern.
    pub markup: Vec<String>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            rt_ignore_case: false,
            markup: DEFAULT_MARKUP.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// Markup forms known out of the box.
pub const DEFAULT_MARKUP: &[&str] = &["+++", "==>", ">>", "<<", "***", "->", "-->", "=>", "|", "~~"];

const MARKUP_CHARS: &[char] = &['+', '=', '<', '>', '*', '~', '|', '^', '-'];

fn word_chars(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_')
}

fn is_url(form: &str) -> bool {
    let rest = if let Some((scheme, rest)) = form.split_once("://") {
        let mut cs = scheme.chars();
        let ok = cs.next().is_some_and(|c| c.is_ascii_alphabetic())
            && cs.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '.' | '-'));
        if !ok {
            return false;
        }
        rest
    } else if let Some(rest) = form.strip_prefix("www.").or_else(|| form.strip_prefix("WWW.")) {
        rest
    } else {
        return false;
    };
    let host = rest.split(['/', '?', '#']).next().unwrap_or("");
    let host = host.rsplit_once('@').map_or(host, |(_, h)| h);
    let host = host.split_once(':').map_or(host, |(h, _)| h);
    !host.is_empty()
        && !host.starts_with(['.', '-'])
        && host
            .chars()
            .all(|c| c.is_alphanumeric() || c == '-' || c == '.')
        && !form.chars().any(char::is_whitespace)
}

fn is_markup(form: &str, extra: &[String]) -> bool {
    if extra.iter().any(|m| m == form) {
        return true;
    }
    form.chars().count() >= 2
        && form.chars().all(|c| MARKUP_CHARS.contains(&c))
        && form.chars().any(|c| c != '-')
}

/// Classifies a surface form with default options.
pub fn classify_token(form: &str) -> TokenClass {
    classify_token_with(form, &ClassifyOptions::default())
}

/// Exactly one class per form; earlier checks win.
pub fn classify_token_with(form: &str, opts: &ClassifyOptions) -> TokenClass {
    if is_url(form) {
        TokenClass::Url
    } else if form.strip_prefix('#').is_some_and(word_chars) {
        TokenClass::Hashtag
    } else if form.strip_prefix('@').is_some_and(word_chars) {
        TokenClass::Mention
    } else if form == "RT" || (opts.rt_ignore_case && form.eq_ignore_ascii_case("rt")) {
        TokenClass::Rt
    } else if is_emoticon(form) {
        TokenClass::Emoticon
    } else if is_markup(form, &opts.markup) {
        TokenClass::Markup
    } else {
        TokenClass::Plain
    }
}
