use super::config::LintConfig;
use super::emoticon::emoticon_recognizer;
use super::rule::{Diagnostic, Fix, RuleId, Severity};
use crate::conllu_model::{Sentence, Token, TokenId};
use crate::normalizer::{classify_token_with, is_reduplicated_punct, punct_lemma, TokenClass};
use crate::tree_algebra::{build_graph, goeswith_spans, DepGraph, SENTENCE_REL};

/// Relations through which a word takes part in the clause structure.
const INTEGRATED: &[&str] = &[
    "nsubj", "obj", "iobj", "obl", "nmod", "amod", "advmod", "csubj", "ccomp", "xcomp", "advcl",
    "acl", "appos", "nummod", "compound", "conj", "det", "case", "cop", "aux", "mark", "expl",
    "orphan", "dislocated",
];

/// Core dependents that make a root count as integrated.
const CORE: &[&str] = &["nsubj", "obj", "iobj", "obl", "csubj", "ccomp", "xcomp"];

struct Ctx<'a> {
    s: &'a Sentence,
    g: &'a DepGraph<'a>,
    cfg: &'a LintConfig,
    classes: Vec<TokenClass>,
    out: Vec<Diagnostic>,
}

impl Ctx<'_> {
    fn tok(&self, i: usize) -> &Token {
        self.g.token(i)
    }

    fn emit(&mut self, rule: RuleId, sev: Severity, word: usize, message: String, fix: Option<Fix>) {
        let Some(severity) = self.cfg.level(rule, sev) else {
            return;
        };
        self.out.push(Diagnostic {
            rule,
            severity,
            sent_id: self.s.sent_id().map(String::from),
            token: Some(TokenId::Word(word)),
            message,
            fix,
        });
    }

    fn integrated(&self, i: usize) -> bool {
        let base = self.tok(i).deprel_base();
        INTEGRATED.contains(&base)
            || (base == "root"
                && self
                    .g
                    .children(i)
                    .iter()
                    .any(|&c| CORE.contains(&self.tok(c).deprel_base())))
    }

    fn attached_to_root(&self, i: usize) -> bool {
        self.g.head(i) == self.g.root()
    }
}

fn noncan_values(t: &Token) -> Vec<&str> {
    t.get_misc("NonCan")
        .map(|v| v.split(',').collect())
        .unwrap_or_default()
}

fn with_noncan(t: &Token, value: &str) -> String {
    match t.get_misc("NonCan") {
        Some(v) if !v.is_empty() => format!("{v},{value}"),
        _ => value.to_string(),
    }
}

fn set_upos(i: usize, v: &str) -> Option<Fix> {
    Some(Fix::SetUpos {
        word: i,
        value: v.into(),
    })
}

fn hashtags(c: &mut Ctx, i: usize) {
    let t = c.tok(i).clone();
    if t.upos != "X" {
        c.emit(RuleId::Hash01, Severity::Error, i, format!("hashtag `{}` must be UPOS X, not {}", t.form, t.upos), set_upos(i, "X"));
    }
    if t.deprel_base() == "parataxis" {
        let on_root = c.attached_to_root(i);
        if t.deprel == "parataxis:hashtag" && !on_root {
            c.emit(RuleId::Hash02, Severity::Error, i, "parataxis:hashtag must attach to the root".into(), None);
        } else if t.deprel != "parataxis:hashtag" && on_root {
            let fix = (t.deprel == "parataxis").then(|| Fix::SetDeprel {
                word: i,
                value: "parataxis:hashtag".into(),
            });
            c.emit(RuleId::Hash02, Severity::Error, i, format!("standalone hashtag should be parataxis:hashtag, not {}", t.deprel), fix);
        }
    } else if c.integrated(i) && !t.misc.contains("FuncPOS") {
        c.emit(RuleId::Hash02, Severity::Info, i, "integrated hashtag: MISC FuncPOS recommended".into(), None);
    }
}

fn mentions(c: &mut Ctx, i: usize) {
    let t = c.tok(i).clone();
    if t.upos != "PROPN" {
        c.emit(RuleId::Ment01, Severity::Error, i, format!("at-mention `{}` must be UPOS PROPN, not {}", t.form, t.upos), set_upos(i, "PROPN"));
    }
    let standalone = matches!(t.deprel_base(), "vocative" | "dep" | "discourse" | "parataxis");
    // plain vocative is also endorsed, so this is advice without an automatic fix
    if standalone && c.attached_to_root(i) && t.deprel != "vocative:mention" {
        c.emit(RuleId::Ment02, Severity::Warning, i, format!("standalone at-mention should be vocative:mention, not {}", t.deprel), None);
    }
}

fn urls(c: &mut Ctx, i: usize) {
    let t = c.tok(i).clone();
    if t.upos != "SYM" {
        c.emit(RuleId::Url01, Severity::Error, i, format!("URL must be UPOS SYM, not {}", t.upos), set_upos(i, "SYM"));
    }
    if c.g.head(i) == 0 || c.integrated(i) {
        return;
    }
    let accepted = t.deprel == "parataxis:url"
        || (c.cfg.url_alternatives && matches!(t.deprel.as_str(), "discourse:context" | "dep"));
    if !accepted || !c.attached_to_root(i) {
        let fix = (t.deprel == "parataxis" && c.attached_to_root(i)).then(|| Fix::SetDeprel {
            word: i,
            value: "parataxis:url".into(),
        });
        c.emit(RuleId::Url02, Severity::Error, i, format!("standalone URL should attach to the root as parataxis:url, found {}", t.deprel), fix);
    }
}

fn emoticons(c: &mut Ctx, i: usize) {
    let t = c.tok(i).clone();
    if t.deprel_base() == "discourse" {
        if t.upos != "SYM" {
            c.emit(RuleId::Pict01, Severity::Error, i, format!("discourse emoticon must be UPOS SYM, not {}", t.upos), None);
        }
        if !c.attached_to_root(i) {
            c.emit(RuleId::Pict01, Severity::Error, i, "discourse emoticon must attach to the root".into(), None);
        }
    } else if c.integrated(i) {
        if t.upos == "SYM" || t.upos == "_" {
            c.emit(RuleId::Pict02, Severity::Error, i, "integrated pictogram needs the UPOS of the word it replaces".into(), None);
        }
        if t.lemma == "_" || t.lemma == t.form {
            c.emit(RuleId::Pict02, Severity::Error, i, "integrated pictogram needs the lemma of the word it replaces".into(), None);
        }
    }
    if let Some(parts) = emoticon_recognizer(&t.form) {
        if parts.len() >= 2 {
            let in_range = c.s.tokens.iter().any(|r| matches!(r.id, TokenId::Range(a, b) if a <= i && i <= b));
            let splittable = !in_range && matches!(t.deprel_base(), "discourse" | "root");
            let fix = splittable.then(|| Fix::SplitEmoticon {
                word: i,
                parts: parts.iter().map(|p| p.to_string()).collect(),
            });
            c.emit(RuleId::Emot01, Severity::Warning, i, format!("`{}` concatenates {} emoticons", t.form, parts.len()), fix);
        }
    }
}

fn retweets(c: &mut Ctx, i: usize) {
    let t = c.tok(i).clone();
    if t.deprel_base() == "parataxis" {
        if t.upos != "SYM" {
            c.emit(RuleId::Rt01, Severity::Error, i, format!("standalone RT must be UPOS SYM, not {}", t.upos), set_upos(i, "SYM"));
        }
    } else if c.integrated(i) {
        if t.upos != "NOUN" && t.upos != "VERB" {
            c.emit(RuleId::Rt02, Severity::Error, i, format!("integrated RT must be NOUN or VERB, not {}", t.upos), None);
        }
        if t.get_feat("Abbr") != Some("Yes") {
            c.emit(RuleId::Rt02, Severity::Error, i, "integrated RT needs Abbr=Yes".into(), None);
        }
        if !t.misc.contains("FullForm") {
            c.emit(RuleId::Rt02, Severity::Warning, i, "integrated RT: MISC FullForm recommended".into(), None);
        }
    }
}

fn markup(c: &mut Ctx, i: usize) {
    let t = c.tok(i).clone();
    if t.upos != "SYM" {
        c.emit(RuleId::Markup01, Severity::Error, i, format!("markup symbol must be UPOS SYM, not {}", t.upos), set_upos(i, "SYM"));
    }
    if t.deprel != "punct" && c.g.head(i) != 0 {
        c.emit(RuleId::Markup01, Severity::Error, i, format!("markup symbol must attach with punct, not {}", t.deprel), None);
    }
}

fn punctuation(c: &mut Ctx, i: usize) {
    let t = c.tok(i).clone();
    if is_reduplicated_punct(&t.form) {
        if t.upos != "PUNCT" {
            c.emit(RuleId::Punct01, Severity::Error, i, format!("reduplicated punctuation must be UPOS PUNCT, not {}", t.upos), None);
        }
        let lemma = punct_lemma(&t.form);
        if t.lemma != lemma {
            c.emit(RuleId::Punct01, Severity::Error, i, format!("lemma of `{}` should be `{lemma}`", t.form), Some(Fix::SetLemma { word: i, value: lemma }));
        }
        if !noncan_values(&t).contains(&"PuncVar") {
            c.emit(RuleId::Punct01, Severity::Error, i, "reduplicated punctuation needs MISC NonCan=PuncVar".into(), Some(Fix::SetMisc { word: i, key: "NonCan".into(), value: with_noncan(&t, "PuncVar") }));
        }
    } else if t.form.chars().count() == 1
        && t.form.chars().all(crate::normalizer::is_punct_char)
        && !t.space_after()
        && i < c.g.len()
        && c.tok(i + 1).form == t.form
    {
        c.emit(RuleId::Punct01, Severity::Warning, i, format!("repeated `{}` split over several tokens", t.form), None);
    }
}

fn goeswith(c: &mut Ctx) {
    for span in goeswith_spans(c.g) {
        let h = span.head;
        if !span.head_first {
            c.emit(RuleId::Goeswith01, Severity::Error, h, "goeswith parts must follow their head".into(), None);
        }
        if !span.contiguous {
            c.emit(RuleId::Goeswith01, Severity::Error, h, "goeswith span is not contiguous".into(), None);
        }
        let head = c.tok(h).clone();
        if head.lemma == "_" || head.upos == "X" || head.upos == "_" {
            c.emit(RuleId::Goeswith01, Severity::Error, h, "first part must carry the lemma and UPOS of the whole word".into(), None);
        }
        if !noncan_values(&head).contains(&"OS") {
            c.emit(RuleId::Goeswith01, Severity::Error, h, "first part needs MISC NonCan=OS".into(), Some(Fix::SetMisc { word: h, key: "NonCan".into(), value: with_noncan(&head, "OS") }));
        }
        for &m in &span.members {
            let t = c.tok(m).clone();
            if t.upos != "X" {
                c.emit(RuleId::Goeswith01, Severity::Error, m, format!("goeswith part must be UPOS X, not {}", t.upos), set_upos(m, "X"));
            }
            if t.lemma != "_" {
                c.emit(RuleId::Goeswith01, Severity::Error, m, "goeswith part must have lemma `_`".into(), Some(Fix::SetLemma { word: m, value: "_".into() }));
            }
            if !t.feats.is_empty() {
                c.emit(RuleId::Goeswith01, Severity::Error, m, "goeswith part must have empty FEATS".into(), Some(Fix::ClearFeats { word: m }));
            }
        }
    }
}

fn code_switching(c: &mut Ctx, i: usize) {
    let t = c.tok(i).clone();
    if t.get_feat("Foreign") == Some("Yes") && !t.misc.contains("LangID") {
        c.emit(RuleId::Cs01, Severity::Error, i, "Foreign=Yes needs MISC LangID".into(), None);
    }
    if let Some(v) = t.get_misc("CSType") {
        if !c.cfg.vocabulary.is_cstype(v) {
            c.emit(RuleId::Cs01, Severity::Error, i, format!("CSType `{v}` not in INTER|INTRA|MIXED"), None);
        }
    }
    if t.deprel == "flat:foreign" {
        let h = c.g.head(i);
        if h > i || (h != 0 && c.tok(h).deprel == "flat:foreign") {
            c.emit(RuleId::Cs02, Severity::Error, i, "flat:foreign must attach to the first token of the foreign string".into(), None);
        }
    }
}

fn noncanonical(c: &mut Ctx, i: usize) {
    let t = c.tok(i).clone();
    let values = noncan_values(&t);
    for v in &values {
        if !c.cfg.vocabulary.is_noncan(v) {
            c.emit(RuleId::Noncan01, Severity::Error, i, format!("NonCan value `{v}` is not in the vocabulary"), None);
        }
    }
    let typo = t.get_feat("Typo") == Some("Yes");
    let abbr = t.get_feat("Abbr") == Some("Yes");
    let cont = values.contains(&"Cont");
    let mut wanted = Vec::new();
    if typo {
        wanted.push(("CorrectForm", "Typo=Yes"));
    }
    if abbr {
        wanted.push(("FullForm", "Abbr=Yes"));
    }
    if typo && cont {
        wanted.push(("CorrectSpaceAfter", "NonCan=Cont with Typo=Yes"));
    }
    for (key, why) in wanted {
        if !t.misc.contains(key) {
            c.emit(RuleId::Noncan02, Severity::Warning, i, format!("{why}: MISC {key} recommended"), None);
        }
    }
    if values.contains(&"Transl") && t.lemma != "_" && !t.form.starts_with(t.lemma.as_str()) {
        c.emit(RuleId::Noncan02, Severity::Warning, i, format!("transliteration lemma `{}` is not a prefix of the form", t.lemma), None);
    }
}

fn sentence_units(c: &mut Ctx, i: usize) {
    if c.tok(i).deprel != SENTENCE_REL {
        return;
    }
    let sub = c.g.subtree(i);
    if sub.last().copied().unwrap_or(i) - sub[0] + 1 != sub.len() {
        c.emit(RuleId::Sent01, Severity::Error, i, "sentential unit is not contiguous".into(), None);
    }
    let mut h = c.g.head(i);
    while h != 0 && h != c.g.root() && c.tok(h).deprel == SENTENCE_REL {
        h = c.g.head(h);
    }
    if h != c.g.root() {
        c.emit(RuleId::Sent01, Severity::Error, i, "parataxis:sentence must hang off the root or another unit".into(), None);
    }
}

fn disfluencies(c: &mut Ctx, i: usize) {
    let t = c.tok(i).clone();
    if t.deprel_base() == "reparandum" && c.g.head(i) < i {
        c.emit(RuleId::Disf01, Severity::Error, i, "reparandum must precede its repair".into(), None);
    }
    if c.g.head(i) != 0 && c.cfg.hesitations.iter().any(|h| *h == t.form) {
        if t.deprel_base() != "discourse" {
            c.emit(RuleId::Disf02, Severity::Error, i, format!("hesitation marker should be discourse, not {}", t.deprel), None);
        }
        if !c.attached_to_root(i) {
            c.emit(RuleId::Disf02, Severity::Error, i, "hesitation marker should attach to the root".into(), None);
        }
    }
}

fn orphans(c: &mut Ctx, i: usize) {
    if c.tok(i).deprel_base() != "orphan" {
        return;
    }
    let h = c.g.head(i);
    let head = c.tok(h);
    let clause = matches!(head.deprel_base(), "conj" | "parataxis" | "root");
    if !clause || head.upos == "VERB" || head.upos == "AUX" {
        c.emit(RuleId::Orph01, Severity::Warning, i, "orphan should depend on the promoted dependent of an elided predicate".into(), None);
    }
}

fn vocabulary(s: &Sentence, cfg: &LintConfig, out: &mut Vec<Diagnostic>) {
    for t in s.tokens.iter().filter(|t| t.id.is_word()) {
        let mut emit = |message: String| {
            if let Some(severity) = cfg.level(RuleId::Vocab01, Severity::Error) {
                out.push(Diagnostic {
                    rule: RuleId::Vocab01,
                    severity,
                    sent_id: s.sent_id().map(String::from),
                    token: Some(t.id),
                    message,
                    fix: None,
                });
            }
        };
        if t.upos != "_" && !cfg.vocabulary.is_upos(&t.upos) {
            emit(format!("unknown UPOS `{}`", t.upos));
        }
        if t.deprel != "_" && !cfg.vocabulary.accepts_deprel(&t.deprel) {
            emit(format!("relation `{}` not allowed in strict mode", t.deprel));
        }
    }
}

fn token_key(d: &Diagnostic) -> (usize, usize) {
    match d.token {
        None => (0, 0),
        Some(TokenId::Word(i)) => (i, 0),
        Some(TokenId::Range(a, _)) => (a, 0),
        Some(TokenId::Empty(a, b)) => (a, b),
    }
}

/// Runs every enabled rule. Tree errors are reported and stop the
/// phenomenon rules.
pub fn validate(s: &Sentence, cfg: &LintConfig) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    vocabulary(s, cfg, &mut out);
    let g = match build_graph(s) {
        Ok(g) => g,
        Err(errors) => {
            if let Some(severity) = cfg.level(RuleId::Tree01, Severity::Error) {
                for e in errors {
                    out.push(Diagnostic {
                        rule: RuleId::Tree01,
                        severity,
                        sent_id: s.sent_id().map(String::from),
                        token: e.tokens.first().map(|&i| TokenId::Word(i)),
                        message: e.to_string(),
                        fix: None,
                    });
                }
            }
            out.sort_by(|a, b| token_key(a).cmp(&token_key(b)).then(a.rule.cmp(&b.rule)));
            return out;
        }
    };
    let classes = (1..=g.len())
        .map(|i| classify_token_with(&g.token(i).form, &cfg.classify))
        .collect();
    let mut c = Ctx {
        s,
        g: &g,
        cfg,
        classes,
        out,
    };
    for i in 1..=g.len() {
        match c.classes[i - 1] {
            TokenClass::Hashtag => hashtags(&mut c, i),
            TokenClass::Mention => mentions(&mut c, i),
            TokenClass::Url => urls(&mut c, i),
            TokenClass::Emoticon => emoticons(&mut c, i),
            TokenClass::Rt => retweets(&mut c, i),
            TokenClass::Markup => markup(&mut c, i),
            TokenClass::Plain => punctuation(&mut c, i),
        }
        code_switching(&mut c, i);
        noncanonical(&mut c, i);
        sentence_units(&mut c, i);
        disfluencies(&mut c, i);
        orphans(&mut c, i);
    }
    goeswith(&mut c);
    let mut out = c.out;
    out.sort_by(|a, b| token_key(a).cmp(&token_key(b)).then(a.rule.cmp(&b.rule)));
    out
}
