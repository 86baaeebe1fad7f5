use std::collections::{BTreeMap, BTreeSet};

use super::config::LintConfig;
use super::rule::{Diagnostic, Fix, RuleId};
use crate::conllu_model::{Misc, Sentence, Token, TokenId};

/// Two fixes that disagree on one field of one word. Neither is applied, nor is
/// any other fix on that word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixConflict {
    pub word: usize,
    pub field: String,
    pub fixes: Vec<Fix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AppliedFix {
    pub rule: RuleId,
    pub fix: Fix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixOutcome {
    pub sentence: Sentence,
    pub applied: Vec<AppliedFix>,
    pub conflicts: Vec<FixConflict>,
}

fn field(f: &Fix) -> String {
    match f {
        Fix::SetUpos { .. } => "UPOS".into(),
        Fix::SetLemma { .. } => "LEMMA".into(),
        Fix::ClearFeats { .. } => "FEATS".into(),
        Fix::SetDeprel { .. } => "DEPREL".into(),
        Fix::SetMisc { key, .. } => format!("MISC:{key}"),
        Fix::SplitEmoticon { .. } => "FORM".into(),
    }
}

/// Applies the fixes attached to `diagnostics` (disabled rules contribute none).
pub fn fix(sentence: &Sentence, diagnostics: &[Diagnostic], config: &LintConfig) -> FixOutcome {
    // (word, field) -> distinct fixes, each with the first rule proposing it
    let mut by_key: BTreeMap<(usize, String), Vec<(RuleId, Fix)>> = BTreeMap::new();
    for d in diagnostics {
        let Some(f) = &d.fix else { continue };
        if !config.enabled(d.rule) {
            continue;
        }
        let slot = by_key.entry((f.word(), field(f))).or_default();
        if !slot.iter().any(|(_, g)| g == f) {
            slot.push((d.rule, f.clone()));
        }
    }

    let mut conflicts = Vec::new();
    let mut blocked = BTreeSet::new();
    let mut splits = BTreeSet::new();
    let mut others = BTreeSet::new();
    for ((w, fld), fixes) in &by_key {
        if fixes.len() > 1 {
            blocked.insert(*w);
            conflicts.push(FixConflict {
                word: *w,
                field: fld.clone(),
                fixes: fixes.iter().map(|(_, f)| f.clone()).collect(),
            });
        }
        if fld == "FORM" {
            splits.insert(*w);
        } else {
            others.insert(*w);
        }
    }
    // a split rewrites the whole token, so it cannot share it with field edits
    for &w in splits.intersection(&others) {
        if blocked.insert(w) {
            conflicts.push(FixConflict {
                word: w,
                field: "FORM".into(),
                fixes: by_key
                    .range((w, String::new())..(w + 1, String::new()))
                    .flat_map(|(_, v)| v.iter().map(|(_, f)| f.clone()))
                    .collect(),
            });
        }
    }

    let mut s = sentence.clone();
    let mut applied = Vec::new();
    let mut pending_splits = Vec::new();
    for ((w, _), fixes) in by_key {
        if blocked.contains(&w) {
            continue;
        }
        let (rule, f) = fixes.into_iter().next().expect("non-empty slot");
        if let Fix::SplitEmoticon { .. } = f {
            pending_splits.push((rule, f));
            continue;
        }
        let Some(t) = s.word_mut(w) else { continue };
        match &f {
            Fix::SetUpos { value, .. } => t.upos = value.clone(),
            Fix::SetLemma { value, .. } => t.lemma = value.clone(),
            Fix::ClearFeats { .. } => t.feats.clear(),
            Fix::SetDeprel { value, .. } => t.deprel = value.clone(),
            Fix::SetMisc { key, value, .. } => t.misc.set(key, value),
            Fix::SplitEmoticon { .. } => unreachable!(),
        }
        applied.push(AppliedFix { rule, fix: f });
    }
    // right to left so earlier indices stay valid
    pending_splits.sort_by_key(|(_, f)| std::cmp::Reverse(f.word()));
    for (rule, f) in pending_splits {
        if let Fix::SplitEmoticon { word, parts } = &f {
            split_token(&mut s, *word, parts);
        }
        applied.push(AppliedFix { rule, fix: f });
    }
    applied.sort_by(|a, b| a.fix.word().cmp(&b.fix.word()).then(a.rule.cmp(&b.rule)));
    FixOutcome {
        sentence: s,
        applied,
        conflicts,
    }
}

/// Replaces word `w` by one SYM token per part. Text metadata is left alone:
/// the surface string does not change.
fn split_token(s: &mut Sentence, w: usize, parts: &[String]) {
    let extra = parts.len() - 1;
    let shift = |i: usize| if i > w { i + extra } else { i };
    let Some(pos) = s.tokens.iter().position(|t| t.id == TokenId::Word(w)) else {
        return;
    };
    let orig = s.tokens[pos].clone();
    let was_root = orig.head == Some(0);
    for t in &mut s.tokens {
        t.id = match t.id {
            TokenId::Word(i) => TokenId::Word(shift(i)),
            TokenId::Range(a, b) => TokenId::Range(shift(a), shift(b)),
            TokenId::Empty(a, b) if a >= w => TokenId::Empty(a + extra, b),
            other => other,
        };
        t.head = t.head.map(shift);
    }
    let mut new = Vec::with_capacity(parts.len());
    for (k, p) in parts.iter().enumerate() {
        let mut t = Token::word(w + k, p);
        t.lemma = p.clone();
        t.upos = "SYM".into();
        if k == 0 || !was_root {
            t.head = orig.head;
            t.deprel = orig.deprel.clone();
        } else {
            t.head = Some(w);
            t.deprel = "discourse".into();
        }
        t.misc = if k == extra {
            orig.misc.clone()
        } else {
            let mut m = Misc::new();
            m.set("SpaceAfter", "No");
            m
        };
        new.push(t);
    }
    s.tokens.splice(pos..=pos, new);
}
