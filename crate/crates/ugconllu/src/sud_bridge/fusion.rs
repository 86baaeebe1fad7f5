use thiserror::Error;

use crate::conllu_model::{Misc, Sentence, Token, TokenId};
use crate::tree_algebra::build_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Framework {
    Ud,
    Sud,
}

/// How the words of a fused token relate in the uncontracted tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FusionCase {
    /// (i) one member governs the other.
    Gov,
    /// (iia) the members are co-dependents of one outside head.
    SharedDependents,
    /// (iib) one member governs a third word that governs the other.
    HeadAndGrandchild,
    /// (iii) none of the above.
    Unrelated,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("span {0:?} is not a run of at least two adjacent words")]
    NonAdjacentSpan(Vec<usize>),
    #[error("no primary member for co-dependent words {0:?}")]
    UnresolvedPrimary(Vec<usize>),
    #[error("words {0:?} are not syntactically related")]
    Unrelated(Vec<usize>),
    #[error("span {0:?} overlaps a multiword token or empty node")]
    OverlapsMultiword(Vec<usize>),
    #[error("sentence is not a tree")]
    NotATree,
}

fn head_of(s: &Sentence, i: usize) -> Option<usize> {
    s.word(i).and_then(|t| t.head)
}

/// Classifies a fused span from the heads of the uncontracted tree alone, so
/// the same rules hold in both frameworks.
pub fn classify_fusion(s: &Sentence, span: &[usize], _framework: Framework) -> FusionCase {
    let inside = |h: Option<usize>| h.is_some_and(|h| span.contains(&h));
    let external: Vec<usize> = span.iter().copied().filter(|&m| !inside(head_of(s, m))).collect();
    if span.len() >= 2 && external.len() == 1 {
        return FusionCase::Gov;
    }
    let first = head_of(s, span[0]);
    if span.len() >= 2 && first.is_some() && span.iter().all(|&m| head_of(s, m) == first) {
        return FusionCase::SharedDependents;
    }
    if let [a, b] = *span {
        let grand = |x: usize| head_of(s, x).filter(|&h| h != 0).and_then(|h| head_of(s, h));
        if grand(b) == Some(a) || grand(a) == Some(b) {
            return FusionCase::HeadAndGrandchild;
        }
    }
    FusionCase::Unrelated
}

/// Member whose relations the fused token keeps.
fn survivor(s: &Sentence, span: &[usize], case: FusionCase, primary: Option<usize>) -> Result<usize, FusionError> {
    let upos = |m: usize| s.word(m).map(|t| t.upos.as_str()).unwrap_or("");
    match case {
        FusionCase::Gov => Ok(*span
            .iter()
            .find(|&&m| !head_of(s, m).is_some_and(|h| span.contains(&h)))
            .expect("governor exists")),
        FusionCase::HeadAndGrandchild => {
            let (a, b) = (span[0], span[1]);
            let grand_of_b = head_of(s, b).and_then(|h| head_of(s, h));
            Ok(if grand_of_b == Some(a) { a } else { b })
        }
        FusionCase::SharedDependents => primary
            .filter(|p| span.contains(p))
            .or_else(|| span.iter().copied().find(|&m| upos(m) == "PRON"))
            .or_else(|| span.iter().copied().find(|&m| upos(m) == "ADP"))
            .ok_or_else(|| FusionError::UnresolvedPrimary(span.to_vec())),
        FusionCase::Unrelated => Err(FusionError::Unrelated(span.to_vec())),
    }
}

/// Replaces the adjacent words of `span` by a single token `form`.
///
/// The fused token keeps one member's annotation and relations; dropped
/// incoming relations are recorded as `DroppedRel=<rel>:<form>` in MISC,
/// next to `NonCan=Cont` and the space-joined `CorrectForm`. `primary`
/// picks the surviving member of co-dependent words; by default the pronoun,
/// else the adposition.
pub fn contract_span(
    s: &Sentence,
    span: &[usize],
    form: &str,
    primary: Option<usize>,
) -> Result<Sentence, FusionError> {
    let n = s.word_count();
    let adjacent = span.len() >= 2 && span.windows(2).all(|w| w[1] == w[0] + 1);
    if !adjacent || span[0] == 0 || *span.last().unwrap() > n {
        return Err(FusionError::NonAdjacentSpan(span.to_vec()));
    }
    build_graph(s).map_err(|_| FusionError::NotATree)?;
    let (start, end) = (span[0], *span.last().unwrap());
    let overlaps = s.tokens.iter().any(|t| match t.id {
        TokenId::Range(a, b) => a <= end && start <= b,
        TokenId::Empty(a, _) => start <= a && a < end,
        TokenId::Word(_) => false,
    });
    if overlaps {
        return Err(FusionError::OverlapsMultiword(span.to_vec()));
    }
    let case = classify_fusion(s, span, Framework::Ud);
    let keep = survivor(s, span, case, primary)?;

    let extra = span.len() - 1;
    let renum = |i: usize| {
        if span.contains(&i) {
            start
        } else if i > end {
            i - extra
        } else {
            i
        }
    };
    let member = |m: usize| s.word(m).expect("member exists");
    let kept = member(keep);
    let forms: Vec<&str> = span.iter().map(|&m| member(m).form.as_str()).collect();
    let dropped: Vec<String> = span
        .iter()
        .filter(|&&m| m != keep)
        .map(|&m| format!("{}:{}", member(m).deprel, member(m).form))
        .collect();
    let mut misc = Misc::new();
    misc.set("NonCan", "Cont");
    misc.set("CorrectForm", &forms.join(" "));
    misc.set("DroppedRel", &dropped.join(","));
    if !member(end).space_after() {
        misc.set("SpaceAfter", "No");
    }
    let fused = Token {
        id: TokenId::Word(start),
        form: form.to_string(),
        lemma: kept.lemma.clone(),
        upos: kept.upos.clone(),
        xpos: kept.xpos.clone(),
        feats: kept.feats.clone(),
        head: kept.head.map(renum),
        deprel: kept.deprel.clone(),
        deps: kept.deps.clone(),
        misc,
    };

    let mut out = s.clone();
    out.tokens.clear();
    for t in &s.tokens {
        match t.id {
            TokenId::Word(i) if i == start => out.tokens.push(fused.clone()),
            TokenId::Word(i) if span.contains(&i) => {}
            _ => {
                let mut t = t.clone();
                t.id = match t.id {
                    TokenId::Word(i) => TokenId::Word(renum(i)),
                    TokenId::Range(a, b) => TokenId::Range(renum(a), renum(b)),
                    TokenId::Empty(a, b) => TokenId::Empty(if a >= end { a - extra } else { a }, b),
                };
                t.head = t.head.map(renum);
                out.tokens.push(t);
            }
        }
    }
    out.refresh_text();
    Ok(out)
}
